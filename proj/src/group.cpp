#include "braidlab/group.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace braidlab {

long long gl_order(int n, long long q) {
  long long qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  long long ord = 1, qi = 1;
  for (int i = 0; i < n; ++i) {
    ord *= qn - qi;
    qi *= q;
  }
  return ord;
}

namespace {

std::string cache_path(int n, int p, int k) {
  const char* dir = std::getenv("BRAIDLAB_CACHE_DIR");
  if (!dir || !*dir) return {};
  return std::string(dir) + "/gl_" + std::to_string(n) + "_" + std::to_string(p) + "_" +
         std::to_string(k) + ".v1.bin";
}

bool load_keys(const std::string& path, size_t expect, std::vector<uint64_t>& keys) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) return false;
  keys.resize(expect);
  size_t got = std::fread(keys.data(), sizeof(uint64_t), expect, f);
  bool extra = std::fgetc(f) != EOF;
  std::fclose(f);
  return got == expect && !extra;
}

void store_keys(const std::string& path, const std::vector<uint64_t>& keys) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) return;
  std::fwrite(keys.data(), sizeof(uint64_t), keys.size(), f);
  std::fclose(f);
}

}  // namespace

GlGroup::GlGroup(int n, int p, int k) : F_(&Gf::get(p, k)), n_(n) {
  if (n < 1 || n > 4) throw config_error("GlGroup: n out of range [1,4]");
  const int q = F_->q();
  long long vecs = 1;
  for (int i = 0; i < n; ++i) vecs *= q;
  const long long order = gl_order(n, q);
  if (order > 200000) throw resource_error("GlGroup: group too large");

  std::vector<uint64_t> keys;
  const std::string path = cache_path(n, p, k);
  if (path.empty() || !load_keys(path, size_t(order), keys)) {
    keys.clear();
    keys.reserve(size_t(order));
    // Row-by-row enumeration: each new row must avoid the span of the
    // previous rows.  Vectors are encoded base q, digit j = entry j.
    std::vector<uint8_t> in_span(size_t(vecs), 0);
    in_span[0] = 1;
    Mat m = mat_zero(n);
    std::vector<std::vector<int>> span_stack;
    span_stack.push_back({0});

    auto add_vec = [&](const std::vector<int>& row) {
      long long code = 0;
      for (int j = n - 1; j >= 0; --j) code = code * q + row[j];
      return code;
    };
    auto decode_vec = [&](long long code) {
      std::vector<int> row(n);
      for (int j = 0; j < n; ++j) {
        row[j] = int(code % q);
        code /= q;
      }
      return row;
    };

    auto rec = [&](auto&& self, int r) -> void {
      if (r == n) {
        keys.push_back(m.key());
        return;
      }
      for (long long code = 1; code < vecs; ++code) {
        if (in_span[size_t(code)]) continue;
        auto row = decode_vec(code);
        for (int j = 0; j < n; ++j) m(r, j) = uint8_t(row[j]);
        // Extend the span: old + c * row for c != 0.
        const auto& old_span = span_stack.back();
        std::vector<int> added;
        for (int c = 1; c < q; ++c) {
          std::vector<int> scaled(n);
          for (int j = 0; j < n; ++j) scaled[j] = F_->mul(c, row[j]);
          for (int s : old_span) {
            auto sv = decode_vec(s);
            std::vector<int> t(n);
            for (int j = 0; j < n; ++j) t[j] = F_->add(sv[j], scaled[j]);
            long long tc = add_vec(t);
            in_span[size_t(tc)] = 1;
            added.push_back(int(tc));
          }
        }
        std::vector<int> new_span = old_span;
        new_span.insert(new_span.end(), added.begin(), added.end());
        span_stack.push_back(std::move(new_span));
        self(self, r + 1);
        span_stack.pop_back();
        for (int tc : added) in_span[size_t(tc)] = 0;
        // Entries removed above may still lie in the shorter span only
        // if duplicated; spans are subgroups so added codes are new.
      }
    };
    rec(rec, 0);
    std::sort(keys.begin(), keys.end());
    if ((long long)keys.size() != order) throw domain_error("GlGroup: enumeration mismatch");
    if (!path.empty()) store_keys(path, keys);
  }

  elems_.reserve(keys.size());
  index_.reserve(keys.size() * 2);
  for (uint64_t key : keys) {
    index_.emplace(key, int(elems_.size()));
    elems_.push_back(mat_from_key(n, key));
  }
  inv_.resize(elems_.size());
  for (size_t i = 0; i < elems_.size(); ++i) {
    int j = index_of(mat_inverse(*F_, elems_[i]));
    if (j < 0) throw domain_error("GlGroup: inverse not in table");
    inv_[i] = j;
  }
}

int GlGroup::index_of(const Mat& m) const {
  auto it = index_.find(m.key());
  return it == index_.end() ? -1 : it->second;
}

const GlGroup& GlGroup::get(int n, int p, int k) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<GlGroup>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, p, k}];
  if (!slot) slot.reset(new GlGroup(n, p, k));
  return *slot;
}

}  // namespace braidlab
