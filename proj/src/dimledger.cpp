#include "braidlab/dimledger.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "braidlab/errors.hpp"
#include "braidlab/typea.hpp"

namespace braidlab {

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  Partition cur;
  // Decreasing parts, largest first; output ends up in reverse
  // lexicographic order.
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Partition conjugate_partition(const Partition& lam) {
  Partition mu;
  if (lam.empty()) return mu;
  mu.resize(lam.front());
  for (int part : lam)
    for (int i = 0; i < part; ++i) ++mu[i];
  return mu;
}

std::string partition_string(const Partition& lam) {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < lam.size(); ++i) {
    if (i) os << ',';
    os << lam[i];
  }
  os << ']';
  return os.str();
}

int unipotent_class_dim(int n, const Partition& lam) {
  int total = 0;
  for (int part : lam) total += part;
  if (total != n) throw domain_error("unipotent_class_dim: partition does not sum to n");
  int s = 0;
  for (int m : conjugate_partition(lam)) s += m * m;
  return n * n - s;
}

DimLedger::DimLedger(int n, int d_max) : n_(n) {
  if (n < 2 || n > 6) throw config_error("DimLedger: n out of range [2,6]");
  W_ = std::make_unique<WeylGroup>(RootSystem::build(CartanType::A, n - 1));
  const Twist id = identity_twist(W_->roots());
  auto classes = twisted_conjugacy_classes(*W_, id);
  for (const auto& cls : classes) {
    int bound = d_max;
    if (bound <= 0) bound = default_d_max(*W_, id, cls.representative());
    auto cert = canonical_good_rep(*W_, cls, bound);
    if (!cert) throw domain_error("DimLedger: class without good representative");

    DimensionRecord rec;
    rec.class_id = cls.id;
    rec.w = cert->w;
    rec.length = cert->length;
    auto one_line = one_line_of(*W_, cert->w);
    rec.lambda = cycle_type(one_line);
    rec.torus_dim = int(rec.lambda.size());
    rec.num_fixed_roots = int(fixed_root_data(*W_, id, cert->w).fixed_roots.size());
    rec.orbit_dim = unipotent_class_dim(n, rec.lambda);
    rec.identity_holds =
        rec.orbit_dim + rec.length + rec.num_fixed_roots == n * n - rec.torus_dim;
    records_.push_back(std::move(rec));
  }
}

bool DimLedger::all_identities_hold() const {
  return std::all_of(records_.begin(), records_.end(),
                     [](const DimensionRecord& r) { return r.identity_holds; });
}

bool DimLedger::pairing_unique() const {
  std::map<Partition, int> seen;
  for (const auto& r : records_) ++seen[r.lambda];
  if (seen.size() != records_.size()) return false;
  for (const auto& lam : partitions_of(n_))
    if (!seen.count(lam)) return false;
  return true;
}

std::string DimLedger::to_csv() const {
  std::ostringstream os;
  os << "class_id,lambda,rep_word,length,fixed_roots,torus_dim,orbit_dim,identity\n";
  for (const auto& r : records_) {
    os << r.class_id << ',' << partition_string(r.lambda) << ','
       << (r.length ? W_->word_string(r.w) : std::string("e")) << ',' << r.length << ','
       << r.num_fixed_roots << ',' << r.torus_dim << ',' << r.orbit_dim << ','
       << (r.identity_holds ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace braidlab
