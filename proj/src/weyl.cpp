#include "braidlab/weyl.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

namespace braidlab {

bool Twist::is_identity() const {
  for (int i = 0; i < int(simple_perm.size()); ++i)
    if (simple_perm[i] != i) return false;
  return true;
}

Twist make_twist(const RootSystem& rs, std::vector<int> perm, std::string name) {
  int r = rs.rank();
  if (int(perm.size()) != r) throw config_error("twist: wrong permutation size");
  std::vector<bool> hit(r, false);
  for (int v : perm) {
    if (v < 0 || v >= r || hit[v]) throw config_error("twist: not a permutation");
    hit[v] = true;
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (rs.cartan()(perm[i], perm[j]) != rs.cartan()(i, j))
        throw config_error("twist: does not preserve the Cartan matrix");
  Twist t{std::move(name), std::move(perm), 1};
  std::vector<int> p = t.simple_perm;
  auto is_id = [&] {
    for (int i = 0; i < r; ++i)
      if (p[i] != i) return false;
    return true;
  };
  while (!is_id()) {
    std::vector<int> q(r);
    for (int i = 0; i < r; ++i) q[i] = t.simple_perm[p[i]];
    p = q;
    ++t.order;
  }
  return t;
}

Twist identity_twist(const RootSystem& rs) {
  std::vector<int> p(rs.rank());
  std::iota(p.begin(), p.end(), 0);
  return make_twist(rs, p, "id");
}

Twist flip_twist(const RootSystem& rs) {
  if (rs.type() != CartanType::A || rs.rank() < 2)
    throw config_error("flip twist requires type A, rank >= 2");
  std::vector<int> p(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) p[i] = rs.rank() - 1 - i;
  return make_twist(rs, p, "flip");
}

Twist triality_twist(const RootSystem& rs) {
  if (rs.type() != CartanType::D || rs.rank() != 4)
    throw config_error("triality twist requires D4");
  // outer nodes 0 -> 2 -> 3 -> 0, branch node 1 fixed
  return make_twist(rs, {2, 1, 3, 0}, "rot3");
}

Twist twist_by_name(const RootSystem& rs, const std::string& name) {
  if (name == "id") return identity_twist(rs);
  if (name == "flip") return flip_twist(rs);
  if (name == "rot3") return triality_twist(rs);
  throw config_error("unknown twist '" + name + "'");
}

Twist twist_power(const RootSystem& rs, const Twist& t, int e) {
  int r = rs.rank();
  e = ((e % t.order) + t.order) % t.order;
  std::vector<int> p(r);
  std::iota(p.begin(), p.end(), 0);
  for (int k = 0; k < e; ++k) {
    std::vector<int> q(r);
    for (int i = 0; i < r; ++i) q[i] = t.simple_perm[p[i]];
    p = q;
  }
  return make_twist(rs, p, t.name + "^" + std::to_string(e));
}

Twist inverse_twist(const RootSystem& rs, const Twist& t) {
  return twist_power(rs, t, t.order - 1);
}

WeylGroup::WeylGroup(RootSystem rs) : rs_(std::move(rs)) {
  nroots_ = rs_.num_roots();
  const int r = rs_.rank();

  std::vector<std::vector<uint16_t>> gen(r, std::vector<uint16_t>(nroots_));
  for (int s = 0; s < r; ++s)
    for (int i = 0; i < nroots_; ++i) gen[s][i] = uint16_t(rs_.reflect_root(s, i));

  auto compose = [&](const std::vector<uint16_t>& a, const std::vector<uint16_t>& b) {
    std::vector<uint16_t> c(nroots_);
    for (int i = 0; i < nroots_; ++i) c[i] = a[b[i]];
    return c;
  };
  auto length_of = [&](const std::vector<uint16_t>& p) {
    int l = 0;
    for (int i = 0; i < rs_.num_positive(); ++i)
      if (p[i] >= rs_.num_positive()) ++l;
    return l;
  };

  // enumerate the whole group
  std::vector<uint16_t> id(nroots_);
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<uint16_t>, int> seen;
  std::vector<std::vector<uint16_t>> elems{id};
  seen[id] = 0;
  std::deque<int> work{0};
  while (!work.empty()) {
    int cur = work.front();
    work.pop_front();
    for (int s = 0; s < r; ++s) {
      auto nxt = compose(elems[cur], gen[s]);
      if (seen.emplace(nxt, int(elems.size())).second) {
        elems.push_back(nxt);
        work.push_back(int(elems.size()) - 1);
      }
    }
  }

  // canonical shortlex word by greedy smallest left descent
  auto invert = [&](const std::vector<uint16_t>& p) {
    std::vector<uint16_t> q(nroots_);
    for (int i = 0; i < nroots_; ++i) q[p[i]] = uint16_t(i);
    return q;
  };
  auto word_of = [&](std::vector<uint16_t> p) {
    std::vector<uint8_t> w;
    auto pinv = invert(p);
    while (true) {
      int s = -1;
      for (int t = 0; t < r; ++t) {
        if (pinv[rs_.simple_root_index(t)] >= rs_.num_positive()) { s = t; break; }
      }
      if (s < 0) break;
      w.push_back(uint8_t(s));
      // p := s . p
      for (int i = 0; i < nroots_; ++i) p[i] = gen[s][p[i]];
      pinv = invert(p);
    }
    return w;
  };

  struct Row { std::vector<uint16_t> perm; std::vector<uint8_t> word; int len; };
  std::vector<Row> rows;
  rows.reserve(elems.size());
  for (auto& p : elems) {
    Row row;
    row.len = length_of(p);
    row.word = word_of(p);
    row.perm = std::move(p);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.len != b.len) return a.len < b.len;
    return a.word < b.word;
  });

  const int n = int(rows.size());
  perms_.resize(size_t(n) * nroots_);
  words_.resize(n);
  len_.resize(n);
  for (int i = 0; i < n; ++i) {
    std::copy(rows[i].perm.begin(), rows[i].perm.end(), perms_.begin() + size_t(i) * nroots_);
    words_[i] = std::move(rows[i].word);
    len_[i] = rows[i].len;
    index_[rows[i].perm] = i;
  }

  gen_id_.resize(r);
  for (int s = 0; s < r; ++s) gen_id_[s] = index_.at(gen[s]);

  rmul_.resize(size_t(n) * r);
  inv_.resize(n);
  ldesc_.resize(n);
  rdesc_.resize(n);
  std::vector<uint16_t> tmp(nroots_), pinv(nroots_);
  for (int a = 0; a < n; ++a) {
    const uint16_t* p = &perms_[size_t(a) * nroots_];
    for (int s = 0; s < r; ++s) {
      for (int i = 0; i < nroots_; ++i) tmp[i] = p[gen[s][i]];
      rmul_[size_t(a) * r + s] = index_.at(tmp);
    }
    for (int i = 0; i < nroots_; ++i) pinv[p[i]] = uint16_t(i);
    inv_[a] = index_.at(std::vector<uint16_t>(pinv));
    uint32_t ld = 0, rd = 0;
    for (int s = 0; s < r; ++s) {
      int as = rs_.simple_root_index(s);
      if (pinv[as] >= rs_.num_positive()) ld |= 1u << s;
      if (p[as] >= rs_.num_positive()) rd |= 1u << s;
    }
    ldesc_[a] = ld;
    rdesc_[a] = rd;
  }
}

int WeylGroup::lookup(const std::vector<uint16_t>& perm) const {
  auto it = index_.find(perm);
  if (it == index_.end()) throw domain_error("permutation is not in the group table");
  return it->second;
}

int WeylGroup::multiply(int a, int b) const {
  int c = a;
  for (uint8_t s : words_[b]) c = rmul_[size_t(c) * rank() + s];
  return c;
}

std::string WeylGroup::word_string(int a) const {
  std::string out;
  for (uint8_t s : words_[a]) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(int(s) + 1);
  }
  return out.empty() ? "e" : out;
}

int WeylGroup::from_word(std::span<const uint8_t> letters) const {
  int c = identity();
  for (uint8_t s : letters) {
    if (s >= rank()) throw domain_error("word letter out of range");
    c = rmul_[size_t(c) * rank() + s];
  }
  return c;
}

int WeylGroup::from_word(const std::vector<int>& letters) const {
  std::vector<uint8_t> w(letters.begin(), letters.end());
  return from_word(std::span<const uint8_t>(w));
}

std::vector<int> WeylGroup::inversion_set(int a) const {
  std::vector<int> out;
  int ainv = inv_[a];
  for (int i = 0; i < rs_.num_positive(); ++i)
    if (perm_at(ainv, i) >= rs_.num_positive()) out.push_back(i);
  return out;
}

int WeylGroup::longest_element(uint32_t I_mask) const {
  int w = identity();
  while (true) {
    uint32_t up = uint32_t(I_mask) & ~rdesc_[w];
    if (!up) return w;
    w = rmul_[size_t(w) * rank() + std::countr_zero(up)];
  }
}

bool WeylGroup::in_parabolic(int a, uint32_t I_mask) const {
  for (uint8_t s : words_[a])
    if (!(I_mask & (1u << s))) return false;
  return true;
}

bool WeylGroup::is_min_rep(uint32_t I_mask, int w, uint32_t J_mask) const {
  return (ldesc_[w] & I_mask) == 0 && (rdesc_[w] & J_mask) == 0;
}

int WeylGroup::min_double_coset_rep(uint32_t I_mask, int w, uint32_t J_mask) const {
  while (true) {
    uint32_t ld = ldesc_[w] & I_mask;
    if (ld) {
      w = multiply(generator(std::countr_zero(ld)), w);
      continue;
    }
    uint32_t rd = rdesc_[w] & J_mask;
    if (rd) {
      w = rmul_[size_t(w) * rank() + std::countr_zero(rd)];
      continue;
    }
    return w;
  }
}

int WeylGroup::element_order(int a) const {
  int c = a, n = 1;
  while (c != identity()) {
    c = multiply(c, a);
    ++n;
  }
  return n;
}

std::vector<int> WeylGroup::twist_root_perm(const Twist& t) const {
  std::vector<int> out(nroots_);
  for (int i = 0; i < nroots_; ++i) {
    const RootVec& v = rs_.root(i);
    RootVec img = RootVec::Zero(rs_.rank());
    for (int j = 0; j < rs_.rank(); ++j) img[t.simple_perm[j]] = v[j];
    out[i] = rs_.root_index(img);
    if (out[i] < 0) throw domain_error("twist does not permute the roots");
  }
  return out;
}

int WeylGroup::apply_twist(const Twist& t, int a) const {
  if (t.is_identity()) return a;
  // delta(w) acts as delta . w . delta^{-1} on roots; on words it maps
  // letters through simple_perm, which gives the same element.
  int out = identity();
  for (uint8_t s : words_[a]) out = rmul_[size_t(out) * rank() + t.simple_perm[s]];
  return out;
}

std::vector<TwistedClass> twisted_conjugacy_classes(const WeylGroup& W, const Twist& t) {
  const int n = W.size();
  std::vector<int> cls(n, -1);
  std::vector<TwistedClass> classes;
  for (int seed = 0; seed < n; ++seed) {
    if (cls[seed] >= 0) continue;
    TwistedClass c;
    c.twist = t;
    std::deque<int> work{seed};
    cls[seed] = int(classes.size());
    while (!work.empty()) {
      int m = work.front();
      work.pop_front();
      c.members.push_back(m);
      for (int s = 0; s < W.rank(); ++s) {
        // m -> delta(s) m s
        int img = W.multiply(W.generator(t.simple_perm[s]), W.multiply(m, W.generator(s)));
        if (cls[img] < 0) {
          cls[img] = cls[seed];
          work.push_back(img);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    c.min_length = W.length(c.members.front());
    classes.push_back(std::move(c));
  }

  // ellipticity: no member in W_I for any proper delta-stable I
  uint32_t full = (1u << W.rank()) - 1;
  for (auto& c : classes) {
    c.is_elliptic = true;
    for (uint32_t I = 0; I < full && c.is_elliptic; ++I) {
      uint32_t img = 0;
      for (int s = 0; s < W.rank(); ++s)
        if (I & (1u << s)) img |= 1u << t.simple_perm[s];
      if (img != I) continue;  // not delta-stable
      for (int m : c.members) {
        if (W.in_parabolic(m, I)) {
          c.is_elliptic = false;
          break;
        }
      }
    }
  }

  std::sort(classes.begin(), classes.end(), [&](const TwistedClass& a, const TwistedClass& b) {
    if (a.min_length != b.min_length) return a.min_length < b.min_length;
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return W.word(a.members.front()) < W.word(b.members.front());
  });
  for (int i = 0; i < int(classes.size()); ++i) classes[i].id = i;
  return classes;
}

int twisted_element_order(const WeylGroup& W, const Twist& t, int w) {
  Twist tinv = inverse_twist(W.roots(), t);
  int exp = 0, u = W.identity();
  for (int m = 1;; ++m) {
    // (delta^a u)(delta w) = delta^{a+1} delta^{-1}(u) w
    exp = (exp + 1) % t.order;
    u = W.multiply(W.apply_twist(tinv, u), w);
    if (exp == 0 && u == W.identity()) return m;
  }
}

}  // namespace braidlab
