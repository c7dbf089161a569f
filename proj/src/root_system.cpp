#include "braidlab/root_system.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace braidlab {

namespace {

std::vector<int> to_key(const RootVec& v) {
  return std::vector<int>(v.data(), v.data() + v.size());
}

Eigen::MatrixXi cartan_matrix(CartanType type, int rank) {
  auto bad = [&](const std::string& why) {
    throw config_error("unsupported root system " + std::string(1, char(type)) +
                       std::to_string(rank) + ": " + why);
  };
  Eigen::MatrixXi c = Eigen::MatrixXi::Zero(rank, rank);
  auto chain = [&](int i, int j) { c(i, j) = c(j, i) = -1; };
  for (int i = 0; i < rank; ++i) c(i, i) = 2;
  switch (type) {
    case CartanType::A:
      if (rank < 1 || rank > 6) bad("rank must be 1..6");
      for (int i = 0; i + 1 < rank; ++i) chain(i, i + 1);
      break;
    case CartanType::B:
      if (rank < 2 || rank > 4) bad("rank must be 2..4");
      for (int i = 0; i + 1 < rank; ++i) chain(i, i + 1);
      // last simple root short: <alpha_{r-2}, alpha_{r-1}^vee> = -2
      c(rank - 1, rank - 2) = -2;
      break;
    case CartanType::C:
      if (rank < 2 || rank > 4) bad("rank must be 2..4");
      for (int i = 0; i + 1 < rank; ++i) chain(i, i + 1);
      c(rank - 2, rank - 1) = -2;
      break;
    case CartanType::D:
      if (rank != 4) bad("rank must be 4");
      // node 1 is the branch point; 0, 2, 3 are the outer nodes
      chain(0, 1);
      chain(1, 2);
      chain(1, 3);
      break;
    case CartanType::G:
      if (rank != 2) bad("rank must be 2");
      c(0, 1) = -3;
      c(1, 0) = -1;
      break;
  }
  return c;
}

}  // namespace

CartanType cartan_type_from_char(char c) {
  switch (c) {
    case 'A': return CartanType::A;
    case 'B': return CartanType::B;
    case 'C': return CartanType::C;
    case 'D': return CartanType::D;
    case 'G': return CartanType::G;
    default: throw config_error(std::string("unknown Cartan type '") + c + "'");
  }
}

std::string RootSystem::label() const {
  return std::string(1, char(type_)) + std::to_string(rank_);
}

int RootSystem::height(int idx) const { return roots_[idx].sum(); }

int RootSystem::root_index(const RootVec& v) const {
  auto it = index_.find(to_key(v));
  return it == index_.end() ? -1 : it->second;
}

RootVec RootSystem::reflect(int s, const RootVec& beta) const {
  int idx = root_index(beta);
  if (idx < 0) throw domain_error("reflect: vector is not a root");
  return roots_[reflect_table_[s][idx]];
}

RootSystem RootSystem::build(CartanType type, int rank) {
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.cartan_ = cartan_matrix(type, rank);

  auto reflect_vec = [&](int s, const RootVec& v) {
    int coef = 0;
    for (int j = 0; j < rank; ++j) coef += v[j] * rs.cartan_(s, j);
    RootVec r = v;
    r[s] -= coef;
    return r;
  };

  // Saturate the simple-reflection orbits of the simple roots.
  std::set<std::vector<int>> seen;
  std::deque<RootVec> work;
  for (int s = 0; s < rank; ++s) {
    RootVec v = RootVec::Zero(rank);
    v[s] = 1;
    seen.insert(to_key(v));
    work.push_back(v);
  }
  while (!work.empty()) {
    RootVec v = work.front();
    work.pop_front();
    for (int s = 0; s < rank; ++s) {
      RootVec r = reflect_vec(s, v);
      if (seen.insert(to_key(r)).second) work.push_back(r);
    }
  }

  std::vector<RootVec> pos;
  for (const auto& key : seen) {
    if (std::all_of(key.begin(), key.end(), [](int c) { return c >= 0; })) {
      pos.emplace_back(Eigen::Map<const RootVec>(key.data(), rank));
    }
  }
  std::sort(pos.begin(), pos.end(), [](const RootVec& a, const RootVec& b) {
    if (a.sum() != b.sum()) return a.sum() < b.sum();
    return std::lexicographical_compare(a.data(), a.data() + a.size(),
                                        b.data(), b.data() + b.size());
  });
  rs.num_pos_ = int(pos.size());
  if (2 * rs.num_pos_ != int(seen.size()))
    throw domain_error("root system saturation produced unpaired roots");

  rs.roots_ = pos;
  for (const auto& v : pos) rs.roots_.push_back(-v);
  for (int i = 0; i < int(rs.roots_.size()); ++i)
    rs.index_[to_key(rs.roots_[i])] = i;

  rs.simple_idx_.resize(rank);
  for (int s = 0; s < rank; ++s) {
    RootVec v = RootVec::Zero(rank);
    v[s] = 1;
    rs.simple_idx_[s] = rs.root_index(v);
  }

  rs.reflect_table_.assign(rank, std::vector<int>(rs.roots_.size()));
  for (int s = 0; s < rank; ++s) {
    for (int i = 0; i < int(rs.roots_.size()); ++i) {
      int j = rs.root_index(reflect_vec(s, rs.roots_[i]));
      if (j < 0) throw domain_error("root set not closed under simple reflections");
      rs.reflect_table_[s][i] = j;
    }
  }
  return rs;
}

}  // namespace braidlab
