#pragma once

#include <Eigen/Core>
#include <map>
#include <string>
#include <vector>

#include "braidlab/errors.hpp"

namespace braidlab {

using RootVec = Eigen::VectorXi;

enum class CartanType : char { A = 'A', B = 'B', C = 'C', D = 'D', G = 'G' };

CartanType cartan_type_from_char(char c);

/// Finite crystallographic root system in simple-root coordinates.
///
/// Roots are stored as integer vectors in the basis of simple roots.
/// Positive roots come first, sorted by (height, lexicographic
/// coordinates); root i + num_positive() is the negative of root i.
class RootSystem {
 public:
  static RootSystem build(CartanType type, int rank);

  CartanType type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const;

  // cartan(i, j) = pairing of alpha_j with the coroot of alpha_i.
  const Eigen::MatrixXi& cartan() const { return cartan_; }

  int num_roots() const { return 2 * num_pos_; }
  int num_positive() const { return num_pos_; }
  const RootVec& root(int idx) const { return roots_[idx]; }
  bool is_positive(int idx) const { return idx < num_pos_; }
  int negate(int idx) const { return idx < num_pos_ ? idx + num_pos_ : idx - num_pos_; }
  int height(int idx) const;

  // Index of alpha_s among the positive roots.
  int simple_root_index(int s) const { return simple_idx_[s]; }

  // Index lookup; returns -1 if v is not a root.
  int root_index(const RootVec& v) const;

  // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i.  Throws domain_error
  // if beta is not a root.
  RootVec reflect(int s, const RootVec& beta) const;
  int reflect_root(int s, int idx) const { return reflect_table_[s][idx]; }

 private:
  RootSystem() = default;

  CartanType type_;
  int rank_ = 0;
  int num_pos_ = 0;
  Eigen::MatrixXi cartan_;
  std::vector<RootVec> roots_;
  std::vector<int> simple_idx_;
  std::vector<std::vector<int>> reflect_table_;
  std::map<std::vector<int>, int> index_;
};

}  // namespace braidlab
