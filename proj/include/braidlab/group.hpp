#pragma once

#include <unordered_map>
#include <vector>

#include "braidlab/mat.hpp"

namespace braidlab {

/// Full element table of GL_n over GF(p^k), elements sorted by packed
/// key.  Tables are memoized per (n, p, k); if the environment variable
/// BRAIDLAB_CACHE_DIR is set, enumerations are also cached on disk.
class GlGroup {
 public:
  static const GlGroup& get(int n, int p, int k);

  const Gf& field() const { return *F_; }
  int n() const { return n_; }
  int size() const { return int(elems_.size()); }

  const Mat& element(int i) const { return elems_[i]; }
  int index_of(const Mat& m) const;  // -1 if not an element
  int mul(int a, int b) const { return index_of(mat_mul(*F_, elems_[a], elems_[b])); }
  int inverse(int i) const { return inv_[i]; }
  const Mat& inverse_mat(int i) const { return elems_[inv_[i]]; }

 private:
  GlGroup(int n, int p, int k);

  const Gf* F_;
  int n_;
  std::vector<Mat> elems_;
  std::vector<int> inv_;
  std::unordered_map<uint64_t, int> index_;
};

// |GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i).
long long gl_order(int n, long long q);

}  // namespace braidlab
