#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "braidlab/group.hpp"
#include "braidlab/weyl.hpp"

namespace braidlab {

// Unique w with x in B wdot B (B upper triangular), as the one-line
// permutation sending column j to its pivot row.  Throws on singular x.
std::vector<uint8_t> bruhat_one_line(const Gf& F, Mat x);

/// Partial flags of type I in F^n for GL_n = G: chains of subspaces
/// with dimension jumps at {i+1 : s_i not in I}, each subspace keyed by
/// the reduced row echelon basis of its spanning vectors.  Flags are
/// enumerated as G-translates of the standard flag (first-d-coordinates
/// chain) and indexed densely.
class FlagVariety {
 public:
  FlagVariety(const GlGroup& G, uint32_t I_mask);

  const GlGroup& group() const { return *G_; }
  uint32_t type_mask() const { return I_mask_; }
  int size() const { return int(transporter_.size()); }
  int standard() const { return flag_of_elem_[id_index_]; }

  // Index of the flag g . (standard flag).
  int flag_of_elem_index(int g_idx) const { return flag_of_elem_[g_idx]; }
  int flag_of(const Mat& g) const;

  // Some x with flag x.(standard) = f.
  const Mat& transporter(int f) const { return transporter_[f]; }
  const Mat& transporter_inv(int f) const { return transporter_inv_[f]; }

  // Flag g . f.
  int act(int g_idx, int f) const;

  // Elements of G stabilizing the standard flag (= P_I(F)).
  const std::vector<int>& parabolic_elems() const { return parabolic_; }

  std::string chain_key(const Mat& g) const;

 private:
  const GlGroup* G_;
  uint32_t I_mask_;
  std::vector<int> dims_;
  int id_index_ = 0;
  std::vector<int> flag_of_elem_;      // |G| -> flag index
  std::vector<Mat> transporter_, transporter_inv_;
  std::vector<int> parabolic_;
};

/// Relative position of two flags of types I, J: the minimal double
/// coset representative of the Bruhat position of x^{-1} y for
/// transporters x, y.
int relative_position(const WeylGroup& W, const Gf& F, const FlagVariety& A, int fP,
                      const FlagVariety& B, int fQ);

/// Cached table of relative positions of flag pairs of one variety.
class RelPosTable {
 public:
  RelPosTable(const WeylGroup& W, const FlagVariety& V);
  int at(int f1, int f2) const { return tab_[size_t(f1) * nf_ + f2]; }

 private:
  size_t nf_;
  std::vector<int> tab_;
};

}  // namespace braidlab
