#pragma once

#include <cstdint>
#include <vector>

#include "braidlab/gf.hpp"
#include "braidlab/goodrep.hpp"
#include "braidlab/mat.hpp"
#include "braidlab/weyl.hpp"

namespace braidlab {

// Row/column pair (i, j) of the type-A root e_i - e_j.
std::pair<int, int> root_to_pair(const RootSystem& rs, int root_idx);

// Product of the root subgroups {I + t E_{ij}} over the given roots in
// the given order, one parameter each; deduplicated and key-sorted.
std::vector<Mat> root_subgroup_set(const Gf& F, int n, const RootSystem& rs,
                                   const std::vector<int>& roots);

std::vector<Mat> product_set(const Gf& F, const std::vector<Mat>& a, const std::vector<Mat>& b);

/// Rational point sets over a fixed field attached to a good-rep
/// certificate (w, I) of W(A_{n-1}), plus the permutation-matrix
/// representatives used to build them.
struct CertSets {
  int n = 0;
  int w = 0;
  int w_prime = 0;  // longest element of W_I
  uint32_t I_mask = 0;
  int l_w = 0;
  int num_fixed = 0;  // |R^w|
  Mat wdot, wpdot;

  std::vector<Mat> T_w;        // diagonal, constant on cycles of w
  std::vector<Mat> U_full;     // all of U
  std::vector<Mat> U_w;        // roots Inv(w^{-1})
  std::vector<Mat> U_I;        // unipotent radical of P_I
  std::vector<Mat> wU_I;       // ^wU_I = U_I cap wdot U_I wdot^{-1}
  std::vector<Mat> winvU_I;    // ^{w^{-1}}U_I
  std::vector<Mat> L_I;        // block-diagonal Levi
  std::vector<Mat> L_I_w;      // centralizer of wdot in L_I
  std::vector<Mat> U_Rw_minus; // root subgroups of negative fixed roots
  std::vector<Mat> U_b;        // U^{w'} T^w wpdot U^{w'w} wpdot^{-1}
  std::vector<Mat> UIwUI;      // U_I wdot U_I
};

CertSets build_cert_sets(const WeylGroup& W, const Gf& F, int w, uint32_t I_mask);
CertSets build_cert_sets(const WeylGroup& W, const Gf& F, const GoodRepCertificate& cert);

bool set_contains(const std::vector<Mat>& sorted_set, const Mat& m);

}  // namespace braidlab
