#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "braidlab/gf.hpp"

namespace braidlab {

/// Dense n x n matrix over a Gf with n <= 4 and q <= 16, packable into
/// a 64-bit key (4 bits per entry, row major).
struct Mat {
  int n = 0;
  std::array<uint8_t, 16> e{};

  uint8_t operator()(int i, int j) const { return e[i * n + j]; }
  uint8_t& operator()(int i, int j) { return e[i * n + j]; }

  uint64_t key() const;
  bool operator==(const Mat& o) const { return n == o.n && e == o.e; }
  bool operator<(const Mat& o) const { return key() < o.key(); }

  std::string to_string() const;
};

Mat mat_zero(int n);
Mat mat_identity(int n);
Mat mat_from_key(int n, uint64_t key);
// Permutation matrix with column j carrying a 1 in row p[j] (i.e. the
// matrix sending basis vector e_j to e_{p[j]}).
Mat permutation_matrix(int n, const std::vector<uint8_t>& p);
Mat scalar_matrix(int n, int c);

Mat mat_mul(const Gf& F, const Mat& a, const Mat& b);
Mat mat_add(const Gf& F, const Mat& a, const Mat& b);
Mat mat_sub(const Gf& F, const Mat& a, const Mat& b);
int mat_rank(const Gf& F, Mat a);
bool mat_invertible(const Gf& F, const Mat& a);
Mat mat_inverse(const Gf& F, Mat a);  // throws domain_error if singular

// Entrywise a -> a^(p^j).
Mat mat_frobenius(const Gf& F, const Mat& a, int j);
bool mat_in_subfield(const Gf& F, const Mat& a, int j);

// Jordan type of a unipotent matrix: partition of n from the ranks of
// (u - 1)^i.  Throws domain_error if u is not unipotent.
std::vector<int> jordan_type(const Gf& F, const Mat& u);
bool is_unipotent(const Gf& F, const Mat& u);

// I + t E_{ij}, i != j.
Mat root_element(const Gf& F, int n, int i, int j, int t);

}  // namespace braidlab
