#pragma once

#include <vector>

#include "braidlab/errors.hpp"

namespace braidlab {

/// GF(p^k) in polynomial basis.  Elements are integers in [0, p^k);
/// the base-p digits of an element are the coefficients of its residue
/// polynomial (digit i = coefficient of x^i).  The modulus is the
/// lexicographically smallest irreducible monic polynomial of degree k,
/// comparing coefficient tuples from the highest degree down.
class Gf {
 public:
  static const Gf& get(int p, int k);  // cached per (p, k)

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return mod_; }  // c0..c_{k-1}

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const;
  int pow(int a, long long e) const;
  int frobenius(int a) const { return frob_[a]; }  // a^p
  // a^(p^j): the relative Frobenius for a subfield of index j.
  int frobenius_iter(int a, int j) const;

  bool in_prime_field(int a) const { return frob_[a] == a; }
  // Fixed field of x -> x^(p^j) (requires j | k).
  bool in_subfield(int a, int j) const { return frobenius_iter(a, j) == a; }

 private:
  Gf(int p, int k);

  int p_, k_, q_;
  std::vector<int> mod_;
  std::vector<int> add_, mul_;
  std::vector<int> neg_, inv_, frob_;
};

}  // namespace braidlab
