#pragma once

#include <vector>

#include "braidlab/weyl.hpp"

namespace braidlab {

/// Element of the positive braid monoid B+(W) in left-greedy Garside
/// normal form: a sequence of nonidentity simple factors with every
/// adjacent pair (u, v) left-weighted (left descents of v contained in
/// the right descents of u).
class Braid {
 public:
  explicit Braid(const WeylGroup& W) : W_(&W) {}
  static Braid embed(const WeylGroup& W, int w);
  static Braid from_factors(const WeylGroup& W, std::vector<int> factors);

  const WeylGroup& group() const { return *W_; }
  const std::vector<int>& factors() const { return factors_; }
  int canonical_length() const { return int(factors_.size()); }
  int letter_length() const;

  // First normal-form factor; identity for the empty braid.
  int alpha() const;
  // Projection to W.
  int project() const;

  Braid operator*(const Braid& other) const;
  bool operator==(const Braid& other) const;

  // Factor-wise twist followed by renormalization.
  Braid twisted(const Twist& t) const;
  // b . delta(b) . delta^2(b) ... delta^{d-1}(b).
  Braid twisted_power(const Twist& t, int d) const;

 private:
  void normalize();

  const WeylGroup* W_;
  std::vector<int> factors_;
};

// True iff the simple u left-divides p, i.e. u is below alpha(p) in
// left weak order.
bool simple_left_divides(const WeylGroup& W, int u, const Braid& p);

}  // namespace braidlab
