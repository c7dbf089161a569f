#include "braidlab/braid.hpp"

#include <bit>

namespace braidlab {

Braid Braid::embed(const WeylGroup& W, int w) {
  Braid b(W);
  if (w != W.identity()) b.factors_.push_back(w);
  return b;
}

Braid Braid::from_factors(const WeylGroup& W, std::vector<int> factors) {
  Braid b(W);
  b.factors_ = std::move(factors);
  b.normalize();
  return b;
}

int Braid::letter_length() const {
  int l = 0;
  for (int f : factors_) l += W_->length(f);
  return l;
}

int Braid::alpha() const { return factors_.empty() ? W_->identity() : factors_.front(); }

int Braid::project() const {
  int w = W_->identity();
  for (int f : factors_) w = W_->multiply(w, f);
  return w;
}

void Braid::normalize() {
  const WeylGroup& W = *W_;
  std::erase(factors_, W.identity());
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < factors_.size(); ++i) {
      int u = factors_[i], v = factors_[i + 1];
      // move letters right-to-left until (u, v) is left-weighted
      while (true) {
        uint32_t movable = W.left_descents(v) & ~W.right_descents(u);
        if (!movable) break;
        int s = W.generator(std::countr_zero(movable));
        u = W.multiply(u, s);
        v = W.multiply(s, v);
        changed = true;
      }
      factors_[i] = u;
      factors_[i + 1] = v;
    }
    if (changed) std::erase(factors_, W.identity());
  }
}

Braid Braid::operator*(const Braid& other) const {
  if (W_ != other.W_) throw domain_error("braid product across different groups");
  Braid out(*W_);
  out.factors_ = factors_;
  out.factors_.insert(out.factors_.end(), other.factors_.begin(), other.factors_.end());
  out.normalize();
  return out;
}

bool Braid::operator==(const Braid& other) const {
  return W_ == other.W_ && factors_ == other.factors_;
}

Braid Braid::twisted(const Twist& t) const {
  Braid out(*W_);
  out.factors_.reserve(factors_.size());
  for (int f : factors_) out.factors_.push_back(W_->apply_twist(t, f));
  out.normalize();  // delta preserves left-weightedness; kept as a safeguard
  return out;
}

Braid Braid::twisted_power(const Twist& t, int d) const {
  if (d < 1) throw domain_error("twisted_power: d must be >= 1");
  Braid acc = *this;
  Braid cur = *this;
  for (int i = 1; i < d; ++i) {
    cur = cur.twisted(t);
    acc = acc * cur;
  }
  return acc;
}

bool simple_left_divides(const WeylGroup& W, int u, const Braid& p) {
  int a = p.alpha();
  return W.length(W.multiply(W.inverse(u), a)) == W.length(a) - W.length(u);
}

}  // namespace braidlab
