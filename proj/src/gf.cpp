#include "braidlab/gf.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace braidlab {

namespace {

// Polynomials over F_p as coefficient vectors c0..c_deg (trailing zeros
// trimmed).

std::vector<int> poly_trim(std::vector<int> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return poly_trim(std::move(c));
}

// Remainder of a modulo monic b.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
  a = poly_trim(std::move(a));
  const int db = int(b.size()) - 1;
  while (int(a.size()) - 1 >= db) {
    int lead = a.back();
    int shift = int(a.size()) - 1 - db;
    for (int i = 0; i <= db; ++i) {
      int& c = a[i + shift];
      c = ((c - lead * b[i]) % p + p) % p;
    }
    a = poly_trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

bool is_irreducible(const std::vector<int>& f, int p) {
  const int k = int(f.size()) - 1;
  if (k <= 0) return false;
  if (k == 1) return true;
  // Trial division by all monic polynomials of degree 1..k/2.
  for (int d = 1; 2 * d <= k; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      std::vector<int> g(d + 1, 0);
      g[d] = 1;
      int c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Smallest irreducible monic degree-k polynomial, coefficient tuples
// compared from x^{k-1} down to the constant term.
std::vector<int> smallest_irreducible(int p, int k) {
  if (k == 1) return {0, 1};
  int count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (int code = 0; code < count; ++code) {
    std::vector<int> f(k + 1, 0);
    f[k] = 1;
    int c = code;
    for (int i = 0; i < k; ++i) {
      f[i] = c % p;
      c /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  throw domain_error("smallest_irreducible: none found");
}

std::vector<int> decode(int a, int p, int k) {
  std::vector<int> c(k, 0);
  for (int i = 0; i < k && a; ++i) {
    c[i] = a % p;
    a /= p;
  }
  return c;
}

int encode(const std::vector<int>& c, int p, int k) {
  int a = 0;
  for (int i = k - 1; i >= 0; --i) a = a * p + (i < int(c.size()) ? c[i] : 0);
  return a;
}

}  // namespace

Gf::Gf(int p, int k) : p_(p), k_(k) {
  if (p < 2 || k < 1) throw config_error("Gf: need p >= 2, k >= 1");
  bool prime = p >= 2;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) prime = false;
  if (!prime) throw config_error("Gf: p is not prime");
  q_ = 1;
  for (int i = 0; i < k; ++i) {
    if (q_ > 4096 / p) throw resource_error("Gf: field too large");
    q_ *= p;
  }
  mod_ = smallest_irreducible(p, k);

  add_.resize(size_t(q_) * q_);
  mul_.resize(size_t(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, -1);
  frob_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    auto ca = decode(a, p, k);
    for (int b = 0; b < q_; ++b) {
      auto cb = decode(b, p, k);
      std::vector<int> s(k);
      for (int i = 0; i < k; ++i) s[i] = (ca[i] + cb[i]) % p;
      add_[size_t(a) * q_ + b] = encode(s, p, k);
      mul_[size_t(a) * q_ + b] = encode(poly_mod(poly_mul(ca, cb, p), mod_, p), p, k);
    }
    std::vector<int> n(k);
    for (int i = 0; i < k; ++i) n[i] = (p - ca[i]) % p;
    neg_[a] = encode(n, p, k);
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[size_t(a) * q_ + b] == 1) inv_[a] = b;
  for (int a = 0; a < q_; ++a) {
    int r = 1;
    for (int i = 0; i < p; ++i) r = mul_[size_t(r) * q_ + a];
    frob_[a] = r;
  }
}

int Gf::inv(int a) const {
  if (a == 0) throw domain_error("Gf::inv: zero");
  return inv_[a];
}

int Gf::pow(int a, long long e) const {
  if (a == 0) {
    if (e <= 0) throw domain_error("Gf::pow: 0^e with e <= 0");
    return 0;
  }
  e %= (q_ - 1);
  if (e < 0) e += q_ - 1;
  int r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

int Gf::frobenius_iter(int a, int j) const {
  for (int i = 0; i < j; ++i) a = frob_[a];
  return a;
}

const Gf& Gf::get(int p, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Gf>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, k}];
  if (!slot) slot.reset(new Gf(p, k));
  return *slot;
}

}  // namespace braidlab
