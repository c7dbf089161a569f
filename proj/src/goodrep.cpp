#include "braidlab/goodrep.hpp"

#include <algorithm>
#include <numeric>

namespace braidlab {

FixedRootData fixed_root_data(const WeylGroup& W, const Twist& t, int w) {
  FixedRootData out;
  const RootSystem& rs = W.roots();
  std::vector<int> troot = W.twist_root_perm(t);
  std::vector<bool> fixed(rs.num_roots(), false);
  for (int i = 0; i < rs.num_roots(); ++i) {
    if (troot[W.act_root(w, i)] == i) {
      fixed[i] = true;
      out.fixed_roots.push_back(i);
    }
  }
  for (int s = 0; s < W.rank(); ++s)
    if (fixed[rs.simple_root_index(s)]) out.parabolic_mask |= 1u << s;

  // standard iff the fixed set equals the roots supported on I
  out.is_standard_parabolic = true;
  for (int i = 0; i < rs.num_roots(); ++i) {
    const RootVec& v = rs.root(i);
    bool in_RI = true;
    for (int s = 0; s < W.rank(); ++s)
      if (v[s] != 0 && !(out.parabolic_mask & (1u << s))) in_RI = false;
    if (in_RI != fixed[i]) {
      out.is_standard_parabolic = false;
      break;
    }
  }
  if (out.is_standard_parabolic) out.w_prime = W.longest_element(out.parabolic_mask);
  return out;
}

int default_d_max(const WeylGroup& W, const Twist& t, int w) {
  long ord = twisted_element_order(W, t, w);
  long l = std::lcm(ord, long(t.order));
  return int(std::min(2 * l, 48l));
}

GoodRepResult is_good_position(const WeylGroup& W, const Twist& t, int w, int d_max) {
  if (d_max < t.order) throw domain_error("is_good_position: d_max below order of twist");
  GoodRepResult res;

  FixedRootData fr = fixed_root_data(W, t, w);
  if (!fr.is_standard_parabolic) {
    res.failure = GoodRepFailure::FixedRootsNotParabolic;
    res.detail = "fixed roots do not span a standard parabolic";
    return res;
  }

  Twist tinv = inverse_twist(W.roots(), t);
  uint32_t I = fr.parabolic_mask;
  uint32_t Ipre = 0;
  for (int s = 0; s < W.rank(); ++s)
    if (I & (1u << s)) Ipre |= 1u << tinv.simple_perm[s];
  if (!W.is_min_rep(Ipre, w, I)) {
    res.failure = GoodRepFailure::NotMinDoubleCosetRep;
    res.detail = "w is not minimal in W_{delta^{-1}(I)} w W_I";
    return res;
  }

  // The divisor is delta(w') followed by w0 (rightmost factor applied
  // first), the longest coset representative attached to (I, delta).
  int target = W.multiply(W.apply_twist(t, fr.w_prime), W.longest_element());
  Braid base = Braid::embed(W, w);
  Braid acc = base;
  Braid cur = base;
  for (int d = 1; d <= d_max; ++d) {
    if (d > 1) {
      cur = cur.twisted(t);
      acc = acc * cur;
    }
    if (d % t.order == 0 && simple_left_divides(W, target, acc)) {
      GoodRepCertificate cert;
      cert.twist = t;
      cert.w = w;
      cert.I_mask = I;
      cert.d = d;
      cert.alpha_witness = acc.alpha();
      cert.length = W.length(w);
      res.cert = cert;
      return res;
    }
  }
  res.failure = GoodRepFailure::NoDivisibleTwistedPower;
  res.detail = "no twisted power up to d_max is left-divisible by w0 w'";
  return res;
}

std::vector<GoodRepCertificate> find_good_reps(const WeylGroup& W, const TwistedClass& cls,
                                               int d_max) {
  if (cls.members.empty()) throw domain_error("find_good_reps: empty class");
  std::vector<GoodRepCertificate> out;
  for (int m : cls.members) {  // ids are already (length, shortlex) sorted
    GoodRepResult r = is_good_position(W, cls.twist, m, d_max);
    if (r.ok()) {
      r.cert->class_id = cls.id;
      out.push_back(*r.cert);
    }
  }
  return out;
}

bool reverify_certificate(const WeylGroup& W, const GoodRepCertificate& cert) {
  FixedRootData fr = fixed_root_data(W, cert.twist, cert.w);
  if (!fr.is_standard_parabolic || fr.parabolic_mask != cert.I_mask) return false;

  Twist tinv = inverse_twist(W.roots(), cert.twist);
  uint32_t Ipre = 0;
  for (int s = 0; s < W.rank(); ++s)
    if (cert.I_mask & (1u << s)) Ipre |= 1u << tinv.simple_perm[s];
  if (!W.is_min_rep(Ipre, cert.w, cert.I_mask)) return false;

  if (cert.d < 1 || cert.d % cert.twist.order != 0) return false;
  Braid power = Braid::embed(W, cert.w).twisted_power(cert.twist, cert.d);
  int target = W.multiply(W.apply_twist(cert.twist, fr.w_prime), W.longest_element());
  if (!simple_left_divides(W, target, power)) return false;
  return power.alpha() == cert.alpha_witness && W.length(cert.w) == cert.length;
}

bool verify_elliptic_minimal(const WeylGroup& W, const GoodRepCertificate& cert,
                             const TwistedClass& cls) {
  return W.length(cert.w) == cls.min_length;
}

Braid braid_representative(const WeylGroup& W, const GoodRepCertificate& cert) {
  int wp = W.longest_element(cert.I_mask);
  Braid b = Braid::embed(W, wp) * Braid::embed(W, W.multiply(wp, cert.w));
  if (b.project() != cert.w)
    throw domain_error("braid representative does not project onto w");
  return b;
}

std::optional<GoodRepCertificate> canonical_good_rep(const WeylGroup& W,
                                                     const TwistedClass& cls, int d_max) {
  for (int m : cls.members) {
    GoodRepResult r = is_good_position(W, cls.twist, m, d_max);
    if (r.ok()) {
      r.cert->class_id = cls.id;
      return r.cert;
    }
  }
  return std::nullopt;
}

}  // namespace braidlab
