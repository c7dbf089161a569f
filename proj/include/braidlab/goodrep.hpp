#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidlab/braid.hpp"
#include "braidlab/weyl.hpp"

namespace braidlab {

/// Roots fixed by the twisted element delta.w and the standard
/// parabolic they span (when they do span one).
struct FixedRootData {
  std::vector<int> fixed_roots;  // indices into all roots
  bool is_standard_parabolic = false;
  uint32_t parabolic_mask = 0;  // I: simple reflections with fixed simple root
  int w_prime = 0;              // longest element of W_I when standard
};

FixedRootData fixed_root_data(const WeylGroup& W, const Twist& t, int w);

/// Certified good-position representative of a twisted conjugacy class.
struct GoodRepCertificate {
  Twist twist;
  int class_id = -1;
  int w = 0;
  uint32_t I_mask = 0;
  int d = 0;              // smallest witness exponent, multiple of order(delta)
  int alpha_witness = 0;  // alpha of the d-th twisted power of w
  int length = 0;
};

enum class GoodRepFailure {
  FixedRootsNotParabolic,  // (i)
  NotMinDoubleCosetRep,    // (ii)
  NoDivisibleTwistedPower  // (iii)
};

struct GoodRepResult {
  std::optional<GoodRepCertificate> cert;
  GoodRepFailure failure = GoodRepFailure::FixedRootsNotParabolic;
  std::string detail;

  bool ok() const { return cert.has_value(); }
};

// Default search bound: 2 * lcm(order of delta.w, order of delta), capped at 48.
int default_d_max(const WeylGroup& W, const Twist& t, int w);

GoodRepResult is_good_position(const WeylGroup& W, const Twist& t, int w, int d_max);

// All certified members of the class, sorted by (length, shortlex word).
// Empty result means no member certified within d_max.
std::vector<GoodRepCertificate> find_good_reps(const WeylGroup& W, const TwistedClass& cls,
                                               int d_max);

// Independent re-check of the three certificate predicates.
bool reverify_certificate(const WeylGroup& W, const GoodRepCertificate& cert);

bool verify_elliptic_minimal(const WeylGroup& W, const GoodRepCertificate& cert,
                             const TwistedClass& cls);

// b = embed(w') . embed(w'.w); projects back onto w.
Braid braid_representative(const WeylGroup& W, const GoodRepCertificate& cert);

/// Canonical certificate per class: first in (length, shortlex) order.
std::optional<GoodRepCertificate> canonical_good_rep(const WeylGroup& W,
                                                     const TwistedClass& cls, int d_max);

}  // namespace braidlab
