#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "braidlab/certsets.hpp"
#include "braidlab/dimledger.hpp"
#include "braidlab/flag.hpp"

namespace braidlab {

struct CheckReport {
  std::string name;
  std::vector<std::string> violations;
  std::map<std::string, long long> stats;
  long long skipped = 0;

  bool ok() const { return violations.empty(); }
  void fail(std::string msg) {
    if (violations.size() < 64) violations.push_back(std::move(msg));
  }
};

/// Exhaustive checks on GL_n over GF(p^k): Lusztig varieties and their
/// coverings over the field itself (k = 1) and Deligne-Lusztig
/// varieties over F_{p^k} with the GL_n(F_p)-action (k > 1).
class FlagLab {
 public:
  FlagLab(int n, int p, int k = 1);

  const GlGroup& group() const { return *G_; }
  const Gf& field() const { return G_->field(); }
  const WeylGroup& weyl() const { return *W_; }
  int n() const { return n_; }

  const FlagVariety& flags(uint32_t I_mask);
  const RelPosTable& relpos(uint32_t I_mask);
  CertSets& cert_sets(int w, uint32_t I_mask);

  struct YtildeData {
    std::vector<int> coset_of;     // element index -> ^wU-coset id
    std::vector<int> coset_rep;    // coset id -> representative element
    std::vector<uint64_t> points;  // (g << 20) | coset id, sorted
    long long count_direct = 0;
    long long count_formula = 0;  // |G/U_I| * |U_I wdot U_I|
  };
  YtildeData enumerate_Ytilde(const CertSets& cs);
  // Points (g << 20) | flag index, sorted.
  std::vector<uint64_t> enumerate_Y(const CertSets& cs);

  CheckReport orbit_report(const CertSets& cs, const YtildeData& yt);
  CheckReport eta_check(const CertSets& cs);
  CheckReport bundle_check(const CertSets& cs, const YtildeData& yt);
  CheckReport slice_check(const CertSets& cs, const Partition& lam);
  CheckReport isotropy_full_flag(const CertSets& cs);
  CheckReport unipotent_orbit_bound(const CertSets& cs, const Partition& lam);

  struct XData {
    long long count_X = 0;
    std::vector<int> coset_reps;  // X~ cosets, representative element each
  };
  XData enumerate_X(const CertSets& cs);
  CheckReport x_stabilizer_check(const CertSets& cs, const XData& xd);

  static uint64_t pack(int g, int second) { return (uint64_t(g) << 20) | uint64_t(second); }

 private:
  const GlGroup* G_;
  std::unique_ptr<WeylGroup> W_;
  int n_, p_, k_;
  std::map<uint32_t, FlagVariety> flags_;
  std::map<uint32_t, RelPosTable> relpos_;
  std::map<std::pair<int, uint32_t>, CertSets> certsets_;
};

}  // namespace braidlab
