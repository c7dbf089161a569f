#include "braidlab/flaglab.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "braidlab/typea.hpp"

namespace braidlab {

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int find_point(const std::vector<uint64_t>& sorted, uint64_t p) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), p);
  if (it == sorted.end() || *it != p) return -1;
  return int(it - sorted.begin());
}

// Multiplicative Jordan decomposition: the unipotent factor of x is
// x^e where e = 1 mod the p-part of ord(x) and 0 mod the rest.
Mat unipotent_part(const Gf& F, const Mat& x) {
  Mat id = mat_identity(x.n);
  long long order = 1;
  Mat pw = x;
  while (!(pw == id)) {
    pw = mat_mul(F, pw, x);
    if (++order > 2000000) throw domain_error("unipotent_part: runaway order");
  }
  long long ppart = 1;
  long long rest = order;
  while (rest % F.p() == 0) {
    rest /= F.p();
    ppart *= F.p();
  }
  long long e = 0;
  while (e % ppart != 1 % ppart) e += rest;
  Mat u = id;
  for (long long i = 0; i < e; ++i) u = mat_mul(F, u, x);
  return u;
}

// Block-diagonal (Levi) part of a block upper-triangular matrix.
Mat levi_part(const Mat& m, uint32_t I_mask) {
  const int n = m.n;
  std::vector<int> block_of(n, 0);
  for (int i = 1; i < n; ++i)
    block_of[i] = ((I_mask >> (i - 1)) & 1) ? block_of[i - 1] : block_of[i - 1] + 1;
  Mat l = mat_zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (block_of[i] == block_of[j]) l(i, j) = m(i, j);
  return l;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> labels() {
    std::vector<int> l(parent.size());
    for (size_t i = 0; i < parent.size(); ++i) l[i] = find(int(i));
    return l;
  }
};

}  // namespace

FlagLab::FlagLab(int n, int p, int k)
    : G_(&GlGroup::get(n, p, k)), n_(n), p_(p), k_(k) {
  W_ = std::make_unique<WeylGroup>(RootSystem::build(CartanType::A, n - 1));
}

const FlagVariety& FlagLab::flags(uint32_t I_mask) {
  auto it = flags_.find(I_mask);
  if (it == flags_.end()) it = flags_.emplace(I_mask, FlagVariety(*G_, I_mask)).first;
  return it->second;
}

const RelPosTable& FlagLab::relpos(uint32_t I_mask) {
  auto it = relpos_.find(I_mask);
  if (it == relpos_.end()) it = relpos_.emplace(I_mask, RelPosTable(*W_, flags(I_mask))).first;
  return it->second;
}

CertSets& FlagLab::cert_sets(int w, uint32_t I_mask) {
  auto key = std::make_pair(w, I_mask);
  auto it = certsets_.find(key);
  if (it == certsets_.end())
    it = certsets_.emplace(key, build_cert_sets(*W_, field(), w, I_mask)).first;
  return it->second;
}

FlagLab::YtildeData FlagLab::enumerate_Ytilde(const CertSets& cs) {
  if (k_ != 1) throw config_error("enumerate_Ytilde: lab must be over the prime field");
  const Gf& F = field();
  YtildeData yt;

  std::vector<int> wU_idx;
  for (const Mat& u : cs.wU_I) wU_idx.push_back(G_->index_of(u));

  yt.coset_of.assign(G_->size(), -1);
  for (int g = 0; g < G_->size(); ++g) {
    if (yt.coset_of[g] >= 0) continue;
    int id = int(yt.coset_rep.size());
    yt.coset_rep.push_back(g);
    const Mat& R = G_->element(g);
    for (const Mat& u : cs.wU_I) yt.coset_of[G_->index_of(mat_mul(F, R, u))] = id;
  }

  // (g, g'-coset) with g'^{-1} g g' in wdot U_I, i.e. g = g' wdot v g'^{-1}.
  yt.points.reserve(yt.coset_rep.size() * cs.U_I.size());
  for (int c = 0; c < int(yt.coset_rep.size()); ++c) {
    const Mat& R = G_->element(yt.coset_rep[c]);
    Mat Rinv = G_->inverse_mat(yt.coset_rep[c]);
    Mat Rw = mat_mul(F, R, cs.wdot);
    for (const Mat& v : cs.U_I) {
      Mat g = mat_mul(F, mat_mul(F, Rw, v), Rinv);
      yt.points.push_back(pack(G_->index_of(g), c));
    }
  }
  std::sort(yt.points.begin(), yt.points.end());
  yt.points.erase(std::unique(yt.points.begin(), yt.points.end()), yt.points.end());
  yt.count_direct = (long long)yt.points.size();
  yt.count_formula =
      ((long long)G_->size() / (long long)cs.U_I.size()) * (long long)cs.UIwUI.size();
  return yt;
}

std::vector<uint64_t> FlagLab::enumerate_Y(const CertSets& cs) {
  const Gf& F = field();
  const FlagVariety& V = flags(cs.I_mask);
  const RelPosTable& T = relpos(cs.I_mask);
  std::vector<uint64_t> Y;
  for (int f = 0; f < V.size(); ++f) {
    const Mat& xf = V.transporter(f);
    for (int g = 0; g < G_->size(); ++g) {
      int fq = V.flag_of(mat_mul(F, G_->element(g), xf));
      if (T.at(f, fq) == cs.w) Y.push_back(pack(g, f));
    }
  }
  std::sort(Y.begin(), Y.end());
  return Y;
}

CheckReport FlagLab::orbit_report(const CertSets& cs, const YtildeData& yt) {
  const Gf& F = field();
  CheckReport rep;
  rep.name = "orbit_report";

  const int id_coset = yt.coset_of[G_->index_of(mat_identity(n_))];

  // Canonical points (wdot v, identity coset), v in U^w.
  std::vector<uint64_t> canon;
  for (const Mat& v : cs.U_w)
    canon.push_back(pack(G_->index_of(mat_mul(F, cs.wdot, v)), id_coset));
  std::sort(canon.begin(), canon.end());
  if (canon.size() != cs.U_w.size()) rep.fail("canonical points collide");

  std::vector<uint8_t> visited(yt.points.size(), 0);
  long long orbit_count = 0;
  for (uint64_t seed : canon) {
    int sp = find_point(yt.points, seed);
    if (sp < 0) {
      rep.fail("canonical point not in Ytilde");
      continue;
    }
    if (visited[sp]) {
      rep.fail("two canonical points share an orbit");
      continue;
    }
    ++orbit_count;
    const int g0 = int(seed >> 20);
    const int c0 = int(seed & 0xfffff);
    const int rep0 = yt.coset_rep[c0];
    long long size = 0, canon_hits = 0;
    for (int x = 0; x < G_->size(); ++x) {
      int gx = G_->mul(G_->mul(x, g0), G_->inverse(x));
      int cx = yt.coset_of[G_->mul(x, rep0)];
      uint64_t pt = pack(gx, cx);
      int idx = find_point(yt.points, pt);
      if (idx < 0) {
        rep.fail("orbit leaves Ytilde");
        continue;
      }
      if (!visited[idx]) {
        visited[idx] = 1;
        ++size;
        if (std::binary_search(canon.begin(), canon.end(), pt)) ++canon_hits;
      }
    }
    if (size != G_->size()) rep.fail("orbit not free: size " + std::to_string(size));
    if (canon_hits != 1)
      rep.fail("orbit has " + std::to_string(canon_hits) + " canonical points");
  }
  long long unvisited = 0;
  for (uint8_t v : visited)
    if (!v) ++unvisited;
  if (unvisited) rep.fail(std::to_string(unvisited) + " Ytilde points outside all orbits");

  long long expected = (long long)G_->size() * ipow(field().q(), cs.l_w);
  if (orbit_count != ipow(field().q(), cs.l_w))
    rep.fail("orbit count " + std::to_string(orbit_count) + " != q^l(w)");
  if (yt.count_direct != expected) rep.fail("|Ytilde| != |G| q^l(w)");
  if (yt.count_formula != expected) rep.fail("coset formula count != |G| q^l(w)");

  rep.stats["orbit_count"] = orbit_count;
  rep.stats["ytilde"] = yt.count_direct;
  rep.stats["ytilde_formula"] = yt.count_formula;
  rep.stats["expected"] = expected;
  return rep;
}

CheckReport FlagLab::eta_check(const CertSets& cs) {
  const Gf& F = field();
  CheckReport rep;
  rep.name = "eta_check";

  Mat wdot_inv = mat_inverse(F, cs.wdot);
  std::set<uint64_t> image;
  bool injective = true;
  for (const Mat& u : cs.winvU_I) {
    Mat u_inv = mat_inverse(F, u);
    for (const Mat& g : cs.U_b) {
      Mat val = mat_mul(F, mat_mul(F, u, g),
                        mat_mul(F, cs.wdot, mat_mul(F, u_inv, wdot_inv)));
      if (!image.insert(val.key()).second) injective = false;
    }
  }
  if (!injective) rep.fail("eta not injective");

  auto target = product_set(F, cs.U_full, product_set(F, cs.T_w, cs.U_Rw_minus));
  std::set<uint64_t> target_keys;
  for (const Mat& m : target) target_keys.insert(m.key());
  if (image != target_keys) rep.fail("eta image differs from U T^w U_{(R^w)^-}");

  rep.stats["domain"] = (long long)(cs.winvU_I.size() * cs.U_b.size());
  rep.stats["codomain"] = (long long)target.size();
  if (cs.winvU_I.size() * cs.U_b.size() != target.size())
    rep.fail("eta domain and codomain sizes differ");
  return rep;
}

CheckReport FlagLab::bundle_check(const CertSets& cs, const YtildeData& yt) {
  const Gf& F = field();
  CheckReport rep;
  rep.name = "bundle_check";
  const FlagVariety& V = flags(cs.I_mask);

  auto Y = enumerate_Y(cs);

  // Rational-lift locus: image of the covering, with one lift each.
  std::unordered_map<uint64_t, int> lift_rep;  // (g, flag) -> coset rep element
  for (uint64_t pt : yt.points) {
    int g = int(pt >> 20), c = int(pt & 0xfffff);
    int f = V.flag_of_elem_index(yt.coset_rep[c]);
    lift_rep.emplace(pack(g, f), yt.coset_rep[c]);
  }
  for (const auto& [pt, rep_elem] : lift_rep)
    if (find_point(Y, pt) < 0) {
      rep.fail("lifted point not in Y");
      break;
    }
  long long lifted = (long long)lift_rep.size();
  rep.stats["Y"] = (long long)Y.size();
  rep.stats["lifted"] = lifted;
  rep.skipped = (long long)Y.size() - lifted;

  // Sorted key views of L_I^w and ^wU_I for membership tests.
  std::vector<uint64_t> lw_keys, wu_keys;
  for (const Mat& l : cs.L_I_w) lw_keys.push_back(l.key());
  for (const Mat& u : cs.wU_I) wu_keys.push_back(u.key());
  std::sort(lw_keys.begin(), lw_keys.end());
  std::sort(wu_keys.begin(), wu_keys.end());

  // Stabilizer of a lifted point (g, f) is {x in x_f P x_f^{-1} :
  // xg = gx}; each stabilizer element must map to a distinct l in
  // L_I^w with g'^{-1} x g' in l^{-1} ^wU_I.
  for (const auto& [pt, rep_elem] : lift_rep) {
    int g = int(pt >> 20), f = int(pt & 0xfffff);
    const Mat& gm = G_->element(g);
    const Mat& xf = V.transporter(f);
    const Mat& xf_inv = V.transporter_inv(f);
    const Mat& gp = G_->element(rep_elem);
    Mat gp_inv = G_->inverse_mat(rep_elem);
    std::set<uint64_t> hom_values;
    long long stab_size = 0;
    for (int p_idx : V.parabolic_elems()) {
      Mat x = mat_mul(F, xf, mat_mul(F, G_->element(p_idx), xf_inv));
      if (!(mat_mul(F, x, gm) == mat_mul(F, gm, x))) continue;
      ++stab_size;
      Mat m = mat_mul(F, gp_inv, mat_mul(F, x, gp));
      Mat linv = levi_part(m, cs.I_mask);
      if (!mat_invertible(F, linv)) {
        rep.fail("bundle hom: Levi part singular");
        continue;
      }
      Mat l = mat_inverse(F, linv);
      if (!std::binary_search(lw_keys.begin(), lw_keys.end(), l.key())) {
        rep.fail("bundle hom value outside L_I^w");
        continue;
      }
      if (!std::binary_search(wu_keys.begin(), wu_keys.end(), mat_mul(F, l, m).key())) {
        rep.fail("bundle hom residue outside ^wU_I");
        continue;
      }
      hom_values.insert(l.key());
    }
    if ((long long)hom_values.size() != stab_size) rep.fail("bundle hom not injective");
  }

  // Slice meeting (canonical points (wdot v, standard flag)): the
  // G-orbit partition, which on the slice is induced by conjugation
  // inside P_I, must coincide with the L_I^w-conjugation partition.
  const int nv = int(cs.U_w.size());
  std::unordered_map<uint64_t, int> slice_index;  // key of wdot v -> index
  std::vector<Mat> slice_mats;
  for (int i = 0; i < nv; ++i) {
    slice_mats.push_back(mat_mul(F, cs.wdot, cs.U_w[i]));
    slice_index[slice_mats.back().key()] = i;
  }
  UnionFind by_G(nv), by_L(nv);
  for (int p_idx : V.parabolic_elems()) {
    const Mat& p = G_->element(p_idx);
    Mat p_inv = G_->inverse_mat(p_idx);
    for (int i = 0; i < nv; ++i) {
      Mat im = mat_mul(F, p, mat_mul(F, slice_mats[i], p_inv));
      auto it = slice_index.find(im.key());
      if (it != slice_index.end()) by_G.unite(i, it->second);
    }
  }
  for (const Mat& l : cs.L_I_w) {
    Mat l_inv = mat_inverse(F, l);
    for (int i = 0; i < nv; ++i) {
      Mat v2 = mat_mul(F, l, mat_mul(F, cs.U_w[i], l_inv));
      auto it = slice_index.find(mat_mul(F, cs.wdot, v2).key());
      if (it == slice_index.end()) {
        rep.fail("L_I^w conjugation leaves U^w");
        continue;
      }
      by_L.unite(i, it->second);
    }
  }
  auto lab_G = by_G.labels(), lab_L = by_L.labels();
  std::map<int, std::set<int>> blocks_G;
  for (int i = 0; i < nv; ++i) blocks_G[lab_G[i]].insert(lab_L[i]);
  for (const auto& [root, ls] : blocks_G)
    if (ls.size() != 1) rep.fail("slice meeting of an orbit splits into multiple L^w-orbits");
  // L^w-conjugation fixes the G-orbit, so the partitions can only
  // disagree in the checked direction.
  return rep;
}

CheckReport FlagLab::slice_check(const CertSets& cs, const Partition& lam) {
  const Gf& F = field();
  CheckReport rep;
  rep.name = "slice_check";
  long long hits = 0;
  for (const Mat& u : cs.U_b) {
    Mat m = mat_mul(F, u, cs.wdot);
    if (!is_unipotent(F, m)) continue;
    if (jordan_type(F, m) == lam) ++hits;
  }
  rep.stats["slice"] = (long long)cs.U_b.size();
  rep.stats["intersection"] = hits;
  if (hits == 0) {
    // The slice meets the class in a finite set of geometric points, but
    // those points need not be rational: they can form Frobenius-conjugate
    // pairs.  Rescan over the quadratic extension before declaring a miss.
    long long ext_hits = -1;
    // Coordinates double over the extension, so the slice size squares.
    if ((long long)cs.U_b.size() * (long long)cs.U_b.size() <= 50'000'000) {
      const Gf& E = Gf::get(F.p(), 2 * F.k());
      CertSets ext = build_cert_sets(*W_, E, cs.w, cs.I_mask);
      ext_hits = 0;
      for (const Mat& u : ext.U_b) {
        Mat m = mat_mul(E, u, ext.wdot);
        if (!is_unipotent(E, m)) continue;
        if (jordan_type(E, m) == lam) ++ext_hits;
      }
    }
    rep.stats["intersection_ext"] = ext_hits;
    if (ext_hits <= 0)
      rep.fail("slice misses the unipotent class " + partition_string(lam));
  }
  return rep;
}

CheckReport FlagLab::isotropy_full_flag(const CertSets& cs) {
  const Gf& F = field();
  CheckReport rep;
  rep.name = "isotropy_full_flag";
  const FlagVariety& V = flags(0);
  const RelPosTable& T = relpos(0);

  int pos_fixed = 0;
  const RootSystem& rs = W_->roots();
  for (int r = 0; r < rs.num_positive(); ++r)
    if (W_->act_root(cs.w, r) == r) ++pos_fixed;
  long long bound = (long long)cs.T_w.size() * ipow(field().q(), pos_fixed);

  long long max_c = 1;
  for (int f = 0; f < V.size(); ++f) {
    const Mat& xf = V.transporter(f);
    const Mat& xf_inv = V.transporter_inv(f);
    for (int g = 0; g < G_->size(); ++g) {
      int fq = V.flag_of(mat_mul(F, G_->element(g), xf));
      if (T.at(f, fq) != cs.w) continue;
      const Mat& gm = G_->element(g);
      long long stab = 0;
      std::vector<Mat> stab_elems;
      for (int p_idx : V.parabolic_elems()) {
        Mat x = mat_mul(F, xf, mat_mul(F, G_->element(p_idx), xf_inv));
        if (mat_mul(F, x, gm) == mat_mul(F, gm, x)) {
          ++stab;
          stab_elems.push_back(x);
        }
      }
      long long c = 1;
      while (c <= 4 && (bound * c) % stab != 0) ++c;
      if (c > 4) {
        rep.fail("stabilizer order " + std::to_string(stab) +
                 " exceeds divisibility tolerance (bound " + std::to_string(bound) + ")");
        continue;
      }
      max_c = std::max(max_c, c);
      for (const Mat& x : stab_elems) {
        Mat u = unipotent_part(F, x);
        if (V.flag_of(mat_mul(F, u, xf)) != f) {
          rep.fail("unipotent part of a stabilizer element moves the flag");
          break;
        }
      }
    }
  }
  rep.stats["bound"] = bound;
  rep.stats["component_factor"] = max_c;
  return rep;
}

CheckReport FlagLab::unipotent_orbit_bound(const CertSets& cs, const Partition& lam) {
  const Gf& F = field();
  CheckReport rep;
  rep.name = "unipotent_orbit_bound";
  const FlagVariety& V = flags(cs.I_mask);

  std::vector<uint8_t> in_O(G_->size(), 0);
  for (int g = 0; g < G_->size(); ++g) {
    const Mat& m = G_->element(g);
    if (is_unipotent(F, m) && jordan_type(F, m) == lam) in_O[g] = 1;
  }

  auto Y = enumerate_Y(cs);
  std::vector<uint64_t> YO;
  for (uint64_t pt : Y)
    if (in_O[pt >> 20]) YO.push_back(pt);

  std::vector<uint8_t> visited(YO.size(), 0);
  long long orbits = 0;
  for (size_t i = 0; i < YO.size(); ++i) {
    if (visited[i]) continue;
    ++orbits;
    int g0 = int(YO[i] >> 20), f0 = int(YO[i] & 0xfffff);
    for (int x = 0; x < G_->size(); ++x) {
      int gx = G_->mul(G_->mul(x, g0), G_->inverse(x));
      int fx = V.act(x, f0);
      int idx = find_point(YO, pack(gx, fx));
      if (idx < 0) {
        rep.fail("G-action leaves Y^O");
        break;
      }
      visited[idx] = 1;
    }
  }
  long long bound = (long long)cs.L_I_w.size() * ipow(field().q(), cs.l_w);
  rep.stats["points"] = (long long)YO.size();
  rep.stats["orbits"] = orbits;
  rep.stats["bound"] = bound;
  if (orbits > bound) rep.fail("orbit count exceeds |L_I^w| q^l(w)");
  return rep;
}

FlagLab::XData FlagLab::enumerate_X(const CertSets& cs) {
  const Gf& F = field();
  XData xd;
  const FlagVariety& V = flags(cs.I_mask);
  const RelPosTable& T = relpos(cs.I_mask);

  for (int f = 0; f < V.size(); ++f) {
    int ff = V.flag_of(mat_frobenius(F, V.transporter(f), 1));
    if (T.at(f, ff) == cs.w) ++xd.count_X;
  }

  std::vector<uint64_t> cond_keys;
  for (const Mat& m : cs.UIwUI) cond_keys.push_back(m.key());
  std::sort(cond_keys.begin(), cond_keys.end());

  std::vector<int> coset_of(G_->size(), -1);
  for (int g = 0; g < G_->size(); ++g) {
    if (coset_of[g] >= 0) continue;
    const Mat& R = G_->element(g);
    for (const Mat& u : cs.U_I) coset_of[G_->index_of(mat_mul(F, R, u))] = g;
    Mat m = mat_mul(F, G_->inverse_mat(g), mat_frobenius(F, R, 1));
    if (std::binary_search(cond_keys.begin(), cond_keys.end(), m.key()))
      xd.coset_reps.push_back(g);
  }
  return xd;
}

CheckReport FlagLab::x_stabilizer_check(const CertSets& cs, const XData& xd) {
  const Gf& F = field();
  CheckReport rep;
  rep.name = "x_stabilizer_check";

  std::vector<uint64_t> ui_keys;
  for (const Mat& u : cs.U_I) ui_keys.push_back(u.key());
  std::sort(ui_keys.begin(), ui_keys.end());

  // G^F = matrices with entries fixed by x -> x^p.
  std::vector<int> gf_elems;
  for (int g = 0; g < G_->size(); ++g)
    if (mat_in_subfield(F, G_->element(g), 1)) gf_elems.push_back(g);
  rep.stats["GF"] = (long long)gf_elems.size();
  rep.stats["xtilde"] = (long long)xd.coset_reps.size();

  const int id_idx = G_->index_of(mat_identity(n_));
  for (int r : xd.coset_reps) {
    Mat r_inv = G_->inverse_mat(r);
    const Mat& R = G_->element(r);
    for (int x : gf_elems) {
      if (x == id_idx) continue;
      Mat m = mat_mul(F, r_inv, mat_mul(F, G_->element(x), R));
      if (std::binary_search(ui_keys.begin(), ui_keys.end(), m.key())) {
        rep.fail("nontrivial stabilizer on an Xtilde coset");
        break;
      }
    }
  }
  return rep;
}

}  // namespace braidlab
