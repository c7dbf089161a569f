#include "braidlab/certsets.hpp"

#include <algorithm>
#include <set>

#include "braidlab/typea.hpp"

namespace braidlab {

std::pair<int, int> root_to_pair(const RootSystem& rs, int root_idx) {
  if (rs.type() != CartanType::A) throw domain_error("root_to_pair: not type A");
  bool pos = rs.is_positive(root_idx);
  const RootVec& v = rs.root(pos ? root_idx : rs.negate(root_idx));
  int a = -1, b = -1;
  for (int i = 0; i < v.size(); ++i)
    if (v[i] != 0) {
      if (a < 0) a = i;
      b = i;
    }
  return pos ? std::make_pair(a, b + 1) : std::make_pair(b + 1, a);
}

namespace {

void sort_unique(std::vector<Mat>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<Mat> root_subgroup_set(const Gf& F, int n, const RootSystem& rs,
                                   const std::vector<int>& roots) {
  const int q = F.q();
  const int m = int(roots.size());
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(m);
  for (int r : roots) pairs.push_back(root_to_pair(rs, r));

  std::vector<Mat> out;
  std::vector<int> t(m, 0);
  while (true) {
    Mat x = mat_identity(n);
    for (int i = 0; i < m; ++i)
      if (t[i]) x = mat_mul(F, x, root_element(F, n, pairs[i].first, pairs[i].second, t[i]));
    out.push_back(x);
    int i = 0;
    while (i < m && ++t[i] == q) t[i++] = 0;
    if (i == m) break;
  }
  sort_unique(out);
  return out;
}

std::vector<Mat> product_set(const Gf& F, const std::vector<Mat>& a, const std::vector<Mat>& b) {
  std::vector<Mat> out;
  out.reserve(a.size() * b.size());
  for (const Mat& x : a)
    for (const Mat& y : b) out.push_back(mat_mul(F, x, y));
  sort_unique(out);
  return out;
}

bool set_contains(const std::vector<Mat>& sorted_set, const Mat& m) {
  return std::binary_search(sorted_set.begin(), sorted_set.end(), m);
}

CertSets build_cert_sets(const WeylGroup& W, const Gf& F, int w, uint32_t I_mask) {
  const RootSystem& rs = W.roots();
  if (rs.type() != CartanType::A) throw domain_error("build_cert_sets: not type A");
  const int n = W.rank() + 1;
  const int q = F.q();

  CertSets cs;
  cs.n = n;
  cs.w = w;
  cs.I_mask = I_mask;
  cs.l_w = W.length(w);
  cs.w_prime = W.longest_element(I_mask);
  cs.wdot = permutation_matrix(n, one_line_of(W, w));
  cs.wpdot = permutation_matrix(n, one_line_of(W, cs.w_prime));
  Mat wdot_inv = mat_inverse(F, cs.wdot);

  // Fixed roots of the (untwisted) action of w.
  std::vector<int> fixed;
  for (int r = 0; r < rs.num_roots(); ++r)
    if (W.act_root(w, r) == r) fixed.push_back(r);
  cs.num_fixed = int(fixed.size());

  // T^w: diagonal matrices constant on cycles of the permutation of w.
  auto ol = one_line_of(W, w);
  std::vector<int> cyc_of(n, -1);
  int num_cyc = 0;
  for (int i = 0; i < n; ++i) {
    if (cyc_of[i] >= 0) continue;
    for (int j = i; cyc_of[j] < 0; j = ol[j]) cyc_of[j] = num_cyc;
    ++num_cyc;
  }
  {
    std::vector<int> val(num_cyc, 1);
    while (true) {
      Mat t = mat_zero(n);
      for (int i = 0; i < n; ++i) t(i, i) = uint8_t(val[cyc_of[i]]);
      cs.T_w.push_back(t);
      int i = 0;
      while (i < num_cyc && ++val[i] == q) val[i++] = 1;
      if (i == num_cyc) break;
    }
    std::sort(cs.T_w.begin(), cs.T_w.end());
  }

  auto pos_roots = [&](auto&& pred) {
    std::vector<int> out;
    for (int r = 0; r < rs.num_positive(); ++r)
      if (pred(r)) out.push_back(r);
    return out;
  };
  auto inv_set_of = [&](int u) {
    auto inv = W.inversion_set(u);
    std::set<int> s(inv.begin(), inv.end());
    return s;
  };

  cs.U_full = root_subgroup_set(F, n, rs, pos_roots([](int) { return true; }));

  {
    auto inv = inv_set_of(w);
    cs.U_w = root_subgroup_set(F, n, rs, pos_roots([&](int r) { return inv.count(r) > 0; }));
  }

  // U_I: positive roots outside the parabolic root subsystem R_I.
  auto in_parabolic_roots = [&](int r) {
    const RootVec& v = rs.root(r);
    for (int i = 0; i < v.size(); ++i)
      if (v[i] != 0 && !((I_mask >> i) & 1)) return false;
    return true;
  };
  cs.U_I = root_subgroup_set(F, n, rs, pos_roots([&](int r) { return !in_parabolic_roots(r); }));

  // ^wU_I and ^{w^{-1}}U_I by direct intersection with the conjugate.
  auto ui_sorted = cs.U_I;
  for (const Mat& u : cs.U_I) {
    if (set_contains(ui_sorted, mat_mul(F, wdot_inv, mat_mul(F, u, cs.wdot))))
      cs.wU_I.push_back(u);
    if (set_contains(ui_sorted, mat_mul(F, cs.wdot, mat_mul(F, u, wdot_inv))))
      cs.winvU_I.push_back(u);
  }

  // Cross-check ^wU_I against its root description
  // R^+ \ (R^w cup Inv(w^{-1})).
  {
    auto inv = inv_set_of(w);
    std::set<int> fixed_set(fixed.begin(), fixed.end());
    auto roots = pos_roots(
        [&](int r) { return fixed_set.count(r) == 0 && inv.count(r) == 0; });
    auto alt = root_subgroup_set(F, n, rs, roots);
    if (alt != cs.wU_I) throw domain_error("build_cert_sets: ^wU_I root description mismatch");
  }

  // L_I: invertible block-diagonal matrices, blocks joined by I.
  {
    std::vector<int> block_of(n, 0);
    for (int i = 1; i < n; ++i)
      block_of[i] = ((I_mask >> (i - 1)) & 1) ? block_of[i - 1] : block_of[i - 1] + 1;
    const int nb = block_of.back() + 1;
    std::vector<int> b_start(nb, n), b_size(nb, 0);
    for (int i = 0; i < n; ++i) {
      b_start[block_of[i]] = std::min(b_start[block_of[i]], i);
      ++b_size[block_of[i]];
    }
    std::vector<std::vector<Mat>> block_gl(nb);
    for (int b = 0; b < nb; ++b) {
      const int m = b_size[b];
      // All invertible m x m matrices over F.
      long long total = 1;
      for (int i = 0; i < m * m; ++i) total *= q;
      for (long long code = 0; code < total; ++code) {
        Mat blk = mat_zero(m);
        long long c = code;
        for (int i = 0; i < m * m; ++i) {
          blk.e[i] = uint8_t(c % q);
          c /= q;
        }
        if (mat_invertible(F, blk)) block_gl[b].push_back(blk);
      }
    }
    std::vector<int> pick(nb, 0);
    while (true) {
      Mat l = mat_zero(n);
      for (int b = 0; b < nb; ++b) {
        const Mat& blk = block_gl[b][pick[b]];
        for (int i = 0; i < b_size[b]; ++i)
          for (int j = 0; j < b_size[b]; ++j) l(b_start[b] + i, b_start[b] + j) = blk(i, j);
      }
      cs.L_I.push_back(l);
      int b = 0;
      while (b < nb && ++pick[b] == int(block_gl[b].size())) pick[b++] = 0;
      if (b == nb) break;
    }
    std::sort(cs.L_I.begin(), cs.L_I.end());
  }
  for (const Mat& l : cs.L_I)
    if (mat_mul(F, l, cs.wdot) == mat_mul(F, cs.wdot, l)) cs.L_I_w.push_back(l);

  {
    std::vector<int> neg_fixed;
    for (int r : fixed)
      if (!rs.is_positive(r)) neg_fixed.push_back(r);
    cs.U_Rw_minus = root_subgroup_set(F, n, rs, neg_fixed);
  }

  // U^b = U^{w'} T^w wpdot U^{w'w} wpdot^{-1}.
  {
    int wpw = W.multiply(cs.w_prime, w);
    auto inv_wp = inv_set_of(cs.w_prime);
    auto inv_wpw = inv_set_of(wpw);
    auto U_wp = root_subgroup_set(F, n, rs,
                                  pos_roots([&](int r) { return inv_wp.count(r) > 0; }));
    auto U_wpw = root_subgroup_set(F, n, rs,
                                   pos_roots([&](int r) { return inv_wpw.count(r) > 0; }));
    Mat wpdot_inv = mat_inverse(F, cs.wpdot);
    std::vector<Mat> conj;
    conj.reserve(U_wpw.size());
    for (const Mat& u : U_wpw)
      conj.push_back(mat_mul(F, cs.wpdot, mat_mul(F, u, wpdot_inv)));
    sort_unique(conj);
    cs.U_b = product_set(F, product_set(F, U_wp, cs.T_w), conj);
  }

  {
    std::vector<Mat> wUI;
    wUI.reserve(cs.U_I.size());
    for (const Mat& u : cs.U_I) wUI.push_back(mat_mul(F, cs.wdot, u));
    cs.UIwUI = product_set(F, cs.U_I, wUI);
  }

  return cs;
}

CertSets build_cert_sets(const WeylGroup& W, const Gf& F, const GoodRepCertificate& cert) {
  return build_cert_sets(W, F, cert.w, cert.I_mask);
}

}  // namespace braidlab
