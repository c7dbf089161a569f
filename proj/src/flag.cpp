#include "braidlab/flag.hpp"

#include <algorithm>
#include <unordered_map>

#include "braidlab/typea.hpp"

namespace braidlab {

std::vector<uint8_t> bruhat_one_line(const Gf& F, Mat x) {
  const int n = x.n;
  if (!mat_invertible(F, x)) throw domain_error("bruhat_one_line: singular matrix");
  std::vector<uint8_t> w(n, 0);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = n - 1; r >= 0; --r)
      if (x(r, col)) {
        piv = r;
        break;
      }
    w[col] = uint8_t(piv);
    // Clear entries above the pivot (row ops from below = left
    // multiplication by upper triangulars).
    for (int r = 0; r < piv; ++r) {
      if (!x(r, col)) continue;
      int f = F.mul(x(r, col), F.inv(x(piv, col)));
      for (int j = 0; j < n; ++j) x(r, j) = uint8_t(F.sub(x(r, j), F.mul(f, x(piv, j))));
    }
    // Clear entries right of the pivot in its row (column ops from the
    // left = right multiplication by upper triangulars).
    for (int j = col + 1; j < n; ++j) {
      if (!x(piv, j)) continue;
      int f = F.mul(x(piv, j), F.inv(x(piv, col)));
      for (int r = 0; r < n; ++r) x(r, j) = uint8_t(F.sub(x(r, j), F.mul(f, x(r, col))));
    }
  }
  return w;
}

namespace {

// Reduced row echelon form of an m x n matrix given as row vectors.
void rref(const Gf& F, std::vector<std::vector<int>>& rows, int n) {
  const int m = int(rows.size());
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int piv = -1;
    for (int r = rank; r < m; ++r)
      if (rows[r][col]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    int s = F.inv(rows[rank][col]);
    for (int j = 0; j < n; ++j) rows[rank][j] = F.mul(rows[rank][j], s);
    for (int r = 0; r < m; ++r) {
      if (r == rank || !rows[r][col]) continue;
      int f = rows[r][col];
      for (int j = 0; j < n; ++j) rows[r][j] = F.sub(rows[r][j], F.mul(f, rows[rank][j]));
    }
    ++rank;
  }
}

}  // namespace

std::string FlagVariety::chain_key(const Mat& g) const {
  const Gf& F = G_->field();
  const int n = g.n;
  std::string key;
  for (int d : dims_) {
    std::vector<std::vector<int>> rows(d, std::vector<int>(n));
    for (int c = 0; c < d; ++c)
      for (int r = 0; r < n; ++r) rows[c][r] = g(r, c);
    rref(F, rows, n);
    for (const auto& row : rows)
      for (int v : row) key.push_back(char(v));
  }
  return key;
}

FlagVariety::FlagVariety(const GlGroup& G, uint32_t I_mask) : G_(&G), I_mask_(I_mask) {
  const int n = G.n();
  for (int i = 0; i + 1 < n; ++i)
    if (!((I_mask >> i) & 1)) dims_.push_back(i + 1);
  id_index_ = G.index_of(mat_identity(n));

  flag_of_elem_.assign(G.size(), -1);
  std::unordered_map<std::string, int> seen;
  for (int gi = 0; gi < G.size(); ++gi) {
    std::string key = chain_key(G.element(gi));
    auto [it, inserted] = seen.emplace(std::move(key), int(transporter_.size()));
    if (inserted) {
      transporter_.push_back(G.element(gi));
      transporter_inv_.push_back(G.inverse_mat(gi));
    }
    flag_of_elem_[gi] = it->second;
  }
  if (size() > 1000) throw resource_error("FlagVariety: flag count bound exceeded");

  const int std_flag = flag_of_elem_[id_index_];
  for (int gi = 0; gi < G.size(); ++gi)
    if (flag_of_elem_[gi] == std_flag) parabolic_.push_back(gi);
}

int FlagVariety::flag_of(const Mat& g) const {
  int gi = G_->index_of(g);
  if (gi < 0) throw domain_error("FlagVariety::flag_of: not a group element");
  return flag_of_elem_[gi];
}

int FlagVariety::act(int g_idx, int f) const {
  return flag_of(mat_mul(G_->field(), G_->element(g_idx), transporter_[f]));
}

int relative_position(const WeylGroup& W, const Gf& F, const FlagVariety& A, int fP,
                      const FlagVariety& B, int fQ) {
  Mat x = mat_mul(F, A.transporter_inv(fP), B.transporter(fQ));
  int w = element_of_one_line(W, bruhat_one_line(F, x));
  return W.min_double_coset_rep(A.type_mask(), w, B.type_mask());
}

RelPosTable::RelPosTable(const WeylGroup& W, const FlagVariety& V) : nf_(size_t(V.size())) {
  const Gf& F = V.group().field();
  tab_.resize(nf_ * nf_);
  for (size_t i = 0; i < nf_; ++i)
    for (size_t j = 0; j < nf_; ++j)
      tab_[i * nf_ + j] = relative_position(W, F, V, int(i), V, int(j));
}

}  // namespace braidlab
