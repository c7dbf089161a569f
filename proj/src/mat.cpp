#include "braidlab/mat.hpp"

#include <algorithm>
#include <sstream>

namespace braidlab {

uint64_t Mat::key() const {
  uint64_t k = uint64_t(n);
  for (int i = 0; i < n * n; ++i) k = (k << 4) | e[i];
  return k;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < n; ++i) {
    if (i) os << ';';
    for (int j = 0; j < n; ++j) {
      if (j) os << ',';
      os << int((*this)(i, j));
    }
  }
  os << ']';
  return os.str();
}

Mat mat_zero(int n) {
  if (n < 1 || n > 4) throw config_error("Mat: n out of range [1,4]");
  Mat m;
  m.n = n;
  return m;
}

Mat mat_identity(int n) {
  Mat m = mat_zero(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat mat_from_key(int n, uint64_t key) {
  Mat m = mat_zero(n);
  for (int i = n * n - 1; i >= 0; --i) {
    m.e[i] = key & 0xf;
    key >>= 4;
  }
  return m;
}

Mat permutation_matrix(int n, const std::vector<uint8_t>& p) {
  Mat m = mat_zero(n);
  for (int j = 0; j < n; ++j) m(p[j], j) = 1;
  return m;
}

Mat scalar_matrix(int n, int c) {
  Mat m = mat_zero(n);
  for (int i = 0; i < n; ++i) m(i, i) = uint8_t(c);
  return m;
}

Mat mat_mul(const Gf& F, const Mat& a, const Mat& b) {
  Mat c = mat_zero(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      int s = 0;
      for (int k = 0; k < a.n; ++k) s = F.add(s, F.mul(a(i, k), b(k, j)));
      c(i, j) = uint8_t(s);
    }
  return c;
}

Mat mat_add(const Gf& F, const Mat& a, const Mat& b) {
  Mat c = mat_zero(a.n);
  for (int i = 0; i < a.n * a.n; ++i) c.e[i] = uint8_t(F.add(a.e[i], b.e[i]));
  return c;
}

Mat mat_sub(const Gf& F, const Mat& a, const Mat& b) {
  Mat c = mat_zero(a.n);
  for (int i = 0; i < a.n * a.n; ++i) c.e[i] = uint8_t(F.sub(a.e[i], b.e[i]));
  return c;
}

int mat_rank(const Gf& F, Mat a) {
  const int n = a.n;
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int r = rank; r < n; ++r)
      if (a(r, col)) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(a(rank, j), a(piv, j));
    int s = F.inv(a(rank, col));
    for (int j = 0; j < n; ++j) a(rank, j) = uint8_t(F.mul(a(rank, j), s));
    for (int r = 0; r < n; ++r) {
      if (r == rank || !a(r, col)) continue;
      int f = a(r, col);
      for (int j = 0; j < n; ++j) a(r, j) = uint8_t(F.sub(a(r, j), F.mul(f, a(rank, j))));
    }
    ++rank;
  }
  return rank;
}

bool mat_invertible(const Gf& F, const Mat& a) { return mat_rank(F, a) == a.n; }

Mat mat_inverse(const Gf& F, Mat a) {
  const int n = a.n;
  Mat inv = mat_identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a(r, col)) {
        piv = r;
        break;
      }
    if (piv < 0) throw domain_error("mat_inverse: singular matrix");
    for (int j = 0; j < n; ++j) {
      std::swap(a(col, j), a(piv, j));
      std::swap(inv(col, j), inv(piv, j));
    }
    int s = F.inv(a(col, col));
    for (int j = 0; j < n; ++j) {
      a(col, j) = uint8_t(F.mul(a(col, j), s));
      inv(col, j) = uint8_t(F.mul(inv(col, j), s));
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || !a(r, col)) continue;
      int f = a(r, col);
      for (int j = 0; j < n; ++j) {
        a(r, j) = uint8_t(F.sub(a(r, j), F.mul(f, a(col, j))));
        inv(r, j) = uint8_t(F.sub(inv(r, j), F.mul(f, inv(col, j))));
      }
    }
  }
  return inv;
}

Mat mat_frobenius(const Gf& F, const Mat& a, int j) {
  Mat b = mat_zero(a.n);
  for (int i = 0; i < a.n * a.n; ++i) b.e[i] = uint8_t(F.frobenius_iter(a.e[i], j));
  return b;
}

bool mat_in_subfield(const Gf& F, const Mat& a, int j) {
  for (int i = 0; i < a.n * a.n; ++i)
    if (F.frobenius_iter(a.e[i], j) != a.e[i]) return false;
  return true;
}

bool is_unipotent(const Gf& F, const Mat& u) {
  Mat nil = mat_sub(F, u, mat_identity(u.n));
  Mat pw = nil;
  for (int i = 1; i < u.n; ++i) pw = mat_mul(F, pw, nil);
  return pw == mat_zero(u.n);
}

std::vector<int> jordan_type(const Gf& F, const Mat& u) {
  const int n = u.n;
  if (!is_unipotent(F, u)) throw domain_error("jordan_type: matrix is not unipotent");
  Mat nil = mat_sub(F, u, mat_identity(n));
  // Number of Jordan blocks of size >= i equals rank((u-1)^{i-1}) -
  // rank((u-1)^i); the block sizes are the conjugate of that sequence.
  std::vector<int> ranks{n};
  Mat pw = mat_identity(n);
  for (int i = 1; i <= n; ++i) {
    pw = mat_mul(F, pw, nil);
    ranks.push_back(mat_rank(F, pw));
  }
  std::vector<int> geq;
  for (int i = 1; i <= n; ++i) {
    int v = ranks[i - 1] - ranks[i];
    if (v > 0) geq.push_back(v);
  }
  // geq is weakly decreasing; its conjugate is the Jordan type.
  std::vector<int> lam;
  if (!geq.empty()) {
    lam.resize(geq.front(), 0);
    for (int v : geq)
      for (int i = 0; i < v; ++i) ++lam[i];
  }
  return lam;
}

Mat root_element(const Gf& F, int n, int i, int j, int t) {
  if (i == j) throw domain_error("root_element: i == j");
  Mat m = mat_identity(n);
  m(i, j) = uint8_t(t);
  (void)F;
  return m;
}

}  // namespace braidlab
