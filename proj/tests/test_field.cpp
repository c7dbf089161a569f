#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <set>

#include "braidlab/group.hpp"

using namespace braidlab;

TEST_CASE("field axioms, exhaustively, for small orders") {
  struct Cfg {
    int p, k;
  };
  for (auto [p, k] : {Cfg{2, 1}, Cfg{3, 1}, Cfg{5, 1}, Cfg{7, 1}, Cfg{2, 2},
                      Cfg{2, 3}, Cfg{2, 4}, Cfg{3, 2}}) {
    const Gf& F = Gf::get(p, k);
    int q = F.q();
    CHECK(q == [&] {
      int v = 1;
      for (int i = 0; i < k; ++i) v *= p;
      return v;
    }());
    for (int a = 0; a < q; ++a) {
      CHECK(F.add(a, 0) == a);
      CHECK(F.mul(a, 1) == a);
      CHECK(F.mul(a, 0) == 0);
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a != 0) {
        CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK(F.pow(a, q - 1) == 1);
      }
      for (int b = 0; b < q; ++b) {
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        CHECK(F.sub(F.add(a, b), b) == a);
        for (int c = 0; c < q; ++c) {
          CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
          CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
          CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        }
      }
    }
    // Frobenius is a field automorphism of order k
    for (int a = 0; a < q; ++a) {
      int x = a;
      for (int i = 0; i < k; ++i) x = F.frobenius(x);
      CHECK(x == a);
      for (int b = 0; b < q; ++b) {
        CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
        CHECK(F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b)));
      }
    }
    int prime_count = 0, fixed_all = 0;
    for (int a = 0; a < q; ++a) {
      if (F.in_prime_field(a)) ++prime_count;
      if (F.in_subfield(a, k)) ++fixed_all;
    }
    CHECK(prime_count == p);
    CHECK(fixed_all == q);
  }
  CHECK_THROWS_AS(Gf::get(4, 1), config_error);
  CHECK_THROWS_AS(Gf::get(2, 13), resource_error);
}

TEST_CASE("chosen moduli are the smallest irreducible polynomials") {
  CHECK(Gf::get(2, 2).modulus() == std::vector<int>{1, 1, 1});   // x^2 + x + 1
  CHECK(Gf::get(3, 2).modulus() == std::vector<int>{1, 0, 1});   // x^2 + 1
  CHECK(Gf::get(2, 3).modulus() == std::vector<int>{1, 1, 0, 1});  // x^3 + x + 1
}

TEST_CASE("intermediate subfield of F_16") {
  const Gf& F = Gf::get(2, 4);
  int count = 0;
  for (int a = 0; a < 16; ++a)
    if (F.in_subfield(a, 2)) ++count;
  CHECK(count == 4);  // the copy of F_4 inside F_16
}

TEST_CASE("matrix arithmetic") {
  const Gf& F = Gf::get(2, 1);
  Mat id = mat_identity(2);
  CHECK(mat_mul(F, id, id) == id);
  CHECK(mat_rank(F, id) == 2);

  Mat a = mat_zero(2);
  a(0, 0) = 1;
  a(0, 1) = 1;
  a(1, 0) = 1;
  CHECK(mat_rank(F, a) == 2);
  Mat ainv = mat_inverse(F, a);
  CHECK(mat_mul(F, a, ainv) == id);
  CHECK(mat_mul(F, ainv, a) == id);

  Mat sing = mat_zero(2);
  sing(0, 0) = 1;
  sing(1, 0) = 1;
  CHECK(mat_rank(F, sing) == 1);
  CHECK_FALSE(mat_invertible(F, sing));
  CHECK_THROWS_AS(mat_inverse(F, sing), domain_error);

  CHECK(mat_from_key(2, a.key()) == a);
  Mat p = permutation_matrix(3, {1, 2, 0});
  // column j has its 1 in row p[j]
  CHECK(p(1, 0) == 1);
  CHECK(p(2, 1) == 1);
  CHECK(p(0, 2) == 1);
}

TEST_CASE("permutation matrices compose like permutations") {
  const Gf& F = Gf::get(2, 1);
  // left factor applied second, matching matrix action on columns
  Mat a = permutation_matrix(3, {1, 0, 2});
  Mat b = permutation_matrix(3, {0, 2, 1});
  Mat ab = mat_mul(F, a, b);
  std::vector<uint8_t> comp(3);
  for (int j = 0; j < 3; ++j) comp[j] = uint8_t((std::array<int, 3>{1, 0, 2})[(std::array<int, 3>{0, 2, 1})[j]]);
  CHECK(ab == permutation_matrix(3, comp));
}

TEST_CASE("jordan types") {
  const Gf& F2 = Gf::get(2, 1);
  CHECK(jordan_type(F2, mat_identity(3)) == std::vector<int>{1, 1, 1});
  CHECK(jordan_type(F2, root_element(F2, 2, 0, 1, 1)) == std::vector<int>{2});
  Mat u = root_element(F2, 3, 0, 1, 1);
  CHECK(jordan_type(F2, u) == std::vector<int>{2, 1});
  Mat reg = mat_mul(F2, root_element(F2, 3, 0, 1, 1), root_element(F2, 3, 1, 2, 1));
  CHECK(jordan_type(F2, reg) == std::vector<int>{3});
  CHECK(is_unipotent(F2, reg));
  Mat notu = permutation_matrix(2, {1, 0});
  const Gf& F3 = Gf::get(3, 1);
  CHECK_FALSE(is_unipotent(F3, notu));
  CHECK_THROWS_AS(jordan_type(F3, notu), domain_error);
  // over F_2 the swap matrix is unipotent with a single 2-block
  CHECK(jordan_type(F2, permutation_matrix(2, {1, 0})) == std::vector<int>{2});
}

TEST_CASE("general linear group orders") {
  CHECK(gl_order(2, 2) == 6);
  CHECK(gl_order(2, 3) == 48);
  CHECK(gl_order(3, 2) == 168);
  CHECK(gl_order(2, 4) == 180);
  CHECK(gl_order(4, 2) == 20160);
  CHECK(gl_order(3, 4) == 181440);
}

TEST_CASE("group enumeration, inverses, closure") {
  struct Cfg {
    int n, p, k;
  };
  for (auto [n, p, k] : {Cfg{2, 2, 1}, Cfg{2, 3, 1}, Cfg{3, 2, 1}, Cfg{2, 2, 2}}) {
    const GlGroup& G = GlGroup::get(n, p, k);
    const Gf& F = G.field();
    long long q = 1;
    for (int i = 0; i < k; ++i) q *= p;
    CHECK(G.size() == gl_order(n, q));
    std::set<uint64_t> keys;
    for (int i = 0; i < G.size(); ++i) {
      keys.insert(G.element(i).key());
      CHECK(mat_invertible(F, G.element(i)));
      CHECK(G.index_of(G.element(i)) == i);
      CHECK(mat_mul(F, G.element(i), G.inverse_mat(i)) == mat_identity(n));
    }
    CHECK(int(keys.size()) == G.size());
    // keys sorted ascending
    for (int i = 1; i < G.size(); ++i)
      CHECK(G.element(i - 1).key() < G.element(i).key());
    // spot-check closure
    for (int a = 0; a < std::min(G.size(), 40); ++a)
      for (int b = 0; b < std::min(G.size(), 40); ++b)
        CHECK(G.mul(a, b) >= 0);
  }
}

TEST_CASE("unipotent census in GL_3(F_2)") {
  const GlGroup& G = GlGroup::get(3, 2, 1);
  int unip = 0;
  for (int i = 0; i < G.size(); ++i)
    if (is_unipotent(G.field(), G.element(i))) ++unip;
  CHECK(unip == 64);  // q^(n(n-1)) with q=2, n=3
}

TEST_CASE("resource bound on group size") {
  CHECK_THROWS_AS(GlGroup::get(4, 3, 1), resource_error);
}

TEST_CASE("disk cache roundtrip") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "braidlab_cache_test";
  fs::create_directories(dir);
  setenv("BRAIDLAB_CACHE_DIR", dir.c_str(), 1);
  const GlGroup& G = GlGroup::get(2, 5, 1);  // first touch writes the cache
  CHECK(G.size() == gl_order(2, 5));
  bool found = false;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().filename().string().find("gl_2_5_1") != std::string::npos) found = true;
  CHECK(found);
  unsetenv("BRAIDLAB_CACHE_DIR");
  fs::remove_all(dir);
}
