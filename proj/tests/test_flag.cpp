#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "braidlab/flag.hpp"
#include "braidlab/typea.hpp"

using namespace braidlab;

TEST_CASE("Bruhat position of permutation and triangular matrices") {
  const Gf& F = Gf::get(2, 1);
  CHECK(bruhat_one_line(F, mat_identity(3)) == std::vector<uint8_t>{0, 1, 2});

  // every permutation matrix sits in its own cell
  std::vector<std::vector<uint8_t>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& p : perms)
    CHECK(bruhat_one_line(F, permutation_matrix(3, p)) == p);

  Mat x = mat_zero(2);  // [[1,1],[1,0]]: reduces to the swap
  x(0, 0) = 1;
  x(0, 1) = 1;
  x(1, 0) = 1;
  CHECK(bruhat_one_line(F, x) == std::vector<uint8_t>{1, 0});

  Mat sing = mat_zero(2);
  sing(0, 0) = 1;
  CHECK_THROWS_AS(bruhat_one_line(F, sing), domain_error);
}

TEST_CASE("Bruhat position is invariant under the triangular subgroup") {
  const GlGroup& G = GlGroup::get(3, 2, 1);
  const Gf& F = G.field();
  std::vector<Mat> borel;
  for (int i = 0; i < G.size(); ++i) {
    const Mat& m = G.element(i);
    bool upper = true;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < r; ++c)
        if (m(r, c) != 0) upper = false;
    if (upper) borel.push_back(m);
  }
  CHECK(int(borel.size()) == 8);  // (q-1)^3 q^3 at q = 2
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pg(0, G.size() - 1), pb(0, int(borel.size()) - 1);
  for (int trial = 0; trial < 200; ++trial) {
    Mat x = G.element(pg(rng));
    auto w = bruhat_one_line(F, x);
    Mat bxb = mat_mul(F, borel[size_t(pb(rng))], mat_mul(F, x, borel[size_t(pb(rng))]));
    CHECK(bruhat_one_line(F, bxb) == w);
  }
}

TEST_CASE("flag counts") {
  {
    const GlGroup& G = GlGroup::get(2, 2, 1);
    FlagVariety full(G, 0u);
    CHECK(full.size() == 3);  // P^1(F_2)
    FlagVariety point(G, 1u << 0);
    CHECK(point.size() == 1);
  }
  {
    const GlGroup& G = GlGroup::get(3, 2, 1);
    FlagVariety full(G, 0u);
    CHECK(full.size() == 21);  // 7 * 3
    FlagVariety lines(G, 1u << 1);  // only the dim-1 step survives
    CHECK(lines.size() == 7);
    FlagVariety planes(G, 1u << 0);
    CHECK(planes.size() == 7);
    CHECK(int(full.parabolic_elems().size()) * full.size() == G.size());
    CHECK(int(lines.parabolic_elems().size()) * lines.size() == G.size());
  }
  {
    const GlGroup& G = GlGroup::get(2, 3, 1);
    FlagVariety full(G, 0u);
    CHECK(full.size() == 4);  // P^1(F_3)
  }
}

TEST_CASE("group action on flags") {
  const GlGroup& G = GlGroup::get(3, 2, 1);
  FlagVariety V(G, 0u);
  // action is a permutation action with the parabolic as point stabilizer
  int stab = 0;
  for (int g = 0; g < G.size(); ++g)
    if (V.act(g, V.standard()) == V.standard()) ++stab;
  CHECK(stab == int(V.parabolic_elems().size()));
  // transitivity
  std::set<int> orbit;
  for (int g = 0; g < G.size(); ++g) orbit.insert(V.flag_of_elem_index(g));
  CHECK(int(orbit.size()) == V.size());
  // compatibility: act(g, f) = flag of g * transporter(f)
  const Gf& F = G.field();
  for (int f = 0; f < V.size(); ++f) {
    CHECK(V.flag_of(V.transporter(f)) == f);
    CHECK(mat_mul(F, V.transporter(f), V.transporter_inv(f)) == mat_identity(3));
    for (int g = 0; g < 20; ++g)
      CHECK(V.act(g, f) == V.flag_of(mat_mul(F, G.element(g), V.transporter(f))));
  }
}

TEST_CASE("relative positions of full flags") {
  const GlGroup& G = GlGroup::get(2, 2, 1);
  WeylGroup W(RootSystem::build(CartanType::A, 1));
  FlagVariety V(G, 0u);
  int std_f = V.standard();
  CHECK(relative_position(W, G.field(), V, std_f, V, std_f) == W.identity());
  int opp = V.flag_of(permutation_matrix(2, {1, 0}));
  CHECK(relative_position(W, G.field(), V, std_f, V, opp) == W.generator(0));
  // table agrees with the pointwise computation
  RelPosTable tab(W, V);
  for (int f1 = 0; f1 < V.size(); ++f1)
    for (int f2 = 0; f2 < V.size(); ++f2)
      CHECK(tab.at(f1, f2) == relative_position(W, G.field(), V, f1, V, f2));
}

TEST_CASE("relative position of a partial flag pair hits a coset minimum") {
  const GlGroup& G = GlGroup::get(4, 2, 1);
  WeylGroup W(RootSystem::build(CartanType::A, 3));
  uint32_t I = 1u << 1;
  FlagVariety V(G, I);
  int w = element_of_one_line(W, {3, 1, 2, 0});
  Mat wm = permutation_matrix(4, one_line_of(W, w));
  int f2 = V.flag_of(wm);
  CHECK(relative_position(W, G.field(), V, V.standard(), V, f2) == w);
}

TEST_CASE("relative position is invariant under the diagonal action") {
  struct Cfg {
    int n, p;
  };
  for (auto [n, p] : {Cfg{2, 2}, Cfg{3, 2}, Cfg{2, 3}}) {
    const GlGroup& G = GlGroup::get(n, p, 1);
    WeylGroup W(RootSystem::build(CartanType::A, n - 1));
    FlagVariety V(G, 0u);
    RelPosTable tab(W, V);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> pf(0, V.size() - 1), pg(0, G.size() - 1);
    for (int trial = 0; trial < 1000; ++trial) {
      int f1 = pf(rng), f2 = pf(rng), g = pg(rng);
      CHECK(tab.at(V.act(g, f1), V.act(g, f2)) == tab.at(f1, f2));
    }
  }
}
