#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <queue>
#include <random>
#include <set>

#include "braidlab/braid.hpp"
#include "braidlab/typea.hpp"
#include "braidlab/weyl.hpp"

using namespace braidlab;

namespace {

RootVec rvec(std::initializer_list<int> v) {
  RootVec r(int(v.size()));
  int i = 0;
  for (int x : v) r[i++] = x;
  return r;
}

// Word-rewriting oracle for rank-2 positive braid monoids: the
// equivalence closure of a word under the single braid relation
// sts... = tst... (m letters each side).
struct Rank2WordOracle {
  int m;

  std::string alternating(int first, int len) const {
    std::string s;
    for (int i = 0; i < len; ++i) s.push_back(char('0' + ((first + i) % 2)));
    return s;
  }

  std::set<std::string> closure(const std::string& start) const {
    std::set<std::string> seen{start};
    std::queue<std::string> todo;
    todo.push(start);
    const std::string rel0 = alternating(0, m), rel1 = alternating(1, m);
    while (!todo.empty()) {
      std::string w = todo.front();
      todo.pop();
      for (size_t i = 0; i + m <= w.size(); ++i) {
        std::string sub = w.substr(i, m);
        std::string flip;
        if (sub == rel0) flip = rel1;
        else if (sub == rel1) flip = rel0;
        else continue;
        std::string w2 = w.substr(0, i) + flip + w.substr(i + m);
        if (seen.insert(w2).second) todo.push(w2);
      }
    }
    return seen;
  }
};

Braid braid_of_word(const WeylGroup& W, const std::string& word) {
  Braid b(W);
  for (char c : word) b = b * Braid::embed(W, W.generator(c - '0'));
  return b;
}

bool left_weak_below(const WeylGroup& W, int u, int a) {
  return W.length(W.multiply(W.inverse(u), a)) == W.length(a) - W.length(u);
}

}  // namespace

TEST_CASE("root system construction and counts") {
  struct Row {
    CartanType t;
    int rank, pos;
  };
  const Row rows[] = {{CartanType::A, 1, 1},  {CartanType::A, 2, 3},  {CartanType::A, 3, 6},
                      {CartanType::A, 4, 10}, {CartanType::A, 5, 15}, {CartanType::A, 6, 21},
                      {CartanType::B, 2, 4},  {CartanType::B, 3, 9},  {CartanType::B, 4, 16},
                      {CartanType::C, 2, 4},  {CartanType::C, 3, 9},  {CartanType::C, 4, 16},
                      {CartanType::D, 4, 12}, {CartanType::G, 2, 6}};
  for (const Row& r : rows) {
    auto rs = RootSystem::build(r.t, r.rank);
    CHECK(rs.num_positive() == r.pos);
    CHECK(rs.num_roots() == 2 * r.pos);
    for (int i = 0; i < rs.num_roots(); ++i) {
      CHECK(rs.root(rs.negate(i)) == -rs.root(i));
      for (int s = 0; s < r.rank; ++s)
        CHECK(rs.reflect_root(s, rs.reflect_root(s, i)) == i);
    }
  }
  CHECK_THROWS_AS(RootSystem::build(CartanType::A, 7), config_error);
  CHECK_THROWS_AS(RootSystem::build(CartanType::D, 5), config_error);
  CHECK_THROWS_AS(RootSystem::build(CartanType::G, 3), config_error);
  CHECK_THROWS_AS(RootSystem::build(CartanType::B, 1), config_error);
}

TEST_CASE("reflection arithmetic in A2") {
  auto rs = RootSystem::build(CartanType::A, 2);
  CHECK(rs.reflect(0, rvec({1, 0})) == rvec({-1, 0}));
  CHECK(rs.reflect(0, rvec({0, 1})) == rvec({1, 1}));
  CHECK(rs.reflect(1, rvec({1, 1})) == rvec({1, 0}));
  CHECK_THROWS_AS(rs.reflect(0, rvec({2, 0})), domain_error);
}

TEST_CASE("longest word maps positives onto negatives") {
  for (auto [t, r] : {std::pair{CartanType::A, 3}, {CartanType::B, 3}, {CartanType::G, 2}}) {
    WeylGroup W(RootSystem::build(t, r));
    int w0 = W.longest_element();
    CHECK(W.length(w0) == W.roots().num_positive());
    for (int i = 0; i < W.roots().num_positive(); ++i)
      CHECK_FALSE(W.roots().is_positive(W.act_root(w0, i)));
  }
}

TEST_CASE("Weyl group orders and length = inversion count") {
  struct Row {
    CartanType t;
    int rank;
    int order;
  };
  const Row rows[] = {{CartanType::A, 2, 6},   {CartanType::A, 3, 24}, {CartanType::A, 5, 720},
                      {CartanType::B, 2, 8},   {CartanType::B, 3, 48}, {CartanType::B, 4, 384},
                      {CartanType::D, 4, 192}, {CartanType::G, 2, 12}};
  for (const Row& r : rows) {
    WeylGroup W(RootSystem::build(r.t, r.rank));
    CHECK(W.size() == r.order);
    if (W.size() <= 48)
      for (int a = 0; a < W.size(); ++a)
        CHECK(W.length(a) == int(W.inversion_set(a).size()));
  }
}

TEST_CASE("composition convention: rightmost letter first") {
  WeylGroup W(RootSystem::build(CartanType::A, 2));
  int s1 = W.generator(0), s2 = W.generator(1);
  CHECK(W.multiply(s1, s1) == W.identity());
  int w = W.multiply(s1, s2);
  CHECK(W.length(w) == 2);
  CHECK(one_line_of(W, w) == std::vector<uint8_t>{1, 2, 0});
  int w0 = W.longest_element();
  CHECK(W.multiply(w0, w0) == W.identity());
}

TEST_CASE("inversion sets") {
  WeylGroup W(RootSystem::build(CartanType::A, 2));
  CHECK(W.inversion_set(W.identity()).empty());
  CHECK(W.inversion_set(W.longest_element()).size() == 3);
  auto inv = W.inversion_set(W.generator(0));
  REQUIRE(inv.size() == 1);
  CHECK(inv[0] == W.roots().simple_root_index(0));
}

TEST_CASE("longest elements of parabolics") {
  WeylGroup W3(RootSystem::build(CartanType::A, 3));
  CHECK(W3.longest_element(0u) == W3.identity());
  CHECK(W3.longest_element(1u << 1) == W3.generator(1));
  WeylGroup W2(RootSystem::build(CartanType::A, 2));
  int w0 = W2.longest_element(0b11);
  CHECK(W2.length(w0) == 3);
  CHECK(W2.word(w0) == std::vector<uint8_t>{0, 1, 0});
}

TEST_CASE("minimal double coset representatives") {
  WeylGroup W(RootSystem::build(CartanType::A, 3));
  for (int w = 0; w < W.size(); ++w) CHECK(W.min_double_coset_rep(0, w, 0) == w);
  int w = element_of_one_line(W, {3, 1, 2, 0});
  CHECK(W.length(w) == 5);
  CHECK(W.is_min_rep(1u << 1, w, 1u << 1));
  WeylGroup W2(RootSystem::build(CartanType::A, 2));
  CHECK(W2.min_double_coset_rep(1u << 0, W2.generator(0), 0) == W2.identity());
}

TEST_CASE("type A bridge roundtrip and cycle types") {
  WeylGroup W(RootSystem::build(CartanType::A, 3));
  for (int w = 0; w < W.size(); ++w)
    CHECK(element_of_one_line(W, one_line_of(W, w)) == w);
  CHECK(cycle_type({1, 2, 0, 3}) == std::vector<int>{3, 1});
  CHECK(cycle_count({0, 1, 2, 3}) == 4);
}

TEST_CASE("twists") {
  auto rsA2 = RootSystem::build(CartanType::A, 2);
  Twist flip = flip_twist(rsA2);
  CHECK(flip.order == 2);
  CHECK(flip.simple_perm == std::vector<int>{1, 0});
  auto rsD4 = RootSystem::build(CartanType::D, 4);
  Twist rot = triality_twist(rsD4);
  CHECK(rot.order == 3);
  CHECK_THROWS_AS(make_twist(RootSystem::build(CartanType::B, 2), {1, 0}, "bad"), config_error);

  WeylGroup W(std::move(rsA2));
  int s1 = W.generator(0), s2 = W.generator(1);
  CHECK(W.apply_twist(flip, s1) == s2);
  CHECK(W.apply_twist(flip, W.multiply(s1, s2)) == W.multiply(s2, s1));
  Twist id = identity_twist(W.roots());
  for (int w = 0; w < W.size(); ++w) CHECK(W.apply_twist(id, w) == w);
}

TEST_CASE("twisted conjugacy classes") {
  WeylGroup W1(RootSystem::build(CartanType::A, 1));
  CHECK(twisted_conjugacy_classes(W1, identity_twist(W1.roots())).size() == 2);

  WeylGroup W(RootSystem::build(CartanType::A, 2));
  auto cls = twisted_conjugacy_classes(W, identity_twist(W.roots()));
  REQUIRE(cls.size() == 3);
  std::multiset<size_t> sizes;
  for (const auto& c : cls) sizes.insert(c.members.size());
  CHECK(sizes == std::multiset<size_t>{1, 2, 3});
  // identity class is not elliptic, Coxeter class is
  CHECK_FALSE(cls[0].is_elliptic);
  for (const auto& c : cls)
    if (c.min_length == 2) CHECK(c.is_elliptic);

  // flip classes of S_3: {e, s1s2, s2s1}, {s1, s2}, {w0}
  Twist flip = flip_twist(W.roots());
  auto fcls = twisted_conjugacy_classes(W, flip);
  REQUIRE(fcls.size() == 3);
  const auto& id_class = fcls[0];
  std::set<int> members(id_class.members.begin(), id_class.members.end());
  std::set<int> expected{W.identity(), W.multiply(W.generator(0), W.generator(1)),
                         W.multiply(W.generator(1), W.generator(0))};
  CHECK(members == expected);

  // class count of S_n = number of partitions of n
  const int partition_counts[] = {0, 1, 2, 3, 5, 7, 11};
  for (int n = 2; n <= 6; ++n) {
    WeylGroup Wn(RootSystem::build(CartanType::A, n - 1));
    auto cl = twisted_conjugacy_classes(Wn, identity_twist(Wn.roots()));
    CHECK(int(cl.size()) == partition_counts[n]);
    size_t total = 0;
    for (const auto& c : cl) total += c.members.size();
    CHECK(total == size_t(Wn.size()));
  }
}

TEST_CASE("elliptic flag matches the direct definition") {
  for (auto [t, r] : {std::pair{CartanType::A, 3}, {CartanType::B, 3}, {CartanType::G, 2}}) {
    WeylGroup W(RootSystem::build(t, r));
    for (const Twist& tw : {identity_twist(W.roots())}) {
      for (const auto& c : twisted_conjugacy_classes(W, tw)) {
        bool meets_proper = false;
        for (uint32_t I = 0; I + 1u < (1u << W.rank()) && !meets_proper; ++I) {
          bool stable = true;
          for (int s = 0; s < W.rank(); ++s)
            if ((I >> s) & 1 && !((I >> tw.simple_perm[s]) & 1)) stable = false;
          if (!stable) continue;
          for (int m : c.members)
            if (W.in_parabolic(m, I)) {
              meets_proper = true;
              break;
            }
        }
        CHECK(c.is_elliptic == !meets_proper);
      }
    }
  }
}

TEST_CASE("braid embedding and products") {
  WeylGroup W(RootSystem::build(CartanType::A, 2));
  int s1 = W.generator(0), s2 = W.generator(1), w0 = W.longest_element();

  CHECK(Braid::embed(W, W.identity()).canonical_length() == 0);
  CHECK(Braid::embed(W, w0).factors() == std::vector<int>{w0});

  Braid b12 = Braid::embed(W, s1) * Braid::embed(W, s2);
  CHECK(b12.factors() == std::vector<int>{W.multiply(s1, s2)});
  Braid b11 = Braid::embed(W, s1) * Braid::embed(W, s1);
  CHECK(b11.factors() == std::vector<int>{s1, s1});
  CHECK(b11.alpha() == s1);

  Braid cox = Braid::embed(W, W.multiply(s1, s2));
  Braid delta2 = cox.twisted_power(identity_twist(W.roots()), 3);
  CHECK(delta2.factors() == std::vector<int>{w0, w0});
  CHECK(delta2.alpha() == w0);

  CHECK(simple_left_divides(W, W.identity(), b11));
  CHECK(simple_left_divides(W, w0, delta2));
  Braid s1_5 = Braid::from_factors(W, {s1, s1, s1, s1, s1});
  CHECK_FALSE(simple_left_divides(W, w0, s1_5));

  Twist flip = flip_twist(W.roots());
  Braid tp = cox.twisted_power(flip, 2);
  CHECK(tp.alpha() == W.multiply(s1, s2));
  CHECK(tp.letter_length() == 4);
}

TEST_CASE("normal form properties on random products") {
  std::mt19937 rng(20260826);
  for (auto [t, r] : {std::pair{CartanType::A, 3}, {CartanType::B, 3}}) {
    WeylGroup W(RootSystem::build(t, r));
    std::uniform_int_distribution<int> pick(0, W.size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<int> factors;
      int letters = 0;
      for (int i = 0; i < 4; ++i) {
        factors.push_back(pick(rng));
        letters += W.length(factors.back());
      }
      Braid b = Braid::from_factors(W, factors);
      CHECK(b.letter_length() == letters);
      for (int i = 0; i + 1 < b.canonical_length(); ++i) {
        uint32_t ld = W.left_descents(b.factors()[i + 1]);
        uint32_t rd = W.right_descents(b.factors()[i]);
        CHECK((ld & ~rd) == 0u);
      }
      int proj = W.identity();
      for (int f : factors) proj = W.multiply(proj, f);
      CHECK(b.project() == proj);

      // associativity of the three-way split
      Braid x = Braid::embed(W, factors[0]), y = Braid::embed(W, factors[1]),
            z = Braid::embed(W, factors[2]);
      CHECK(((x * y) * z) == (x * (y * z)));
    }
    // reduced products embed to a single factor
    std::uniform_int_distribution<int> g(0, W.rank() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      int u = pick(rng), s = W.generator(g(rng));
      int us = W.multiply(u, s);
      if (W.length(us) == W.length(u) + 1)
        CHECK(Braid::embed(W, u) * Braid::embed(W, s) == Braid::embed(W, us));
    }
  }
}

TEST_CASE("alpha maximality against the word-rewriting oracle") {
  std::mt19937 rng(7);
  for (auto [t, m] : {std::pair{CartanType::A, 3}, {CartanType::B, 4}}) {
    WeylGroup W(RootSystem::build(t, 2));
    Rank2WordOracle oracle{m};
    std::uniform_int_distribution<int> len(1, 8), letter(0, 1);
    for (int trial = 0; trial < 60; ++trial) {
      std::string word;
      int L = len(rng);
      for (int i = 0; i < L; ++i) word.push_back(char('0' + letter(rng)));
      Braid b = braid_of_word(W, word);
      CHECK(b.letter_length() == L);
      auto cls = oracle.closure(word);

      // oracle divisor set: u divides b iff some equivalent word starts
      // with a reduced word of u
      for (int u = 0; u < W.size(); ++u) {
        bool oracle_divides = false;
        const int lu = W.length(u);
        for (const auto& v : cls) {
          if (int(v.size()) < lu) continue;
          std::vector<int> prefix;
          for (int i = 0; i < lu; ++i) prefix.push_back(v[i] - '0');
          if (W.from_word(prefix) == u) {
            oracle_divides = true;
            break;
          }
        }
        CHECK(simple_left_divides(W, u, b) == oracle_divides);
        CHECK(oracle_divides == left_weak_below(W, u, b.alpha()));
      }

      // braid equality matches word equivalence
      std::string other;
      for (int i = 0; i < L; ++i) other.push_back(char('0' + letter(rng)));
      CHECK((braid_of_word(W, other) == b) == (cls.count(other) > 0));
    }
  }
}

TEST_CASE("twisted element orders") {
  WeylGroup W(RootSystem::build(CartanType::A, 2));
  Twist id = identity_twist(W.roots());
  CHECK(twisted_element_order(W, id, W.identity()) == 1);
  CHECK(twisted_element_order(W, id, W.generator(0)) == 2);
  CHECK(twisted_element_order(W, id, W.multiply(W.generator(0), W.generator(1))) == 3);
  Twist flip = flip_twist(W.roots());
  CHECK(twisted_element_order(W, flip, W.identity()) == 2);
}
