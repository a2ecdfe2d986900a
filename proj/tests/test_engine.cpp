#include "polyz/engine.hpp"
#include "polyz/g2.hpp"
#include "polyz/g3.hpp"
#include "polyz/presentation.hpp"
#include "polyz/presets.hpp"

#include "support.hpp"

#include <doctest.h>

#include <thread>

using namespace polyz;

namespace {

AutMatrix rows(std::vector<std::vector<Int>> r) { return AutMatrix::from_rows(r); }

} // namespace

TEST_CASE("is_automorphism")
{
  Tower z = Tower::integers();
  CHECK(z.is_automorphism(rows({{-1}}), {NormalWord{-1}}));
  CHECK_FALSE(z.is_automorphism(rows({{2}}), {NormalWord{1}}));
  CHECK_FALSE(z.is_automorphism(rows({{2}}), {NormalWord{0}}));

  Tower g2 = preset("g2");
  CHECK(g2.is_automorphism(rows({{-1, 1}, {0, 1}}), {NormalWord{-1, 0}, NormalWord{1, 1}}));
  // right matrix, wrong preimages
  CHECK_FALSE(g2.is_automorphism(rows({{-1, 1}, {0, 1}}), {NormalWord{1, 0}, NormalWord{1, 1}}));
  // not an endomorphism: g2 -> g2^2
  CHECK_FALSE(g2.preserves_relations(rows({{1, 0}, {0, 2}})));
  CHECK_FALSE(g2.is_automorphism(rows({{1, 0}, {0, 2}}), {NormalWord{1, 0}, NormalWord{0, 1}}));
  CHECK_THROWS(g2.is_automorphism(rows({{1}}), {NormalWord{1}}));
}

TEST_CASE("extend builds the presets")
{
  Tower z = Tower::integers();
  CHECK(z.extend(rows({{-1}}), {NormalWord{-1}}) == preset("g2"));
  Tower g2 = preset("g2");
  CHECK(g2.extend(rows({{-1, 1}, {0, 1}}), {NormalWord{-1, 0}, NormalWord{1, 1}}) == preset("b1"));
  CHECK_THROWS_AS(z.extend(rows({{2}}), {NormalWord{1}}), NotAnAutomorphism);

  // (Z x Z) x| Z with a det-1 matrix; the inverse is derived.
  Tower torus = preset("zxz").extend(rows({{2, 1}, {1, 1}}));
  CHECK(torus.rank() == 3);
  CHECK(torus.step(2).inverse == rows({{1, -1}, {-1, 2}}));
  CHECK(torus.mul(NormalWord{0, 0, 1}, NormalWord{1, 0, 0}) == NormalWord{2, 1, 1});
}

TEST_CASE("collect")
{
  Tower g2 = preset("g2");
  CHECK(g2.collect(parse_word("g2*g1", 2)) == NormalWord{-1, 1});
  for (const auto &name : preset_names()) {
    Tower t = preset(name);
    CHECK(t.collect(RawWord{}) == t.identity());
  }
  CHECK(preset("b1").collect(parse_word("g3*g2", 3)) == NormalWord{1, 1, 1});
}

TEST_CASE("mul, inv, pow examples")
{
  Tower g2 = preset("g2");
  Tower b1 = preset("b1");
  CHECK(g2.mul({1, 0}, {0, 1}) == NormalWord{1, 1});
  CHECK(g2.mul({0, 1}, {1, 0}) == NormalWord{-1, 1});
  CHECK(b1.mul({0, 0, 1}, {0, 1, 0}) == NormalWord{1, 1, 1});

  CHECK(g2.inv({1, 1}) == NormalWord{1, -1});
  CHECK(g2.inv({0, 0}) == NormalWord{0, 0});
  CHECK(b1.inv({0, 1, 0}) == NormalWord{0, -1, 0});

  CHECK(g2.pow({1, 1}, 2) == NormalWord{0, 2});
  CHECK(g2.pow({7, -3}, 1) == NormalWord{7, -3});
  CHECK(b1.pow({0, 1, 1}, 2) == NormalWord{-1, 2, 2});
}

TEST_CASE("apply, compose, aut_pow examples")
{
  Tower g2 = preset("g2");
  AutMatrix beta1 = rows({{-1, 1}, {0, 1}});
  CHECK(g2.apply(beta1, {1, 0}) == NormalWord{-1, 0});
  CHECK(g2.apply(AutMatrix::identity(2), {5, -4}) == NormalWord{5, -4});
  // (g1 g2)^2 = g2^2
  CHECK(g2.apply(beta1, {0, 2}) == NormalWord{0, 2});

  AutMatrix alpha1 = g2::matrix(g2::alpha(1));
  CHECK(g2.compose(alpha1, alpha1) == g2::matrix(g2::gamma(2)));

  Automorphism b = g2::automorphism(g2::beta(1));
  CHECK(g2.aut_pow(b, 0) == AutMatrix::identity(2));
  CHECK(g2.aut_pow(b, 2) == AutMatrix::identity(2));
  CHECK(g2.aut_pow(g2::automorphism(g2::gamma(3)), -4) == g2::matrix(g2::gamma(-12)));
}

TEST_CASE("centrality")
{
  CHECK(preset("a0").is_central({0, 0, 2}));
  CHECK(preset("a1").is_central({0, 0, 0}));
  CHECK_FALSE(preset("a1").is_central({0, 0, 2}));
  CHECK(preset("a1").mul({0, 0, 2}, {0, 1, 0}) == NormalWord{2, 1, 2});
  CHECK(preset("zxz").is_central({3, -7}));
  CHECK_FALSE(preset("g2").is_central({0, 1}));
  CHECK(preset("g2").is_central({0, 2}));
  CHECK(preset("g2").conjugate({1, 0}, {0, 1}) == NormalWord{2, 1});
  CHECK(preset("g2").commutes({5, 0}, {-2, 0}));
}

TEST_CASE("exact arithmetic beyond machine range")
{
  Tower b1 = preset("b1");
  Int big("1000000000000000000000000000001");
  NormalWord x = b1.pow({3, 1, 1}, big);
  CHECK(x == g3::pow(g3::Variant::B1, {3, 1, 1}, big));
  CHECK(b1.mul(x, b1.inv(x)) == b1.identity());
}

TEST_CASE("collection is idempotent on fuzzed words")
{
  for (const auto &name : preset_names()) {
    Tower t = preset(name);
    for (int i = 0; i < 300; ++i) {
      RawWord w;
      int len = int(test::uniform(0, 12));
      for (int k = 0; k < len; ++k)
        w.append(std::size_t(test::uniform(1, long(t.rank()))), test::uniform(-9, 9));
      NormalWord n = t.collect(w);
      CHECK(t.collect(parse_word(format_word(n), t.rank())) == n);
      CHECK(t.collect(n.to_raw()) == n);
    }
  }
}

TEST_CASE("group axioms on samples")
{
  for (const auto &name : preset_names()) {
    Tower t = preset(name);
    INFO(name);
    std::size_t bad = 0;
    for (int i = 0; i < 10000; ++i) {
      NormalWord x = test::random_word(t.rank(), 20);
      NormalWord y = test::random_word(t.rank(), 20);
      NormalWord z = test::random_word(t.rank(), 20);
      if (t.mul(t.mul(x, y), z) != t.mul(x, t.mul(y, z)))
        ++bad;
      if (t.mul(x, t.identity()) != x || t.mul(t.identity(), x) != x)
        ++bad;
      if (t.mul(x, t.inv(x)) != t.identity() || t.mul(t.inv(x), x) != t.identity())
        ++bad;
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("pow agrees with repeated multiplication")
{
  for (const auto &name : preset_names()) {
    Tower t = preset(name);
    for (int i = 0; i < 200; ++i) {
      NormalWord x = test::random_word(t.rank(), 10);
      long long m = test::uniform(-12, 12);
      NormalWord r = t.identity();
      NormalWord step = m < 0 ? t.inv(x) : x;
      for (long long k = 0; k < (m < 0 ? -m : m); ++k)
        r = t.mul(r, step);
      CHECK(t.pow(x, m) == r);
      CHECK(t.pow(x, -m) == t.inv(t.pow(x, m)));
    }
  }
}

namespace {

struct Case
{
  std::string preset;
  Automorphism aut;
};

std::vector<Case> verified_automorphisms()
{
  using namespace g3;
  std::vector<Case> out{
      {"g2", g2::automorphism(g2::alpha(3))},
      {"g2", g2::automorphism(g2::beta(-1))},
      {"g2", g2::automorphism(g2::delta(2))},
      {"zxz", {AutMatrix::from_rows({{2, 1}, {1, 1}}), AutMatrix::from_rows({{1, -1}, {-1, 2}})}},
      {"b1", automorphism(B1Aut{Family::Alpha, 2, Mat2{0, 1, 1, 0}})},
      {"b1", automorphism(B1Aut{Family::Delta, -1, Mat2{1, 2, 0, 1}})},
      {"a0", automorphism(A0Aut{Family::Beta, 3, -2, 1})},
      {"a1", automorphism(A1Aut{Family::Gamma, 2, corner_b(Family::Gamma, 1), 1, 1})},
      {"b0", automorphism(B0Aut{Family::Beta, 1, Mat2{1, 2, 2, 3}})},
  };
  return out;
}

} // namespace

TEST_CASE("verified automorphisms are homomorphisms")
{
  for (const auto &c : verified_automorphisms()) {
    Tower t = preset(c.preset);
    INFO(c.preset);
    REQUIRE(t.is_automorphism(c.aut.forward, c.aut.inverse.columns()));
    std::size_t bad = 0;
    for (int i = 0; i < 1000; ++i) {
      NormalWord x = test::random_word(t.rank(), 12);
      NormalWord y = test::random_word(t.rank(), 12);
      if (t.apply(c.aut.forward, t.mul(x, y)) != t.mul(t.apply(c.aut.forward, x), t.apply(c.aut.forward, y)))
        ++bad;
      if (t.apply(c.aut.inverse, t.apply(c.aut.forward, x)) != x)
        ++bad;
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("aut_pow matches conjugation by the new generator")
{
  for (const auto &c : verified_automorphisms()) {
    Tower h = preset(c.preset);
    Tower g = h.extend(c.aut.forward, c.aut.inverse.columns());
    const std::size_t n = h.rank();
    INFO(c.preset);
    for (int k = -6; k <= 6; ++k) {
      AutMatrix pk = h.aut_pow(c.aut, k);
      NormalWord top = g.generator(n + 1, k);
      for (int i = 0; i < 20; ++i) {
        NormalWord x = test::random_word(n, 10);
        NormalWord conj = g.conjugate(top, x.resized(n + 1));
        CHECK(conj == h.apply(pk, x).resized(n + 1));
      }
    }
  }
}

TEST_CASE("solve_inverse")
{
  Tower zxz = preset("zxz");
  auto inv = zxz.solve_inverse(rows({{2, 1}, {1, 1}}));
  REQUIRE(inv);
  CHECK(zxz.is_automorphism(rows({{2, 1}, {1, 1}}), *inv));
  CHECK_FALSE(zxz.solve_inverse(rows({{2, 0}, {0, 1}})).has_value());

  Tower b1 = preset("b1");
  auto tri = b1.solve_inverse(rows({{1, 3, -2}, {0, 1, 4}, {0, 0, 1}}));
  REQUIRE(tri);
  CHECK(b1.apply(rows({{1, 3, -2}, {0, 1, 4}, {0, 0, 1}}), (*tri)[2]) == NormalWord{0, 0, 1});
}

TEST_CASE("towers are shareable across threads")
{
  Tower b1 = preset("b1");
  std::vector<NormalWord> results(4);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < results.size(); ++i)
    threads.emplace_back([&, i] {
      NormalWord acc = b1.identity();
      for (int k = 0; k < 500; ++k)
        acc = b1.mul(acc, NormalWord{Int(k % 5), 1, Int(i)});
      results[i] = acc;
    });
  for (auto &t : threads)
    t.join();
  for (std::size_t i = 0; i < results.size(); ++i) {
    NormalWord acc = b1.identity();
    for (int k = 0; k < 500; ++k)
      acc = b1.mul(acc, NormalWord{Int(k % 5), 1, Int(i)});
    CHECK(results[i] == acc);
  }
}
