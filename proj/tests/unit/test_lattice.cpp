#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "cohfm/error.hpp"
#include "cohfm/ns_lattice.hpp"
#include "cohfm/ring.hpp"
#include "doctest.h"

using namespace cohfm;

TEST_SUITE_BEGIN("lattice");

namespace {

const NSClass E{1, 0, 0};
const NSClass F{0, 1, 0};
const NSClass D{0, 0, 1};

std::mt19937_64 g_rng(0x1a771ce);

long draw(long lo, long hi) {
  return lo + static_cast<long>(g_rng() % static_cast<unsigned long long>(hi - lo + 1));
}

SL2Element random_sl2() {
  while (true) {
    const long a = draw(-15, 15), b = draw(-15, 15);
    if (std::gcd(a, b) != 1) continue;
    long r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      const long q = r0 / r1;
      long tmp = r0 - q * r1;
      r0 = r1;
      r1 = tmp;
      tmp = s0 - q * s1;
      s0 = s1;
      s1 = tmp;
      tmp = t0 - q * t1;
      t0 = t1;
      t1 = tmp;
    }
    long s = s0, t = t0;
    if (r0 == -1) {
      s = -s;
      t = -t;
    }
    const long shift = draw(-2, 2);
    return SL2Element(a, b, -t + shift * a, s + shift * b);
  }
}

}  // namespace

TEST_CASE("intersection form") {
  CHECK(ns_intersect(E, F) == 1);
  CHECK(ns_intersect(E, D) == 1);
  CHECK(ns_intersect(F, D) == 1);
  CHECK(ns_intersect(E, E) == 0);
  CHECK(ns_intersect(F, F) == 0);
  CHECK(ns_intersect(D, D) == 0);
  CHECK(ns_intersect(slope_curve(2, 3), E) == 9);  // b^2
}

TEST_CASE("the form agrees with the ExE ring model") {
  const RingModelPtr exe = builtin_model("ExE");
  auto as_ring_class = [&](const NSClass& u) {
    return u.x * exe->basis_class("E") + u.y * exe->basis_class("F") +
           u.z * exe->basis_class("D");
  };
  for (int trial = 0; trial < 100; ++trial) {
    const NSClass u{Rat(draw(-9, 9)), Rat(draw(-9, 9)), Rat(draw(-9, 9))};
    const NSClass v{Rat(draw(-9, 9)), Rat(draw(-9, 9)), Rat(draw(-9, 9))};
    CHECK(ns_intersect(u, v) == integrate(mul(as_ring_class(u), as_ring_class(v))));
  }
}

TEST_CASE("slope curves") {
  CHECK(slope_curve(1, 0) == E);
  CHECK(slope_curve(0, 1) == F);
  CHECK(slope_curve(1, 1) == D);
  CHECK_THROWS_AS(slope_curve(2, 4), Error);
  CHECK_THROWS_AS(slope_curve(0, 0), Error);

  for (long a = -12; a <= 12; ++a)
    for (long b = -12; b <= 12; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const NSClass c = slope_curve(a, b);
      CHECK(ns_intersect(c, E) == Rat(b) * Rat(b));
      CHECK(ns_intersect(c, F) == Rat(a) * Rat(a));
      CHECK(ns_intersect(c, D) == Rat(a - b) * Rat(a - b));
      // null classes: x y + x z + y z = 0, i.e. self-intersection zero
      CHECK(ns_intersect(c, c) == 0);
    }
}

TEST_CASE("induced action") {
  SUBCASE("identity") {
    const NSMatrix m = induced_action(SL2Element(1, 0, 0, 1));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(m[i][j] == (i == j ? 1 : 0));
  }
  SUBCASE("the quarter turn swaps the factors") {
    const NSMatrix m = induced_action(SL2Element(0, -1, 1, 0));
    CHECK(apply_ns(m, E) == F);
    CHECK(apply_ns(m, F) == E);
    CHECK(apply_ns(m, D) == NSClass{2, 2, -1});  // image of the diagonal
  }
  SUBCASE("determinant constraint") {
    CHECK_THROWS_AS(SL2Element(1, 1, 1, 1), Error);
    CHECK_THROWS_AS(SL2Element(2, 0, 0, 2), Error);
  }
  SUBCASE("form preservation, 100 random elements") {
    for (int trial = 0; trial < 100; ++trial) {
      const NSMatrix m = induced_action(random_sl2());
      const NSClass images[3] = {apply_ns(m, E), apply_ns(m, F), apply_ns(m, D)};
      const NSClass basis[3] = {E, F, D};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          CHECK(ns_intersect(images[i], images[j]) == ns_intersect(basis[i], basis[j]));
    }
  }
  SUBCASE("homomorphism, 50 random pairs") {
    for (int trial = 0; trial < 50; ++trial) {
      const SL2Element g = random_sl2(), h = random_sl2();
      const NSMatrix mg = induced_action(g), mh = induced_action(h);
      const NSMatrix mgh = induced_action(g * h);
      for (const NSClass& basis : {E, F, D})
        CHECK(apply_ns(mgh, basis) == apply_ns(mg, apply_ns(mh, basis)));
    }
  }
  SUBCASE("first column is the slope curve") {
    for (int trial = 0; trial < 50; ++trial) {
      const SL2Element g = random_sl2();
      CHECK(apply_ns(induced_action(g), E) == slope_curve(g.a, g.b));
    }
  }
}

TEST_CASE("cone generators") {
  const auto gens1 = cone_generators(1);
  const auto has = [](const std::vector<NSTriple>& v, const NSTriple& t) {
    return std::find(v.begin(), v.end(), t) != v.end();
  };
  CHECK(has(gens1, {1, 0, 0}));
  CHECK(has(gens1, {0, 1, 0}));
  // The diagonal lies on the cone boundary too; it is the slope curve of
  // (1,1), so the boundary predicate admits three classes at height one.
  CHECK(has(gens1, {0, 0, 1}));
  CHECK(gens1.size() == 3);

  const auto gens2 = cone_generators(2);
  CHECK(has(gens2, {2, 2, -1}));
  CHECK(normalize_primitive({-2, -2, 1}) == NSTriple{2, 2, -1});

  for (const NSTriple& t : cone_generators(9)) {
    CHECK(t[0] * t[1] + t[0] * t[2] + t[1] * t[2] == 0);
    CHECK(normalize_primitive(t) == t);
  }

  CHECK(std::is_sorted(gens2.begin(), gens2.end()));
  CHECK_THROWS_AS(cone_generators(0), Error);

  SUBCASE("enumeration matches the slope-curve parameterization") {
    for (long height : {1L, 2L, 4L, 8L}) {
      std::set<NSTriple> from_pairs;
      for (long a = -3 * height; a <= 3 * height; ++a)
        for (long b = -3 * height; b <= 3 * height; ++b) {
          if ((a == 0 && b == 0) || std::gcd(a, b) != 1) continue;
          const NSTriple t{a * (a - b), b * (b - a), a * b};
          if (std::max({std::abs(t[0]), std::abs(t[1]), std::abs(t[2])}) > height) continue;
          from_pairs.insert(normalize_primitive(t));
        }
      const auto enumerated = cone_generators(height);
      CHECK(std::set<NSTriple>(enumerated.begin(), enumerated.end()) == from_pairs);
    }
  }
}

TEST_CASE("orientation helpers") {
  CHECK(normalize_primitive({-1, 2, 2}) == NSTriple{1, -2, -2});
  CHECK(orient_effective({1, -2, -2}) == NSTriple{-1, 2, 2});
  CHECK(orient_effective({2, 2, -1}) == NSTriple{2, 2, -1});
  CHECK(normalize_primitive({0, -3, 0}) == NSTriple{0, 1, 0});
}

TEST_CASE("orbit transitivity") {
  const OrbitReport h1 = orbit_transitivity(1);
  CHECK(h1.missed.empty());
  const auto reached = [](const OrbitReport& r, const NSTriple& t) {
    return std::find(r.reached.begin(), r.reached.end(), t) != r.reached.end();
  };
  CHECK(reached(h1, {0, 1, 0}));  // the other fiber class
  CHECK(reached(h1, {0, 0, 1}));  // the diagonal

  const OrbitReport h2 = orbit_transitivity(2);
  CHECK(h2.missed.empty());
  CHECK(reached(h2, {2, 2, -1}));

  CHECK(orbit_transitivity(8).missed.empty());
}

TEST_CASE("reverse Schwarz inequality") {
  SUBCASE("hand-checked pairs") {
    CHECK(ns_intersect(E, E) * ns_intersect(E, E) <= ns_intersect(E, E) * ns_intersect(E, E));
    const NSClass d = E + F;
    const NSClass h = E + F + D;
    // Gram arithmetic: (E+F).(E+F+D) = 2 + 2, (E+F)^2 = 2, (E+F+D)^2 = 6.
    const Rat dh = ns_intersect(d, h);
    CHECK(dh == 4);
    CHECK(ns_intersect(d, d) == 2);
    CHECK(ns_intersect(h, h) == 6);
    CHECK(dh * dh >= ns_intersect(d, d) * ns_intersect(h, h));
  }
  SUBCASE("no violations at small heights") {
    for (long height : {1L, 2L, 4L, 8L}) {
      const SchwarzReport report = reverse_schwarz_check(height);
      CHECK(report.violations.empty());
      CHECK(report.pairs_checked > 0);
    }
  }
}

TEST_SUITE_END();
