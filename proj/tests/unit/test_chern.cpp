#include <random>

#include "cohfm/chern.hpp"
#include "cohfm/error.hpp"
#include "cohfm/isogeny.hpp"
#include "doctest.h"

using namespace cohfm;

TEST_SUITE_BEGIN("chern");

namespace {

ChernClasses classes_on_v(const Rat& rank, const CohClass& c1, const CohClass& c2,
                          const CohClass& c3) {
  return {rank, c1, c2, c3};
}

}  // namespace

TEST_CASE("character of O_V(H)") {
  const RingModelPtr v = builtin_model("V");
  const CohClass H = v->basis_class("H");
  const ChernCharacter ch = ch_from_c(classes_on_v(Rat(1), H, v->zero(), v->zero()));
  CHECK(ch == parse_class("[V] + [H] + 8[e] + 8[l] + 8/3[pt]", v));
  CHECK(ch == line_bundle_character(H));

  const ChernClasses back = c_from_ch(ch);
  CHECK(back.rank == 1);
  CHECK(back.c1 == H);
  CHECK(back.c2.is_zero());
  CHECK(back.c3.is_zero());
}

TEST_CASE("trivial bundles and bare ranks") {
  const RingModelPtr v = builtin_model("V");
  CHECK(ch_from_c(classes_on_v(Rat(7), v->zero(), v->zero(), v->zero())) == Rat(7) * v->unit());
  const ChernClasses c = c_from_ch(Rat(5) * v->unit());
  CHECK(c.rank == 5);
  CHECK(c.c1.is_zero());
  CHECK(c.c2.is_zero());
  CHECK(c.c3.is_zero());
}

TEST_CASE("c1 = 0 inversion") {
  const RingModelPtr v = builtin_model("V");
  const CohClass ch2 = Rat(3) * v->basis_class("e") - Rat(2) * v->basis_class("l");
  const CohClass ch3 = rat(7, 2) * v->point_class();
  const ChernCharacter ch = Rat(4) * v->unit() + ch2 + ch3;
  const ChernClasses c = c_from_ch(ch);
  CHECK(c.c2 == -ch2);
  CHECK(c.c3 == Rat(2) * ch3);
  // oracle: substituting back through ch_from_c returns the input
  CHECK(ch_from_c(c) == ch);
}

TEST_CASE("conversion round-trips on random data") {
  const RingModelPtr v = builtin_model("V");
  std::mt19937_64 rng(0x11aa22bb);
  auto draw = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
  };
  for (int trial = 0; trial < 100; ++trial) {
    const CohClass c1 = Rat(draw(-6, 6)) * v->basis_class("H") + Rat(draw(-6, 6)) * v->basis_class("A");
    const CohClass c2 = rat(draw(-20, 20), draw(1, 4)) * v->basis_class("e") +
                        rat(draw(-20, 20), draw(1, 4)) * v->basis_class("l");
    const CohClass c3 = rat(draw(-20, 20), draw(1, 4)) * v->point_class();
    const ChernClasses c = classes_on_v(Rat(draw(-5, 5)), c1, c2, c3);
    const ChernClasses back = c_from_ch(ch_from_c(c));
    CHECK(back.rank == c.rank);
    CHECK(back.c1 == c.c1);
    CHECK(back.c2 == c.c2);
    CHECK(back.c3 == c.c3);
  }
}

TEST_CASE("non-integer rank is rejected") {
  const RingModelPtr v = builtin_model("V");
  CHECK_THROWS_WITH_AS(c_from_ch(rat(1, 2) * v->unit()), doctest::Contains("rank"), Error);
}

TEST_CASE("tensor") {
  const RingModelPtr v = builtin_model("V");
  const CohClass H = v->basis_class("H");
  const ChernCharacter lb = line_bundle_character(H);
  const ChernCharacter lb_inv = line_bundle_character(-H);
  CHECK(tensor(lb, lb_inv) == v->unit());
  CHECK(tensor(lb, v->unit()) == lb);
  CHECK(Rat(8) * lb_inv == parse_class("8 - 8[H] + 64[e] + 64[l] - 64/3[pt]", v));

  std::mt19937_64 rng(0x7e57);
  auto draw = [&](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
  };
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rat> a, b, c;
    for (int i = 0; i < 6; ++i) {
      a.push_back(rat(draw(-9, 9), draw(1, 3)));
      b.push_back(rat(draw(-9, 9), draw(1, 3)));
      c.push_back(rat(draw(-9, 9), draw(1, 3)));
    }
    const ChernCharacter x(v, a), y(v, b), z(v, c);
    CHECK(tensor(x, y) == tensor(y, x));
    CHECK(tensor(tensor(x, y), z) == tensor(x, tensor(y, z)));
  }
}

TEST_CASE("GRR pushforwards of the basic sheaves") {
  const RingModelPtr v = builtin_model("V");
  const RingModelPtr fiber = abelian_fiber_model();
  const RingModelPtr curve = rational_curve_model();

  SUBCASE("fiber with trivial normal bundle") {
    CHECK(grr_push(fiber->unit(), NormalBundleData::trivial(1), fiber_push_to_V()) ==
          v->basis_class("A"));
  }
  SUBCASE("section with normal bundle O(-1) + O(-1)") {
    const auto normal = NormalBundleData::line_bundles_on_curve({Rat(-1), Rat(-1)});
    CHECK(grr_push(curve->unit(), normal, section_push_to_V()) ==
          v->basis_class("e") + v->point_class());
    const CohClass ch_minus2 = curve->unit() - Rat(2) * curve->point_class();
    CHECK(grr_push(ch_minus2, normal, section_push_to_V()) ==
          v->basis_class("e") - v->point_class());
  }
  SUBCASE("trivial normal data degenerates to the plain pushforward") {
    const CohClass ch = Rat(3) * curve->unit() + rat(5, 2) * curve->point_class();
    CHECK(grr_push(ch, NormalBundleData::trivial(2), section_push_to_V()) ==
          apply(section_push_to_V(), ch));
  }
  SUBCASE("codimension mismatch is rejected") {
    CHECK_THROWS_WITH_AS(grr_push(curve->unit(), NormalBundleData::trivial(1), section_push_to_V()),
                         doctest::Contains("codimension"), Error);
  }
}

TEST_CASE("spectral characters") {
  const RingModelPtr v = builtin_model("V");
  CHECK(spectral_character(1, 0, 1) == v->basis_class("e") + v->point_class());
  CHECK(spectral_character(1, 0, -1) == v->basis_class("e") - v->point_class());
  CHECK(spectral_character(0, 0, 0).is_zero());
  // chi(L) = deg - g + 1
  CHECK(spectral_character_from_degree(1, 0, 0, 0) == spectral_character(1, 0, 1));
  CHECK(spectral_character_from_degree(1, 0, -2, 0) == spectral_character(1, 0, -1));
  CHECK(spectral_character_from_degree(2, 3, 4, 2) == spectral_character(2, 3, 3));

  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b)
      for (long chi = -4; chi <= 4; ++chi) {
        const ChernCharacter ch = spectral_character(a, b, chi);
        CHECK(ch.degree_part(0).is_zero());
        CHECK(ch.degree_part(2).is_zero());
      }
}

namespace {

// Independent oracle for the tangent series: expand (1+h)^(n+1) exactly and
// divide by each (1 + d h) with polynomial long division, truncating at h^3.
std::array<Rat, 4> tangent_series_oracle(int n, const std::vector<long>& degrees) {
  std::array<Rat, 4> num{Rat(1), Rat(0), Rat(0), Rat(0)};
  for (int rep = 0; rep < n + 1; ++rep) {
    std::array<Rat, 4> next{};
    for (int k = 0; k < 4; ++k) {
      next[k] = num[k];
      if (k > 0) next[k] += num[k - 1];
    }
    num = next;
  }
  for (long d : degrees) {
    // long division by (1 + d h): q_k = num_k - d q_{k-1}
    std::array<Rat, 4> q{};
    for (int k = 0; k < 4; ++k) {
      q[k] = num[k];
      if (k > 0) q[k] -= Rat(d) * q[k - 1];
    }
    num = q;
  }
  return num;
}

}  // namespace

TEST_CASE("complete intersection tangent classes") {
  SUBCASE("frozen values") {
    const auto main_ci = ci_tangent_chern(7, {2, 2, 2, 2});
    CHECK(main_ci.c1 == 0);
    CHECK(main_ci.c2 == 4);
    CHECK(main_ci.c3 == -8);
    CHECK(main_ci.degree == 16);
    CHECK(main_ci.integral_c3 == -128);

    const auto quintic = ci_tangent_chern(4, {5});
    CHECK(quintic.c1 == 0);
    CHECK(quintic.c2 == 10);
    CHECK(quintic.c3 == -40);
    CHECK(quintic.integral_c3 == -200);

    const auto p3 = ci_tangent_chern(3, {});
    CHECK(p3.c1 == 4);
    CHECK(p3.integral_c3 == 4);
  }
  SUBCASE("agrees with the long-division oracle") {
    const std::vector<std::vector<long>> degree_sets = {{}, {2}, {3}, {2, 2}, {2, 3}, {5},
                                                        {2, 2, 2, 2}, {4, 2}};
    for (int n = 3; n <= 8; ++n)
      for (const auto& degrees : degree_sets) {
        const auto got = ci_tangent_chern(n, degrees);
        const auto want = tangent_series_oracle(n, degrees);
        CHECK(got.c1 == want[1]);
        CHECK(got.c2 == want[2]);
        CHECK(got.c3 == want[3]);
      }
  }
  SUBCASE("c1 tracks the multidegree sum") {
    for (int n = 2; n <= 9; ++n) {
      const auto ci = ci_tangent_chern(n, {2, 3});
      CHECK(ci.c1 == Rat(n + 1 - 5));
    }
  }
}

TEST_CASE("euler characteristic bookkeeping") {
  CHECK(euler_resolution(-128, 64) == 0);
  CHECK(euler_resolution(-200, 0) == -200);
  CHECK(euler_resolution(10, 3) == 16);
}

TEST_CASE("default dual c2 of the tangent bundle") {
  const RingModelPtr v = builtin_model("V");
  const CohClass c2t = default_c2_tangent_dual();
  // pulls back to the complete-intersection value 4 H^2 = 64e + 64l
  CHECK(apply(phi_pullback(), c2t) == Rat(4) * mul(v->basis_class("H"), v->basis_class("H")));
}

TEST_SUITE_END();
