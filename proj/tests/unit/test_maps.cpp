#include "cohfm/error.hpp"
#include "cohfm/maps.hpp"
#include "doctest.h"

using namespace cohfm;

TEST_SUITE_BEGIN("maps");

TEST_CASE("exact inverse with fractional entries") {
  Matrix m(2, 2);
  m.at(0, 0) = rat(16, 3);
  m.at(0, 1) = rat(2, 3);
  m.at(1, 0) = Rat(1);
  m.at(1, 1) = Rat(-16);
  const Matrix inv = mat_inverse(m);
  CHECK(mat_mul(m, inv) == Matrix::identity(2));
  CHECK(mat_mul(inv, m) == Matrix::identity(2));
}

TEST_CASE("rank and singularity") {
  Matrix m(3, 3);
  m.at(0, 0) = 1;
  m.at(1, 1) = 1;
  m.at(2, 0) = 2;  // third row dependent on the first
  CHECK(mat_rank(m) == 2);
  CHECK_THROWS_AS(mat_inverse(m), MapError);
}

TEST_CASE("map from pairs") {
  SUBCASE("identity pairs give the identity") {
    std::vector<std::vector<Rat>> basis;
    for (int i = 0; i < 3; ++i) {
      std::vector<Rat> v(3, Rat(0));
      v[i] = 1;
      basis.push_back(v);
    }
    CHECK(mat_from_pairs(basis, basis, 3) == Matrix::identity(3));
  }
  SUBCASE("rank-deficient input") {
    std::vector<std::vector<Rat>> xs = {{Rat(1), Rat(0)}, {Rat(2), Rat(0)}};
    std::vector<std::vector<Rat>> ys = {{Rat(1), Rat(0)}, {Rat(2), Rat(0)}};
    CHECK_THROWS_WITH_AS(mat_from_pairs(xs, ys, 2), doctest::Contains("rank-deficient"), MapError);
  }
  SUBCASE("inconsistent overdetermined system") {
    std::vector<std::vector<Rat>> xs = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
    std::vector<std::vector<Rat>> ys = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(0), Rat(0)}};
    CHECK_THROWS_WITH_AS(mat_from_pairs(xs, ys, 2), doctest::Contains("inconsistent"), MapError);
  }
}

TEST_CASE("apply and compose respect models") {
  const RingModelPtr v = builtin_model("V");
  const RingModelPtr vd = builtin_model("Vdual");
  const CohMap id_v = identity_map(v);
  CHECK(apply(id_v, v->basis_class("H")) == v->basis_class("H"));
  CHECK_THROWS_AS(apply(id_v, vd->basis_class("Hd")), MapError);

  CohMap to_dual{v, vd, Matrix::identity(6), MapKind::generic};
  CHECK(compose(id_v, id_v).matrix == id_v.matrix);
  CHECK_THROWS_AS(compose(to_dual, to_dual), MapError);
  CHECK(apply(compose(to_dual, id_v), v->basis_class("A")) == vd->basis_class("Ad"));
}

TEST_SUITE_END();
