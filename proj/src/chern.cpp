#include "cohfm/chern.hpp"

#include "cohfm/error.hpp"
#include "cohfm/isogeny.hpp"

namespace cohfm {

namespace {

void require_threefold(const RingModelPtr& m, const char* what) {
  if (m->top_degree() != 6)
    throw Error(std::string(what) + " requires a threefold model, got top degree " +
                std::to_string(m->top_degree()) + " in " + m->name());
}

void require_pure_degree(const CohClass& x, int degree, const char* what) {
  if (!(x.degree_part(degree) == x))
    throw Error(std::string(what) + ": class is not purely of degree " + std::to_string(degree));
}

}  // namespace

ChernCharacter ch_from_c(const ChernClasses& c) {
  const RingModelPtr& m = c.c1.model();
  require_threefold(m, "ch_from_c");
  if (c.c2.model() != m || c.c3.model() != m) throw MapError("ch_from_c: model mismatch");
  require_pure_degree(c.c1, 2, "ch_from_c c1");
  require_pure_degree(c.c2, 4, "ch_from_c c2");
  require_pure_degree(c.c3, 6, "ch_from_c c3");

  const CohClass c1sq = mul(c.c1, c.c1);
  const CohClass ch2 = Rat(1, 2) * (c1sq - Rat(2) * c.c2);
  const CohClass ch3 =
      Rat(1, 6) * (mul(c1sq, c.c1) - Rat(3) * mul(c.c1, c.c2) + Rat(3) * c.c3);
  return c.rank * m->unit() + c.c1 + ch2 + ch3;
}

ChernClasses c_from_ch(const ChernCharacter& ch) {
  const RingModelPtr& m = ch.model();
  require_threefold(m, "c_from_ch");
  const Rat rank = ch[m->unit_index()];
  if (!rat_is_integer(rank)) throw Error("c_from_ch: non-integer rank " + rat_str(rank));
  const CohClass c1 = ch.degree_part(2);
  const CohClass ch2 = ch.degree_part(4);
  const CohClass ch3 = ch.degree_part(6);
  const CohClass c1sq = mul(c1, c1);
  const CohClass c2 = Rat(1, 2) * (c1sq - Rat(2) * ch2);
  // From ch3 = (c1^3 - 3 c1 c2 + 3 c3)/6.
  const CohClass c3 = Rat(2) * ch3 + mul(c1, c2) - Rat(1, 3) * mul(c1sq, c1);
  return {rank, c1, c2, c3};
}

ChernCharacter tensor(const ChernCharacter& a, const ChernCharacter& b) { return mul(a, b); }

ChernCharacter line_bundle_character(const CohClass& c1) {
  require_pure_degree(c1, 2, "line_bundle_character");
  const RingModelPtr& m = c1.model();
  CohClass out = m->unit();
  CohClass power = m->unit();
  Rat factorial(1);
  for (int k = 1; 2 * k <= m->top_degree(); ++k) {
    power = mul(power, c1);
    factorial *= k;
    out = out + Rat(1) / factorial * power;
  }
  return out;
}

ChernCharacter grr_push(const CohClass& ch_on_sub, const NormalBundleData& normal,
                        const CohMap& push) {
  if (ch_on_sub.model() != push.source) throw MapError("grr_push: class not over the push source");
  const int codim = (push.target->top_degree() - push.source->top_degree()) / 2;
  if (normal.rank != codim)
    throw Error("grr_push: inconsistent codimension (normal rank " +
                std::to_string(normal.rank) + ", embedding codimension " + std::to_string(codim) +
                ")");
  CohClass td_inv = push.source->unit();
  if (!normal.is_trivial) {
    if (push.source->top_degree() != 2)
      throw Error("grr_push: line-bundle normal data is only evaluated on curves");
    Rat total(0);
    for (const Rat& d : normal.line_degrees) total += d;
    td_inv = td_inv - Rat(total / 2) * push.source->point_class();
  }
  return apply(push, mul(ch_on_sub, td_inv));
}

ChernCharacter spectral_character(long a, long b, long chi) {
  static const RingModelPtr v = builtin_model("V");
  static const std::size_t ie = v->index_of("e");
  static const std::size_t il = v->index_of("l");
  static const std::size_t ipt = v->point_index();
  std::vector<Rat> coeffs(v->size(), Rat(0));
  coeffs[ie] = a;
  coeffs[il] = b;
  coeffs[ipt] = chi;
  return CohClass(v, std::move(coeffs));
}

ChernCharacter spectral_character_from_degree(long a, long b, long deg, long genus) {
  return spectral_character(a, b, deg - genus + 1);
}

CompleteIntersectionChern ci_tangent_chern(int ambient_dim, const std::vector<long>& degrees) {
  if (ambient_dim < 1) throw Error("ci_tangent_chern: ambient dimension must be positive");
  // Truncated total Chern class as coefficients of 1, h, h^2, h^3.
  Rat c[4] = {Rat(1), Rat(0), Rat(0), Rat(0)};
  // (1+h)^(n+1)
  {
    const long n1 = ambient_dim + 1;
    Rat binom(1);
    for (int k = 1; k <= 3; ++k) {
      binom = binom * Rat(n1 - k + 1) / Rat(k);
      c[k] = binom;
    }
  }
  // times (1 + d h)^-1 = sum (-d)^k h^k for each multidegree
  for (long d : degrees) {
    Rat next[4];
    for (int k = 0; k <= 3; ++k) {
      Rat acc(0);
      Rat pow(1);
      for (int j = k; j >= 0; --j) {
        acc += c[j] * pow;
        pow *= Rat(-d);
      }
      next[k] = acc;
    }
    for (int k = 0; k <= 3; ++k) c[k] = next[k];
  }
  CompleteIntersectionChern out;
  out.ambient_dim = ambient_dim;
  out.multidegrees = degrees;
  out.dim = ambient_dim - static_cast<int>(degrees.size());
  out.c1 = c[1];
  out.c2 = c[2];
  out.c3 = c[3];
  out.degree = 1;
  for (long d : degrees) out.degree *= d;
  out.integral_c3 = out.c3 * out.degree;
  return out;
}

long euler_resolution(long chi_smooth, long nodes) { return chi_smooth + 2 * nodes; }

CohClass default_c2_tangent_dual() {
  const RingModelPtr vd = builtin_model("Vdual");
  return vd->basis_class("ed") + Rat(8) * vd->basis_class("Ed");
}

RingModelPtr abelian_fiber_model() {
  static const RingModelPtr m = [] {
    RingModel::Builder b("A18", 4);
    b.add_basis("A18", 0).add_basis("h", 2).add_basis("pt", 4);
    // h is the restricted (1,8) polarization: h.h = 16 pt
    b.set_product("h", "h", {{"pt", Rat(16)}});
    return b.build();
  }();
  return m;
}

RingModelPtr rational_curve_model() {
  static const RingModelPtr m = [] {
    RingModel::Builder b("P1", 2);
    b.add_basis("B", 0).add_basis("pt", 2);
    return b.build();
  }();
  return m;
}

RingModelPtr point_model() {
  static const RingModelPtr m = [] {
    RingModel::Builder b("point", 0);
    b.add_basis("pt", 0);
    return b.build();
  }();
  return m;
}

namespace {

CohMap label_map(const RingModelPtr& source, const RingModelPtr& target,
                 const std::vector<std::pair<std::string, std::vector<std::pair<std::string, Rat>>>>&
                     images) {
  Matrix m(target->size(), source->size());
  for (const auto& [from, terms] : images) {
    const std::size_t col = source->index_of(from);
    for (const auto& [to, coeff] : terms) m.at(target->index_of(to), col) = coeff;
  }
  return {source, target, std::move(m), MapKind::generic};
}

}  // namespace

const CohMap& fiber_push_to_V() {
  // i_*(1) = [A]; i_*(i^*H) = [H.A] = 16[l] by the projection formula.
  static const CohMap map = label_map(abelian_fiber_model(), builtin_model("V"),
                                      {{"A18", {{"A", Rat(1)}}},
                                       {"h", {{"l", Rat(16)}}},
                                       {"pt", {{"pt", Rat(1)}}}});
  return map;
}

const CohMap& section_push_to_V() {
  static const CohMap map = label_map(rational_curve_model(), builtin_model("V"),
                                      {{"B", {{"e", Rat(1)}}}, {"pt", {{"pt", Rat(1)}}}});
  return map;
}

const CohMap& point_push_to_V() {
  static const CohMap map =
      label_map(point_model(), builtin_model("V"), {{"pt", {{"pt", Rat(1)}}}});
  return map;
}

}  // namespace cohfm
