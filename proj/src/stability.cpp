#include "cohfm/stability.hpp"

#include "cohfm/error.hpp"

namespace cohfm {

PolarizationChoice::PolarizationChoice(Rat l_coeff, Rat k_coeff)
    : l(std::move(l_coeff)), k(std::move(k_coeff)) {
  if (l < 0 || k < 0) throw Error("polarization coefficients must be nonnegative");
}

CohClass PolarizationChoice::divisor() const {
  const RingModelPtr vd = builtin_model("Vdual");
  return l * vd->basis_class("Hd") + k * vd->basis_class("Ad");
}

AmpleResult is_ample(const PolarizationChoice& d) {
  const RingModelPtr vd = builtin_model("Vdual");
  const CohClass div = d.divisor();
  AmpleResult out;
  out.dot_section = integrate(mul(div, vd->basis_class("ed")));
  out.dot_line = integrate(mul(div, Rat(8) * vd->basis_class("Ed")));
  out.ample = out.dot_section > 0 && out.dot_line > 0;
  if (!out.ample) out.witness = out.dot_section <= 0 ? "ed" : "ld";
  return out;
}

std::array<Rat, 3> effectivity_inequalities(const CohClass& divisor,
                                            const PolarizationChoice& h0) {
  if (!is_ample(h0).ample) throw Error("effectivity_inequalities: polarization is not ample");
  const RingModelPtr vd = builtin_model("Vdual");
  if (divisor.model() != vd) throw MapError("effectivity_inequalities: divisor not over Vdual");
  const CohClass h = h0.divisor();
  const CohClass a = vd->basis_class("Ad");
  std::array<Rat, 3> out;
  for (int i = 0; i <= 2; ++i) {
    CohClass prod = divisor;
    for (int j = 0; j < i; ++j) prod = mul(prod, h);
    for (int j = 0; j < 2 - i; ++j) prod = mul(prod, a);
    out[i] = integrate(prod);
  }
  return out;
}

Rat slope(const ChernCharacter& ch, const PolarizationChoice& d) {
  const Rat rank = ch[ch.model()->unit_index()];
  if (rank == 0) throw Error("slope: rank is zero");
  const CohClass div = d.divisor();
  return integrate(mul(mul(ch.degree_part(2), div), div)) / rank;
}

Rat subsheaf_bound(const FiltrationData& filtration, const PolarizationChoice& h0) {
  if (filtration.quotient_c1.empty()) throw Error("subsheaf_bound: empty filtration");
  const RingModelPtr vd = builtin_model("Vdual");
  const CohClass h = h0.divisor();
  const CohClass a = vd->basis_class("Ad");
  bool first = true;
  Rat best(0);
  for (const CohClass& c1 : filtration.quotient_c1) {
    if (c1.model() != vd) throw MapError("subsheaf_bound: class not over Vdual");
    // i = 0 contributes nothing: Ad.Ad = 0.
    const Rat v1 = integrate(mul(mul(c1, h), a));
    const Rat v2 = integrate(mul(mul(c1, h), h));
    const Rat m = v1 > v2 ? v1 : v2;
    if (first || m > best) best = m;
    first = false;
  }
  return best;
}

long stability_threshold(const Rat& a, const Rat& mu_e, long n) {
  if (n < 2) throw Error("stability_threshold: rank must be at least 2");
  // least k with a - 2k/(n-1) < mu_e  <=>  k > (n-1)(a - mu_e)/2
  const Rat bound = Rat(n - 1) * (a - mu_e) / 2;
  long k = rat_to_long(rat_floor(bound)) + 1;
  return k < 1 ? 1 : k;
}

}  // namespace cohfm
