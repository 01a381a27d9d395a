#pragma once

#include <array>
#include <string>
#include <vector>

#include "cohfm/chern.hpp"

namespace cohfm {

/// Candidate polarization l[Hd] + k[Ad] on the dual threefold. Coefficients
/// must be nonnegative; whether the divisor is ample is a separate check.
struct PolarizationChoice {
  Rat l;
  Rat k;

  PolarizationChoice(Rat l_coeff, Rat k_coeff);
  CohClass divisor() const;  // on Vdual
};

struct AmpleResult {
  bool ample = false;
  Rat dot_section;   // D . ed
  Rat dot_line;      // D . ld, with ld = 8[Ed]
  std::string witness;  // failing cone generator when not ample
};

// Ampleness against the closed effective-curve cone generated by the section
// class ed and the line class ld = 8[Ed]: strictly positive intersection
// with both generators is required. With the intersection table this forces
// l > 0 and k > 0; l[Hd] alone pairs to zero with ed.
AmpleResult is_ample(const PolarizationChoice& d);

// The triple D . H0^i . Ad^(2-i) for i = 0, 1, 2; every effective divisor D
// makes all three nonnegative. Throws Error unless H0 is ample.
std::array<Rat, 3> effectivity_inequalities(const CohClass& divisor,
                                            const PolarizationChoice& h0);

// Slope c1 . D^2 / rank; throws Error on rank zero.
Rat slope(const ChernCharacter& ch, const PolarizationChoice& d);

/// First Chern classes of the rank-1 quotients of a filtration; the data
/// from which the uniform subsheaf slope bound is computed.
struct FiltrationData {
  std::vector<CohClass> quotient_c1;  // on Vdual, degree 2
};

// max over quotients and i in {1,2} of c1(L_j) . H0^i . Ad^(2-i); the i = 0
// term drops because Ad^2 = 0. Throws on an empty filtration.
Rat subsheaf_bound(const FiltrationData& filtration, const PolarizationChoice& h0);

// Least integer k >= 1 with a - 2k/(n-1) < mu_e, i.e. the point along the
// polarization ray H0 + kA after which every destabilizing slope bound drops
// below the slope of the bundle itself. Requires n >= 2.
long stability_threshold(const Rat& a, const Rat& mu_e, long n);

}  // namespace cohfm
