#pragma once

#include <vector>

#include "cohfm/maps.hpp"

namespace cohfm {

/// Chern character of a sheaf on a threefold, stored as a cohomology class
/// and read by degree: ch0 = rank (unit coefficient), ch1 the degree-2 part,
/// ch2 the degree-4 part, ch3 the degree-6 part.
using ChernCharacter = CohClass;

struct ChernClasses {
  Rat rank;
  CohClass c1;  // degree 2
  CohClass c2;  // degree 4
  CohClass c3;  // degree 6
};

// ch = rank + c1 + (c1^2 - 2 c2)/2 + (c1^3 - 3 c1 c2 + 3 c3)/6.
ChernCharacter ch_from_c(const ChernClasses& c);
// Exact inverse of ch_from_c; throws Error if ch0 is not an integer.
ChernClasses c_from_ch(const ChernCharacter& ch);
// Character of a tensor product: the ring product, truncated by grading.
ChernCharacter tensor(const ChernCharacter& a, const ChernCharacter& b);
// exp(c1) truncated at the top degree: the character of a line bundle.
ChernCharacter line_bundle_character(const CohClass& c1);

/// Normal bundle data of an embedded subvariety, just enough to evaluate
/// td(N)^-1. Either trivial of a given rank, or a sum of line bundles on a
/// curve described by their degrees (on a curve only the degree survives:
/// td(N)^-1 = 1 - (sum of degrees)/2 . [pt]).
struct NormalBundleData {
  int rank = 0;
  bool is_trivial = true;
  std::vector<Rat> line_degrees;

  static NormalBundleData trivial(int rank) { return {rank, true, {}}; }
  static NormalBundleData line_bundles_on_curve(std::vector<Rat> degrees) {
    return {static_cast<int>(degrees.size()), false, std::move(degrees)};
  }
};

// Grothendieck-Riemann-Roch pushforward ch(i_* F) = push(ch(F) . td(N)^-1).
// push sends classes on the subvariety model into the ambient model, raising
// degree by 2 . codim; the normal rank must equal that codimension.
ChernCharacter grr_push(const CohClass& ch_on_sub, const NormalBundleData& normal,
                        const CohMap& push);

// Character of a line bundle of Euler characteristic chi supported on a
// curve of class a[e] + b[l] in the threefold V: a[e] + b[l] + chi[pt].
ChernCharacter spectral_character(long a, long b, long chi);
// Same, with the line bundle given by degree and curve genus (chi = d - g + 1).
ChernCharacter spectral_character_from_degree(long a, long b, long deg, long genus);

/// Chern classes of the tangent bundle of a smooth complete intersection of
/// the given multidegrees in projective space, as coefficients of powers of
/// the hyperplane class h, from (1+h)^(n+1) . prod (1+d_i h)^-1 truncated.
struct CompleteIntersectionChern {
  int ambient_dim = 0;
  std::vector<long> multidegrees;
  int dim = 0;      // n - number of degrees
  Rat c1, c2, c3;   // coefficients of h, h^2, h^3
  Rat degree;       // product of the multidegrees = integral of h^dim
  Rat integral_c3;  // c3 . degree (the Euler number when dim == 3)
};
CompleteIntersectionChern ci_tangent_chern(int ambient_dim, const std::vector<long>& degrees);

// Euler characteristic across a small resolution: each ordinary double
// point adds +1 passing to the nodal variety and +1 for the exceptional P^1.
long euler_resolution(long chi_smooth, long nodes);

// Default c2 of the tangent bundle on the dual threefold: the complete
// intersection value c2 = 4h^2 = 64e + 64l carried through the etale
// pullback identity (pullback of ed + 8Ed is 64e + 64l). The small
// resolution's correction is not included; callers may override.
CohClass default_c2_tangent_dual();

// Subvariety models and pushforwards used by the GRR computations: the
// abelian fiber ({1, h, pt} with h^2 = 16pt), a rational curve, a point.
RingModelPtr abelian_fiber_model();
RingModelPtr rational_curve_model();
RingModelPtr point_model();
const CohMap& fiber_push_to_V();    // codim 1: 1 -> [A], h -> 16[l], pt -> [pt]
const CohMap& section_push_to_V();  // codim 2: 1 -> [e], pt -> [pt]
const CohMap& point_push_to_V();    // codim 3: 1 -> [pt]

}  // namespace cohfm
