#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "cohfm/rational.hpp"

namespace cohfm {

/// Class in the Neron-Severi lattice of a product of two elliptic curves,
/// written against the basis (E, F, Delta): the two fiber classes and the
/// diagonal. The intersection form has Gram matrix
///   [0 1 1]
///   [1 0 1]
///   [1 1 0]
struct NSClass {
  Rat x, y, z;
};

bool operator==(const NSClass& a, const NSClass& b);
NSClass operator+(const NSClass& a, const NSClass& b);
NSClass operator-(const NSClass& a);
NSClass operator*(const Rat& s, const NSClass& a);

Rat ns_intersect(const NSClass& u, const NSClass& v);

// Class of the image of x -> (ax, bx): a(a-b) E + b(b-a) F + ab Delta.
// Throws Error unless gcd(a, b) = 1.
NSClass slope_curve(long a, long b);

/// Element of SL(2, Z) acting on the product by (x, y) -> (ax+cy, bx+dy);
/// composition follows that action, so induced_action is a homomorphism.
struct SL2Element {
  long a, b, c, d;
  SL2Element(long a, long b, long c, long d);  // throws unless ad - bc = 1
};

SL2Element operator*(const SL2Element& g, const SL2Element& h);

using NSMatrix = std::array<std::array<long, 3>, 3>;

// Induced matrix on the lattice: columns are the images of E, F, Delta,
// which are the slope curves of (a,b), (c,d) and (a+c, b+d).
NSMatrix induced_action(const SL2Element& g);
NSClass apply_ns(const NSMatrix& m, const NSClass& v);

using NSTriple = std::array<long, 3>;

// gcd of entries reduced to 1, first nonzero entry positive.
NSTriple normalize_primitive(NSTriple t);
// Representative on the effective side of a null ray: nonnegative pairing
// with the interior class E + F + Delta.
NSTriple orient_effective(NSTriple t);

// All primitive integer triples with max |entry| <= height on the cone
// boundary xy + xz + yz = 0, sorted lexicographically. These are exactly the
// generators of the effective cone up to sign.
std::vector<NSTriple> cone_generators(long height);

struct OrbitReport {
  long height = 0;
  std::size_t states_explored = 0;
  std::vector<NSTriple> reached;  // cone generators hit by the orbit of E
  std::vector<NSTriple> missed;
};

// Breadth-first orbit of E under the standard generators (and inverses) of
// SL(2, Z), compared with cone_generators(height) projectively (a class and
// its normalized representative are identified).
OrbitReport orbit_transitivity(long height);

struct SchwarzViolation {
  NSTriple lhs_class, rhs_class;
  Rat pairing_sq, norm_product;
};

struct SchwarzReport {
  long height = 0;
  std::size_t generators = 0;
  std::size_t classes = 0;
  unsigned long long pairs_checked = 0;
  std::vector<SchwarzViolation> violations;  // empty on a correct lattice
};

// Checks (D.H)^2 >= (D.D)(H.H) over all pairs of effective classes built as
// nonnegative combinations (total multiplicity <= 3) of the effective-side
// cone generators up to the given height.
SchwarzReport reverse_schwarz_check(long height);

}  // namespace cohfm
