#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cohfm/chern.hpp"

namespace cohfm {

// Reliability of one column of a Fourier-Mukai matrix. The transforms of
// sheaves supported in codimension >= 2 are fully computed; the columns fed
// by the rank-positive sheaves rest on expected (unproven) intermediate
// results and must not be relied on by the spectral search.
enum class ColumnStatus { verified, expected };

enum class FMProvenance { builtin, reconstructed };

/// The Fourier-Mukai transform on cohomology as an exact 6x6 matrix between
/// the Chern-character spaces of V and its dual, with per-column reliability.
struct FMMatrix {
  CohMap map;
  FMProvenance provenance = FMProvenance::reconstructed;
  std::array<ColumnStatus, 6> columns{};
};

// The transform and its inverse with exact entries (16/3, 2/3, -16, ...).
// Forward columns [V], [H] are expected; [A], [e], [l], [pt] are verified.
// Inverse columns [Vd], [Ad], [Ed], [pt] are verified: they are determined
// by the verified forward columns alone ([e]+[pt] -> [Vd], [pt] -> [Ad],
// -[l] -> [Ed], [A] -> [pt] invert without touching the expected data).
const FMMatrix& builtin_sP();          // H*(V) -> H*(Vdual)
const FMMatrix& builtin_sP_inverse();  // H*(Vdual) -> H*(V)

// The unique linear map sending each pair's first class to its second.
// Needs at least 6 pairs spanning H*(V); throws MapError when rank-deficient
// or inconsistent. Reconstructed matrices have every column marked verified:
// the caller vouches for the supplied pairs.
FMMatrix reconstruct_from_pairs(const std::vector<std::pair<CohClass, CohClass>>& pairs);

// Matrix-vector application. With verified_only set, classes supported on an
// expected column are rejected (MapError) instead of silently transformed.
ChernCharacter apply_fm(const FMMatrix& fm, const ChernCharacter& ch,
                        bool verified_only = false);
// Shorthands through the built-in matrices.
ChernCharacter apply_fm(const ChernCharacter& ch_on_V);
ChernCharacter apply_fm_inverse(const ChernCharacter& ch_on_dual);

/// One row of the basis-sheaf transform table: the source sheaf, its Chern
/// character on V, the character of the transform upstairs on V (before
/// descent), and the descended character on the dual.
struct FmTableRow {
  std::string sheaf;
  ChernCharacter ch;           // on V
  std::string upstairs_sheaf;  // transform before taking the quotient
  ChernCharacter upstairs_ch;  // on V
  std::string image_sheaf;     // transform on the dual (empty when unnamed)
  ChernCharacter image_ch;     // on Vdual
  ColumnStatus status = ColumnStatus::verified;
};

// The six independent basis sheaves, computed from first principles:
// characters via Grothendieck-Riemann-Roch, the upstairs transforms from
// their explicit sheaf descriptions, and the descended characters through
// the inverse of the isogeny pullback. Reconstructing from the (ch, image)
// pairs of this table recovers builtin_sP exactly.
const std::vector<FmTableRow>& fm_sheaf_table();

}  // namespace cohfm
