#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cohfm/fm.hpp"

namespace cohfm {

enum class AnomalyMode { require_effective, ignore };

/// Numeric constraint set of the weak heterotic challenge: rank, vanishing
/// first Chern class, third Chern class integrating to the generation count,
/// and the anomaly class c2(T) - c2(E) landing in the effective-curve cone
/// of the dual. Polystability is certified separately (stability module).
struct HeteroticConstraints {
  long rank;
  CohClass c1_target;   // on Vdual
  Rat c3_target;
  CohClass c2_tangent;  // on Vdual; complete-intersection default, overridable
  AnomalyMode anomaly_mode = AnomalyMode::require_effective;
  // Set while c2_tangent is the complete-intersection default, which carries
  // no correction for the small resolution; reports caveat it.
  bool c2_tangent_is_default = true;

  static HeteroticConstraints make(long rank, Rat c3_target = Rat(6));
  void set_c2_tangent(CohClass value);
};

// Divisor twist x[Hd] + y[Ad] applied after the transform.
struct Twist {
  long x = 0;
  long y = 0;
};

/// Spectral datum: a line bundle of Euler characteristic chi on a curve of
/// class a[e] + b[l]; a is the rank of the transformed sheaf. The effective
/// convention admits a > 0, b >= 0 (a section itself has b = 0).
struct SpectralCandidate {
  long a = 0;
  long b = 0;
  long chi = 0;
  std::optional<Twist> twist;
};

bool candidate_effective(const SpectralCandidate& c);

// Transform of the candidate's character, tensored with the twist line
// bundle when present. Only verified transform columns are touched; a
// candidate whose character met an expected column would be rejected.
ChernCharacter fm_of_candidate(const SpectralCandidate& c);

enum class Constraint : int { effectivity = 0, rank, c1, c3, anomaly };
constexpr int kConstraintCount = 5;
const char* constraint_name(Constraint c);

struct CheckOutcome {
  ChernCharacter image;     // on Vdual
  bool effectivity_ok = false;
  bool rank_ok = false;
  bool c1_ok = false;
  bool c3_ok = false;
  bool anomaly_ok = false;
  CohClass c1_value;
  CohClass c2_value;
  Rat c3_integral;
  CohClass anomaly_class;   // c2_tangent - c2

  bool pass() const { return effectivity_ok && rank_ok && c1_ok && c3_ok && anomaly_ok; }
  std::optional<Constraint> first_failure() const;
};

CheckOutcome check(const SpectralCandidate& c, const HeteroticConstraints& k);

struct SearchBounds {
  long a_lo = 0, a_hi = 0;
  long b_lo = 0, b_hi = 0;
  long chi_lo = 0, chi_hi = 0;
  std::optional<std::array<long, 4>> twist;  // x_lo, x_hi, y_lo, y_hi
  bool require_effective_candidates = true;
  int workers = 1;
};

/// Outcome of a bounded exhaustive scan. Rejection counts attribute each
/// failing candidate to its first failing constraint, so the counts plus the
/// feasible count always sum to the total. Parallel partitions merge in
/// index order; worker count never changes the report.
struct SearchReport {
  SearchBounds bounds;
  HeteroticConstraints constraints;
  unsigned long long total = 0;
  std::array<unsigned long long, kConstraintCount> rejected{};
  std::vector<SpectralCandidate> feasible;  // enumeration (lexicographic) order
  std::string certificate;  // universal statement, when one applies
  std::string scope_note;

  bool infeasible_within_bounds() const { return feasible.empty(); }
};

// Deterministic exhaustive scan; throws Error on empty bounds.
SearchReport enumerate_candidates(const SearchBounds& bounds, const HeteroticConstraints& k);

}  // namespace cohfm
