#include "cohfm/spectral.hpp"

#include <algorithm>
#include <thread>

#include "cohfm/error.hpp"

namespace cohfm {

HeteroticConstraints HeteroticConstraints::make(long rank, Rat c3_target) {
  if (rank < 1) throw Error("constraint rank must be positive");
  const RingModelPtr vd = builtin_model("Vdual");
  return {rank, vd->zero(), std::move(c3_target), default_c2_tangent_dual(),
          AnomalyMode::require_effective, true};
}

void HeteroticConstraints::set_c2_tangent(CohClass value) {
  c2_tangent = std::move(value);
  c2_tangent_is_default = false;
}

bool candidate_effective(const SpectralCandidate& c) { return c.a > 0 && c.b >= 0; }

ChernCharacter fm_of_candidate(const SpectralCandidate& c) {
  ChernCharacter image =
      apply_fm(builtin_sP(), spectral_character(c.a, c.b, c.chi), /*verified_only=*/true);
  if (c.twist) {
    const RingModelPtr vd = builtin_model("Vdual");
    const CohClass t = Rat(c.twist->x) * vd->basis_class("Hd") +
                       Rat(c.twist->y) * vd->basis_class("Ad");
    image = tensor(image, line_bundle_character(t));
  }
  return image;
}

const char* constraint_name(Constraint c) {
  switch (c) {
    case Constraint::effectivity: return "effectivity";
    case Constraint::rank: return "rank";
    case Constraint::c1: return "c1";
    case Constraint::c3: return "c3";
    case Constraint::anomaly: return "anomaly";
  }
  return "?";
}

std::optional<Constraint> CheckOutcome::first_failure() const {
  if (!effectivity_ok) return Constraint::effectivity;
  if (!rank_ok) return Constraint::rank;
  if (!c1_ok) return Constraint::c1;
  if (!c3_ok) return Constraint::c3;
  if (!anomaly_ok) return Constraint::anomaly;
  return std::nullopt;
}

CheckOutcome check(const SpectralCandidate& c, const HeteroticConstraints& k) {
  CheckOutcome out;
  out.image = fm_of_candidate(c);
  out.effectivity_ok = true;  // enumeration applies the effectivity filter

  const RingModelPtr vd = out.image.model();
  out.rank_ok = out.image[vd->unit_index()] == Rat(k.rank);
  out.c1_value = out.image.degree_part(2);
  out.c1_ok = out.c1_value == k.c1_target;

  const ChernClasses classes = c_from_ch(out.image);
  out.c2_value = classes.c2;
  out.c3_integral = integrate(classes.c3);
  out.c3_ok = out.c3_integral == k.c3_target;

  out.anomaly_class = k.c2_tangent - classes.c2;
  if (k.anomaly_mode == AnomalyMode::ignore) {
    out.anomaly_ok = true;
  } else {
    // Effective-curve cone of the dual: strictly positive multiples of the
    // section class and of the line class 8[Ed].
    const Rat alpha = out.anomaly_class.coeff("ed");
    const Rat beta = out.anomaly_class.coeff("Ed");
    out.anomaly_ok = alpha > 0 && beta > 0;
  }
  return out;
}

namespace {

struct PartialReport {
  std::array<unsigned long long, kConstraintCount> rejected{};
  std::vector<SpectralCandidate> feasible;
};

struct CandidateSpace {
  const SearchBounds& b;
  unsigned long long na, nb, nchi, ntx, nty;
  bool twisted;

  explicit CandidateSpace(const SearchBounds& bounds) : b(bounds) {
    auto span = [](long lo, long hi) {
      return static_cast<unsigned long long>(hi - lo + 1);
    };
    na = span(b.a_lo, b.a_hi);
    nb = span(b.b_lo, b.b_hi);
    nchi = span(b.chi_lo, b.chi_hi);
    twisted = b.twist.has_value();
    ntx = twisted ? span((*b.twist)[0], (*b.twist)[1]) : 1;
    nty = twisted ? span((*b.twist)[2], (*b.twist)[3]) : 1;
  }

  unsigned long long size() const { return na * nb * nchi * ntx * nty; }

  SpectralCandidate at(unsigned long long index) const {
    SpectralCandidate c;
    const unsigned long long iy = index % nty;
    index /= nty;
    const unsigned long long ix = index % ntx;
    index /= ntx;
    c.chi = b.chi_lo + static_cast<long>(index % nchi);
    index /= nchi;
    c.b = b.b_lo + static_cast<long>(index % nb);
    index /= nb;
    c.a = b.a_lo + static_cast<long>(index);
    if (twisted)
      c.twist = Twist{(*b.twist)[0] + static_cast<long>(ix),
                      (*b.twist)[2] + static_cast<long>(iy)};
    return c;
  }
};

PartialReport scan_range(const CandidateSpace& space, const HeteroticConstraints& k,
                         unsigned long long begin, unsigned long long end) {
  PartialReport out;
  for (unsigned long long i = begin; i < end; ++i) {
    const SpectralCandidate c = space.at(i);
    if (space.b.require_effective_candidates && !candidate_effective(c)) {
      ++out.rejected[static_cast<int>(Constraint::effectivity)];
      continue;
    }
    const CheckOutcome verdict = check(c, k);
    if (auto fail = verdict.first_failure())
      ++out.rejected[static_cast<int>(*fail)];
    else
      out.feasible.push_back(c);
  }
  return out;
}

}  // namespace

SearchReport enumerate_candidates(const SearchBounds& bounds, const HeteroticConstraints& k) {
  if (bounds.a_lo > bounds.a_hi || bounds.b_lo > bounds.b_hi || bounds.chi_lo > bounds.chi_hi)
    throw Error("empty search bounds");
  if (bounds.twist && ((*bounds.twist)[0] > (*bounds.twist)[1] ||
                       (*bounds.twist)[2] > (*bounds.twist)[3]))
    throw Error("empty twist bounds");
  if (bounds.workers < 1) throw Error("worker count must be positive");

  const CandidateSpace space(bounds);
  const unsigned long long total = space.size();

  const unsigned long long nworkers =
      std::min<unsigned long long>(static_cast<unsigned long long>(bounds.workers),
                                   std::max<unsigned long long>(total, 1));
  std::vector<PartialReport> parts(nworkers);
  if (nworkers <= 1) {
    parts[0] = scan_range(space, k, 0, total);
  } else {
    std::vector<std::thread> threads;
    const unsigned long long chunk = (total + nworkers - 1) / nworkers;
    for (unsigned long long w = 0; w < nworkers; ++w) {
      const unsigned long long begin = w * chunk;
      const unsigned long long end = std::min(total, begin + chunk);
      threads.emplace_back(
          [&, w, begin, end] { parts[w] = scan_range(space, k, begin, end); });
    }
    for (auto& t : threads) t.join();
  }

  SearchReport report;
  report.bounds = bounds;
  report.constraints = k;
  report.total = total;
  // Contiguous index partitions merged in order reproduce the serial scan.
  for (const PartialReport& p : parts) {
    for (int i = 0; i < kConstraintCount; ++i) report.rejected[i] += p.rejected[i];
    report.feasible.insert(report.feasible.end(), p.feasible.begin(), p.feasible.end());
  }

  if (!bounds.twist && k.c3_target != 0) {
    report.certificate =
        "c3 == 0 for every untwisted spectral candidate: the transform of "
        "a[e] + b[l] + chi[pt] is a[Vd] + (chi - a)[Ad] - b[Ed], whose third "
        "Chern class vanishes identically; c3_target = " +
        rat_str(k.c3_target) +
        " is therefore unattainable for the entire untwisted family, not "
        "merely within the scanned bounds.";
  }
  report.scope_note =
      "This verdict covers only spectral data of the enumerated form (a line "
      "bundle of Euler characteristic chi on a curve of class a[e] + b[l]" +
      std::string(bounds.twist ? ", twisted by x[Hd] + y[Ad]" : "") +
      "); it makes no statement about more general sheaves.";
  return report;
}

}  // namespace cohfm
