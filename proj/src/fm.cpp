#include "cohfm/fm.hpp"

#include "cohfm/error.hpp"
#include "cohfm/isogeny.hpp"

namespace cohfm {

namespace {

FMMatrix make_builtin(bool forward) {
  // Exact entries as numerator/denominator pairs; basis order
  // ([V],[H],[A],[e],[l],[pt]) -> ([Vd],[Hd],[Ad],[ed],[Ed],[pt]).
  static const std::pair<long, long> sp[6][6] = {
      {{0, 1}, {0, 1}, {0, 1}, {1, 1}, {0, 1}, {0, 1}},
      {{0, 1}, {-1, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}},
      {{0, 1}, {16, 3}, {0, 1}, {-1, 1}, {0, 1}, {1, 1}},
      {{1, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}},
      {{0, 1}, {16, 1}, {0, 1}, {0, 1}, {-1, 1}, {0, 1}},
      {{-1, 1}, {2, 3}, {1, 1}, {0, 1}, {0, 1}, {0, 1}},
  };
  static const std::pair<long, long> sp_inv[6][6] = {
      {{0, 1}, {0, 1}, {0, 1}, {1, 1}, {0, 1}, {0, 1}},
      {{0, 1}, {-1, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}},
      {{0, 1}, {2, 3}, {0, 1}, {1, 1}, {0, 1}, {1, 1}},
      {{1, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}},
      {{0, 1}, {-16, 1}, {0, 1}, {0, 1}, {-1, 1}, {0, 1}},
      {{1, 1}, {16, 3}, {1, 1}, {0, 1}, {0, 1}, {0, 1}},
  };

  const auto& entries = forward ? sp : sp_inv;
  Matrix m(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) m.at(i, j) = rat(entries[i][j].first, entries[i][j].second);

  FMMatrix out;
  if (forward) {
    out.map = {builtin_model("V"), builtin_model("Vdual"), std::move(m), MapKind::fm};
    out.columns = {ColumnStatus::expected, ColumnStatus::expected, ColumnStatus::verified,
                   ColumnStatus::verified, ColumnStatus::verified, ColumnStatus::verified};
  } else {
    out.map = {builtin_model("Vdual"), builtin_model("V"), std::move(m), MapKind::fm_inverse};
    out.columns = {ColumnStatus::verified, ColumnStatus::expected, ColumnStatus::verified,
                   ColumnStatus::expected, ColumnStatus::verified, ColumnStatus::verified};
  }
  out.provenance = FMProvenance::builtin;
  return out;
}

}  // namespace

const FMMatrix& builtin_sP() {
  static const FMMatrix fm = make_builtin(true);
  return fm;
}

const FMMatrix& builtin_sP_inverse() {
  static const FMMatrix fm = make_builtin(false);
  return fm;
}

FMMatrix reconstruct_from_pairs(const std::vector<std::pair<CohClass, CohClass>>& pairs) {
  const RingModelPtr v = builtin_model("V");
  const RingModelPtr vd = builtin_model("Vdual");
  if (pairs.size() < v->size())
    throw MapError("rank-deficient input set: need at least " + std::to_string(v->size()) +
                   " pairs, got " + std::to_string(pairs.size()));
  std::vector<std::vector<Rat>> xs, ys;
  for (const auto& [x, y] : pairs) {
    if (x.model() != v) throw MapError("reconstruct: input class not over V");
    if (y.model() != vd) throw MapError("reconstruct: output class not over Vdual");
    xs.push_back(x.coeffs());
    ys.push_back(y.coeffs());
  }
  Matrix m = mat_from_pairs(xs, ys, v->size());
  if (mat_rank(m) != v->size())
    throw MapError("reconstructed transform is singular: the output classes do not span");
  FMMatrix out;
  out.map = {v, vd, std::move(m), MapKind::fm};
  out.provenance = FMProvenance::reconstructed;
  out.columns.fill(ColumnStatus::verified);
  return out;
}

ChernCharacter apply_fm(const FMMatrix& fm, const ChernCharacter& ch, bool verified_only) {
  if (verified_only) {
    for (std::size_t j = 0; j < fm.map.source->size(); ++j)
      if (fm.columns[j] == ColumnStatus::expected && ch[j] != 0)
        throw MapError("class has a component along '" +
                       fm.map.source->basis_element(j).label +
                       "', whose transform column is only expected, not verified");
  }
  return apply(fm.map, ch);
}

ChernCharacter apply_fm(const ChernCharacter& ch_on_V) { return apply_fm(builtin_sP(), ch_on_V); }

ChernCharacter apply_fm_inverse(const ChernCharacter& ch_on_dual) {
  return apply_fm(builtin_sP_inverse(), ch_on_dual);
}

const std::vector<FmTableRow>& fm_sheaf_table() {
  static const std::vector<FmTableRow> table = [] {
    const RingModelPtr v = builtin_model("V");
    const RingModelPtr fiber = abelian_fiber_model();
    const RingModelPtr curve = rational_curve_model();
    const RingModelPtr point = point_model();
    const CohClass h = fiber->basis_class("h");

    const auto trivial1 = NormalBundleData::trivial(1);
    const auto trivial3 = NormalBundleData::trivial(3);
    // Exceptional sections have normal bundle O(-1) + O(-1).
    const auto section_normal = NormalBundleData::line_bundles_on_curve({Rat(-1), Rat(-1)});

    // Descend through the quotient: the equivariant character upstairs is
    // the pullback of the descended one, and the pullback is injective.
    const CohMap descend = map_inverse(phi_pullback());

    std::vector<FmTableRow> rows;

    // O_A -> 64 points upstairs, one point downstairs.
    {
      FmTableRow r;
      r.sheaf = "O_A";
      r.ch = grr_push(fiber->unit(), trivial1, fiber_push_to_V());
      r.upstairs_sheaf = "O_pt^64";
      r.upstairs_ch = Rat(64) * grr_push(point->unit(), trivial3, point_push_to_V());
      r.image_sheaf = "O_pt";
      r.image_ch = apply(descend, r.upstairs_ch);
      rows.push_back(std::move(r));
    }
    // O_e -> the structure sheaf.
    {
      FmTableRow r;
      r.sheaf = "O_e";
      r.ch = grr_push(curve->unit(), section_normal, section_push_to_V());
      r.upstairs_sheaf = "O_V";
      r.upstairs_ch = v->unit();
      r.image_sheaf = "O_Vd";
      r.image_ch = apply(descend, r.upstairs_ch);
      rows.push_back(std::move(r));
    }
    // O_pt -> a fiber.
    {
      FmTableRow r;
      r.sheaf = "O_pt";
      r.ch = grr_push(point->unit(), trivial3, point_push_to_V());
      r.upstairs_sheaf = "O_A";
      r.upstairs_ch = grr_push(fiber->unit(), trivial1, fiber_push_to_V());
      r.image_sheaf = "O_Ad";
      r.image_ch = apply(descend, r.upstairs_ch);
      rows.push_back(std::move(r));
    }
    // O_A(H) -> 8 copies of O_A(-H).
    {
      FmTableRow r;
      r.sheaf = "O_A(H)";
      const CohClass ch_OAH = fiber->unit() + h + Rat(1, 2) * mul(h, h);
      r.ch = grr_push(ch_OAH, trivial1, fiber_push_to_V());
      r.upstairs_sheaf = "O_A(-H)^8";
      const CohClass ch_OAnH = fiber->unit() - h + Rat(1, 2) * mul(h, h);
      r.upstairs_ch = grr_push(Rat(8) * ch_OAnH, trivial1, fiber_push_to_V());
      r.image_ch = apply(descend, r.upstairs_ch);
      rows.push_back(std::move(r));
    }
    // O_V -> 64 sections with a degree -2 twist.
    {
      FmTableRow r;
      r.sheaf = "O_V";
      r.ch = v->unit();
      r.upstairs_sheaf = "O_B(-2)^64";
      const CohClass ch_OB2 = curve->unit() - Rat(2) * curve->point_class();
      r.upstairs_ch = Rat(64) * grr_push(ch_OB2, section_normal, section_push_to_V());
      r.image_sheaf = "O_Bd(-2)";
      r.image_ch = apply(descend, r.upstairs_ch);
      r.status = ColumnStatus::expected;
      rows.push_back(std::move(r));
    }
    // O_V(H) -> rank 8, eight copies of O_V(-H).
    {
      FmTableRow r;
      r.sheaf = "O_V(H)";
      const CohClass H = v->basis_class("H");
      r.ch = line_bundle_character(H);
      r.upstairs_sheaf = "O_V(-H)^8";
      r.upstairs_ch = Rat(8) * line_bundle_character(-H);
      r.image_ch = apply(descend, r.upstairs_ch);
      r.status = ColumnStatus::expected;
      rows.push_back(std::move(r));
    }
    return rows;
  }();
  return table;
}

}  // namespace cohfm
