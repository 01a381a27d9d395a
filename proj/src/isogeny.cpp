#include "cohfm/isogeny.hpp"

namespace cohfm {

namespace {

CohMap diagonal_map(const RingModelPtr& source, const RingModelPtr& target,
                    const std::vector<long>& diag, MapKind kind) {
  Matrix m(target->size(), source->size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
  return {source, target, std::move(m), kind};
}

}  // namespace

const CohMap& phi_pullback() {
  // Both bases are listed in matching order, so the map is diagonal.
  static const CohMap map = diagonal_map(builtin_model("Vdual"), builtin_model("V"),
                                         {1, 8, 1, 64, 8, 64}, MapKind::pullback);
  return map;
}

const CohMap& phi_pushforward() {
  static const CohMap map = diagonal_map(builtin_model("V"), builtin_model("Vdual"),
                                         {64, 8, 64, 1, 8, 1}, MapKind::pushforward);
  return map;
}

}  // namespace cohfm
