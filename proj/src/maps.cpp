#include "cohfm/maps.hpp"

#include "cohfm/error.hpp"

namespace cohfm {

CohMap identity_map(const RingModelPtr& model) {
  return {model, model, Matrix::identity(model->size()), MapKind::generic};
}

CohClass apply(const CohMap& map, const CohClass& x) {
  if (!x.valid()) throw MapError("apply: null class");
  if (x.model() != map.source)
    throw MapError("apply: class over model " + x.model()->name() + ", map expects " +
                   map.source->name());
  return CohClass(map.target, mat_vec(map.matrix, x.coeffs()));
}

CohMap compose(const CohMap& f, const CohMap& g) {
  if (g.target != f.source)
    throw MapError("compose: inner map lands in " + g.target->name() + ", outer map expects " +
                   f.source->name());
  return {g.source, f.target, mat_mul(f.matrix, g.matrix), MapKind::generic};
}

CohMap map_inverse(const CohMap& map) {
  MapKind kind = MapKind::generic;
  if (map.kind == MapKind::fm) kind = MapKind::fm_inverse;
  if (map.kind == MapKind::fm_inverse) kind = MapKind::fm;
  return {map.target, map.source, mat_inverse(map.matrix), kind};
}

bool preserves_degree(const CohMap& map) {
  for (std::size_t j = 0; j < map.source->size(); ++j) {
    const int source_degree = map.source->basis_element(j).degree;
    for (std::size_t i = 0; i < map.target->size(); ++i)
      if (map.matrix.at(i, j) != 0 && map.target->basis_element(i).degree != source_degree)
        return false;
  }
  return true;
}

}  // namespace cohfm
