#pragma once

#include "cohfm/matrix.hpp"
#include "cohfm/ring.hpp"

namespace cohfm {

enum class MapKind { pullback, pushforward, fm, fm_inverse, generic };

/// Exact-rational linear map between the cohomology of two models.
/// Columns are indexed by the source basis, rows by the target basis.
struct CohMap {
  RingModelPtr source;
  RingModelPtr target;
  Matrix matrix;
  MapKind kind = MapKind::generic;
};

CohMap identity_map(const RingModelPtr& model);
// Matrix-vector product; throws MapError if x is not over map.source.
CohClass apply(const CohMap& map, const CohClass& x);
// f after g; throws MapError unless g.target == f.source.
CohMap compose(const CohMap& f, const CohMap& g);
CohMap map_inverse(const CohMap& map);

// True when every basis column maps into classes of the same degree.
bool preserves_degree(const CohMap& map);

}  // namespace cohfm
