#pragma once

#include "cohfm/maps.hpp"

namespace cohfm {

// The degree-64 isogeny between the dual fibrations, as linear maps on
// cohomology. Both maps preserve degree and satisfy, exactly:
//
//   pullback:    Vd -> V, Hd -> 8H, Ad -> A, ed -> 64e, Ed -> 8l, pt -> 64pt
//   pushforward: V -> 64Vd, H -> 8Hd, A -> 64Ad, e -> ed, l -> 8Ed, pt -> pt
//
//   phi_pushforward . phi_pullback = 64 . id
//   phi_pullback is a ring homomorphism
//   phi_pushforward(x . phi_pullback(y)) = phi_pushforward(x) . y
//
// The unit images are forced: pullback of a ring unit is the unit, and the
// pushforward of the unit then follows from the degree identity.
const CohMap& phi_pullback();     // H*(Vdual) -> H*(V)
const CohMap& phi_pushforward();  // H*(V) -> H*(Vdual)

}  // namespace cohfm
