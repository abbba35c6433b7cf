#pragma once

#include "isix/graph.hpp"
#include "isix/indices.hpp"
#include "isix/rational.hpp"

#include <vector>

namespace isix {

/// Path lifting: given an induced subpath v_1..v_l (l >= 2) with
/// degree(v_l) >= 2, rehomes every neighbor of v_l except v_{l-1} onto
/// v_1, leaving v_l pendant. Order and edge count are preserved. Throws
/// std::invalid_argument when the sequence is not an induced subpath, when
/// v_l has nothing to lift, or when a rehomed edge would collide with an
/// existing one. Inputs are never mutated.
Graph path_lift(const Graph& g, const std::vector<int>& path);

/// Replaces the pendant edge (pendant, from) by (pendant, to). Throws when
/// `pendant` is not a pendant adjacent to `from`, or the target edge
/// already exists (or to == pendant).
Graph move_pendant(const Graph& g, int pendant, int from, int to);

/// bid_value(after, f) - bid_value(before, f). Signs are recorded by the
/// audits, never assumed.
Rational bid_delta(const Graph& before, const Graph& after, const DegreeWeightFunction& f);

}  // namespace isix
