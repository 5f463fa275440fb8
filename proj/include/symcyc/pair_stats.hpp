#pragma once

#include "symcyc/counting.hpp"
#include "symcyc/rng.hpp"
#include "symcyc/types.hpp"

#include <cstdint>

namespace symcyc {

// Closed forms for the vertex-pair statistics of the discrete hypercube
// {1,-1}^t: Hamming counts, orthogonality counts, Hamming- and Johnson-scheme
// intersection numbers. Each has an exhaustive oracle next to it.

CountValue pairs_at_distance(int t, int k);
CountValue orthogonal_pairs(int t);       // t even
CountValue mutual_orthogonal_count(int t);  // # Z orthogonal to a fixed orthogonal pair

CountValue pairs_with_negparts_at_distance(int t, int j1, int j2, int k);
// Orthogonal pairs refined by negative-part sizes: orthogonality forces
// d = t/2, so this is the k -> t/2 specialization of the distance-refined
// count. The exhaustive oracle pins that reading down.
CountValue orthogonal_pairs_with_negparts(int t, int j1, int j2);

CountValue johnson_layer_pairs(int t, int s, int i);
CountValue johnson_orthogonal_pairs(int t, int s);
CountValue johnson_mutual_count(int t, int s);  // requires 4|t and t/4 <= s <= 3t/4

namespace oracle {

// Exhaustive tallies over all ordered vertex pairs; exact ground truth for
// the closed forms above. Vertices are identified with negative-part masks.

std::uint64_t pairs_at_distance(int t, int k);
std::uint64_t orthogonal_pairs(int t);
std::uint64_t pairs_with_negparts_at_distance(int t, int j1, int j2, int k);
std::uint64_t orthogonal_pairs_with_negparts(int t, int j1, int j2);
std::uint64_t johnson_layer_pairs(int t, int s, int i);
std::uint64_t johnson_orthogonal_pairs(int t, int s);

// # Z orthogonal to both given vertices (optionally restricted to |Z^-| = s).
std::uint64_t mutual_orthogonal_count(int t, Mask x, Mask y);
std::uint64_t johnson_mutual_count(int t, int s, Mask x, Mask y);

// Samples an orthogonal pair (uniformly over ordered pairs) for the
// pair-independence checks; t must admit one.
std::pair<Mask, Mask> random_orthogonal_pair(int t, SplitMix64& rng);
std::pair<Mask, Mask> random_orthogonal_layer_pair(int t, int s, SplitMix64& rng);

}  // namespace oracle

}  // namespace symcyc
