#pragma once

#include <vector>

#include "trop/lattice.hpp"
#include "trop/refined_poly.hpp"

namespace trop {

// Which constant factors the assembled multiplicities keep.
//   raw:        every factor of the paper, including (-i) per trivalent
//               unpointed vertex and 1/(N-1)! per pointed vertex
//   definition: drops only the (-i) factors (pure Laurent data)
//   example:    additionally drops 1/(N-1)! at pointed vertices, matching the
//               worked example's vertex contributions
enum class Convention { kRaw, kDefinition, kExample };

Convention convention_from_string(const std::string& s);
std::string to_string(Convention c);

// Representatives of cyclic orders on {0..N-1}: element 0 pinned first.
// Exactly (N-1)! of them.
std::vector<std::vector<int>> cyclic_order_representatives(int n);

// sum over pairs in positions 2..N of the representative; well defined on the
// cyclic class because the vectors sum to zero (checked).
mpz_class k_omega(const std::vector<Vec2>& vectors, const std::vector<int>& rep);

// mu_N = sum over cyclic orders of s^{k(omega)}
RefinedPoly mu(const std::vector<Vec2>& vectors);

// Blechman-Shustin recursive multiplicity; N >= 3. Memoized internally.
RefinedPoly theta_bs(const std::vector<Vec2>& vectors);

enum class VertexKind { kUnpointedTrivalent, kPointed };

// Multiplicity of a single vertex. For kUnpointedTrivalent the three vectors
// must be non-zero and balanced; for kPointed the N >= 2 vectors (contracted
// end excluded) must be balanced. Pointed bivalent vertices give 1.
RefinedPoly vertex_multiplicity(VertexKind kind, const std::vector<Vec2>& vectors,
                                Convention convention);

}  // namespace trop
