#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "trop/lattice.hpp"

namespace trop {

// Discrete data of a rational parametrized tropical curve: a tree with n
// pointed vertices (each silently carrying its contracted marked end),
// unpointed trivalent vertices, r labeled unbounded ends and balancing
// vector weights. Bounded edge weights are determined by the ends; they are
// stored oriented from edges[e][0] to edges[e][1].
struct CombinatorialType {
    int n = 0;
    std::vector<int> markers;               // size V; i in [0,n) or -1 for unpointed
    std::vector<std::array<int, 2>> edges;  // bounded edges
    std::vector<Vec2> edge_weights;         // weight seen from edges[e][0]
    std::vector<int> end_vertex;            // size r; vertex of end j
    std::vector<Vec2> delta;                // direction of end j

    int vertex_count() const { return static_cast<int>(markers.size()); }
    int r() const { return static_cast<int>(delta.size()); }

    // bounded edges plus non-contracted ends at v
    int valency(int v) const;

    // outgoing vector weights at v (bounded edges and ends; contracted marked
    // ends excluded)
    std::vector<Vec2> vertex_vectors(int v) const;

    // number of bounded edges = dimension of the moduli cone of this type
    int cone_dimension() const { return static_cast<int>(edges.size()); }

    int unpointed_trivalent_count() const;

    // all structural invariants: spanning tree, distinct markers, balancing,
    // prescribed valencies, non-zero bounded weights
    bool is_valid(const DescendantProfile& profile, std::string* why = nullptr) const;

    // Removing the pointed vertices must leave components with exactly one
    // non-contracted unbounded end each.
    bool audit_tree_decomposition() const;

    // isomorphism-invariant encoding; in labeled mode end labels are
    // respected, otherwise ends are interchangeable within equal vectors
    std::string canonical_key(bool labeled) const;

    nlohmann::json to_json() const;
    static CombinatorialType from_json(const nlohmann::json& j);
};

enum class EndLabeling { kLabeled, kUpToRelabeling };

// Complete enumeration of combinatorial types for the given data. Exponential
// in the problem size; intended for desk-scale inputs. The refined count does
// not go through this list (it prunes geometrically), but agrees with it.
std::vector<CombinatorialType> enumerate_types(const Degree& degree,
                                               const DescendantProfile& profile,
                                               EndLabeling labeling);

}  // namespace trop
