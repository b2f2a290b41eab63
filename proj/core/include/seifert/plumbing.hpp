#pragma once

#include <string>
#include <utility>
#include <vector>

#include "seifert/rational.hpp"
#include "seifert/seifert_data.hpp"

namespace seifert {

// Star-shaped plumbing tree of the minimal good resolution: a central vertex
// with weight b and, per arm, the chain -b_{i1}, ..., -b_{ik} coming from the
// negative continued fraction of alpha_i/omega_i.  Stored weights are the
// self-intersection numbers E_v.E_v (so arm entries are negated).
struct PlumbingGraph {
    std::vector<Int> weights;                // E_v.E_v, index 0 = center
    std::vector<std::pair<int, int>> edges;  // tree adjacency
    std::vector<std::vector<int>> arms;      // vertex indices, center outward

    int center() const { return 0; }
    std::size_t vertex_count() const { return weights.size(); }
    // End vertex of arm i (the vertex marked \bar v_i).
    int arm_end(std::size_t i) const { return arms[i].back(); }
};

using IntMatrix = std::vector<std::vector<Int>>;

PlumbingGraph plumbing_graph(const SeifertData& s);

// Symmetric intersection matrix {E_v.E_w}: weights on the diagonal, 1 for
// each edge.  Throws invalid_input if the result is not negative definite.
IntMatrix intersection_matrix(const PlumbingGraph& g);

bool is_negative_definite(const IntMatrix& m);
Int determinant(IntMatrix m);

// Canonical cycle of the resolution: the rational cycle solving the
// adjunction equations Z.E_v = E_v.E_v + 2, and K^2 = Z.Z.
struct CanonicalCycle {
    std::vector<Rat> coefficients;
    Rat k_squared;
};

CanonicalCycle canonical_cycle(const PlumbingGraph& g);

// K^2 + number of vertices; a resolution-independent invariant of the link,
// used as the graph-side cross-check of the Seifert formula.
Rat k_squared_plus_vertex_count(const PlumbingGraph& g);

// Graphviz text, vertices emitted center first and then arm by arm.
std::string to_dot(const PlumbingGraph& g);

}  // namespace seifert
