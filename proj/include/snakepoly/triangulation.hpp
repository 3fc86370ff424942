#pragma once

#include <optional>
#include <vector>

#include "snakepoly/surface.hpp"

namespace snakepoly {

// A maximal set of pairwise compatible tagged arcs, stored sorted.
struct TaggedTriangulation {
    MarkedSurface surface;
    std::vector<TaggedArc> arcs;

    bool contains(const TaggedArc& arc) const;
    // T^p: every radius retagged.
    TaggedTriangulation flipped() const;
    bool is_self_paired() const;  // T == T^p (has a plain/notched pair)

    auto operator<=>(const TaggedTriangulation&) const = default;
};

// A maximal set of pairwise compatible ordinary arcs; may contain one
// self-folded pair (loop + enclosed radius).
struct IdealTriangulation {
    MarkedSurface surface;
    std::vector<TaggedArc> arcs;  // all Plain; possibly one Loop

    bool contains_ordinary(const TaggedArc& arc) const;
    std::optional<TaggedArc> loop() const;

    auto operator<=>(const IdealTriangulation&) const = default;
};

TaggedTriangulation make_tagged_triangulation(const MarkedSurface& s,
                                              std::vector<TaggedArc> arcs);

// All tagged triangulations, sorted. Catalan(m-2) for the polygon.
std::vector<TaggedTriangulation> enumerate_tagged_triangulations(const MarkedSurface& s);

// Defined when T has no notched radius lacking its plain partner: replaces a
// {rho, rho notched} pair by {rho, loop at rho's basepoint}. Throws otherwise.
IdealTriangulation tagged_to_ideal(const TaggedTriangulation& T);
TaggedTriangulation ideal_to_tagged(const IdealTriangulation& T0);
bool corresponds_to_ideal(const TaggedTriangulation& T);

TaggedTriangulation flip_tagging(const TaggedTriangulation& T);

// Structure of an ideal triangulation of the punctured polygon around the
// puncture: radii rho_1..rho_k (basepoints ascending), the arcs eps_i bounding
// the central region between consecutive basepoints, and the triangulated fan
// polygons glued outside each eps_i. For k = 1, eps_1 is the self-folded loop.
struct RadialDecomposition {
    int k = 0;
    std::vector<TaggedArc> rho;
    std::vector<int> basepoints;
    // eps[i] sits between basepoints[i] and basepoints[i+1 mod k]; nullopt when
    // the basepoints are adjacent on the boundary (degenerate, no arc).
    std::vector<std::optional<TaggedArc>> epsilon;

    struct Fan {
        // Corner vertices, ccw. For k = 1 the basepoint appears at both ends
        // (the disk is cut along the loop).
        std::vector<int> corners;
        std::optional<TaggedArc> closing;  // eps_i / loop; nullopt when degenerate
        // Fan diagonals as (corner-index, corner-index, arc).
        struct Diagonal {
            int i, j;
            TaggedArc arc;
        };
        std::vector<Diagonal> diagonals;
    };
    std::vector<Fan> fans;

    // Index of the fan whose open corner interval contains v; nullopt for basepoints.
    std::optional<int> fan_of(int v) const;
};

RadialDecomposition radial_decomposition(const IdealTriangulation& T0);

nlohmann::json triangulation_to_json(const TaggedTriangulation& T);
TaggedTriangulation triangulation_from_json(const MarkedSurface& s,
                                            const nlohmann::json& j);

}  // namespace snakepoly
