#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace snakepoly {

enum class SurfaceKind : uint8_t { Polygon, PuncturedPolygon };

// A convex m-gon, optionally with one interior puncture. Boundary vertices are
// labeled 0..m-1 counterclockwise; boundary segment i joins vertices i, i+1 mod m.
struct MarkedSurface {
    SurfaceKind kind = SurfaceKind::Polygon;
    int m = 0;

    MarkedSurface() = default;
    MarkedSurface(SurfaceKind k, int vertices);

    bool punctured() const { return kind == SurfaceKind::PuncturedPolygon; }
    int boundary_segment_count() const { return m; }
    // Number of arcs in any triangulation (= cluster rank).
    int rank() const { return punctured() ? m : m - 3; }

    auto operator<=>(const MarkedSurface&) const = default;
};

MarkedSurface polygon(int m);
MarkedSurface punctured_polygon(int m);

enum class ArcVariant : uint8_t { Chord, Radius, Loop };
// For a chord a < b on the punctured polygon: Left means the puncture lies in the
// region bounded by the arc and the boundary path a -> a+1 -> ... -> b; Right means
// it lies in the complementary region.
enum class PunctureSide : uint8_t { Left, Right };
enum class Tag : uint8_t { Plain, Notched };

// A tagged arc, or (variant Loop) the ordinary loop at a vertex tightly enclosing
// the puncture. Loops occur in ideal triangulations and in the notched-expansion
// machinery but are not themselves cluster-variable arcs.
struct TaggedArc {
    MarkedSurface surface;
    ArcVariant variant = ArcVariant::Chord;
    int a = 0;
    int b = 0;  // == a for Radius/Loop
    PunctureSide side = PunctureSide::Left;
    Tag tag = Tag::Plain;

    bool is_chord() const { return variant == ArcVariant::Chord; }
    bool is_radius() const { return variant == ArcVariant::Radius; }
    bool is_loop() const { return variant == ArcVariant::Loop; }
    bool notched() const { return tag == Tag::Notched; }

    // The underlying ordinary arc (tag erased).
    TaggedArc ordinary() const {
        TaggedArc c = *this;
        c.tag = Tag::Plain;
        return c;
    }

    auto operator<=>(const TaggedArc&) const = default;

    std::string name() const;
};

// Validating constructors.
TaggedArc make_chord(const MarkedSurface& s, int a, int b,
                     PunctureSide side = PunctureSide::Left);
TaggedArc make_radius(const MarkedSurface& s, int basepoint, Tag tag = Tag::Plain);
TaggedArc make_loop(const MarkedSurface& s, int basepoint);

// Number of transverse intersection points of the underlying ordinary arcs in
// minimal position (endpoints excluded). Pure integer combinatorics.
int crossing_count(const TaggedArc& x, const TaggedArc& y);

// Tagged-arc compatibility: underlying arcs do not cross, and distinct radii
// carry the same tag. Throws on a surface mismatch.
bool arcs_compatible(const TaggedArc& alpha, const TaggedArc& beta);

// gamma with the tagging changed when the underlying arc is a radius.
TaggedArc flip_tagging(const TaggedArc& gamma);

// The loop at rho's basepoint. rho must be a radius.
TaggedArc loop_around(const TaggedArc& rho);

// All tagged arcs of the surface: m(m-3)/2 for the polygon, m^2 for the
// punctured polygon. Sorted canonically; loops excluded.
std::vector<TaggedArc> enumerate_tagged_arcs(const MarkedSurface& s);

nlohmann::json arc_to_json(const TaggedArc& arc);
TaggedArc arc_from_json(const MarkedSurface& s, const nlohmann::json& j);
nlohmann::json surface_to_json(const MarkedSurface& s);
MarkedSurface surface_from_json(const nlohmann::json& j);

namespace detail {

// Lift of an ordinary arc to the strip model: a semicircular geodesic over an
// interval of the real line (chords, loops) or a vertical line (radii). On the
// punctured polygon all translates by m represent the same arc.
struct Lift {
    bool vertical = false;
    long lo = 0, hi = 0;  // interval, hi - lo in [1, m]
    long u = 0;           // vertical position
    bool periodic = false;
};

Lift lift_of(const TaggedArc& arc);

}  // namespace detail

}  // namespace snakepoly
