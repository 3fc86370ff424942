#include "snakepoly/surface.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace snakepoly {

MarkedSurface::MarkedSurface(SurfaceKind k, int vertices) : kind(k), m(vertices) {
    if (vertices < 3) throw std::invalid_argument("invalid surface: need m >= 3");
}

MarkedSurface polygon(int m) { return MarkedSurface(SurfaceKind::Polygon, m); }
MarkedSurface punctured_polygon(int m) {
    return MarkedSurface(SurfaceKind::PuncturedPolygon, m);
}

std::string TaggedArc::name() const {
    switch (variant) {
        case ArcVariant::Chord: {
            std::string n = "c" + std::to_string(a) + "_" + std::to_string(b);
            if (surface.punctured()) n += (side == PunctureSide::Left) ? "L" : "R";
            return n;
        }
        case ArcVariant::Radius:
            return "r" + std::to_string(a) + (notched() ? "x" : "");
        case ArcVariant::Loop:
            return "l" + std::to_string(a);
    }
    return "?";
}

TaggedArc make_chord(const MarkedSurface& s, int a, int b, PunctureSide side) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= s.m || a == b) throw std::invalid_argument("bad chord endpoints");
    int gap = b - a;  // ccw distance a -> b
    if (!s.punctured()) {
        if (gap < 2 || gap > s.m - 2)
            throw std::invalid_argument("polygon chord endpoints must be non-adjacent");
        side = PunctureSide::Left;  // canonical; unused
    } else {
        // Left needs a vertex in the complementary (clockwise) region, Right needs
        // one between a and b; otherwise the arc cuts off an unpunctured bigon.
        if (side == PunctureSide::Left && gap > s.m - 2)
            throw std::invalid_argument("chord would cut off an unpunctured bigon");
        if (side == PunctureSide::Right && gap < 2)
            throw std::invalid_argument("chord would cut off an unpunctured bigon");
    }
    TaggedArc arc;
    arc.surface = s;
    arc.variant = ArcVariant::Chord;
    arc.a = a;
    arc.b = b;
    arc.side = side;
    arc.tag = Tag::Plain;
    return arc;
}

TaggedArc make_radius(const MarkedSurface& s, int basepoint, Tag tag) {
    if (!s.punctured()) throw std::invalid_argument("radius requires a punctured polygon");
    if (basepoint < 0 || basepoint >= s.m) throw std::invalid_argument("bad basepoint");
    TaggedArc arc;
    arc.surface = s;
    arc.variant = ArcVariant::Radius;
    arc.a = basepoint;
    arc.b = basepoint;
    arc.side = PunctureSide::Left;
    arc.tag = tag;
    return arc;
}

TaggedArc make_loop(const MarkedSurface& s, int basepoint) {
    if (!s.punctured()) throw std::invalid_argument("loop requires a punctured polygon");
    if (basepoint < 0 || basepoint >= s.m) throw std::invalid_argument("bad basepoint");
    TaggedArc arc;
    arc.surface = s;
    arc.variant = ArcVariant::Loop;
    arc.a = basepoint;
    arc.b = basepoint;
    arc.side = PunctureSide::Left;
    arc.tag = Tag::Plain;
    return arc;
}

namespace detail {

Lift lift_of(const TaggedArc& arc) {
    Lift lf;
    lf.periodic = arc.surface.punctured();
    const long m = arc.surface.m;
    switch (arc.variant) {
        case ArcVariant::Radius:
            lf.vertical = true;
            lf.u = arc.a;
            return lf;
        case ArcVariant::Loop:
            lf.lo = arc.a;
            lf.hi = arc.a + m;
            return lf;
        case ArcVariant::Chord:
            if (!arc.surface.punctured() || arc.side == PunctureSide::Right) {
                // Puncture (if any) on the far side of the a..b vertex run.
                lf.lo = arc.a;
                lf.hi = arc.b;
            } else {
                lf.lo = arc.b - m;
                lf.hi = arc.a;
            }
            return lf;
    }
    return lf;
}

namespace {

bool strict_interleave(long p1, long q1, long p2, long q2) {
    return (p1 < p2 && p2 < q1 && q1 < q2) || (p2 < p1 && p1 < q2 && q2 < q1);
}

}  // namespace

}  // namespace detail

int crossing_count(const TaggedArc& x, const TaggedArc& y) {
    if (x.surface != y.surface)
        throw std::invalid_argument("crossing_count: arcs from different surfaces");
    if (x.ordinary() == y.ordinary()) return 0;
    const auto lx = detail::lift_of(x);
    const auto ly = detail::lift_of(y);
    if (lx.vertical && ly.vertical) return 0;
    const long m = x.surface.m;
    const long kmax = x.surface.punctured() ? 2 : 0;
    int count = 0;
    for (long k = -kmax; k <= kmax; ++k) {
        if (lx.vertical) {
            if (ly.lo + k * m < lx.u && lx.u < ly.hi + k * m) ++count;
        } else if (ly.vertical) {
            if (lx.lo < ly.u + k * m && ly.u + k * m < lx.hi) ++count;
        } else {
            if (detail::strict_interleave(lx.lo, lx.hi, ly.lo + k * m, ly.hi + k * m))
                ++count;
        }
    }
    return count;
}

bool arcs_compatible(const TaggedArc& alpha, const TaggedArc& beta) {
    if (alpha.surface != beta.surface)
        throw std::invalid_argument("arcs_compatible: arcs from different surfaces");
    if (alpha.ordinary() == beta.ordinary()) return true;
    if (crossing_count(alpha, beta) > 0) return false;
    if (alpha.is_radius() && beta.is_radius() && alpha.a != beta.a &&
        alpha.tag != beta.tag)
        return false;
    return true;
}

TaggedArc flip_tagging(const TaggedArc& gamma) {
    if (!gamma.is_radius()) return gamma;
    TaggedArc g = gamma;
    g.tag = gamma.notched() ? Tag::Plain : Tag::Notched;
    return g;
}

TaggedArc loop_around(const TaggedArc& rho) {
    if (!rho.is_radius()) throw std::invalid_argument("loop_around: not a radius");
    return make_loop(rho.surface, rho.a);
}

std::vector<TaggedArc> enumerate_tagged_arcs(const MarkedSurface& s) {
    std::vector<TaggedArc> out;
    for (int a = 0; a < s.m; ++a) {
        for (int b = a + 1; b < s.m; ++b) {
            int gap = b - a;
            if (!s.punctured()) {
                if (gap >= 2 && gap <= s.m - 2) out.push_back(make_chord(s, a, b));
                continue;
            }
            if (gap <= s.m - 2) out.push_back(make_chord(s, a, b, PunctureSide::Left));
            if (gap >= 2) out.push_back(make_chord(s, a, b, PunctureSide::Right));
        }
    }
    if (s.punctured()) {
        for (int a = 0; a < s.m; ++a) {
            out.push_back(make_radius(s, a, Tag::Plain));
            out.push_back(make_radius(s, a, Tag::Notched));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

nlohmann::json surface_to_json(const MarkedSurface& s) {
    return nlohmann::json{{"kind", s.punctured() ? "punctured" : "polygon"},
                          {"m", s.m}};
}

MarkedSurface surface_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    int m = j.at("m").get<int>();
    if (kind == "polygon") return polygon(m);
    if (kind == "punctured") return punctured_polygon(m);
    throw std::invalid_argument("unknown surface kind: " + kind);
}

nlohmann::json arc_to_json(const TaggedArc& arc) {
    nlohmann::json j;
    switch (arc.variant) {
        case ArcVariant::Chord:
            j["variant"] = "chord";
            j["a"] = arc.a;
            j["b"] = arc.b;
            if (arc.surface.punctured())
                j["side"] = (arc.side == PunctureSide::Left) ? "L" : "R";
            break;
        case ArcVariant::Radius:
            j["variant"] = "radius";
            j["a"] = arc.a;
            j["tag"] = arc.notched() ? "notched" : "plain";
            break;
        case ArcVariant::Loop:
            j["variant"] = "loop";
            j["a"] = arc.a;
            break;
    }
    return j;
}

TaggedArc arc_from_json(const MarkedSurface& s, const nlohmann::json& j) {
    const std::string variant = j.at("variant").get<std::string>();
    if (variant == "chord") {
        PunctureSide side = PunctureSide::Left;
        if (j.contains("side")) {
            const std::string sd = j.at("side").get<std::string>();
            if (sd == "L")
                side = PunctureSide::Left;
            else if (sd == "R")
                side = PunctureSide::Right;
            else
                throw std::invalid_argument("bad chord side: " + sd);
        }
        return make_chord(s, j.at("a").get<int>(), j.at("b").get<int>(), side);
    }
    if (variant == "radius") {
        Tag tag = Tag::Plain;
        if (j.contains("tag"))
            tag = (j.at("tag").get<std::string>() == "notched") ? Tag::Notched : Tag::Plain;
        return make_radius(s, j.at("a").get<int>(), tag);
    }
    if (variant == "loop") return make_loop(s, j.at("a").get<int>());
    throw std::invalid_argument("unknown arc variant: " + variant);
}

}  // namespace snakepoly
