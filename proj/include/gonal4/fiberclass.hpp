/*
   Copyright 2026 The gonal4 authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GONAL4_FIBERCLASS_HPP
#define GONAL4_FIBERCLASS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace gonal4 {

// Symbolic classifier for the degenerate fibres of a conic-ruled surface
// and the double points they induce on the birational model. The whole
// section is a finite case analysis, so the machine is table-driven.

/// One monoidal transformation over a fixed fibre. The first blow-up
/// always happens on the fibre itself; later centers sit on the strict
/// transform, on the last exceptional curve, or at their intersection.
enum class BlowupCenter { OnFibre, OnStrictTransform, OnLastExceptional, AtIntersection };

using BlowupScript = std::vector<BlowupCenter>;

enum class FiberKind { F1, FnA, FnD };

struct FiberType {
    FiberKind kind;
    int level;  // number of blow-ups

    friend bool operator==(const FiberType& a, const FiberType& b) {
        return a.kind == b.kind && a.level == b.level;
    }
};

inline std::string fiber_type_name(const FiberType& ft) {
    switch (ft.kind) {
        case FiberKind::F1: return "F1";
        case FiberKind::FnA: return "F" + std::to_string(ft.level) + "(A)";
        default: return "F" + std::to_string(ft.level) + "(D)";
    }
}

inline void validate_script(const BlowupScript& script) {
    if (script.empty()) throw std::invalid_argument("empty blow-up script");
    if (script[0] != BlowupCenter::OnFibre)
        throw std::invalid_argument("the first blow-up center must lie on the fibre");
    for (std::size_t i = 1; i < script.size(); ++i) {
        if (script[i] == BlowupCenter::OnFibre)
            throw std::invalid_argument("only the first center may be tagged on-fibre");
    }
}

/// Fibre type from a blow-up script: one step gives a pair of lines on a
/// smooth surface; a center at the intersection point produces the
/// coincident-lines type, any other iterated center the distinct-lines
/// type.
inline FiberType classify_fiber(const BlowupScript& script) {
    validate_script(script);
    int n = static_cast<int>(script.size());
    if (n == 1) return {FiberKind::F1, 1};
    for (std::size_t i = 1; i < script.size(); ++i)
        if (script[i] == BlowupCenter::AtIntersection) return {FiberKind::FnD, n};
    return {FiberKind::FnA, n};
}

inline int level(const BlowupScript& script) {
    validate_script(script);
    return static_cast<int>(script.size());
}

/// Level of the whole surface: the sum over its degenerate fibres; this
/// equals the node count of the standard model.
inline int surface_level(const std::vector<BlowupScript>& scripts) {
    int total = 0;
    for (const auto& s : scripts) total += level(s);
    return total;
}

/// Placement of the degree-4 fibre divisor on the components of a
/// degenerate fibre.
///
/// Level 1 has the seven classical configurations (a)..(g), with
/// P_i on the strict transform, Q_i on the exceptional line and A their
/// intersection:
///   (a) P1+P2+Q1+Q2  (b) P1+P2+2Q1  (c) 2P1+Q1+Q2  (d) 2P1+2Q1
///   (e) P1+2A+Q1     (f) P1+3A      (g) 3A+Q1
///
/// For distinct-lines fibres of level n >= 2, either the model keeps one
/// double point (SinglePoint, with the curve tangent or transversal to
/// the last exceptional line) or splits into two double points of kinds
/// h + k = n (Split, each branch tangent or transversal). Coincident-line
/// fibres carry the divisor on a double line with one or two support
/// points (DoubleLine).
struct DivisorPattern {
    enum class Kind { Level1, SinglePoint, Split, DoubleLine } kind;

    // Level1
    char level1_case = 0;  // 'a'..'g'

    // SinglePoint
    bool tangent_to_exceptional = false;

    // Split
    int h = 0, k = 0;
    bool h_tangent = false, k_tangent = false;

    // DoubleLine
    bool single_support = false;  // all four points at one place

    static DivisorPattern level1(char c) {
        if (c < 'a' || c > 'g') throw std::invalid_argument("level-1 case must be one of a..g");
        DivisorPattern p{Kind::Level1};
        p.level1_case = c;
        return p;
    }
    static DivisorPattern single_point(bool tangent) {
        DivisorPattern p{Kind::SinglePoint};
        p.tangent_to_exceptional = tangent;
        return p;
    }
    static DivisorPattern split(int h, int k, bool h_tangent, bool k_tangent) {
        DivisorPattern p{Kind::Split};
        p.h = h;
        p.k = k;
        p.h_tangent = h_tangent;
        p.k_tangent = k_tangent;
        return p;
    }
    static DivisorPattern double_line(bool single_support) {
        DivisorPattern p{Kind::DoubleLine};
        p.single_support = single_support;
        return p;
    }
};

/// Double point of the n-th kind: y^2 = x^(2n) for nodes (n = 1 node,
/// 2 tacnode, 3 oscnode) and y^2 = x^(2n+1) for cusps (n = 1 cusp,
/// 2 ramphoid). The attitude records whether the fibre tangent coincides
/// with a branch tangent.
struct SingularityKind {
    enum class Family { Node, Cusp } family;
    int kind;
    enum class Attitude { Transversal, Tangential } attitude;

    friend bool operator==(const SingularityKind& a, const SingularityKind& b) {
        return a.family == b.family && a.kind == b.kind && a.attitude == b.attitude;
    }
};

inline std::string singularity_name(const SingularityKind& s) {
    std::string base;
    if (s.family == SingularityKind::Family::Node) {
        base = s.kind == 1 ? "node" : s.kind == 2 ? "tacnode" : s.kind == 3 ? "oscnode"
                                                  : "node-of-kind-" + std::to_string(s.kind);
    } else {
        base = s.kind == 1 ? "cusp" : s.kind == 2 ? "ramphoid cusp"
                                    : "cusp-of-kind-" + std::to_string(s.kind);
    }
    return (s.attitude == SingularityKind::Attitude::Transversal ? "transversal " : "tangential ") + base;
}

/// Double points of the birational model produced by one degenerate
/// fibre. A single double point is a node exactly when the curve meets
/// the last exceptional line in two distinct points; tangency (or a
/// doubled point of the divisor) gives a cusp. Distinct-lines fibres
/// only ever produce transversal points once the level exceeds 1.
inline std::vector<SingularityKind> singularities_from_fiber(const FiberType& ft, const DivisorPattern& dp) {
    using F = SingularityKind::Family;
    using A = SingularityKind::Attitude;
    switch (ft.kind) {
        case FiberKind::F1: {
            if (dp.kind != DivisorPattern::Kind::Level1 || ft.level != 1)
                throw std::invalid_argument("level-1 fibres take the (a)..(g) patterns");
            switch (dp.level1_case) {
                case 'a': return {{F::Node, 1, A::Transversal}};
                case 'b': return {{F::Cusp, 1, A::Transversal}};
                case 'c': return {{F::Node, 1, A::Transversal}};
                case 'd': return {{F::Cusp, 1, A::Transversal}};
                case 'e': return {{F::Node, 1, A::Tangential}};
                case 'f': return {{F::Cusp, 1, A::Tangential}};
                default: return {{F::Node, 1, A::Tangential}};  // (g)
            }
        }
        case FiberKind::FnA: {
            if (dp.kind == DivisorPattern::Kind::SinglePoint) {
                return {{dp.tangent_to_exceptional ? F::Cusp : F::Node, ft.level, A::Transversal}};
            }
            if (dp.kind == DivisorPattern::Kind::Split) {
                if (dp.h < 1 || dp.k < dp.h || dp.h + dp.k != ft.level)
                    throw std::invalid_argument("split pattern needs kinds 1 <= h <= k with h + k = n");
                return {{dp.h_tangent ? F::Cusp : F::Node, dp.h, A::Transversal},
                        {dp.k_tangent ? F::Cusp : F::Node, dp.k, A::Transversal}};
            }
            throw std::invalid_argument("distinct-lines fibres take single-point or split patterns");
        }
        default: {  // FnD
            if (dp.kind != DivisorPattern::Kind::DoubleLine)
                throw std::invalid_argument("coincident-lines fibres take double-line patterns");
            return {{dp.single_support ? F::Cusp : F::Node, ft.level, A::Tangential}};
        }
    }
}

struct LevelTableRow {
    FiberType fiber;
    std::string pattern;
    std::vector<SingularityKind> singularities;
    bool liftable = true;  // whether the configuration survives one more blow-up
};

/// Complete classification rows for all fibre levels up to n. Level 1
/// reproduces the seven cases with their node/cusp split; the tangential
/// cases (e), (f), (g) cannot appear under a further blow-up and are
/// marked non-liftable.
inline std::vector<LevelTableRow> enumerate_level_table(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_level_table: level must be >= 1");
    std::vector<LevelTableRow> rows;
    for (char c = 'a'; c <= 'g'; ++c) {
        FiberType f1{FiberKind::F1, 1};
        DivisorPattern p = DivisorPattern::level1(c);
        rows.push_back({f1, std::string("(") + c + ")", singularities_from_fiber(f1, p), c < 'e'});
    }
    for (int m = 2; m <= n; ++m) {
        FiberType fa{FiberKind::FnA, m};
        for (bool tangent : {false, true}) {
            DivisorPattern p = DivisorPattern::single_point(tangent);
            rows.push_back({fa, tangent ? "single point, tangent to exceptional"
                                        : "single point, transversal to exceptional",
                            singularities_from_fiber(fa, p), true});
        }
        for (int h = 1; 2 * h <= m; ++h) {
            int k = m - h;
            for (bool ht : {false, true})
                for (bool kt : {false, true}) {
                    if (h == k && ht && !kt) continue;  // unordered pair
                    DivisorPattern p = DivisorPattern::split(h, k, ht, kt);
                    rows.push_back({fa,
                                    "split " + std::to_string(h) + "+" + std::to_string(k) + ", " +
                                        (ht ? "tangent" : "transversal") + "+" + (kt ? "tangent" : "transversal"),
                                    singularities_from_fiber(fa, p), true});
                }
        }
        FiberType fd{FiberKind::FnD, m};
        for (bool single : {false, true}) {
            DivisorPattern p = DivisorPattern::double_line(single);
            rows.push_back({fd, single ? "double line, one support point" : "double line, two support points",
                            singularities_from_fiber(fd, p), true});
        }
    }
    return rows;
}

}  // namespace gonal4

#endif  // GONAL4_FIBERCLASS_HPP
