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

#ifndef GONAL4_NODECURVE_HPP
#define GONAL4_NODECURVE_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gonal4/bipoly.hpp"
#include "gonal4/invariants.hpp"
#include "gonal4/irreducible.hpp"
#include "gonal4/matrix.hpp"
#include "gonal4/rng.hpp"
#include "gonal4/singular.hpp"

namespace gonal4 {

// Constructive realization of admissible invariant tuples over a prime
// field: place nodes on two lines of one ruling and on fibres of the
// other, impose the tangent-plane conditions as a linear system, and
// certify a random kernel element as a curve with exactly those nodes.

/// Node layout for a tuple (g, lambda, a, b) on the quadric. M and N are
/// the lines u = m and u = n of the ruling that meets the curve lambda
/// times; the q-fibres are lines v = const of the degree-4 ruling. The
/// expected node counts are lambda-2-a on M, lambda-2-b on N and one on
/// each q-fibre, and all node v-coordinates are pairwise distinct.
struct NodePlan {
    u64 p = 0;
    i64 g = 0, lambda = 0, a = 0, b = 0, c = 0, delta = 0;
    u64 m_line = 0, n_line = 0;
    std::vector<u64> q_fibers;
    std::vector<QuadricPoint> pts_m, pts_n, pts_q;

    std::vector<QuadricPoint> all_points() const {
        std::vector<QuadricPoint> all(pts_m);
        all.insert(all.end(), pts_n.begin(), pts_n.end());
        all.insert(all.end(), pts_q.begin(), pts_q.end());
        return all;
    }
};

/// Deterministic node plan for an admissible tuple. Requires p large
/// enough to host the distinct coordinates comfortably.
inline NodePlan build_node_plan(i64 g, i64 lambda, i64 a, i64 b, u64 p, u64 seed) {
    InvariantTuple tup = check_admissible_t0(g, lambda, a, b);
    if (!tup.admissible) {
        std::string msg = "build_node_plan: inadmissible tuple:";
        for (const auto& r : tup.reasons) msg += " " + r;
        throw std::domain_error(msg);
    }
    check_field_modulus(p);
    if (static_cast<i64>(p) <= 4 * tup.delta + 4 * lambda)
        throw std::domain_error("build_node_plan: field too small for distinct coordinates");

    NodePlan plan;
    plan.p = p;
    plan.g = g;
    plan.lambda = lambda;
    plan.a = a;
    plan.b = b;
    plan.c = tup.c;
    plan.delta = tup.delta;

    CounterRng rng(seed, 0x706c616eull);
    std::set<u64> used_u, used_v;
    auto fresh_u = [&]() {
        u64 x;
        do { x = rng.next_below(p); } while (used_u.count(x));
        used_u.insert(x);
        return x;
    };
    auto fresh_v = [&]() {
        u64 x;
        do { x = rng.next_below(p); } while (used_v.count(x));
        used_v.insert(x);
        return x;
    };

    plan.m_line = fresh_u();
    plan.n_line = fresh_u();
    for (i64 i = 0; i < lambda - 2 - a; ++i) plan.pts_m.push_back({plan.m_line, fresh_v()});
    for (i64 i = 0; i < lambda - 2 - b; ++i) plan.pts_n.push_back({plan.n_line, fresh_v()});
    for (i64 i = 0; i < lambda - 2 - plan.c; ++i) {
        u64 q = fresh_v();
        plan.q_fibers.push_back(q);
        plan.pts_q.push_back({fresh_u(), q});
    }
    return plan;
}

/// Three linear conditions per point (value and both partials) on the
/// coefficient grid of a bidegree (4, lambda) form: a 3*delta by
/// 5*(lambda+1) matrix. Column k = i*(lambda+1)+j holds u^i v^j.
inline MatrixFp node_condition_matrix(const std::vector<QuadricPoint>& points, i64 lambda, u64 p) {
    const std::size_t cols = static_cast<std::size_t>(5 * (lambda + 1));
    MatrixFp M(3 * points.size(), cols, p);
    for (std::size_t n = 0; n < points.size(); ++n) {
        const u64 u = points[n].u % p, v = points[n].v % p;
        std::vector<u64> up(5, 1), vp(static_cast<std::size_t>(lambda + 1), 1);
        for (int i = 1; i < 5; ++i) up[static_cast<std::size_t>(i)] = mulmod(up[static_cast<std::size_t>(i - 1)], u, p);
        for (i64 j = 1; j <= lambda; ++j) vp[static_cast<std::size_t>(j)] = mulmod(vp[static_cast<std::size_t>(j - 1)], v, p);
        for (i64 i = 0; i <= 4; ++i)
            for (i64 j = 0; j <= lambda; ++j) {
                std::size_t col = static_cast<std::size_t>(i * (lambda + 1) + j);
                u64 mon = mulmod(up[static_cast<std::size_t>(i)], vp[static_cast<std::size_t>(j)], p);
                M.at(3 * n, col) = mon;
                if (i >= 1)
                    M.at(3 * n + 1, col) =
                        mulmod(static_cast<u64>(i), mulmod(up[static_cast<std::size_t>(i - 1)], vp[static_cast<std::size_t>(j)], p), p);
                if (j >= 1)
                    M.at(3 * n + 2, col) =
                        mulmod(static_cast<u64>(j) % p, mulmod(up[static_cast<std::size_t>(i)], vp[static_cast<std::size_t>(j - 1)], p), p);
            }
    }
    return M;
}

inline MatrixFp node_condition_matrix(const NodePlan& plan) {
    return node_condition_matrix(plan.all_points(), plan.lambda, plan.p);
}

struct RankCheck {
    std::size_t rank = 0;
    std::size_t expected = 0;
    bool pass = false;
    std::size_t kernel_dim = 0;
};

/// The tangent-plane span has maximal dimension exactly when the
/// condition matrix has full row rank 3*delta. Degenerate plans report
/// pass = false instead of raising.
inline RankCheck keylemma_rank_check(const std::vector<QuadricPoint>& points, i64 lambda, u64 p) {
    MatrixFp M = node_condition_matrix(points, lambda, p);
    RankKernel rk = rank_and_kernel(M);
    RankCheck out;
    out.rank = rk.rank;
    out.expected = 3 * points.size();
    out.pass = out.rank == out.expected;
    out.kernel_dim = M.cols - rk.rank;
    return out;
}

inline RankCheck keylemma_rank_check(const NodePlan& plan) {
    return keylemma_rank_check(plan.all_points(), plan.lambda, plan.p);
}

/// Random nonzero combination of kernel vectors, mapped back to the
/// coefficient grid. Deterministic for fixed (kernel, seed).
inline BidegreeForm sample_curve(const std::vector<std::vector<u64>>& kernel, i64 lambda, u64 p, u64 seed) {
    if (kernel.empty()) throw std::invalid_argument("sample_curve: empty kernel");
    CounterRng rng(seed, 0x73616d706c65ull);
    const std::size_t cols = kernel[0].size();
    std::vector<u64> combo(cols, 0);
    bool nonzero = false;
    while (!nonzero) {
        std::fill(combo.begin(), combo.end(), 0);
        for (const auto& k : kernel) {
            u64 c = rng.next_below(p);
            if (c == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) combo[j] = addmod(combo[j], mulmod(c, k[j], p), p);
        }
        for (u64 x : combo)
            if (x) { nonzero = true; break; }
    }
    BidegreeForm f(p, lambda);
    if (combo.size() != f.coeffs.size()) throw std::logic_error("sample_curve: kernel length mismatch");
    f.coeffs = std::move(combo);
    return f;
}

/// Per-node certificate: the form and both partials vanish and the
/// Hessian determinant does not (an ordinary node, whether or not its
/// tangents are rational).
struct NodeCertificate {
    struct Entry {
        QuadricPoint pt;
        u64 value, fu, fv, hessian;
        bool ok;
    };
    std::vector<Entry> entries;
    bool pass = true;
};

inline NodeCertificate verify_nodes(const BidegreeForm& f, const std::vector<QuadricPoint>& nodes) {
    NodeCertificate cert;
    const u64 p = f.p;
    BidegreeForm fu = f.du(), fv = f.dv();
    BidegreeForm fuu = fu.du(), fuv = fu.dv(), fvv = fv.dv();
    for (const QuadricPoint& pt : nodes) {
        NodeCertificate::Entry e{pt, f.eval(pt.u, pt.v), fu.eval(pt.u, pt.v), fv.eval(pt.u, pt.v), 0, false};
        u64 h = submod(mulmod(fuu.eval(pt.u, pt.v), fvv.eval(pt.u, pt.v), p),
                       mulmod(fuv.eval(pt.u, pt.v), fuv.eval(pt.u, pt.v), p), p);
        e.hessian = h;
        e.ok = e.value == 0 && e.fu == 0 && e.fv == 0 && h != 0;
        cert.pass = cert.pass && e.ok;
        cert.entries.push_back(e);
    }
    return cert;
}

struct RecoveredInvariants {
    i64 a = 0, b = 0;
    bool structure_ok = false;
    std::string note;
};

/// Reads (a, b) back from an unlabeled node set: group the nodes by
/// u-coordinate; the two largest groups sit on the two unisecant lines
/// and every remaining node is alone on its own fibre.
inline RecoveredInvariants recover_invariants(i64 lambda, const std::vector<QuadricPoint>& nodes) {
    RecoveredInvariants out;
    std::map<u64, std::vector<u64>> groups;
    std::set<u64> all_v;
    for (const QuadricPoint& pt : nodes) {
        groups[pt.u].push_back(pt.v);
        if (!all_v.insert(pt.v).second) {
            out.note = "two nodes share a fibre";
            return out;
        }
    }
    std::vector<std::size_t> sizes;
    for (const auto& [u, vs] : groups) sizes.push_back(vs.size());
    std::sort(sizes.rbegin(), sizes.rend());
    std::size_t s1 = sizes.size() > 0 ? sizes[0] : 0;
    std::size_t s2 = sizes.size() > 1 ? sizes[1] : 0;
    for (std::size_t i = 2; i < sizes.size(); ++i) {
        if (sizes[i] != 1) {
            out.note = "more than two node groups share a line";
            return out;
        }
    }
    out.a = lambda - 2 - static_cast<i64>(s1);
    out.b = lambda - 2 - static_cast<i64>(s2);
    out.structure_ok = true;
    return out;
}

class ConstructionError : public std::runtime_error {
public:
    ConstructionError(const std::string& msg, std::vector<std::string> trace)
        : std::runtime_error(msg), trace_(std::move(trace)) {}
    const std::vector<std::string>& trace() const { return trace_; }

private:
    std::vector<std::string> trace_;
};

struct ConstructedCurve {
    BidegreeForm form;
    NodePlan plan;
    std::size_t rank_observed = 0;
    std::size_t kernel_dim = 0;
    NodeCertificate node_certificate;
    SingularSweep sweep;
    IrreducibilityCertificate irreducibility{IrreducibilityCertificate::Tag::Inconclusive, ""};
    i64 genus = 0;
    i64 recovered_a = 0, recovered_b = 0;
    u64 p = 0, seed = 0;
    int plan_tries = 0, sample_tries = 0;
};

/// End-to-end construction: plan, condition matrix, rank check, kernel
/// sample, node verification, exhaustive singular sweep, irreducibility.
/// Soft failures retry with derived sub-seeds: max_retries samples per
/// plan, up to 8 plans. Throws ConstructionError with the failure trace
/// when the budget runs out.
inline ConstructedCurve construct(i64 g, i64 lambda, i64 a, i64 b, u64 p, u64 seed, int max_retries = 32) {
    check_field_modulus(p);
    if (static_cast<i64>(p) <= 8 * (4 + lambda))
        throw std::domain_error("construct: field too small for specialization certificates");
    std::vector<std::string> trace;
    constexpr int kPlanBudget = 8;
    for (int plan_try = 0; plan_try < kPlanBudget; ++plan_try) {
        NodePlan plan = build_node_plan(g, lambda, a, b, p, derive_seed(seed, 1, static_cast<u64>(plan_try)));
        std::vector<QuadricPoint> pts = plan.all_points();
        MatrixFp M = node_condition_matrix(plan);
        RankKernel rk = rank_and_kernel(M);
        if (rk.rank != 3 * pts.size()) {
            trace.push_back("plan " + std::to_string(plan_try) + ": conditions not independent (rank " +
                            std::to_string(rk.rank) + " of " + std::to_string(3 * pts.size()) + ")");
            continue;
        }
        i64 expected_kernel = 5 * (lambda + 1) - 3 * plan.delta;
        if (static_cast<i64>(rk.kernel.size()) != expected_kernel)
            throw std::logic_error("construct: kernel dimension must be 5(lambda+1) - 3*delta");

        for (int samp = 0; samp < max_retries; ++samp) {
            u64 sub = derive_seed(seed, 2, static_cast<u64>(plan_try * 1024 + samp));
            BidegreeForm form = sample_curve(rk.kernel, lambda, p, sub);
            NodeCertificate nodes = verify_nodes(form, pts);
            if (!nodes.pass) {
                trace.push_back("plan " + std::to_string(plan_try) + " sample " + std::to_string(samp) +
                                ": degenerate node (vanishing Hessian)");
                continue;
            }
            SingularSweep sweep = singular_locus_complete(form, pts, sub);
            if (sweep.resample) {
                trace.push_back("plan " + std::to_string(plan_try) + " sample " + std::to_string(samp) +
                                ": " + sweep.resample_reason);
                continue;
            }
            if (!sweep.pass) {
                std::string why = sweep.extra.empty() ? "planned node not singular" : sweep.extra.front();
                trace.push_back("plan " + std::to_string(plan_try) + " sample " + std::to_string(samp) +
                                ": " + why);
                continue;
            }
            IrreducibilityCertificate irr = irreducibility_certificate(form, sub);
            if (!irr.passed()) {
                trace.push_back("plan " + std::to_string(plan_try) + " sample " + std::to_string(samp) +
                                ": irreducibility " + std::string(irr.tag_name()) + " (" + irr.witness + ")");
                continue;
            }

            ConstructedCurve out;
            out.form = std::move(form);
            out.plan = std::move(plan);
            out.rank_observed = rk.rank;
            out.kernel_dim = rk.kernel.size();
            out.node_certificate = std::move(nodes);
            out.sweep = std::move(sweep);
            out.irreducibility = std::move(irr);
            out.genus = 3 * (lambda - 1) - out.plan.delta;
            RecoveredInvariants rec = recover_invariants(lambda, pts);
            if (!rec.structure_ok) throw std::logic_error("construct: node layout lost its structure");
            out.recovered_a = rec.a;
            out.recovered_b = rec.b;
            out.p = p;
            out.seed = seed;
            out.plan_tries = plan_try + 1;
            out.sample_tries = samp + 1;
            return out;
        }
    }
    throw ConstructionError("construction failed after exhausting the retry budget", std::move(trace));
}

/// Rank experiment for surfaces of invariant t >= 1: sections of the
/// 4-secant class restrict to sum_i c_i(u) v^i with deg c_i <=
/// (lambda+t) - i*t; nodes sit on the negative section (v at infinity) in
/// distinct fibres and impose conditions on the two top coefficient
/// blocks c_4 and c_3.
struct TposRank {
    std::size_t rank = 0, expected = 0;
    bool pass = false;
    i64 basis_size = 0;
};

inline TposRank keylemma_rank_experiment_tpos(i64 g, i64 lambda, i64 t, u64 p, u64 seed) {
    InvariantTuple tup = check_admissible_tpos(g, lambda, t);
    if (!tup.admissible) {
        std::string msg = "rank experiment: inadmissible tuple:";
        for (const auto& r : tup.reasons) msg += " " + r;
        throw std::domain_error(msg);
    }
    check_field_modulus(p);
    i64 delta = tup.delta;
    std::vector<i64> width(5), offset(5);
    i64 total = 0;
    for (i64 i = 0; i <= 4; ++i) {
        width[static_cast<std::size_t>(i)] = (lambda + t) - i * t + 1;
        offset[static_cast<std::size_t>(i)] = total;
        total += width[static_cast<std::size_t>(i)];
    }
    if (total != 5 * (lambda - t) + 5)
        throw std::logic_error("rank experiment: basis size must be 5(lambda-t)+5");

    TposRank out;
    out.basis_size = total;
    out.expected = static_cast<std::size_t>(3 * delta);
    if (delta == 0) {
        out.pass = true;
        return out;
    }
    if (static_cast<i64>(p) <= 4 * delta) throw std::domain_error("rank experiment: field too small");

    CounterRng rng(seed, 0x74706f73ull);
    std::set<u64> used;
    std::vector<u64> us;
    while (static_cast<i64>(us.size()) < delta) {
        u64 x = rng.next_below(p);
        if (used.insert(x).second) us.push_back(x);
    }

    MatrixFp M(static_cast<std::size_t>(3 * delta), static_cast<std::size_t>(total), p);
    for (i64 n = 0; n < delta; ++n) {
        u64 u0 = us[static_cast<std::size_t>(n)];
        // value and u-derivative on the c_4 block, value on the c_3 block
        std::vector<u64> pw(static_cast<std::size_t>(std::max(width[4], width[3])), 1);
        for (std::size_t j = 1; j < pw.size(); ++j) pw[j] = mulmod(pw[j - 1], u0, p);
        for (i64 j = 0; j < width[4]; ++j) {
            M.at(static_cast<std::size_t>(3 * n), static_cast<std::size_t>(offset[4] + j)) = pw[static_cast<std::size_t>(j)];
            if (j >= 1)
                M.at(static_cast<std::size_t>(3 * n + 1), static_cast<std::size_t>(offset[4] + j)) =
                    mulmod(static_cast<u64>(j) % p, pw[static_cast<std::size_t>(j - 1)], p);
        }
        for (i64 j = 0; j < width[3]; ++j)
            M.at(static_cast<std::size_t>(3 * n + 2), static_cast<std::size_t>(offset[3] + j)) = pw[static_cast<std::size_t>(j)];
    }
    RankKernel rk = rank_and_kernel(M);
    out.rank = rk.rank;
    out.pass = out.rank == out.expected;
    return out;
}

}  // namespace gonal4

#endif  // GONAL4_NODECURVE_HPP
