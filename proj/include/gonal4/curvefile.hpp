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

#ifndef GONAL4_CURVEFILE_HPP
#define GONAL4_CURVEFILE_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gonal4/nodecurve.hpp"

namespace gonal4 {

using ojson = nlohmann::ordered_json;

inline constexpr const char* kCurveSchemaVersion = "1";

/// Serialized form of a constructed curve. Writers emit the keys in a
/// fixed order; readers accept any order. Coefficients are decimal
/// strings, row-major by (u-degree, v-degree).
inline ojson curve_to_json(const ConstructedCurve& c) {
    ojson j;
    j["schema_version"] = kCurveSchemaVersion;
    j["p"] = c.p;
    j["lambda"] = c.plan.lambda;
    j["g"] = c.plan.g;
    j["a"] = c.plan.a;
    j["b"] = c.plan.b;
    ojson coeffs = ojson::array();
    for (i64 i = 0; i <= 4; ++i) {
        ojson row = ojson::array();
        for (i64 jx = 0; jx <= c.form.d2; ++jx) row.push_back(std::to_string(c.form.at(i, jx)));
        coeffs.push_back(row);
    }
    j["coeffs"] = coeffs;
    ojson nodes = ojson::array();
    for (const QuadricPoint& pt : c.plan.all_points()) nodes.push_back(ojson::array({pt.u, pt.v}));
    j["nodes"] = nodes;
    j["seed"] = c.seed;
    ojson cert;
    cert["rank_observed"] = c.rank_observed;
    cert["kernel_dim"] = c.kernel_dim;
    cert["nodes_pass"] = c.node_certificate.pass;
    cert["singular_locus_pass"] = c.sweep.pass;
    cert["irreducibility"] = ojson{{"tag", c.irreducibility.tag_name()}, {"witness", c.irreducibility.witness}};
    cert["genus"] = c.genus;
    cert["recovered_a"] = c.recovered_a;
    cert["recovered_b"] = c.recovered_b;
    j["certificates"] = cert;
    return j;
}

inline void write_curve_file(const ConstructedCurve& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << curve_to_json(c).dump(2) << "\n";
}

struct CurveFile {
    u64 p = 0;
    i64 lambda = 0, g = 0, a = 0, b = 0;
    BidegreeForm form;
    std::vector<QuadricPoint> nodes;
    u64 seed = 0;
    ojson certificates;
};

inline CurveFile parse_curve_json(const ojson& j) {
    CurveFile f;
    if (!j.contains("schema_version") || j.at("schema_version").get<std::string>() != kCurveSchemaVersion)
        throw std::invalid_argument("unsupported curve file schema version");
    f.p = j.at("p").get<u64>();
    f.lambda = j.at("lambda").get<i64>();
    f.g = j.at("g").get<i64>();
    f.a = j.at("a").get<i64>();
    f.b = j.at("b").get<i64>();
    check_field_modulus(f.p);
    if (f.lambda < 5) throw std::invalid_argument("curve file: lambda out of range");
    f.form = BidegreeForm(f.p, f.lambda);
    const ojson& coeffs = j.at("coeffs");
    if (coeffs.size() != 5) throw std::invalid_argument("curve file: need 5 coefficient rows");
    for (i64 i = 0; i <= 4; ++i) {
        const ojson& row = coeffs.at(static_cast<std::size_t>(i));
        if (static_cast<i64>(row.size()) != f.lambda + 1)
            throw std::invalid_argument("curve file: coefficient row has wrong length");
        for (i64 jx = 0; jx <= f.lambda; ++jx) {
            const ojson& cell = row.at(static_cast<std::size_t>(jx));
            u64 value = cell.is_string() ? std::stoull(cell.get<std::string>()) : cell.get<u64>();
            if (value >= f.p) throw std::invalid_argument("curve file: coefficient not reduced mod p");
            f.form.at(i, jx) = value;
        }
    }
    for (const ojson& n : j.at("nodes")) {
        u64 u = n.at(0).get<u64>(), v = n.at(1).get<u64>();
        if (u >= f.p || v >= f.p) throw std::invalid_argument("curve file: node coordinate not reduced mod p");
        f.nodes.push_back({u, v});
    }
    f.seed = j.value("seed", 0ull);
    if (j.contains("certificates")) f.certificates = j.at("certificates");
    return f;
}

inline CurveFile read_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open curve file: " + path);
    ojson j = ojson::parse(in);
    return parse_curve_json(j);
}

struct VerifyReport {
    bool admissible = false;
    bool node_count_ok = false;
    bool distinct_fibres_ok = false;
    bool nodes_pass = false;
    bool singular_locus_pass = false;
    bool irreducible = false;
    bool invariants_recovered = false;
    bool genus_ok = false;
    std::vector<std::string> failures;

    bool pass() const { return failures.empty(); }
};

/// Re-certifies a curve file from scratch: admissibility, node count,
/// node certificates, exhaustive singular sweep, irreducibility, genus
/// and recovered invariants.
inline VerifyReport verify_curve_file(const CurveFile& f) {
    VerifyReport r;
    InvariantTuple tup = check_admissible_t0(f.g, f.lambda, f.a, f.b);
    r.admissible = tup.admissible;
    if (!r.admissible) {
        std::string msg = "tuple inadmissible:";
        for (const auto& t : tup.reasons) msg += " " + t;
        r.failures.push_back(msg);
        return r;
    }

    r.node_count_ok = static_cast<i64>(f.nodes.size()) == tup.delta;
    if (!r.node_count_ok)
        r.failures.push_back("node count " + std::to_string(f.nodes.size()) + " differs from " +
                             std::to_string(tup.delta));

    {
        std::set<u64> vs;
        r.distinct_fibres_ok = true;
        for (const QuadricPoint& pt : f.nodes)
            if (!vs.insert(pt.v).second) r.distinct_fibres_ok = false;
        if (!r.distinct_fibres_ok) r.failures.push_back("nodes share a fibre");
    }

    NodeCertificate nodes = verify_nodes(f.form, f.nodes);
    r.nodes_pass = nodes.pass;
    if (!nodes.pass) {
        for (const auto& e : nodes.entries)
            if (!e.ok)
                r.failures.push_back("node certificate failed at (" + std::to_string(e.pt.u) + ", " +
                                     std::to_string(e.pt.v) + ")");
    }

    SingularSweep sweep = singular_locus_complete(f.form, f.nodes, f.seed);
    r.singular_locus_pass = sweep.pass && !sweep.resample;
    if (sweep.resample) r.failures.push_back("singular sweep: " + sweep.resample_reason);
    for (const auto& e : sweep.extra) r.failures.push_back("singular sweep: " + e);
    if (!sweep.resample && sweep.planned_found != f.nodes.size())
        r.failures.push_back("singular sweep rediscovered only " + std::to_string(sweep.planned_found) +
                             " of " + std::to_string(f.nodes.size()) + " nodes");

    IrreducibilityCertificate irr = irreducibility_certificate(f.form, f.seed);
    r.irreducible = irr.passed();
    if (!r.irreducible)
        r.failures.push_back("irreducibility certificate: " + std::string(irr.tag_name()) + " (" +
                             irr.witness + ")");

    RecoveredInvariants rec = recover_invariants(f.lambda, f.nodes);
    r.invariants_recovered = rec.structure_ok && rec.a == f.a && rec.b == f.b;
    if (!r.invariants_recovered)
        r.failures.push_back(rec.structure_ok
                                 ? "recovered invariants (" + std::to_string(rec.a) + ", " + std::to_string(rec.b) +
                                       ") differ from file"
                                 : "node layout unstructured: " + rec.note);

    i64 genus = 3 * (f.lambda - 1) - static_cast<i64>(f.nodes.size());
    r.genus_ok = genus == f.g;
    if (!r.genus_ok) r.failures.push_back("genus " + std::to_string(genus) + " differs from g");

    return r;
}

}  // namespace gonal4

#endif  // GONAL4_CURVEFILE_HPP
