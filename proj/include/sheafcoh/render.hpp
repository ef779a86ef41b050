#pragma once

#include <json.hpp>

#include <sstream>
#include <string>

#include "sheafcoh/beilinson.hpp"
#include "sheafcoh/criteria.hpp"
#include "sheafcoh/parse.hpp"

namespace sheafcoh {

using nlohmann::json;
using nlohmann::ordered_json;

/// Exact integers: plain JSON numbers while they are faithfully
/// representable as doubles (below 2^53), decimal strings beyond that.
inline json json_int(const Int& v) {
    static const Int limit = Int(1) << 53;
    if (v > -limit && v < limit) return json((long long)v.convert_to<long long>());
    return json(v.str());
}

inline json to_json(const multidegree& m) {
    json a = json::array();
    for (int v : m.e) a.push_back(v);
    return a;
}

inline json to_json(const sheaf_sum& S) {
    json terms = json::array();
    for (const auto& [A, mult] : S.terms())
        terms.push_back({{"atom", to_string(A)}, {"mult", json_int(mult)}});
    return terms;
}

inline json to_json(const coh_table& t) {
    json out = json::object();
    for (const auto& [q, h] : t) out[std::to_string(q)] = json_int(h);
    return out;
}

inline json to_json(const witness& w) {
    return {{"t", w.t}, {"q", w.q}, {"dim", json_int(w.dim)}};
}

inline json to_json(const block_collection& C) {
    json blocks = json::array();
    for (const auto& blk : C.blocks) {
        json members = json::array();
        for (const atom& A : blk) members.push_back(to_string(A));
        blocks.push_back(members);
    }
    json type = json::array();
    for (int a : C.type()) type.push_back(a);
    return {{"d", (int)C.blocks.size() - 1}, {"type", type}, {"blocks", blocks}};
}

inline json to_json(const std::vector<block_violation>& vs) {
    json arr = json::array();
    for (const auto& v : vs)
        arr.push_back({{"rule", to_string(v.which)},
                       {"from", {v.block_from, v.index_from}},
                       {"to", {v.block_to, v.index_to}},
                       {"ext", v.degree},
                       {"dim", json_int(v.dim)}});
    return {{"pass", vs.empty()}, {"violations", arr}};
}

inline json to_json(const dual_blocks& D) {
    json entries = json::array();
    for (const auto& e : D.entries)
        entries.push_back({{"k", e.k},
                           {"source", to_string(atom::line(D.X, e.source))},
                           {"image", to_string(e.image)},
                           {"rank", json_int(e.image.rank())}});
    return {{"entries", entries}};
}

inline json to_json(const std::vector<duality_violation>& vs) {
    json arr = json::array();
    for (const auto& v : vs)
        arr.push_back({{"k", v.k},
                       {"source", to_json(v.source)},
                       {"target_block", v.target_block},
                       {"target", to_json(v.target)},
                       {"ext", v.degree},
                       {"dim", json_int(v.dim)},
                       {"expected", json_int(v.expected)}});
    return {{"pass", vs.empty()}, {"violations", arr}};
}

inline json to_json(const e1_page& page) {
    json cells = json::array();
    for (const auto& [pq, entries] : page.cells) {
        json es = json::array();
        for (const auto& [label, mult] : entries)
            es.push_back({{"label", to_string(label)}, {"mult", json_int(mult)}});
        cells.push_back({{"p", pq.first}, {"q", pq.second}, {"entries", es}});
    }
    return {{"variant", to_string(page.variant)},
            {"sheaf", to_string(page.source)},
            {"cells", cells}};
}

inline json to_json(const kclass_result& r) {
    json res = json::array();
    for (const Int& v : r.residual.values) res.push_back(json_int(v));
    return {{"pass", r.pass}, {"residual", res}};
}

inline json to_json(const split_result& r) {
    if (r.certified) return {{"verdict", "CERTIFIED_SPLIT"}};
    json w = to_json(*r.w);
    w["box"] = to_json(*r.box);
    return {{"verdict", "INCONCLUSIVE"}, {"witness", w}};
}

inline json to_json(const characterize_result& r) {
    if (r.pass) return {{"verdict", "PASS"}, {"verified", r.normal_form_verified}};
    const characterize_failure& f = *r.failure;
    json reason;
    switch (f.which) {
        case characterize_failure::kind::rank:
            reason = {{"kind", "rank"},
                      {"expected", json_int(f.expected_rank)},
                      {"actual", json_int(f.actual_rank)}};
            break;
        case characterize_failure::kind::vanishing:
        case characterize_failure::kind::corner:
            reason = {{"kind",
                       f.which == characterize_failure::kind::vanishing ? "vanishing" : "corner"},
                      {"p", f.p},
                      {"member", to_json(f.member)},
                      {"degree", f.degree},
                      {"dim", json_int(f.dim)},
                      {"expected", json_int(f.expected)}};
            break;
    }
    return {{"verdict", "FAIL"}, {"reason", reason}};
}

inline json to_json(const corner_report& r) {
    json vs = json::array();
    for (const auto& v : r.violations)
        vs.push_back({{"p", v.p}, {"member", to_json(v.member)}, {"dim", json_int(v.dim)}});
    return {{"hypotheses_hold", r.hypotheses_hold},
            {"violations", vs},
            {"h0", json_int(r.h0)},
            {"summand", to_json(r.summand)},
            {"verified", r.verified}};
}

// ---------------------------------------------------------------------------
// plain-text tables; same numeric content as the JSON, aligned for humans
// ---------------------------------------------------------------------------

inline std::string table_of(const coh_table& t) {
    std::ostringstream os;
    os << "q    h^q\n";
    if (t.empty()) os << "(all cohomology vanishes)\n";
    for (const auto& [q, h] : t) os << q << "    " << h << "\n";
    return os.str();
}

inline std::string table_of(const std::vector<witness>& ws) {
    std::ostringstream os;
    if (ws.empty()) {
        os << "ACM: no intermediate cohomology for any diagonal twist\n";
        return os.str();
    }
    os << "not ACM: " << ws.size() << " witness(es)\n";
    os << "t      q    dim\n";
    for (const auto& w : ws) os << w.t << "      " << w.q << "    " << w.dim << "\n";
    return os.str();
}

inline std::string table_of(const block_collection& C) {
    std::ostringstream os;
    for (size_t j = 0; j < C.blocks.size(); ++j) {
        os << "block " << j << " (size " << C.blocks[j].size() << "):";
        for (const atom& A : C.blocks[j]) os << " " << to_string(A);
        os << "\n";
    }
    os << "type: (";
    auto t = C.type();
    for (size_t i = 0; i < t.size(); ++i) os << (i ? ", " : "") << t[i];
    os << ")\n";
    return os.str();
}

inline std::string table_of(const std::vector<block_violation>& vs) {
    std::ostringstream os;
    if (vs.empty()) {
        os << "axioms: pass\n";
        return os.str();
    }
    os << "axioms: " << vs.size() << " violation(s)\n";
    for (const auto& v : vs)
        os << "  " << to_string(v.which) << ": Ext^" << v.degree << "(block " << v.block_from
           << " #" << v.index_from << ", block " << v.block_to << " #" << v.index_to
           << ") = " << v.dim << "\n";
    return os.str();
}

inline std::string table_of(const dual_blocks& D) {
    std::ostringstream os;
    os << "k    source            image             rank\n";
    for (const auto& e : D.entries)
        os << e.k << "    " << to_string(atom::line(D.X, e.source)) << "    "
           << to_string(e.image) << "    " << e.image.rank() << "\n";
    return os.str();
}

inline std::string table_of(const std::vector<duality_violation>& vs) {
    std::ostringstream os;
    if (vs.empty()) {
        os << "orthogonality: pass\n";
        return os.str();
    }
    os << "orthogonality: " << vs.size() << " violation(s)\n";
    for (const auto& v : vs)
        os << "  k=" << v.k << " source " << to_string(v.source) << " vs block "
           << v.target_block << " member " << to_string(v.target) << ": Ext^" << v.degree
           << " = " << v.dim << ", expected " << v.expected << "\n";
    return os.str();
}

inline std::string table_of(const e1_page& page) {
    std::ostringstream os;
    os << "E1 page, variant " << to_string(page.variant) << " of " << to_string(page.source)
       << "\n";
    if (page.cells.empty()) {
        os << "(empty page)\n";
        return os.str();
    }
    for (const auto& [pq, entries] : page.cells) {
        os << "(" << pq.first << "," << pq.second << "):";
        for (const auto& [label, mult] : entries)
            os << " " << to_string(label) << "^" << mult;
        os << "\n";
    }
    return os.str();
}

inline std::string table_of(const kclass_result& r) {
    std::ostringstream os;
    os << "k-class check: " << (r.pass ? "pass" : "FAIL") << "\nresidual:";
    for (const Int& v : r.residual.values) os << " " << v;
    os << "\n";
    return os.str();
}

inline std::string table_of(const split_result& r) {
    std::ostringstream os;
    if (r.certified) {
        os << "verdict: CERTIFIED_SPLIT\n";
    } else {
        os << "verdict: INCONCLUSIVE\n";
        os << "witness: box " << to_string(*r.box) << ", t=" << r.w->t << ", q=" << r.w->q
           << ", dim=" << r.w->dim << "\n";
    }
    return os.str();
}

inline std::string table_of(const characterize_result& r) {
    std::ostringstream os;
    if (r.pass) {
        os << "verdict: PASS\n";
        os << "normal form matches: " << (r.normal_form_verified ? "yes" : "no") << "\n";
        return os.str();
    }
    os << "verdict: FAIL\n";
    const characterize_failure& f = *r.failure;
    if (f.which == characterize_failure::kind::rank)
        os << "rank mismatch: expected " << f.expected_rank << ", got " << f.actual_rank << "\n";
    else
        os << "h^" << f.degree << "(F ⊗ O" << to_string(f.member) << ") = " << f.dim
           << ", expected " << f.expected << " (p=" << f.p << ")\n";
    return os.str();
}

inline std::string table_of(const corner_report& r) {
    std::ostringstream os;
    os << "hypotheses hold: " << (r.hypotheses_hold ? "yes" : "no") << "\n";
    if (!r.hypotheses_hold) {
        for (const auto& v : r.violations)
            os << "  h^" << (-v.p - 1) << "(F ⊗ O" << to_string(v.member) << ") = " << v.dim
               << " (p=" << v.p << ")\n";
        return os.str();
    }
    os << "h0: " << r.h0 << "\n";
    os << "summand: " << to_string(r.summand) << "\n";
    os << "verified sub-multiset: " << (r.verified ? "yes" : "no") << "\n";
    return os.str();
}

}  // namespace sheafcoh
