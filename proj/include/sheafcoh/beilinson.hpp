#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sheafcoh/blocks.hpp"

namespace sheafcoh {

enum class ss_variant { I, II };

inline const char* to_string(ss_variant v) { return v == ss_variant::I ? "I" : "II"; }

/// E₁ page of a Beilinson-type spectral sequence, restricted to the square
/// -d <= p <= 0, 0 <= q <= d. Each cell lists (label, multiplicity) pairs
/// with the label kept symbolic so it can be re-tensored or dualized later;
/// zero multiplicities are omitted.
struct e1_page {
    ss_variant variant;
    space X;
    sheaf_sum source;
    std::map<std::pair<int, int>, std::vector<std::pair<atom, Int>>> cells;
};

/// Build the E₁ page for a representable F.
///
/// Variant II: cell (p, q) collects ((R^{(-p)} E)^*, h^q(F ⊗ E)) over the
/// members E of block p+d; at p = 0 the label degenerates to O(0,...,0).
///
/// Variant I: cell (p, q) collects (E, h^q((R^{(-p)} E)^∨ ⊗ F)); here
/// (R^{(-p)} E)^∨ ⊗ F must stay inside the representable class, so F has to
/// be a sum of line bundles.
inline e1_page beilinson_e1(const space& X, const sheaf_sum& F, ss_variant variant) {
    if (variant == ss_variant::I && !F.is_line_bundle_sum()) throw inexpressible_product();
    e1_page page{variant, X, F, {}};
    const dual_blocks duals = dual_collection(X);
    for (const dual_entry& e : duals.entries) {
        const int p = -e.k;
        atom label = (variant == ss_variant::II) ? e.image.dual() : atom::line(X, e.source);
        coh_table h;
        if (variant == ss_variant::II) {
            h = cohomology(tensor_line(F, e.source));
        } else {
            atom base = e.image.dual();
            sheaf_sum twisted(X);
            for (const auto& [A, mult] : F.terms()) twisted.add(tensor_atoms(base, A), mult);
            h = cohomology(twisted);
        }
        for (const auto& [q, dim] : h) page.cells[{p, q}].emplace_back(label, dim);
    }
    return page;
}

struct kclass_result {
    bool pass;
    fingerprint residual;  ///< Σ (-1)^{p+q} mult·[label] - [F]
};

/// K-theoretic convergence check: the signed sum of the cell classes must
/// equal the class of the source sheaf.
inline kclass_result kclass_check(const e1_page& page) {
    fingerprint acc;
    acc.values.assign(fingerprint_grid(page.X).size(), Int(0));
    for (const auto& [pq, entries] : page.cells)
        for (const auto& [label, mult] : entries)
            acc.accumulate(fingerprint_of(page.X, label),
                           Int(parity_sign(pq.first + pq.second)) * mult);
    acc.accumulate(fingerprint_of(page.source), Int(-1));
    return {acc.is_zero(), std::move(acc)};
}

/// A nonvanishing H^{-p-1}(F ⊗ E) that blocks the corner argument.
struct corner_violation {
    int p;
    multidegree member;
    Int dim;
};

/// Outcome of the corner-survival argument: when every cell on the q = -p-1
/// diagonal below the corner vanishes at E₁, the corner entry
/// O(0,...,0)^{h^0(F)} survives to infinity and splits off F.
struct corner_report {
    bool hypotheses_hold;
    std::vector<corner_violation> violations;
    Int h0;
    sheaf_sum summand;
    bool verified;  ///< predicted summand is a sub-multiset of F (representable F only)
};

inline corner_report corner_summand(const space& X, const sheaf_sum& F) {
    const int d = X.dim();
    block_collection blocks = standard_blocks(X);
    std::vector<corner_violation> bad;
    for (int p = -d; p <= -1; ++p)
        for (const atom& E : blocks.blocks[(size_t)(p + d)]) {
            Int dim = coh_dim(cohomology(tensor_line(F, E.line_degree())), -p - 1);
            if (dim != 0) bad.push_back({p, E.line_degree(), dim});
        }
    corner_report rep{bad.empty(), std::move(bad), 0, sheaf_sum(X), false};
    if (!rep.hypotheses_hold) return rep;
    rep.h0 = coh_dim(cohomology(F), 0);
    if (rep.h0 > 0)
        rep.summand.add(atom::line(X, multidegree(std::vector<int>((size_t)X.nfactors(), 0))),
                        rep.h0);
    rep.verified = F.contains(rep.summand);
    return rep;
}

}  // namespace sheafcoh
