#pragma once

#include <vector>

#include "sheafcoh/sheaf.hpp"

namespace sheafcoh {

/// Ordered collection of blocks of atoms; block j of the standard collection
/// on X holds every O(a) with -n_i <= a_i <= 0 and Σ a_i = j - d.
struct block_collection {
    space X;
    std::vector<std::vector<atom>> blocks;

    std::vector<int> type() const {
        std::vector<int> t;
        t.reserve(blocks.size());
        for (const auto& b : blocks) t.push_back((int)b.size());
        return t;
    }
};

namespace detail {

/// Lattice points of Π [-n_i, 0] with coordinate sum `target`, in
/// lexicographic order.
inline void sum_lattice_rec(const space& X, size_t i, int target, std::vector<int>& cur,
                            std::vector<multidegree>& out) {
    if (i + 1 == cur.size()) {
        if (-X.dims[i] <= target && target <= 0) {
            cur[i] = target;
            out.push_back(multidegree(cur));
        }
        return;
    }
    // remaining coordinates can absorb sums in [lo_rest, 0]
    int lo_rest = 0;
    for (size_t j = i + 1; j < cur.size(); ++j) lo_rest -= X.dims[j];
    for (int v = -X.dims[i]; v <= 0; ++v) {
        int rest = target - v;
        if (rest < lo_rest || rest > 0) continue;
        cur[i] = v;
        sum_lattice_rec(X, i + 1, rest, cur, out);
    }
}

inline std::vector<multidegree> sum_lattice(const space& X, int target) {
    std::vector<multidegree> out;
    std::vector<int> cur((size_t)X.nfactors(), 0);
    sum_lattice_rec(X, 0, target, cur, out);
    return out;
}

}  // namespace detail

inline block_collection standard_blocks(const space& X) {
    block_collection C{X, {}};
    const int d = X.dim();
    C.blocks.resize((size_t)d + 1);
    for (int j = 0; j <= d; ++j)
        for (const multidegree& m : detail::sum_lattice(X, j - d))
            C.blocks[(size_t)j].push_back(atom::line(X, m));
    return C;
}

/// One failed orthogonality or exceptionality condition. `rule` says which:
///   intra  — two distinct members of one block with some Ext ≠ 0
///   order  — Ext^•(later member, earlier member) ≠ 0 across blocks
///   strong — Ext^{q>0}(earlier, later) ≠ 0 across blocks
///   member — a member with Hom ≠ ℂ or a higher self-Ext
struct block_violation {
    enum class rule { intra, order, strong, member };
    rule which;
    int block_from, index_from;
    int block_to, index_to;
    int degree;
    Int dim;
};

inline const char* to_string(block_violation::rule r) {
    switch (r) {
        case block_violation::rule::intra: return "intra-block";
        case block_violation::rule::order: return "ordering";
        case block_violation::rule::strong: return "strong-exceptionality";
        case block_violation::rule::member: return "member";
    }
    return "?";
}

namespace detail {

/// Ext^q(O(a), O(b)) = h^q(O(b - a)) for line bundles.
inline coh_table ext_line(const space& X, const atom& from, const atom& to) {
    if (!from.is_line_bundle() || !to.is_line_bundle()) throw inexpressible_product();
    std::vector<int> diff;
    diff.reserve(from.factors.size());
    for (size_t i = 0; i < from.factors.size(); ++i)
        diff.push_back(to.factors[i].a - from.factors[i].a);
    return cohomology(atom::line(X, multidegree(std::move(diff))));
}

}  // namespace detail

/// Check every axiom of a block collection of line bundles and report each
/// failure; an empty report is a pass. Fullness is not checked.
inline std::vector<block_violation> verify_block_axioms(const block_collection& C) {
    using rule = block_violation::rule;
    std::vector<block_violation> out;
    const int nb = (int)C.blocks.size();

    auto record = [&](rule r, int bf, int jf, int bt, int jt, const coh_table& ext,
                      bool skip_hom_self) {
        for (const auto& [q, dim] : ext) {
            if (skip_hom_self && q == 0) continue;
            out.push_back({r, bf, jf, bt, jt, q, dim});
        }
    };

    for (int b = 0; b < nb; ++b) {
        const auto& blk = C.blocks[(size_t)b];
        for (int j = 0; j < (int)blk.size(); ++j) {
            // (iv) each member exceptional: Hom = ℂ, no higher self-Ext
            coh_table self = detail::ext_line(C.X, blk[(size_t)j], blk[(size_t)j]);
            if (coh_dim(self, 0) != 1)
                out.push_back({rule::member, b, j, b, j, 0, coh_dim(self, 0)});
            record(rule::member, b, j, b, j, self, /*skip_hom_self=*/true);
            // (i) intra-block orthogonality in both directions, all degrees
            for (int k = 0; k < (int)blk.size(); ++k) {
                if (k == j) continue;
                record(rule::intra, b, j, b, k,
                       detail::ext_line(C.X, blk[(size_t)j], blk[(size_t)k]), false);
            }
        }
    }
    for (int b = 0; b < nb; ++b)
        for (int c = b + 1; c < nb; ++c)
            for (int j = 0; j < (int)C.blocks[(size_t)b].size(); ++j)
                for (int k = 0; k < (int)C.blocks[(size_t)c].size(); ++k) {
                    const atom& earlier = C.blocks[(size_t)b][(size_t)j];
                    const atom& later = C.blocks[(size_t)c][(size_t)k];
                    // (ii) no Ext from later back to earlier, any degree
                    record(rule::order, c, k, b, j, detail::ext_line(C.X, later, earlier), false);
                    // (iii) strong exceptionality forward: Ext^{q>0} = 0
                    for (const auto& [q, dim] : detail::ext_line(C.X, earlier, later))
                        if (q > 0) out.push_back({rule::strong, b, j, c, k, q, dim});
                }
    return out;
}

/// One member of the right-mutated (left dual) collection: the source line
/// bundle O(t) in block d-k together with its image ⊠_i Λ^{-t_i} T(t_i),
/// stored in Ω-normal form.
struct dual_entry {
    int k;
    multidegree source;
    atom image;
};

struct dual_blocks {
    space X;
    std::vector<dual_entry> entries;
};

/// Closed form of the iterated right mutation of the standard collection:
/// O(t) in block d-k maps to ⊠_i Λ^{-t_i} T_{P^{n_i}}(t_i), i.e. factorwise
/// Ω^{n_i + t_i}(n_i + 1 + t_i).
inline dual_blocks dual_collection(const space& X) {
    dual_blocks out{X, {}};
    const int d = X.dim();
    for (int k = 0; k <= d; ++k) {
        for (const multidegree& t : detail::sum_lattice(X, -k)) {
            std::vector<factor> fs;
            fs.reserve(t.e.size());
            for (size_t i = 0; i < t.e.size(); ++i)
                fs.push_back(factor::tangent(X.dims[i], -t.e[i], t.e[i]));
            out.entries.push_back({k, t, atom(std::move(fs))});
        }
    }
    return out;
}

/// A failed pairing Ext^degree(image of O(source), O(target)): either a
/// dimension that should vanish and does not, or the diagonal pairing not
/// being exactly one-dimensional.
struct duality_violation {
    int k;
    multidegree source;
    int target_block;
    multidegree target;
    int degree;
    Int dim;
    Int expected;
};

/// Check the full orthogonality pattern of a candidate dual collection
/// against the standard blocks: Ext^α(R, O(a)) — computed as
/// h^α(R^∨ ⊗ O(a)) — must vanish everywhere except Ext^k(image of O(t), O(t))
/// = ℂ. An empty report is a pass.
inline std::vector<duality_violation> verify_duality(const space& X, const dual_blocks& D) {
    std::vector<duality_violation> out;
    const int d = X.dim();
    block_collection std_blocks = standard_blocks(X);
    for (const dual_entry& e : D.entries) {
        atom pairing_base = e.image.dual();  // Ext^α(R, -) = h^α(R^∨ ⊗ -)
        for (int i = 0; i <= d; ++i) {
            for (const atom& Ep : std_blocks.blocks[(size_t)i]) {
                multidegree a = Ep.line_degree();
                coh_table ext = cohomology(tensor_atoms(pairing_base, Ep));
                const bool diagonal = (i == d - e.k) && (a == e.source);
                for (int q = 0; q <= d; ++q) {
                    Int expected = (diagonal && q == e.k) ? 1 : 0;
                    Int got = coh_dim(ext, q);
                    if (got != expected) out.push_back({e.k, e.source, i, a, q, got, expected});
                }
            }
        }
    }
    return out;
}

inline std::vector<duality_violation> verify_duality(const space& X) {
    return verify_duality(X, dual_collection(X));
}

}  // namespace sheafcoh
