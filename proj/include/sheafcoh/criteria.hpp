#pragma once

#include <optional>
#include <set>

#include <vector>

#include "sheafcoh/blocks.hpp"

namespace sheafcoh {

/// A diagonal twist with intermediate cohomology: h^q(S ⊗ O(t,...,t)) = dim
/// with 0 < q < d.
struct witness {
    int t;
    int q;
    Int dim;

    friend bool operator==(const witness&, const witness&) = default;
};

/// All witnesses against S being an ACM sheaf for the diagonal polarization;
/// an empty list means S is ACM. The "for all t" quantifier is decided
/// exactly by a finite scan:
///
/// By Künneth, h^q(S ⊗ O(t,...,t)) is a sum over atoms and over compositions
/// (q_1,...,q_s) of Σq_i = q of products of per-factor dimensions, and each
/// per-factor dimension is nonzero on a set of twists of one of three shapes:
///
///   q_i = 0    -> a final segment  {t >= c}   (UP)
///   q_i = n_i  -> an initial segment {t <= c} (DOWN)
///   q_i = p_i, interior -> a single point     (POINT)
///   any other degree    -> empty
///
/// A composition with every q_i = 0 has q = 0 and one with every q_i = n_i
/// has q = d, so an intermediate composition (0 < q < d) never intersects
/// only final segments nor only initial ones: its twist set mixes an UP with
/// a DOWN, or contains a POINT, and is therefore finite. The union of these
/// finite sets over all atoms and intermediate compositions covers every
/// twist at which any intermediate cohomology can appear, and is scanned
/// exhaustively.
inline std::vector<witness> acm_check(const space& X, const sheaf_sum& S) {
    const int d = X.dim();
    const int s = X.nfactors();
    std::set<int> candidates;
    for (const auto& [A, mult] : S.terms()) {
        // per-factor candidate degrees: 0, interior p, n
        std::vector<std::vector<int>> degs((size_t)s);
        for (int i = 0; i < s; ++i) {
            const factor& f = A.factors[(size_t)i];
            degs[(size_t)i].push_back(0);
            if (f.p > 0 && f.p < f.n) degs[(size_t)i].push_back(f.p);
            if (f.n > 0) degs[(size_t)i].push_back(f.n);
        }
        std::vector<size_t> idx((size_t)s, 0);
        while (true) {
            int q = 0;
            for (int i = 0; i < s; ++i) q += degs[(size_t)i][idx[(size_t)i]];
            if (q > 0 && q < d) {
                support_set inter = support(A.factors[0], degs[0][idx[0]]);
                for (int i = 1; i < s && !inter.is_empty(); ++i)
                    inter = inter.intersect(support(A.factors[(size_t)i], degs[(size_t)i][idx[(size_t)i]]));
                for (int t : inter.points()) candidates.insert(t);
            }
            int i = s - 1;
            while (i >= 0 && idx[(size_t)i] + 1 == degs[(size_t)i].size()) idx[(size_t)i--] = 0;
            if (i < 0) break;
            ++idx[(size_t)i];
        }
    }
    std::vector<witness> out;
    for (int t : candidates) {
        coh_table h = cohomology(tensor_line(S, multidegree::diagonal(X, t)));
        for (const auto& [q, dim] : h)
            if (q > 0 && q < d) out.push_back({t, q, dim});
    }
    return out;  // ordered by (t, q): candidates ascending, table keys ascending
}

/// Verdict of the one-directional splitting criterion. The criterion is
/// sufficient, not necessary: `inconclusive` does not assert non-splitting.
struct split_result {
    bool certified;  ///< every box twist of E is ACM, so E splits into line bundles
    std::optional<multidegree> box;
    std::optional<witness> w;
};

/// Sweep every twist in the box Π [-n_i, 0] (ascending lexicographic order)
/// and test the twisted sheaf for the ACM property; the first failure is
/// reported with its box point and diagonal witness.
inline split_result split_check(const space& X, const sheaf_sum& E) {
    std::vector<int> b;
    for (int n : X.dims) b.push_back(-n);
    const int s = X.nfactors();
    while (true) {
        multidegree box(b);
        std::vector<witness> ws = acm_check(X, tensor_line(E, box));
        if (!ws.empty()) return {false, box, ws.front()};
        int i = s - 1;
        while (i >= 0 && b[(size_t)i] == 0) {
            b[(size_t)i] = -X.dims[(size_t)i];
            --i;
        }
        if (i < 0) break;
        ++b[(size_t)i];
    }
    return {true, std::nullopt, std::nullopt};
}

/// The canonical rank-C(d, j) direct sum ⊕ ⊠_i Ω^{-t_i}(-t_i) over the
/// lattice points t of Π [-n_i, 0] with Σ t_i = -j.
inline sheaf_sum omega_bundle(const space& X, int j) {
    const int d = X.dim();
    if (j <= 0 || j >= d) throw std::domain_error("omega_bundle: need 0 < j < dim X");
    sheaf_sum out(X);
    for (const multidegree& t : detail::sum_lattice(X, -j)) {
        std::vector<factor> fs;
        fs.reserve(t.e.size());
        for (size_t i = 0; i < t.e.size(); ++i)
            fs.emplace_back(X.dims[i], -t.e[i], -t.e[i]);
        out.add(atom(std::move(fs)));
    }
    return out;
}

/// Why a candidate failed the differential-forms characterization.
struct characterize_failure {
    enum class kind { rank, vanishing, corner };
    kind which;
    // rank mismatch
    Int expected_rank, actual_rank;
    // cohomology condition: h^degree(F ⊗ O(member)) with member in block p+d
    int p = 0;
    multidegree member;
    int degree = 0;
    Int dim, expected;
};

struct characterize_result {
    bool pass;
    std::optional<characterize_failure> failure;
    bool normal_form_verified = false;  ///< on PASS: F equals omega_bundle(X, j) on the nose
};

/// Decide whether F is the j-th twisted-forms bundle by its cohomology
/// against the standard blocks: rank C(d, j), the vanishing of
/// H^{-p-1}(F ⊗ E) for -d <= p <= -j-1 and of H^{-p+1}(F ⊗ E) for
/// -j+1 <= p <= 0 over the members E of block p+d, and
/// h^j(F ⊗ E) = 1 on every member of block d-j. A PASS additionally
/// compares normal forms with omega_bundle(X, j), which the hypotheses force
/// for representable F.
inline characterize_result characterize(const space& X, int j, const sheaf_sum& F) {
    using kind = characterize_failure::kind;
    const int d = X.dim();
    if (j <= 0 || j >= d) throw std::domain_error("characterize: need 0 < j < dim X");
    characterize_failure fail{};
    Int want_rank = binom(d, j);
    Int got_rank = rank(F);
    if (got_rank != want_rank) {
        fail.which = kind::rank;
        fail.expected_rank = want_rank;
        fail.actual_rank = got_rank;
        return {false, fail, false};
    }
    block_collection blocks = standard_blocks(X);
    auto h_of = [&](const atom& E, int deg) {
        return coh_dim(cohomology(tensor_line(F, E.line_degree())), deg);
    };
    auto vanishing = [&](int p, int deg) -> std::optional<characterize_failure> {
        for (const atom& E : blocks.blocks[(size_t)(p + d)]) {
            Int dim = h_of(E, deg);
            if (dim != 0) {
                characterize_failure f{};
                f.which = kind::vanishing;
                f.p = p;
                f.member = E.line_degree();
                f.degree = deg;
                f.dim = dim;
                f.expected = 0;
                return f;
            }
        }
        return std::nullopt;
    };
    for (int p = -d; p <= -j - 1; ++p)
        if (auto f = vanishing(p, -p - 1)) return {false, *f, false};
    for (int p = -j + 1; p <= 0; ++p)
        if (auto f = vanishing(p, -p + 1)) return {false, *f, false};
    for (const atom& E : blocks.blocks[(size_t)(d - j)]) {
        Int dim = h_of(E, j);
        if (dim != 1) {
            fail.which = kind::corner;
            fail.p = -j;
            fail.member = E.line_degree();
            fail.degree = j;
            fail.dim = dim;
            fail.expected = 1;
            return {false, fail, false};
        }
    }
    return {true, std::nullopt, F == omega_bundle(X, j)};
}

}  // namespace sheafcoh
