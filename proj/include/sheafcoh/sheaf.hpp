#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sheafcoh/bott.hpp"

namespace sheafcoh {

/// Raised whenever an operation would need Ω^p ⊗ Ω^q with both powers
/// positive on the same projective factor: that product is not a direct sum
/// of the bundles this library represents, so it is rejected rather than
/// approximated.
struct inexpressible_product : std::domain_error {
    inexpressible_product()
        : std::domain_error("inexpressible product: Ω^p ⊗ Ω^q with p, q > 0 on one factor") {}
};

/// Ambient product of projective spaces P^{n_1} x ... x P^{n_s}.
struct space {
    std::vector<int> dims;

    space() = default;
    explicit space(std::vector<int> d) : dims(std::move(d)) {
        if (dims.empty()) throw std::invalid_argument("space: needs at least one factor");
        for (int n : dims)
            if (n < 1) throw std::invalid_argument("space: every factor dimension must be >= 1");
    }

    int nfactors() const { return (int)dims.size(); }
    int dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

    friend bool operator==(const space&, const space&) = default;
};

/// Tuple of integer twists, one per projective factor.
struct multidegree {
    std::vector<int> e;

    multidegree() = default;
    explicit multidegree(std::vector<int> v) : e(std::move(v)) {}

    int sum() const { return std::accumulate(e.begin(), e.end(), 0); }

    static multidegree diagonal(const space& X, int t) {
        return multidegree(std::vector<int>((size_t)X.nfactors(), t));
    }

    /// (-n_1 - 1, ..., -n_s - 1): the canonical twist of the ambient space.
    static multidegree canonical(const space& X) {
        std::vector<int> v;
        v.reserve(X.dims.size());
        for (int n : X.dims) v.push_back(-n - 1);
        return multidegree(std::move(v));
    }

    friend bool operator==(const multidegree&, const multidegree&) = default;
    friend auto operator<=>(const multidegree& x, const multidegree& y) { return x.e <=> y.e; }
};

/// Box tensor product of one factor per projective space.
struct atom {
    std::vector<factor> factors;

    atom() = default;
    explicit atom(std::vector<factor> fs) : factors(std::move(fs)) {}

    /// The line bundle O(m).
    static atom line(const space& X, const multidegree& m) {
        if ((int)m.e.size() != X.nfactors())
            throw std::invalid_argument("atom::line: multidegree length mismatch");
        std::vector<factor> fs;
        fs.reserve(m.e.size());
        for (size_t i = 0; i < m.e.size(); ++i) fs.emplace_back(X.dims[i], 0, m.e[i]);
        return atom(std::move(fs));
    }

    bool is_line_bundle() const {
        for (const factor& f : factors)
            if (f.p != 0) return false;
        return true;
    }

    /// Twists of a line-bundle atom, lifted back to a multidegree.
    multidegree line_degree() const {
        std::vector<int> v;
        v.reserve(factors.size());
        for (const factor& f : factors) {
            if (f.p != 0) throw std::logic_error("atom::line_degree: not a line bundle");
            v.push_back(f.a);
        }
        return multidegree(std::move(v));
    }

    Int rank() const {
        Int r = 1;
        for (const factor& f : factors) r *= f.rank();
        return r;
    }

    atom twisted(const multidegree& m) const {
        if (m.e.size() != factors.size())
            throw std::invalid_argument("atom::twisted: multidegree length mismatch");
        std::vector<factor> fs = factors;
        for (size_t i = 0; i < fs.size(); ++i) fs[i] = fs[i].twisted(m.e[i]);
        return atom(std::move(fs));
    }

    atom dual() const {
        std::vector<factor> fs;
        fs.reserve(factors.size());
        for (const factor& f : factors) fs.push_back(f.dual());
        return atom(std::move(fs));
    }

    friend bool operator==(const atom&, const atom&) = default;
    friend auto operator<=>(const atom& x, const atom& y) { return x.factors <=> y.factors; }
};

/// Ω^p(a) ⊗ O(b) = Ω^p(a+b) factorwise; anything needing two positive
/// exterior powers on one factor is rejected.
inline atom tensor_atoms(const atom& x, const atom& y) {
    if (x.factors.size() != y.factors.size())
        throw std::invalid_argument("tensor_atoms: factor count mismatch");
    std::vector<factor> fs;
    fs.reserve(x.factors.size());
    for (size_t i = 0; i < x.factors.size(); ++i) {
        const factor &f = x.factors[i], &g = y.factors[i];
        if (f.p == 0)
            fs.emplace_back(g.n, g.p, g.a + f.a);
        else if (g.p == 0)
            fs.emplace_back(f.n, f.p, f.a + g.a);
        else
            throw inexpressible_product();
    }
    return atom(std::move(fs));
}

/// Map q -> h^q; degrees with zero dimension are absent.
using coh_table = std::map<int, Int>;

inline Int coh_dim(const coh_table& t, int q) {
    auto it = t.find(q);
    return it == t.end() ? Int(0) : it->second;
}

/// Finite formal direct sum of atoms with positive multiplicities, kept in a
/// canonical order so equality of values is isomorphism of the sheaves they
/// denote. The empty sum is the zero sheaf.
class sheaf_sum {
  public:
    sheaf_sum() = default;
    explicit sheaf_sum(space X) : X_(std::move(X)) {}

    static sheaf_sum single(const space& X, atom A, Int mult = 1) {
        sheaf_sum s(X);
        s.add(std::move(A), std::move(mult));
        return s;
    }

    const space& ambient() const { return X_; }
    const std::map<atom, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(atom A, Int mult = 1) {
        if (mult <= 0) throw std::invalid_argument("sheaf_sum: multiplicity must be positive");
        if ((int)A.factors.size() != X_.nfactors())
            throw std::invalid_argument("sheaf_sum: atom does not live on this space");
        for (size_t i = 0; i < A.factors.size(); ++i)
            if (A.factors[i].n != X_.dims[i])
                throw std::invalid_argument("sheaf_sum: atom factor on the wrong space");
        terms_[std::move(A)] += mult;
    }

    void add(const sheaf_sum& other) {
        if (!(other.X_ == X_)) throw std::invalid_argument("sheaf_sum: space mismatch");
        for (const auto& [A, m] : other.terms_) terms_[A] += m;
    }

    bool is_line_bundle_sum() const {
        for (const auto& [A, m] : terms_)
            if (!A.is_line_bundle()) return false;
        return true;
    }

    /// True when every term of `part` occurs here with at least the same
    /// multiplicity.
    bool contains(const sheaf_sum& part) const {
        for (const auto& [A, m] : part.terms_) {
            auto it = terms_.find(A);
            if (it == terms_.end() || it->second < m) return false;
        }
        return true;
    }

    friend bool operator==(const sheaf_sum&, const sheaf_sum&) = default;

  private:
    space X_{std::vector<int>{1}};
    std::map<atom, Int> terms_;
};

inline sheaf_sum tensor_line(const sheaf_sum& S, const multidegree& m) {
    if ((int)m.e.size() != S.ambient().nfactors())
        throw std::invalid_argument("tensor_line: multidegree length mismatch");
    sheaf_sum out(S.ambient());
    for (const auto& [A, mult] : S.terms()) out.add(A.twisted(m), mult);
    return out;
}

inline sheaf_sum dual(const sheaf_sum& S) {
    sheaf_sum out(S.ambient());
    for (const auto& [A, mult] : S.terms()) out.add(A.dual(), mult);
    return out;
}

inline Int rank(const sheaf_sum& S) {
    Int r = 0;
    for (const auto& [A, mult] : S.terms()) r += mult * A.rank();
    return r;
}

/// h^•(X, A) by the Künneth formula: the table is the coefficient-wise
/// product of the per-factor cohomology polynomials Σ_q h^q(factor_i) x^q,
/// which is exactly the sum over compositions q_1 + ... + q_s = q.
inline coh_table cohomology(const atom& A) {
    std::vector<Int> acc{Int(1)};
    for (const factor& f : A.factors) {
        std::vector<Int> h((size_t)f.n + 1);
        bool all_zero = true;
        for (int q = 0; q <= f.n; ++q) {
            h[(size_t)q] = bott_h(f, q);
            if (h[(size_t)q] != 0) all_zero = false;
        }
        if (all_zero) return {};
        std::vector<Int> next(acc.size() + (size_t)f.n, Int(0));
        for (size_t i = 0; i < acc.size(); ++i) {
            if (acc[i] == 0) continue;
            for (int q = 0; q <= f.n; ++q)
                if (h[(size_t)q] != 0) next[i + (size_t)q] += acc[i] * h[(size_t)q];
        }
        acc = std::move(next);
    }
    coh_table out;
    for (size_t q = 0; q < acc.size(); ++q)
        if (acc[q] != 0) out[(int)q] = acc[q];
    return out;
}

inline coh_table cohomology(const sheaf_sum& S) {
    coh_table out;
    for (const auto& [A, mult] : S.terms()) {
        for (const auto& [q, h] : cohomology(A)) out[q] += mult * h;
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

inline Int chi(const sheaf_sum& S) {
    Int acc = 0;
    for (const auto& [q, h] : cohomology(S)) acc += parity_sign(q) * h;
    return acc;
}

/// Vector of χ(F ⊗ O(m)) over the grid Π {0..n_i} in lexicographic order
/// (last coordinate fastest). Additive in direct sums, and the grid is large
/// enough to pin down the multigraded Hilbert polynomial, so equal
/// fingerprints mean equal classes in K-theory.
struct fingerprint {
    std::vector<Int> values;

    friend bool operator==(const fingerprint&, const fingerprint&) = default;

    bool is_zero() const {
        for (const Int& v : values)
            if (v != 0) return false;
        return true;
    }

    fingerprint& accumulate(const fingerprint& o, const Int& scale) {
        if (values.empty()) values.assign(o.values.size(), Int(0));
        if (values.size() != o.values.size())
            throw std::invalid_argument("fingerprint: size mismatch");
        for (size_t i = 0; i < values.size(); ++i) values[i] += scale * o.values[i];
        return *this;
    }
};

/// Enumerate the fingerprint grid Π {0..n_i} in lexicographic order.
inline std::vector<multidegree> fingerprint_grid(const space& X) {
    std::vector<multidegree> out;
    std::vector<int> m((size_t)X.nfactors(), 0);
    while (true) {
        out.push_back(multidegree(m));
        int i = X.nfactors() - 1;
        while (i >= 0 && m[(size_t)i] == X.dims[(size_t)i]) m[(size_t)i--] = 0;
        if (i < 0) break;
        ++m[(size_t)i];
    }
    return out;
}

inline fingerprint fingerprint_of(const sheaf_sum& S) {
    fingerprint fp;
    for (const multidegree& m : fingerprint_grid(S.ambient()))
        fp.values.push_back(chi(tensor_line(S, m)));
    return fp;
}

inline fingerprint fingerprint_of(const space& X, const atom& A) {
    return fingerprint_of(sheaf_sum::single(X, A));
}

}  // namespace sheafcoh
