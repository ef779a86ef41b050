#pragma once

#include <cstdint>
#include <string_view>

#include "sheafcoh/parse.hpp"
#include "sheafcoh/sheaf.hpp"

namespace testutil {

/// splitmix64: deterministic across platforms, unlike the standard
/// distributions.
struct xrng {
    uint64_t state;

    explicit xrng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    int uniform(int lo, int hi) { return lo + (int)(next() % (uint64_t)(hi - lo + 1)); }
};

inline sheafcoh::sheaf_sum parse(const sheafcoh::space& X, std::string_view expr) {
    return sheafcoh::parse_sheaf(expr, X);
}

/// Random sum of 1..max_atoms line bundles with twists in [lo, hi] and
/// multiplicities 1..2.
inline sheafcoh::sheaf_sum random_line_sum(const sheafcoh::space& X, xrng& rng, int max_atoms,
                                           int lo, int hi) {
    sheafcoh::sheaf_sum S(X);
    int atoms = rng.uniform(1, max_atoms);
    for (int i = 0; i < atoms; ++i) {
        std::vector<int> m;
        for (int j = 0; j < X.nfactors(); ++j) m.push_back(rng.uniform(lo, hi));
        S.add(sheafcoh::atom::line(X, sheafcoh::multidegree(m)), rng.uniform(1, 2));
    }
    return S;
}

/// Random representable sum: factors may carry any exterior power allowed on
/// their projective space.
inline sheafcoh::sheaf_sum random_sheaf(const sheafcoh::space& X, xrng& rng, int max_atoms,
                                        int lo, int hi) {
    sheafcoh::sheaf_sum S(X);
    int atoms = rng.uniform(1, max_atoms);
    for (int i = 0; i < atoms; ++i) {
        std::vector<sheafcoh::factor> fs;
        for (int j = 0; j < X.nfactors(); ++j) {
            int n = X.dims[(size_t)j];
            fs.emplace_back(n, rng.uniform(0, n), rng.uniform(lo, hi));
        }
        S.add(sheafcoh::atom(std::move(fs)), rng.uniform(1, 2));
    }
    return S;
}

/// All spaces (ordered factor-dimension tuples) of total dimension exactly d.
inline std::vector<sheafcoh::space> spaces_of_dim(int d) {
    std::vector<sheafcoh::space> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.push_back(sheafcoh::space(cur));
            return;
        }
        for (int n = 1; n <= rest; ++n) {
            cur.push_back(n);
            self(self, rest - n);
            cur.pop_back();
        }
    };
    rec(rec, d);
    return out;
}

}  // namespace testutil
