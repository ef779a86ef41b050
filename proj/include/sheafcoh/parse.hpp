#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "sheafcoh/sheaf.hpp"

namespace sheafcoh {

/// Parse failure with the byte offset of the offending position. `semantic`
/// distinguishes input that is grammatical but invalid for the given space
/// (wrong factor count, exterior power too large) from a plain syntax error.
class parse_error : public std::runtime_error {
  public:
    parse_error(size_t offset, const std::string& what, bool semantic)
        : std::runtime_error(what + " at offset " + std::to_string(offset)),
          offset(offset),
          semantic(semantic) {}

    size_t offset;
    bool semantic;
};

namespace detail {

/// Recursive-descent parser for
///   sheaf  := '0' | sum
///   sum    := atom ('+' atom)*
///   atom   := factor ('#' factor)*
///   factor := 'O' '(' int ')' | 'Om' '^' nat '(' int ')' | 'T' '^' nat '(' int ')'
/// Whitespace is ignored everywhere; T^p(a) is rewritten to Ω^{n-p}(n+1+a)
/// while parsing, using the dimension of the projective factor it sits on.
class sheaf_parser {
  public:
    sheaf_parser(std::string_view src, const space& X) : src_(src), X_(X) {}

    sheaf_sum run() {
        skip_ws();
        if (peek() == '0') {  // the zero sheaf
            ++pos_;
            skip_ws();
            if (pos_ != src_.size()) fail("trailing input after '0'");
            return sheaf_sum(X_);
        }
        sheaf_sum out(X_);
        out.add(parse_atom());
        skip_ws();
        while (pos_ < src_.size()) {
            expect('+');
            out.add(parse_atom());
            skip_ws();
        }
        return out;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) { throw parse_error(pos_, msg, false); }
    [[noreturn]] void fail_semantic(const std::string& msg) {
        throw parse_error(pos_, msg, true);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace((unsigned char)src_[pos_])) ++pos_;
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    long parse_int() {
        skip_ws();
        size_t start = pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        if (!std::isdigit((unsigned char)peek())) {
            pos_ = start;
            fail("expected an integer");
        }
        long v = 0;
        bool neg = src_[start] == '-';
        while (std::isdigit((unsigned char)peek())) {
            v = v * 10 + (src_[pos_] - '0');
            if (v > 1000000000L) {
                pos_ = start;
                fail_semantic("integer out of range");
            }
            ++pos_;
        }
        return neg ? -v : v;
    }

    int parse_nat() {
        skip_ws();
        if (!std::isdigit((unsigned char)peek())) fail("expected a natural number");
        long v = parse_int();
        return (int)v;
    }

    factor parse_factor(int slot) {
        skip_ws();
        const size_t start = pos_;
        const int n = X_.dims[(size_t)slot];
        if (peek() == 'O') {
            ++pos_;
            if (peek() == 'm') {  // Om^p(a)
                ++pos_;
                expect('^');
                int p = parse_nat();
                expect('(');
                long a = parse_int();
                expect(')');
                if (p < 0 || p > n) {
                    pos_ = start;
                    fail_semantic("exterior power out of range for this factor");
                }
                return factor(n, p, (int)a);
            }
            expect('(');
            long a = parse_int();
            expect(')');
            return factor(n, 0, (int)a);
        }
        if (peek() == 'T') {  // T^q(b)
            ++pos_;
            expect('^');
            int q = parse_nat();
            expect('(');
            long b = parse_int();
            expect(')');
            if (q < 0 || q > n) {
                pos_ = start;
                fail_semantic("exterior power out of range for this factor");
            }
            return factor::tangent(n, q, (int)b);
        }
        fail("expected a factor: O(a), Om^p(a) or T^p(a)");
    }

    atom parse_atom() {
        const int s = X_.nfactors();
        std::vector<factor> fs;
        fs.push_back(parse_factor(0));
        skip_ws();
        while (peek() == '#') {
            if ((int)fs.size() == s) fail_semantic("too many factors in atom");
            ++pos_;
            fs.push_back(parse_factor((int)fs.size()));
            skip_ws();
        }
        if ((int)fs.size() != s)
            fail_semantic("atom has " + std::to_string(fs.size()) + " factors, space has " +
                          std::to_string(s));
        return atom(std::move(fs));
    }

    std::string_view src_;
    size_t pos_ = 0;
    const space& X_;
};

}  // namespace detail

inline sheaf_sum parse_sheaf(std::string_view src, const space& X) {
    return detail::sheaf_parser(src, X).run();
}

inline std::string to_string(const factor& f) {
    if (f.p == 0) return "O(" + std::to_string(f.a) + ")";
    return "Om^" + std::to_string(f.p) + "(" + std::to_string(f.a) + ")";
}

inline std::string to_string(const atom& A) {
    std::string out;
    for (size_t i = 0; i < A.factors.size(); ++i) {
        if (i) out += "#";
        out += to_string(A.factors[i]);
    }
    return out;
}

inline std::string to_string(const multidegree& m) {
    std::string out = "(";
    for (size_t i = 0; i < m.e.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(m.e[i]);
    }
    return out + ")";
}

/// Canonical expression; parsing it back yields the identical normal form.
/// Multiplicities are spelled out as repeated summands, matching the grammar.
inline std::string to_string(const sheaf_sum& S) {
    if (S.is_zero()) return "0";
    std::string out;
    for (const auto& [A, mult] : S.terms())
        for (Int i = 0; i < mult; ++i) {
            if (!out.empty()) out += " + ";
            out += to_string(A);
        }
    return out;
}

}  // namespace sheafcoh
