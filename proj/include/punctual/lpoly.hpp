#ifndef PUNCTUAL_LPOLY_HPP
#define PUNCTUAL_LPOLY_HPP

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "punctual/bigint.hpp"
#include "punctual/errors.hpp"

namespace punctual {

// Laurent polynomial in the single variable L with BigInt coefficients.
// Canonical form: the term map never stores a zero coefficient, so equality
// of values is equality of maps. Values are immutable in spirit: every
// operation returns a fresh value, which makes sharing across threads safe.
class LPoly {
public:
    LPoly() = default;
    LPoly(long long c) { // NOLINT: implicit constants are convenient in formulas
        if (c != 0) terms_[0] = BigInt(c);
    }
    LPoly(const BigInt& c) { // NOLINT
        if (!c.is_zero()) terms_[0] = c;
    }

    static LPoly monomial(BigInt coeff, long exp) {
        LPoly r;
        if (!coeff.is_zero()) r.terms_[exp] = std::move(coeff);
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one(); }

    // max/min exponent; undefined on the zero polynomial
    long degree() const {
        if (is_zero()) throw invariant_violation("degree of the zero polynomial");
        return terms_.rbegin()->first;
    }
    long valuation() const {
        if (is_zero()) throw invariant_violation("valuation of the zero polynomial");
        return terms_.begin()->first;
    }

    BigInt coeff(long exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? BigInt() : it->second;
    }

    const std::map<long, BigInt>& terms() const { return terms_; }

    friend bool operator==(const LPoly& a, const LPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LPoly& a, const LPoly& b) { return !(a == b); }

    friend LPoly operator+(const LPoly& a, const LPoly& b) {
        LPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend LPoly operator-(const LPoly& a, const LPoly& b) {
        LPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    LPoly operator-() const {
        LPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend LPoly operator*(const LPoly& a, const LPoly& b) {
        LPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LPoly& operator+=(const LPoly& o) { return *this = *this + o; }
    LPoly& operator-=(const LPoly& o) { return *this = *this - o; }
    LPoly& operator*=(const LPoly& o) { return *this = *this * o; }

    LPoly scaled(const BigInt& c) const {
        LPoly r;
        if (c.is_zero()) return r;
        for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
        return r;
    }

    // multiply by L^k
    LPoly shifted(long k) const {
        LPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
        return r;
    }

    // drop every term of exponent >= l (reduction mod L^l)
    LPoly reduced_mod_lpow(long l) const {
        LPoly r;
        for (const auto& [e, c] : terms_) {
            if (e >= l) break;
            r.terms_[e] = c;
        }
        return r;
    }

    // Exact quotient in Z[L, L^-1]; throws NotDivisible when none exists.
    static LPoly exact_div(const LPoly& a, const LPoly& b) {
        if (b.is_zero()) throw std::invalid_argument("exact_div: divisor is zero");
        if (a.is_zero()) return LPoly();
        long shift = a.valuation() - b.valuation();
        // strip valuations so both operands are honest polynomials
        LPoly rem = a.shifted(-a.valuation());
        LPoly den = b.shifted(-b.valuation());
        const long deg_b = den.degree();
        const BigInt lead_b = den.coeff(deg_b);
        LPoly quot;
        while (!rem.is_zero() && rem.degree() >= deg_b) {
            long e = rem.degree() - deg_b;
            auto dm = BigInt::divmod(rem.coeff(rem.degree()), lead_b);
            if (!dm.rem.is_zero()) throw not_divisible("exact_div: leading coefficient not divisible");
            LPoly t = monomial(dm.quot, e);
            quot += t;
            rem -= t * den;
        }
        if (!rem.is_zero()) throw not_divisible("exact_div: nonzero remainder");
        return quot.shifted(shift);
    }

    // L -> 1, the compactly supported Euler characteristic
    BigInt specialize_euler() const {
        BigInt s;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    // L -> z. Only honest polynomials have a weight polynomial.
    LPoly specialize_weight() const {
        if (!is_zero() && valuation() < 0)
            throw negative_exponent("specialize_weight: negative exponent present");
        return *this;
    }

    std::string to_string(const std::string& var = "L") const { return render(var, false); }
    std::string to_latex() const { return render("\\mathbb{L}", true); }

    // Parses the textual rendering (e.g. "L^4 + 2*L^2 - 1", "L^-2").
    static LPoly parse(std::string_view s, const std::string& var = "L") {
        LPoly r;
        std::size_t i = 0;
        auto skip_ws = [&] { while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i; };
        skip_ws();
        if (i == s.size()) throw parse_error("empty polynomial");
        bool first = true;
        while (i < s.size()) {
            int sign = 1;
            skip_ws();
            if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
                sign = s[i] == '-' ? -1 : 1;
                ++i;
                skip_ws();
            } else if (!first) {
                throw parse_error("expected '+' or '-' between terms");
            }
            first = false;
            BigInt coeff = 1;
            bool have_coeff = false;
            if (i < s.size() && (s[i] >= '0' && s[i] <= '9')) {
                std::size_t j = i;
                while (j < s.size() && s[j] >= '0' && s[j] <= '9') ++j;
                coeff = BigInt::from_string(s.substr(i, j - i));
                i = j;
                have_coeff = true;
                skip_ws();
                if (i < s.size() && s[i] == '*') {
                    ++i;
                    skip_ws();
                }
            }
            long exp = 0;
            if (i + var.size() <= s.size() && s.substr(i, var.size()) == var) {
                i += var.size();
                exp = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    bool neg = false;
                    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
                        neg = s[i] == '-';
                        ++i;
                    }
                    if (i == s.size() || s[i] < '0' || s[i] > '9') throw parse_error("bad exponent");
                    long v = 0;
                    while (i < s.size() && s[i] >= '0' && s[i] <= '9') v = v * 10 + (s[i++] - '0');
                    exp = neg ? -v : v;
                }
            } else if (!have_coeff) {
                throw parse_error("expected coefficient or variable");
            }
            r.add_term(exp, sign < 0 ? -coeff : coeff);
            skip_ws();
        }
        return r;
    }

    // JSON-facing view: [exponent, coefficient] pairs, decreasing exponent.
    std::vector<std::pair<long, std::string>> term_pairs_desc() const {
        std::vector<std::pair<long, std::string>> v;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
            v.emplace_back(it->first, it->second.to_string());
        return v;
    }

private:
    std::map<long, BigInt> terms_;

    void add_term(long e, const BigInt& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::string render(const std::string& var, bool latex) const {
        if (is_zero()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const long e = it->first;
            const BigInt& c = it->second;
            const bool neg = c.sign() < 0;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            std::string mag = c.abs().to_string();
            if (e == 0) {
                out += mag;
                continue;
            }
            if (mag != "1") {
                out += mag;
                out += latex ? "" : "*";
            }
            out += var;
            if (e != 1) {
                if (latex) {
                    out += "^{" + std::to_string(e) + "}";
                } else {
                    out += "^" + std::to_string(e);
                }
            }
        }
        return out;
    }
};

// L^e as a value
inline LPoly lpow(long e) { return LPoly::monomial(BigInt(1), e); }

// x(x-1)/2 for x >= 0; every exponent formula in this library feeds it
// nonnegative arguments.
inline long binom2(long x) {
    if (x < 0) throw std::invalid_argument("binom2: negative argument");
    return x * (x - 1) / 2;
}

} // namespace punctual

#endif
