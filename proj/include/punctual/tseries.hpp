#ifndef PUNCTUAL_TSERIES_HPP
#define PUNCTUAL_TSERIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "punctual/errors.hpp"
#include "punctual/lpoly.hpp"

namespace punctual {

// Univariate power series over LPoly, truncated at an explicit order. Binary
// operations insist on equal orders; use truncated()/truncate_to_min for
// deliberate precision drops.
class TSeries {
public:
    explicit TSeries(long order) : c_(check_order(order) + 1) {}

    static TSeries one(long order) {
        TSeries s(order);
        s.c_[0] = LPoly(1);
        return s;
    }
    static TSeries constant(const LPoly& c0, long order) {
        TSeries s(order);
        s.c_[0] = c0;
        return s;
    }

    long order() const { return static_cast<long>(c_.size()) - 1; }

    const LPoly& coeff(long i) const {
        if (i < 0 || i > order()) throw std::invalid_argument("TSeries::coeff: index out of range");
        return c_[static_cast<std::size_t>(i)];
    }
    void set_coeff(long i, LPoly v) {
        if (i < 0 || i > order()) throw std::invalid_argument("TSeries::set_coeff: index out of range");
        c_[static_cast<std::size_t>(i)] = std::move(v);
    }

    friend bool operator==(const TSeries& a, const TSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TSeries& a, const TSeries& b) { return !(a == b); }

    friend TSeries operator+(const TSeries& a, const TSeries& b) {
        require_same_order(a, b);
        TSeries r(a.order());
        for (long i = 0; i <= a.order(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend TSeries operator-(const TSeries& a, const TSeries& b) {
        require_same_order(a, b);
        TSeries r(a.order());
        for (long i = 0; i <= a.order(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend TSeries operator*(const TSeries& a, const TSeries& b) {
        require_same_order(a, b);
        TSeries r(a.order());
        for (long i = 0; i <= a.order(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (long j = 0; i + j <= a.order(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    TSeries& operator+=(const TSeries& o) { return *this = *this + o; }
    TSeries& operator-=(const TSeries& o) { return *this = *this - o; }
    TSeries& operator*=(const TSeries& o) { return *this = *this * o; }

    TSeries scaled(const LPoly& f) const {
        TSeries r(order());
        for (long i = 0; i <= order(); ++i) r.c_[i] = c_[i] * f;
        return r;
    }

    TSeries truncated(long new_order) const {
        if (new_order < 0 || new_order > order())
            throw order_mismatch("truncated: order must be between 0 and the current order");
        TSeries r(new_order);
        for (long i = 0; i <= new_order; ++i) r.c_[i] = c_[i];
        return r;
    }

    // multiply by t^k, dropping what falls past the order
    TSeries shifted_t(long k) const {
        TSeries r(order());
        for (long i = 0; i + k <= order(); ++i)
            if (i + k >= 0) r.c_[i + k] = c_[i];
        return r;
    }

    // substitute t -> L^a t
    TSeries scaled_t_lpow(long a) const {
        TSeries r(order());
        for (long i = 0; i <= order(); ++i) r.c_[i] = c_[i].shifted(a * i);
        return r;
    }

    // substitute t -> t^k (k >= 1), same truncation order
    TSeries stretched(long k) const {
        if (k < 1) throw std::invalid_argument("stretched: power must be >= 1");
        TSeries r(order());
        for (long i = 0; i * k <= order(); ++i) r.c_[i * k] = c_[i];
        return r;
    }

    // Multiplicative inverse up to the truncation order; the constant
    // coefficient must be the unit 1.
    TSeries inverse() const {
        if (!c_[0].is_one()) throw non_unit_constant("inverse: constant coefficient is not 1");
        TSeries r(order());
        r.c_[0] = LPoly(1);
        for (long n = 1; n <= order(); ++n) {
            LPoly acc;
            for (long i = 1; i <= n; ++i) acc += c_[i] * r.c_[n - i];
            r.c_[n] = -acc;
        }
        return r;
    }

    LPoly eval_one() const { // t -> 1
        LPoly s;
        for (const auto& c : c_) s += c;
        return s;
    }

    std::string to_string(const std::string& tvar = "t", const std::string& lvar = "L") const {
        return render_coeff_list(c_, tvar, lvar, false);
    }
    std::string to_latex(const std::string& tvar = "t") const {
        return render_coeff_list(c_, tvar, "\\mathbb{L}", true);
    }

    static std::string render_coeff_list(const std::vector<LPoly>& cs, const std::string& tvar,
                                         const std::string& lvar, bool latex) {
        std::string out;
        for (std::size_t i = 0; i < cs.size(); ++i) {
            const LPoly& c = cs[i];
            if (c.is_zero()) continue;
            std::string body = latex ? c.to_latex() : c.to_string(lvar);
            bool neg = false;
            if (c.terms().size() == 1) {
                // single monomial: fold its sign into the joining operator
                if (c.terms().begin()->second.sign() < 0) {
                    neg = true;
                    body = latex ? (-c).to_latex() : (-c).to_string(lvar);
                }
            }
            std::string term;
            if (i == 0) {
                term = (c.terms().size() > 1) ? "(" + body + ")" : body;
            } else {
                bool wrap = c.terms().size() > 1;
                std::string factor = wrap ? "(" + body + ")" : body;
                if (!wrap && factor == "1") factor.clear();
                if (!wrap && factor == "-1") factor = "-";
                term = factor;
                if (!term.empty() && term != "-") term += latex ? "" : "*";
                term += tvar;
                if (i > 1) term += latex ? "^{" + std::to_string(i) + "}" : "^" + std::to_string(i);
            }
            if (out.empty()) {
                out += neg ? "-" + term : term;
            } else {
                out += neg ? " - " + term : " + " + term;
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    std::vector<LPoly> c_;

    static long check_order(long order) {
        if (order < 0) throw std::invalid_argument("TSeries: negative order");
        return order;
    }
    static void require_same_order(const TSeries& a, const TSeries& b) {
        if (a.order() != b.order())
            throw order_mismatch("series orders differ (" + std::to_string(a.order()) + " vs " +
                                 std::to_string(b.order()) + ")");
    }
};

inline std::pair<TSeries, TSeries> truncate_to_min(const TSeries& a, const TSeries& b) {
    long n = std::min(a.order(), b.order());
    return {a.truncated(n), b.truncated(n)};
}

// Exact polynomial in t with LPoly coefficients (no truncation).
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(LPoly c0) { c_.push_back(std::move(c0)); trim(); }
    explicit TPoly(std::vector<LPoly> cs) : c_(std::move(cs)) { trim(); }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; } // -1 for zero
    LPoly coeff(long i) const {
        return (i < 0 || i > degree()) ? LPoly() : c_[static_cast<std::size_t>(i)];
    }
    const std::vector<LPoly>& coeffs() const { return c_; }

    friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

    friend TPoly operator+(const TPoly& a, const TPoly& b) {
        std::vector<LPoly> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i < a.c_.size()) r[i] += a.c_[i];
            if (i < b.c_.size()) r[i] += b.c_[i];
        }
        return TPoly(std::move(r));
    }
    friend TPoly operator*(const TPoly& a, const TPoly& b) {
        if (a.is_zero() || b.is_zero()) return TPoly();
        std::vector<LPoly> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return TPoly(std::move(r));
    }

    TSeries to_series(long order) const {
        TSeries s(order);
        for (long i = 0; i <= order && i <= degree(); ++i) s.set_coeff(i, coeff(i));
        return s;
    }

    LPoly eval_one() const {
        LPoly s;
        for (const auto& c : c_) s += c;
        return s;
    }

    std::string to_string(const std::string& tvar = "t", const std::string& lvar = "L") const {
        return TSeries::render_coeff_list(c_, tvar, lvar, false);
    }
    std::string to_latex(const std::string& tvar = "t") const {
        return TSeries::render_coeff_list(c_, tvar, "\\mathbb{L}", true);
    }

private:
    std::vector<LPoly> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

// Bivariate power series over LPoly truncated at explicit orders in x and y.
class BiSeries {
public:
    BiSeries(long order_x, long order_y)
        : nx_(order_x), ny_(order_y),
          c_(static_cast<std::size_t>(check(order_x) + 1),
             std::vector<LPoly>(static_cast<std::size_t>(check(order_y) + 1))) {}

    static BiSeries one(long order_x, long order_y) {
        BiSeries s(order_x, order_y);
        s.c_[0][0] = LPoly(1);
        return s;
    }
    // embed a univariate series as a series in x (resp. y)
    static BiSeries from_x(const TSeries& s, long order_x, long order_y) {
        BiSeries r(order_x, order_y);
        for (long i = 0; i <= std::min(order_x, s.order()); ++i) r.c_[i][0] = s.coeff(i);
        return r;
    }
    static BiSeries from_y(const TSeries& s, long order_x, long order_y) {
        BiSeries r(order_x, order_y);
        for (long j = 0; j <= std::min(order_y, s.order()); ++j) r.c_[0][j] = s.coeff(j);
        return r;
    }

    long order_x() const { return nx_; }
    long order_y() const { return ny_; }

    const LPoly& coeff(long i, long j) const {
        if (i < 0 || i > nx_ || j < 0 || j > ny_)
            throw std::invalid_argument("BiSeries::coeff: index out of range");
        return c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    void set_coeff(long i, long j, LPoly v) {
        if (i < 0 || i > nx_ || j < 0 || j > ny_)
            throw std::invalid_argument("BiSeries::set_coeff: index out of range");
        c_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(v);
    }

    friend bool operator==(const BiSeries& a, const BiSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const BiSeries& a, const BiSeries& b) { return !(a == b); }

    friend BiSeries operator+(const BiSeries& a, const BiSeries& b) {
        require_same(a, b);
        BiSeries r(a.nx_, a.ny_);
        for (long i = 0; i <= a.nx_; ++i)
            for (long j = 0; j <= a.ny_; ++j) r.c_[i][j] = a.c_[i][j] + b.c_[i][j];
        return r;
    }
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
        require_same(a, b);
        BiSeries r(a.nx_, a.ny_);
        for (long i = 0; i <= a.nx_; ++i)
            for (long j = 0; j <= a.ny_; ++j) {
                if (a.c_[i][j].is_zero()) continue;
                for (long k = 0; i + k <= a.nx_; ++k)
                    for (long l = 0; j + l <= a.ny_; ++l) {
                        if (b.c_[k][l].is_zero()) continue;
                        r.c_[i + k][j + l] += a.c_[i][j] * b.c_[k][l];
                    }
            }
        return r;
    }
    BiSeries& operator*=(const BiSeries& o) { return *this = *this * o; }

private:
    long nx_, ny_;
    std::vector<std::vector<LPoly>> c_;

    static long check(long n) {
        if (n < 0) throw std::invalid_argument("BiSeries: negative order");
        return n;
    }
    static void require_same(const BiSeries& a, const BiSeries& b) {
        if (a.nx_ != b.nx_ || a.ny_ != b.ny_) throw order_mismatch("bivariate orders differ");
    }
};

// geometric series 1/(1 - L^e t)
inline TSeries geometric_lpow(long e, long order) {
    TSeries s(order);
    for (long m = 0; m <= order; ++m) s.set_coeff(m, lpow(e * m));
    return s;
}

// zeta function of P^n: prod_{i=0}^{n} (1 - L^i t)^{-1}; the empty product
// (n < 0) is the constant series 1.
inline TSeries zeta_proj(long n, long order) {
    TSeries r = TSeries::one(order);
    for (long i = 0; i <= n; ++i) r *= geometric_lpow(i, order);
    return r;
}

namespace detail {

// (1 - L^e t)^{-a} truncated; a may be any integer.
inline TSeries binomial_factor(long e, const BigInt& a, long order) {
    TSeries s(order);
    if (a.sign() >= 0) {
        for (long m = 0; m <= order; ++m) {
            BigInt c = (m == 0) ? BigInt(1) : binomial(a + BigInt(m - 1), m);
            s.set_coeff(m, LPoly::monomial(c, e * m));
        }
    } else {
        BigInt k = (-a);
        for (long m = 0; m <= order; ++m) {
            BigInt c = binomial(k, m);
            if (m % 2 == 1) c = -c;
            s.set_coeff(m, LPoly::monomial(c, e * m));
        }
    }
    return s;
}

} // namespace detail

// zeta function of an arbitrary Laurent class mu = sum_j a_j L^{e_j}:
//   zeta_mu(t) = prod_j (1 - L^{e_j} t)^{-a_j}.
inline TSeries zeta_class(const LPoly& mu, long order) {
    TSeries r = TSeries::one(order);
    for (const auto& [e, a] : mu.terms()) r *= detail::binomial_factor(e, a, order);
    return r;
}

// zeta_mu(t^d), truncated at `order` in t
inline TSeries zeta_class_pow(const LPoly& mu, long d, long order) {
    if (d < 1) throw std::invalid_argument("zeta_class_pow: power must be >= 1");
    TSeries base = zeta_class(mu, order / d);
    TSeries r(order);
    for (long i = 0; i <= base.order(); ++i) r.set_coeff(i * d, base.coeff(i));
    return r;
}

} // namespace punctual

#endif
