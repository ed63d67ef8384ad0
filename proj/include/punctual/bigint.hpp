#ifndef PUNCTUAL_BIGINT_HPP
#define PUNCTUAL_BIGINT_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "punctual/errors.hpp"

namespace punctual {

// Arbitrary-precision signed integer. Magnitude is a little-endian vector of
// base-2^32 limbs with no trailing zero limb; sign is -1, 0 or +1. All
// arithmetic is exact. Sizes in this library stay small (tens of digits), so
// schoolbook algorithms are plenty.
class BigInt {
public:
    BigInt() = default;

    BigInt(long long v) { // NOLINT: implicit by design, ints promote to BigInt
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long m = v < 0 ? 0ULL - static_cast<unsigned long long>(v)
                                     : static_cast<unsigned long long>(v);
        while (m != 0) {
            mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffULL));
            m >>= 32;
        }
    }
    explicit BigInt(std::string_view s) { *this = from_string(s); }

    static BigInt from_string(std::string_view s) {
        std::size_t i = 0;
        int sign = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        if (i == s.size()) throw parse_error("empty integer literal");
        BigInt r;
        while (i < s.size()) {
            std::size_t chunk_len = std::min<std::size_t>(9, s.size() - i);
            std::uint32_t chunk = 0, base = 1;
            for (std::size_t j = 0; j < chunk_len; ++j) {
                char c = s[i + j];
                if (c < '0' || c > '9') throw parse_error("bad digit in integer literal");
                chunk = chunk * 10 + static_cast<std::uint32_t>(c - '0');
                base *= 10;
            }
            r.mul_small(base);
            r.add_small(chunk);
            i += chunk_len;
        }
        if (!r.mag_.empty()) r.sign_ = sign;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }

    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.mag_ = mul_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    // Truncated division: quotient rounds toward zero, remainder keeps the
    // sign of the dividend, |rem| < |b|.
    struct DivMod;
    static DivMod divmod(const BigInt& a, const BigInt& b);

    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    // Division known to be exact; throws otherwise.
    static BigInt div_exact(const BigInt& a, const BigInt& b);

    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        unsigned long long v = as_u64_mag();
        if (sign_ >= 0) return v <= static_cast<unsigned long long>(std::numeric_limits<long long>::max());
        return v <= static_cast<unsigned long long>(std::numeric_limits<long long>::max()) + 1ULL;
    }
    long long as_int64() const {
        if (!fits_int64()) throw out_of_range_error("BigInt: value does not fit in 64 bits");
        unsigned long long v = as_u64_mag();
        return sign_ < 0 ? -static_cast<long long>(v) : static_cast<long long>(v);
    }

    std::string to_string() const {
        if (sign_ == 0) return "0";
        std::vector<std::uint32_t> work = mag_;
        std::string digits;
        while (!work.empty()) {
            std::uint64_t rem = 0;
            for (std::size_t i = work.size(); i-- > 0;) {
                std::uint64_t cur = (rem << 32) | work[i];
                work[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
                rem = cur % 1000000000ULL;
            }
            while (!work.empty() && work.back() == 0) work.pop_back();
            for (int j = 0; j < 9; ++j) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        if (sign_ < 0) digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    unsigned long long as_u64_mag() const {
        unsigned long long v = 0;
        if (mag_.size() > 1) v = static_cast<unsigned long long>(mag_[1]) << 32;
        if (!mag_.empty()) v |= mag_[0];
        return v;
    }

    void mul_small(std::uint32_t m) {
        std::uint64_t carry = 0;
        for (auto& limb : mag_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * m + carry;
            limb = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
        if (mag_.empty()) sign_ = 0;
    }
    void add_small(std::uint32_t v) {
        if (v == 0) return;
        if (mag_.empty()) {
            mag_.push_back(v);
            sign_ = 1;
            return;
        }
        std::uint64_t carry = v;
        for (auto& limb : mag_) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) + carry;
            limb = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
            if (!carry) break;
        }
        if (carry) mag_.push_back(static_cast<std::uint32_t>(carry));
    }

    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c : -c;
    }

    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint32_t> r = big;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(r[i]) + carry +
                                (i < small.size() ? small[i] : 0);
            r[i] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
            carry = cur >> 32;
        }
        if (carry) r.push_back(static_cast<std::uint32_t>(carry));
        return r;
    }

    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            std::int64_t cur = static_cast<std::int64_t>(r[i]) - borrow -
                               (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
            if (cur < 0) {
                cur += (1LL << 32);
                borrow = 1;
            } else {
                borrow = 0;
            }
            r[i] = static_cast<std::uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
        std::vector<std::uint32_t> r(a.size() + b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            std::uint64_t carry = 0;
            for (std::size_t j = 0; j < b.size(); ++j) {
                std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
                r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
                carry = cur >> 32;
            }
            r[i + b.size()] = static_cast<std::uint32_t>(carry);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    // Binary long division on magnitudes. Operand sizes here never exceed a
    // few limbs, so the bit loop is cheap.
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
        q.assign(a.size(), 0);
        r.clear();
        for (std::size_t bit = a.size() * 32; bit-- > 0;) {
            // r = (r << 1) | a.bit(bit)
            std::uint32_t carry = (a[bit / 32] >> (bit % 32)) & 1u;
            for (auto& limb : r) {
                std::uint32_t next = limb >> 31;
                limb = (limb << 1) | carry;
                carry = next;
            }
            if (carry) r.push_back(carry);
            if (cmp_mag(r, b) >= 0) {
                r = sub_mag(r, b);
                q[bit / 32] |= (1u << (bit % 32));
            }
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
    }
};

struct BigInt::DivMod {
    BigInt quot, rem;
};

inline BigInt::DivMod BigInt::divmod(const BigInt& a, const BigInt& b) {
    if (b.sign_ == 0) throw std::invalid_argument("BigInt: division by zero");
    DivMod dm;
    if (a.sign_ == 0) return dm;
    divmod_mag(a.mag_, b.mag_, dm.quot.mag_, dm.rem.mag_);
    dm.quot.sign_ = dm.quot.mag_.empty() ? 0 : a.sign_ * b.sign_;
    dm.rem.sign_ = dm.rem.mag_.empty() ? 0 : a.sign_;
    return dm;
}

inline BigInt operator/(const BigInt& a, const BigInt& b) { return BigInt::divmod(a, b).quot; }
inline BigInt operator%(const BigInt& a, const BigInt& b) { return BigInt::divmod(a, b).rem; }

inline BigInt BigInt::div_exact(const BigInt& a, const BigInt& b) {
    DivMod dm = divmod(a, b);
    if (!dm.rem.is_zero()) throw not_divisible("BigInt: inexact integer division");
    return dm.quot;
}

inline BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// Binomial coefficient with the usual conventions: zero when k < 0 or k > n.
// Defined here for nonnegative n only, which covers every call site.
inline BigInt binomial(long long n, long long k) {
    if (n < 0) throw std::invalid_argument("binomial: negative upper index");
    if (k < 0 || k > n) return BigInt();
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= BigInt(n - k + i);
        r = BigInt::div_exact(r, BigInt(i));
    }
    return r;
}

// C(n, k) for big (nonnegative) n and small k.
inline BigInt binomial(const BigInt& n, long long k) {
    if (n.sign() < 0) throw std::invalid_argument("binomial: negative upper index");
    if (k < 0) return BigInt();
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - BigInt(k - i);
        r = BigInt::div_exact(r, BigInt(i));
    }
    return r;
}

} // namespace punctual

#endif
