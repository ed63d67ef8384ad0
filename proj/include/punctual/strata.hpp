#ifndef PUNCTUAL_STRATA_HPP
#define PUNCTUAL_STRATA_HPP

#include <map>
#include <mutex>
#include <vector>

#include "punctual/goettsche.hpp"
#include "punctual/grassmann.hpp"
#include "punctual/lpoly.hpp"

namespace punctual {

// s_k: the number of linearly independent quadrics in k variables.
inline long quadric_count(long k) { return k * (k + 1) / 2; }

// Hilbert-Samuel function of a fat point, stored as the finite value string
// (1, h_1, ..., h_t) with h_t != 0. The total size is 1 + sum h_i.
class HSFunction {
public:
    explicit HSFunction(std::vector<long> values) : h_(std::move(values)) {
        if (h_.empty() || h_[0] != 1)
            throw std::invalid_argument("HSFunction: the value string must start with 1");
        if (h_.size() > 1 && h_.back() == 0)
            throw std::invalid_argument("HSFunction: trailing zero entry");
        for (long v : h_)
            if (v < 0) throw std::invalid_argument("HSFunction: negative entry");
    }

    // shapes whose strata are tabulated here
    static HSFunction very_compressed(long k, long r) { return HSFunction({1, k, r}); }
    static HSFunction socle_one(long k, long r) { return HSFunction({1, k, r, 1}); }

    const std::vector<long>& values() const { return h_; }
    long embedding_dimension() const { return h_.size() > 1 ? h_[1] : 0; }
    long size() const {
        long s = 1;
        for (std::size_t i = 1; i < h_.size(); ++i) s += h_[i];
        return s;
    }

private:
    std::vector<long> h_;
};

// Classes of the loci of degree-3 forms in i variables whose apolar algebra
// has a full quadratic part. Recursively,
//   [D_1] = 1,   [D_i] = [P^(C(i+2,3)-1)] - sum_{j<i} [Gr(j,i)] [D_j].
// The values must look effective at L = 1; that positivity is checked here.
inline LPoly d_class(long i) {
    if (i < 1) throw std::invalid_argument("d_class: index must be >= 1");
    static std::vector<LPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (cache.empty()) cache.push_back(LPoly(1)); // D_1
    while (static_cast<long>(cache.size()) < i) {
        long m = static_cast<long>(cache.size()) + 1;
        long cubics = (m + 2) * (m + 1) * m / 6;
        LPoly v = proj(cubics - 1);
        for (long j = 1; j < m; ++j) v -= gauss(j, m) * cache[static_cast<std::size_t>(j - 1)];
        if (v.specialize_euler().sign() <= 0)
            throw invariant_violation("d_class: Euler characteristic is not positive");
        cache.push_back(v);
    }
    return cache[static_cast<std::size_t>(i - 1)];
}

// Stratum of fat points with Hilbert-Samuel function (1, k, r): the
// Grassmannian Gr(r, s_k) of very compressed algebras.
inline LPoly hs_very_compressed(long k, long r) {
    if (k < 1 || r < 0) throw std::invalid_argument("hs_very_compressed: need k >= 1, r >= 0");
    return gauss(r, quadric_count(k));
}

// Stratum with Hilbert-Samuel function (1, k, r, 1): the homogeneous locus
//   sum_{i=1}^{k} [Gr(i,k)] [Gr(r-i, s_k - i)] [D_i]
// times L^{s_k - r}, the rank of the bundle over it.
inline LPoly hs_stratum_1kr1(long k, long r) {
    if (k < 1 || r < 1) throw std::invalid_argument("hs_stratum_1kr1: need k, r >= 1");
    const long sk = quadric_count(k);
    LPoly homog;
    for (long i = 1; i <= k; ++i) {
        LPoly g = gauss(i, k) * gauss(r - i, sk - i);
        if (g.is_zero()) continue;
        homog += g * d_class(i);
    }
    return homog.shifted(sk - r);
}

// Fundamental strata [Y^k_{k,d}]: fat points of length d and embedding
// dimension exactly k in their own tangent space. Known in closed form for
// k in {1, 2} and k in {d-5, ..., d-1}; anything else is past the data
// boundary and raises UnknownStratum.
inline LPoly y_class(long k, long d) {
    if (k < 0 || d < 0) return LPoly();
    if (d == 0) return LPoly();
    if (d == 1) return k == 0 ? LPoly(1) : LPoly();
    if (k <= 0 || k >= d) return LPoly();

    static std::map<std::pair<long, long>, LPoly> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find({k, d});
        if (it != cache.end()) return it->second;
    }

    LPoly v;
    if (k == 1 || k == d - 1) {
        v = LPoly(1);
    } else if (k == d - 2) {
        v = gauss(1, quadric_count(k));
    } else if (k == d - 3) {
        v = gauss(2, quadric_count(k)) + proj(d - 4).shifted(quadric_count(k) - 1);
    } else if (k == d - 4) {
        const long sk = quadric_count(k);
        v = gauss(3, sk);
        v += proj(d - 5).shifted(quadric_count(d - 3) - 3);
        v += (proj(d - 5) * proj(sk - 2) + gauss(2, k) * (lpow(3) + lpow(2))).shifted(sk - 2);
    } else if (k == d - 5) {
        const long sk = quadric_count(k);
        v = gauss(4, sk);
        v += proj(d - 6).shifted(quadric_count(d - 3) - 6);
        v += gauss(2, k) * proj(2).shifted(2 * (sk - 2));
        v += (proj(d - 6) * proj(sk - 2) -
              gauss(2, k) * (LPoly(1) + lpow(1) - lpow(2) - lpow(3)))
                 .shifted(quadric_count(d - 4) - 4);
        v += (gauss(3, k) * d_class(3) + gauss(2, k) * (lpow(3) + lpow(2)) * proj(sk - 3) +
              proj(d - 6) * gauss(2, sk - 1))
                 .shifted(sk - 3);
    } else if (k == 2) {
        v = goettsche_punctual(d) - proj(1).shifted(d - 2);
    } else {
        throw unknown_stratum("y_class: no formula for k=" + std::to_string(k) + ", d=" +
                              std::to_string(d) + "; fundamental strata are unknown for d >= 9 " +
                              "outside k in {1,2} and {d-5,...,d-1}");
    }

    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(std::make_pair(k, d), v);
    return v;
}

// Universal constants of the excess-<=2 refinement of the fundamental strata.
inline LPoly gamma(long e, long i) {
    if (e == 0 && i == 0) return LPoly(1);
    if (e == 1 && (i == 1 || i == 2)) return LPoly(1);
    if (e == 2) {
        switch (i) {
        case 1: return LPoly(1);
        case 2:
        case 4: return proj(2);
        case 3:
            return lpow(8) + lpow(7) + lpow(6).scaled(2) + lpow(5).scaled(2) +
                   lpow(4).scaled(2) - lpow(2) - lpow(1);
        default: break;
        }
    }
    throw out_of_range_error("gamma: constants are tabulated only for (0,0), (1,1..2), (2,1..4)");
}

// Strata of Y^k_{k,k+e+1} refined by the minimal number of linear forms whose
// squares span the quadratic part. Tabulated for excess e in {1, 2}.
inline LPoly c_class(long e, long i, long k) {
    if (k < 1) throw std::invalid_argument("c_class: need k >= 1");
    if (e == 1) {
        if (i == 1) return gamma(1, 1) * proj(k - 2);
        if (i == 2) return gamma(1, 2) * proj(binom2(k)).shifted(k - 1);
    } else if (e == 2) {
        switch (i) {
        case 1: return gamma(2, 1) * gauss(1, k).shifted((k - 1) * (k + 2) / 2);
        case 2: return gamma(2, 2) * gauss(2, k);
        case 3: return gamma(2, 3) * gauss(3, k);
        case 4: {
            // always well defined: s_k is never 2 mod 3, so [P^2] divides
            LPoly inner = LPoly::exact_div(gauss(2, quadric_count(k)), proj(2));
            inner -= gauss(3, k) * (lpow(5) + lpow(3) + lpow(2) - LPoly(1)).shifted(1);
            inner -= gauss(2, k);
            return gamma(2, 4) * inner;
        }
        default: break;
        }
    }
    throw out_of_range_error("c_class: tabulated only for e in {1,2}, i in 1..2e");
}

} // namespace punctual

#endif
