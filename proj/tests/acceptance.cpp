// Acceptance suite: runs every top-level criterion at exact (symbolic)
// equality and prints one pass/fail line per criterion. Exit code is the
// number of failed criteria.

#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "punctual/cli.hpp"

using namespace punctual;

namespace {

struct Criterion {
    int id;
    std::string description;
    std::function<bool()> run;
};

bool checks_pass(const CheckList& list, const std::vector<std::string>& names) {
    for (const auto& want : names) {
        bool found = false;
        for (const auto& c : list)
            if (c.name == want) {
                found = true;
                if (!c.ok) return false;
            }
        if (!found) return false;
    }
    return true;
}

} // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({1, "reference P_d polynomials reproduced for d = 1..8 (CLI included)", [] {
        for (long d = 1; d <= 8; ++d) {
            if (p_poly(d).poly != refdata::pd(d)) return false;
            cli::CliResult r = cli::run_command({"pd", "--d", std::to_string(d)});
            if (r.code != 0) return false;
            if (r.out != refdata::pd(d).to_string() + "\n") return false;
        }
        return true;
    }});

    criteria.push_back({2, "reference punctual motives on A^3 and A^4 reproduced exactly", [] {
        for (long d = 6; d <= 8; ++d)
            if (hilb_punctual(d, 3) != refdata::hilb_a3(d)) return false;
        for (long d = 4; d <= 8; ++d)
            if (hilb_punctual(d, 4) != refdata::hilb_a4(d)) return false;
        return true;
    }});

    criteria.push_back({3, "reference Omega classes, Q_d polynomials and the Omega recursion", [] {
        for (long d = 1; d <= 8; ++d) {
            if (omega(d, 3) != refdata::omega3(d)) return false;
            if (q_poly(d) != refdata::qd(d)) return false;
        }
        for (long d = 3; d <= 8; ++d)
            for (long m = d; m <= 10; ++m)
                if (!omega_recursion_check(d, m)) return false;
        return true;
    }});

    criteria.push_back({4, "Hilbert series of P^3 matches the reference values at t^5..t^8", [] {
        TSeries h = hilb_variety(proj(3), 3, 8);
        for (long d = 5; d <= 8; ++d)
            if (h.coeff(d) != refdata::hilb_p3(d)) return false;
        return true;
    }});

    criteria.push_back({5, "Quot generating functions, U_4, higher-rank Omega and Quot of P^3", [] {
        for (long d = 1; d <= 4; ++d) {
            BiSeries s = quot_series(d, 6, 6);
            for (long n = 0; n <= 6; ++n)
                for (long r = 0; r <= 6; ++r)
                    if (s.coeff(n, r) != quot_punctual(d, n + 1, r + 1)) return false;
            if (quot_omega(d, 3, 3) != refdata::omega33(d)) return false;
        }
        U4Data u = u4();
        if (u.coeff(4, 3) != lpow(10) || u.coeff(0, 0) != LPoly(1)) return false;
        TSeries qv = quot_variety(proj(3), 3, 3, 4);
        for (long d = 2; d <= 4; ++d)
            if (qv.coeff(d) != refdata::quot_p3(d)) return false;
        return checks_pass(verify_quot(), {"quot/euler-series-match-rational-forms",
                                           "quot/stratum-euler-columns"});
    }});

    criteria.push_back({6, "Grassmannian identity suite, exhaustive with binomial shadows", [] {
        return checks_pass(
            verify_grassmann(),
            {"grassmann/pascal-recursions", "grassmann/symmetry", "grassmann/q-binomial-theorem",
             "grassmann/zeta-coefficients-and-shifted-sum", "grassmann/refined-hockey-stick",
             "grassmann/alternating-cross-sum-vanishes", "grassmann/two-sided-product-identity",
             "grassmann/double-grassmannian-sum-vanishes", "grassmann/horizontal-stick-identity",
             "grassmann/p2-divisibility-criterion-matches-division",
             "grassmann/euler-specialisation-is-binomial", "grassmann/binomial-shadows"});
    }});

    criteria.push_back({7, "structural theorems at desk scale (inversion, recursion, limits)", [] {
        return checks_pass(verify_hilb(),
                           {"hilb/inversion-recovers-fundamental-strata",
                            "hilb/recursion-agrees-with-assembly",
                            "hilb/coefficients-agree-on-both-routes",
                            "hilb/numerator-at-one-and-degree",
                            "hilb/next-to-top-stratum-linear-relation",
                            "hilb/numerator-at-l-inverse-recovers-the-stratum",
                            "hilb/weight-polynomial-congruence", "hilb/stabilisation",
                            "hilb/limit-class-matches-truncated-motives"});
    }});

    criteria.push_back({8, "partition oracle equals Euler specialisation; product formulas", [] {
        return checks_pass(verify_macmahon(),
                           {"macmahon/partition-counts-match-euler-characteristics",
                            "macmahon/low-dimension-product-formulas"});
    }});

    criteria.push_back({9, "discrepancy calculus: epsilon, r_d, motivic tables, barred classes", [] {
        for (long d = 1; d <= 5; ++d)
            for (long n = 1; n <= 10; ++n)
                if (!epsilon(d, n).is_zero()) return false;
        for (long d = 6; d <= 8; ++d)
            if (!r_poly_check(d, 12)) return false;
        for (const auto& [key, value] : refdata::eps_mot_table())
            if (eps_mot(key.first, key.second) != value) return false;
        for (const auto& [key, value] : refdata::e_mot_table())
            if (e_mot(key.second, key.first) != value) return false;
        for (long k = 0; k <= 2; ++k)
            if (!andrews_check(k).all_match()) return false;
        return checks_pass(verify_macmahon(),
                           {"macmahon/barred-classes-satisfy-hilb-recursion",
                            "macmahon/barred-classes-satisfy-omega-recursion"});
    }});

    criteria.push_back({10, "out-of-scope conjecture range covered by embedded read-only data", [] {
        // d in 9..26 is not re-derivable at desk scale; the reference table
        // must be present, well formed and consistent where it can be probed
        if (r_poly_table().size() != 21) return false;
        for (const auto& row : r_poly_table()) {
            if (row.d < 6 || row.d > 26) return false;
            if (static_cast<long>(row.coeffs_desc.size()) != row.d - 5) return false;
            if (r_poly(row.d).degree() != row.d - 6) return false;
        }
        return andrews_numerators().size() == 3;
    }});

    int failures = 0;
    for (const auto& c : criteria) {
        bool ok = false;
        std::string note;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            ok = false;
            note = std::string(" [") + e.what() + "]";
        }
        if (!ok) ++failures;
        std::printf("criterion %2d %s  %s%s\n", c.id, ok ? "PASS" : "FAIL",
                    c.description.c_str(), note.c_str());
    }
    std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
