#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "cdslab/f2linalg.hpp"

namespace cdslab {

enum class CountMethod { closed_formula, rank_sum, brute_force };

std::string to_string(CountMethod m);

struct CountReport {
    std::size_t n = 0;
    CountMethod method = CountMethod::closed_formula;
    bool eulerian = false;
    mpz_class count;
    mpz_class total;  // 2^C(n,2)
    mpq_class ratio;  // count / total
};

// Border rows A*u1 and A*u2 around A, corner (A*u1).u2.
F2Matrix block_construct(const F2Matrix& a, const F2Vector& u1, const F2Vector& u2);

mpz_class sortable_extensions_count(const F2Matrix& a, bool eulerian);

// Number of symmetric zero-diagonal t x t matrices over GF(2) of rank r.
mpz_class macwilliams_count(std::size_t t, std::size_t r);

mpz_class total_rooted_graphs(std::size_t n);

// The closed formula with exponent 2^{s(s+3)} (general) or 2^{s(s+3)/2} (Eulerian).
CountReport count_sortable(std::size_t n, bool eulerian);

// Sum over central ranks 2s of 4^{2s} (or 2^{2s}) times N0(n-2, 2s).
CountReport count_sortable_rank_sum(std::size_t n, bool eulerian);

mpq_class proportion(std::size_t n);

// Decimal rendering rounded half-up; leading zero dropped for values below 1 (".125").
std::string format_ratio(const mpq_class& q, int digits);

struct RationalInterval {
    mpq_class lo;
    mpq_class hi;
};

struct ConvergenceReport {
    std::size_t max_n = 0;
    RationalInterval sqrt2;      // k
    RationalInterval d;          // (k-1)/2
    RationalInterval c;          // k/(d+1) = 4 - 2k
    RationalInterval t_const;    // 3/d
    std::vector<mpq_class> x;    // x[n] = r_{2n}, n = 0..max_n+1 (x[0] unused)
    std::vector<mpq_class> odd;  // odd[n] = r_{2n+1}, n = 1..max_n
    bool ratio_bounds_hold = true;     // |T(n+1,s+1)/T(n,s) - 1| < k^{-n}, 10 <= n <= 40, n/3 <= s <= n-1
    bool term_bounds_hold = true;      // T(n,s) < k^{-n}, 10 <= n <= 40, s <= 2n/3
    bool step_bounds_hold = true;      // |x_{n+1} - x_n| <= 3n k^{-n}, 10 <= n <= min(50, max_n)
    bool geometric_steps_hold = true;  // |x_{n+1} - x_n| <= T c^{-n}, 10 <= n <= max_n
    std::size_t ratio_checks = 0;
    std::size_t term_checks = 0;
    std::size_t step_checks = 0;
    std::size_t geometric_checks = 0;
    std::vector<std::string> failures;
    mpq_class tail_lower_bound;  // x_{100} - c^{-99} T/(c-1), evaluated with the pessimistic ends of each interval
};

// T(n,s) of the convergence argument, exactly.
mpq_class convergence_term(std::size_t n, std::size_t s);

ConvergenceReport convergence_report(std::size_t max_n = 100);

}  // namespace cdslab
