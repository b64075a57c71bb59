#include "cdslab/enumerate.hpp"

#include <algorithm>

#include "cdslab/errors.hpp"

namespace cdslab {

namespace {

mpz_class pow2(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

mpz_class mersenne(unsigned long e) { return pow2(e) - 1; }

// prod_{i=1}^{s} (2^{2i} - 1)
mpz_class even_mersenne_product(std::size_t s) {
    mpz_class p = 1;
    for (std::size_t i = 1; i <= s; ++i) p *= mersenne(2 * i);
    return p;
}

// prod_{i=0}^{k-1} (2^{t-i} - 1), zero once a factor 2^0 - 1 appears.
mpz_class falling_mersenne_product(std::size_t t, std::size_t k) {
    if (k > t) return 0;
    mpz_class p = 1;
    for (std::size_t i = 0; i < k; ++i) p *= mersenne(t - i);
    return p;
}

mpz_class exact_quotient(const mpz_class& num, const mpz_class& den, const char* what) {
    if (num % den != 0) throw InvariantViolation(std::string(what) + ": quotient is not an integer");
    return num / den;
}

void require_center(const F2Matrix& a, const char* who) {
    if (!a.is_square() || !a.is_symmetric() || !a.is_zero_diagonal())
        throw ContractViolation(std::string(who) + ": matrix must be symmetric with zero diagonal");
}

CountReport make_report(std::size_t n, CountMethod method, bool eulerian, mpz_class count) {
    CountReport r;
    r.n = n;
    r.method = method;
    r.eulerian = eulerian;
    r.count = std::move(count);
    r.total = total_rooted_graphs(n);
    r.ratio = mpq_class(r.count, r.total);
    r.ratio.canonicalize();
    return r;
}

}  // namespace

std::string to_string(CountMethod m) {
    switch (m) {
        case CountMethod::closed_formula: return "closed_formula";
        case CountMethod::rank_sum: return "rank_sum";
        case CountMethod::brute_force: return "brute_force";
    }
    return "unknown";
}

F2Matrix block_construct(const F2Matrix& a, const F2Vector& u1, const F2Vector& u2) {
    require_center(a, "block_construct");
    const std::size_t n = a.rows();
    if (u1.size() != n || u2.size() != n) throw ContractViolation("block_construct: vector length must match the center");
    const F2Vector w1 = a * u1;
    const F2Vector w2 = a * u2;
    const bool corner = w1.dot(u2);
    F2Matrix out(n + 2, n + 2);
    for (std::size_t i = 0; i < n; ++i) {
        out.set(0, i + 1, w1.get(i));
        out.set(i + 1, 0, w1.get(i));
        out.set(n + 1, i + 1, w2.get(i));
        out.set(i + 1, n + 1, w2.get(i));
        for (std::size_t j = 0; j < n; ++j) out.set(i + 1, j + 1, a.get(i, j));
    }
    out.set(0, n + 1, corner);
    out.set(n + 1, 0, corner);
    return out;
}

mpz_class sortable_extensions_count(const F2Matrix& a, bool eulerian) {
    require_center(a, "sortable_extensions_count");
    const auto r = static_cast<unsigned long>(rank(a));
    return pow2(eulerian ? r : 2 * r);
}

mpz_class macwilliams_count(std::size_t t, std::size_t r) {
    if (r > t) throw ContractViolation("macwilliams_count: rank cannot exceed the size");
    if (r % 2 != 0) return 0;
    const std::size_t s = r / 2;
    // prod_{i=1}^{s} 2^{2i-2} = 2^{s(s-1)}
    const mpz_class num = pow2(static_cast<unsigned long>(s * (s - (s > 0 ? 1 : 0)))) * falling_mersenne_product(t, 2 * s);
    return exact_quotient(num, even_mersenne_product(s), "macwilliams_count");
}

mpz_class total_rooted_graphs(std::size_t n) { return pow2(static_cast<unsigned long>(n * (n - 1) / 2)); }

CountReport count_sortable(std::size_t n, bool eulerian) {
    if (n < 3) throw ContractViolation("count_sortable: n must be at least 3");
    // Sum over s of 2^{e(s)} prod_{i<2s}(2^{n-2-i}-1) / prod_{i<=s}(2^{2i}-1), over a common denominator.
    const std::size_t smax = n / 2 - 1;
    const mpz_class common = even_mersenne_product(smax);
    mpq_class sum = 0;
    for (std::size_t s = 0; s <= smax; ++s) {
        const std::size_t e2 = s * (s + 3);  // always even
        const mpz_class term = pow2(static_cast<unsigned long>(eulerian ? e2 / 2 : e2)) *
                               falling_mersenne_product(n - 2, 2 * s) * (common / even_mersenne_product(s));
        sum += mpq_class(term, common);
    }
    sum.canonicalize();
    if (sum.get_den() != 1)
        throw InvariantViolation("count_sortable: the closed formula is not an integer at n=" + std::to_string(n));
    return make_report(n, CountMethod::closed_formula, eulerian, sum.get_num());
}

CountReport count_sortable_rank_sum(std::size_t n, bool eulerian) {
    if (n < 3) throw ContractViolation("count_sortable_rank_sum: n must be at least 3");
    mpz_class sum = 0;
    for (std::size_t r = 0; r <= n - 2; r += 2)
        sum += pow2(static_cast<unsigned long>(eulerian ? r : 2 * r)) * macwilliams_count(n - 2, r);
    return make_report(n, CountMethod::rank_sum, eulerian, sum);
}

mpq_class proportion(std::size_t n) { return count_sortable(n, false).ratio; }

std::string format_ratio(const mpq_class& q, int digits) {
    if (q < 0) throw ContractViolation("format_ratio: negative value");
    mpz_class scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    const mpq_class scaled = q * scale + mpq_class(1, 2);
    const mpz_class rounded = scaled.get_num() / scaled.get_den();
    const mpz_class whole = rounded / scale;
    std::string frac = mpz_class(rounded % scale).get_str();
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    const std::string head = whole == 0 ? "" : whole.get_str();
    return digits > 0 ? head + "." + frac : (whole == 0 ? "0" : head);
}

// ---------------------------------------------------------------- convergence

mpq_class convergence_term(std::size_t n, std::size_t s) {
    if (n == 0) throw ContractViolation("convergence_term: n must be positive");
    if (2 * s > 2 * n - 1) return 0;  // product hits the factor 2^0 - 1
    const mpz_class num = pow2(static_cast<unsigned long>(s * (s + 3))) * falling_mersenne_product(2 * n - 2, 2 * s);
    mpq_class t(num, even_mersenne_product(s) * pow2(static_cast<unsigned long>(n * (2 * n - 1))));
    t.canonicalize();
    return t;
}

namespace {

// x_n = sum_{s<n} T(n,s) over one common denominator.
mpq_class even_proportion(std::size_t n) {
    const mpz_class common = even_mersenne_product(n - 1);
    mpz_class acc = 0;
    mpz_class falling = 1;  // prod_{i<2s} (2^{2n-2-i} - 1)
    mpz_class den_s = 1;    // prod_{i<=s} (2^{2i} - 1)
    for (std::size_t s = 0; s + 1 <= n; ++s) {
        if (s > 0) {
            den_s *= mersenne(2 * s);
            falling *= mersenne(2 * n - 2 - (2 * s - 2)) * mersenne(2 * n - 2 - (2 * s - 1));
        }
        acc += pow2(static_cast<unsigned long>(s * (s + 3))) * falling * (common / den_s);
    }
    mpq_class x(acc, common * pow2(static_cast<unsigned long>(n * (2 * n - 1))));
    x.canonicalize();
    return x;
}

mpq_class pow_q(const mpq_class& base, std::size_t e) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    mpq_class r(num, den);
    r.canonicalize();
    return r;
}

mpq_class inv_pow2(std::size_t e) { return mpq_class(1, pow2(static_cast<unsigned long>(e))); }

}  // namespace

ConvergenceReport convergence_report(std::size_t max_n) {
    if (max_n < 10) throw ContractViolation("convergence_report: max_n must be at least 10");
    ConvergenceReport rep;
    rep.max_n = max_n;

    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), pow2(129).get_mpz_t());  // floor(sqrt(2) * 2^64)
    rep.sqrt2 = {mpq_class(root, pow2(64)), mpq_class(root + 1, pow2(64))};
    for (auto* q : {&rep.sqrt2.lo, &rep.sqrt2.hi}) q->canonicalize();
    rep.d = {(rep.sqrt2.lo - 1) / 2, (rep.sqrt2.hi - 1) / 2};
    rep.c = {4 - 2 * rep.sqrt2.hi, 4 - 2 * rep.sqrt2.lo};
    rep.t_const = {3 / rep.d.hi, 3 / rep.d.lo};

    const std::size_t top = std::max<std::size_t>(max_n + 1, 100);
    rep.x.assign(top + 1, 0);
    for (std::size_t n = 1; n <= top; ++n) rep.x[n] = even_proportion(n);
    rep.odd.assign(max_n + 1, 0);
    for (std::size_t n = 1; n <= max_n; ++n) rep.odd[n] = proportion(2 * n + 1);

    auto fail = [&](std::string msg) {
        if (rep.failures.size() < 20) rep.failures.push_back(std::move(msg));
    };

    // k^{-n} = 2^{-n/2}; compare squares so everything stays rational.
    for (std::size_t n = 10; n <= 40; ++n) {
        const mpq_class bound_sq = inv_pow2(n);
        for (std::size_t s = (n + 2) / 3; s + 1 <= n; ++s) {
            const mpq_class dev = convergence_term(n + 1, s + 1) / convergence_term(n, s) - 1;
            ++rep.ratio_checks;
            if (!(dev * dev < bound_sq)) {
                rep.ratio_bounds_hold = false;
                fail("ratio bound fails at n=" + std::to_string(n) + " s=" + std::to_string(s));
            }
        }
        for (std::size_t s = 0; 3 * s <= 2 * n; ++s) {
            const mpq_class t = convergence_term(n, s);
            ++rep.term_checks;
            if (!(t * t < bound_sq)) {
                rep.term_bounds_hold = false;
                fail("term bound fails at n=" + std::to_string(n) + " s=" + std::to_string(s));
            }
        }
    }

    const mpq_class t_over_c = rep.t_const.lo;
    for (std::size_t n = 10; n <= max_n; ++n) {
        const mpq_class delta = rep.x[n + 1] - rep.x[n];
        const mpq_class abs_delta = delta < 0 ? mpq_class(-delta) : delta;
        if (n <= 50) {
            ++rep.step_checks;
            if (!(delta * delta <= mpq_class(9 * n * n) * inv_pow2(n))) {
                rep.step_bounds_hold = false;
                fail("step bound 3n k^-n fails at n=" + std::to_string(n));
            }
        }
        ++rep.geometric_checks;
        if (!(abs_delta <= t_over_c / pow_q(rep.c.hi, n))) {
            rep.geometric_steps_hold = false;
            fail("step bound T c^-n fails at n=" + std::to_string(n));
        }
    }

    // Largest possible value of c^{-99} T / (c - 1) given the intervals.
    const mpq_class tail = rep.t_const.hi / (pow_q(rep.c.lo, 99) * (rep.c.lo - 1));
    rep.tail_lower_bound = rep.x[100] - tail;
    rep.tail_lower_bound.canonicalize();
    return rep;
}

}  // namespace cdslab
