#include "appell/oracle.hpp"

#include "appell/special.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

namespace appell {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
// Even indices are Kronrod-only abscissae, odd indices (and the centre) are
// shared with the embedded Gauss rule.
constexpr double gk_x[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double gk_wk[8] = {
    0.0229353220105292, 0.0630920926299785, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
constexpr double gk_wg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct Panel {
    double lo = 0.0, hi = 0.0;
    double value = 0.0, error = 0.0;
    int chart = 0;  // 0: identity on [0, T]; 1: exponential tail map
};

struct PanelOrder {
    bool operator()(const Panel& a, const Panel& b) const {
        return a.error < b.error;
    }
};

}  // namespace

QuadratureResult integrate_semiinfinite(const std::function<double(double)>& f,
                                        double tol,
                                        const QuadratureOptions& options) {
    if (!(tol > 0.0) || tol > 1e-2) {
        throw Error(ErrorKind::usage,
                    "integrate_semiinfinite: tolerance must lie in (0, 1e-2]");
    }
    if (!(options.decay_rate > 0.0)) {
        throw Error(ErrorKind::usage,
                    "integrate_semiinfinite: decay_rate must be positive");
    }
    const double lambda = options.decay_rate;
    const double T = options.split_point > 0.0
                         ? options.split_point
                         : std::max(1.0, 8.0 / lambda);

    std::size_t evaluations = 0;
    const std::size_t budget = options.max_evaluations;

    // Chart 0 integrates f directly over [0, T].  Chart 1 covers [T, inf)
    // through t = T - log(u)/lambda for u in (0, 1]; neither chart ever
    // evaluates f at t = 0 or at the panel endpoints themselves.
    auto g = [&](int chart, double u) {
        if (chart == 0) return f(u);
        return f(T - std::log(u) / lambda) / (lambda * u);
    };

    auto evaluate_panel = [&](int chart, double lo, double hi) {
        evaluations += 15;
        if (evaluations > budget) {
            std::ostringstream os;
            os << "integrate_semiinfinite: evaluation budget of " << budget
               << " exhausted before reaching the requested tolerance";
            throw Error(ErrorKind::convergence, os.str());
        }
        const double c = 0.5 * (lo + hi), hw = 0.5 * (hi - lo);
        const double fc = g(chart, c);
        double resk = gk_wk[7] * fc;
        double resg = gk_wg[3] * fc;
        for (int i = 0; i < 7; ++i) {
            const double f1 = g(chart, c - hw * gk_x[i]);
            const double f2 = g(chart, c + hw * gk_x[i]);
            resk += gk_wk[i] * (f1 + f2);
            if (i % 2 == 1) resg += gk_wg[(i - 1) / 2] * (f1 + f2);
        }
        Panel panel;
        panel.lo = lo;
        panel.hi = hi;
        panel.chart = chart;
        panel.value = resk * hw;
        panel.error = std::fabs(resk - resg) * hw;
        if (!std::isfinite(panel.value)) {
            throw Error(ErrorKind::domain,
                        "integrate_semiinfinite: integrand produced a "
                        "non-finite value");
        }
        return panel;
    };

    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> queue;
    double total = 0.0, err_sum = 0.0;
    auto push = [&](const Panel& p) {
        total += p.value;
        err_sum += p.error;
        queue.push(p);
    };

    // Geometric grading near t = 0 keeps integrable endpoint behaviour cheap;
    // the tail chart gets finer panels near u = 1 where the map is mild.
    const double head_breaks[] = {0.0,       T / 256.0, T / 64.0, T / 16.0,
                                  T / 4.0,   T / 2.0,   0.75 * T, T};
    for (std::size_t i = 0; i + 1 < sizeof(head_breaks) / sizeof(double); ++i) {
        push(evaluate_panel(0, head_breaks[i], head_breaks[i + 1]));
    }
    const double tail_breaks[] = {0.0, 0.02, 0.15, 0.5, 1.0};
    for (std::size_t i = 0; i + 1 < sizeof(tail_breaks) / sizeof(double); ++i) {
        push(evaluate_panel(1, tail_breaks[i], tail_breaks[i + 1]));
    }

    auto scale = [&]() {
        return std::max({std::fabs(total), options.abs_scale, 1e-300});
    };
    auto refine_until = [&](double target_factor) {
        while (err_sum > target_factor * tol * scale()) {
            Panel worst = queue.top();
            queue.pop();
            total -= worst.value;
            err_sum -= worst.error;
            const double mid = 0.5 * (worst.lo + worst.hi);
            push(evaluate_panel(worst.chart, worst.lo, mid));
            push(evaluate_panel(worst.chart, mid, worst.hi));
        }
    };

    refine_until(0.25);
    const double first_total = total;
    refine_until(0.0625);

    QuadratureResult result;
    result.value = total;
    result.evaluations = evaluations;
    const double drift = std::fabs(total - first_total);
    result.abs_error_estimate = std::max(err_sum, drift);
    result.converged = drift <= tol * scale();
    return result;
}

namespace {

long long brute_np_int_order(double v) {
    if (is_nonpositive_integer(v)) return std::llround(-v);
    return -1;
}

double brute_step(double prev, double num, double den) {
    if (prev == 0.0 || num == 0.0) return 0.0;
    if (den == 0.0) {
        throw Error(ErrorKind::parameter,
                    "f2_bruteforce: denominator parameter reaches a "
                    "nonpositive integer inside the summation range");
    }
    return prev * num / den;
}

}  // namespace

double f2_bruteforce(const F2Params& p, int target_digits) {
    if (target_digits < 1 || target_digits > 13) {
        throw Error(ErrorKind::usage,
                    "f2_bruteforce: target_digits must lie in [1, 13]");
    }
    const long long na = brute_np_int_order(p.a);
    const long long nap = brute_np_int_order(p.a_prime);
    const long long nd = brute_np_int_order(p.d);
    const bool m_bounded = na >= 0 || nd >= 0;
    const bool n_bounded = nap >= 0 || nd >= 0;

    long long m_cap = -1, n_cap = -1;
    if (m_bounded)
        m_cap = (na >= 0 && nd >= 0) ? std::min(na, nd) : std::max(na, nd);
    if (n_bounded)
        n_cap = (nap >= 0 && nd >= 0) ? std::min(nap, nd) : std::max(nap, nd);
    if ((m_bounded && m_cap > 20000) || (n_bounded && n_cap > 20000)) {
        throw Error(ErrorKind::domain,
                    "f2_bruteforce: terminating index exceeds the rectangle "
                    "limit");
    }

    // Only non-terminating directions contribute to the infinite tail, so the
    // growth budget is measured over those alone.
    const double radius = (m_bounded ? 0.0 : std::fabs(p.x)) +
                          (n_bounded ? 0.0 : std::fabs(p.y));
    if (!(m_bounded && n_bounded) && radius > 0.95) {
        throw Error(ErrorKind::domain,
                    "f2_bruteforce: requires |x| + |y| <= 0.95 over the "
                    "non-terminating indices");
    }

    auto check_pole = [](double beta, long long cap, const char* name) {
        if (!is_nonpositive_integer(beta)) return;
        long long pole = std::llround(-beta);
        if (cap < 0 || cap > pole) {
            throw Error(ErrorKind::parameter,
                        std::string("f2_bruteforce: denominator parameter ") +
                            name + " is a nonpositive integer reached by the "
                                   "summation");
        }
    };
    check_pole(p.b, m_cap, "b");
    check_pole(p.b_prime, n_cap, "b'");

    const double target = std::pow(10.0, -target_digits);
    double prev_sum = std::numeric_limits<double>::quiet_NaN();

    for (long long N = 64; N <= 4096; N *= 2) {
        const long long rows = m_bounded ? m_cap + 1 : N;
        const long long cols = n_bounded ? n_cap + 1 : N;

        double sum = 0.0, comp = 0.0;
        auto kahan_add = [&](double v) {
            const double y = v - comp;
            const double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        };

        double row_edge_abs = 0.0;  // |terms| along the last computed row
        double col_edge_abs = 0.0;  // |terms| along the last computed column
        double head = 0.0;          // first term of the current row
        for (long long m = 0; m < rows; ++m) {
            if (m == 0) {
                head = 1.0;
            } else {
                const double md = static_cast<double>(m);
                head = brute_step(head,
                                  (p.d + md - 1.0) * (p.a + md - 1.0) * p.x,
                                  (p.b + md - 1.0) * md);
            }
            double term = head;
            kahan_add(term);
            if (m == rows - 1) row_edge_abs += std::fabs(term);
            if (cols == 1) continue;
            for (long long n = 1; n < cols; ++n) {
                const double ndd = static_cast<double>(n);
                term = brute_step(
                    term,
                    (p.d + static_cast<double>(m) + ndd - 1.0) *
                        (p.a_prime + ndd - 1.0) * p.y,
                    (p.b_prime + ndd - 1.0) * ndd);
                if (term == 0.0) break;
                kahan_add(term);
                if (m == rows - 1) row_edge_abs += std::fabs(term);
                if (n == cols - 1) col_edge_abs += std::fabs(term);
            }
        }

        if (m_bounded && n_bounded) return sum;  // finite rectangle, exact

        // Beyond the rectangle the term magnitudes decay at least like the
        // combined argument ratio; bound the discarded mass geometrically
        // with a margin, and additionally require agreement with the
        // previous rectangle size.
        const double q = std::min(radius, 0.97);
        double tail = 0.0;
        if (!m_bounded) tail += row_edge_abs;
        if (!n_bounded) tail += col_edge_abs;
        tail *= 4.0 * q / (1.0 - q);

        const double floor = std::max(std::fabs(sum), 1e-300);
        const bool tail_ok = tail <= target * floor;
        const bool agree_ok =
            !std::isnan(prev_sum) &&
            std::fabs(sum - prev_sum) <= target * floor;
        if (tail_ok && agree_ok) return sum;
        prev_sum = sum;
    }
    throw Error(ErrorKind::convergence,
                "f2_bruteforce: rectangle limit reached before the requested "
                "digit target");
}

}  // namespace appell
