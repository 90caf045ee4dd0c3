#include "hardy/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hardy/errors.hpp"
#include "hardy/paradox.hpp"

namespace hardy {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kGridSize = 720;
constexpr double kParamTolerance = 1e-12;

double wrap_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0) r += kTwoPi;
    return r;
}

// Golden-section maximization of a unimodal-near-optimum slice. Returns the
// midpoint of the shrunk bracket.
template <class Fn>
double golden_max(Fn&& f, double lo, double hi, double tol) {
    constexpr double inv_phi = 0.6180339887498949; // (sqrt(5)-1)/2
    double c = hi - inv_phi * (hi - lo);
    double d = lo + inv_phi * (hi - lo);
    double fc = f(c), fd = f(d);
    while (hi - lo > tol) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    return 0.5 * (lo + hi);
}

// Alternating golden-section line searches with per-coordinate brackets that
// expand when the optimizer lands on the bracket edge and shrink as steps
// shrink. Deterministic; stops once a full sweep moves less than
// kParamTolerance in every coordinate.
template <class Fn>
void coordinate_descent(Fn&& f, std::vector<double>& x, std::vector<double> h,
                        const std::vector<std::pair<double, double>>& box, int max_sweeps) {
    const std::size_t dims = x.size();
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double moved = 0.0;
        for (std::size_t k = 0; k < dims; ++k) {
            for (;;) {
                const bool bounded = box[k].first < box[k].second;
                double lo = x[k] - h[k], hi = x[k] + h[k];
                if (bounded) {
                    lo = std::max(lo, box[k].first);
                    hi = std::min(hi, box[k].second);
                }
                auto slice = [&](double v) {
                    const double save = x[k];
                    x[k] = v;
                    const double r = f(x);
                    x[k] = save;
                    return r;
                };
                const double next = golden_max(slice, lo, hi, 1e-13);
                const double step = std::abs(next - x[k]);
                const double width = hi - lo;
                const bool on_edge = next - lo < 0.05 * width || hi - next < 0.05 * width;
                x[k] = next;
                if (on_edge && !bounded) {
                    h[k] *= 2.0; // widen the bracket and redo this coordinate
                    continue;
                }
                h[k] = std::max(std::min(h[k], 8.0 * step + 1e-13), 1e-13);
                moved = std::max(moved, step);
                break;
            }
        }
        if (moved < kParamTolerance) break;
    }
}

struct SymmetricObjective {
    double f_coef;
    double x_weight;
    double y_weight;
    double c_alpha;
    double c_beta;
    int alpha;
    int beta;
    int n;

    explicit SymmetricObjective(const Scenario& s)
        : f_coef(coefficient_f(s).value.to_double()),
          x_weight(s.x().to_double()),
          y_weight(s.y().to_double()),
          c_alpha(static_cast<double>(binom(s.n(), s.alpha_size()))),
          c_beta(static_cast<double>(binom(s.n(), s.beta_size()))),
          alpha(s.alpha_size()),
          beta(s.beta_size()),
          n(s.n()) {}

    double operator()(double t1, double t2) const {
        const double scale = std::ldexp(1.0, -n);
        return scale * (f_coef * (1.0 + std::cos(t1)) -
                        x_weight * c_alpha * (1.0 + std::cos(wrap_angle(t1 + alpha * t2))) -
                        y_weight * c_beta *
                            (1.0 + std::cos(wrap_angle(t1 + beta * t2 + beta * kPi))));
    }
};

} // namespace

Rational trace_bell(const Scenario& s) {
    const Rational tr =
        coefficient_f(s).value -
        s.x() * Rational(static_cast<std::int64_t>(binom(s.n(), s.alpha_size()))) -
        s.y() * Rational(static_cast<std::int64_t>(binom(s.n(), s.beta_size())));
    if (!(tr < Rational(0)))
        throw postcondition_error("tr of the Bell operator must be negative, got " + tr.str() +
                                  " for " + s.label());
    return tr;
}

double symmetric_qm_value(const Scenario& s, double theta1, double theta2) {
    return SymmetricObjective(s)(theta1, theta2);
}

QmMax maximize_qm(const Scenario& s) {
    const SymmetricObjective obj(s);

    double best = -1e300;
    int bi = 0, bj = 0;
    for (int i = 0; i < kGridSize; ++i) {
        const double t1 = kTwoPi * i / kGridSize;
        for (int j = 0; j < kGridSize; ++j) {
            const double v = obj(t1, kTwoPi * j / kGridSize);
            if (v > best) {
                best = v;
                bi = i;
                bj = j;
            }
        }
    }

    std::vector<double> x{kTwoPi * bi / kGridSize, kTwoPi * bj / kGridSize};
    coordinate_descent([&](const std::vector<double>& t) { return obj(t[0], t[1]); }, x,
                       {kTwoPi / kGridSize, kTwoPi / kGridSize},
                       {{0.0, 0.0}, {0.0, 0.0}}, // unbounded: angles wrap
                       2000);
    return QmMax{obj(x[0], x[1]), wrap_angle(x[0]), wrap_angle(x[1])};
}

VisibilityReport threshold_visibility(const Scenario& s) {
    const Rational tr = trace_bell(s);
    const Rational f = coefficient_f(s).value;
    const QmMax qm = maximize_qm(s);

    VisibilityReport report{s,
                            tr,
                            qm.value,
                            qm.theta1,
                            qm.theta2,
                            qm.value > kViolationTolerance,
                            0.0,
                            Rational(0),
                            0.0,
                            std::nullopt};

    const Rational sum = s.x() * Rational(static_cast<std::int64_t>(binom(s.n(), s.alpha_size()))) +
                         s.y() * Rational(static_cast<std::int64_t>(binom(s.n(), s.beta_size())));
    report.v_prime = sum / f;
    report.lower_bound = 1.0 - 2.0 / (1.0 + report.v_prime.to_double());

    if (report.violation) {
        const double abs_tr = -tr.to_double();
        report.v_thr = abs_tr / (abs_tr + std::ldexp(1.0, s.n()) * qm.value);
        if (!(report.v_thr > 0.0 && report.v_thr < 1.0))
            throw postcondition_error("threshold visibility outside (0,1) for " + s.label());
        if (report.v_thr < report.lower_bound - 1e-9)
            throw postcondition_error("threshold visibility below its lower bound for " +
                                      s.label());
    }

    if (s.alpha_size() == s.beta_size() && s.alpha_size() % 2 == 0 && s.unit_weights()) {
        report.closed_form = v_thr_closed_qq(s.n(), s.alpha_size());
        if (report.violation &&
            std::abs(report.v_thr - report.closed_form->to_double()) > 1e-9)
            throw postcondition_error("threshold visibility disagrees with the closed form for " +
                                      s.label());
    }
    return report;
}

Rational v_thr_closed_qq(int n, int q) {
    if (q % 2 != 0 || q < 2 || 2 * q > n + 1)
        throw std::invalid_argument("closed-form visibility requires even q with 2q <= n+1");
    const std::int64_t c = static_cast<std::int64_t>(binom(n, q));
    const std::int64_t lo = static_cast<std::int64_t>(binom(n / 2, q));
    const std::int64_t hi = static_cast<std::int64_t>(binom(n - n / 2, q));
    const Rational general(2 * c - lo - hi, 2 * c + lo + hi);
    if (q == 2) {
        const std::int64_t half = (n + 1) / 2;
        const Rational special(3 * half - 1, 5 * half - 3);
        if (!(general == special))
            throw postcondition_error("general and q=2 closed forms disagree at n = " +
                                      std::to_string(n));
    }
    return general;
}

HelperBounds helper_bounds(int n, int alpha_size, int beta_size) {
    if (n < 2 || alpha_size < 1 || alpha_size > n || beta_size < 1 || beta_size > n)
        throw std::invalid_argument("helper_bounds requires 1 <= sizes <= n");
    const std::int64_t ca = static_cast<std::int64_t>(binom(n, alpha_size));
    const std::int64_t cb = static_cast<std::int64_t>(binom(n, beta_size));
    // W = (ca + cb) / (ca/2^a + cb/2^b), cleared of denominators.
    const Rational w = Rational((ca + cb)) *
                       (Rational(std::int64_t{1} << alpha_size) *
                        Rational(std::int64_t{1} << beta_size)) /
                       Rational((std::int64_t{1} << beta_size) * ca +
                                (std::int64_t{1} << alpha_size) * cb);
    HelperBounds out{w, std::nullopt};
    if (beta_size == 1) out.u = Rational(ca + n, n - alpha_size + 1);
    return out;
}

OptimalityReport optimality_search(int n) {
    if (n < 3 || n > 10)
        throw std::invalid_argument("optimality_search is guarded to 3 <= n <= 10");

    OptimalityReport report{n, 0, 0, 2.0, {}, {}};
    for (int a = 2; a <= n; ++a) {
        for (int b = 1; b <= a && a + b <= n + 1; ++b) {
            const VisibilityReport vis = threshold_visibility(Scenario(n, a, b));
            report.rows.push_back({a, b, vis.violation, vis.violation ? vis.v_thr : 1.0});
            if (vis.violation && vis.v_thr < report.best_v_thr) {
                report.best_v_thr = vis.v_thr;
                report.best_alpha = a;
                report.best_beta = b;
            }
        }
    }
    if (report.best_alpha == 0)
        throw postcondition_error("no violating scenario found for n = " + std::to_string(n));
    // Ranked table: violating pairs by ascending v_thr, non-violating last.
    std::stable_sort(report.rows.begin(), report.rows.end(),
                     [](const OptimalityRow& lhs, const OptimalityRow& rhs) {
                         if (lhs.violation != rhs.violation) return lhs.violation;
                         return lhs.violation && lhs.v_thr < rhs.v_thr;
                     });
    for (const OptimalityRow& row : report.rows)
        if (row.violation && row.v_thr <= report.best_v_thr + 1e-9)
            report.ties.emplace_back(row.alpha_size, row.beta_size);
    return report;
}

double epsilon_tolerance(const Scenario& s, double gamma) {
    if (paradox_degenerate_at(s, gamma))
        throw degenerate_error(s.label() +
                               ": no paradox at gamma = 1, tolerance undefined");
    const double p = success_probability_closed(s, gamma);
    const Rational sum = s.x() * Rational(static_cast<std::int64_t>(binom(s.n(), s.alpha_size()))) +
                         s.y() * Rational(static_cast<std::int64_t>(binom(s.n(), s.beta_size())));
    return coefficient_f(s).value.to_double() * p / sum.to_double();
}

std::optional<Rational> epsilon_tolerance_exact(const Scenario& s, double gamma) {
    if (gamma != 1.0 || s.alpha_size() != s.beta_size() || s.alpha_size() % 2 != 0)
        return std::nullopt;
    // p_success = 1/2^(n-1) exactly.
    const Rational sum = s.x() * Rational(static_cast<std::int64_t>(binom(s.n(), s.alpha_size()))) +
                         s.y() * Rational(static_cast<std::int64_t>(binom(s.n(), s.beta_size())));
    return coefficient_f(s).value / Rational(std::int64_t{1} << (s.n() - 1)) / sum;
}

WideMax maximize_qm_wide(const Scenario& s) {
    const int n = s.n();
    const int alpha = s.alpha_size(), beta = s.beta_size();
    const double f_coef = coefficient_f(s).value.to_double();
    const double xw = s.x().to_double(), yw = s.y().to_double();
    const double c_alpha = static_cast<double>(binom(n, alpha));
    const double c_beta = static_cast<double>(binom(n, beta));

    // Parameters: a0, b0 in (0,1); chi in (0, pi/2) with gamma = tan(chi);
    // phi0 = n theta_a - theta_h; u = theta_b - theta_a.
    const auto value_of = [&](double a0, double b0, double chi, double phi0, double u) {
        const double a1 = std::sqrt(std::max(0.0, 1.0 - a0 * a0));
        const double b1 = std::sqrt(std::max(0.0, 1.0 - b0 * b0));
        const double h0 = std::cos(chi), h1 = std::sin(chi);
        const double as0 = std::pow(a0, n) * h0, as1 = std::pow(a1, n) * h1;
        const double aa0 = std::pow(b0, alpha) * std::pow(a0, n - alpha) * h0;
        const double aa1 = std::pow(b1, alpha) * std::pow(a1, n - alpha) * h1;
        const double bb0 = std::pow(b1, beta) * std::pow(a0, n - beta) * h0;
        const double bb1 = std::pow(b0, beta) * std::pow(a1, n - beta) * h1;
        const double ps = as0 * as0 + as1 * as1 + 2 * as0 * as1 * std::cos(phi0);
        const double pa =
            aa0 * aa0 + aa1 * aa1 + 2 * aa0 * aa1 * std::cos(wrap_angle(phi0 + alpha * u));
        const double pb = bb0 * bb0 + bb1 * bb1 +
                          2 * bb0 * bb1 * std::cos(wrap_angle(phi0 + beta * u + beta * kPi));
        return f_coef * ps - xw * c_alpha * pa - yw * c_beta * pb;
    };

    constexpr int kAmp = 15, kChi = 9, kPhase = 48;
    double best = -1e300;
    std::vector<double> bx(5, 0.0);
    for (int ia = 0; ia < kAmp; ++ia) {
        const double a0 = 0.02 + (0.98 - 0.02) * ia / (kAmp - 1);
        for (int ib = 0; ib < kAmp; ++ib) {
            const double b0 = 0.02 + (0.98 - 0.02) * ib / (kAmp - 1);
            for (int ic = 0; ic < kChi; ++ic) {
                const double chi = 0.08 + (kPi / 2 - 0.16) * ic / (kChi - 1);
                // Amplitude products are phase-independent; evaluate them once.
                const double a1 = std::sqrt(1.0 - a0 * a0), b1 = std::sqrt(1.0 - b0 * b0);
                const double h0 = std::cos(chi), h1 = std::sin(chi);
                const double as0 = std::pow(a0, n) * h0, as1 = std::pow(a1, n) * h1;
                const double aa0 = std::pow(b0, alpha) * std::pow(a0, n - alpha) * h0;
                const double aa1 = std::pow(b1, alpha) * std::pow(a1, n - alpha) * h1;
                const double bb0 = std::pow(b1, beta) * std::pow(a0, n - beta) * h0;
                const double bb1 = std::pow(b0, beta) * std::pow(a1, n - beta) * h1;
                const double base = f_coef * (as0 * as0 + as1 * as1) -
                                    xw * c_alpha * (aa0 * aa0 + aa1 * aa1) -
                                    yw * c_beta * (bb0 * bb0 + bb1 * bb1);
                for (int ip = 0; ip < kPhase; ++ip) {
                    const double phi0 = kTwoPi * ip / kPhase;
                    for (int iu = 0; iu < kPhase; ++iu) {
                        const double u = kTwoPi * iu / kPhase;
                        const double v =
                            base + 2 * f_coef * as0 * as1 * std::cos(phi0) -
                            2 * xw * c_alpha * aa0 * aa1 * std::cos(phi0 + alpha * u) -
                            2 * yw * c_beta * bb0 * bb1 *
                                std::cos(phi0 + beta * u + beta * kPi);
                        if (v > best) {
                            best = v;
                            bx = {a0, b0, chi, phi0, u};
                        }
                    }
                }
            }
        }
    }

    coordinate_descent(
        [&](const std::vector<double>& p) { return value_of(p[0], p[1], p[2], p[3], p[4]); }, bx,
        {0.07, 0.07, 0.17, kTwoPi / kPhase, kTwoPi / kPhase},
        {{1e-9, 1.0 - 1e-9}, {1e-9, 1.0 - 1e-9}, {1e-9, kPi / 2 - 1e-9}, {0.0, 0.0}, {0.0, 0.0}},
        800);

    return WideMax{value_of(bx[0], bx[1], bx[2], bx[3], bx[4]),
                   bx[0], bx[1], std::tan(bx[2]), wrap_angle(bx[3]), wrap_angle(bx[4])};
}

} // namespace hardy
