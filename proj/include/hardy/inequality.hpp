#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hardy/combinatorics.hpp"

namespace hardy {

// tr of the Bell operator: F(n;|alpha|,|beta|;x,y) - x*binom(n,|alpha|)
// - y*binom(n,|beta|). Negative for every valid scenario.
Rational trace_bell(const Scenario& s);

// Quantum value of the Bell expression for the symmetric-settings family on
// the n-qubit GHZ state (gamma = 1, balanced amplitudes, identical settings):
//   (1/2^n) [ F (1 + cos t1) - x C(n,|a|) (1 + cos(t1 + |a| t2))
//                            - y C(n,|b|) (1 + cos(t1 + |b| t2 + |b| pi)) ]
// with t1 = n theta_a and t2 = theta_b - theta_a.
double symmetric_qm_value(const Scenario& s, double theta1, double theta2);

struct QmMax {
    double value;
    double theta1;
    double theta2;
};

// Deterministic global maximization of symmetric_qm_value over [0,2pi)^2:
// 720 x 720 grid (lowest lexicographic grid index wins ties), then
// coordinate descent with golden-section line searches until the step falls
// below 1e-12. Repeated calls return bit-identical results.
QmMax maximize_qm(const Scenario& s);

// A violation smaller than this counts as "no violation in the symmetric family".
inline constexpr double kViolationTolerance = 1e-12;

struct VisibilityReport {
    Scenario scenario;
    Rational trace_value;
    double qm_max;
    double theta1_star;
    double theta2_star;
    bool violation;    // qm_max > kViolationTolerance; v_thr undefined otherwise
    double v_thr;      // |tr| / (|tr| + 2^n qm_max) when violation
    Rational v_prime;  // (x C(n,|a|) + y C(n,|b|)) / F
    double lower_bound; // 1 - 2/(1 + V')
    std::optional<Rational> closed_form; // exact v_thr when |alpha| = |beta| even
};

VisibilityReport threshold_visibility(const Scenario& s);

// Exact threshold visibility for |alpha| = |beta| = q (q even, 2q <= n+1):
//   (2 C(n,q) - C(floor(n/2),q) - C(n-floor(n/2),q)) /
//   (2 C(n,q) + C(floor(n/2),q) + C(n-floor(n/2),q)).
// Cross-checked internally against the q = 2 specialization
// (3 floor((n+1)/2) - 1)/(5 floor((n+1)/2) - 3).
Rational v_thr_closed_qq(int n, int q);

struct HelperBounds {
    Rational w;                // W[n;|alpha|,|beta|]
    std::optional<Rational> u; // U[n;|alpha|], defined when |beta| = 1
};

// Proof helpers:
//   W = (C(n,|a|) + C(n,|b|)) / (2^-|a| C(n,|a|) + 2^-|b| C(n,|b|))
//   U = (C(n,|a|) + n) / (n - |a| + 1)
HelperBounds helper_bounds(int n, int alpha_size, int beta_size);

struct OptimalityRow {
    int alpha_size;
    int beta_size;
    bool violation;
    double v_thr; // meaningful only when violation
};

struct OptimalityReport {
    int n;
    int best_alpha;
    int best_beta;
    double best_v_thr;
    std::vector<OptimalityRow> rows;             // every valid pair, x = y = 1
    std::vector<std::pair<int, int>> ties;       // v_thr within 1e-9 of the best
};

// Threshold visibility of every valid (|alpha|,|beta|) with x = y = 1;
// returns the argmin of v_thr over pairs that violate. Guarded to 3 <= n <= 10.
OptimalityReport optimality_search(int n);

// Largest uniform measurement error eps on the zero constraints that still
// certifies the paradox: F * p_success / (x C(n,|a|) + y C(n,|b|)).
double epsilon_tolerance(const Scenario& s, double gamma);

// Exact-rational value of the tolerance when it has one: gamma = 1 and
// |alpha| = |beta| even, where p_success = 1/2^(n-1) exactly.
std::optional<Rational> epsilon_tolerance_exact(const Scenario& s, double gamma);

struct WideMax {
    double value; // Bell expression value, same units as maximize_qm(s).value
    double a0;
    double b0;
    double gamma;
    double phi0; // success-event phase n theta_a - theta_h
    double u;    // theta_b - theta_a
};

// Cross-check maximization over the wider symmetric family: free per-site
// amplitudes a0, b0, free GHZ ratio gamma, and free phases. Deterministic
// grid plus coordinate descent. The value is directly comparable to
// maximize_qm(s).value (both are the Bell expression itself).
WideMax maximize_qm_wide(const Scenario& s);

} // namespace hardy
