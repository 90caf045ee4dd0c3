#pragma once

#include <utility>
#include <vector>

#include "hardy/quantum.hpp"

namespace hardy {

enum class ParadoxCase { case1, case2 };

// All zero-constraint events of the scenario, instantiated with the given
// settings: one b_a a_rest event per size-|alpha| subset, then one
// bbar_b a_rest event per size-|beta| subset. Subsets are enumerated in
// lexicographic order of their (ascending) qubit index lists.
std::vector<Event> zero_constraint_events(const Scenario& s, const LocalSettings& settings);

// Measurement directions solving the zero-constraint angle and norm equations
// for the generalized GHZ state with ratio gamma and phase theta_h.
//
// Case 1 (|beta| < |alpha|), with branch constants m1 = m2 = 0:
//   theta_b = |beta| pi / (|alpha|-|beta|) + theta_a
//   theta_a = (theta_h + (1 - |alpha||beta|/(|alpha|-|beta|)) pi) / n
//   a0/a1   = gamma^((|alpha|+|beta|) / (n(|alpha|+|beta|) - 2|alpha||beta|))
//   b0/b1   = (a0/a1)^((|alpha|-|beta|)/(|alpha|+|beta|))
//
// Case 2 (|beta| = |alpha|, requires |alpha| even), m1 = 0, m2 = |beta|/2:
//   theta_a = theta_h / n,  theta_b = pi/|alpha| + theta_a,
//   b0 = b1 = 1/sqrt(2),  a0/a1 = gamma^(1/(n-|alpha|)).
LocalSettings solve_settings(const Scenario& s, double gamma, double theta_h = 0.0);

// Success probability of the constructed paradox, main-text parameterization:
//   Case 1: gamma^2 |kappa0 - kappa1|^2 / ((1+gamma^2)(1+kappa2)^n)
//   Case 2: gamma^2 (1 + kappa1')^2  / ((1+gamma^2)(1+kappa2')^n)
// Returns the formula value; it is 0 exactly when gamma = 1 and
// |alpha||beta|/(|alpha|-|beta|) is an even integer (no paradox there).
double success_probability_closed(const Scenario& s, double gamma);

// Same quantity in the supplement's (tau0, tau1) parameterization; agrees with
// success_probability_closed to floating precision.
double success_probability_supplement(const Scenario& s, double gamma);

// True when the paper's construction yields success probability exactly zero:
// gamma = 1 and tau0 = |alpha||beta|/(|alpha|-|beta|) an even integer.
bool paradox_degenerate_at(const Scenario& s, double gamma);

struct ParadoxReport {
    Scenario scenario;
    double gamma;
    double theta_h;
    LocalSettings settings;
    double success_probability;         // > 0
    double max_zero_constraint_residual; // <= 1e-10
    ParadoxCase case_tag;
};

inline constexpr double kZeroConstraintTolerance = 1e-10;
inline constexpr double kFormulaAgreementTolerance = 1e-12;

// Solves the settings, evaluates every zero-constraint event and the success
// event on the actual state vector, and cross-checks the two closed forms.
// Throws degenerate_error when no paradox exists at these parameters,
// postcondition_error when a numeric guarantee fails.
ParadoxReport construct_paradox(const Scenario& s, double gamma, double theta_h = 0.0,
                                int max_qubits = kDefaultMaxQubits);

struct SweepRow {
    int n;
    double p_standard;    // [n;n,1]: (1 + cos(pi/(n-1))) / 2^n
    double p_generalized; // even |alpha| = |beta|: 1/2^(n-1)
    bool generalized_stronger;
};

std::vector<SweepRow> sweep_success(int n_min, int n_max);

struct BestChoice {
    int alpha_size;
    int beta_size;
    double probability;
    // All (|alpha|,|beta|) whose probability ties the best within 1e-12; at
    // gamma = 1 every even |alpha| = |beta| ties (the Case-2 degeneracy).
    std::vector<std::pair<int, int>> tied;
    bool gamma_one_tie;
};

// Exhaustive scan of all constructible (|alpha|,|beta|) pairs (Case 1 pairs
// plus even equal pairs). Ties break toward smaller |alpha|, then |beta|.
BestChoice best_paradox_choice(int n, double gamma);

} // namespace hardy
