#include "hardy/paradox.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

constexpr double kPi = std::numbers::pi;

ParadoxCase classify(const Scenario& s) {
    const int a = s.alpha_size(), b = s.beta_size();
    if (b < a) return ParadoxCase::case1;
    if (a % 2 != 0)
        throw std::invalid_argument("case |beta| = |alpha| requires even |alpha|, got |alpha| = " +
                                    std::to_string(a) + " (no construction for odd equal sizes)");
    if (a == s.n())
        throw std::invalid_argument("case |beta| = |alpha| requires |alpha| < n");
    return ParadoxCase::case2;
}

void check_gamma(double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::invalid_argument("paradox construction requires finite gamma > 0");
}

SingleQubitBasis basis_from_ratio(double ratio, double phase) {
    // ratio = c0/c1 > 0
    const double c1 = 1.0 / std::sqrt(1.0 + ratio * ratio);
    return SingleQubitBasis(ratio * c1, c1, phase);
}

// Visits all size-k subsets of {0,...,n-1} in lexicographic order.
template <class Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

std::vector<Event> zero_constraint_events(const Scenario& s, const LocalSettings& settings) {
    const int n = s.n();
    std::vector<Event> events;
    events.reserve(binom(n, s.alpha_size()) + binom(n, s.beta_size()));

    const SingleQubitBasis b_comp = settings.b_basis.complement();
    for_each_subset(n, s.alpha_size(), [&](const std::vector<int>& subset) {
        Event e;
        e.bases.assign(n, settings.a_basis);
        for (int k : subset) e.bases[k] = settings.b_basis;
        events.push_back(std::move(e));
    });
    for_each_subset(n, s.beta_size(), [&](const std::vector<int>& subset) {
        Event e;
        e.bases.assign(n, settings.a_basis);
        for (int k : subset) e.bases[k] = b_comp;
        events.push_back(std::move(e));
    });
    return events;
}

LocalSettings solve_settings(const Scenario& s, double gamma, double theta_h) {
    check_gamma(gamma);
    const int n = s.n();
    const double a = s.alpha_size(), b = s.beta_size();

    if (classify(s) == ParadoxCase::case2) {
        const double theta_a = theta_h / n;
        const double theta_b = kPi / a + theta_a;
        const double ratio_a = std::pow(gamma, 1.0 / (n - a));
        const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
        return LocalSettings(basis_from_ratio(ratio_a, theta_a),
                             SingleQubitBasis(inv_sqrt2, inv_sqrt2, theta_b));
    }

    const double denom = n * (a + b) - 2.0 * a * b; // > 0 for every valid scenario
    const double theta_a = (theta_h + (1.0 - a * b / (a - b)) * kPi) / n;
    const double theta_b = b * kPi / (a - b) + theta_a;
    const double ratio_a = std::pow(gamma, (a + b) / denom);
    const double ratio_b = std::pow(ratio_a, (a - b) / (a + b));
    return LocalSettings(basis_from_ratio(ratio_a, theta_a), basis_from_ratio(ratio_b, theta_b));
}

double success_probability_closed(const Scenario& s, double gamma) {
    check_gamma(gamma);
    const int n = s.n();
    const double a = s.alpha_size(), b = s.beta_size();
    const double g2 = gamma * gamma;

    if (classify(s) == ParadoxCase::case2) {
        const double k1 = std::pow(gamma, a / (n - a));
        const double k2 = std::pow(gamma, 2.0 / (n - a));
        return g2 * (1.0 + k1) * (1.0 + k1) / ((1.0 + g2) * std::pow(1.0 + k2, n));
    }

    const double denom = n * (a + b) - 2.0 * a * b;
    const double tau0 = a * b / (a - b);
    const std::complex<double> kappa0 = std::polar(1.0, tau0 * kPi);
    const double kappa1 = std::pow(gamma, 2.0 * a * b / denom);
    const double kappa2 = std::pow(gamma, 2.0 * (a + b) / denom);
    return g2 * std::norm(kappa0 - kappa1) / ((1.0 + g2) * std::pow(1.0 + kappa2, n));
}

double success_probability_supplement(const Scenario& s, double gamma) {
    check_gamma(gamma);
    const int n = s.n();
    const double a = s.alpha_size(), b = s.beta_size();
    const double g2 = gamma * gamma;

    if (classify(s) == ParadoxCase::case2) {
        const double tau1p = 2.0 / (n - a);
        const double t = std::pow(gamma, n * tau1p / 2.0 - 1.0);
        return g2 * (1.0 + t) * (1.0 + t) / ((1.0 + g2) * std::pow(1.0 + std::pow(gamma, tau1p), n));
    }

    const double tau0 = a * b / (a - b);
    const double tau1 = 2.0 * (a + b) / ((n - b) * a + (n - a) * b);
    const std::complex<double> top =
        std::polar(1.0, tau0 * kPi) - std::pow(gamma, n * tau1 / 2.0 - 1.0);
    return g2 * std::norm(top) / ((1.0 + g2) * std::pow(1.0 + std::pow(gamma, tau1), n));
}

bool paradox_degenerate_at(const Scenario& s, double gamma) {
    if (s.beta_size() == s.alpha_size()) return false; // Case 2 never vanishes
    if (gamma != 1.0) return false;
    const std::int64_t a = s.alpha_size(), b = s.beta_size();
    const Rational tau0(a * b, a - b);
    return tau0.is_integer() && tau0.num() % 2 == 0;
}

ParadoxReport construct_paradox(const Scenario& s, double gamma, double theta_h, int max_qubits) {
    const ParadoxCase tag = classify(s);
    check_gamma(gamma);
    if (paradox_degenerate_at(s, gamma))
        throw degenerate_error(
            s.label() + " with gamma = 1: success probability vanishes identically "
            "(|alpha||beta|/(|alpha|-|beta|) is an even integer); no paradox at these parameters");

    const LocalSettings settings = solve_settings(s, gamma, theta_h);
    const StateVector psi = make_ghz(GhzState(s.n(), gamma, theta_h), max_qubits);

    double max_residual = 0.0;
    for (const Event& e : zero_constraint_events(s, settings))
        max_residual = std::max(max_residual, event_probability(psi, e));
    if (max_residual > kZeroConstraintTolerance)
        throw postcondition_error(s.label() + ": zero-constraint residual " +
                                  std::to_string(max_residual) + " exceeds 1e-10");

    Event success;
    success.bases.assign(s.n(), settings.a_basis);
    const double p_state = event_probability(psi, success);
    const double p_closed = success_probability_closed(s, gamma);
    const double p_supp = success_probability_supplement(s, gamma);
    if (std::abs(p_closed - p_state) > kFormulaAgreementTolerance ||
        std::abs(p_supp - p_state) > kFormulaAgreementTolerance)
        throw postcondition_error(s.label() + ": closed-form and state-vector success "
                                  "probabilities disagree beyond 1e-12");
    if (!(p_state > 0.0))
        throw postcondition_error(s.label() + ": success probability is not positive");

    return ParadoxReport{s, gamma, theta_h, settings, p_state, max_residual, tag};
}

std::vector<SweepRow> sweep_success(int n_min, int n_max) {
    if (n_min < 3 || n_min > n_max)
        throw std::invalid_argument("sweep requires 3 <= n_min <= n_max");
    std::vector<SweepRow> rows;
    rows.reserve(n_max - n_min + 1);
    for (int n = n_min; n <= n_max; ++n) {
        const double p_std = (1.0 + std::cos(kPi / (n - 1))) / std::ldexp(1.0, n);
        const double p_gen = std::ldexp(1.0, -(n - 1));
        rows.push_back({n, p_std, p_gen, p_gen > p_std});
    }
    return rows;
}

BestChoice best_paradox_choice(int n, double gamma) {
    if (n < 3) throw std::invalid_argument("best_paradox_choice requires n >= 3");
    check_gamma(gamma);

    BestChoice best{0, 0, -1.0, {}, false};
    for (int a = 2; a <= n; ++a) {
        for (int b = 1; b <= a && a + b <= n + 1; ++b) {
            if (b == a && (a % 2 != 0 || a == n)) continue; // not constructible
            const Scenario s(n, a, b);
            const double p = success_probability_closed(s, gamma);
            if (p > best.probability + 1e-12) {
                best.alpha_size = a;
                best.beta_size = b;
                best.probability = p;
                best.tied.clear();
                best.tied.emplace_back(a, b);
            } else if (std::abs(p - best.probability) <= 1e-12) {
                best.tied.emplace_back(a, b);
            }
        }
    }
    best.gamma_one_tie = gamma == 1.0 && best.tied.size() > 1;
    return best;
}

} // namespace hardy
