#include "hardy/quantum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
    double r = std::fmod(a, kTwoPi);
    if (r < 0) r += kTwoPi;
    return r;
}

double checked_probability(double p, const char* where) {
    if (!(p >= -kProbabilitySlack && p <= 1.0 + kProbabilitySlack))
        throw postcondition_error(std::string(where) + ": probability " + std::to_string(p) +
                                  " outside [0,1] beyond slack");
    if (p < 0.0) return 0.0;
    if (p > 1.0) return 1.0;
    return p;
}

} // namespace

GhzState::GhzState(int n_, double gamma_, double theta_h_) : n(n_), gamma(gamma_), theta_h(theta_h_) {
    if (n < 1) throw std::invalid_argument("GHZ state requires n >= 1");
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::invalid_argument("GHZ state requires finite gamma > 0 (degenerate amplitude ratio)");
    if (!std::isfinite(theta_h)) throw std::invalid_argument("GHZ state requires finite theta_h");
}

double GhzState::h0() const { return 1.0 / std::sqrt(1.0 + gamma * gamma); }

std::complex<double> GhzState::h1() const {
    return std::polar(gamma / std::sqrt(1.0 + gamma * gamma), theta_h);
}

SingleQubitBasis::SingleQubitBasis(double c0_, double c1_, double phi_)
    : c0(c0_), c1(c1_), phi(wrap_angle(phi_)) {
    if (!(c0 >= 0.0) || !(c1 >= 0.0))
        throw std::invalid_argument("basis amplitudes must be nonnegative reals");
    if (std::abs(c0 * c0 + c1 * c1 - 1.0) > 1e-12)
        throw std::invalid_argument("basis amplitudes must be normalized: c0^2 + c1^2 = 1");
}

SingleQubitBasis SingleQubitBasis::complement() const {
    return SingleQubitBasis(c1, c0, phi + std::numbers::pi);
}

std::complex<double> SingleQubitBasis::component(int bit) const {
    return bit == 0 ? std::complex<double>(c0, 0.0) : std::polar(c1, phi);
}

LocalSettings::LocalSettings(SingleQubitBasis a, SingleQubitBasis b)
    : a_basis(a), b_basis(b) {}

StateVector::StateVector(int n, std::vector<std::complex<double>> amplitudes)
    : n_(n), amps_(std::move(amplitudes)) {
    if (n_ < 1) throw std::invalid_argument("state vector requires n >= 1");
    if (amps_.size() != (std::size_t{1} << n_))
        throw std::invalid_argument("state vector has wrong amplitude count");
    double norm2 = 0.0;
    for (const auto& a : amps_) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > 1e-10)
        throw std::invalid_argument("state vector is not normalized (|norm^2 - 1| > 1e-10)");
}

StateVector make_ghz(const GhzState& state, int max_qubits) {
    if (state.n > max_qubits)
        throw resource_error("state vector for n = " + std::to_string(state.n) +
                             " qubits exceeds the configured maximum of " +
                             std::to_string(max_qubits));
    std::vector<std::complex<double>> amps(std::size_t{1} << state.n, 0.0);
    amps.front() = state.h0();
    amps.back() = state.h1();
    return StateVector(state.n, std::move(amps));
}

double event_probability(const StateVector& psi, const Event& e) {
    const int n = psi.num_qubits();
    if (static_cast<int>(e.bases.size()) != n)
        throw std::invalid_argument("event qubit count does not match the state");

    // Build the product vector: qubit k+1 becomes the high bit of the partial index.
    std::vector<std::complex<double>> phi{1.0};
    phi.reserve(std::size_t{1} << n);
    for (int k = 0; k < n; ++k) {
        const std::size_t len = phi.size();
        phi.resize(len * 2);
        const std::complex<double> lo = e.bases[k].component(0);
        const std::complex<double> hi = e.bases[k].component(1);
        for (std::size_t j = len; j-- > 0;) {
            phi[len + j] = hi * phi[j];
            phi[j] = lo * phi[j];
        }
    }

    std::complex<double> overlap = 0.0;
    const auto& amps = psi.amplitudes();
    for (std::size_t z = 0; z < amps.size(); ++z) overlap += std::conj(phi[z]) * amps[z];
    return checked_probability(std::norm(overlap), "event_probability");
}

double closed_form_event_probability(const GhzState& state, const LocalSettings& settings,
                                     EventKind kind, int subset_size) {
    const int n = state.n;
    const double a0 = settings.a_basis.c0, a1 = settings.a_basis.c1;
    const double b0 = settings.b_basis.c0, b1 = settings.b_basis.c1;
    const double ta = settings.a_basis.phi, tb = settings.b_basis.phi;
    const double h0 = state.h0();
    const double h1 = std::abs(state.h1());

    double m0 = 0.0, m1 = 0.0, phase = 0.0;
    switch (kind) {
    case EventKind::alpha_zero: {
        const int s = subset_size;
        if (s < 0 || s > n) throw std::invalid_argument("subset size out of range");
        m0 = std::pow(b0, s) * std::pow(a0, n - s) * h0;
        m1 = std::pow(b1, s) * std::pow(a1, n - s) * h1;
        phase = (n - s) * ta + s * tb - state.theta_h;
        break;
    }
    case EventKind::beta_zero: {
        const int s = subset_size;
        if (s < 0 || s > n) throw std::invalid_argument("subset size out of range");
        m0 = std::pow(b1, s) * std::pow(a0, n - s) * h0;
        m1 = std::pow(b0, s) * std::pow(a1, n - s) * h1;
        phase = (n - s) * ta + s * tb - state.theta_h + s * std::numbers::pi;
        break;
    }
    case EventKind::success:
        m0 = std::pow(a0, n) * h0;
        m1 = std::pow(a1, n) * h1;
        phase = n * ta - state.theta_h;
        break;
    default:
        throw std::invalid_argument("unknown event kind");
    }
    const double p = m0 * m0 + m1 * m1 + 2.0 * m0 * m1 * std::cos(wrap_angle(phase));
    return checked_probability(p, "closed_form_event_probability");
}

double mixed_event_probability(double p_pure, double visibility, int n) {
    if (!(visibility >= 0.0 && visibility <= 1.0))
        throw std::invalid_argument("visibility must lie in [0,1]");
    if (n < 1) throw std::invalid_argument("mixed_event_probability requires n >= 1");
    return visibility * p_pure + (1.0 - visibility) / std::ldexp(1.0, n);
}

} // namespace hardy
