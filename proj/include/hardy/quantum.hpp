#pragma once

#include <complex>
#include <vector>

#include "hardy/combinatorics.hpp"

namespace hardy {

inline constexpr int kDefaultMaxQubits = 14;
inline constexpr double kProbabilitySlack = 1e-12;

// Generalized GHZ parameters. The state is
//   h0 |0...0> + h1 |1...1>,  h0 = 1/sqrt(1+gamma^2),  h1 = gamma e^{i theta_h}/sqrt(1+gamma^2),
// with gamma = |h1|/|h0| > 0. gamma = 0 or non-finite values are rejected as degenerate.
struct GhzState {
    int n;
    double gamma;
    double theta_h;

    GhzState(int n, double gamma, double theta_h = 0.0);

    double h0() const;                 // real, >= 0
    std::complex<double> h1() const;
};

// One measurement direction c0|0> + c1 e^{i phi}|1> with real c0, c1 >= 0,
// c0^2 + c1^2 = 1 (checked to 1e-12).
struct SingleQubitBasis {
    double c0;
    double c1;
    double phi;

    SingleQubitBasis(double c0, double c1, double phi);

    // The orthogonal direction: (c1, c0, phi + pi). <complement|this> = 0.
    SingleQubitBasis complement() const;

    std::complex<double> component(int bit) const;
};

// Identical per-site measurement pair: a-direction and b-direction.
// Phases are wrapped into [0, 2pi) at construction.
struct LocalSettings {
    SingleQubitBasis a_basis;
    SingleQubitBasis b_basis;

    LocalSettings(SingleQubitBasis a, SingleQubitBasis b);
};

// One rank-1 product projector: a basis vector per qubit.
struct Event {
    std::vector<SingleQubitBasis> bases;
};

// Dense n-qubit pure state. Index convention is little-endian throughout the
// project: qubit 1 is the lowest bit of the amplitude index.
class StateVector {
public:
    StateVector(int n, std::vector<std::complex<double>> amplitudes);

    int num_qubits() const { return n_; }
    const std::vector<std::complex<double>>& amplitudes() const { return amps_; }

private:
    int n_;
    std::vector<std::complex<double>> amps_;
};

StateVector make_ghz(const GhzState& state, int max_qubits = kDefaultMaxQubits);

// p = |<phi_e|psi>|^2 for the product vector phi_e of the event's bases.
// Values outside [-1e-12, 1+1e-12] raise postcondition_error; the in-slack
// result is clamped to [0,1].
double event_probability(const StateVector& psi, const Event& e);

enum class EventKind {
    alpha_zero, // b-basis on a size-|subset| set, a-basis on the complement
    beta_zero,  // complement b-basis on the subset
    success     // a-basis everywhere
};

// Closed forms of the three event probabilities for symmetric settings on a
// generalized GHZ state:
//   p(b_a a_rest)    = | b0^s a0^{n-s} |h0| + b1^s a1^{n-s} |h1| e^{i theta}  |^2
//   p(bbar_b a_rest) = | b1^s a0^{n-s} |h0| + b0^s a1^{n-s} |h1| e^{i theta'} |^2
//   p(a_all)         = | a0^n |h0| + a1^n |h1| e^{i (n theta_a - theta_h)}    |^2
// with theta  = (n-s) theta_a + s theta_b - theta_h
// and  theta' = (n-s) theta_a + s theta_b - theta_h + s pi.
double closed_form_event_probability(const GhzState& state, const LocalSettings& settings,
                                     EventKind kind, int subset_size);

// White-noise mixing for full-length rank-1 product events:
//   V * p_pure + (1 - V) / 2^n.
double mixed_event_probability(double p_pure, double visibility, int n);

} // namespace hardy
