#pragma once

#include <cstdint>
#include <string>

#include "hardy/rational.hpp"

namespace hardy {

// Exact binomial coefficient m over k. Returns 0 for k > m. Overflow of the
// 64-bit result throws std::overflow_error (never wraps).
std::uint64_t binom(std::uint64_t m, std::uint64_t k);

// Parameters of an [n;|alpha|,|beta|] scenario with inequality weights x, y.
// Construction enforces
//   n >= 2,  2 <= |alpha| <= n,  1 <= |beta| <= |alpha|,
//   |alpha| + |beta| <= n + 1,   x > 0,  y > 0.
class Scenario {
public:
    Scenario(int n, int alpha_size, int beta_size, Rational x = 1, Rational y = 1);

    // Skips all validation. Exists so tests can probe parameter sets outside
    // the admissible region (e.g. |alpha|+|beta| > n+1). Not for production use.
    static Scenario unchecked(int n, int alpha_size, int beta_size, Rational x = 1,
                              Rational y = 1);

    int n() const { return n_; }
    int alpha_size() const { return alpha_size_; }
    int beta_size() const { return beta_size_; }
    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }

    bool unit_weights() const { return x_ == Rational(1) && y_ == Rational(1); }

    // "[n;|alpha|,|beta|]" plus ";x,y" when the weights are not 1,1.
    std::string label() const;

private:
    struct unchecked_tag {};
    Scenario(unchecked_tag, int n, int alpha_size, int beta_size, Rational x, Rational y);

    int n_;
    int alpha_size_;
    int beta_size_;
    Rational x_;
    Rational y_;
};

struct CoefficientF {
    Rational value;
    int minimizer; // smallest m attaining the minimum
};

// Classical coefficient of the success term:
//   F(n;|alpha|,|beta|;x,y) = min_{0<=m<=n} [ x*binom(m,|alpha|) + y*binom(n-m,|beta|) ].
// Computed by direct scan over m.
CoefficientF coefficient_f(const Scenario& s);

// Closed form of F for |alpha| = |beta| = q with q even, x = y = 1:
//   binom(floor((n+1)/2), q) + binom(n - floor((n+1)/2), q).
// Rejects odd q or 2q > n+1.
std::uint64_t coefficient_f_closed_qq(int n, int q);

} // namespace hardy
