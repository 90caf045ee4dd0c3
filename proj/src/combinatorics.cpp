#include "hardy/combinatorics.hpp"

#include <stdexcept>

namespace hardy {

std::uint64_t binom(std::uint64_t m, std::uint64_t k) {
    if (k > m) return 0;
    if (k > m - k) k = m - k;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // result * (m - k + i) is divisible by i: result holds binom(m-k+i-1, i-1)
        // and the product of i consecutive integers is divisible by i!.
        std::uint64_t t;
        if (__builtin_mul_overflow(result, m - k + i, &t))
            throw std::overflow_error("binomial coefficient overflows 64 bits");
        result = t / i;
    }
    return result;
}

Scenario::Scenario(int n, int alpha_size, int beta_size, Rational x, Rational y)
    : n_(n), alpha_size_(alpha_size), beta_size_(beta_size), x_(std::move(x)), y_(std::move(y)) {
    if (n_ < 2)
        throw std::invalid_argument("scenario requires n >= 2, got n = " + std::to_string(n_));
    if (alpha_size_ < 2 || alpha_size_ > n_)
        throw std::invalid_argument("scenario requires 2 <= |alpha| <= n, got |alpha| = " +
                                    std::to_string(alpha_size_) + " with n = " + std::to_string(n_));
    if (beta_size_ < 1 || beta_size_ > alpha_size_)
        throw std::invalid_argument("scenario requires 1 <= |beta| <= |alpha|, got |beta| = " +
                                    std::to_string(beta_size_) + " with |alpha| = " +
                                    std::to_string(alpha_size_));
    if (alpha_size_ + beta_size_ > n_ + 1)
        throw std::invalid_argument("scenario requires |alpha| + |beta| <= n + 1, got " +
                                    std::to_string(alpha_size_ + beta_size_) + " > " +
                                    std::to_string(n_ + 1));
    if (!x_.is_positive())
        throw std::invalid_argument("scenario requires x > 0, got x = " + x_.str());
    if (!y_.is_positive())
        throw std::invalid_argument("scenario requires y > 0, got y = " + y_.str());
}

Scenario::Scenario(unchecked_tag, int n, int alpha_size, int beta_size, Rational x, Rational y)
    : n_(n), alpha_size_(alpha_size), beta_size_(beta_size), x_(std::move(x)), y_(std::move(y)) {}

Scenario Scenario::unchecked(int n, int alpha_size, int beta_size, Rational x, Rational y) {
    return Scenario(unchecked_tag{}, n, alpha_size, beta_size, std::move(x), std::move(y));
}

std::string Scenario::label() const {
    std::string s = "[" + std::to_string(n_) + ";" + std::to_string(alpha_size_) + "," +
                    std::to_string(beta_size_);
    if (!unit_weights()) s += ";" + x_.str() + "," + y_.str();
    return s + "]";
}

CoefficientF coefficient_f(const Scenario& s) {
    CoefficientF best{Rational(0), -1};
    for (int m = 0; m <= s.n(); ++m) {
        const Rational value =
            s.x() * Rational(static_cast<std::int64_t>(binom(m, s.alpha_size()))) +
            s.y() * Rational(static_cast<std::int64_t>(binom(s.n() - m, s.beta_size())));
        if (best.minimizer < 0 || value < best.value) {
            best.value = value;
            best.minimizer = m;
        }
    }
    return best;
}

std::uint64_t coefficient_f_closed_qq(int n, int q) {
    if (q % 2 != 0)
        throw std::invalid_argument("closed form F[n;q,q] requires even q, got q = " +
                                    std::to_string(q));
    if (q < 2 || 2 * q > n + 1)
        throw std::invalid_argument("closed form F[n;q,q] requires 2 <= 2q <= n + 1, got q = " +
                                    std::to_string(q) + ", n = " + std::to_string(n));
    const int half = (n + 1) / 2;
    return binom(half, q) + binom(n - half, q);
}

} // namespace hardy
