#pragma once

#include <cstdint>
#include <iterator>
#include <optional>

#include "hardy/combinatorics.hpp"

namespace hardy {

// Hard ceiling on 4^n strategy enumeration. Overridable (both directions)
// through the HARDY_ENUM_MAX environment variable, read once per process.
inline constexpr int kDefaultEnumGuardQubits = 12;
int enum_guard_qubits();

// One deterministic LHV assignment: bit k of a_bits (b_bits) is the value of
// observable a_{k+1} (b_{k+1}). The strategy index is the 2n-bit integer with
// a_bits in the low n bits and b_bits in the high n bits.
struct DeterministicStrategy {
    int n;
    std::uint32_t a_bits;
    std::uint32_t b_bits;

    int a(int k) const { return (a_bits >> k) & 1; }
    int b(int k) const { return (b_bits >> k) & 1; }
    std::uint64_t index() const {
        return (std::uint64_t{b_bits} << n) | std::uint64_t{a_bits};
    }
    static DeterministicStrategy from_index(int n, std::uint64_t idx) {
        const std::uint32_t mask = (n == 32) ? ~0u : ((1u << n) - 1u);
        return DeterministicStrategy{n, static_cast<std::uint32_t>(idx) & mask,
                                     static_cast<std::uint32_t>(idx >> n) & mask};
    }
};

std::uint64_t strategy_count(int n); // 4^n, guarded

// Iterable view over all 4^n strategies in increasing index order.
class StrategyRange {
public:
    explicit StrategyRange(int n);

    class iterator {
    public:
        using value_type = DeterministicStrategy;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator(int n, std::uint64_t idx) : n_(n), idx_(idx) {}
        DeterministicStrategy operator*() const { return DeterministicStrategy::from_index(n_, idx_); }
        iterator& operator++() { ++idx_; return *this; }
        iterator operator++(int) { iterator t = *this; ++idx_; return t; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.idx_ == b.idx_; }
        friend bool operator!=(const iterator& a, const iterator& b) { return !(a == b); }

    private:
        int n_;
        std::uint64_t idx_;
    };

    iterator begin() const { return iterator(n_, 0); }
    iterator end() const { return iterator(n_, count_); }
    std::uint64_t size() const { return count_; }

private:
    int n_;
    std::uint64_t count_;
};

struct Theorem1Report {
    bool passed;
    std::uint64_t strategies_checked;
    std::optional<DeterministicStrategy> counterexample; // first one, if any
};

// Checks over every deterministic strategy: if all b_a a_rest and
// bbar_b a_rest subset products vanish, then the full a-product vanishes.
// Passes for every scenario satisfying |alpha| + |beta| <= n + 1.
Theorem1Report verify_theorem1(const Scenario& s);

struct ClassicalBound {
    Rational max_value;
    DeterministicStrategy argmax; // lowest strategy index attaining the max
};

// Maximum over all deterministic strategies of
//   F' * a_{I_n} - x * sum_alpha b_a a_rest - y * sum_beta bbar_b a_rest
// with F' = f_override if given, else coefficient_f(s). Exact rationals.
ClassicalBound classical_bound(const Scenario& s,
                               std::optional<Rational> f_override = std::nullopt);

// Same maximum restricted to strategy indices [lo, hi). Exists so callers can
// partition the range and verify the reduction is partition-independent.
ClassicalBound classical_bound_range(const Scenario& s, const Rational& f_prime,
                                     std::uint64_t lo, std::uint64_t hi);

struct TightnessReport {
    Scenario scenario;
    std::uint64_t saturating_vertex_count;
    int affine_rank;
    int ambient_affine_dim; // 3^n - 1
    bool is_tight;          // affine_rank == ambient_affine_dim - 1
};

inline constexpr int kTightnessGuardQubits = 6;

// Facet check: maps every strategy with Bell value exactly 0 to its length-3^n
// correlation vector and computes the affine rank with exact integer
// elimination. Coordinate convention: index = sum_k d_k 3^(k-1) with digit
// d_k in {0: omit, 1: measure a_k, 2: measure b_k} for party k (party 1 is the
// least significant digit); entry = product of the selected observables'
// values, empty product = 1.
TightnessReport check_tightness(const Scenario& s);

// Affine rank of the correlation vectors of all 4^n strategies; equals
// 3^n - 1 (the LHV polytope is full-dimensional in this embedding).
int ambient_affine_rank(int n);

} // namespace hardy
