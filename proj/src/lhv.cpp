#include "hardy/lhv.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

using boost::multiprecision::cpp_int;

int parse_enum_guard() {
    if (const char* env = std::getenv("HARDY_ENUM_MAX")) {
        const int v = std::atoi(env);
        if (v >= 1 && v <= 16) return v;
    }
    return kDefaultEnumGuardQubits;
}

void check_enum_guard(int n) {
    const int guard = enum_guard_qubits();
    if (n > guard)
        throw resource_error("strategy enumeration for n = " + std::to_string(n) +
                             " exceeds the guard of " + std::to_string(guard) +
                             " qubits (override with HARDY_ENUM_MAX)");
    if (n < 1) throw std::invalid_argument("enumeration requires n >= 1");
}

// All size-k subsets of {0,...,n-1} as bit masks, lexicographic in index lists.
std::vector<std::uint32_t> subset_masks(int n, int k) {
    std::vector<std::uint32_t> masks;
    masks.reserve(binom(n, k));
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::uint32_t m = 0;
        for (int i : idx) m |= 1u << i;
        masks.push_back(m);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return masks;
}

struct SubsetTables {
    std::uint32_t full;
    std::vector<std::uint32_t> alpha; // size-|alpha| masks
    std::vector<std::uint32_t> beta;  // size-|beta| masks
};

SubsetTables make_tables(const Scenario& s) {
    return SubsetTables{(s.n() == 32) ? ~0u : ((1u << s.n()) - 1u),
                        subset_masks(s.n(), s.alpha_size()), subset_masks(s.n(), s.beta_size())};
}

// b_S a_{complement}: every b_k in S is 1 and every a_k outside S is 1.
inline bool alpha_product(const SubsetTables& t, std::uint32_t a, std::uint32_t b,
                          std::uint32_t subset) {
    return (b & subset) == subset && (a & (t.full & ~subset)) == (t.full & ~subset);
}

// bbar_S a_{complement}: every b_k in S is 0 and every a_k outside S is 1.
inline bool beta_product(const SubsetTables& t, std::uint32_t a, std::uint32_t b,
                         std::uint32_t subset) {
    return (b & subset) == 0 && (a & (t.full & ~subset)) == (t.full & ~subset);
}

// ---- exact integer affine rank ------------------------------------------

// Row-echelon basis over the integers. Rows are reduced by cross
// multiplication and renormalized by their gcd, so entries stay small and all
// arithmetic is exact.
class IntegerRowBasis {
public:
    // Reduces v against the basis; if independent, inserts it. Returns rank delta.
    int insert(std::vector<cpp_int> v) {
        for (const Row& row : rows_) {
            cpp_int& c = v[row.pivot];
            if (c == 0) continue;
            const cpp_int m = row.values[row.pivot];
            const cpp_int f = c;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] = m * v[j] - f * row.values[j];
        }
        std::size_t pivot = 0;
        while (pivot < v.size() && v[pivot] == 0) ++pivot;
        if (pivot == v.size()) return 0;
        cpp_int g = 0;
        for (const cpp_int& x : v) g = boost::multiprecision::gcd(g, x);
        if (g > 1)
            for (cpp_int& x : v) x /= g;
        rows_.push_back(Row{pivot, std::move(v)});
        return 1;
    }

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    struct Row {
        std::size_t pivot;
        std::vector<cpp_int> values;
    };
    std::vector<Row> rows_;
};

std::uint64_t pow3(int n) {
    std::uint64_t r = 1;
    for (int i = 0; i < n; ++i) r *= 3;
    return r;
}

// Correlation vector of a strategy, 0/1 entries (products of 0/1 values).
std::vector<std::int8_t> correlation_vector(const DeterministicStrategy& st) {
    const std::uint64_t dim = pow3(st.n);
    std::vector<std::int8_t> v(dim);
    for (std::uint64_t idx = 0; idx < dim; ++idx) {
        std::uint64_t t = idx;
        int val = 1;
        for (int k = 0; k < st.n && val != 0; ++k) {
            const int digit = static_cast<int>(t % 3);
            t /= 3;
            if (digit == 1) val &= st.a(k);
            else if (digit == 2) val &= st.b(k);
        }
        v[idx] = static_cast<std::int8_t>(val);
    }
    return v;
}

int affine_rank_of(const std::vector<std::vector<std::int8_t>>& vectors, int max_rank) {
    if (vectors.size() < 2) return 0;
    IntegerRowBasis basis;
    const auto& origin = vectors.front();
    std::vector<cpp_int> diff(origin.size());
    for (std::size_t i = 1; i < vectors.size(); ++i) {
        for (std::size_t j = 0; j < origin.size(); ++j)
            diff[j] = int(vectors[i][j]) - int(origin[j]);
        basis.insert(diff);
        if (basis.rank() == max_rank) break; // rank cannot grow past the ambient bound
    }
    return basis.rank();
}

void check_tightness_guard(int n) {
    if (n > kTightnessGuardQubits)
        throw resource_error("exact rank computation guarded to n <= " +
                             std::to_string(kTightnessGuardQubits) + ", got n = " +
                             std::to_string(n));
}

} // namespace

int enum_guard_qubits() {
    static const int guard = parse_enum_guard();
    return guard;
}

std::uint64_t strategy_count(int n) {
    check_enum_guard(n);
    return std::uint64_t{1} << (2 * n);
}

StrategyRange::StrategyRange(int n) : n_(n), count_(strategy_count(n)) {}

Theorem1Report verify_theorem1(const Scenario& s) {
    const std::uint64_t total = strategy_count(s.n());
    const SubsetTables t = make_tables(s);

    for (std::uint64_t idx = 0; idx < total; ++idx) {
        const DeterministicStrategy st = DeterministicStrategy::from_index(s.n(), idx);
        if (st.a_bits != t.full) continue; // a_{I_n} = 0, nothing to prove
        bool all_zero = true;
        for (std::uint32_t m : t.alpha)
            if (alpha_product(t, st.a_bits, st.b_bits, m)) { all_zero = false; break; }
        if (all_zero)
            for (std::uint32_t m : t.beta)
                if (beta_product(t, st.a_bits, st.b_bits, m)) { all_zero = false; break; }
        if (all_zero)
            return Theorem1Report{false, idx + 1, st}; // premises hold yet a_{I_n} = 1
    }
    return Theorem1Report{true, total, std::nullopt};
}

ClassicalBound classical_bound_range(const Scenario& s, const Rational& f_prime,
                                     std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t total = strategy_count(s.n());
    if (lo >= hi || hi > total) throw std::invalid_argument("bad strategy range");
    const SubsetTables t = make_tables(s);

    bool have = false;
    ClassicalBound best{Rational(0), DeterministicStrategy::from_index(s.n(), lo)};
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        const DeterministicStrategy st = DeterministicStrategy::from_index(s.n(), idx);
        std::int64_t count_alpha = 0, count_beta = 0;
        for (std::uint32_t m : t.alpha) count_alpha += alpha_product(t, st.a_bits, st.b_bits, m);
        for (std::uint32_t m : t.beta) count_beta += beta_product(t, st.a_bits, st.b_bits, m);
        Rational value = -(s.x() * Rational(count_alpha)) - s.y() * Rational(count_beta);
        if (st.a_bits == t.full) value += f_prime;
        if (!have || best.max_value < value) {
            best = ClassicalBound{value, st};
            have = true;
        }
    }
    return best;
}

ClassicalBound classical_bound(const Scenario& s, std::optional<Rational> f_override) {
    const Rational f_prime = f_override ? *f_override : coefficient_f(s).value;
    return classical_bound_range(s, f_prime, 0, strategy_count(s.n()));
}

TightnessReport check_tightness(const Scenario& s) {
    check_tightness_guard(s.n());
    const Rational f = coefficient_f(s).value;
    const std::uint64_t total = strategy_count(s.n());
    const SubsetTables t = make_tables(s);

    std::vector<std::vector<std::int8_t>> saturating;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        const DeterministicStrategy st = DeterministicStrategy::from_index(s.n(), idx);
        std::int64_t count_alpha = 0, count_beta = 0;
        for (std::uint32_t m : t.alpha) count_alpha += alpha_product(t, st.a_bits, st.b_bits, m);
        for (std::uint32_t m : t.beta) count_beta += beta_product(t, st.a_bits, st.b_bits, m);
        Rational value = -(s.x() * Rational(count_alpha)) - s.y() * Rational(count_beta);
        if (st.a_bits == t.full) value += f;
        if (value.is_zero()) saturating.push_back(correlation_vector(st));
    }

    const int ambient = static_cast<int>(pow3(s.n())) - 1;
    const int rank = affine_rank_of(saturating, ambient);
    return TightnessReport{s, saturating.size(), rank, ambient, rank == ambient - 1};
}

int ambient_affine_rank(int n) {
    check_tightness_guard(n);
    const std::uint64_t total = strategy_count(n);
    const int ambient = static_cast<int>(pow3(n)) - 1;

    IntegerRowBasis basis;
    std::vector<std::int8_t> origin = correlation_vector(DeterministicStrategy::from_index(n, 0));
    std::vector<cpp_int> diff(origin.size());
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        const auto v = correlation_vector(DeterministicStrategy::from_index(n, idx));
        for (std::size_t j = 0; j < v.size(); ++j) diff[j] = int(v[j]) - int(origin[j]);
        basis.insert(diff);
        if (basis.rank() == ambient) break;
    }
    return basis.rank();
}

} // namespace hardy
