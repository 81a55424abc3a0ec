#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "codebetti/matrix.hpp"

namespace codebetti {

// Default cap on enumeration sweeps (number of codewords or subcodes
// visited). Oversized requests throw EnumerationTooLarge instead of running
// unbounded; every entry point taking the cap lets callers raise it.
inline constexpr std::uint64_t kDefaultEnumCap = std::uint64_t{1} << 24;

// Weight hierarchy (d_1, ..., d_k): d_i is the minimum support size of an
// i-dimensional subcode. Strictly increasing, d_k = |Supp(C)|.
struct WeightHierarchy {
    std::vector<long long> d; // d[i-1] = d_i

    int dimension() const { return static_cast<int>(d.size()); }
    bool operator==(const WeightHierarchy& o) const { return d == o.d; }
    bool operator!=(const WeightHierarchy& o) const { return !(*this == o); }
};

std::string to_string(const WeightHierarchy& w); // "(9,12,13)"

// An [n, k] linear code over GF(q), 1 <= n <= 64, 0 <= k <= n. Stores the
// canonical RREF generator (k x n, zero rows dropped) and the canonical RREF
// parity-check matrix ((n-k) x n). Immutable.
class LinearCode {
  public:
    static LinearCode from_generator(const Mat& g);
    static LinearCode from_parity_check(const Mat& h);
    static LinearCode from_generator(FieldPtr field,
                                     const std::vector<std::vector<unsigned>>& rows);
    static LinearCode from_parity_check(FieldPtr field,
                                        const std::vector<std::vector<unsigned>>& rows);

    int length() const { return n_; }
    int dimension() const { return k_; }
    const Mat& generator() const { return gen_; }      // k x n RREF
    const Mat& parity_check() const { return par_; }   // (n-k) x n RREF
    const FieldPtr& field() const { return gen_.field(); }
    unsigned field_order() const { return gen_.field()->order(); }

    // Coordinates where every codeword vanishes (1-based mask). These are
    // exactly the isthmuses of the parity-check matroid.
    Mask zero_coordinates() const;
    Mask support() const; // complement: Supp(C)

  private:
    LinearCode(Mat gen, Mat par, int n, int k);
    Mat gen_, par_;
    int n_, k_;
};

// A dim-dimensional subcode, carried as its canonical RREF basis (dim x n).
// Holds a pointer to the parent code; valid only while the parent lives.
class Subcode {
  public:
    Subcode(const LinearCode* parent, Mat basis);
    const LinearCode& parent() const { return *parent_; }
    const Mat& basis() const { return basis_; }
    int dimension() const { return static_cast<int>(basis_.rows()); }

    Mask support() const;       // union of the basis rows' supports
    int weight() const;         // |support()|

  private:
    const LinearCode* parent_;
    Mat basis_;
};

// Visits every dim-dimensional subcode exactly once, each with its canonical
// RREF basis: RREF dim x k coefficient matrices are enumerated by pivot
// profile and pushed through the generator (the product is again RREF).
// Throws EnumerationTooLarge once more than max_count subcodes are visited.
void for_each_subcode(const LinearCode& c, int dim,
                      const std::function<void(const Subcode&)>& fn,
                      std::uint64_t max_count = kDefaultEnumCap);

std::vector<Subcode> enumerate_subcodes(const LinearCode& c, int dim,
                                        std::uint64_t max_count = kDefaultEnumCap);

// Exhaustive hierarchy via subcode enumeration. ZeroDimensionalCode if k = 0.
WeightHierarchy weight_hierarchy(const LinearCode& c,
                                 std::uint64_t max_count = kDefaultEnumCap);

// Hierarchy implied by d_s at level s for a constant weight code:
// d_t = d_s (q^k - q^(k-t)) / (q^k - q^(k-s)). NonIntegralHierarchy when some
// d_t is not an integer (then no constant weight code has that d_s).
WeightHierarchy predicted_hierarchy_from_level(long long d_s, int s, int k, long long q);

// Is every nonzero codeword of the same weight d? Enumerates the q^k - 1
// nonzero codewords up to scalars; nullopt when weights differ.
std::optional<long long> check_constant_weight_direct(const LinearCode& c,
                                                      std::uint64_t max_count = kDefaultEnumCap);

// Detector from the hierarchy alone: if d_k = (q^k - 1) / (q^(k-i) (q^i - 1)) * d_i
// for some i in 1..k-1, the code is constant weight of weight
// d_k * q^(k-1) (q-1) / (q^k - 1); nullopt when no level matches. Requires
// k >= 2 (with only d_1 there is no proper level to test).
std::optional<long long> check_constant_weight_from_hierarchy(const WeightHierarchy& w,
                                                              long long q);

// Detector from the first-weight pattern: d_i = d_1 (q^i - 1) / (q^(i-1) (q - 1))
// for all i implies constant weight d_1; nullopt when the pattern fails.
std::optional<long long> check_constant_weight_from_first(const WeightHierarchy& w,
                                                          long long q);

// Sum_{i=0}^{k-1} ceil(d / q^i), the Griesmer lower bound on n.
long long griesmer_bound(long long d, int k, long long q);

// Generator of the k-dimensional q-ary simplex code, each projective point
// column repeated `replicate` times. Columns are the normalized points
// (first nonzero coordinate = 1) in lexicographic order. n <= 64.
LinearCode simplex_code(unsigned q, int k, int replicate = 1);

} // namespace codebetti
