#pragma once

#include <memory>
#include <vector>

#include "codebetti/code.hpp"
#include "codebetti/matrix.hpp"

namespace codebetti {

// Hard cap on the matroid ground set for the exponential enumerations
// (circuits, bases, minimal nullity sets). Calls taking max_n may raise it.
inline constexpr int kDefaultGroundCap = 24;

// Vector matroid on the columns of a matrix, the lens through which the
// Stanley-Reisner machinery sees a code: for a parity-check matrix H of C,
// rank(sigma) is the column rank and nullity(sigma) = |sigma| - rank(sigma)
// equals dim{c in C : Supp(c) subseteq sigma}. All listings are sorted in
// subset_lex_less order. Immutable except the internal circuit cache; safe
// for concurrent reads.
class Matroid {
  public:
    explicit Matroid(const Mat& columns);
    static Matroid from_parity_check(const Mat& h) { return Matroid(h); }
    static Matroid of_code(const LinearCode& c) { return Matroid(c.parity_check()); }

    int ground_size() const { return n_; }
    int rank() const { return rank_; }          // rank of the full ground set
    int deficit() const { return n_ - rank_; }  // nullity of the full ground set
    const Mat& columns() const { return cols_; }

    int rank(Mask sigma) const;     // IndexOutOfRange if sigma exceeds the ground set
    int nullity(Mask sigma) const { return subset_size(sigma) - rank(sigma); }
    bool is_independent(Mask sigma) const { return rank(sigma) == subset_size(sigma); }

    // Minimal dependent sets; equivalently the minimal codeword supports of
    // the kernel code. Computed once and cached.
    const std::vector<Mask>& circuits(int max_n = kDefaultGroundCap) const;

    // Maximal independent sets (all of size rank()).
    std::vector<Mask> bases(int max_n = kDefaultGroundCap) const;

    Mask loops() const;     // elements of rank 0 (zero columns)
    Mask isthmuses() const; // elements in every basis (= zero coordinates of the code)

    // N_i: the inclusion-minimal sets of nullity exactly i, 0 <= i <= deficit.
    // N_0 = {{}}; N_i for i >= 1 is generated as unions of i non-redundant
    // circuits, then filtered by the exact local test
    //   nullity(sigma) = i  and  nullity(sigma \ {x}) = i - 1 for every x.
    std::vector<Mask> minimal_nullity_sets(int i, int max_n = kDefaultGroundCap) const;

    // Weight hierarchy read off the matroid: d_i = min{|sigma| : sigma in N_i}.
    // FreeMatroid when deficit() = 0 (the hierarchy is empty/undefined).
    WeightHierarchy weights(int max_n = kDefaultGroundCap) const;

    // Restriction to sigma; ground elements are renumbered 1..|sigma| in
    // increasing order of the original elements.
    Matroid restriction(Mask sigma) const;

  private:
    void check_subset(Mask sigma) const;

    Mat cols_;
    int n_, rank_;
    struct Cache;
    std::shared_ptr<Cache> cache_;
};

} // namespace codebetti
