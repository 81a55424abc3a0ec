#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "codebetti/matroid.hpp"

namespace codebetti {

// A simplicial complex on {1..n} given by its face predicate. The predicate
// must be downward closed; the named constructors guarantee it.
class SimplicialComplexView {
  public:
    SimplicialComplexView(int ground_size, std::function<bool(Mask)> is_face);

    // Independence complex of a matroid (the complex the Stanley-Reisner
    // ring of a code is built on).
    static SimplicialComplexView independence_complex(const Matroid& m);
    static SimplicialComplexView full_simplex(int ground_size);
    static SimplicialComplexView irrelevant_complex(int ground_size); // {{}} only
    static SimplicialComplexView void_complex(int ground_size);       // no faces at all

    int ground_size() const { return n_; }
    bool is_face(Mask sigma) const { return is_face_(sigma); }

  private:
    int n_;
    std::function<bool(Mask)> is_face_;
};

// dim_K of the reduced simplicial homology H~_j(cx; K) over the given
// coefficient field, computed from ranks of the two boundary maps adjacent
// to dimension j; only faces of the three relevant dimensions are listed.
// Conventions: H~_(-1) of the complex {{}} is 1-dimensional; every homology
// group of the void complex is 0. Valid for -1 <= j <= ground_size - 1.
int reduced_homology_dim(const SimplicialComplexView& cx, int j, const FieldPtr& coeff);

// Hochster's formula for the Stanley-Reisner ring of the independence
// complex: beta_{i,sigma} = dim H~_(|sigma|-i-1)(restriction to sigma; K).
// beta_{0,{}} = 1 by convention. Coefficient-field independent for matroids;
// the coeff argument exists so independence can be *tested*, not assumed.
long long hochster_betti(const Matroid& m, int i, Mask sigma, const FieldPtr& coeff);

// The N^n-graded Betti table of a matroid: entries (i, sigma) -> beta_{i,sigma}
// for 0 <= i <= deficit, with the degree-0 entry (0, {}) -> 1. Nonzero entries
// for i >= 1 live only on the minimal nullity sets N_i, so only those are
// evaluated. Context (n, deficit, q of the column field) travels with it.
class BettiTable {
  public:
    BettiTable(int n, int deficit, unsigned q,
               std::map<std::pair<int, Mask>, long long> entries);

    int n() const { return n_; }
    int deficit() const { return deficit_; }   // homological length of the table
    unsigned field_order() const { return q_; }

    // Nonzero entries only, keyed (homological degree, support set).
    const std::map<std::pair<int, Mask>, long long>& entries() const { return entries_; }
    long long at(int i, Mask sigma) const; // 0 when absent

    bool operator==(const BettiTable& o) const;

  private:
    int n_, deficit_;
    unsigned q_;
    std::map<std::pair<int, Mask>, long long> entries_;
};

BettiTable betti_table(const Matroid& m, const FieldPtr& coeff,
                       int max_n = kDefaultGroundCap);

// Projections: N-graded beta_{i,d} = sum over |sigma| = d, and ungraded
// beta_i = sum over all sigma. Both include the degree-0 entry.
std::map<std::pair<int, int>, long long> project_n_graded(const BettiTable& t);
std::map<int, long long> project_ungraded(const BettiTable& t);

// Gaussian binomial [k choose i]_q, exact; OutOfRange if the value (or an
// intermediate) exceeds the int64 range.
long long gauss_binomial(int k, int i, long long q);

// Sum_{i=0}^{k-1} (-1)^(k+i-1) [k choose i]_q q^(i(i-1)/2)  -  q^(k(k-1)/2),
// which the alternating-sum identity says is 0 for every k >= 1, q >= 2.
// k = 0 is accepted and honestly yields -1 (the identity needs one factor).
long long gauss_identity_residual(int k, long long q);

struct TwistTerm {
    long long degree;       // d in S(-d)
    long long multiplicity; // exponent b in S(-d)^b
    bool operator==(const TwistTerm& o) const {
        return degree == o.degree && multiplicity == o.multiplicity;
    }
};

// Shape of a graded minimal free resolution 0 <- R <- S <- F_1 <- ... <- F_L <- 0,
// F_i = (+)_d S(-d)^(beta_{i,d}); terms per homological degree sorted by twist.
class ResolutionSummary {
  public:
    ResolutionSummary(std::vector<std::vector<TwistTerm>> steps, bool pure, bool linear);

    static ResolutionSummary from_n_graded(const std::map<std::pair<int, int>, long long>& graded);
    static ResolutionSummary from_betti_table(const BettiTable& t);

    int length() const { return static_cast<int>(steps_.size()); }
    const std::vector<TwistTerm>& step(int i) const; // 1-based homological degree
    const std::vector<std::vector<TwistTerm>>& steps() const { return steps_; }

    bool pure() const { return pure_; }     // one twist per homological degree
    bool linear() const { return linear_; } // pure with all twist steps equal 1

    // "0 <- R(C) <- S <- S(-2)^1 (+) S(-3)^2 <- S(-4)^2 <- 0"; multiplicity
    // exponent always printed, terms in ascending twist order.
    std::string to_string() const;

    bool operator==(const ResolutionSummary& o) const;

  private:
    std::vector<std::vector<TwistTerm>> steps_; // steps_[i-1] = degree i
    bool pure_, linear_;
};

// The closed-form resolution of a constant weight code of weight d, dimension
// k >= 1 over GF(q): pure with twists d_i = d (q^i - 1)/(q^(i-1) (q - 1)) and
// multiplicities [k choose i]_q q^(i(i-1)/2). NonIntegralDegree if some twist
// is not an integer. The linear flag is set for k = 1 (single-step case).
ResolutionSummary constant_weight_resolution(int k, long long q, long long d);

// Reads a constant-weight verdict off the first column of a Betti table:
// all degree-1 supports of one size d and total multiplicity [k choose 1]_q
// means every nonzero codeword has weight d. nullopt when the pattern fails.
std::optional<long long> constant_weight_from_first_betti(const BettiTable& t,
                                                          int k, long long q);

// Sum_{i=0}^{L} (-1)^i beta_i for a *pure* table whose top twist equals
// top_degree (Precondition otherwise; ImpureTable if some degree has two
// twists). Zero exactly when the alternating-sum identity holds.
long long alternating_betti_sum(const BettiTable& t, long long top_degree);

} // namespace codebetti
