#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "codebetti/errors.hpp"

namespace codebetti {

class Field;
class FieldElem;
using FieldPtr = std::shared_ptr<const Field>;

// GF(p^m), q <= 65536. Elements are the integers 0..q-1; for m > 1 the value
// encodes a polynomial in base p, low coefficient in the least significant
// digit. Construction is deterministic: the reduction polynomial is the
// lexicographically smallest monic irreducible of degree m over GF(p), the
// coefficient list compared low-degree first. Instances are immutable and
// safe to share across threads.
class Field {
  public:
    // Deterministic factory; instances for the same q are cached and shared.
    static FieldPtr of_order(unsigned q);

    unsigned order() const { return q_; }
    unsigned characteristic() const { return p_; }
    unsigned degree() const { return m_; }

    // Coefficients c_0..c_m of the reduction polynomial, low degree first,
    // c_m = 1. Empty for prime fields (m == 1).
    const std::vector<unsigned>& reduction_polynomial() const { return reduction_; }

    // Arithmetic on raw values 0..q-1. Arguments are validated.
    unsigned add(unsigned a, unsigned b) const;
    unsigned sub(unsigned a, unsigned b) const;
    unsigned neg(unsigned a) const;
    unsigned mul(unsigned a, unsigned b) const;
    unsigned inv(unsigned a) const;           // DivisionByZero for a = 0
    unsigned div(unsigned a, unsigned b) const;
    unsigned pow(unsigned a, std::uint64_t e) const; // 0^0 = 1

    FieldElem elem(unsigned value) const; // ValueOutOfField if value >= q
    FieldElem zero() const;
    FieldElem one() const;

    // Fields are equal iff their orders are (construction is deterministic).
    bool same(const Field& other) const { return q_ == other.q_; }

    static constexpr unsigned max_order = 65536;

  private:
    Field(unsigned p, unsigned m, unsigned q);
    void check_value(unsigned v) const;
    unsigned mul_nocheck(unsigned a, unsigned b) const;

    unsigned p_, m_, q_;
    std::vector<unsigned> reduction_;  // empty when m == 1
    std::vector<unsigned> add_table_;  // q*q, only when q <= table_cap
    std::vector<unsigned> mul_table_;  // q*q, only when q <= table_cap
    std::vector<unsigned> inv_table_;  // q,   only when q <= table_cap
    static constexpr unsigned table_cap = 256;
};

// Value + field pair for expression-style arithmetic. Mixing elements of
// fields with different orders throws FieldMismatch.
class FieldElem {
  public:
    unsigned value() const { return value_; }
    const FieldPtr& field() const { return field_; }
    bool is_zero() const { return value_ == 0; }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inverse() const;
    FieldElem pow(std::uint64_t e) const;

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

  private:
    friend class Field;
    FieldElem(FieldPtr field, unsigned value) : field_(std::move(field)), value_(value) {}

    FieldPtr field_;
    unsigned value_;
};

} // namespace codebetti
