#include "codebetti/gf.hpp"

#include <map>
#include <mutex>

#include "codebetti/subset.hpp"

namespace codebetti {

namespace {

bool is_prime(unsigned x) {
    if (x < 2) return false;
    for (unsigned d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

// Decompose q = p^m with p prime; false if q is not a prime power.
bool prime_power(unsigned q, unsigned& p, unsigned& m) {
    if (q < 2) return false;
    unsigned base = q;
    for (unsigned d = 2; d * d <= q; ++d)
        if (q % d == 0) { base = d; break; }
    if (!is_prime(base)) return false;
    unsigned mm = 0, rest = q;
    while (rest % base == 0) { rest /= base; ++mm; }
    if (rest != 1) return false;
    p = base;
    m = mm;
    return true;
}

// Polynomials over GF(p) as coefficient vectors, low degree first.
using Poly = std::vector<unsigned>;

Poly poly_rem(Poly a, const Poly& b, unsigned p) {
    // b monic of degree db (b.back() == 1 assumed)
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        unsigned lead = a.back();
        if (lead != 0) {
            std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i) {
                unsigned sub = (unsigned)(((unsigned long long)lead * b[i]) % p);
                a[shift + i] = (a[shift + i] + p - sub) % p;
            }
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// Digits of v in base p, most significant digit first, fixed width.
void digits_msd(unsigned v, unsigned p, unsigned width, std::vector<unsigned>& out) {
    out.assign(width, 0);
    for (unsigned i = width; i-- > 0;) {
        out[i] = v % p;
        v /= p;
    }
}

// Lexicographically smallest monic irreducible of degree m over GF(p),
// coefficient lists (c_0, ..., c_(m-1)) compared low-degree first.
Poly smallest_irreducible(unsigned p, unsigned m) {
    std::vector<unsigned> c;
    unsigned long long total = 1;
    for (unsigned i = 0; i < m; ++i) total *= p;
    for (unsigned long long v = 0; v < total; ++v) {
        digits_msd((unsigned)v, p, m, c); // c[0] = c_0 is the most significant digit
        Poly cand(m + 1);
        for (unsigned i = 0; i < m; ++i) cand[i] = c[i];
        cand[m] = 1;
        bool reducible = false;
        // trial division by all monic polynomials of degree 1..m/2
        std::vector<unsigned> dg;
        for (unsigned dd = 1; !reducible && 2 * dd <= m; ++dd) {
            unsigned long long dtotal = 1;
            for (unsigned i = 0; i < dd; ++i) dtotal *= p;
            for (unsigned long long dv = 0; dv < dtotal && !reducible; ++dv) {
                digits_msd((unsigned)dv, p, dd, dg);
                Poly div(dd + 1);
                for (unsigned i = 0; i < dd; ++i) div[i] = dg[dd - 1 - i];
                div[dd] = 1;
                if (poly_rem(cand, div, p).empty()) reducible = true;
            }
        }
        if (!reducible) return cand;
    }
    fail(ErrorKind::Precondition, "no irreducible polynomial found"); // unreachable
}

} // namespace

Field::Field(unsigned p, unsigned m, unsigned q) : p_(p), m_(m), q_(q) {
    if (m_ > 1) reduction_ = smallest_irreducible(p_, m_);
    if (q_ <= table_cap) {
        add_table_.resize((std::size_t)q_ * q_);
        mul_table_.resize((std::size_t)q_ * q_);
        inv_table_.assign(q_, 0);
        // fill via the table-free paths, then flip the tables on
        for (unsigned a = 0; a < q_; ++a)
            for (unsigned b = 0; b < q_; ++b) {
                unsigned s, t;
                if (m_ == 1) {
                    s = (a + b) % p_;
                    t = (unsigned)(((unsigned long long)a * b) % p_);
                } else {
                    // coefficient-wise sum and polynomial product mod reduction
                    unsigned av = a, bv = b;
                    s = 0;
                    unsigned mult = 1;
                    for (unsigned i = 0; i < m_; ++i) {
                        s += ((av % p_ + bv % p_) % p_) * mult;
                        av /= p_;
                        bv /= p_;
                        mult *= p_;
                    }
                    t = mul_nocheck(a, b);
                }
                add_table_[(std::size_t)a * q_ + b] = s;
                mul_table_[(std::size_t)a * q_ + b] = t;
                if (t == 1) { inv_table_[a] = b; }
            }
    }
}

// Polynomial product of the two base-p encoded values, reduced. Used both to
// build the tables and directly for large extension fields.
unsigned Field::mul_nocheck(unsigned a, unsigned b) const {
    if (m_ == 1) return (unsigned)(((unsigned long long)a * b) % p_);
    Poly pa, pb;
    for (unsigned v = a; v != 0; v /= p_) pa.push_back(v % p_);
    for (unsigned v = b; v != 0; v /= p_) pb.push_back(v % p_);
    if (pa.empty() || pb.empty()) return 0;
    Poly prod(pa.size() + pb.size() - 1, 0);
    for (std::size_t i = 0; i < pa.size(); ++i)
        for (std::size_t j = 0; j < pb.size(); ++j)
            prod[i + j] = (unsigned)((prod[i + j] + (unsigned long long)pa[i] * pb[j]) % p_);
    Poly r = poly_rem(std::move(prod), reduction_, p_);
    unsigned out = 0, mult = 1;
    for (std::size_t i = 0; i < r.size(); ++i) {
        out += r[i] * mult;
        mult *= p_;
    }
    return out;
}

FieldPtr Field::of_order(unsigned q) {
    unsigned p = 0, m = 0;
    if (!prime_power(q, p, m))
        fail(ErrorKind::NotAPrimePower, "field order " + std::to_string(q) + " is not a prime power");
    if (q > max_order)
        fail(ErrorKind::TooLarge, "field order " + std::to_string(q) + " exceeds " +
                                      std::to_string(max_order));
    static std::mutex mu;
    static std::map<unsigned, std::weak_ptr<const Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(q); it != cache.end())
        if (auto sp = it->second.lock()) return sp;
    FieldPtr f(new Field(p, m, q));
    cache[q] = f;
    return f;
}

void Field::check_value(unsigned v) const {
    if (v >= q_)
        fail(ErrorKind::ValueOutOfField,
             "value " + std::to_string(v) + " not in GF(" + std::to_string(q_) + ")");
}

unsigned Field::add(unsigned a, unsigned b) const {
    check_value(a);
    check_value(b);
    if (!add_table_.empty()) return add_table_[(std::size_t)a * q_ + b];
    if (m_ == 1) return (a + b) % p_;
    unsigned s = 0, mult = 1, av = a, bv = b;
    for (unsigned i = 0; i < m_; ++i) {
        s += ((av % p_ + bv % p_) % p_) * mult;
        av /= p_;
        bv /= p_;
        mult *= p_;
    }
    return s;
}

unsigned Field::neg(unsigned a) const {
    check_value(a);
    if (m_ == 1) return (p_ - a) % p_;
    unsigned s = 0, mult = 1, av = a;
    for (unsigned i = 0; i < m_; ++i) {
        s += ((p_ - av % p_) % p_) * mult;
        av /= p_;
        mult *= p_;
    }
    return s;
}

unsigned Field::sub(unsigned a, unsigned b) const { return add(a, neg(b)); }

unsigned Field::mul(unsigned a, unsigned b) const {
    check_value(a);
    check_value(b);
    if (!mul_table_.empty()) return mul_table_[(std::size_t)a * q_ + b];
    return mul_nocheck(a, b);
}

unsigned Field::pow(unsigned a, std::uint64_t e) const {
    check_value(a);
    unsigned base = a, out = 1;
    while (e != 0) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

unsigned Field::inv(unsigned a) const {
    check_value(a);
    if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in GF(" + std::to_string(q_) + ")");
    if (!inv_table_.empty()) return inv_table_[a];
    return pow(a, q_ - 2); // multiplicative group has order q - 1
}

unsigned Field::div(unsigned a, unsigned b) const { return mul(a, inv(b)); }

FieldElem Field::elem(unsigned value) const {
    check_value(value);
    return FieldElem(of_order(q_), value);
}

FieldElem Field::zero() const { return FieldElem(of_order(q_), 0); }
FieldElem Field::one() const { return FieldElem(of_order(q_), q_ > 1 ? 1 : 0); }

namespace {
void require_same(const FieldElem& a, const FieldElem& b) {
    if (a.field()->order() != b.field()->order())
        fail(ErrorKind::FieldMismatch,
             "GF(" + std::to_string(a.field()->order()) + ") vs GF(" +
                 std::to_string(b.field()->order()) + ")");
}
} // namespace

FieldElem FieldElem::operator+(const FieldElem& o) const {
    require_same(*this, o);
    return FieldElem(field_, field_->add(value_, o.value_));
}
FieldElem FieldElem::operator-(const FieldElem& o) const {
    require_same(*this, o);
    return FieldElem(field_, field_->sub(value_, o.value_));
}
FieldElem FieldElem::operator*(const FieldElem& o) const {
    require_same(*this, o);
    return FieldElem(field_, field_->mul(value_, o.value_));
}
FieldElem FieldElem::operator/(const FieldElem& o) const {
    require_same(*this, o);
    return FieldElem(field_, field_->div(value_, o.value_));
}
FieldElem FieldElem::operator-() const { return FieldElem(field_, field_->neg(value_)); }
FieldElem FieldElem::inverse() const { return FieldElem(field_, field_->inv(value_)); }
FieldElem FieldElem::pow(std::uint64_t e) const { return FieldElem(field_, field_->pow(value_, e)); }

bool FieldElem::operator==(const FieldElem& o) const {
    require_same(*this, o);
    return value_ == o.value_;
}

} // namespace codebetti
