#include "codebetti/code.hpp"

#include <algorithm>

#include "checked128.hpp"

namespace codebetti {

using detail::u128;

std::string to_string(const WeightHierarchy& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.d.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(w.d[i]);
    }
    return out + ")";
}

LinearCode::LinearCode(Mat gen, Mat par, int n, int k)
    : gen_(std::move(gen)), par_(std::move(par)), n_(n), k_(k) {
    // G H^T = 0 is the structural invariant everything downstream leans on
    if (!is_zero(matmul(gen_, transpose(par_))))
        fail(ErrorKind::Precondition, "generator and parity check are inconsistent");
}

namespace {

Mat top_rows(const Mat& m, std::size_t count) {
    Mat out(m.field(), count, m.cols());
    for (std::size_t r = 0; r < count; ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out.set(r, c, m(r, c));
    return out;
}

void check_length(std::size_t cols) {
    if (cols < 1) fail(ErrorKind::DimensionMismatch, "code length must be at least 1");
    if (cols > 64) fail(ErrorKind::TooLarge, "code length exceeds 64");
}

} // namespace

LinearCode LinearCode::from_generator(const Mat& g) {
    check_length(g.cols());
    auto rr = rref(g);
    std::size_t k = rr.pivots.size();
    Mat gen = top_rows(rr.mat, k); // canonical: RREF with zero rows dropped
    Mat par = kernel_basis(gen);
    return LinearCode(std::move(gen), std::move(par), static_cast<int>(g.cols()),
                      static_cast<int>(k));
}

LinearCode LinearCode::from_parity_check(const Mat& h) {
    check_length(h.cols());
    auto rh = rref(h);
    std::size_t r = rh.pivots.size();
    Mat par = top_rows(rh.mat, r);
    Mat gen = kernel_basis(par);
    return LinearCode(std::move(gen), std::move(par), static_cast<int>(h.cols()),
                      static_cast<int>(h.cols() - r));
}

LinearCode LinearCode::from_generator(FieldPtr field,
                                      const std::vector<std::vector<unsigned>>& rows) {
    return from_generator(Mat::from_rows(std::move(field), rows));
}

LinearCode LinearCode::from_parity_check(FieldPtr field,
                                         const std::vector<std::vector<unsigned>>& rows) {
    return from_parity_check(Mat::from_rows(std::move(field), rows));
}

namespace {
Mask rows_support(const Mat& m) {
    Mask s = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) != 0) s |= Mask{1} << c;
    return s;
}
} // namespace

Mask LinearCode::support() const { return rows_support(gen_); }
Mask LinearCode::zero_coordinates() const { return subset_full(n_) & ~support(); }

Subcode::Subcode(const LinearCode* parent, Mat basis) : parent_(parent), basis_(std::move(basis)) {
    if (!parent_) fail(ErrorKind::Precondition, "subcode needs a parent code");
}

Mask Subcode::support() const { return rows_support(basis_); }
int Subcode::weight() const { return subset_size(support()); }

namespace {

// Number of dim-dimensional subspaces of GF(q)^k, saturating at `sat`.
// Pascal-type recurrence on the Gaussian binomial, kept local so the
// enumeration guard needs nothing from the resolution layer.
u128 subspace_count_sat(int k, int dim, unsigned q, u128 sat) {
    std::vector<u128> qpow(static_cast<std::size_t>(dim) + 1, 1); // q^j saturated
    for (int j = 1; j <= dim; ++j)
        qpow[static_cast<std::size_t>(j)] =
            detail::sat_mul(qpow[static_cast<std::size_t>(j - 1)], static_cast<u128>(q), sat);
    std::vector<u128> row(static_cast<std::size_t>(dim) + 1, 0);
    row[0] = 1;
    for (int kk = 1; kk <= k; ++kk)
        for (int j = std::min(dim, kk); j >= 1; --j)
            // [kk j] = [kk-1 j-1] + q^j [kk-1 j]
            row[static_cast<std::size_t>(j)] = detail::sat_add(
                row[static_cast<std::size_t>(j - 1)],
                detail::sat_mul(qpow[static_cast<std::size_t>(j)], row[static_cast<std::size_t>(j)],
                                sat),
                sat);
    return row[dim];
}

} // namespace

void for_each_subcode(const LinearCode& c, int dim,
                      const std::function<void(const Subcode&)>& fn, std::uint64_t max_count) {
    const int k = c.dimension();
    const int n = c.length();
    if (dim < 0 || dim > k)
        fail(ErrorKind::DimOutOfRange,
             "subcode dimension " + std::to_string(dim) + " outside 0.." + std::to_string(k));
    const Field& f = *c.field();
    const unsigned q = f.order();

    if (subspace_count_sat(k, dim, q, static_cast<u128>(max_count) + 1) > max_count)
        fail(ErrorKind::EnumerationTooLarge,
             "more than " + std::to_string(max_count) + " subcodes of dimension " +
                 std::to_string(dim));

    if (dim == 0) {
        fn(Subcode(&c, Mat(c.field(), 0, static_cast<std::size_t>(n))));
        return;
    }

    const Mat& g = c.generator();
    std::vector<std::vector<unsigned>> grows = g.to_rows();

    // RREF dim x k coefficient matrices, enumerated by pivot profile; the
    // product with the (already RREF) generator is the subcode's canonical
    // RREF basis.
    for_each_combination(k, dim, [&](Mask profile) {
        std::vector<int> piv = subset_elements(profile); // 1-based positions in 1..k
        std::vector<std::pair<int, int>> free_pos;       // 0-based (row, col)
        for (int r = 0; r < dim; ++r)
            for (int col = piv[static_cast<std::size_t>(r)]; col < k; ++col)
                if (!subset_contains(profile, col + 1))
                    free_pos.emplace_back(r, col);

        std::vector<unsigned> digits(free_pos.size(), 0);
        std::vector<std::vector<unsigned>> m(static_cast<std::size_t>(dim),
                                             std::vector<unsigned>(static_cast<std::size_t>(k), 0));
        for (int r = 0; r < dim; ++r)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(piv[static_cast<std::size_t>(r)] - 1)] = 1;

        while (true) {
            for (std::size_t i = 0; i < free_pos.size(); ++i)
                m[static_cast<std::size_t>(free_pos[i].first)]
                 [static_cast<std::size_t>(free_pos[i].second)] = digits[i];

            std::vector<std::vector<unsigned>> basis(
                static_cast<std::size_t>(dim), std::vector<unsigned>(static_cast<std::size_t>(n), 0));
            for (int r = 0; r < dim; ++r)
                for (int j = 0; j < k; ++j) {
                    unsigned coef = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                    if (coef == 0) continue;
                    auto& out = basis[static_cast<std::size_t>(r)];
                    auto& src = grows[static_cast<std::size_t>(j)];
                    for (int col = 0; col < n; ++col)
                        out[static_cast<std::size_t>(col)] =
                            f.add(out[static_cast<std::size_t>(col)],
                                  f.mul(coef, src[static_cast<std::size_t>(col)]));
                }
            fn(Subcode(&c, Mat::from_rows(c.field(), basis, static_cast<std::size_t>(n))));

            // odometer over the free entries
            std::size_t pos = 0;
            while (pos < digits.size()) {
                if (++digits[pos] < q) break;
                digits[pos] = 0;
                ++pos;
            }
            if (pos == digits.size()) break;
        }
    });
}

std::vector<Subcode> enumerate_subcodes(const LinearCode& c, int dim, std::uint64_t max_count) {
    std::vector<Subcode> out;
    for_each_subcode(c, dim, [&](const Subcode& s) { out.push_back(s); }, max_count);
    return out;
}

WeightHierarchy weight_hierarchy(const LinearCode& c, std::uint64_t max_count) {
    const int k = c.dimension();
    if (k == 0) fail(ErrorKind::ZeroDimensionalCode, "weight hierarchy needs k >= 1");
    WeightHierarchy w;
    w.d.reserve(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        int best = c.length() + 1;
        for_each_subcode(
            c, i, [&](const Subcode& s) { best = std::min(best, s.weight()); }, max_count);
        w.d.push_back(best);
    }
    return w;
}

WeightHierarchy predicted_hierarchy_from_level(long long d_s, int s, int k, long long q) {
    if (k < 1) fail(ErrorKind::Precondition, "k must be at least 1");
    // the hypothesis lives at a proper level s < k, except in the trivial
    // one-dimensional case where s = k = 1 is the only level there is
    if (s < 1 || (s > k - 1 && !(k == 1 && s == 1)))
        fail(ErrorKind::Precondition, "level s must be in 1..k-1");
    if (d_s < 1) fail(ErrorKind::Precondition, "d_s must be positive");
    if (q < 2) fail(ErrorKind::Precondition, "q must be at least 2");
    const u128 qk = detail::checked_pow(static_cast<u128>(q), static_cast<unsigned long long>(k));
    const u128 den = qk - detail::checked_pow(static_cast<u128>(q),
                                              static_cast<unsigned long long>(k - s));
    WeightHierarchy w;
    for (int t = 1; t <= k; ++t) {
        u128 num = detail::checked_mul(
            static_cast<u128>(d_s),
            qk - detail::checked_pow(static_cast<u128>(q), static_cast<unsigned long long>(k - t)));
        if (num % den != 0)
            fail(ErrorKind::NonIntegralHierarchy,
                 "d_" + std::to_string(t) + " is not an integer for d_" + std::to_string(s) + " = " +
                     std::to_string(d_s));
        w.d.push_back(detail::to_int64(num / den));
    }
    return w;
}

std::optional<long long> check_constant_weight_direct(const LinearCode& c,
                                                      std::uint64_t max_count) {
    if (c.dimension() == 0)
        fail(ErrorKind::ZeroDimensionalCode, "constant weight check needs k >= 1");
    // 1-dim subcodes = nonzero codewords up to scalars; scaling preserves weight
    std::optional<long long> weight;
    bool constant = true;
    for_each_subcode(
        c, 1,
        [&](const Subcode& s) {
            long long w = s.weight();
            if (!weight) weight = w;
            else if (*weight != w) constant = false;
        },
        max_count);
    if (!constant) return std::nullopt;
    return weight;
}

std::optional<long long> check_constant_weight_from_hierarchy(const WeightHierarchy& w,
                                                              long long q) {
    const int k = w.dimension();
    if (k < 2) fail(ErrorKind::Precondition, "hierarchy must have length at least 2");
    if (q < 2) fail(ErrorKind::Precondition, "q must be at least 2");
    const u128 qk = detail::checked_pow(static_cast<u128>(q), static_cast<unsigned long long>(k));
    const u128 dk = static_cast<u128>(w.d.back());
    // d_k (q^k - 1) / (q^(k-i) (q^i - 1)) = d_i at a single level i < k is
    // already enough to force constant weight.
    bool hit = false;
    for (int i = 1; i < k && !hit; ++i) {
        u128 qi = detail::checked_pow(static_cast<u128>(q), static_cast<unsigned long long>(i));
        u128 qki = detail::checked_pow(static_cast<u128>(q), static_cast<unsigned long long>(k - i));
        u128 lhs = detail::checked_mul(dk, detail::checked_mul(qki, qi - 1));
        u128 rhs = detail::checked_mul(static_cast<u128>(w.d[static_cast<std::size_t>(i - 1)]),
                                       qk - 1);
        hit = lhs == rhs;
    }
    if (!hit) return std::nullopt;
    u128 num = detail::checked_mul(
        dk, detail::checked_mul(detail::checked_pow(static_cast<u128>(q),
                                                    static_cast<unsigned long long>(k - 1)),
                                static_cast<u128>(q - 1)));
    if (num % (qk - 1) != 0) return std::nullopt;
    return detail::to_int64(num / (qk - 1));
}

std::optional<long long> check_constant_weight_from_first(const WeightHierarchy& w, long long q) {
    const int k = w.dimension();
    if (k < 1) fail(ErrorKind::Precondition, "hierarchy must be nonempty");
    if (q < 2) fail(ErrorKind::Precondition, "q must be at least 2");
    const u128 d1 = static_cast<u128>(w.d.front());
    // d_i q^(i-1) (q - 1) = d_1 (q^i - 1) for every i
    for (int i = 1; i <= k; ++i) {
        u128 qi1 = detail::checked_pow(static_cast<u128>(q), static_cast<unsigned long long>(i - 1));
        u128 lhs = detail::checked_mul(static_cast<u128>(w.d[static_cast<std::size_t>(i - 1)]),
                                       detail::checked_mul(qi1, static_cast<u128>(q - 1)));
        u128 rhs = detail::checked_mul(d1, detail::checked_mul(qi1, static_cast<u128>(q)) - 1);
        if (lhs != rhs) return std::nullopt;
    }
    return detail::to_int64(d1);
}

long long griesmer_bound(long long d, int k, long long q) {
    if (d < 1) fail(ErrorKind::Precondition, "d must be positive");
    if (k < 1) fail(ErrorKind::Precondition, "k must be at least 1");
    if (q < 2) fail(ErrorKind::Precondition, "q must be at least 2");
    u128 sum = 0, pw = 1;
    for (int i = 0; i < k; ++i) {
        if (pw >= static_cast<u128>(d)) {
            sum = detail::checked_add(sum, static_cast<u128>(k - i)); // remaining terms are all 1
            break;
        }
        sum = detail::checked_add(sum, (static_cast<u128>(d) + pw - 1) / pw);
        pw = detail::checked_mul(pw, static_cast<u128>(q));
    }
    return detail::to_int64(sum);
}

LinearCode simplex_code(unsigned q, int k, int replicate) {
    FieldPtr f = Field::of_order(q);
    if (k < 1) fail(ErrorKind::DimOutOfRange, "simplex code needs k >= 1");
    if (replicate < 1) fail(ErrorKind::Precondition, "replicate must be at least 1");
    const u128 points = (detail::checked_pow(static_cast<u128>(q),
                                             static_cast<unsigned long long>(k)) -
                         1) /
                        (q - 1);
    const u128 n128 = detail::checked_mul(points, static_cast<u128>(replicate));
    if (n128 > 64)
        fail(ErrorKind::TooLarge, "simplex code length " + std::to_string((unsigned long long)n128) +
                                      " exceeds 64");
    const int n = static_cast<int>(n128);

    // normalized projective points (first nonzero coordinate = 1), coordinate
    // tuples in ascending lexicographic order
    std::vector<std::vector<unsigned>> g(static_cast<std::size_t>(k),
                                         std::vector<unsigned>(static_cast<std::size_t>(n), 0));
    int col = 0;
    u128 total = detail::checked_pow(static_cast<u128>(q), static_cast<unsigned long long>(k));
    for (u128 v = 1; v < total; ++v) {
        // digits, most significant first = coordinate 1
        std::vector<unsigned> coord(static_cast<std::size_t>(k));
        u128 rest = v;
        for (int i = k; i-- > 0;) {
            coord[static_cast<std::size_t>(i)] = static_cast<unsigned>(rest % q);
            rest /= q;
        }
        unsigned first = 0;
        for (int i = 0; i < k; ++i)
            if (coord[static_cast<std::size_t>(i)] != 0) {
                first = coord[static_cast<std::size_t>(i)];
                break;
            }
        if (first != 1) continue;
        for (int rep = 0; rep < replicate; ++rep, ++col)
            for (int r = 0; r < k; ++r)
                g[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] =
                    coord[static_cast<std::size_t>(r)];
    }
    return LinearCode::from_generator(f, g);
}

} // namespace codebetti
