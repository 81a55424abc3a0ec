#include "codebetti/resolution.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "checked128.hpp"

namespace codebetti {

using detail::u128;

SimplicialComplexView::SimplicialComplexView(int ground_size, std::function<bool(Mask)> is_face)
    : n_(ground_size), is_face_(std::move(is_face)) {
    if (n_ < 0 || n_ > 64) fail(ErrorKind::IndexOutOfRange, "ground set size out of range");
    if (!is_face_) fail(ErrorKind::Precondition, "face predicate required");
}

SimplicialComplexView SimplicialComplexView::independence_complex(const Matroid& m) {
    return SimplicialComplexView(m.ground_size(),
                                 [m](Mask sigma) { return m.is_independent(sigma); });
}

SimplicialComplexView SimplicialComplexView::full_simplex(int ground_size) {
    return SimplicialComplexView(ground_size, [](Mask) { return true; });
}

SimplicialComplexView SimplicialComplexView::irrelevant_complex(int ground_size) {
    return SimplicialComplexView(ground_size, [](Mask sigma) { return sigma == 0; });
}

SimplicialComplexView SimplicialComplexView::void_complex(int ground_size) {
    return SimplicialComplexView(ground_size, [](Mask) { return false; });
}

namespace {

// faces with exactly `size` elements, in lex order
std::vector<Mask> faces_of_size(const SimplicialComplexView& cx, int size) {
    std::vector<Mask> out;
    if (size < 0 || size > cx.ground_size()) return out;
    for_each_combination(cx.ground_size(), size, [&](Mask sigma) {
        if (cx.is_face(sigma)) out.push_back(sigma);
    });
    return out;
}

// boundary map from size-t faces to size-(t-1) faces; the face removed at
// (0-based) position idx of the ascending element list gets sign (-1)^idx
Mat boundary_matrix(const std::vector<Mask>& from, const std::vector<Mask>& to,
                    const FieldPtr& coeff) {
    std::map<Mask, std::size_t> index;
    for (std::size_t i = 0; i < to.size(); ++i) index[to[i]] = i;
    const Field& f = *coeff;
    const unsigned minus_one = f.neg(1);
    Mat m(coeff, to.size(), from.size());
    for (std::size_t col = 0; col < from.size(); ++col) {
        Mask face = from[col];
        int idx = 0;
        for (Mask rest = face; rest; rest &= rest - 1, ++idx) {
            Mask low = rest & (~rest + 1);
            auto it = index.find(face & ~low);
            if (it == index.end())
                fail(ErrorKind::Precondition, "face predicate is not downward closed");
            m.set(it->second, col, idx % 2 == 0 ? 1u : minus_one);
        }
    }
    return m;
}

} // namespace

int reduced_homology_dim(const SimplicialComplexView& cx, int j, const FieldPtr& coeff) {
    const int n = cx.ground_size();
    if (n > kDefaultGroundCap)
        fail(ErrorKind::GroundSetTooLarge, "homology on more than " +
                                               std::to_string(kDefaultGroundCap) + " vertices");
    if (j < -1 || j > n - 1)
        fail(ErrorKind::Precondition,
             "homological dimension " + std::to_string(j) + " outside -1.." + std::to_string(n - 1));

    // only the three face sizes adjacent to dimension j are ever listed
    std::vector<Mask> chain = faces_of_size(cx, j + 1);
    if (chain.empty()) return 0; // covers the void complex in every dimension
    int rank_low = 0;
    if (j >= 0) {
        std::vector<Mask> below = faces_of_size(cx, j);
        rank_low = rank(boundary_matrix(chain, below, coeff));
    }
    // for j = -1 the chain group C_(-2) is zero: rank_low stays 0, giving
    // dim H~_(-1){{}} = 1
    std::vector<Mask> above = faces_of_size(cx, j + 2);
    int rank_high = above.empty() ? 0 : rank(boundary_matrix(above, chain, coeff));
    return static_cast<int>(chain.size()) - rank_low - rank_high;
}

long long hochster_betti(const Matroid& m, int i, Mask sigma, const FieldPtr& coeff) {
    if (i < 0) fail(ErrorKind::Precondition, "homological degree must be >= 0");
    if ((sigma & ~subset_full(m.ground_size())) != 0)
        fail(ErrorKind::IndexOutOfRange, "support set outside the ground set");
    if (i == 0) return sigma == 0 ? 1 : 0; // beta_{0,{}} = 1 by convention
    const int size = subset_size(sigma);
    const int j = size - i - 1;
    if (j < -1) return 0;
    Matroid restricted = m.restriction(sigma);
    SimplicialComplexView cx = SimplicialComplexView::independence_complex(restricted);
    return reduced_homology_dim(cx, j, coeff);
}

BettiTable::BettiTable(int n, int deficit, unsigned q,
                       std::map<std::pair<int, Mask>, long long> entries)
    : n_(n), deficit_(deficit), q_(q), entries_(std::move(entries)) {}

long long BettiTable::at(int i, Mask sigma) const {
    auto it = entries_.find({i, sigma});
    return it == entries_.end() ? 0 : it->second;
}

bool BettiTable::operator==(const BettiTable& o) const {
    return n_ == o.n_ && deficit_ == o.deficit_ && q_ == o.q_ && entries_ == o.entries_;
}

BettiTable betti_table(const Matroid& m, const FieldPtr& coeff, int max_n) {
    if (m.ground_size() > max_n)
        fail(ErrorKind::GroundSetTooLarge, "ground set of " + std::to_string(m.ground_size()) +
                                               " exceeds the cap of " + std::to_string(max_n));
    std::map<std::pair<int, Mask>, long long> entries;
    entries[{0, 0}] = 1;
    // nonzero entries in degree i live only on the minimal nullity-i sets
    for (int i = 1; i <= m.deficit(); ++i)
        for (Mask sigma : m.minimal_nullity_sets(i, max_n))
            if (long long v = hochster_betti(m, i, sigma, coeff); v != 0)
                entries[{i, sigma}] = v;
    return BettiTable(m.ground_size(), m.deficit(), m.columns().field()->order(),
                      std::move(entries));
}

std::map<std::pair<int, int>, long long> project_n_graded(const BettiTable& t) {
    std::map<std::pair<int, int>, long long> out;
    for (const auto& [key, v] : t.entries()) out[{key.first, subset_size(key.second)}] += v;
    return out;
}

std::map<int, long long> project_ungraded(const BettiTable& t) {
    std::map<int, long long> out;
    for (const auto& [key, v] : t.entries()) out[key.first] += v;
    return out;
}

long long gauss_binomial(int k, int i, long long q) {
    if (k < 0) fail(ErrorKind::Precondition, "k must be >= 0");
    if (q < 2) fail(ErrorKind::Precondition, "q must be at least 2");
    if (i < 0 || i > k) return 0;
    // Pascal-type recurrence [m j] = [m-1 j-1] + q^j [m-1 j], exact in 128 bits
    std::vector<u128> qpow(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j <= i; ++j)
        qpow[static_cast<std::size_t>(j)] =
            detail::checked_mul(qpow[static_cast<std::size_t>(j - 1)], static_cast<u128>(q));
    std::vector<u128> row(static_cast<std::size_t>(i) + 1, 0);
    row[0] = 1;
    for (int m = 1; m <= k; ++m)
        for (int j = std::min(i, m); j >= 1; --j)
            row[static_cast<std::size_t>(j)] = detail::checked_add(
                row[static_cast<std::size_t>(j - 1)],
                detail::checked_mul(qpow[static_cast<std::size_t>(j)],
                                    row[static_cast<std::size_t>(j)]));
    return detail::to_int64(row[static_cast<std::size_t>(i)]);
}

namespace {

// [k i]_q as u128 without the int64 narrowing, for identity sums
u128 gauss_binomial_u128(int k, int i, long long q) {
    std::vector<u128> qpow(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j <= i; ++j)
        qpow[static_cast<std::size_t>(j)] =
            detail::checked_mul(qpow[static_cast<std::size_t>(j - 1)], static_cast<u128>(q));
    std::vector<u128> row(static_cast<std::size_t>(i) + 1, 0);
    row[0] = 1;
    for (int m = 1; m <= k; ++m)
        for (int j = std::min(i, m); j >= 1; --j)
            row[static_cast<std::size_t>(j)] = detail::checked_add(
                row[static_cast<std::size_t>(j - 1)],
                detail::checked_mul(qpow[static_cast<std::size_t>(j)],
                                    row[static_cast<std::size_t>(j)]));
    return row[static_cast<std::size_t>(i)];
}

} // namespace

long long gauss_identity_residual(int k, long long q) {
    if (k < 0) fail(ErrorKind::Precondition, "k must be >= 0");
    if (q < 2) fail(ErrorKind::Precondition, "q must be at least 2");
    // sum_{i=0}^{k-1} (-1)^(k+i-1) [k i]_q q^(i(i-1)/2) - q^(k(k-1)/2)
    __int128 acc = 0;
    for (int i = 0; i < k; ++i) {
        u128 term = detail::checked_mul(
            gauss_binomial_u128(k, i, q),
            detail::checked_pow(static_cast<u128>(q),
                                static_cast<unsigned long long>(i) * (i - 1) / 2));
        if (term > static_cast<u128>(detail::u128_max >> 1))
            fail(ErrorKind::OutOfRange, "identity term exceeds the signed 128-bit range");
        if ((k + i - 1) % 2 == 0) acc += static_cast<__int128>(term);
        else acc -= static_cast<__int128>(term);
    }
    u128 target = detail::checked_pow(static_cast<u128>(q),
                                      static_cast<unsigned long long>(k) * (k - 1) / 2);
    if (target > static_cast<u128>(detail::u128_max >> 1))
        fail(ErrorKind::OutOfRange, "identity target exceeds the signed 128-bit range");
    acc -= static_cast<__int128>(target);
    if (acc > static_cast<__int128>(std::numeric_limits<long long>::max()) ||
        acc < -static_cast<__int128>(std::numeric_limits<long long>::max()))
        fail(ErrorKind::OutOfRange, "residual exceeds the int64 range");
    return static_cast<long long>(acc);
}

ResolutionSummary::ResolutionSummary(std::vector<std::vector<TwistTerm>> steps, bool pure,
                                     bool linear)
    : steps_(std::move(steps)), pure_(pure), linear_(linear) {
    for (auto& terms : steps_) {
        if (terms.empty())
            fail(ErrorKind::Precondition, "every homological degree needs at least one term");
        std::sort(terms.begin(), terms.end(),
                  [](const TwistTerm& a, const TwistTerm& b) { return a.degree < b.degree; });
    }
}

const std::vector<TwistTerm>& ResolutionSummary::step(int i) const {
    if (i < 1 || i > length())
        fail(ErrorKind::IndexOutOfRange,
             "homological degree " + std::to_string(i) + " outside 1.." + std::to_string(length()));
    return steps_[static_cast<std::size_t>(i - 1)];
}

ResolutionSummary ResolutionSummary::from_n_graded(
    const std::map<std::pair<int, int>, long long>& graded) {
    int top = 0;
    for (const auto& [key, v] : graded) {
        (void)v;
        top = std::max(top, key.first);
    }
    std::vector<std::vector<TwistTerm>> steps(static_cast<std::size_t>(top));
    for (const auto& [key, v] : graded) {
        if (key.first == 0) continue;
        steps[static_cast<std::size_t>(key.first - 1)].push_back({key.second, v});
    }
    for (int i = 1; i <= top; ++i)
        if (steps[static_cast<std::size_t>(i - 1)].empty())
            fail(ErrorKind::Precondition,
                 "no terms in homological degree " + std::to_string(i) + " below the top degree");
    bool pure = true;
    for (const auto& terms : steps) pure = pure && terms.size() == 1;
    bool linear = pure && top >= 1;
    if (pure)
        for (int i = 1; i < top; ++i)
            linear = linear && steps[static_cast<std::size_t>(i)][0].degree ==
                                   steps[static_cast<std::size_t>(i - 1)][0].degree + 1;
    return ResolutionSummary(std::move(steps), pure, linear);
}

ResolutionSummary ResolutionSummary::from_betti_table(const BettiTable& t) {
    return from_n_graded(project_n_graded(t));
}

std::string ResolutionSummary::to_string() const {
    std::string out = "0 <- R(C) <- S";
    for (const auto& terms : steps_) {
        out += " <- ";
        for (std::size_t t = 0; t < terms.size(); ++t) {
            if (t) out += " (+) ";
            out += "S(-" + std::to_string(terms[t].degree) + ")^" +
                   std::to_string(terms[t].multiplicity);
        }
    }
    return out + " <- 0";
}

bool ResolutionSummary::operator==(const ResolutionSummary& o) const {
    return steps_ == o.steps_ && pure_ == o.pure_ && linear_ == o.linear_;
}

ResolutionSummary constant_weight_resolution(int k, long long q, long long d) {
    if (k < 1) fail(ErrorKind::Precondition, "k must be at least 1");
    if (q < 2) fail(ErrorKind::Precondition, "q must be at least 2");
    if (d < 1) fail(ErrorKind::Precondition, "d must be positive");
    std::vector<std::vector<TwistTerm>> steps;
    for (int i = 1; i <= k; ++i) {
        // twist d_i = d (q^i - 1) / (q^(i-1) (q - 1))
        u128 num = detail::checked_mul(
            static_cast<u128>(d),
            detail::checked_pow(static_cast<u128>(q), static_cast<unsigned long long>(i)) - 1);
        u128 den = detail::checked_mul(
            detail::checked_pow(static_cast<u128>(q), static_cast<unsigned long long>(i - 1)),
            static_cast<u128>(q - 1));
        if (num % den != 0)
            fail(ErrorKind::NonIntegralDegree,
                 "twist at degree " + std::to_string(i) + " is not an integer");
        long long twist = detail::to_int64(num / den);
        // multiplicity [k i]_q q^(i(i-1)/2)
        long long mult = detail::to_int64(detail::checked_mul(
            gauss_binomial_u128(k, i, q),
            detail::checked_pow(static_cast<u128>(q),
                                static_cast<unsigned long long>(i) * (i - 1) / 2)));
        steps.push_back({TwistTerm{twist, mult}});
    }
    // the closed form is pure by construction; it is linear only in the
    // single-step case k = 1
    return ResolutionSummary(std::move(steps), true, k == 1);
}

std::optional<long long> constant_weight_from_first_betti(const BettiTable& t, int k,
                                                          long long q) {
    if (k < 1) fail(ErrorKind::Precondition, "k must be at least 1");
    if (q < 2) fail(ErrorKind::Precondition, "q must be at least 2");
    std::optional<int> d;
    long long total = 0;
    for (const auto& [key, v] : t.entries()) {
        if (key.first != 1) continue;
        int size = subset_size(key.second);
        if (!d) d = size;
        else if (*d != size) return std::nullopt;
        total += v;
    }
    if (!d) return std::nullopt;
    if (total != gauss_binomial(k, 1, q)) return std::nullopt;
    return *d;
}

long long alternating_betti_sum(const BettiTable& t, long long top_degree) {
    auto graded = project_n_graded(t);
    int top = 0;
    for (const auto& [key, v] : graded) {
        (void)v;
        top = std::max(top, key.first);
    }
    if (top == 0) fail(ErrorKind::Precondition, "table has no positive-degree entries");
    std::map<int, std::pair<long long, long long>> column; // i -> (twist, beta)
    for (const auto& [key, v] : graded) {
        if (key.first == 0) continue;
        auto [it, inserted] = column.try_emplace(key.first, key.second, v);
        if (!inserted)
            fail(ErrorKind::ImpureTable, "two twists in homological degree " +
                                             std::to_string(key.first));
    }
    if (column.at(top).first != top_degree)
        fail(ErrorKind::Precondition, "top twist " + std::to_string(column.at(top).first) +
                                          " does not equal " + std::to_string(top_degree));
    __int128 acc = 1; // beta_0 = 1
    for (const auto& [i, tw] : column) acc += (i % 2 == 0 ? 1 : -1) * static_cast<__int128>(tw.second);
    if (acc > static_cast<__int128>(std::numeric_limits<long long>::max()) ||
        acc < -static_cast<__int128>(std::numeric_limits<long long>::max()))
        fail(ErrorKind::OutOfRange, "alternating sum exceeds the int64 range");
    return static_cast<long long>(acc);
}

} // namespace codebetti
