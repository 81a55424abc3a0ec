#include "oracles.hpp"

#include <algorithm>
#include <limits>

namespace codebetti::testing {

std::vector<Mask> codeword_supports(const LinearCode& c) {
    const int k = c.dimension();
    const int n = c.length();
    const Mat& g = c.generator();
    const FieldPtr& field = c.field();
    const unsigned q = field->order();

    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= q;

    std::vector<Mask> supports;
    supports.reserve(total);
    std::vector<unsigned> coef(static_cast<std::size_t>(k), 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (int i = 0; i < k; ++i) {
            coef[static_cast<std::size_t>(i)] = static_cast<unsigned>(rest % q);
            rest /= q;
        }
        Mask supp = 0;
        for (int j = 0; j < n; ++j) {
            unsigned v = 0;
            for (int i = 0; i < k; ++i)
                v = field->add(v, field->mul(coef[static_cast<std::size_t>(i)],
                                             g(static_cast<std::size_t>(i),
                                               static_cast<std::size_t>(j))));
            if (v != 0) supp |= subset_single(j + 1);
        }
        supports.push_back(supp);
    }
    return supports;
}

int nullity_by_counting(const std::vector<Mask>& supports, Mask sigma, unsigned q) {
    std::uint64_t count = 0;
    for (Mask s : supports)
        if ((s & ~sigma) == 0) ++count;
    int dim = 0;
    std::uint64_t power = 1;
    while (power < count) {
        power *= q;
        ++dim;
    }
    if (power != count) throw std::logic_error("codeword count is not a power of q");
    return dim;
}

WeightHierarchy hierarchy_by_nullity_sweep(const LinearCode& c) {
    const int k = c.dimension();
    const unsigned q = c.field_order();
    const std::vector<Mask> supports = codeword_supports(c);
    const Mask full = subset_full(c.length());

    std::vector<long long> best(static_cast<std::size_t>(k) + 1,
                                std::numeric_limits<long long>::max());
    for (Mask sigma = 0;; ++sigma) {
        const int nul = nullity_by_counting(supports, sigma, q);
        for (int i = 1; i <= nul; ++i)
            best[static_cast<std::size_t>(i)] =
                std::min(best[static_cast<std::size_t>(i)],
                         static_cast<long long>(subset_size(sigma)));
        if (sigma == full) break;
    }
    WeightHierarchy w;
    w.d.assign(best.begin() + 1, best.end());
    return w;
}

std::vector<Mask> minimal_nullity_sets_by_sweep(const LinearCode& c, int i) {
    const unsigned q = c.field_order();
    const std::vector<Mask> supports = codeword_supports(c);
    const Mask full = subset_full(c.length());

    std::vector<Mask> level;
    for (Mask sigma = 0;; ++sigma) {
        if (nullity_by_counting(supports, sigma, q) == i) level.push_back(sigma);
        if (sigma == full) break;
    }
    std::vector<Mask> minimal;
    for (Mask sigma : level) {
        bool has_smaller = false;
        for (Mask tau : level)
            if (tau != sigma && (tau & ~sigma) == 0) {
                has_smaller = true;
                break;
            }
        if (!has_smaller) minimal.push_back(sigma);
    }
    std::sort(minimal.begin(), minimal.end(), subset_lex_less);
    return minimal;
}

std::map<std::pair<int, Mask>, long long> betti_by_full_sweep(const Matroid& m,
                                                              const FieldPtr& coeff) {
    std::map<std::pair<int, Mask>, long long> entries;
    const Mask full = subset_full(m.ground_size());
    for (int i = 0; i <= m.deficit(); ++i) {
        for (Mask sigma = 0;; ++sigma) {
            const long long v = hochster_betti(m, i, sigma, coeff);
            if (v != 0) entries[{i, sigma}] = v;
            if (sigma == full) break;
        }
    }
    return entries;
}

LinearCode random_code(std::mt19937_64& rng, unsigned q, int n, int k) {
    FieldPtr field = Field::of_order(q);
    std::uniform_int_distribution<unsigned> entry(0, q - 1);
    for (;;) {
        std::vector<std::vector<unsigned>> rows(static_cast<std::size_t>(k),
                                                std::vector<unsigned>(static_cast<std::size_t>(n)));
        for (auto& row : rows)
            for (auto& v : row) v = entry(rng);
        LinearCode c = LinearCode::from_generator(field, rows);
        if (c.dimension() == k) return c;
    }
}

Mat random_invertible(std::mt19937_64& rng, const FieldPtr& field, int r) {
    std::uniform_int_distribution<unsigned> entry(0, field->order() - 1);
    for (;;) {
        Mat m(field, static_cast<std::size_t>(r), static_cast<std::size_t>(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), entry(rng));
        if (rank(m) == r) return m;
    }
}

std::string data_path(const std::string& name) {
    return std::string(CODEBETTI_DATA_DIR) + "/" + name;
}

} // namespace codebetti::testing
