#include "codebetti/matroid.hpp"

#include <algorithm>
#include <mutex>
#include <set>

namespace codebetti {

struct Matroid::Cache {
    std::once_flag circuits_once;
    std::vector<Mask> circuits;
};

Matroid::Matroid(const Mat& columns)
    : cols_(columns), n_(static_cast<int>(columns.cols())), rank_(0),
      cache_(std::make_shared<Cache>()) {
    if (n_ > 64) fail(ErrorKind::GroundSetTooLarge, "ground set exceeds 64 elements");
    rank_ = column_subset_rank(cols_, subset_full(n_));
}

void Matroid::check_subset(Mask sigma) const {
    if ((sigma & ~subset_full(n_)) != 0)
        fail(ErrorKind::IndexOutOfRange,
             "subset " + subset_to_string(sigma) + " not within 1.." + std::to_string(n_));
}

int Matroid::rank(Mask sigma) const {
    check_subset(sigma);
    return column_subset_rank(cols_, sigma);
}

namespace {
void check_cap(int n, int max_n) {
    if (n > max_n)
        fail(ErrorKind::GroundSetTooLarge, "ground set of " + std::to_string(n) +
                                               " exceeds the cap of " + std::to_string(max_n));
}
} // namespace

const std::vector<Mask>& Matroid::circuits(int max_n) const {
    check_cap(n_, max_n);
    std::call_once(cache_->circuits_once, [&] {
        // sweep subsets by increasing size; a dependent set none of whose
        // subsets is a known circuit is itself a circuit
        std::vector<Mask> found;
        for (int size = 1; size <= n_ && size <= rank_ + 1; ++size) {
            // every set of size rank+2 contains a dependent proper subset,
            // so no circuit is larger than rank+1
            for_each_combination(n_, size, [&](Mask sigma) {
                for (Mask c : found)
                    if ((c & sigma) == c) return; // contains a smaller circuit
                if (rank(sigma) < size) found.push_back(sigma);
            });
        }
        std::sort(found.begin(), found.end(), subset_lex_less);
        cache_->circuits = std::move(found);
    });
    return cache_->circuits;
}

std::vector<Mask> Matroid::bases(int max_n) const {
    check_cap(n_, max_n);
    std::vector<Mask> out;
    for_each_combination(n_, rank_, [&](Mask sigma) {
        if (rank(sigma) == rank_) out.push_back(sigma);
    });
    // for_each_combination already emits in lex order
    return out;
}

Mask Matroid::loops() const {
    Mask out = 0;
    for (int e = 1; e <= n_; ++e)
        if (rank(subset_single(e)) == 0) out |= subset_single(e);
    return out;
}

Mask Matroid::isthmuses() const {
    // e is an isthmus iff dropping it lowers the rank
    Mask out = 0;
    Mask full = subset_full(n_);
    for (int e = 1; e <= n_; ++e)
        if (rank(full & ~subset_single(e)) < rank_) out |= subset_single(e);
    return out;
}

std::vector<Mask> Matroid::minimal_nullity_sets(int i, int max_n) const {
    check_cap(n_, max_n);
    const int deficit = n_ - rank_;
    if (i < 0 || i > deficit)
        fail(ErrorKind::DimOutOfRange,
             "nullity level " + std::to_string(i) + " outside 0.." + std::to_string(deficit));
    if (i == 0) return {0}; // the empty set is the unique minimal nullity-0 set

    const std::vector<Mask>& circ = circuits(max_n);

    std::set<Mask> candidates;
    if (i == deficit) {
        // nullity(sigma) = deficit forces sigma to contain every non-isthmus
        // element, so the union of all circuits is the unique minimal set
        Mask all = 0;
        for (Mask c : circ) all |= c;
        candidates.insert(all);
    } else {
        // unions of i non-redundant circuits (each member keeps a private
        // element); the nullity prune is sound because nullity is monotone
        std::vector<Mask> family(static_cast<std::size_t>(i), 0);
        auto dfs = [&](auto&& self, int depth, std::size_t start, Mask acc) -> void {
            if (depth == i) {
                candidates.insert(acc);
                return;
            }
            for (std::size_t idx = start; idx < circ.size(); ++idx) {
                Mask c = circ[idx];
                if ((c & ~acc) == 0) continue; // redundant immediately
                bool ok = true;
                for (int j = 0; j < depth && ok; ++j) {
                    Mask others = c;
                    for (int l = 0; l < depth; ++l)
                        if (l != j) others |= family[static_cast<std::size_t>(l)];
                    if ((family[static_cast<std::size_t>(j)] & ~others) == 0) ok = false;
                }
                if (!ok) continue;
                Mask next = acc | c;
                if (nullity(next) > i) continue;
                family[static_cast<std::size_t>(depth)] = c;
                self(self, depth + 1, idx + 1, next);
            }
        };
        dfs(dfs, 0, 0, 0);
    }

    // exact minimality: nullity i, and removing any element drops it to i-1
    std::vector<Mask> out;
    for (Mask sigma : candidates) {
        if (nullity(sigma) != i) continue;
        bool minimal = true;
        for (Mask rest = sigma; rest && minimal; rest &= rest - 1) {
            Mask low = rest & (~rest + 1); // lowest element still in rest
            if (nullity(sigma & ~low) != i - 1) minimal = false;
        }
        if (minimal) out.push_back(sigma);
    }
    std::sort(out.begin(), out.end(), subset_lex_less);
    return out;
}

WeightHierarchy Matroid::weights(int max_n) const {
    check_cap(n_, max_n);
    const int deficit = n_ - rank_;
    if (deficit == 0) fail(ErrorKind::FreeMatroid, "free matroid has no dependent sets");
    WeightHierarchy w;
    for (int i = 1; i <= deficit; ++i) {
        auto sets = minimal_nullity_sets(i, max_n);
        int best = n_ + 1;
        for (Mask s : sets) best = std::min(best, subset_size(s));
        w.d.push_back(best);
    }
    return w;
}

Matroid Matroid::restriction(Mask sigma) const {
    check_subset(sigma);
    return Matroid(select_columns(cols_, sigma));
}

} // namespace codebetti
