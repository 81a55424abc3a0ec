#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "codebetti/code.hpp"
#include "codebetti/errors.hpp"
#include "codebetti/matroid.hpp"
#include "codebetti/subset.hpp"

#include "oracles.hpp"

using namespace codebetti;
using namespace codebetti::testing;

namespace {

LinearCode exa5() {
    return LinearCode::from_generator(Field::of_order(2), {{1, 1, 0, 0}, {0, 1, 1, 1}});
}

LinearCode example11() {
    return LinearCode::from_generator(Field::of_order(2),
                                      {{1, 0, 0, 1, 0}, {0, 1, 0, 1, 0}, {0, 1, 1, 0, 1}});
}

std::vector<Mask> masks(const std::vector<std::vector<int>>& sets) {
    std::vector<Mask> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.push_back(subset_from_elements(s));
    return out;
}

// basis exchange: for bases A != B and x in A \ B there is y in B \ A with
// A - x + y again a basis
void check_exchange(const Matroid& m) {
    std::vector<Mask> bs = m.bases();
    for (Mask a : bs)
        for (Mask b : bs) {
            if (a == b) continue;
            for (int x : subset_elements(a & ~b)) {
                bool found = false;
                for (int y : subset_elements(b & ~a)) {
                    Mask swapped = (a & ~subset_single(x)) | subset_single(y);
                    if (std::find(bs.begin(), bs.end(), swapped) != bs.end()) {
                        found = true;
                        break;
                    }
                }
                CHECK(found);
            }
        }
}

} // namespace

TEST_CASE("matroid of the four-column code") {
    Matroid m = Matroid::of_code(exa5());
    CHECK(m.ground_size() == 4);
    CHECK(m.rank() == 2);
    CHECK(m.deficit() == 2);
    CHECK(m.bases() == masks({{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
    CHECK(m.circuits() == masks({{1, 2}, {1, 3, 4}, {2, 3, 4}}));
    CHECK(m.loops() == 0);
    CHECK(m.isthmuses() == 0);

    CHECK(m.rank(subset_from_elements({1, 2})) == 1);
    CHECK(m.nullity(subset_from_elements({1, 2})) == 1);
    CHECK(m.is_independent(subset_from_elements({1, 3})));
    CHECK_FALSE(m.is_independent(subset_from_elements({1, 2})));
    CHECK(m.rank(0) == 0);
    CHECK(m.nullity(subset_full(4)) == 2);
}

TEST_CASE("matroid of the five-column code matches the worked example") {
    Matroid m = Matroid::of_code(example11());
    CHECK(m.rank() == 2);
    CHECK(m.bases() == masks({{1, 3}, {1, 5}, {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}));
    CHECK(m.circuits()
          == masks({{1, 2}, {1, 3, 5}, {1, 4}, {2, 3, 5}, {2, 4}, {3, 4, 5}}));
    CHECK(m.weights() == WeightHierarchy{{2, 3, 5}});

    // {3,4,5} is itself dependent, so the full support cannot be a circuit
    CHECK(m.nullity(subset_from_elements({3, 4, 5})) == 1);
    std::vector<Mask> cs = m.circuits();
    CHECK(std::find(cs.begin(), cs.end(), subset_full(5)) == cs.end());
}

TEST_CASE("equal supports do not force equal matroids") {
    // <c2, c3> from the same worked example, as a code in its own right:
    // support {1,...,5} like the whole code, but a different matroid
    Matroid whole = Matroid::of_code(example11());
    Matroid sub = Matroid::of_code(LinearCode::from_generator(
        Field::of_order(2), {{1, 1, 0, 0, 0}, {0, 0, 1, 1, 1}}));
    CHECK(sub.bases()
          == masks({{1, 3, 4}, {1, 3, 5}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}, {2, 4, 5}}));
    CHECK(sub.rank() == 3);
    CHECK(whole.rank() == 2);
    CHECK(whole.bases() != sub.bases());
}

TEST_CASE("minimal nullity sets of the four-column code") {
    Matroid m = Matroid::of_code(exa5());
    CHECK(m.minimal_nullity_sets(0) == std::vector<Mask>{0});
    CHECK(m.minimal_nullity_sets(1) == m.circuits());
    CHECK(m.minimal_nullity_sets(2) == std::vector<Mask>{subset_full(4)});
    CHECK(error_kind([&] { m.minimal_nullity_sets(3); }) == ErrorKind::DimOutOfRange);
    CHECK(error_kind([&] { m.minimal_nullity_sets(-1); }) == ErrorKind::DimOutOfRange);
}

TEST_CASE("nullity and minimal sets match the counting oracles") {
    std::mt19937_64 rng(0x5eedaa00);
    std::vector<LinearCode> codes = {exa5(), example11(),
                                     LinearCode::from_generator(
                                         Field::of_order(2), {{1, 0, 1, 0}, {0, 1, 1, 0}})};
    for (unsigned q : {2u, 3u, 4u})
        for (int trial = 0; trial < 4; ++trial) {
            std::uniform_int_distribution<int> nd(2, 7);
            int n = nd(rng);
            // keep GF(4) draws under the subcode enumeration cap (see the
            // matching note in the hierarchy tests)
            std::uniform_int_distribution<int> kd(1, q == 4 ? std::min(n, 6) : n);
            codes.push_back(random_code(rng, q, n, kd(rng)));
        }

    for (const LinearCode& c : codes) {
        Matroid m = Matroid::of_code(c);
        std::vector<Mask> sups = codeword_supports(c);
        Mask full = subset_full(c.length());
        for (Mask sigma = 0;; ++sigma) {
            CHECK(m.nullity(sigma) == nullity_by_counting(sups, sigma, c.field_order()));
            if (sigma == full) break;
        }
        for (int i = 0; i <= m.deficit(); ++i)
            CHECK(m.minimal_nullity_sets(i) == minimal_nullity_sets_by_sweep(c, i));
        if (c.dimension() >= 1) CHECK(m.weights() == weight_hierarchy(c));
    }
}

TEST_CASE("matroid weights equal the weight hierarchy on the fixed codes") {
    CHECK(Matroid::of_code(exa5()).weights() == WeightHierarchy{{2, 4}});
    LinearCode big = LinearCode::from_generator(
        Field::of_order(3), {{1, 0, 1, 2, 0, 1, 2, 0, 1, 2, 0, 1, 2},
                             {0, 1, 1, 1, 0, 0, 0, 1, 1, 1, 2, 2, 2},
                             {0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1}});
    CHECK(Matroid::of_code(big).weights() == WeightHierarchy{{9, 12, 13}});
}

TEST_CASE("restriction renumbers the ground set") {
    Matroid m = Matroid::of_code(exa5());
    Matroid r = m.restriction(subset_from_elements({1, 3, 4}));
    // columns 1, 3, 4 are pairwise independent with a dependent union: U_{2,3}
    CHECK(r.ground_size() == 3);
    CHECK(r.rank() == 2);
    CHECK(r.bases() == masks({{1, 2}, {1, 3}, {2, 3}}));
    CHECK(r.circuits() == std::vector<Mask>{subset_full(3)});

    Matroid everything = m.restriction(subset_full(4));
    CHECK(everything.bases() == m.bases());
}

TEST_CASE("bases satisfy the exchange property") {
    check_exchange(Matroid::of_code(exa5()));
    check_exchange(Matroid::of_code(example11()));
    std::mt19937_64 rng(0x5eedaa01);
    for (unsigned q : {2u, 3u}) {
        LinearCode c = random_code(rng, q, 6, 3);
        check_exchange(Matroid::of_code(c));
    }
}

TEST_CASE("row-equivalent parity check matrices give the same matroid") {
    std::mt19937_64 rng(0x5eedaa02);
    for (unsigned q : {2u, 3u, 5u}) {
        FieldPtr f = Field::of_order(q);
        LinearCode c = random_code(rng, q, 6, 3);
        Mat h = c.parity_check();
        Matroid base = Matroid::from_parity_check(h);
        for (int trial = 0; trial < 5; ++trial) {
            Mat t = random_invertible(rng, f, static_cast<int>(h.rows()));
            Matroid other = Matroid::from_parity_check(matmul(t, h));
            CHECK(other.bases() == base.bases());
            CHECK(other.circuits() == base.circuits());
            CHECK(other.weights() == base.weights());
        }
    }
}

TEST_CASE("loops and isthmuses") {
    // the full [2,2] code: empty parity check, every element a loop
    LinearCode full = LinearCode::from_parity_check(Mat(Field::of_order(2), 0, 2));
    Matroid m = Matroid::of_code(full);
    CHECK(m.rank() == 0);
    CHECK(m.deficit() == 2);
    CHECK(m.loops() == subset_full(2));
    CHECK(m.circuits() == masks({{1}, {2}}));
    CHECK(m.weights() == WeightHierarchy{{1, 2}});

    // a zero coordinate of the code is an isthmus of the matroid
    LinearCode cw = LinearCode::from_generator(Field::of_order(2),
                                               {{1, 0, 1, 0}, {0, 1, 1, 0}});
    Matroid mc = Matroid::of_code(cw);
    CHECK(mc.isthmuses() == subset_single(4));
    CHECK(mc.isthmuses() == cw.zero_coordinates());
}

TEST_CASE("free matroids have no weights") {
    LinearCode zero = LinearCode::from_parity_check(Field::of_order(2), {{1, 0}, {0, 1}});
    Matroid m = Matroid::of_code(zero);
    CHECK(m.deficit() == 0);
    CHECK(m.circuits().empty());
    CHECK(m.bases() == std::vector<Mask>{subset_full(2)});
    CHECK(error_kind([&] { m.weights(); }) == ErrorKind::FreeMatroid);
    CHECK(m.minimal_nullity_sets(0) == std::vector<Mask>{0});
}

TEST_CASE("enumerations refuse oversized ground sets") {
    Matroid wide(Mat(Field::of_order(2), 1, 30));
    CHECK(error_kind([&] { wide.circuits(); }) == ErrorKind::GroundSetTooLarge);
    CHECK(error_kind([&] { wide.bases(); }) == ErrorKind::GroundSetTooLarge);
    CHECK(error_kind([&] { wide.weights(); }) == ErrorKind::GroundSetTooLarge);
    CHECK(error_kind([&] { wide.minimal_nullity_sets(1); }) == ErrorKind::GroundSetTooLarge);
    CHECK(wide.rank(subset_full(30)) == 0); // rank queries stay available

    Matroid m = Matroid::of_code(exa5());
    CHECK(error_kind([&] { m.rank(subset_single(5)); }) == ErrorKind::IndexOutOfRange);
}
