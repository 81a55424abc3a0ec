#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "codebetti/errors.hpp"

namespace codebetti {

// Subsets of the ground set E = {1, ..., n} (n <= 64) as bitmasks.
// Bit j-1 set  <=>  element j is in the subset. Elements are 1-based in the
// public interface throughout, matching coordinate numbering of codewords.
using Mask = std::uint64_t;

inline int subset_size(Mask s) { return std::popcount(s); }

inline bool subset_contains(Mask s, int element) {
    return element >= 1 && element <= 64 && (s >> (element - 1)) & 1u;
}

inline Mask subset_single(int element) {
    if (element < 1 || element > 64) fail(ErrorKind::IndexOutOfRange, "element out of range");
    return Mask{1} << (element - 1);
}

inline Mask subset_full(int n) {
    if (n < 0 || n > 64) fail(ErrorKind::IndexOutOfRange, "ground set size out of range");
    return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

std::vector<int> subset_elements(Mask s);
Mask subset_from_elements(const std::vector<int>& elements);

// Lexicographic order on the sorted element tuples: {1,2} < {1,3,4} < {2,3}.
// Used for every deterministic listing of subsets.
bool subset_lex_less(Mask a, Mask b);

std::string subset_to_string(Mask s); // "{1,3,4}", "{}" for the empty set

// All k-element subsets of {1..n} in subset_lex_less order.
void for_each_combination(int n, int k, const std::function<void(Mask)>& fn);

// All 2^popcount(universe) submasks of universe, empty set included.
// Order is unspecified; use for sweeps only.
void for_each_submask(Mask universe, const std::function<void(Mask)>& fn);

} // namespace codebetti
