#include "codebetti/subset.hpp"

namespace codebetti {

std::vector<int> subset_elements(Mask s) {
    std::vector<int> out;
    out.reserve(subset_size(s));
    while (s) {
        int b = std::countr_zero(s);
        out.push_back(b + 1);
        s &= s - 1;
    }
    return out;
}

Mask subset_from_elements(const std::vector<int>& elements) {
    Mask s = 0;
    for (int e : elements) s |= subset_single(e);
    return s;
}

bool subset_lex_less(Mask a, Mask b) {
    // compare sorted element tuples without materializing them
    while (a && b) {
        int ea = std::countr_zero(a), eb = std::countr_zero(b);
        if (ea != eb) return ea < eb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

std::string subset_to_string(Mask s) {
    std::string out = "{";
    bool first = true;
    for (int e : subset_elements(s)) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

void for_each_combination(int n, int k, const std::function<void(Mask)>& fn) {
    if (n < 0 || n > 64) fail(ErrorKind::IndexOutOfRange, "ground set size out of range");
    if (k < 0 || k > n) return;
    if (k == 0) {
        fn(0);
        return;
    }
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i; // 0-based positions
    while (true) {
        Mask s = 0;
        for (int i : idx) s |= Mask{1} << i;
        fn(s);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void for_each_submask(Mask universe, const std::function<void(Mask)>& fn) {
    Mask sub = universe;
    while (true) {
        fn(sub);
        if (sub == 0) break;
        sub = (sub - 1) & universe;
    }
}

} // namespace codebetti
