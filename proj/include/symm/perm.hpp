#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "symm/class_function.hpp"

namespace symm {

// permutations are image arrays on {0..n-1}: p[i] is where i goes

inline std::vector<int> identity_perm(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// (p*q)(i) = p(q(i))
inline std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(q.size());
    for (size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
    return r;
}

inline std::vector<int> inverse(const std::vector<int>& p) {
    std::vector<int> r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
    return r;
}

inline std::vector<int> cycle_lengths(const std::vector<int>& p) {
    int n = static_cast<int>(p.size());
    std::vector<char> seen(n, 0);
    std::vector<int> lens;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = p[j]) {
            seen[j] = 1;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return lens;
}

inline CycleType cycle_type_of(const std::vector<int>& p) {
    return CycleType(Partition(cycle_lengths(p)));
}

inline bool is_even_perm(const std::vector<int>& p) {
    auto lens = cycle_lengths(p);
    int transpositions = 0;
    for (int len : lens) transpositions += len - 1;
    return transpositions % 2 == 0;
}

// builds one permutation with the given cycle type, cycles laid out on 0..n-1 in order
inline std::vector<int> perm_with_type(const CycleType& ct) {
    std::vector<int> p(ct.n());
    int base = 0;
    for (int len : ct.parts()) {
        for (int k = 0; k < len; ++k) p[base + k] = base + (k + 1) % len;
        base += len;
    }
    return p;
}

// visits all n! permutations in lexicographic order
template <typename Fn>
void for_each_perm(int n, Fn&& fn) {
    std::vector<int> p = identity_perm(n);
    do {
        fn(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace symm
