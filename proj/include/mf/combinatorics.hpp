/*
   Copyright 2026 The mf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <vector>

#include "mf/rational.hpp"

namespace mf {

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// (2n)! / ((n+1)! n!)
inline Integer catalan(unsigned long n) { return factorial(2 * n) / (factorial(n + 1) * factorial(n)); }

/// All k-subsets of {0, ..., n-1}, each sorted, in lexicographic order.
inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    while (true) {
        out.push_back(c);
        std::size_t i = k;
        while (i > 0 && c[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++c[i - 1];
        for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

/// Set partitions of {0, ..., n-1} as restricted growth strings: block[i]
/// is the block index of element i, blocks numbered by first appearance.
inline std::vector<std::vector<std::size_t>> set_partitions(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    if (n == 0) return {{}};
    std::vector<std::size_t> a(n, 0), m(n, 0);
    while (true) {
        out.push_back(a);
        std::size_t i = n - 1;
        while (i > 0 && a[i] == m[i - 1] + 1) --i;
        if (i == 0) break;
        ++a[i];
        std::size_t mi = std::max(m[i - 1], a[i]);
        m[i] = mi;
        for (std::size_t j = i + 1; j < n; ++j) {
            a[j] = 0;
            m[j] = mi;
        }
    }
    return out;
}

}  // namespace mf
