/*
   Copyright 2026 The lietype Authors

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

/**
 * @file partitions.hpp
 * @brief Integer partitions in descending-part form.
 */

#ifndef LIETYPE_PARTITIONS_HPP
#define LIETYPE_PARTITIONS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"

namespace lietype {

using Partition = std::vector<int>;

/// All partitions of n in reverse lexicographic order: (n) first, (1^n) last.
inline std::vector<Partition> partitions(int n) {
    require(n >= 0, "n must be nonnegative");
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline int partition_size(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

/// part -> multiplicity
inline std::map<int, int> multiplicities(const Partition& p) {
    std::map<int, int> m;
    for (int x : p) ++m[x];
    return m;
}

inline Partition conjugate(const Partition& p) {
    Partition c;
    if (p.empty()) return c;
    for (int j = 1; j <= p[0]; ++j) {
        int cnt = 0;
        for (int x : p)
            if (x >= j) ++cnt;
        c.push_back(cnt);
    }
    return c;
}

/// n(lambda) = sum (i - 1) lambda_i
inline int n_of(const Partition& p) {
    int s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s += static_cast<int>(i) * p[i];
    return s;
}

/// size of the centralizer of an element of cycle type p in S_n
inline std::uint64_t z_lambda(const Partition& p) {
    std::uint64_t z = 1;
    for (auto [part, m] : multiplicities(p)) {
        for (int i = 0; i < m; ++i) z *= static_cast<std::uint64_t>(part);
        for (int i = 2; i <= m; ++i) z *= static_cast<std::uint64_t>(i);
    }
    return z;
}

/// dominance order mu <= lambda
inline bool dominated_by(const Partition& mu, const Partition& lambda) {
    int a = 0, b = 0;
    const std::size_t len = std::max(mu.size(), lambda.size());
    for (std::size_t i = 0; i < len; ++i) {
        a += i < mu.size() ? mu[i] : 0;
        b += i < lambda.size() ? lambda[i] : 0;
        if (a > b) return false;
    }
    return true;
}

inline std::string partition_string(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

inline Partition parse_partition(const std::string& s) {
    Partition p;
    std::string tok;
    for (char c : s + ",") {
        if (c == '(' || c == ')' || c == ' ') continue;
        if (c == ',') {
            if (!tok.empty()) {
                try {
                    p.push_back(std::stoi(tok));
                } catch (const std::exception&) {
                    throw UsageError("bad partition '" + s + "'");
                }
                if (p.back() <= 0) throw UsageError("partition parts must be positive");
            }
            tok.clear();
        } else {
            tok += c;
        }
    }
    require(!p.empty(), "empty partition");
    std::sort(p.rbegin(), p.rend());
    return p;
}

}  // namespace lietype

#endif
