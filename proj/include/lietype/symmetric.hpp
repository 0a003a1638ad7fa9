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
 * @file symmetric.hpp
 * @brief Symmetric group characters, Kostka-Foulkes polynomials and Green polynomials.
 *
 * Q^lambda_rho(q) is the value of the Green function of a GL_n torus of type rho
 * at a unipotent element of Jordan type lambda:
 *
 *   Q^lambda_rho(q) = sum_mu chi^mu(rho) q^{n(lambda)} K_{mu,lambda}(1/q).
 */

#ifndef LIETYPE_SYMMETRIC_HPP
#define LIETYPE_SYMMETRIC_HPP

#include <map>
#include <vector>

#include "partitions.hpp"
#include "polynomial.hpp"

namespace lietype {

namespace detail {

inline long long mn_rec(std::vector<int> beta, const Partition& rho, std::size_t k,
                        std::map<std::pair<std::vector<int>, std::size_t>, long long>& memo) {
    if (k == rho.size()) return 1;
    auto key = std::make_pair(beta, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int r = rho[k];
    long long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        const int b = beta[i], nb = b - r;
        if (nb < 0 || std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        int between = 0;
        for (int x : beta)
            if (x > nb && x < b) ++between;
        auto next = beta;
        next[i] = nb;
        std::sort(next.rbegin(), next.rend());
        total += (between % 2 ? -1 : 1) * mn_rec(next, rho, k + 1, memo);
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace detail

/// chi^lambda at cycle type rho, by the Murnaghan-Nakayama rule on beta-numbers.
inline long long sn_character(const Partition& lambda, const Partition& rho) {
    require(partition_size(lambda) == partition_size(rho), "partitions of different sizes");
    const int l = static_cast<int>(lambda.size());
    std::vector<int> beta;
    for (int i = 0; i < l; ++i) beta.push_back(lambda[i] + (l - 1 - i));
    std::map<std::pair<std::vector<int>, std::size_t>, long long> memo;
    return detail::mn_rec(beta, rho, 0, memo);
}

/// semistandard tableaux of shape mu and content lambda, rows as vectors
inline std::vector<std::vector<std::vector<int>>> ssyt(const Partition& mu, const Partition& content) {
    require(partition_size(mu) == partition_size(content), "shape and content sizes differ");
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> T;
    for (int r : mu) T.emplace_back(r, 0);
    std::vector<int> left(content.begin(), content.end());
    std::vector<std::pair<int, int>> cells;
    for (std::size_t i = 0; i < mu.size(); ++i)
        for (int j = 0; j < mu[i]; ++j) cells.emplace_back(static_cast<int>(i), j);
    auto rec = [&](auto&& self, std::size_t c) -> void {
        if (c == cells.size()) {
            out.push_back(T);
            return;
        }
        const auto [i, j] = cells[c];
        const int lo = std::max(j > 0 ? T[i][j - 1] : 1, i > 0 ? T[i - 1][j] + 1 : 1);
        for (int v = lo; v <= static_cast<int>(content.size()); ++v) {
            if (!left[v - 1]) continue;
            --left[v - 1];
            T[i][j] = v;
            self(self, c + 1);
            ++left[v - 1];
        }
        T[i][j] = 0;
    };
    rec(rec, 0);
    return out;
}

/// charge of a word with partition content
inline int charge(std::vector<int> w) {
    int total = 0;
    while (!w.empty()) {
        int maxv = *std::max_element(w.begin(), w.end());
        std::vector<bool> used(w.size(), false);
        int pos = -1, index = 0;
        // 1: rightmost occurrence
        for (int p = static_cast<int>(w.size()) - 1; p >= 0; --p)
            if (w[p] == 1) {
                pos = p;
                break;
            }
        ensure(pos >= 0, "charge: word content is not a partition");
        used[pos] = true;
        for (int r = 2; r <= maxv; ++r) {
            int found = -1;
            for (int p = pos - 1; p >= 0; --p)
                if (w[p] == r && !used[p]) {
                    found = p;
                    break;
                }
            if (found < 0) {
                for (int p = static_cast<int>(w.size()) - 1; p > pos; --p)
                    if (w[p] == r && !used[p]) {
                        found = p;
                        break;
                    }
                if (found < 0) break;
                ++index;
            }
            total += index;
            used[found] = true;
            pos = found;
        }
        std::vector<int> rest;
        for (std::size_t p = 0; p < w.size(); ++p)
            if (!used[p]) rest.push_back(w[p]);
        w = std::move(rest);
    }
    return total;
}

/// K_{mu,lambda}(t) = sum over SSYT(mu, lambda) of t^charge
inline IntPolynomial kostka_foulkes(const Partition& mu, const Partition& lambda) {
    IntPolynomial k;
    for (const auto& T : ssyt(mu, lambda)) {
        std::vector<int> word;
        for (std::size_t r = T.size(); r-- > 0;)
            for (int v : T[r]) word.push_back(v);
        k += IntPolynomial::monomial(charge(word));
    }
    return k;
}

/// Q^lambda_rho as a polynomial in q.
inline IntPolynomial green_polynomial(const Partition& lambda, const Partition& rho) {
    const int n = partition_size(lambda);
    require(n == partition_size(rho), "partitions of different sizes");
    const int nl = n_of(lambda);
    IntPolynomial out;
    for (const auto& mu : partitions(n)) {
        const long long chi = sn_character(mu, rho);
        if (!chi) continue;
        const IntPolynomial K = kostka_foulkes(mu, lambda);
        // q^{n(lambda)} K(1/q)
        IntPolynomial rev;
        for (int d = 0; d <= K.degree(); ++d)
            if (K.coeff(d) != 0) rev += IntPolynomial::monomial(nl - d) * IntPolynomial{K.coeff(d)};
        out += rev * IntPolynomial{BigInt(chi)};
    }
    return out;
}

/// Green function of the unitary group, Q^lambda_rho(-q).
inline IntPolynomial unitary_green_polynomial(const Partition& lambda, const Partition& rho) {
    return green_polynomial(lambda, rho).negate_variable();
}

}  // namespace lietype

#endif
