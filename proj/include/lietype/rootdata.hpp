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
 * @file rootdata.hpp
 * @brief Degrees of the basic invariants, Weyl group orders and order polynomials.
 */

#ifndef LIETYPE_ROOTDATA_HPP
#define LIETYPE_ROOTDATA_HPP

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace lietype {

struct RootSystemType {
    char family = 'A';
    int rank = 1;

    RootSystemType() = default;
    RootSystemType(char f, int l) : family(f), rank(l) {
        switch (f) {
            case 'A':
            case 'B':
            case 'C':
                require(l >= 1, "rank must be positive");
                break;
            case 'D':
                require(l >= 3, "type D needs rank at least 3");
                break;
            case 'G':
                require(l == 2, "type G has rank 2");
                break;
            case 'F':
                require(l == 4, "type F has rank 4");
                break;
            case 'E':
                require(l >= 6 && l <= 8, "type E has rank 6, 7 or 8");
                break;
            default:
                throw UsageError(std::string("unknown root system family '") + f + "'");
        }
    }

    std::string name() const { return std::string(1, family) + std::to_string(rank); }
};

/// The fourteen types listed with their degrees.
inline std::vector<RootSystemType> tabulated_types() {
    return {{'A', 1}, {'A', 2}, {'A', 3}, {'B', 2}, {'B', 3}, {'C', 2}, {'C', 3},
            {'D', 4}, {'D', 5}, {'G', 2}, {'F', 4}, {'E', 6}, {'E', 7}, {'E', 8}};
}

/// Degrees d_1, ..., d_l in the order they are usually listed.
inline std::vector<int> degrees(const RootSystemType& t) {
    const int l = t.rank;
    std::vector<int> d;
    switch (t.family) {
        case 'A':
            for (int i = 2; i <= l + 1; ++i) d.push_back(i);
            break;
        case 'B':
        case 'C':
            for (int i = 1; i <= l; ++i) d.push_back(2 * i);
            break;
        case 'D':
            for (int i = 1; i < l; ++i) d.push_back(2 * i);
            d.push_back(l);
            break;
        case 'G':
            d = {2, 6};
            break;
        case 'F':
            d = {2, 6, 8, 12};
            break;
        case 'E':
            if (l == 6) d = {2, 5, 6, 8, 9, 12};
            if (l == 7) d = {2, 6, 8, 10, 12, 14, 18};
            if (l == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
            break;
    }
    return d;
}

inline BigInt weyl_order(const RootSystemType& t) {
    BigInt w = 1;
    for (int d : degrees(t)) w *= d;
    return w;
}

inline int positive_roots(const RootSystemType& t) {
    int n = 0;
    for (int d : degrees(t)) n += d - 1;
    return n;
}

/// q^N prod (q^{d_i} - 1)
inline IntPolynomial order_polynomial(const RootSystemType& t) {
    IntPolynomial p = IntPolynomial::monomial(positive_roots(t));
    for (int d : degrees(t)) p *= IntPolynomial::x_pow_minus_one(d);
    return p;
}

/// q^{n(n-1)/2} prod_{i=1}^n (q^i - 1)
inline IntPolynomial gl_order_polynomial(int n) {
    require(n >= 1, "n must be positive");
    IntPolynomial p = IntPolynomial::monomial(n * (n - 1) / 2);
    for (int i = 1; i <= n; ++i) p *= IntPolynomial::x_pow_minus_one(i);
    return p;
}

/// |GL_n(F_q)| with q replaced by -q, sign normalised to a positive leading coefficient.
inline IntPolynomial ennola_unitary_order(int n) {
    IntPolynomial p = gl_order_polynomial(n).negate_variable();
    if (p.leading() < 0) p = -p;
    return p;
}

inline IntPolynomial sl_order_polynomial(int n) { return order_polynomial(RootSystemType('A', n - 1)); }
inline IntPolynomial sp_order_polynomial(int n) { return order_polynomial(RootSystemType('C', n / 2)); }

/// |G(F_q)| / (q - 1)^l at q = 1, computed by exact division.
inline BigInt q_to_one_limit(const RootSystemType& t) {
    IntPolynomial p = order_polynomial(t);
    const IntPolynomial qm1{BigInt(-1), BigInt(1)};
    for (int i = 0; i < t.rank; ++i) {
        auto [qt, r] = p.divmod(qm1);
        if (!r.is_zero()) throw ConsistencyError("order polynomial not divisible by (q-1)^rank");
        p = std::move(qt);
    }
    return p.evaluate(BigInt(1));
}

/// (|G|_p, |G|_{p'}) for the value of poly at q.
inline std::pair<BigInt, BigInt> p_part_split(const IntPolynomial& poly, std::uint64_t q) {
    require(q >= 2, "q must be a prime power");
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    BigInt v = poly.evaluate(BigInt(q));
    require(v > 0, "order must be positive");
    BigInt pp = 1;
    while (v % p == 0) {
        v /= p;
        pp *= p;
    }
    return {pp, v};
}

/// "q^N (q^d1 - 1)(q^d2 - 1)..."
inline std::string factored_form(const RootSystemType& t) {
    std::string s = "q^" + std::to_string(positive_roots(t));
    for (int d : degrees(t)) s += " (q^" + std::to_string(d) + " - 1)";
    return s;
}

}  // namespace lietype

#endif
