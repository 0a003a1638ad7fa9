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
 * @file matrix.hpp
 * @brief Square matrices of size at most 4 and univariate polynomials over a FiniteField.
 */

#ifndef LIETYPE_MATRIX_HPP
#define LIETYPE_MATRIX_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "fields.hpp"

namespace lietype {

using Code = FiniteField::Code;

/// n x n matrix over a field given by context, entries row-major.
struct Mat {
    static constexpr int kMax = 4;
    int n = 0;
    std::array<Code, kMax * kMax> a{};

    Mat() = default;
    explicit Mat(int n_) : n(n_) { require(n_ >= 1 && n_ <= kMax, "matrix size must be between 1 and 4"); }

    Code& operator()(int i, int j) { return a[i * kMax + j]; }
    Code operator()(int i, int j) const { return a[i * kMax + j]; }

    static Mat identity(int n) {
        Mat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Mat diagonal(const std::vector<Code>& d) {
        Mat m(static_cast<int>(d.size()));
        for (int i = 0; i < m.n; ++i) m(i, i) = d[i];
        return m;
    }

    friend bool operator==(const Mat& x, const Mat& y) { return x.n == y.n && x.a == y.a; }

    /// mixed-radix key, base |F|
    std::uint64_t key(std::uint32_t q) const {
        std::uint64_t k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) k = k * q + (*this)(i, j);
        return k;
    }
    static Mat from_key(std::uint64_t k, int n, std::uint32_t q) {
        Mat m(n);
        for (int i = n; i-- > 0;)
            for (int j = n; j-- > 0;) {
                m(i, j) = static_cast<Code>(k % q);
                k /= q;
            }
        return m;
    }

    std::string digits() const {
        std::string s;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (!s.empty()) s += ',';
                s += std::to_string((*this)(i, j));
            }
        return s;
    }
};

inline Mat mat_mul(const FiniteField& f, const Mat& x, const Mat& y) {
    Mat r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) {
            Code s = 0;
            for (int k = 0; k < x.n; ++k) s = f.add(s, f.mul(x(i, k), y(k, j)));
            r(i, j) = s;
        }
    return r;
}

inline Mat mat_add(const FiniteField& f, const Mat& x, const Mat& y) {
    Mat r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) r(i, j) = f.add(x(i, j), y(i, j));
    return r;
}

inline Mat mat_scale(const FiniteField& f, Code c, const Mat& x) {
    Mat r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) r(i, j) = f.mul(c, x(i, j));
    return r;
}

inline Mat transpose(const Mat& x) {
    Mat r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) r(i, j) = x(j, i);
    return r;
}

/// entrywise x -> x^e
inline Mat entry_power(const FiniteField& f, const Mat& x, std::uint64_t e) {
    Mat r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) r(i, j) = f.pow(x(i, j), static_cast<std::int64_t>(e));
    return r;
}

inline Code determinant(const FiniteField& f, Mat m) {
    const int n = m.n;
    Code det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (m(r, c)) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < n; ++j) std::swap(m(c, j), m(piv, j));
            det = f.neg(det);
        }
        det = f.mul(det, m(c, c));
        const Code inv = f.inv(m(c, c));
        for (int r = c + 1; r < n; ++r) {
            if (!m(r, c)) continue;
            const Code t = f.mul(m(r, c), inv);
            for (int j = c; j < n; ++j) m(r, j) = f.sub(m(r, j), f.mul(t, m(c, j)));
        }
    }
    return det;
}

/// Rank of a rows x cols matrix given as a row vector list.
inline int rank(const FiniteField& f, std::vector<std::vector<Code>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    int r = 0;
    for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (std::size_t i = r; i < rows.size(); ++i)
            if (rows[i][c]) {
                piv = static_cast<int>(i);
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        const Code inv = f.inv(rows[r][c]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == r || !rows[i][c]) continue;
            const Code t = f.mul(rows[i][c], inv);
            for (std::size_t j = c; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(t, rows[r][j]));
        }
        ++r;
    }
    return r;
}

inline int rank(const FiniteField& f, const Mat& m) {
    std::vector<std::vector<Code>> rows(m.n, std::vector<Code>(m.n));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) rows[i][j] = m(i, j);
    return rank(f, rows);
}

inline Mat mat_inverse(const FiniteField& f, const Mat& m) {
    const int n = m.n;
    Mat a = m, inv = Mat::identity(n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a(r, c)) {
                piv = r;
                break;
            }
        if (piv < 0) throw DomainError("singular matrix");
        for (int j = 0; j < n; ++j) {
            std::swap(a(c, j), a(piv, j));
            std::swap(inv(c, j), inv(piv, j));
        }
        const Code s = f.inv(a(c, c));
        for (int j = 0; j < n; ++j) {
            a(c, j) = f.mul(a(c, j), s);
            inv(c, j) = f.mul(inv(c, j), s);
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || !a(r, c)) continue;
            const Code t = a(r, c);
            for (int j = 0; j < n; ++j) {
                a(r, j) = f.sub(a(r, j), f.mul(t, a(c, j)));
                inv(r, j) = f.sub(inv(r, j), f.mul(t, inv(c, j)));
            }
        }
    }
    return inv;
}

inline Mat mat_minus_identity(const FiniteField& f, Mat m) {
    for (int i = 0; i < m.n; ++i) m(i, i) = f.sub(m(i, i), 1);
    return m;
}

/// Jordan type (partition, descending) of a unipotent matrix.
inline std::vector<int> unipotent_jordan_type(const FiniteField& f, const Mat& u) {
    const int n = u.n;
    const Mat x = mat_minus_identity(f, u);
    std::vector<int> ker(n + 1, 0);  // ker[k] = dim ker x^k
    Mat pw = Mat::identity(n);
    for (int k = 1; k <= n; ++k) {
        pw = mat_mul(f, pw, x);
        ker[k] = n - rank(f, pw);
    }
    ensure(ker[n] == n, "matrix is not unipotent");
    // number of blocks of size >= k is ker[k] - ker[k-1]
    std::vector<int> atleast(n + 2, 0);
    for (int k = 1; k <= n; ++k) atleast[k] = ker[k] - ker[k - 1];
    std::vector<int> lambda;
    for (int k = n; k >= 1; --k) {
        const int cnt = atleast[k] - atleast[k + 1];
        for (int i = 0; i < cnt; ++i) lambda.push_back(k);
    }
    return lambda;
}

// ---------------------------------------------------------------------------
// polynomials over F_q, ascending, trimmed

using FqPoly = std::vector<Code>;

inline void trim(FqPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline FqPoly poly_mul(const FiniteField& f, const FqPoly& a, const FqPoly& b) {
    if (a.empty() || b.empty()) return {};
    FqPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    trim(r);
    return r;
}

inline FqPoly poly_sub(const FiniteField& f, FqPoly a, const FqPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
    trim(a);
    return a;
}

/// (quotient, remainder)
inline std::pair<FqPoly, FqPoly> poly_divmod(const FiniteField& f, FqPoly a, const FqPoly& b) {
    require(!b.empty(), "polynomial division by zero");
    trim(a);
    if (a.size() < b.size()) return {{}, a};
    FqPoly q(a.size() - b.size() + 1, 0);
    const Code inv = f.inv(b.back());
    const int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        const Code c = f.mul(a[i], inv);
        if (!c) continue;
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) a[i - db + j] = f.sub(a[i - db + j], f.mul(c, b[j]));
    }
    trim(a);
    trim(q);
    return {q, a};
}

inline Code poly_eval(const FiniteField& f, const FqPoly& a, Code x) {
    Code r = 0;
    for (std::size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
    return r;
}

/// det(xI - m)
inline FqPoly charpoly(const FiniteField& f, const Mat& m) {
    // Hessenberg-free approach: sum over permutations, n <= 4
    const int n = m.n;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    FqPoly total;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        FqPoly term{1};
        for (int i = 0; i < n; ++i) {
            // entry (i, perm[i]) of xI - m
            FqPoly e{f.neg(m(i, perm[i]))};
            if (perm[i] == i) e.push_back(1);
            trim(e);
            term = poly_mul(f, term, e);
            if (term.empty()) break;
        }
        if (inversions % 2) term = poly_sub(f, {}, term);
        if (total.size() < term.size()) total.resize(term.size(), 0);
        for (std::size_t i = 0; i < term.size(); ++i) total[i] = f.add(total[i], term[i]);
    } while (std::next_permutation(perm.begin(), perm.end()));
    trim(total);
    return total;
}

/// Monic irreducible factors with multiplicities, by trial division in increasing degree.
inline std::vector<std::pair<FqPoly, int>> factor_monic(const FiniteField& f, FqPoly a) {
    trim(a);
    require(!a.empty() && a.back() == 1, "polynomial must be monic");
    std::vector<std::pair<FqPoly, int>> out;
    const std::uint32_t q = f.q();
    for (int d = 1;; ++d) {
        const int deg = static_cast<int>(a.size()) - 1;
        if (deg == 0) break;
        if (deg < 2 * d) {
            // no factor of degree < d remains, so the cofactor is irreducible
            out.emplace_back(a, 1);
            break;
        }
        const std::uint64_t count = ipow(q, d);
        for (std::uint64_t t = 0; t < count; ++t) {
            FqPoly g(d + 1, 0);
            g[d] = 1;
            std::uint64_t s = t;
            for (int i = 0; i < d; ++i, s /= q) g[i] = static_cast<Code>(s % q);
            int mult = 0;
            while (true) {
                auto [qt, r] = poly_divmod(f, a, g);
                if (!r.empty()) break;
                a = qt;
                ++mult;
            }
            if (mult) out.emplace_back(g, mult);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Roots of a polynomial over a subfield, found in an extension field.
inline std::vector<Code> roots_in(const FiniteField& small, const FqPoly& a, const FiniteField& big) {
    const auto& e = embedding(small, big);
    FqPoly b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) b[i] = e(a[i]);
    std::vector<Code> out;
    for (Code x = 0; x < big.q(); ++x)
        if (poly_eval(big, b, x) == 0) out.push_back(x);
    return out;
}

}  // namespace lietype

#endif
