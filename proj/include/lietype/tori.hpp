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
 * @file tori.hpp
 * @brief Classes of maximal tori for GL_n, U_n and Sp_4.
 *
 * GL_n tori are indexed by partitions, T = prod F_{q^{a_i}}^x.
 * U_n tori use the same partitions: an odd part a gives a norm-one factor of
 * order q^a + 1, an even part a gives a swapped pair with factor F_{q^a}^x.
 * Sp_4 has five classes, one per conjugacy class of W(C_2).
 */

#ifndef LIETYPE_TORI_HPP
#define LIETYPE_TORI_HPP

#include <set>
#include <string>
#include <vector>

#include "groups.hpp"
#include "partitions.hpp"

namespace lietype {

struct InvolutiveAlgebraDatum {
    std::vector<int> swap_factors;
    std::vector<int> norm_factors;

    std::string to_string() const {
        std::string s = "swap{";
        for (std::size_t i = 0; i < swap_factors.size(); ++i) s += (i ? "," : "") + std::to_string(swap_factors[i]);
        s += "} norm{";
        for (std::size_t i = 0; i < norm_factors.size(); ++i) s += (i ? "," : "") + std::to_string(norm_factors[i]);
        return s + "}";
    }
};

struct TorusClass {
    Family family = Family::GL;
    int n = 1;
    Partition partition;  // GL and U
    InvolutiveAlgebraDatum datum;  // U and Sp
    std::vector<TorusFactor> factors;
    IntPolynomial order_poly;
    int split_rank = 0;
    bool anisotropic_mod_center = false;

    std::string label() const {
        if (family == Family::GL) return partition_string(partition);
        if (family == Family::U) return partition_string(partition) + " " + datum.to_string();
        return datum.to_string();
    }
    bool is_split() const { return split_rank == (family == Family::U ? n / 2 : n == 4 && family == Family::Sp ? 2 : n); }
};

/// F_q-rank of the ambient group, the exponent of epsilon_G.
inline int group_split_rank(Family fam, int n) {
    switch (fam) {
        case Family::GL:
            return n;
        case Family::SL:
            return n - 1;
        case Family::U:
            return n / 2;
        case Family::Sp:
            return n / 2;
    }
    return 0;
}

inline int sign_of_rank(int r) { return r % 2 ? -1 : 1; }

inline TorusClass make_gl_torus(const Partition& p) {
    TorusClass t;
    t.family = Family::GL;
    t.n = partition_size(p);
    t.partition = p;
    t.order_poly = IntPolynomial{BigInt(1)};
    for (int a : p) {
        t.factors.push_back({FactorKind::Split, a});
        t.order_poly *= IntPolynomial::x_pow_minus_one(a);
    }
    t.split_rank = static_cast<int>(p.size());
    t.anisotropic_mod_center = p.size() == 1;
    return t;
}

inline std::vector<TorusClass> gl_torus_classes(int n) {
    require(n >= 1, "n must be positive");
    std::vector<TorusClass> out;
    for (const auto& p : partitions(n)) out.push_back(make_gl_torus(p));
    return out;
}

inline TorusClass make_unitary_torus(const Partition& p) {
    TorusClass t;
    t.family = Family::U;
    t.n = partition_size(p);
    t.partition = p;
    t.order_poly = IntPolynomial{BigInt(1)};
    for (int a : p) {
        if (a % 2) {
            t.factors.push_back({FactorKind::UnitaryOdd, a});
            t.datum.norm_factors.push_back(a);
            t.order_poly *= IntPolynomial::x_pow_plus_one(a);
        } else {
            t.factors.push_back({FactorKind::UnitaryEven, a});
            t.datum.swap_factors.push_back(a);
            t.order_poly *= IntPolynomial::x_pow_minus_one(a);
            ++t.split_rank;
        }
    }
    t.anisotropic_mod_center = t.split_rank == 0;
    return t;
}

inline std::vector<TorusClass> unitary_torus_classes(int n) {
    require(n >= 1, "n must be positive");
    std::vector<TorusClass> out;
    for (const auto& p : partitions(n)) out.push_back(make_unitary_torus(p));
    return out;
}

inline std::vector<TorusClass> sp4_torus_classes() {
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> data = {
        {{1, 1}, {}}, {{1}, {1}}, {{}, {1, 1}}, {{2}, {}}, {{}, {2}}};
    std::vector<TorusClass> out;
    for (const auto& [sw, nm] : data) {
        TorusClass t;
        t.family = Family::Sp;
        t.n = 4;
        t.datum = {sw, nm};
        t.order_poly = IntPolynomial{BigInt(1)};
        for (int a : sw) {
            t.factors.push_back({FactorKind::SwapSp, a});
            t.order_poly *= IntPolynomial::x_pow_minus_one(a);
            ++t.split_rank;
        }
        for (int b : nm) {
            t.factors.push_back({FactorKind::NormSp, b});
            t.order_poly *= IntPolynomial::x_pow_plus_one(b);
        }
        t.anisotropic_mod_center = t.split_rank == 0;
        out.push_back(std::move(t));
    }
    return out;
}

inline std::vector<TorusClass> classical_torus_classes(Family fam, int n) {
    if (fam == Family::U) return unitary_torus_classes(n);
    if (fam == Family::Sp) {
        require(n == 4, "symplectic tori are available for Sp_4 only");
        return sp4_torus_classes();
    }
    throw UsageError("classical_torus_classes expects U or Sp");
}

inline std::vector<TorusClass> torus_classes(Family fam, int n) {
    if (fam == Family::GL) return gl_torus_classes(n);
    return classical_torus_classes(fam, n);
}

inline BigInt torus_order(const TorusClass& t, std::uint64_t q) {
    require(is_prime_power(q), "q must be a prime power");
    return t.order_poly.evaluate(BigInt(q));
}

/// |W(T)| and a short structure tag.
inline std::pair<std::uint64_t, std::string> torus_weyl_group(const TorusClass& t) {
    if (t.family == Family::GL || t.family == Family::U) {
        std::uint64_t w = 1;
        std::string tag;
        for (auto [d, m] : multiplicities(t.partition)) {
            for (int i = 0; i < m; ++i) w *= static_cast<std::uint64_t>(d);
            for (int i = 2; i <= m; ++i) w *= static_cast<std::uint64_t>(i);
            if (!tag.empty()) tag += " x ";
            tag += "C" + std::to_string(d) + (m > 1 ? " wr S" + std::to_string(m) : "");
        }
        return {w, tag};
    }
    if (t.family == Family::Sp && t.n == 4) {
        // centralizer in W(C_2) of the matching signed cycle type
        const auto& d = t.datum;
        if (d.swap_factors.size() + d.norm_factors.size() == 2 && d.swap_factors.size() != 1) return {8, "W(C2)"};
        if (d.norm_factors == std::vector<int>{2}) return {4, "C4"};
        return {4, "C2 x C2"};
    }
    throw UsageError("no Weyl group data for this torus");
}

/// Torus datum in standard coordinates for an embedding.
inline EtaleTorus torus_datum(const TorusClass& t, std::uint64_t q) {
    const FormKind f = t.family == Family::U ? FormKind::Hermitian : t.family == Family::Sp ? FormKind::Alternating : FormKind::None;
    return build_etale_torus(t.factors, q, f);
}

inline TorusEmbedding embed_torus_class(const GroupPtr& G, const TorusClass& t) {
    require(G->family() == t.family && G->n() == t.n, "torus class does not match the group");
    return embed_etale_torus(G, torus_datum(t, G->q()));
}

struct UnitScanHit {
    Family family;
    int n;
    std::string label;
    bool split;
    std::uint64_t q;
};

struct UnitScanReport {
    std::vector<UnitScanHit> hits;
    bool only_split_at_two = true;
};

inline UnitScanReport unit_torus_scan(int max_rank, const std::vector<std::uint64_t>& qs) {
    UnitScanReport r;
    auto scan = [&](const std::vector<TorusClass>& cls) {
        for (const auto& t : cls)
            for (auto q : qs)
                if (torus_order(t, q) == 1) {
                    r.hits.push_back({t.family, t.n, t.label(), t.is_split(), q});
                    if (!t.is_split() || q != 2) r.only_split_at_two = false;
                }
    };
    for (int n = 1; n <= max_rank; ++n) scan(gl_torus_classes(n));
    for (int n = 1; n <= std::min(max_rank, 3); ++n) scan(unitary_torus_classes(n));
    if (max_rank >= 4) scan(sp4_torus_classes());
    return r;
}

// ---------------------------------------------------------------------------
// brute-force enumeration of maximal tori through their algebras

namespace detail {

using Row = std::vector<Code>;

/// reduced row echelon form, zero rows dropped
inline std::vector<Row> rref(const FiniteField& f, std::vector<Row> rows) {
    if (rows.empty()) return rows;
    const std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t piv = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
            if (rows[i][c]) {
                piv = i;
                break;
            }
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        const Code s = f.inv(rows[r][c]);
        for (auto& x : rows[r]) x = f.mul(x, s);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || !rows[i][c]) continue;
            const Code t = rows[i][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(t, rows[r][j]));
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

inline Row flatten(const Mat& m) {
    Row r;
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) r.push_back(m(i, j));
    return r;
}

inline Mat unflatten(const Row& r, int n) {
    Mat m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = r[i * n + j];
    return m;
}

/// basis of the commutant of x in M_n
inline std::vector<Mat> commutant(const FiniteField& f, const Mat& x) {
    const int n = x.n, N = n * n;
    // columns: images of unit matrices under y -> xy - yx
    std::vector<Row> M(N, Row(N, 0));
    for (int k = 0; k < N; ++k) {
        Mat e(n);
        e(k / n, k % n) = 1;
        const Row img = flatten(mat_add(f, mat_mul(f, x, e), mat_scale(f, f.neg(1), mat_mul(f, e, x))));
        for (int i = 0; i < N; ++i) M[i][k] = img[i];
    }
    auto R = rref(f, M);
    std::vector<int> pivcol;
    for (const auto& row : R) {
        int c = 0;
        while (!row[c]) ++c;
        pivcol.push_back(c);
    }
    std::vector<Mat> basis;
    for (int free = 0; free < N; ++free) {
        if (std::find(pivcol.begin(), pivcol.end(), free) != pivcol.end()) continue;
        Row v(N, 0);
        v[free] = 1;
        for (std::size_t i = 0; i < R.size(); ++i) v[pivcol[i]] = f.neg(R[i][free]);
        basis.push_back(unflatten(v, n));
    }
    return basis;
}

inline bool is_semisimple(const FiniteField& f, const Mat& x) {
    FqPoly rad{1};
    for (const auto& [g, m] : factor_monic(f, charpoly(f, x))) rad = poly_mul(f, rad, g);
    Mat acc(x.n);
    for (std::size_t i = rad.size(); i-- > 0;) {
        acc = mat_mul(f, acc, x);
        for (int k = 0; k < x.n; ++k) acc(k, k) = f.add(acc(k, k), rad[i]);
    }
    return acc == Mat(x.n);
}

struct Algebra {
    std::vector<Mat> basis;  // reduced echelon basis
    std::vector<std::uint64_t> key;
};

inline Algebra canonical_algebra(const FiniteField& f, const std::vector<Mat>& span) {
    std::vector<Row> rows;
    for (const auto& m : span) rows.push_back(flatten(m));
    Algebra a;
    for (const auto& r : rref(f, rows)) {
        a.basis.push_back(unflatten(r, span[0].n));
        a.key.push_back(a.basis.back().key(f.q()));
    }
    return a;
}

inline std::vector<Mat> algebra_elements(const FiniteField& f, const std::vector<Mat>& basis) {
    std::vector<Mat> out;
    const std::uint64_t total = ipow(f.q(), static_cast<unsigned>(basis.size()));
    for (std::uint64_t s = 0; s < total; ++s) {
        std::uint64_t r = s;
        Mat m(basis[0].n);
        for (const auto& b : basis) {
            m = mat_add(f, m, mat_scale(f, static_cast<Code>(r % f.q()), b));
            r /= f.q();
        }
        out.push_back(m);
    }
    return out;
}

}  // namespace detail

struct BruteTorusClass {
    std::size_t orbit_size = 0;   // algebras in the G-orbit
    std::uint64_t torus_order = 0;
    int factor_count = 0;         // simple factors of the algebra
    std::vector<std::uint32_t> torus_ids;
};

/**
 * G-conjugacy classes of maximal tori of G (GL_n or Sp_n over F_q) found by
 * enumerating maximal commutative semisimple subalgebras C of M_n(F_q) of
 * dimension n, stable under the adjoint involution for Sp, each generated by
 * at most two commuting elements.
 */
inline std::vector<BruteTorusClass> brute_force_torus_classes(const GroupPtr& G) {
    require(G->family() == Family::GL || G->family() == Family::Sp, "brute-force tori need GL or Sp");
    const FiniteField& f = G->field();
    const int n = G->n();
    const std::uint64_t total = ipow(f.q(), static_cast<unsigned>(n * n));
    require(total <= (1u << 16), "matrix algebra too large for brute-force torus enumeration");
    const bool sp = G->family() == Family::Sp;
    const Mat J = sp ? symplectic_form(f, n) : Mat::identity(n);
    const Mat Ji = mat_inverse(f, J);
    auto adjoint = [&](const Mat& a) { return mat_mul(f, mat_mul(f, Ji, transpose(a)), J); };

    std::map<std::vector<std::uint64_t>, detail::Algebra> found;
    auto consider = [&](const std::vector<Mat>& span) {
        auto a = detail::canonical_algebra(f, span);
        if (static_cast<int>(a.basis.size()) != n) return;
        found.emplace(a.key, std::move(a));
    };
    auto powers = [&](const Mat& x) {
        std::vector<Mat> p{Mat::identity(n)};
        for (int i = 1; i < n; ++i) p.push_back(mat_mul(f, p.back(), x));
        return p;
    };
    for (std::uint64_t s = 0; s < total; ++s) {
        const Mat x = Mat::from_key(s, n, f.q());
        bool scalar = true;
        for (int i = 0; i < n && scalar; ++i)
            for (int j = 0; j < n; ++j)
                if ((i != j && x(i, j)) || (i == j && x(i, i) != x(0, 0))) {
                    scalar = false;
                    break;
                }
        if (scalar && n > 1) continue;
        if (!detail::is_semisimple(f, x)) continue;
        const auto px = powers(x);
        if (static_cast<int>(detail::canonical_algebra(f, px).basis.size()) == n) {
            consider(px);
            continue;
        }
        const auto Z = detail::commutant(f, x);
        for (const auto& y : detail::algebra_elements(f, Z)) {
            std::vector<Mat> span;
            const auto py = powers(y);
            for (const auto& a : px)
                for (const auto& b : py) span.push_back(mat_mul(f, a, b));
            consider(span);
        }
    }

    // keep reduced algebras, and for Sp the involution-stable ones with fixed part of half dimension
    std::vector<detail::Algebra> algs;
    for (auto& [k, a] : found) {
        const auto elems = detail::algebra_elements(f, a.basis);
        bool ok = true;
        for (std::size_t i = 1; i < elems.size() && ok; ++i) {
            Mat pw = elems[i];
            for (int e = 1; e < n; ++e) pw = mat_mul(f, pw, elems[i]);
            if (pw == Mat(n)) ok = false;
        }
        if (ok && sp) {
            std::set<std::uint64_t> keys;
            for (const auto& m : elems) keys.insert(m.key(f.q()));
            std::size_t fixed = 0;
            for (const auto& m : elems) {
                const Mat ad = adjoint(m);
                if (!keys.count(ad.key(f.q()))) {
                    ok = false;
                    break;
                }
                if (ad == m) ++fixed;
            }
            if (ok) ok = fixed == ipow(f.q(), static_cast<unsigned>(n / 2));
        }
        if (ok) algs.push_back(std::move(a));
    }

    std::map<std::vector<std::uint64_t>, std::size_t> index;
    for (std::size_t i = 0; i < algs.size(); ++i) index[algs[i].key] = i;
    std::vector<int> orbit_of(algs.size(), -1);
    std::vector<BruteTorusClass> out;
    for (std::size_t start = 0; start < algs.size(); ++start) {
        if (orbit_of[start] >= 0) continue;
        const int o = static_cast<int>(out.size());
        std::vector<std::size_t> orbit{start};
        orbit_of[start] = o;
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (auto g : G->generators()) {
                const Mat& gm = G->element(g);
                const Mat& gi = G->element(G->inverse(g));
                std::vector<Mat> conj;
                for (const auto& b : algs[orbit[i]].basis) conj.push_back(mat_mul(f, mat_mul(f, gm, b), gi));
                const auto c = detail::canonical_algebra(f, conj);
                const std::size_t j = index.at(c.key);
                if (orbit_of[j] < 0) {
                    orbit_of[j] = o;
                    orbit.push_back(j);
                }
            }
        BruteTorusClass bc;
        bc.orbit_size = orbit.size();
        const auto elems = detail::algebra_elements(f, algs[start].basis);
        std::size_t idempotents = 0;
        for (const auto& m : elems) {
            if (mat_mul(f, m, m) == m) ++idempotents;
            if (auto id = G->find(m)) bc.torus_ids.push_back(*id);
        }
        bc.torus_order = bc.torus_ids.size();
        while (idempotents > 1) {
            idempotents /= 2;
            ++bc.factor_count;
        }
        out.push_back(std::move(bc));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(a.torus_order, a.factor_count) < std::tie(b.torus_order, b.factor_count);
    });
    return out;
}

}  // namespace lietype

#endif
