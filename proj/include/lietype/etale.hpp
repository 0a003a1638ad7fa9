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
 * @file etale.hpp
 * @brief Maximal tori as norm-one groups of etale algebras with involution.
 *
 * A torus datum is a list of factors. Each factor is a commutative E-algebra C_i
 * (a field, or a product K x K), an involution tau on it and, for the classical
 * groups, an element d with tau(d) = +-d. The E-space V = C_1 + ... + C_r carries
 * the form <c1, c2> = tr_{C/E}(c1 d tau(c2)), and T = {c : c tau(c) = 1} acts on V by
 * multiplication. A basis adapted to the form identifies (V, <,>) with the
 * standard model, which turns T into a subgroup of the ambient matrix group.
 *
 * Factor kinds:
 *   Split(a)        GL:  K = F_{q^a}, T = K^x.
 *   SwapSp(a)       Sp:  K x K, tau(x, y) = (y, x), d = (1, -1), T = K^x.
 *   NormSp(b)       Sp:  L = F_{q^{2b}}, tau = x^{q^b}, tau(d) = -d, T = L^1 of order q^b + 1.
 *   UnitaryOdd(a)   U:   L = F_{q^{2a}} over E = F_{q^2}, tau = x^{q^a}, T of order q^a + 1.
 *   UnitaryEven(a)  U:   K x K, K = F_{q^a} over E, tau(x, y) = (y^q, x^{q^{a-1}}), T = K^x.
 */

#ifndef LIETYPE_ETALE_HPP
#define LIETYPE_ETALE_HPP

#include <string>
#include <vector>

#include "matrix.hpp"

namespace lietype {

/// Coordinates of a field L with respect to the basis 1, g, ..., g^{e-1} over a subfield E.
class ExtensionBasis {
   public:
    ExtensionBasis(const FiniteField& E, const FiniteField& L) : E_(&E), L_(&L) {
        require(E.p() == L.p() && L.k() % E.k() == 0, "not a field extension");
        e_ = static_cast<int>(L.k() / E.k());
        const auto& emb = embedding(E, L);
        powers_.resize(e_);
        for (int i = 0; i < e_; ++i) powers_[i] = L.exp(i);
        table_.assign(L.q(), 0);
        const std::uint64_t total = ipow(E.q(), e_);
        for (std::uint64_t t = 0; t < total; ++t) {
            std::uint64_t s = t;
            Code x = 0;
            for (int i = 0; i < e_; ++i, s /= E.q()) x = L.add(x, L.mul(emb(static_cast<Code>(s % E.q())), powers_[i]));
            table_[x] = static_cast<std::uint32_t>(t);
        }
    }

    int dim() const { return e_; }
    const FiniteField& base() const { return *E_; }
    const FiniteField& field() const { return *L_; }
    Code basis(int i) const { return powers_[i]; }

    std::vector<Code> coords(Code x) const {
        std::vector<Code> c(e_);
        std::uint64_t s = table_[x];
        for (int i = 0; i < e_; ++i, s /= E_->q()) c[i] = static_cast<Code>(s % E_->q());
        return c;
    }
    Code from_coords(const std::vector<Code>& c) const {
        const auto& emb = embedding(*E_, *L_);
        Code x = 0;
        for (int i = 0; i < e_; ++i) x = L_->add(x, L_->mul(emb(c[i]), powers_[i]));
        return x;
    }

   private:
    const FiniteField* E_;
    const FiniteField* L_;
    int e_ = 1;
    std::vector<Code> powers_;
    std::vector<std::uint32_t> table_;
};

enum class FactorKind { Split, SwapSp, NormSp, UnitaryOdd, UnitaryEven };

struct TorusFactor {
    FactorKind kind = FactorKind::Split;
    int a = 1;

    /// E-dimension of the factor
    int dim() const {
        switch (kind) {
            case FactorKind::Split:
            case FactorKind::UnitaryOdd:
                return a;
            case FactorKind::SwapSp:
            case FactorKind::NormSp:
                return 2 * a;
            case FactorKind::UnitaryEven:
                return a;
        }
        return a;
    }
    std::uint64_t order(std::uint64_t q) const {
        switch (kind) {
            case FactorKind::Split:
            case FactorKind::SwapSp:
            case FactorKind::UnitaryEven:
                return ipow(q, a) - 1;
            case FactorKind::NormSp:
            case FactorKind::UnitaryOdd:
                return ipow(q, a) + 1;
        }
        return 0;
    }
    int split_rank() const {
        return (kind == FactorKind::NormSp || kind == FactorKind::UnitaryOdd) ? 0 : 1;
    }
    std::string label() const {
        switch (kind) {
            case FactorKind::Split:
                return "K" + std::to_string(a) + "^x";
            case FactorKind::SwapSp:
            case FactorKind::UnitaryEven:
                return "swap(" + std::to_string(a) + ")";
            case FactorKind::NormSp:
            case FactorKind::UnitaryOdd:
                return "norm(" + std::to_string(a) + ")";
        }
        return "?";
    }
};

enum class FormKind { None, Hermitian, Alternating };

/// A torus together with its module, form and algebra, in standard coordinates.
struct EtaleTorus {
    std::vector<TorusFactor> factors;
    FormKind form = FormKind::None;
    std::uint64_t q = 2;
    const FiniteField* E = nullptr;  // entry field of the ambient group
    int n = 0;
    std::vector<Mat> generators;       // one cyclic generator per factor
    std::vector<std::uint64_t> orders;  // order of each generator
    std::vector<Mat> algebra_basis;    // E-basis of C acting on V
};

namespace detail {

using Block = std::vector<std::vector<Code>>;  // square, over E

inline Block zero_block(int n) { return Block(n, std::vector<Code>(n, 0)); }

/// multiplication-by-x matrix in the basis of eb
inline Block mult_block(const ExtensionBasis& eb, Code x) {
    const int e = eb.dim();
    Block m = zero_block(e);
    for (int j = 0; j < e; ++j) {
        auto c = eb.coords(eb.field().mul(x, eb.basis(j)));
        for (int i = 0; i < e; ++i) m[i][j] = c[i];
    }
    return m;
}

inline Code trace_down(const FiniteField& L, const FiniteField& E, Code x) {
    const std::uint32_t e = L.k() / E.k();
    Code t = 0, y = x;
    for (std::uint32_t i = 0; i < e; ++i) {
        t = L.add(t, y);
        y = L.pow(y, E.q());
    }
    return embedding(E, L).preimage(t);
}

struct FactorModule {
    int dim = 0;
    Block generator;
    std::uint64_t order = 1;
    std::vector<Block> algebra;
    Block gram;
};

/// Coordinates of an element of the factor algebra, represented as one or two codes of L.
struct FactorElement {
    Code x = 0, y = 0;
};

inline FactorModule build_factor(const TorusFactor& fac, std::uint64_t q) {
    const auto pp = PrimePower::of(q);
    FactorModule out;
    out.order = fac.order(q);
    switch (fac.kind) {
        case FactorKind::Split: {
            const auto& E = gf(pp.p, pp.k);
            const auto& K = gf(pp.p, pp.k * fac.a);
            ExtensionBasis eb(E, K);
            out.dim = fac.a;
            out.generator = mult_block(eb, K.generator());
            for (int i = 0; i < fac.a; ++i) out.algebra.push_back(mult_block(eb, eb.basis(i)));
            return out;
        }
        case FactorKind::SwapSp:
        case FactorKind::UnitaryEven: {
            const bool unitary = fac.kind == FactorKind::UnitaryEven;
            if (unitary) require(fac.a % 2 == 0, "unitary swap factor needs even degree");
            const auto& E = unitary ? gf(pp.p, 2 * pp.k) : gf(pp.p, pp.k);
            const auto& K = gf(pp.p, pp.k * fac.a);
            ExtensionBasis eb(E, K);
            const int e = eb.dim();
            out.dim = 2 * e;
            const Code g = K.generator();
            const Code ginv = unitary ? K.inv(K.pow(g, static_cast<std::int64_t>(ipow(q, fac.a - 1)))) : K.inv(g);
            auto direct_sum = [&](const Block& a, const Block& b) {
                Block m = zero_block(2 * e);
                for (int i = 0; i < e; ++i)
                    for (int j = 0; j < e; ++j) {
                        m[i][j] = a[i][j];
                        m[e + i][e + j] = b[i][j];
                    }
                return m;
            };
            const Block zero = zero_block(e);
            out.generator = direct_sum(mult_block(eb, g), mult_block(eb, ginv));
            for (int i = 0; i < e; ++i) {
                out.algebra.push_back(direct_sum(mult_block(eb, eb.basis(i)), zero));
                out.algebra.push_back(direct_sum(zero, mult_block(eb, eb.basis(i))));
            }
            // form on basis vectors (b_i, 0), (0, b_i)
            auto elem = [&](int idx) {
                FactorElement fe;
                if (idx < e)
                    fe.x = eb.basis(idx);
                else
                    fe.y = eb.basis(idx - e);
                return fe;
            };
            out.gram = zero_block(2 * e);
            for (int i = 0; i < 2 * e; ++i)
                for (int j = 0; j < 2 * e; ++j) {
                    auto c1 = elem(i), c2 = elem(j);
                    Code s;
                    if (!unitary) {
                        // tr(x y') - tr(y x')
                        s = E.sub(trace_down(K, E, K.mul(c1.x, c2.y)), trace_down(K, E, K.mul(c1.y, c2.x)));
                    } else {
                        // tau(x', y') = (y'^q, x'^{q^{a-1}})
                        const Code tx = K.pow(c2.y, static_cast<std::int64_t>(q));
                        const Code ty = K.pow(c2.x, static_cast<std::int64_t>(ipow(q, fac.a - 1)));
                        s = E.add(trace_down(K, E, K.mul(c1.x, tx)), trace_down(K, E, K.mul(c1.y, ty)));
                    }
                    out.gram[i][j] = s;
                }
            return out;
        }
        case FactorKind::NormSp:
        case FactorKind::UnitaryOdd: {
            const bool unitary = fac.kind == FactorKind::UnitaryOdd;
            if (unitary) require(fac.a % 2 == 1, "unitary norm factor needs odd degree");
            const auto& E = unitary ? gf(pp.p, 2 * pp.k) : gf(pp.p, pp.k);
            const auto& L = gf(pp.p, 2 * pp.k * fac.a);
            ExtensionBasis eb(E, L);
            const int e = eb.dim();
            out.dim = e;
            const std::uint64_t qa = ipow(q, fac.a);
            out.generator = mult_block(eb, L.pow(L.generator(), static_cast<std::int64_t>(qa - 1)));
            for (int i = 0; i < e; ++i) out.algebra.push_back(mult_block(eb, eb.basis(i)));
            Code d = 1;
            if (!unitary && pp.p != 2) d = L.exp(static_cast<std::int64_t>((qa + 1) / 2));
            out.gram = zero_block(e);
            for (int i = 0; i < e; ++i)
                for (int j = 0; j < e; ++j) {
                    const Code tau = L.pow(eb.basis(j), static_cast<std::int64_t>(qa));
                    out.gram[i][j] = trace_down(L, E, L.mul(L.mul(eb.basis(i), d), tau));
                }
            return out;
        }
    }
    throw UsageError("unknown torus factor");
}

inline Mat to_mat(const Block& b) {
    Mat m(static_cast<int>(b.size()));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) m(i, j) = b[i][j];
    return m;
}

/// h(x, y) = x^T G sigma(y), sigma = Frobenius x^s (s = 1 for bilinear)
inline Code form_eval(const FiniteField& E, const Mat& G, const std::vector<Code>& x, const std::vector<Code>& y, std::uint64_t s) {
    Code r = 0;
    for (int i = 0; i < G.n; ++i) {
        if (!x[i]) continue;
        for (int j = 0; j < G.n; ++j) {
            if (!y[j] || !G(i, j)) continue;
            const Code yj = s == 1 ? y[j] : E.pow(y[j], static_cast<std::int64_t>(s));
            r = E.add(r, E.mul(E.mul(x[i], G(i, j)), yj));
        }
    }
    return r;
}

inline std::vector<Code> vec_of(std::uint64_t t, int n, std::uint32_t q) {
    std::vector<Code> v(n);
    for (int i = 0; i < n; ++i, t /= q) v[i] = static_cast<Code>(t % q);
    return v;
}

/// Columns of a change of basis P with P^T G sigma(P) equal to the identity (hermitian case).
inline Mat orthonormal_basis(const FiniteField& E, const Mat& G, std::uint64_t q) {
    const int n = G.n;
    std::vector<std::vector<Code>> basis;
    const std::uint64_t total = ipow(E.q(), n);
    while (static_cast<int>(basis.size()) < n) {
        bool found = false;
        for (std::uint64_t t = 1; t < total && !found; ++t) {
            auto v = vec_of(t, n, E.q());
            bool orth = true;
            for (const auto& b : basis)
                if (form_eval(E, G, v, b, q) != 0) {
                    orth = false;
                    break;
                }
            if (!orth) continue;
            const Code h = form_eval(E, G, v, v, q);
            if (!h) continue;
            // scale by c with c^{q+1} = h^{-1}
            const Code target = E.inv(h);
            for (Code c = 1; c < E.q(); ++c)
                if (E.pow(c, static_cast<std::int64_t>(q + 1)) == target) {
                    for (auto& x : v) x = E.mul(x, c);
                    found = true;
                    break;
                }
            if (found) basis.push_back(v);
        }
        ensure(found, "no orthonormal basis for hermitian form");
    }
    Mat P(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) P(i, j) = basis[j][i];
    return P;
}

/// Columns e_0, ..., e_{m-1}, f_{m-1}, ..., f_0 of a symplectic basis: <e_i, f_i> = 1.
inline Mat symplectic_basis(const FiniteField& E, const Mat& G) {
    const int n = G.n;
    require(n % 2 == 0, "alternating form on odd-dimensional space");
    std::vector<std::vector<Code>> es, fs, used;
    const std::uint64_t total = ipow(E.q(), n);
    auto orth_to_used = [&](const std::vector<Code>& v) {
        for (const auto& b : used)
            if (form_eval(E, G, v, b, 1) || form_eval(E, G, b, v, 1)) return false;
        return true;
    };
    while (static_cast<int>(es.size()) * 2 < n) {
        std::vector<Code> e, f;
        for (std::uint64_t t = 1; t < total && e.empty(); ++t) {
            auto v = vec_of(t, n, E.q());
            if (orth_to_used(v)) e = v;
        }
        ensure(!e.empty(), "no isotropic vector");
        for (std::uint64_t t = 1; t < total && f.empty(); ++t) {
            auto v = vec_of(t, n, E.q());
            if (!orth_to_used(v)) continue;
            const Code h = form_eval(E, G, e, v, 1);
            if (!h) continue;
            const Code s = E.inv(h);
            for (auto& x : v) x = E.mul(x, s);
            f = v;
        }
        ensure(!f.empty(), "degenerate alternating form");
        es.push_back(e);
        fs.push_back(f);
        used.push_back(e);
        used.push_back(f);
    }
    Mat P(n);
    const int m = n / 2;
    for (int i = 0; i < m; ++i)
        for (int r = 0; r < n; ++r) {
            P(r, i) = es[i][r];
            P(r, n - 1 - i) = fs[i][r];
        }
    return P;
}

}  // namespace detail

/// Antidiagonal hermitian Gram matrix with ones.
inline Mat unitary_form(int n) {
    Mat J(n);
    for (int i = 0; i < n; ++i) J(i, n - 1 - i) = 1;
    return J;
}

/// Antidiagonal alternating Gram matrix with signs (+1, ..., +1, -1, ..., -1).
inline Mat symplectic_form(const FiniteField& f, int n) {
    Mat J(n);
    for (int i = 0; i < n; ++i) J(i, n - 1 - i) = i < n / 2 ? 1 : f.neg(1);
    return J;
}

inline EtaleTorus build_etale_torus(const std::vector<TorusFactor>& factors, std::uint64_t q, FormKind form) {
    const auto pp = PrimePower::of(q);
    EtaleTorus out;
    out.factors = factors;
    out.form = form;
    out.q = q;
    out.E = form == FormKind::Hermitian ? &gf(pp.p, 2 * pp.k) : &gf(pp.p, pp.k);
    const auto& E = *out.E;
    std::vector<detail::FactorModule> mods;
    int n = 0;
    for (const auto& f : factors) {
        mods.push_back(detail::build_factor(f, q));
        n += mods.back().dim;
    }
    require(n >= 1 && n <= Mat::kMax, "torus rank out of range");
    out.n = n;
    auto embed_block = [&](const detail::Block& b, int offset, bool identity_elsewhere) {
        Mat m = identity_elsewhere ? Mat::identity(n) : Mat(n);
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) m(offset + i, offset + j) = b[i][j];
        return m;
    };
    Mat gram(n);
    std::vector<Mat> gens, alg;
    int off = 0;
    for (const auto& m : mods) {
        gens.push_back(embed_block(m.generator, off, true));
        out.orders.push_back(m.order);
        for (const auto& a : m.algebra) alg.push_back(embed_block(a, off, false));
        if (form != FormKind::None)
            for (int i = 0; i < m.dim; ++i)
                for (int j = 0; j < m.dim; ++j) gram(off + i, off + j) = m.gram[i][j];
        off += m.dim;
    }
    // change of basis V -> standard coordinates: A -> C A C^{-1}
    Mat C = Mat::identity(n);
    if (form == FormKind::Hermitian) {
        const Mat Pv = detail::orthonormal_basis(E, gram, q);
        const Mat Pj = detail::orthonormal_basis(E, unitary_form(n), q);
        C = mat_mul(E, Pj, mat_inverse(E, Pv));
    } else if (form == FormKind::Alternating) {
        const Mat Pv = detail::symplectic_basis(E, gram);
        C = mat_inverse(E, Pv);
    }
    const Mat Ci = mat_inverse(E, C);
    for (const auto& g : gens) out.generators.push_back(mat_mul(E, mat_mul(E, C, g), Ci));
    for (const auto& a : alg) out.algebra_basis.push_back(mat_mul(E, mat_mul(E, C, a), Ci));
    return out;
}

}  // namespace lietype

#endif
