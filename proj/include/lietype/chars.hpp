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
 * @file chars.hpp
 * @brief Class functions, the character table oracle, induction, restriction and Jacquet modules.
 *
 * The oracle diagonalises a random real combination of class matrices
 * (M_i)_{jk} = #{x in C_i : x^{-1} z_k in C_j}, z_k a representative of C_k.
 * Common eigenvectors are the central characters w_j = |C_j| chi(z_j) / chi(1).
 */

#ifndef LIETYPE_CHARS_HPP
#define LIETYPE_CHARS_HPP

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <vector>

#include "groups.hpp"

namespace lietype {

using Complex = std::complex<double>;

/// Tolerance for snapping inner products and multiplicities to integers.
inline constexpr double kSnapTol = 1e-6;

class ClassFunction {
   public:
    ClassFunction() = default;
    ClassFunction(GroupPtr g, std::vector<Complex> v) : g_(std::move(g)), v_(std::move(v)) {
        require(g_ && v_.size() == g_->num_classes(), "class function needs one value per class");
    }
    static ClassFunction constant(const GroupPtr& g, Complex c) { return {g, std::vector<Complex>(g->num_classes(), c)}; }
    static ClassFunction trivial(const GroupPtr& g) { return constant(g, 1.0); }
    /// evaluate an element function at class representatives
    static ClassFunction from_elements(const GroupPtr& g, const std::function<Complex(std::uint32_t)>& f) {
        std::vector<Complex> v;
        for (auto r : g->classes().rep) v.push_back(f(r));
        return {g, std::move(v)};
    }

    const GroupPtr& group_ptr() const { return g_; }
    const Group& group() const { return *g_; }
    std::size_t size() const { return v_.size(); }
    const std::vector<Complex>& values() const { return v_; }
    Complex operator[](std::size_t c) const { return v_[c]; }
    Complex& operator[](std::size_t c) { return v_[c]; }
    Complex at(std::uint32_t element) const { return v_[g_->class_of(element)]; }
    Complex degree() const { return v_[g_->class_of(g_->identity())]; }

    ClassFunction& operator+=(const ClassFunction& o) {
        same(o);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
        return *this;
    }
    ClassFunction& operator-=(const ClassFunction& o) {
        same(o);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
        return *this;
    }
    ClassFunction& operator*=(Complex s) {
        for (auto& x : v_) x *= s;
        return *this;
    }
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    friend ClassFunction operator*(Complex s, ClassFunction a) { return a *= s; }
    friend ClassFunction operator*(ClassFunction a, Complex s) { return a *= s; }
    friend ClassFunction operator-(ClassFunction a) { return a *= -1.0; }
    /// pointwise product
    ClassFunction tensor(const ClassFunction& o) const {
        same(o);
        auto r = *this;
        for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] *= o.v_[i];
        return r;
    }
    ClassFunction conj() const {
        auto r = *this;
        for (auto& x : r.v_) x = std::conj(x);
        return r;
    }
    double max_abs() const {
        double m = 0;
        for (auto x : v_) m = std::max(m, std::abs(x));
        return m;
    }
    bool is_zero(double tol = kSnapTol) const { return max_abs() < tol; }
    bool approx_equal(const ClassFunction& o, double tol = kSnapTol) const {
        same(o);
        for (std::size_t i = 0; i < v_.size(); ++i)
            if (std::abs(v_[i] - o.v_[i]) > tol) return false;
        return true;
    }
    void same(const ClassFunction& o) const {
        if (g_.get() != o.g_.get()) throw UsageError("class functions live on different groups");
    }

   private:
    GroupPtr g_;
    std::vector<Complex> v_;
};

inline Complex inner_product(const ClassFunction& f, const ClassFunction& g) {
    f.same(g);
    const auto& cl = f.group().classes();
    Complex s = 0;
    for (std::size_t c = 0; c < f.size(); ++c) s += static_cast<double>(cl.size[c]) * f[c] * std::conj(g[c]);
    return s / static_cast<double>(f.group().order());
}

inline long long snap_integer(Complex z, const std::string& what) {
    const double r = std::round(z.real());
    if (std::abs(z - Complex(r, 0)) > kSnapTol) throw ConsistencyError(what + " is not an integer: " + std::to_string(z.real()) + "+" + std::to_string(z.imag()) + "i");
    return static_cast<long long>(r);
}

/// inner product of virtual characters, snapped
inline long long int_inner_product(const ClassFunction& f, const ClassFunction& g) {
    return snap_integer(inner_product(f, g), "inner product");
}

struct CharacterTable {
    GroupPtr group;
    std::vector<ClassFunction> irr;
    std::vector<long long> degrees;
    std::uint64_t seed = 0;
    int reseeds = 0;

    std::size_t size() const { return irr.size(); }
};

inline std::uint64_t oracle_seed() {
    if (const char* s = std::getenv("LIETYPE_SEED")) {
        try {
            return std::stoull(s, nullptr, 0);
        } catch (const std::exception&) {
            throw UsageError(std::string("LIETYPE_SEED is not an integer: ") + s);
        }
    }
    return 0x5EED;
}

namespace detail {

/// a[i][j][k] flattened
inline std::vector<std::uint32_t> class_coefficients(const Group& G) {
    const auto& cl = G.classes();
    const std::size_t k = cl.count();
    std::vector<std::uint32_t> a(k * k * k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (auto x : cl.members[i]) {
            const auto xi = G.inverse(x);
            for (std::size_t c = 0; c < k; ++c) {
                const auto y = G.mul(xi, cl.rep[c]);
                ++a[(i * k + cl.class_of[y]) * k + c];
            }
        }
    return a;
}

inline bool lex_less(const ClassFunction& a, const ClassFunction& b) {
    for (std::size_t c = 0; c < a.size(); ++c) {
        const double ar = std::round(a[c].real() * 1e6), br = std::round(b[c].real() * 1e6);
        if (ar != br) return ar > br;
        const double ai = std::round(a[c].imag() * 1e6), bi = std::round(b[c].imag() * 1e6);
        if (ai != bi) return ai > bi;
    }
    return false;
}

}  // namespace detail

/// Irreducible characters by the common-eigenvector method, sorted by degree.
inline CharacterTable compute_character_table(const GroupPtr& G, std::uint64_t seed) {
    const auto& cl = G->classes();
    const std::size_t k = cl.count();
    const auto a = detail::class_coefficients(*G);
    const std::size_t id_class = G->class_of(G->identity());
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    CharacterTable T;
    T.group = G;
    T.seed = seed;
    for (int attempt = 0; attempt <= 10; ++attempt) {
        Eigen::MatrixXd A = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
        for (std::size_t i = 0; i < k; ++i) {
            const double r = U(rng) / static_cast<double>(cl.size[i]);
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t c = 0; c < k; ++c) A(j, c) += r * a[(i * k + j) * k + c];
        }
        Eigen::EigenSolver<Eigen::MatrixXd> es(A);
        if (es.info() != Eigen::Success) continue;
        const auto ev = es.eigenvalues();
        double gap = 1e300, scale = 1e-300;
        for (Eigen::Index i = 0; i < ev.size(); ++i) {
            scale = std::max(scale, std::abs(ev(i)));
            for (Eigen::Index j = i + 1; j < ev.size(); ++j) gap = std::min(gap, std::abs(ev(i) - ev(j)));
        }
        if (k > 1 && gap < 1e-7 * std::max(1.0, scale)) {
            ++T.reseeds;
            continue;
        }
        const auto V = es.eigenvectors();
        T.irr.clear();
        for (std::size_t e = 0; e < k; ++e) {
            std::vector<Complex> w(k);
            const Complex w0 = V(static_cast<Eigen::Index>(id_class), static_cast<Eigen::Index>(e));
            if (std::abs(w0) < 1e-12) throw NumericalError("eigenvector with vanishing identity entry");
            double norm = 0;
            for (std::size_t j = 0; j < k; ++j) {
                w[j] = V(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(e)) / w0;
                norm += std::norm(w[j]) / static_cast<double>(cl.size[j]);
            }
            const double d = std::sqrt(static_cast<double>(G->order()) / norm);
            std::vector<Complex> chi(k);
            for (std::size_t j = 0; j < k; ++j) chi[j] = d * w[j] / static_cast<double>(cl.size[j]);
            T.irr.emplace_back(G, std::move(chi));
        }
        std::sort(T.irr.begin(), T.irr.end(), [](const ClassFunction& x, const ClassFunction& y) {
            const double dx = std::round(x.degree().real()), dy = std::round(y.degree().real());
            if (dx != dy) return dx < dy;
            return detail::lex_less(x, y);
        });
        // clean near-integers and check orthogonality
        double err = 0;
        for (auto& chi : T.irr)
            for (std::size_t j = 0; j < k; ++j) {
                Complex& z = chi[j];
                if (std::abs(z.real() - std::round(z.real())) < 1e-9) z.real(std::round(z.real()));
                if (std::abs(z.imag() - std::round(z.imag())) < 1e-9) z.imag(std::round(z.imag()));
            }
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i; j < k; ++j)
                err = std::max(err, std::abs(inner_product(T.irr[i], T.irr[j]) - Complex(i == j ? 1.0 : 0.0)));
        if (err > kSnapTol) {
            ++T.reseeds;
            continue;
        }
        T.degrees.clear();
        for (const auto& chi : T.irr) T.degrees.push_back(snap_integer(chi.degree(), "degree"));
        return T;
    }
    throw NumericalError("character table of " + G->label() + ": eigenvalue collision after 10 reseeds");
}

/// Cached oracle table for G with the process seed.
inline const CharacterTable& character_table(const GroupPtr& G) {
    static std::mutex mu;
    static std::map<const Group*, std::shared_ptr<CharacterTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(G.get());
    if (it != cache.end() && it->second->group == G) return *it->second;
    auto t = std::make_shared<CharacterTable>(compute_character_table(G, oracle_seed()));
    cache[G.get()] = t;
    return *t;
}

/// max deviation from the first and second orthogonality relations
inline double orthogonality_error(const CharacterTable& T) {
    const auto& G = *T.group;
    const auto& cl = G.classes();
    const std::size_t k = T.size();
    double err = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            err = std::max(err, std::abs(inner_product(T.irr[i], T.irr[j]) - Complex(i == j ? 1.0 : 0.0)));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            Complex s = 0;
            for (const auto& chi : T.irr) s += chi[a] * std::conj(chi[b]);
            const double expect = a == b ? static_cast<double>(cl.centralizer[a]) : 0.0;
            err = std::max(err, std::abs(s - expect) / static_cast<double>(cl.centralizer[a]));
        }
    return err;
}

// ---------------------------------------------------------------------------
// induction, restriction, Jacquet modules

/// Ind_H^G of a function on the elements of H (H and G share the ambient matrices).
inline ClassFunction induce_elements(const Group& H, const std::function<Complex(std::uint32_t)>& f, const GroupPtr& G) {
    std::vector<Complex> acc(G->num_classes(), 0.0);
    for (std::uint32_t h = 0; h < H.order(); ++h) {
        auto g = G->find(H.element(h));
        if (!g) throw UsageError(H.label() + " is not contained in " + G->label());
        acc[G->class_of(*g)] += f(h);
    }
    const auto& cl = G->classes();
    for (std::size_t c = 0; c < acc.size(); ++c) acc[c] *= static_cast<double>(cl.centralizer[c]) / static_cast<double>(H.order());
    return {G, std::move(acc)};
}

inline ClassFunction induce(const ClassFunction& f, const GroupPtr& G) {
    return induce_elements(f.group(), [&](std::uint32_t h) { return f.at(h); }, G);
}

inline ClassFunction restrict_to(const ClassFunction& f, const GroupPtr& H) {
    const Group& G = f.group();
    return ClassFunction::from_elements(H, [&](std::uint32_t h) {
        auto g = G.find(H->element(h));
        if (!g) throw UsageError(H->label() + " is not contained in " + G.label());
        return f.at(*g);
    });
}

/// m -> (1/|N|) sum_{n in N} f(mn), a class function on the Levi M
inline ClassFunction jacquet(const ClassFunction& f, const Parabolic& P) {
    const Group& G = f.group();
    const Group& N = *P.N;
    const FiniteField& E = G.field();
    return ClassFunction::from_elements(P.M, [&](std::uint32_t m) {
        Complex s = 0;
        const Mat& mm = P.M->element(m);
        for (const auto& n : N.elements()) {
            auto g = G.find(mat_mul(E, mm, n));
            ensure(g.has_value(), "parabolic not contained in the group");
            s += f.at(*g);
        }
        return s / static_cast<double>(N.order());
    });
}

/// Harish-Chandra induction: inflate rho from M to P through the Levi projection, then induce.
inline ClassFunction harish_chandra_induce(const ClassFunction& rho, const Parabolic& P, const GroupPtr& G) {
    const Group& M = *P.M;
    return induce_elements(*P.P, [&](std::uint32_t p) {
        return rho.at(M.id_of(levi_projection(P.P->element(p), P.composition)));
    }, G);
}

/// multiplicities against the oracle table, checked by reconstruction
inline std::vector<long long> decompose(const ClassFunction& f, const CharacterTable& T) {
    require(f.group_ptr().get() == T.group.get(), "class function and table on different groups");
    std::vector<long long> m;
    ClassFunction rec = ClassFunction::constant(T.group, 0.0);
    for (const auto& chi : T.irr) {
        m.push_back(snap_integer(inner_product(f, chi), "multiplicity"));
        rec += static_cast<double>(m.back()) * chi;
    }
    if (!rec.approx_equal(f)) throw ConsistencyError("decomposition does not reconstruct the class function");
    return m;
}

inline std::vector<long long> decompose(const ClassFunction& f) { return decompose(f, character_table(f.group_ptr())); }

inline bool is_proper(const Parabolic& P, const Group& G) { return P.P->order() != G.order(); }

/// all Jacquet modules at proper standard parabolics vanish
inline bool is_cuspidal(const ClassFunction& f) {
    for (const auto& P : standard_parabolics(f.group_ptr()))
        if (is_proper(P, f.group()) && !jacquet(f, P).is_zero()) return false;
    return true;
}

inline std::vector<std::size_t> cuspidal_indices(const CharacterTable& T) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < T.size(); ++i)
        if (is_cuspidal(T.irr[i])) out.push_back(i);
    return out;
}

struct CuspidalSupport {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (parabolic index, cuspidal index in the Levi table)
    bool unique_association_class = false;
};

namespace detail {

/// is there g in G with g M g^{-1} = M' and rho'(g m g^{-1}) = rho(m)?
inline bool associated(const Group& G, const Parabolic& P1, const ClassFunction& r1, const Parabolic& P2, const ClassFunction& r2) {
    if (P1.M->order() != P2.M->order()) return false;
    const FiniteField& E = G.field();
    const Group& M1 = *P1.M;
    const Group& M2 = *P2.M;
    for (std::uint32_t g = 0; g < G.order(); ++g) {
        const Mat& gm = G.element(g);
        const Mat& gi = G.element(G.inverse(g));
        bool ok = true;
        for (auto x : M1.generators()) {
            if (!M2.contains(mat_mul(E, mat_mul(E, gm, M1.element(x)), gi))) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        for (std::size_t c = 0; c < M1.num_classes() && ok; ++c) {
            const auto m = M1.classes().rep[c];
            const auto y = M2.id_of(mat_mul(E, mat_mul(E, gm, M1.element(m)), gi));
            if (std::abs(r1[c] - r2.at(y)) > kSnapTol) ok = false;
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace detail

/// Cuspidal pairs (M, rho) with <Jacquet_P(pi), rho> nonzero, and whether they form one association class.
inline CuspidalSupport cuspidal_support(const ClassFunction& pi) {
    const GroupPtr& G = pi.group_ptr();
    const auto ps = standard_parabolics(G);
    CuspidalSupport cs;
    for (std::size_t p = 0; p < ps.size(); ++p) {
        const auto& T = character_table(ps[p].M);
        const ClassFunction j = ps[p].P->order() == G->order() ? restrict_to(pi, ps[p].M) : jacquet(pi, ps[p]);
        for (auto c : cuspidal_indices(T))
            if (int_inner_product(j, T.irr[c]) != 0) cs.pairs.emplace_back(p, c);
    }
    cs.unique_association_class = !cs.pairs.empty();
    for (std::size_t i = 1; i < cs.pairs.size() && cs.unique_association_class; ++i) {
        const auto& [p0, c0] = cs.pairs[0];
        const auto& [pi_, ci] = cs.pairs[i];
        if (!detail::associated(*G, ps[p0], character_table(ps[p0].M).irr[c0], ps[pi_], character_table(ps[pi_].M).irr[ci]))
            cs.unique_association_class = false;
    }
    return cs;
}

}  // namespace lietype

#endif
