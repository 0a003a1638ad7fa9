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
 * @file dlchar.hpp
 * @brief Deligne-Lusztig virtual characters R_T(theta) and related constructions.
 *
 * Two constructions are provided.
 *
 * Levi route (GL_n): R_T(theta) = Ind_P^G (R_1 x ... x R_r) where T = prod F_{q^{a_i}}^x,
 * P has Levi GL_{a_1} x ... x GL_{a_r} and R_i is the Coxeter character of GL_{a_i}:
 *
 *   R_cox(theta)(su) = prod_{i=1}^{t} (1 - Q^i) sum_{lambda} theta(lambda)
 *
 * when the characteristic polynomial of s is f^m with f irreducible of degree d,
 * Q = q^d, lambda running over the roots of f in F_{q^a}, t + 1 the number of
 * Jordan blocks of u over F_{q^d}. The value is 0 otherwise.
 *
 * Element route (GL_n, U_n with n <= 3): the character formula with centralizers
 * of semisimple elements and Green functions of G.
 */

#ifndef LIETYPE_DLCHAR_HPP
#define LIETYPE_DLCHAR_HPP

#include <numeric>
#include <set>

#include "chars.hpp"
#include "symmetric.hpp"
#include "tori.hpp"

namespace lietype {

struct TorusCharacterPair {
    TorusClass torus;
    std::vector<std::uint64_t> exponents;  // one per factor, modulo the factor order
    std::uint64_t q = 2;

    std::vector<std::uint64_t> moduli() const {
        std::vector<std::uint64_t> m;
        for (const auto& f : torus.factors) m.push_back(f.order(q));
        return m;
    }
    std::string label() const {
        std::string s = torus.label() + " theta=(";
        for (std::size_t i = 0; i < exponents.size(); ++i) s += (i ? "," : "") + std::to_string(exponents[i]);
        return s + ")";
    }
};

inline TorusCharacterPair make_torus_character(const TorusClass& t, std::vector<std::uint64_t> e, std::uint64_t q) {
    require(is_prime_power(q), "q must be a prime power");
    require(e.size() == t.factors.size(), "one character exponent per torus factor required");
    TorusCharacterPair p{t, std::move(e), q};
    const auto mods = p.moduli();
    for (std::size_t i = 0; i < mods.size(); ++i) p.exponents[i] %= mods[i];
    return p;
}

inline TorusCharacterPair trivial_character(const TorusClass& t, std::uint64_t q) {
    return make_torus_character(t, std::vector<std::uint64_t>(t.factors.size(), 0), q);
}

/// every character of every torus class of the family
inline std::vector<TorusCharacterPair> all_torus_characters(Family fam, int n, std::uint64_t q) {
    std::vector<TorusCharacterPair> out;
    for (const auto& t : torus_classes(fam, n)) {
        const auto mods = trivial_character(t, q).moduli();
        std::vector<std::uint64_t> e(mods.size(), 0);
        while (true) {
            out.push_back(make_torus_character(t, e, q));
            std::size_t i = 0;
            while (i < e.size() && ++e[i] == mods[i]) e[i++] = 0;
            if (i == e.size()) break;
        }
    }
    return out;
}

/// (epsilon_G, epsilon_T)
inline std::pair<int, int> epsilon_signs(const TorusClass& t) {
    return {sign_of_rank(group_split_rank(t.family, t.n)), sign_of_rank(t.split_rank)};
}

/// epsilon_G epsilon_T |G|_{p'} / |T|
inline BigInt dl_dimension(const TorusClass& t, std::uint64_t q) {
    const auto [eg, et] = epsilon_signs(t);
    const BigInt gp = p_part_split(family_order_polynomial(t.family, t.n), q).second;
    const BigInt tt = torus_order(t, q);
    ensure(gp % tt == 0, "torus order does not divide |G|_p'");
    return BigInt(eg * et) * (gp / tt);
}

// ---------------------------------------------------------------------------
// Weyl group of a torus acting on characters

namespace detail {

/// multiplier generating the Frobenius action on a factor
inline std::int64_t frobenius_multiplier(Family fam, std::uint64_t q) {
    return fam == Family::U ? -static_cast<std::int64_t>(q) : static_cast<std::int64_t>(q);
}

inline std::uint64_t mulmod_signed(std::uint64_t e, std::int64_t m, std::uint64_t mod) {
    const auto r = static_cast<std::int64_t>((static_cast<__int128>(e) * m) % static_cast<__int128>(mod));
    return static_cast<std::uint64_t>(mod_floor(r, static_cast<std::int64_t>(mod)));
}

/// orbit of an exponent under x -> x * mult, a steps
inline std::vector<std::uint64_t> frobenius_orbit(std::uint64_t e, int a, std::int64_t mult, std::uint64_t mod) {
    std::vector<std::uint64_t> o;
    std::uint64_t x = e;
    for (int j = 0; j < a; ++j) {
        o.push_back(x);
        x = mulmod_signed(x, mult, mod);
    }
    return o;
}

}  // namespace detail

/// #{w in W(T) : w theta = theta'}, zero for different torus classes
inline long long weyl_transport_count(const TorusCharacterPair& a, const TorusCharacterPair& b) {
    require(a.q == b.q && a.torus.family == b.torus.family && a.torus.n == b.torus.n, "pairs in different groups");
    require(a.torus.family == Family::GL || a.torus.family == Family::U, "Weyl counts need GL or U tori");
    if (a.torus.partition != b.torus.partition) return 0;
    const auto mods = a.moduli();
    const auto mult = detail::frobenius_multiplier(a.torus.family, a.q);
    const std::size_t r = mods.size();
    // for each pair (i, j) of equal-degree factors, number of Frobenius powers with e_j^(power) = e'_i
    std::vector<std::vector<long long>> ways(r, std::vector<long long>(r, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const int ai = a.torus.factors[i].a, aj = a.torus.factors[j].a;
            if (ai != aj) continue;
            for (auto x : detail::frobenius_orbit(a.exponents[j], aj, mult, mods[j]))
                if (x == b.exponents[i]) ++ways[i][j];
        }
    // permanent over degree-preserving bijections
    std::vector<std::size_t> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    long long total = 0;
    do {
        long long prod = 1;
        for (std::size_t i = 0; i < r && prod; ++i) prod *= ways[i][perm[i]];
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline bool is_regular_pair(const TorusCharacterPair& p) { return weyl_transport_count(p, p) == 1; }

/// <R_T(theta), R_T'(theta')> by the Weyl count
inline long long dl_inner_product(const TorusCharacterPair& a, const TorusCharacterPair& b) { return weyl_transport_count(a, b); }

/// Base change to F_{q^L}: multiset of exponents mod q^L - 1 (GL tori).
inline std::multiset<std::uint64_t> geometric_datum(const TorusCharacterPair& p, int L) {
    require(p.torus.family == Family::GL, "geometric conjugacy is implemented for GL tori");
    const std::uint64_t big = ipow(p.q, L) - 1;
    std::multiset<std::uint64_t> out;
    const auto mods = p.moduli();
    for (std::size_t i = 0; i < mods.size(); ++i) {
        const int a = p.torus.factors[i].a;
        require(L % a == 0, "base change degree must be a multiple of every factor degree");
        const std::uint64_t lifted = static_cast<std::uint64_t>((static_cast<__int128>(p.exponents[i]) * (big / mods[i])) % big);
        for (auto x : detail::frobenius_orbit(lifted, a, static_cast<std::int64_t>(p.q), big)) out.insert(x);
    }
    return out;
}

inline bool geometric_conjugacy_test(const TorusCharacterPair& a, const TorusCharacterPair& b) {
    require(a.torus.family == Family::GL && b.torus.family == Family::GL, "geometric conjugacy is implemented for GL tori");
    require(a.q == b.q && a.torus.n == b.torus.n, "pairs in different groups");
    int L = 1;
    for (const auto* p : {&a, &b})
        for (const auto& f : p->torus.factors) L = std::lcm(L, f.a);
    return geometric_datum(a, L) == geometric_datum(b, L);
}

// ---------------------------------------------------------------------------
// Levi route

namespace detail {

inline Mat poly_of_matrix(const FiniteField& f, const FqPoly& p, const Mat& x) {
    Mat acc(x.n);
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = mat_mul(f, acc, x);
        for (int k = 0; k < x.n; ++k) acc(k, k) = f.add(acc(k, k), p[i]);
    }
    return acc;
}

inline Mat block_of(const Mat& m, int offset, int size) {
    Mat b(size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) b(i, j) = m(offset + i, offset + j);
    return b;
}

}  // namespace detail

/// Coxeter character R_cox(theta_e) of GL_a(F_q) at g, theta_e(x) = exp(2 pi i e log x / (q^a - 1)).
inline Complex coxeter_value(const FiniteField& F, int a, std::uint64_t e, const Mat& g) {
    const auto fac = factor_monic(F, charpoly(F, g));
    if (fac.size() != 1) return 0.0;
    const FqPoly& f = fac[0].first;
    const int d = static_cast<int>(f.size()) - 1;
    const int ker = a - rank(F, detail::poly_of_matrix(F, f, g));
    ensure(ker % d == 0, "kernel dimension not a multiple of the factor degree");
    const int t = ker / d - 1;
    const FiniteField& K = gf(F.p(), F.k() * a);
    const std::uint64_t mod = K.q() - 1;
    Complex s = 0;
    const auto roots = roots_in(F, f, K);
    ensure(static_cast<int>(roots.size()) == d, "irreducible factor does not split in the torus field");
    for (auto lam : roots) s += root_of_unity(static_cast<std::int64_t>((static_cast<__int128>(e) * K.log(lam)) % mod), mod);
    const double Q = static_cast<double>(ipow(F.q(), d));
    double prod = 1;
    for (int i = 1; i <= t; ++i) prod *= 1.0 - std::pow(Q, i);
    return prod * s;
}

inline const Parabolic& parabolic_with_composition(const GroupPtr& G, const std::vector<int>& comp) {
    for (const auto& P : standard_parabolics(G))
        if (P.composition == comp) return P;
    throw UsageError("no standard parabolic with composition " + partition_string(comp));
}

inline ClassFunction dl_character_levi(const GroupPtr& G, const TorusCharacterPair& tc) {
    require(G->family() == Family::GL && tc.torus.family == Family::GL, "Levi route needs GL_n");
    require(G->n() == tc.torus.n && G->q() == tc.q, "torus and group do not match");
    const auto& comp = tc.torus.partition;
    const Parabolic& P = parabolic_with_composition(G, comp);
    const FiniteField& F = G->field();
    auto rho = ClassFunction::from_elements(P.M, [&](std::uint32_t m) {
        const Mat& x = P.M->element(m);
        Complex v = 1.0;
        int off = 0;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            v *= coxeter_value(F, comp[i], tc.exponents[i], detail::block_of(x, off, comp[i]));
            off += comp[i];
        }
        return v;
    });
    return harish_chandra_induce(rho, P, G);
}

// ---------------------------------------------------------------------------
// element route

/// F_q-rank of the centralizer of a semisimple element, from its characteristic polynomial.
inline int centralizer_split_rank(const Group& G, const Mat& s) {
    const FiniteField& E = G.field();
    const auto fac = factor_monic(E, charpoly(E, s));
    if (G.family() == Family::GL) {
        int r = 0;
        for (const auto& [f, m] : fac) r += m;
        return r;
    }
    require(G.family() == Family::U, "centralizer ranks are available for GL and U");
    const std::uint64_t q = G.q();
    auto dual = [&](const FqPoly& f) {
        // monic multiple of x^d conj(f)(1/x)
        FqPoly g(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) g[f.size() - 1 - i] = E.pow(f[i], static_cast<std::int64_t>(q));
        const Code lead = g.back();
        for (auto& c : g) c = E.div(c, lead);
        return g;
    };
    int r = 0;
    std::set<FqPoly> seen;
    for (const auto& [f, m] : fac) {
        if (seen.count(f)) continue;
        const FqPoly g = dual(f);
        seen.insert(f);
        seen.insert(g);
        r += g == f ? m / 2 : m;
    }
    return r;
}

inline std::uint64_t p_prime_part(std::uint64_t x, std::uint64_t p) {
    while (x % p == 0) x /= p;
    return x;
}

/// Green function Q_T(u) of G for a torus class, at a unipotent element.
inline BigInt green_function_value(const TorusClass& t, const Group& G, const Mat& u) {
    const Partition lambda = unipotent_jordan_type(G.field(), u);
    const IntPolynomial Q = t.family == Family::U ? unitary_green_polynomial(lambda, t.partition) : green_polynomial(lambda, t.partition);
    return Q.evaluate(BigInt(G.q()));
}

inline ClassFunction dl_character_elements(const GroupPtr& G, const TorusCharacterPair& tc, const TorusEmbedding& emb) {
    require(G->family() == Family::GL || G->family() == Family::U, "element route needs GL or U");
    require(G->n() <= 3, "element route is implemented for n <= 3");
    require(tc.torus.family == G->family() && tc.torus.n == G->n(), "torus and group do not match");
    const auto mods = tc.moduli();
    std::vector<Complex> theta(emb.size());
    for (std::size_t i = 0; i < emb.size(); ++i) {
        Complex v = 1.0;
        for (std::size_t f = 0; f < mods.size(); ++f)
            v *= root_of_unity(static_cast<std::int64_t>((static_cast<__int128>(tc.exponents[f]) * emb.coords[i][f]) % mods[f]), mods[f]);
        theta[i] = v;
    }
    const int eps_T = sign_of_rank(tc.torus.split_rank);
    const auto& cl = G->classes();
    const BigInt T_order(emb.size());
    return ClassFunction::from_elements(G, [&](std::uint32_t g) -> Complex {
        const auto [s, u] = jordan_decompose(*G, g);
        const auto sc = G->class_of(s);
        if (G->is_scalar(s)) {
            const auto pos = emb.position.at(s);
            return theta[pos] * static_cast<double>(green_function_value(tc.torus, *G, G->element(u)));
        }
        Complex S = 0;
        bool meets = false;
        for (std::size_t i = 0; i < emb.size(); ++i)
            if (G->class_of(emb.ids[i]) == sc) {
                S += theta[i];
                meets = true;
            }
        if (!meets) return 0.0;
        if (u == G->identity()) {
            const int eps_C = sign_of_rank(centralizer_split_rank(*G, G->element(s)));
            const BigInt cp(p_prime_part(cl.centralizer[sc], G->p()));
            ensure(cp % T_order == 0, "torus order does not divide the centralizer");
            return static_cast<double>(eps_C * eps_T) * static_cast<double>(cp / T_order) * S;
        }
        // n <= 3: the centralizer is GL_2 x GL_1 or U_2 x U_1 and u is regular in it
        return S;
    });
}

inline ClassFunction dl_character_elements(const GroupPtr& G, const TorusCharacterPair& tc) {
    return dl_character_elements(G, tc, embed_torus_class(G, tc.torus));
}

/// R_T(theta) on G: the Levi route for GL, the element route for U.
inline ClassFunction dl_character(const GroupPtr& G, const TorusCharacterPair& tc) {
    if (G->family() == Family::GL) return dl_character_levi(G, tc);
    return dl_character_elements(G, tc);
}

/// Literal count (1/|T|) #{g : gTg^{-1} = T, g theta = theta'} on an embedded torus.
inline long long dl_inner_product_gcount(const TorusEmbedding& emb, const TorusCharacterPair& a, const TorusCharacterPair& b) {
    const auto W = algebra_normalizer_weyl(emb);
    const auto mods = a.moduli();
    auto theta = [&](const TorusCharacterPair& p, std::size_t i) {
        std::uint64_t acc = 0;
        // compare as a vector of residues scaled to a common modulus
        std::uint64_t L = 1;
        for (auto m : mods) L = std::lcm(L, m);
        for (std::size_t f = 0; f < mods.size(); ++f) acc += (p.exponents[f] * emb.coords[i][f] % mods[f]) * (L / mods[f]);
        return acc % L;
    };
    long long count = 0;
    for (const auto& perm : W.action) {
        bool ok = true;
        for (std::size_t i = 0; i < emb.size() && ok; ++i)
            if (theta(a, i) != theta(b, perm[i])) ok = false;
        if (ok) ++count;
    }
    return count;
}

// ---------------------------------------------------------------------------
// named characters of GL_n

/// Green's cuspidal character attached to a regular character of F_{q^n}^x: (-1)^{n-1} R_cox.
inline ClassFunction green_cuspidal(const GroupPtr& G, std::uint64_t e) {
    require(G->family() == Family::GL, "green_cuspidal needs GL_n");
    const int n = G->n();
    const std::uint64_t q = G->q();
    require(is_regular_character(e, static_cast<std::uint32_t>(n), q), "character is not regular");
    const double sign = n % 2 ? 1.0 : -1.0;
    return ClassFunction::from_elements(G, [&](std::uint32_t g) { return sign * coxeter_value(G->field(), n, e, G->element(g)); });
}

/// Ind_B^G(alpha x beta) for GL_2, characters of F_q^x given by exponents.
inline ClassFunction ps_character(const GroupPtr& G, std::uint64_t alpha, std::uint64_t beta) {
    require(G->family() == Family::GL && G->n() == 2, "ps_character needs GL_2");
    const FiniteField& F = G->field();
    const std::uint64_t mod = F.q() - 1;
    const Parabolic& B = parabolic_with_composition(G, {1, 1});
    auto rho = ClassFunction::from_elements(B.M, [&](std::uint32_t m) {
        const Mat& x = B.M->element(m);
        return root_of_unity(static_cast<std::int64_t>((alpha * F.log(x(0, 0)) + beta * F.log(x(1, 1))) % mod), mod);
    });
    return harish_chandra_induce(rho, B, G);
}

struct PsRestriction {
    std::uint64_t alpha = 0, beta = 0;
    std::uint64_t ratio_order = 1;  // order of alpha / beta
    long long components = 0;       // <Res, Res> on SL_2
};

/// Restrictions to SL_2 of the irreducible Ps(alpha, beta), alpha != beta.
inline std::vector<PsRestriction> ps_restrictions(std::uint64_t q) {
    auto G = build_group(Family::GL, 2, q);
    auto S = build_group(Family::SL, 2, q);
    const std::uint64_t mod = q - 1;
    std::vector<PsRestriction> out;
    for (std::uint64_t a = 0; a < mod; ++a)
        for (std::uint64_t b = a + 1; b < mod; ++b) {
            PsRestriction r{a, b};
            r.ratio_order = mod / std::gcd((a + mod - b) % mod, mod);
            auto res = restrict_to(ps_character(G, a, b), S);
            r.components = int_inner_product(res, res);
            out.push_back(r);
        }
    return out;
}

/// epsilon_G epsilon_T R_T(theta) for regular theta, checked irreducible.
inline ClassFunction macdonald_character(const GroupPtr& G, const TorusCharacterPair& tc) {
    require(is_regular_pair(tc), "theta is not regular");
    const auto [eg, et] = epsilon_signs(tc.torus);
    auto chi = static_cast<double>(eg * et) * dl_character(G, tc);
    if (int_inner_product(chi, chi) != 1) throw ConsistencyError("Macdonald character is not irreducible");
    return chi;
}

struct CuspidalityReport {
    bool cuspidal = false;
    bool anisotropic = false;
    bool consistent() const { return cuspidal == anisotropic; }
};

inline CuspidalityReport cuspidality_check(const TorusClass& t, const ClassFunction& R) {
    return {is_cuspidal(R), t.anisotropic_mod_center};
}

// ---------------------------------------------------------------------------
// the unipotent cuspidal of U_3

struct U3Report {
    std::uint64_t q = 2;
    long long dimension = 0;           // value of R_T 1 at the identity
    long long expected_dimension = 0;  // epsilon_G epsilon_T |G|_p' / |T|
    long long norm = 0;                // <R, R>
    long long pairing_with_split = 0;  // <R, R_{T_0} 1>
    int sign = 0;                      // R = sign (1 - St + 2 pi), 0 if no such sign
    long long pi_degree = 0;
    bool pi_cuspidal = false;
    std::size_t pi_index = 0;
    std::vector<long long> multiplicities;
};

inline U3Report u3_unipotent_decomposition(std::uint64_t q) {
    auto G = build_group(Family::U, 3, q);
    const auto cls = unitary_torus_classes(3);
    const TorusClass& cube = cls.back();  // (1,1,1)
    const TorusClass& t0 = cls[1];        // (2,1), maximally split
    ensure(cube.partition == Partition({1, 1, 1}) && t0.partition == Partition({2, 1}), "unexpected torus order");
    const auto R = dl_character(G, trivial_character(cube, q));
    const auto R0 = dl_character(G, trivial_character(t0, q));
    const auto& T = character_table(G);
    U3Report r;
    r.q = q;
    r.dimension = snap_integer(R.degree(), "dimension");
    r.expected_dimension = static_cast<long long>(dl_dimension(cube, q));
    r.norm = int_inner_product(R, R);
    r.pairing_with_split = int_inner_product(R, R0);
    r.multiplicities = decompose(R, T);
    const long long st_deg = static_cast<long long>(ipow(q, 3));
    const long long pi_deg = static_cast<long long>(q * q - q);
    // identify the constituents
    std::optional<std::size_t> triv, st, pi;
    for (std::size_t i = 0; i < T.size(); ++i) {
        if (!r.multiplicities[i]) continue;
        if (T.irr[i].approx_equal(ClassFunction::trivial(G))) triv = i;
        else if (T.degrees[i] == st_deg) st = i;
        else if (T.degrees[i] == pi_deg) pi = i;
    }
    if (!pi) throw ConsistencyError("no constituent of degree q^2 - q in R_T 1");
    r.pi_index = *pi;
    r.pi_degree = T.degrees[*pi];
    r.pi_cuspidal = is_cuspidal(T.irr[*pi]);
    if (!r.pi_cuspidal) throw ConsistencyError("the degree q^2 - q constituent is not cuspidal");
    if (triv && st) {
        for (int sign : {1, -1}) {
            auto expect = ClassFunction::trivial(G) - T.irr[*st] + 2.0 * T.irr[*pi];
            if (R.approx_equal(static_cast<double>(sign) * expect)) r.sign = sign;
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// dimension identities

/// P = |GL_2m|_p' / (q^m - 1)^2 and D = prod_{i<2m} (q^i - 1) as polynomials
inline std::pair<IntPolynomial, IntPolynomial> st2_id2_polynomials(int m) {
    require(m >= 1, "m must be positive");
    IntPolynomial gp{BigInt(1)};
    for (int i = 1; i <= 2 * m; ++i) gp *= IntPolynomial::x_pow_minus_one(i);
    const IntPolynomial t = IntPolynomial::x_pow_minus_one(m);
    auto [q1, r1] = gp.divmod(t);
    auto [P, r2] = q1.divmod(t);
    ensure(r1.is_zero() && r2.is_zero(), "(q^m - 1)^2 does not divide |GL_2m|_p'");
    IntPolynomial D{BigInt(1)};
    for (int i = 1; i <= 2 * m - 1; ++i) D *= IntPolynomial::x_pow_minus_one(i);
    return {P, D};
}

/// ((P + D)/2, (P - D)/2), the dimensions of St_2 and Id_2
inline std::pair<BigInt, BigInt> st2_id2_dimensions(int m, std::uint64_t q) {
    const auto [P, D] = st2_id2_polynomials(m);
    const BigInt p = P.evaluate(BigInt(q)), d = D.evaluate(BigInt(q));
    if ((p + d) % 2 != 0 || (p - d) % 2 != 0) throw ConsistencyError("P +- D is odd");
    const BigInt st = (p + d) / 2, id = (p - d) / 2;
    if (id <= 0 || st != id * BigInt(ipow(q, m))) throw ConsistencyError("dimension ratio is not q^m");
    return {st, id};
}

/// exact identity P + D = q^m (P - D)
inline bool st2_id2_identity(int m) {
    const auto [P, D] = st2_id2_polynomials(m);
    return P + D == IntPolynomial::monomial(m) * (P - D);
}

/// scale by |GL_{n m}(F_q)|_p' / |GL_n(F_{q^m})|_p'
inline std::vector<BigInt> jordan_dimension_scale(int n_blocks, int m, std::uint64_t q, const std::vector<long long>& dims) {
    require(n_blocks >= 1 && m >= 1, "block counts must be positive");
    const BigInt big = p_part_split(gl_order_polynomial(n_blocks * m), q).second;
    const BigInt small = p_part_split(gl_order_polynomial(n_blocks), ipow(q, m)).second;
    if (big % small != 0) throw ConsistencyError("non-integral Jordan scaling");
    const BigInt s = big / small;
    std::vector<BigInt> out;
    for (auto d : dims) out.push_back(BigInt(d) * s);
    for (std::size_t i = 1; i < out.size(); ++i)
        ensure(out[i] * BigInt(dims[0]) == out[0] * BigInt(dims[i]), "Jordan scaling does not preserve ratios");
    return out;
}

// ---------------------------------------------------------------------------
// points of x y^q - x^q y = 1

struct DrinfeldReport {
    std::uint64_t q = 2;
    int d = 1;
    std::uint64_t count = 0;
    std::uint64_t group_order = 0;  // |SL_2(F_q)|
    std::uint64_t orbits = 0;
    bool action_preserves_curve = true;
    bool free_action = true;
};

inline DrinfeldReport drinfeld_count(std::uint64_t q, int d) {
    require(is_prime_power(q) && d >= 1, "need a prime power q and d >= 1");
    require(ipow(q, d) <= (1u << 16), "field too large");
    const FiniteField& K = gf_ext(q, static_cast<std::uint32_t>(d));
    const FiniteField& F = gf(q);
    const Embedding& emb = embedding(F, K);
    DrinfeldReport r;
    r.q = q;
    r.d = d;
    auto on_curve = [&](Code x, Code y) {
        return K.sub(K.mul(x, K.pow(y, static_cast<std::int64_t>(q))), K.mul(K.pow(x, static_cast<std::int64_t>(q)), y)) == 1;
    };
    std::vector<std::pair<Code, Code>> pts;
    for (Code x = 0; x < K.q(); ++x)
        for (Code y = 0; y < K.q(); ++y)
            if (on_curve(x, y)) pts.emplace_back(x, y);
    r.count = pts.size();
    std::vector<std::array<Code, 4>> sl2;
    for (Code a = 0; a < F.q(); ++a)
        for (Code b = 0; b < F.q(); ++b)
            for (Code c = 0; c < F.q(); ++c)
                for (Code e = 0; e < F.q(); ++e)
                    if (F.sub(F.mul(a, e), F.mul(b, c)) == 1) sl2.push_back({emb(a), emb(b), emb(c), emb(e)});
    r.group_order = sl2.size();
    std::set<std::pair<Code, Code>> done;
    for (const auto& pt : pts) {
        if (done.count(pt)) continue;
        std::set<std::pair<Code, Code>> orbit;
        for (const auto& g : sl2) {
            const Code x = K.add(K.mul(g[0], pt.first), K.mul(g[1], pt.second));
            const Code y = K.add(K.mul(g[2], pt.first), K.mul(g[3], pt.second));
            if (!on_curve(x, y)) r.action_preserves_curve = false;
            orbit.insert({x, y});
        }
        if (orbit.size() != sl2.size()) r.free_action = false;
        done.insert(orbit.begin(), orbit.end());
        ++r.orbits;
    }
    return r;
}

}  // namespace lietype

#endif
