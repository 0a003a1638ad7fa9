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

#ifndef LIETYPE_DUALITY_HPP
#define LIETYPE_DUALITY_HPP

#include <random>

#include "lietype/chars.hpp"
#include "lietype/dlchar.hpp"

namespace lietype {

/// Integer combination of the oracle irreducibles of a group.
class GrothendieckElement {
public:
    GrothendieckElement() = default;
    GrothendieckElement(GroupPtr g, std::vector<long long> c) : g_(std::move(g)), c_(std::move(c)) {
        require(c_.size() == character_table(g_).size(), "coefficient count differs from the number of irreducibles");
    }

    static GrothendieckElement from_class_function(const ClassFunction& f) {
        return GrothendieckElement(f.group_ptr(), decompose(f));
    }
    static GrothendieckElement basis(const GroupPtr& g, std::size_t i) {
        std::vector<long long> c(character_table(g).size(), 0);
        require(i < c.size(), "irreducible index out of range");
        c[i] = 1;
        return GrothendieckElement(g, std::move(c));
    }

    const GroupPtr& group_ptr() const { return g_; }
    const std::vector<long long>& coefficients() const { return c_; }
    long long operator[](std::size_t i) const { return c_[i]; }

    ClassFunction to_class_function() const {
        const auto& T = character_table(g_);
        ClassFunction f = ClassFunction::constant(g_, 0.0);
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i]) f = f + static_cast<double>(c_[i]) * T.irr[i];
        return f;
    }

    long long degree() const {
        const auto& T = character_table(g_);
        long long d = 0;
        for (std::size_t i = 0; i < c_.size(); ++i) d += c_[i] * T.degrees[i];
        return d;
    }

    GrothendieckElement operator+(const GrothendieckElement& o) const { return combine(o, 1); }
    GrothendieckElement operator-(const GrothendieckElement& o) const { return combine(o, -1); }
    GrothendieckElement operator-() const {
        auto r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    bool operator==(const GrothendieckElement& o) const { return g_ == o.g_ && c_ == o.c_; }

    /// (sign, index) when this is plus or minus a single irreducible
    std::optional<std::pair<int, std::size_t>> signed_irreducible() const {
        std::optional<std::pair<int, std::size_t>> out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!c_[i]) continue;
            if (out || (c_[i] != 1 && c_[i] != -1)) return std::nullopt;
            out = std::make_pair(static_cast<int>(c_[i]), i);
        }
        return out;
    }

private:
    GrothendieckElement combine(const GrothendieckElement& o, long long s) const {
        require(g_ == o.g_, "Grothendieck elements of different groups");
        auto r = *this;
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += s * o.c_[i];
        return r;
    }

    GroupPtr g_;
    std::vector<long long> c_;
};

inline long long inner_product(const GrothendieckElement& a, const GrothendieckElement& b) {
    require(a.group_ptr() == b.group_ptr(), "Grothendieck elements of different groups");
    long long s = 0;
    for (std::size_t i = 0; i < a.coefficients().size(); ++i) s += a[i] * b[i];
    return s;
}

/// number of positive roots of the group's root system
inline int positive_root_count(const Group& G) {
    const int n = G.n();
    switch (G.family()) {
        case Family::GL:
        case Family::SL:
        case Family::U: return n * (n - 1) / 2;
        case Family::Sp: return (n / 2) * (n / 2);
    }
    return 0;
}

/// Alternating sum of Ind_P 1 over the standard parabolics.
inline ClassFunction steinberg(const GroupPtr& G) {
    ClassFunction st = ClassFunction::constant(G, 0.0);
    for (const auto& P : standard_parabolics(G)) {
        const double sign = P.l % 2 ? -1.0 : 1.0;
        st = st + sign * induce(ClassFunction::trivial(P.P), G);
    }
    ensure(int_inner_product(st, st) == 1, "Steinberg character is not irreducible on " + G->label());
    const BigInt expect = pow(BigInt(G->q()), static_cast<unsigned>(positive_root_count(*G)));
    ensure(snap_integer(st.degree(), "Steinberg degree") == static_cast<long long>(expect),
           "Steinberg degree differs from q^N on " + G->label());
    return st;
}

struct SteinbergValue {
    std::size_t class_index = 0;
    bool semisimple = false;
    bool regular = false;
    Complex value;
    long long predicted = 0;
};

/// Oracle value of St on a class of GL_n against the centralizer prediction.
inline SteinbergValue steinberg_value(const GroupPtr& G, const ClassFunction& st, std::size_t c) {
    require(G->family() == Family::GL, "Steinberg value prediction needs GL_n");
    const auto& cls = G->classes();
    SteinbergValue out;
    out.class_index = c;
    out.value = st[c];
    const std::uint32_t g = cls.rep[c];
    out.semisimple = jordan_decompose(*G, g).u == G->identity();
    if (out.semisimple) {
        const FiniteField& E = G->field();
        int rank = 0;
        std::uint64_t pexp = 0;
        bool regular = true;
        for (const auto& [f, m] : factor_monic(E, charpoly(E, G->element(g)))) {
            const std::uint64_t d = f.size() - 1;
            rank += m;
            pexp += d * static_cast<std::uint64_t>(m) * (m - 1) / 2;
            if (m > 1) regular = false;
        }
        out.regular = regular;
        const long long sign = sign_of_rank(G->n()) * sign_of_rank(rank);
        out.predicted = sign * static_cast<long long>(ipow(G->q(), pexp));
    }
    if (std::abs(out.value - static_cast<double>(out.predicted)) > kSnapTol)
        throw ConsistencyError("Steinberg value on class " + std::to_string(c) + " of " + G->label() + " differs from the prediction");
    if (out.regular) ensure(std::abs(std::abs(out.value) - 1.0) < kSnapTol, "regular semisimple Steinberg value is not a sign");
    return out;
}

inline std::vector<SteinbergValue> steinberg_values(const GroupPtr& G) {
    const ClassFunction st = steinberg(G);
    std::vector<SteinbergValue> out;
    for (std::size_t c = 0; c < G->num_classes(); ++c) out.push_back(steinberg_value(G, st, c));
    return out;
}

/// Sum over standard parabolics, G included, of (-1)^{l(P)} Ind_P(f restricted to the Levi through N-invariants).
inline ClassFunction dualize(const ClassFunction& f) {
    const GroupPtr& G = f.group_ptr();
    ClassFunction out = ClassFunction::constant(G, 0.0);
    for (const auto& P : standard_parabolics(G)) {
        const double sign = P.l % 2 ? -1.0 : 1.0;
        out = out + sign * harish_chandra_induce(jacquet(f, P), P, G);
    }
    return out;
}

inline GrothendieckElement dualize(const GrothendieckElement& x) {
    return GrothendieckElement::from_class_function(dualize(x.to_class_function()));
}

struct DualityReport {
    std::string group;
    bool involution = true;
    bool isometry = true;
    bool trivial_to_steinberg = true;
    bool irreducible_to_signed = true;
    std::vector<int> signs;            // D(irr_i) = signs[i] irr_{images[i]}
    std::vector<std::size_t> images;

    bool ok() const { return involution && isometry && trivial_to_steinberg && irreducible_to_signed; }
};

/// The four duality properties on the full irreducible basis, plus random integer combinations for the isometry.
inline DualityReport duality_check(const GroupPtr& G, std::uint64_t seed = oracle_seed(), int samples = 8) {
    const auto& T = character_table(G);
    DualityReport r;
    r.group = G->label();
    std::vector<GrothendieckElement> D;
    for (std::size_t i = 0; i < T.size(); ++i) {
        const auto e = GrothendieckElement::basis(G, i);
        const auto d = dualize(e);
        D.push_back(d);
        if (!(dualize(d) == e)) r.involution = false;
        auto si = d.signed_irreducible();
        if (!si) {
            r.irreducible_to_signed = false;
            r.signs.push_back(0);
            r.images.push_back(i);
        } else {
            r.signs.push_back(si->first);
            r.images.push_back(si->second);
        }
    }
    for (std::size_t i = 0; i < T.size(); ++i)
        for (std::size_t j = 0; j < T.size(); ++j)
            if (inner_product(D[i], D[j]) != (i == j ? 1 : 0)) r.isometry = false;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> coef(-3, 3);
    for (int s = 0; s < samples; ++s) {
        std::vector<long long> a(T.size()), b(T.size());
        for (auto& x : a) x = coef(rng);
        for (auto& x : b) x = coef(rng);
        const GrothendieckElement x(G, a), y(G, b);
        if (inner_product(dualize(x), dualize(y)) != inner_product(x, y)) r.isometry = false;
    }
    const auto one = GrothendieckElement::from_class_function(ClassFunction::trivial(G));
    const auto st = GrothendieckElement::from_class_function(steinberg(G));
    r.trivial_to_steinberg = dualize(one) == st && dualize(st) == one;
    return r;
}

/// D_G(Ind_P rho) against Ind_P(D_M rho) for every standard parabolic and every irreducible of its Levi.
inline bool duality_commutes_with_induction(const GroupPtr& G) {
    for (const auto& P : standard_parabolics(G)) {
        for (const auto& rho : character_table(P.M).irr) {
            const auto a = dualize(harish_chandra_induce(rho, P, G));
            const auto b = harish_chandra_induce(dualize(rho), P, G);
            if (!a.approx_equal(b)) return false;
        }
    }
    return true;
}

}  // namespace lietype

#endif
