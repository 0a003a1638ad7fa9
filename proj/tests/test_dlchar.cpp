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

#include <gtest/gtest.h>

#include "lietype/dlchar.hpp"

using namespace lietype;

namespace {

std::optional<std::size_t> matching_row(const ClassFunction& f, const CharacterTable& T) {
    for (std::size_t i = 0; i < T.size(); ++i)
        if (T.irr[i].approx_equal(f)) return i;
    return std::nullopt;
}

Mat elliptic_element(const GroupPtr& G) {
    // an element whose characteristic polynomial is irreducible of degree n
    for (std::uint32_t g = 0; g < G->order(); ++g) {
        auto f = factor_monic(G->field(), charpoly(G->field(), G->element(g)));
        if (f.size() == 1 && f[0].second == 1) return G->element(g);
    }
    throw std::runtime_error("no elliptic element");
}

}  // namespace

TEST(DL, EpsilonSigns) {
    auto gl2 = gl_torus_classes(2);
    EXPECT_EQ(epsilon_signs(gl2[1]), std::make_pair(1, 1));   // split
    EXPECT_EQ(epsilon_signs(gl2[0]), std::make_pair(1, -1));  // elliptic
    EXPECT_EQ(epsilon_signs(unitary_torus_classes(3).back()), std::make_pair(-1, 1));
}

TEST(DL, Dimensions) {
    auto gl2 = gl_torus_classes(2);
    for (std::uint64_t q : {2u, 3u, 5u}) {
        EXPECT_EQ(dl_dimension(gl2[1], q), BigInt(q + 1));
        EXPECT_EQ(dl_dimension(gl2[0], q), -BigInt(q - 1));
    }
    for (int n = 2; n <= 5; ++n) {
        BigInt prod = 1;
        for (int i = 1; i < n; ++i) prod *= BigInt(ipow(3, i) - 1);
        EXPECT_EQ(abs(dl_dimension(make_gl_torus({n}), 3)), prod);
    }
}

TEST(DL, CoxeterAndElementRoutesAgree) {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
        auto G = build_group(Family::GL, n, q);
        for (const auto& tc : all_torus_characters(Family::GL, n, q)) {
            auto a = dl_character_levi(G, tc);
            auto b = dl_character_elements(G, tc);
            EXPECT_TRUE(a.approx_equal(b)) << G->label() << " " << tc.label();
            EXPECT_NEAR(a.degree().real(), static_cast<double>(dl_dimension(tc.torus, q)), 1e-9);
        }
    }
}

TEST(DL, UnitaryDimensionsAndNorms) {
    for (std::uint64_t q : {2u, 3u}) {
        auto G = build_group(Family::U, 3, q);
        for (const auto& tc : all_torus_characters(Family::U, 3, q)) {
            if (tc.exponents.size() > 1 && q == 3 && (tc.exponents[0] + tc.exponents.back()) % 3) continue;
            auto R = dl_character(G, tc);
            EXPECT_NEAR(R.degree().real(), static_cast<double>(dl_dimension(tc.torus, q)), 1e-9) << tc.label();
            EXPECT_EQ(int_inner_product(R, R), dl_inner_product(tc, tc)) << tc.label();
            decompose(R);
        }
    }
}

TEST(DL, InnerProductsGL2) {
    for (std::uint64_t q : {3u, 5u}) {
        auto G = build_group(Family::GL, 2, q);
        auto pairs = all_torus_characters(Family::GL, 2, q);
        std::vector<ClassFunction> R;
        for (const auto& p : pairs) R.push_back(dl_character(G, p));
        for (std::size_t i = 0; i < pairs.size(); ++i)
            for (std::size_t j = 0; j < pairs.size(); ++j)
                ASSERT_EQ(int_inner_product(R[i], R[j]), dl_inner_product(pairs[i], pairs[j]))
                    << pairs[i].label() << " vs " << pairs[j].label();
    }
}

TEST(DL, GCountMatchesWeylCount) {
    for (auto [fam, n, q] : std::vector<std::tuple<Family, int, int>>{{Family::GL, 2, 3}, {Family::GL, 3, 2}, {Family::U, 3, 2}}) {
        auto G = build_group(fam, n, q);
        for (const auto& t : torus_classes(fam, n)) {
            auto emb = embed_torus_class(G, t);
            std::vector<TorusCharacterPair> ps;
            for (const auto& p : all_torus_characters(fam, n, q))
                if (p.torus.partition == t.partition) ps.push_back(p);
            for (const auto& a : ps)
                for (const auto& b : ps) EXPECT_EQ(dl_inner_product_gcount(emb, a, b), dl_inner_product(a, b));
        }
    }
}

TEST(DL, GeometricConjugacyAndDisjointness) {
    auto G = build_group(Family::GL, 2, 3);
    const auto& T = character_table(G);
    auto pairs = all_torus_characters(Family::GL, 2, 3);
    for (const auto& a : pairs)
        for (const auto& b : pairs) {
            auto ma = decompose(dl_character(G, a), T);
            auto mb = decompose(dl_character(G, b), T);
            bool share = false;
            for (std::size_t i = 0; i < ma.size(); ++i)
                if (ma[i] && mb[i]) share = true;
            EXPECT_EQ(share, geometric_conjugacy_test(a, b)) << a.label() << " vs " << b.label();
        }
    // (chi, chi) on the split torus and chi o Nm on the elliptic torus
    auto split = make_torus_character(make_gl_torus({1, 1}), {1, 1}, 3);
    auto ell = make_torus_character(make_gl_torus({2}), {4}, 3);
    EXPECT_TRUE(geometric_conjugacy_test(split, ell));
    EXPECT_EQ(dl_inner_product(split, ell), 0);
    EXPECT_EQ(dl_inner_product(split, split), 2);
    auto one = trivial_character(make_gl_torus({1, 1}), 3);
    auto reg = make_torus_character(make_gl_torus({2}), {1}, 3);
    EXPECT_FALSE(geometric_conjugacy_test(one, reg));
}

TEST(DL, GreenCuspidal) {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 5}, {3, 2}}) {
        auto G = build_group(Family::GL, n, q);
        const auto& T = character_table(G);
        std::set<std::size_t> rows;
        for (auto e : regular_orbit_representatives(n, q)) {
            auto chi = green_cuspidal(G, e);
            auto row = matching_row(chi, T);
            ASSERT_TRUE(row.has_value()) << G->label() << " e=" << e;
            rows.insert(*row);
            BigInt prod = 1;
            for (int i = 1; i < n; ++i) prod *= BigInt(ipow(q, i) - 1);
            EXPECT_NEAR(chi.degree().real(), static_cast<double>(prod), 1e-9);
            EXPECT_TRUE(is_cuspidal(chi));
        }
        EXPECT_EQ(rows.size(), cuspidal_indices(T).size());
        if (n == 2) EXPECT_EQ(rows.size(), static_cast<std::size_t>((q * q - q) / 2));
    }
    EXPECT_THROW(green_cuspidal(build_group(Family::GL, 2, 3), 4), UsageError);
}

TEST(DL, GreenCuspidalValues) {
    auto G = build_group(Family::GL, 2, 3);
    const FiniteField& K = gf(3, 2);
    const std::uint64_t e = 1;
    auto chi = green_cuspidal(G, e);
    const Mat s = elliptic_element(G);
    auto roots = roots_in(G->field(), charpoly(G->field(), s), K);
    Complex expect = 0;
    for (auto r : roots) expect -= root_of_unity(static_cast<std::int64_t>(e * K.log(r)), 8);
    EXPECT_NEAR(std::abs(chi.at(G->id_of(s)) - expect), 0.0, 1e-9);
    // central z times a regular unipotent: -chi(z)
    Mat zu = Mat::identity(2);
    zu(0, 0) = zu(1, 1) = 2;
    zu(0, 1) = 1;
    const Complex chi_z = root_of_unity(static_cast<std::int64_t>(e * K.log(embedding(G->field(), K)(2))), 8);
    EXPECT_NEAR(std::abs(chi.at(G->id_of(zu)) + chi_z), 0.0, 1e-9);
}

TEST(DL, PrincipalSeries) {
    for (std::uint64_t q : {3u, 5u}) {
        auto G = build_group(Family::GL, 2, q);
        const FiniteField& F = G->field();
        EXPECT_EQ(int_inner_product(ps_character(G, 0, 0), ps_character(G, 0, 0)), 2);
        for (std::uint64_t a = 0; a < q - 1; ++a)
            for (std::uint64_t b = 0; b < q - 1; ++b) {
                auto ps = ps_character(G, a, b);
                EXPECT_EQ(int_inner_product(ps, ps), a == b ? 2 : 1);
                for (Code x = 1; x < F.q(); ++x)
                    for (Code y = 1; y < F.q(); ++y) {
                        if (x == y) continue;
                        const auto id = G->id_of(Mat::diagonal({x, y}));
                        auto ch = [&](std::uint64_t e, Code v) { return root_of_unity(static_cast<std::int64_t>(e * F.log(v)), q - 1); };
                        EXPECT_NEAR(std::abs(ps.at(id) - (ch(a, x) * ch(b, y) + ch(a, y) * ch(b, x))), 0.0, 1e-9);
                    }
            }
    }
}

TEST(DL, PrincipalSeriesOnSL2) {
    for (std::uint64_t q : {3u, 5u}) {
        auto rs = ps_restrictions(q);
        EXPECT_EQ(rs.size(), (q - 1) * (q - 2) / 2);
        for (const auto& r : rs) EXPECT_EQ(r.components, r.ratio_order == 2 ? 2 : 1) << q << " " << r.alpha << " " << r.beta;
    }
}

TEST(DL, MacdonaldCharacters) {
    for (std::uint64_t q : {3u, 5u}) {
        auto G = build_group(Family::GL, 2, q);
        for (int cls = 0; cls < 2; ++cls) {
            std::optional<Complex> unip;
            for (const auto& tc : all_torus_characters(Family::GL, 2, q)) {
                if (tc.torus.partition != gl_torus_classes(2)[cls].partition || !is_regular_pair(tc)) continue;
                auto chi = macdonald_character(G, tc);
                EXPECT_NEAR(chi.degree().real(), static_cast<double>(abs(dl_dimension(tc.torus, q))), 1e-9);
                Mat u = Mat::identity(2);
                u(0, 1) = 1;
                const Complex v = chi.at(G->id_of(u));
                if (unip) EXPECT_NEAR(std::abs(*unip - v), 0.0, 1e-9);
                unip = v;
                if (cls == 0 && q == 3) EXPECT_NEAR(std::abs(v + 1.0), 0.0, 1e-9);
            }
        }
    }
    auto G = build_group(Family::GL, 2, 3);
    EXPECT_THROW(macdonald_character(G, trivial_character(make_gl_torus({2}), 3)), UsageError);
}

TEST(DL, Cuspidality) {
    for (auto [fam, n, q] : std::vector<std::tuple<Family, int, int>>{{Family::GL, 2, 3}, {Family::GL, 3, 2}, {Family::U, 3, 2}}) {
        auto G = build_group(fam, n, q);
        for (const auto& t : torus_classes(fam, n)) {
            auto rep = cuspidality_check(t, dl_character(G, trivial_character(t, q)));
            EXPECT_TRUE(rep.consistent()) << G->label() << " " << t.label();
        }
    }
}

TEST(DL, U3Unipotent) {
    for (std::uint64_t q : {2u, 3u}) {
        auto r = u3_unipotent_decomposition(q);
        EXPECT_EQ(r.dimension, r.expected_dimension);
        EXPECT_EQ(r.dimension, -static_cast<long long>(q * q * q - 2 * (q * q - q) - 1));
        EXPECT_EQ(r.norm, 6);
        EXPECT_EQ(r.pairing_with_split, 0);
        EXPECT_EQ(r.pi_degree, static_cast<long long>(q * q - q));
        EXPECT_TRUE(r.pi_cuspidal);
        EXPECT_EQ(r.sign, 1);
    }
}

TEST(DL, St2Id2) {
    EXPECT_EQ(st2_id2_dimensions(1, 3), std::make_pair(BigInt(3), BigInt(1)));
    for (int m = 1; m <= 4; ++m) {
        EXPECT_TRUE(st2_id2_identity(m));
        for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
            auto [st, id] = st2_id2_dimensions(m, q);
            EXPECT_GT(id, 0);
            EXPECT_EQ(st, id * BigInt(ipow(q, m)));
        }
    }
    // m = 1 against Ind_B(chi, chi) in GL_2(F_3)
    auto G = build_group(Family::GL, 2, 3);
    const auto& T = character_table(G);
    auto m = decompose(ps_character(G, 1, 1), T);
    std::multiset<long long> d;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) d.insert(T.degrees[i]);
    EXPECT_EQ(d, (std::multiset<long long>{1, 3}));
}

TEST(DL, JordanScaling) {
    EXPECT_EQ(jordan_dimension_scale(2, 1, 3, {1, 3}), (std::vector<BigInt>{1, 3}));
    auto out = jordan_dimension_scale(2, 2, 2, {1, 4});
    EXPECT_EQ(out, (std::vector<BigInt>{7, 28}));
    EXPECT_EQ(out[0] + out[1], p_part_split(gl_order_polynomial(4), 2).second / 9);
    // the unipotent dimensions come from GL_2(F_4)
    auto G = build_group(Family::GL, 2, 4);
    auto m = decompose(induce(ClassFunction::trivial(parabolic_with_composition(G, {1, 1}).P), G));
    std::multiset<long long> d;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) d.insert(character_table(G).degrees[i]);
    EXPECT_EQ(d, (std::multiset<long long>{1, 4}));
}

TEST(DL, Drinfeld) {
    auto a = drinfeld_count(2, 2);
    EXPECT_EQ(a.count, 6u);
    EXPECT_TRUE(a.free_action);
    EXPECT_EQ(drinfeld_count(2, 1).count, 0u);
    // the Moore determinant over F_{q^2} satisfies D^q = -D, so odd q has no points there
    EXPECT_EQ(drinfeld_count(3, 2).count, 0u);
    EXPECT_EQ(drinfeld_count(5, 2).count, 0u);
    EXPECT_EQ(drinfeld_count(4, 2).count, 60u);
    auto b = drinfeld_count(3, 3);
    EXPECT_EQ(b.group_order, 24u);
    EXPECT_EQ(b.count % 24, 0u);
    EXPECT_GT(b.count, 0u);
    EXPECT_TRUE(b.free_action);
    EXPECT_TRUE(b.action_preserves_curve);
}

TEST(DL, GaloisOrbitsCountCuspidals) {
    for (std::uint64_t q : {3u, 5u}) {
        auto G = build_group(Family::GL, 2, q);
        std::size_t deg = 0;
        for (auto d : character_table(G).degrees)
            if (d == static_cast<long long>(q - 1)) ++deg;
        EXPECT_EQ(regular_orbit_representatives(2, q).size(), deg);
    }
}
