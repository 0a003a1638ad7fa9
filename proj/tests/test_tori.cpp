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

#include "lietype/tori.hpp"

using namespace lietype;

TEST(Partitions, Basics) {
    EXPECT_EQ(partitions(3).size(), 3u);
    EXPECT_EQ(partitions(5).size(), 7u);
    EXPECT_EQ(partitions(4).front(), (Partition{4}));
    EXPECT_EQ(partitions(4).back(), (Partition{1, 1, 1, 1}));
    EXPECT_EQ(conjugate({3, 1}), (Partition{2, 1, 1}));
    EXPECT_EQ(n_of({2, 1}), 1);
    EXPECT_EQ(z_lambda({2, 2}), 8u);
    EXPECT_EQ(parse_partition("(1,2)"), (Partition{2, 1}));
    EXPECT_THROW(parse_partition("(a)"), UsageError);
}

TEST(Tori, GLClasses) {
    auto c2 = gl_torus_classes(2);
    ASSERT_EQ(c2.size(), 2u);
    EXPECT_EQ(c2[0].partition, (Partition{2}));
    EXPECT_EQ(c2[0].order_poly, (IntPolynomial{-1, 0, 1}));
    EXPECT_EQ(c2[0].split_rank, 1);
    EXPECT_TRUE(c2[0].anisotropic_mod_center);
    EXPECT_EQ(c2[1].order_poly, (IntPolynomial{1, -2, 1}));
    EXPECT_EQ(c2[1].split_rank, 2);
    EXPECT_EQ(gl_torus_classes(5).size(), 7u);
    EXPECT_EQ(torus_order(make_gl_torus({1, 1}), 2), 1);
    EXPECT_EQ(torus_order(make_gl_torus({3}), 2), 7);
}

TEST(Tori, ClassicalClasses) {
    auto u3 = unitary_torus_classes(3);
    ASSERT_EQ(u3.size(), 3u);
    const auto& cube = u3.back();
    EXPECT_EQ(cube.datum.norm_factors, (std::vector<int>{1, 1, 1}));
    EXPECT_EQ(cube.split_rank, 0);
    EXPECT_EQ(torus_order(cube, 2), 27);
    auto sp = sp4_torus_classes();
    ASSERT_EQ(sp.size(), 5u);
    std::multiset<long long> orders;
    for (const auto& t : sp) orders.insert(static_cast<long long>(torus_order(t, 3)));
    EXPECT_EQ(orders, (std::multiset<long long>{4, 8, 16, 8, 10}));
}

TEST(Tori, SplitRankCountsQMinusOneFactors) {
    for (auto fam : {Family::GL, Family::U})
        for (int n = 1; n <= 4; ++n)
            for (const auto& t : torus_classes(fam, n)) EXPECT_EQ(t.order_poly.multiplicity(IntPolynomial{-1, 1}), t.split_rank);
    for (const auto& t : sp4_torus_classes()) EXPECT_EQ(t.order_poly.multiplicity(IntPolynomial{-1, 1}), t.split_rank);
}

TEST(Tori, EnnolaBijection) {
    for (int n = 1; n <= 3; ++n) {
        auto gl = gl_torus_classes(n);
        auto u = unitary_torus_classes(n);
        ASSERT_EQ(gl.size(), u.size());
        for (std::size_t i = 0; i < gl.size(); ++i) {
            const auto twisted = gl[i].order_poly.negate_variable();
            EXPECT_TRUE(twisted == u[i].order_poly || twisted == -u[i].order_poly) << gl[i].label();
        }
    }
}

TEST(Tori, OrdersDivideGroupOrders) {
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u}) {
        for (int n = 1; n <= 4; ++n) {
            const BigInt g = gl_order_polynomial(n).evaluate(BigInt(q));
            for (const auto& t : gl_torus_classes(n)) EXPECT_EQ(g % torus_order(t, q), 0);
            const BigInt u = ennola_unitary_order(n).evaluate(BigInt(q));
            for (const auto& t : unitary_torus_classes(n)) EXPECT_EQ(u % torus_order(t, q), 0);
        }
        const BigInt s = sp_order_polynomial(4).evaluate(BigInt(q));
        for (const auto& t : sp4_torus_classes()) EXPECT_EQ(s % torus_order(t, q), 0);
    }
}

TEST(Tori, UnitScan) {
    auto r = unit_torus_scan(4, {2, 3, 4, 5});
    EXPECT_TRUE(r.only_split_at_two);
    EXPECT_EQ(r.hits.size(), 5u);
    for (const auto& h : r.hits) {
        EXPECT_EQ(h.q, 2u);
        EXPECT_NE(h.family, Family::U);
    }
    EXPECT_TRUE(unit_torus_scan(4, {3}).hits.empty());
}

TEST(Tori, WeylGroupsAgainstNormalizers) {
    EXPECT_EQ(torus_weyl_group(make_gl_torus({1, 1})).first, 2u);
    EXPECT_EQ(torus_weyl_group(make_gl_torus({2})).first, 2u);
    EXPECT_EQ(torus_weyl_group(make_gl_torus({2, 1})).first, 2u);
    for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
        auto G = build_group(Family::GL, n, q);
        for (const auto& t : gl_torus_classes(n)) {
            auto emb = embed_torus_class(G, t);
            EXPECT_EQ(BigInt(emb.size()), torus_order(t, q));
            EXPECT_EQ(algebra_normalizer_weyl(emb).order, torus_weyl_group(t).first) << G->label() << t.label();
        }
    }
    auto U = build_group(Family::U, 3, 2);
    for (const auto& t : unitary_torus_classes(3)) {
        auto emb = embed_torus_class(U, t);
        EXPECT_EQ(BigInt(emb.size()), torus_order(t, 2));
        EXPECT_EQ(algebra_normalizer_weyl(emb).order, torus_weyl_group(t).first) << t.label();
    }
    for (std::uint64_t q : {2u, 3u}) {
        auto S = build_group(Family::Sp, 4, q);
        for (const auto& t : sp4_torus_classes()) {
            auto emb = embed_torus_class(S, t);
            EXPECT_EQ(BigInt(emb.size()), torus_order(t, q));
            EXPECT_EQ(algebra_normalizer_weyl(emb).order, torus_weyl_group(t).first) << t.label();
        }
    }
}

TEST(Tori, Sp4OrderThreeClassesNotConjugate) {
    auto S = build_group(Family::Sp, 4, 2);
    auto cls = sp4_torus_classes();
    auto a = embed_torus_class(S, cls[1]);
    auto b = embed_torus_class(S, cls[3]);
    ASSERT_EQ(a.size(), 3u);
    ASSERT_EQ(b.size(), 3u);
    EXPECT_FALSE(subgroups_conjugate(*S, a.ids, b.ids));
}

TEST(Tori, BruteForceClassCounts) {
    for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        auto G = build_group(Family::GL, n, q);
        auto bf = brute_force_torus_classes(G);
        ASSERT_EQ(bf.size(), partitions(n).size()) << G->label();
        std::multiset<BigInt> a, b;
        for (const auto& c : bf) a.insert(BigInt(c.torus_order));
        for (const auto& t : gl_torus_classes(n)) b.insert(torus_order(t, q));
        EXPECT_EQ(a, b);
    }
    auto S = build_group(Family::Sp, 4, 2);
    auto bf = brute_force_torus_classes(S);
    ASSERT_EQ(bf.size(), 5u);
    std::multiset<BigInt> a, b;
    for (const auto& c : bf) a.insert(BigInt(c.torus_order));
    for (const auto& t : sp4_torus_classes()) b.insert(torus_order(t, 2));
    EXPECT_EQ(a, b);
}
