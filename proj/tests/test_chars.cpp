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

#include "lietype/chars.hpp"

using namespace lietype;

namespace {

const Parabolic& borel(const GroupPtr& G) {
    const auto& ps = standard_parabolics(G);
    const Parabolic* b = &ps[0];
    for (const auto& p : ps)
        if (p.composition.size() > b->composition.size()) b = &p;
    return *b;
}

std::multiset<long long> degree_set(const CharacterTable& T) { return {T.degrees.begin(), T.degrees.end()}; }

}  // namespace

TEST(Chars, TableDegrees) {
    EXPECT_EQ(degree_set(character_table(build_group(Family::GL, 2, 2))), (std::multiset<long long>{1, 1, 2}));
    EXPECT_EQ(degree_set(character_table(build_group(Family::GL, 2, 3))),
              (std::multiset<long long>{1, 1, 2, 2, 2, 3, 3, 4}));
    EXPECT_EQ(degree_set(character_table(build_group(Family::SL, 2, 4))), (std::multiset<long long>{1, 3, 3, 4, 5}));
    EXPECT_EQ(degree_set(character_table(build_group(Family::GL, 3, 2))), (std::multiset<long long>{1, 3, 3, 6, 7, 8}));
}

TEST(Chars, Orthogonality) {
    for (auto G : {build_group(Family::GL, 2, 3), build_group(Family::U, 3, 2), build_group(Family::Sp, 4, 2),
                   build_group(Family::GL, 2, 5)}) {
        const auto& T = character_table(G);
        EXPECT_EQ(T.size(), G->num_classes());
        long long s = 0;
        for (auto d : T.degrees) s += d * d;
        EXPECT_EQ(s, static_cast<long long>(G->order()));
        EXPECT_LT(orthogonality_error(T), kSnapTol) << G->label();
    }
}

TEST(Chars, SeedIndependence) {
    auto G = build_group(Family::GL, 2, 3);
    auto a = compute_character_table(G, 1);
    auto b = compute_character_table(G, 12345);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(a.irr[i].approx_equal(b.irr[i]));
}

TEST(Chars, InducedFromBorel) {
    auto G = build_group(Family::GL, 2, 3);
    auto ind = induce(ClassFunction::trivial(borel(G).P), G);
    EXPECT_NEAR(ind.degree().real(), 4.0, 1e-9);
    EXPECT_EQ(int_inner_product(ind, ind), 2);

    auto G3 = build_group(Family::GL, 3, 2);
    auto ind3 = induce(ClassFunction::trivial(borel(G3).P), G3);
    EXPECT_EQ(int_inner_product(ind3, ind3), 6);
    const auto& T3 = character_table(G3);
    auto m = decompose(ind3, T3);
    std::multiset<long long> degs;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (long long k = 0; k < m[i]; ++k) degs.insert(T3.degrees[i]);
    EXPECT_EQ(degs, (std::multiset<long long>{1, 6, 6, 8}));
    for (auto x : m) EXPECT_LE(x, 2);

    auto U = build_group(Family::U, 3, 2);
    auto indu = induce(ClassFunction::trivial(borel(U).P), U);
    EXPECT_NEAR(indu.degree().real(), 9.0, 1e-9);
    const auto& TU = character_table(U);
    auto mu = decompose(indu, TU);
    std::multiset<long long> du;
    for (std::size_t i = 0; i < mu.size(); ++i)
        for (long long k = 0; k < mu[i]; ++k) du.insert(TU.degrees[i]);
    EXPECT_EQ(du, (std::multiset<long long>{1, 8}));
}

TEST(Chars, InductionTrivialCases) {
    auto G = build_group(Family::GL, 2, 3);
    const auto& T = character_table(G);
    for (const auto& chi : T.irr) EXPECT_TRUE(induce(chi, G).approx_equal(chi));
    auto r = restrict_to(ClassFunction::trivial(G), borel(G).P);
    EXPECT_TRUE(r.approx_equal(ClassFunction::trivial(borel(G).P)));
}

TEST(Chars, FrobeniusAndJacquetAdjunction) {
    for (auto G : {build_group(Family::GL, 2, 3), build_group(Family::GL, 3, 2)}) {
        const auto& T = character_table(G);
        for (const auto& P : standard_parabolics(G)) {
            const auto& TM = character_table(P.M);
            for (const auto& rho : TM.irr) {
                auto ind = harish_chandra_induce(rho, P, G);
                for (const auto& pi : T.irr) {
                    auto j = jacquet(pi, P);
                    EXPECT_NEAR(std::abs(inner_product(ind, pi) - inner_product(rho, j)), 0.0, kSnapTol);
                }
            }
            // Frobenius reciprocity on P
            const auto& TP = character_table(P.P);
            for (std::size_t i = 0; i < std::min<std::size_t>(TP.size(), 4); ++i)
                for (const auto& pi : T.irr)
                    EXPECT_NEAR(std::abs(inner_product(induce(TP.irr[i], G), pi) - inner_product(TP.irr[i], restrict_to(pi, P.P))),
                                0.0, kSnapTol);
        }
    }
}

TEST(Chars, JacquetIsGenuine) {
    auto G = build_group(Family::GL, 3, 2);
    const auto& T = character_table(G);
    for (const auto& P : standard_parabolics(G)) {
        const auto& TM = character_table(P.M);
        for (const auto& pi : T.irr)
            for (auto m : decompose(jacquet(pi, P), TM)) EXPECT_GE(m, 0);
    }
}

TEST(Chars, CuspidalsOfGL2) {
    auto G = build_group(Family::GL, 2, 3);
    const auto& T = character_table(G);
    auto cusp = cuspidal_indices(T);
    EXPECT_EQ(cusp.size(), 3u);  // (q^2 - q)/2
    for (auto c : cusp) EXPECT_EQ(T.degrees[c], 2);
    EXPECT_TRUE(jacquet(T.irr[cusp[0]], borel(G)).is_zero());
    auto G2 = build_group(Family::GL, 2, 2);
    EXPECT_EQ(cuspidal_indices(character_table(G2)).size(), 1u);
    // the Steinberg character restricts to the Levi as its Steinberg, degree 1
    for (std::size_t i = 0; i < T.size(); ++i)
        if (T.degrees[i] == 3 && std::abs(T.irr[i].at(G->find(Mat::diagonal({2, 2})).value()) - 3.0) < 1e-9) {
            auto j = jacquet(T.irr[i], borel(G));
            EXPECT_NEAR(j.degree().real(), 1.0, 1e-9);
        }
}

TEST(Chars, CuspidalSupportUnique) {
    for (auto G : {build_group(Family::GL, 2, 3), build_group(Family::GL, 3, 2)}) {
        const auto& T = character_table(G);
        for (const auto& pi : T.irr) EXPECT_TRUE(cuspidal_support(pi).unique_association_class);
    }
}

TEST(Chars, Errors) {
    auto G = build_group(Family::GL, 2, 3);
    auto H = build_group(Family::GL, 2, 2);
    EXPECT_THROW(inner_product(ClassFunction::trivial(G), ClassFunction::trivial(H)), UsageError);
    EXPECT_THROW(decompose(0.5 * ClassFunction::trivial(G), character_table(G)), ConsistencyError);
}
