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

#include "lietype/duality.hpp"

using namespace lietype;

TEST(Steinberg, Degrees) {
    EXPECT_NEAR(steinberg(build_group(Family::GL, 2, 3)).degree().real(), 3.0, 1e-9);
    EXPECT_NEAR(steinberg(build_group(Family::GL, 3, 2)).degree().real(), 8.0, 1e-9);
    EXPECT_NEAR(steinberg(build_group(Family::GL, 2, 5)).degree().real(), 5.0, 1e-9);
    EXPECT_NEAR(steinberg(build_group(Family::Sp, 4, 2)).degree().real(), 16.0, 1e-9);
    auto U = build_group(Family::U, 3, 2);
    auto st = steinberg(U);
    EXPECT_NEAR(st.degree().real(), 8.0, 1e-9);
    const Parabolic* B = nullptr;
    for (const auto& P : standard_parabolics(U))
        if (P.l == 0) B = &P;
    ASSERT_NE(B, nullptr);
    EXPECT_TRUE(st.approx_equal(induce(ClassFunction::trivial(B->P), U) - ClassFunction::trivial(U)));
}

TEST(Steinberg, ValuesMatchCentralizerPrediction) {
    for (auto G : {build_group(Family::GL, 2, 3), build_group(Family::GL, 3, 2), build_group(Family::GL, 2, 4)}) {
        auto vals = steinberg_values(G);
        EXPECT_EQ(vals.size(), G->num_classes());
        for (const auto& v : vals)
            if (!v.semisimple) EXPECT_NEAR(std::abs(v.value), 0.0, 1e-9);
    }
    auto G = build_group(Family::GL, 2, 3);
    auto st = steinberg(G);
    EXPECT_NEAR(st.at(G->id_of(Mat::diagonal({1, 2}))).real(), 1.0, 1e-9);
    Mat ell(2);
    ell(0, 1) = 1;
    ell(1, 0) = 1;
    ell(1, 1) = 1;  // x^2 - x - 1 is irreducible over F_3
    EXPECT_NEAR(st.at(G->id_of(ell)).real(), -1.0, 1e-9);
    Mat u = Mat::identity(2);
    u(0, 1) = 1;
    EXPECT_NEAR(std::abs(st.at(G->id_of(u))), 0.0, 1e-9);
    EXPECT_THROW(steinberg_values(build_group(Family::U, 3, 2)), UsageError);
}

TEST(Duality, OperatorProperties) {
    for (auto G : {build_group(Family::GL, 2, 3), build_group(Family::GL, 3, 2), build_group(Family::U, 3, 2),
                   build_group(Family::GL, 2, 5)}) {
        auto r = duality_check(G);
        EXPECT_TRUE(r.involution) << r.group;
        EXPECT_TRUE(r.isometry) << r.group;
        EXPECT_TRUE(r.trivial_to_steinberg) << r.group;
        EXPECT_TRUE(r.irreducible_to_signed) << r.group;
        // D permutes the irreducibles up to sign; cuspidals are fixed with sign (-1)^rank
        const auto& T = character_table(G);
        std::set<std::size_t> img(r.images.begin(), r.images.end());
        EXPECT_EQ(img.size(), T.size());
        for (auto c : cuspidal_indices(T)) {
            EXPECT_EQ(r.images[c], c);
            EXPECT_EQ(r.signs[c], G->family() == Family::U ? -1 : sign_of_rank(G->n() - 1));
        }
    }
}

TEST(Duality, GrothendieckRoundTrip) {
    auto G = build_group(Family::GL, 2, 3);
    const auto& T = character_table(G);
    std::vector<long long> c(T.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<long long>(i) - 3;
    GrothendieckElement x(G, c);
    EXPECT_EQ(GrothendieckElement::from_class_function(x.to_class_function()), x);
    EXPECT_EQ(inner_product(x, x), int_inner_product(x.to_class_function(), x.to_class_function()));
    EXPECT_THROW(GrothendieckElement(G, {1, 2}), UsageError);
}

TEST(Duality, CommutesWithInduction) {
    EXPECT_TRUE(duality_commutes_with_induction(build_group(Family::GL, 3, 2)));
    EXPECT_TRUE(duality_commutes_with_induction(build_group(Family::GL, 2, 3)));
}

TEST(Duality, DLCharactersPairWithSteinberg) {
    for (auto [fam, n, q] : std::vector<std::tuple<Family, int, int>>{{Family::GL, 2, 3}, {Family::GL, 2, 5}, {Family::U, 3, 2}}) {
        auto G = build_group(fam, n, q);
        auto st = steinberg(G);
        for (const auto& t : torus_classes(fam, n)) {
            auto R = dl_character(G, trivial_character(t, q));
            const auto [eg, et] = epsilon_signs(t);
            EXPECT_EQ(int_inner_product(R, st), eg * et) << G->label() << " " << t.label();
            EXPECT_EQ(int_inner_product(R, ClassFunction::trivial(G)), 1) << G->label() << " " << t.label();
            // D(R_T 1) = eps_G eps_T R_T 1 at the level of 1 and St
            EXPECT_EQ(int_inner_product(dualize(R), ClassFunction::trivial(G)), eg * et);
        }
    }
}
