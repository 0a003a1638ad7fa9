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

#include "lietype/rootdata.hpp"
#include "lietype/symmetric.hpp"
#include "lietype/tori.hpp"

using namespace lietype;

TEST(Symmetric, CharactersOfS3AndS4) {
    EXPECT_EQ(sn_character({2, 1}, {1, 1, 1}), 2);
    EXPECT_EQ(sn_character({2, 1}, {2, 1}), 0);
    EXPECT_EQ(sn_character({2, 1}, {3}), -1);
    EXPECT_EQ(sn_character({1, 1, 1}, {2, 1}), -1);
    EXPECT_EQ(sn_character({2, 2}, {1, 1, 1, 1}), 2);
    EXPECT_EQ(sn_character({3, 1}, {4}), -1);
    EXPECT_EQ(sn_character({2, 2}, {2, 2}), 2);
}

TEST(Symmetric, ColumnOrthogonality) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& r1 : partitions(n))
            for (const auto& r2 : partitions(n)) {
                long long s = 0;
                for (const auto& l : partitions(n)) s += sn_character(l, r1) * sn_character(l, r2);
                EXPECT_EQ(s, r1 == r2 ? static_cast<long long>(z_lambda(r1)) : 0);
            }
}

TEST(Symmetric, KostkaFoulkes) {
    EXPECT_EQ(kostka_foulkes({2}, {1, 1}), (IntPolynomial{0, 1}));
    EXPECT_EQ(kostka_foulkes({1, 1}, {1, 1}), (IntPolynomial{1}));
    EXPECT_EQ(kostka_foulkes({3}, {1, 1, 1}), (IntPolynomial{0, 0, 0, 1}));
    EXPECT_EQ(kostka_foulkes({2, 1}, {1, 1, 1}), (IntPolynomial{0, 1, 1}));
    EXPECT_EQ(kostka_foulkes({3, 1}, {2, 2}), (IntPolynomial{0, 1}));
    EXPECT_EQ(kostka_foulkes({4}, {2, 2}), (IntPolynomial{0, 0, 1}));
    // K(1) is the Kostka number; K vanishes unless lambda <= mu
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : partitions(n))
            for (const auto& la : partitions(n)) {
                auto K = kostka_foulkes(mu, la);
                EXPECT_EQ(K.evaluate(BigInt(1)), BigInt(ssyt(mu, la).size()));
                if (!dominated_by(la, mu)) EXPECT_TRUE(K.is_zero());
                if (mu == la) EXPECT_EQ(K, IntPolynomial{1});
            }
}

TEST(Symmetric, GreenPolynomials) {
    EXPECT_EQ(green_polynomial({1, 1}, {1, 1}), (IntPolynomial{1, 1}));
    EXPECT_EQ(green_polynomial({1, 1}, {2}), (IntPolynomial{1, -1}));
    EXPECT_EQ(green_polynomial({2}, {2}), (IntPolynomial{1}));
    EXPECT_EQ(green_polynomial({2}, {1, 1}), (IntPolynomial{1}));
    EXPECT_EQ(green_polynomial({1, 1, 1}, {2, 1}), (IntPolynomial{1, 0, 0, -1}));
    EXPECT_EQ(green_polynomial({2, 1}, {1, 1, 1}), (IntPolynomial{1, 2}));
}

TEST(Symmetric, GreenAtIdentityIsSignedDimension) {
    for (int n = 1; n <= 5; ++n) {
        Partition ones(n, 1);
        for (const auto& t : gl_torus_classes(n)) {
            const int sign = sign_of_rank(n) * sign_of_rank(t.split_rank);
            for (std::uint64_t q : {2u, 3u, 4u}) {
                auto [pp, pq] = p_part_split(gl_order_polynomial(n), q);
                EXPECT_EQ(green_polynomial(ones, t.partition).evaluate(BigInt(q)), sign * (pq / torus_order(t, q)));
            }
        }
    }
}

TEST(Symmetric, UnitaryGreenAtIdentity) {
    for (int n = 1; n <= 4; ++n) {
        Partition ones(n, 1);
        for (const auto& t : unitary_torus_classes(n)) {
            const int sign = sign_of_rank(group_split_rank(Family::U, n)) * sign_of_rank(t.split_rank);
            for (std::uint64_t q : {2u, 3u}) {
                auto [pp, pq] = p_part_split(ennola_unitary_order(n), q);
                EXPECT_EQ(unitary_green_polynomial(ones, t.partition).evaluate(BigInt(q)), sign * (pq / torus_order(t, q)))
                    << n << " " << t.label();
            }
        }
    }
}

TEST(Symmetric, GreenOrthogonality) {
    // sum over unipotent classes of Q Q / |C(u)| equals |W(T)| delta for tori of GL_3
    // checked in the character module with real class sizes; here the regular unipotent value is 1
    for (int n = 1; n <= 5; ++n)
        for (const auto& rho : partitions(n)) EXPECT_EQ(green_polynomial({n}, rho), IntPolynomial{1});
}
