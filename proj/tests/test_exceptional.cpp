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

#include "lietype/exceptional.hpp"

using namespace lietype;

TEST(Octonion, IdentityAndBasics) {
    const Zp r = prime_field_scalar(5, 0);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        auto o = random_octonion(r, rng);
        EXPECT_EQ(oct_identity(r) * o, o);
        EXPECT_EQ(o * oct_identity(r), o);
        auto ntc = oct_norm_trace_conj(o);
        EXPECT_EQ(ntc.conj.a, o.b);
        auto xx = o * ntc.conj;
        for (int k = 0; k < 3; ++k) EXPECT_EQ(xx.v[k].value(), 0u);
    }
    OctonionZp d = oct_zero(r);
    d.a = Zp(5, 2);
    d.b = Zp(5, 4);
    EXPECT_EQ(oct_norm(d), Zp(5, 3));
    EXPECT_EQ(oct_trace(d), Zp(5, 1));
    EXPECT_EQ(oct_norm(oct_identity(r)), Zp(5, 1));
}

TEST(Octonion, MixedFieldsRejected) {
    EXPECT_THROW(oct_identity(Zp(5, 0)) * oct_identity(Zp(7, 0)), UsageError);
    EXPECT_THROW(prime_field_scalar(9, 1), UsageError);
}

TEST(Octonion, NonAssociative) {
    auto t = nonassociative_basis_triple(prime_field_scalar(5, 0));
    ASSERT_TRUE(t.has_value());
    const Zp r(5, 0);
    EXPECT_NE(associator(oct_basis(r, (*t)[0]), oct_basis(r, (*t)[1]), oct_basis(r, (*t)[2])), oct_zero(r));
    EXPECT_TRUE(nonassociative_basis_triple(Rational(0)).has_value());
}

TEST(Octonion, IdentitySuite) {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        auto rep = verify_octonions(p, p == 5 || p == 7 ? 10000 : 1000, 99, 50);
        EXPECT_TRUE(rep.ok()) << "p=" << p;
        EXPECT_EQ(rep.composition_failures, 0);
        if (p == 3) EXPECT_GT(rep.exhaustive_pairs, 10000);
    }
    auto q = verify_octonions(0, 300, 5, 20);
    EXPECT_TRUE(q.ok());
}

TEST(Octonion, GramDeterminant) {
    EXPECT_NE(norm_gram_determinant(Zp(5, 0)), Zp(5, 0));
    EXPECT_EQ(norm_gram_determinant(Rational(0)), Rational(1));
}

TEST(Jordan, Product) {
    const Zp r(5, 0);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 30; ++i) {
        auto A = random_jordan(r, rng), B = random_jordan(r, rng);
        EXPECT_EQ(jordan_product(A, jordan_identity(r)), A);
        EXPECT_EQ(jordan_product(A, B), jordan_product(B, A));
    }
    const Zp r7(7, 0);
    for (int i = 0; i < 30; ++i) {
        auto A = random_jordan(r7, rng), B = random_jordan(r7, rng);
        auto A2 = jordan_product(A, A);
        EXPECT_EQ(jordan_product(A2, jordan_product(A, B)), jordan_product(A, jordan_product(A2, B)));
    }
    EXPECT_THROW(jordan_product(jordan_identity(Zp(2, 0)), jordan_identity(Zp(2, 0))), UsageError);
}

TEST(Jordan, Determinant) {
    EXPECT_EQ(jordan_det(jordan_identity(Zp(5, 0))), Zp(5, 1));
    EXPECT_EQ(jordan_det(jordan_identity(Rational(0))), Rational(1));
    auto D = jordan_identity(Zp(7, 0));
    D.a = Zp(7, 2);
    D.b = Zp(7, 3);
    D.c = Zp(7, 5);
    EXPECT_EQ(jordan_det(D), Zp(7, 30));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        auto A = random_jordan(Zp(5, 0), rng);
        EXPECT_EQ(jordan_det(jordan_cycle(A)), jordan_det(A));
    }
    // jordan_det on F_2 is defined even though the product is not
    EXPECT_EQ(jordan_det(jordan_identity(Zp(2, 0))), Zp(2, 1));
}
