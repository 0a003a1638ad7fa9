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

#include <random>
#include <set>

#include "lietype/fields.hpp"

using namespace lietype;

namespace {

std::vector<std::uint32_t> poly(std::initializer_list<std::uint32_t> c) { return c; }

}  // namespace

TEST(Fields, ConwayPolynomialsMatchKnownValues) {
    // ascending coefficients
    EXPECT_EQ(defining_polynomial(2, 2), poly({1, 1, 1}));
    EXPECT_EQ(defining_polynomial(2, 3), poly({1, 1, 0, 1}));
    EXPECT_EQ(defining_polynomial(2, 4), poly({1, 1, 0, 0, 1}));
    EXPECT_EQ(defining_polynomial(2, 5), poly({1, 0, 1, 0, 0, 1}));
    EXPECT_EQ(defining_polynomial(2, 6), poly({1, 1, 0, 1, 1, 0, 1}));
    EXPECT_EQ(defining_polynomial(3, 1), poly({1, 1}));
    EXPECT_EQ(defining_polynomial(3, 2), poly({2, 2, 1}));
    EXPECT_EQ(defining_polynomial(3, 3), poly({1, 2, 0, 1}));
    EXPECT_EQ(defining_polynomial(3, 4), poly({2, 0, 0, 2, 1}));
    EXPECT_EQ(defining_polynomial(5, 1), poly({3, 1}));
    EXPECT_EQ(defining_polynomial(5, 2), poly({2, 4, 1}));
    EXPECT_EQ(defining_polynomial(5, 3), poly({3, 3, 0, 1}));
    EXPECT_EQ(defining_polynomial(7, 2), poly({3, 6, 1}));
}

TEST(Fields, SmallArithmetic) {
    const auto& f4 = gf(4);
    FieldElement w(f4, f4.generator());
    EXPECT_EQ(w * power(w, 2), FieldElement(f4, 1));

    const auto& f5 = gf(5);
    EXPECT_EQ(inverse(FieldElement(f5, 2)), FieldElement(f5, 3));

    const auto& f9 = gf(9);
    FieldElement g(f9, f9.generator());
    EXPECT_EQ(g * g, FieldElement(f9, f9.exp(2)));
    for (std::uint32_t i = 0; i < 8; ++i) EXPECT_EQ(f9.log(f9.exp(i)), i);
}

TEST(Fields, Errors) {
    const auto& f4 = gf(4);
    const auto& f8 = gf(8);
    EXPECT_THROW(inverse(FieldElement(f4, 0)), DomainError);
    EXPECT_THROW(FieldElement(f4, 1) + FieldElement(f8, 1), UsageError);
    EXPECT_THROW(gf(6), UsageError);
    EXPECT_THROW(gf(1u << 17), UsageError);
    EXPECT_THROW(frobenius(FieldElement(f8, 3), 4), UsageError);
    EXPECT_THROW(subfield_embed(FieldElement(f4, 2), PrimePower(2, 3)), UsageError);
}

TEST(Fields, AxiomsOnRandomTriples) {
    std::mt19937_64 rng(0x5EED);
    for (std::uint64_t q : {2u, 3u, 4u, 7u, 8u, 9u, 25u, 27u, 49u, 64u, 81u, 125u, 243u, 256u, 343u, 729u, 1024u}) {
        const auto& f = gf(q);
        std::uniform_int_distribution<std::uint32_t> d(0, f.q() - 1);
        for (int i = 0; i < 10000; ++i) {
            FieldElement a(f, d(rng)), b(f, d(rng)), c(f, d(rng));
            ASSERT_EQ((a + b) + c, a + (b + c));
            ASSERT_EQ((a * b) * c, a * (b * c));
            ASSERT_EQ(a * (b + c), a * b + a * c);
            ASSERT_EQ(a + (-a), FieldElement(f, 0));
            if (!a.is_zero()) ASSERT_EQ(a * inverse(a), FieldElement(f, 1));
        }
    }
}

TEST(Fields, FrobeniusHomomorphismAndFixedField) {
    for (std::uint64_t q : {4u, 8u, 9u, 16u, 27u, 64u, 81u, 256u, 729u, 1024u, 4096u}) {
        const auto& f = gf(q);
        for (std::uint32_t j = 1; j <= f.k(); ++j) {
            if (f.k() % j) continue;
            const std::uint64_t base = ipow(f.p(), j);
            std::uint64_t fixed = 0;
            for (std::uint32_t a = 0; a < f.q(); ++a) {
                FieldElement x(f, a);
                if (frobenius(x, base) == x) ++fixed;
                FieldElement y(f, (a * 7919u + 13u) % f.q());
                ASSERT_EQ(frobenius(x + y, base), frobenius(x, base) + frobenius(y, base));
                ASSERT_EQ(frobenius(x * y, base), frobenius(x, base) * frobenius(y, base));
            }
            EXPECT_EQ(fixed, base);
        }
    }
}

TEST(Fields, FrobeniusOrbitsInF8) {
    const auto& f = gf(8);
    std::multiset<int> sizes;
    std::set<std::uint32_t> seen;
    for (std::uint32_t a = 1; a < 8; ++a) {
        if (seen.count(a)) continue;
        int n = 0;
        FieldElement x(f, a);
        do {
            seen.insert(x.code);
            x = frobenius(x, 2);
            ++n;
        } while (x.code != a);
        sizes.insert(n);
    }
    EXPECT_EQ(sizes, (std::multiset<int>{1, 3, 3}));
    FieldElement x(f, 5);
    EXPECT_EQ(frobenius(frobenius(frobenius(x, 2), 2), 2), x);
}

TEST(Fields, NormAndTrace) {
    const auto& f4 = gf(4);
    FieldElement w(f4, f4.generator());
    auto [n, t] = norm_trace(w, PrimePower(2, 1));
    EXPECT_EQ(n.code, 1u);
    EXPECT_EQ(t.code, 1u);

    const auto& f9 = gf(9);
    auto [n9, t9] = norm_trace(FieldElement(f9, f9.generator()), PrimePower(3, 1));
    EXPECT_EQ(n9.code, 2u);
    (void)t9;
    EXPECT_THROW(norm_trace(w, PrimePower(3, 1)), UsageError);
}

TEST(Fields, NormAndTraceSurjective) {
    for (auto [q, n] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 2}, {4, 2}, {2, 6}, {5, 2}, {3, 3}}) {
        const auto& big = gf_ext(q, n);
        auto pp = PrimePower::of(q);
        std::set<std::uint32_t> norms, traces;
        for (std::uint32_t a = 1; a < big.q(); ++a) {
            auto [nm, tr] = norm_trace(FieldElement(big, a), pp);
            norms.insert(nm.code);
            traces.insert(tr.code);
        }
        traces.insert(0);
        EXPECT_EQ(norms.size(), q - 1);
        EXPECT_EQ(traces.size(), q);
    }
}

TEST(Fields, EmbeddingsCompatible) {
    const auto& f2 = gf(2);
    const auto& f4 = gf(4);
    const auto& f16 = gf(16);
    EXPECT_EQ(subfield_embed(FieldElement(f2, 1), PrimePower(2, 4)), FieldElement(f16, 1));
    auto w16 = subfield_embed(FieldElement(f4, f4.generator()), PrimePower(2, 4));
    EXPECT_EQ(f16.multiplicative_order(w16.code), 3u);
    for (std::uint32_t x = 0; x < 2; ++x)
        EXPECT_EQ(subfield_embed(subfield_embed(FieldElement(f2, x), PrimePower(2, 2)), PrimePower(2, 4)),
                  subfield_embed(FieldElement(f2, x), PrimePower(2, 4)));
    // ring homomorphism commuting with Frobenius, and composite embeddings agree for Conway towers
    for (auto [p, d, k] : std::vector<std::array<std::uint32_t, 3>>{{2, 2, 4}, {2, 3, 6}, {3, 2, 4}, {2, 2, 6}, {5, 1, 2}}) {
        const auto& s = gf(p, d);
        for (std::uint32_t a = 0; a < s.q(); ++a)
            for (std::uint32_t b = 0; b < s.q(); ++b) {
                FieldElement x(s, a), y(s, b);
                auto ex = subfield_embed(x, PrimePower(p, k));
                auto ey = subfield_embed(y, PrimePower(p, k));
                ASSERT_EQ(subfield_embed(x + y, PrimePower(p, k)), ex + ey);
                ASSERT_EQ(subfield_embed(x * y, PrimePower(p, k)), ex * ey);
                ASSERT_EQ(subfield_embed(frobenius(x, p), PrimePower(p, k)), frobenius(ex, p));
            }
        // Conway: generator maps to g^((p^k-1)/(p^d-1))
        const auto& b = gf(p, k);
        EXPECT_EQ(subfield_embed(FieldElement(s, s.generator()), PrimePower(p, k)).code,
                  b.exp((b.q() - 1) / (s.q() - 1)));
    }
}

TEST(Fields, CharactersMultiplicative) {
    const auto& f = gf(25);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint32_t> d(1, 24);
    for (std::uint64_t a = 0; a < 24; ++a) {
        MultiplicativeCharacter chi(24, static_cast<std::int64_t>(a));
        for (int i = 0; i < 200; ++i) {
            FieldElement x(f, d(rng)), y(f, d(rng));
            auto lhs = char_eval(chi, x * y);
            auto rhs = char_eval(chi, x) * char_eval(chi, y);
            ASSERT_LT(std::abs(lhs - rhs), 1e-12);
            ASSERT_NEAR(std::abs(char_eval(chi, x)), 1.0, 1e-12);
        }
        if (a == 0) EXPECT_LT(std::abs(char_eval(chi, FieldElement(f, 7)) - 1.0), 1e-15);
    }
    EXPECT_THROW(char_eval(MultiplicativeCharacter(24, 1), FieldElement(f, 0)), DomainError);
    // chi_a(g) is a primitive root of unity of order 24/gcd(a,24)
    auto v = char_eval(MultiplicativeCharacter(24, 9), FieldElement(f, f.generator()));
    std::complex<double> z = 1;
    int order = 0;
    do {
        z *= v;
        ++order;
    } while (std::abs(z - 1.0) > 1e-9);
    EXPECT_EQ(order, 8);
}

TEST(Fields, RegularCharacters) {
    for (std::uint64_t a = 0; a < 7; ++a) EXPECT_TRUE(is_regular_character(a, 1, 8));
    EXPECT_FALSE(is_regular_character(4, 2, 3));
    int count = 0;
    for (std::uint64_t a = 0; a < 8; ++a) count += is_regular_character(a, 2, 3);
    EXPECT_EQ(count, 6);
    for (std::uint64_t q : {2u, 3u, 4u, 5u}) EXPECT_EQ(regular_orbit_representatives(2, q).size(), (q * q - q) / 2);
}
