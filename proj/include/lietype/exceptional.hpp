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

#ifndef LIETYPE_EXCEPTIONAL_HPP
#define LIETYPE_EXCEPTIONAL_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lietype/errors.hpp"
#include "lietype/fields.hpp"

namespace lietype {

/// Element of the prime field F_p with the modulus carried at runtime.
class Zp {
public:
    Zp() = default;
    Zp(std::uint32_t p, long long v) : p_(p), v_(static_cast<std::uint32_t>(mod_floor(v, static_cast<std::int64_t>(p)))) {}

    std::uint32_t modulus() const { return p_; }
    std::uint32_t value() const { return v_; }

    Zp operator+(const Zp& o) const { return Zp(check(o), static_cast<long long>(v_) + o.v_); }
    Zp operator-(const Zp& o) const { return Zp(check(o), static_cast<long long>(v_) - o.v_); }
    Zp operator*(const Zp& o) const {
        return Zp(check(o), static_cast<long long>(static_cast<std::uint64_t>(v_) * o.v_ % p_));
    }
    Zp operator-() const { return Zp(p_, -static_cast<long long>(v_)); }
    bool operator==(const Zp& o) const { return check(o) && v_ == o.v_; }
    bool operator!=(const Zp& o) const { return !(*this == o); }

    Zp inverse() const {
        if (v_ == 0) throw DomainError("zero has no inverse in F_" + std::to_string(p_));
        long long r = 1, b = v_, e = p_ - 2;
        while (e) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return Zp(p_, r);
    }

private:
    std::uint32_t check(const Zp& o) const {
        if (p_ != o.p_) throw UsageError("scalars from F_" + std::to_string(p_) + " and F_" + std::to_string(o.p_));
        return p_;
    }

    std::uint32_t p_ = 2;
    std::uint32_t v_ = 0;
};

using Rational = boost::multiprecision::cpp_rational;

inline Zp scalar_like(const Zp& ref, long long v) { return Zp(ref.modulus(), v); }
inline Rational scalar_like(const Rational&, long long v) { return Rational(v); }
inline std::uint32_t characteristic(const Zp& x) { return x.modulus(); }
inline std::uint32_t characteristic(const Rational&) { return 0; }
inline Zp scalar_inverse(const Zp& x) { return x.inverse(); }
inline Rational scalar_inverse(const Rational& x) {
    if (x == 0) throw DomainError("zero has no inverse");
    return 1 / x;
}
inline std::string scalar_string(const Zp& x) { return std::to_string(x.value()); }
inline std::string scalar_string(const Rational& x) { return x.str(); }

inline Zp prime_field_scalar(std::uint32_t p, long long v) {
    require(is_prime_power(p) && PrimePower::of(p).k == 1, "octonions need a prime modulus");
    return Zp(p, v);
}

template <class K>
using Vec3 = std::array<K, 3>;

/// Zorn vector matrix (a v; w b) with v in V and w in the dual space.
template <class K>
struct SplitOctonion {
    K a, b;
    Vec3<K> v, w;

    bool operator==(const SplitOctonion& o) const { return a == o.a && b == o.b && v == o.v && w == o.w; }
    bool operator!=(const SplitOctonion& o) const { return !(*this == o); }

    SplitOctonion operator+(const SplitOctonion& o) const {
        return {a + o.a, b + o.b, {v[0] + o.v[0], v[1] + o.v[1], v[2] + o.v[2]}, {w[0] + o.w[0], w[1] + o.w[1], w[2] + o.w[2]}};
    }
    SplitOctonion operator-(const SplitOctonion& o) const {
        return {a - o.a, b - o.b, {v[0] - o.v[0], v[1] - o.v[1], v[2] - o.v[2]}, {w[0] - o.w[0], w[1] - o.w[1], w[2] - o.w[2]}};
    }
    SplitOctonion scaled(const K& s) const {
        return {s * a, s * b, {s * v[0], s * v[1], s * v[2]}, {s * w[0], s * w[1], s * w[2]}};
    }

    std::array<K, 8> coordinates() const { return {a, v[0], v[1], v[2], w[0], w[1], w[2], b}; }
    static SplitOctonion from_coordinates(const std::array<K, 8>& c) { return {c[0], c[7], {c[1], c[2], c[3]}, {c[4], c[5], c[6]}}; }

    std::string to_string() const {
        std::string s = "(" + scalar_string(a) + " [";
        for (int i = 0; i < 3; ++i) s += (i ? " " : "") + scalar_string(v[i]);
        s += "]; [";
        for (int i = 0; i < 3; ++i) s += (i ? " " : "") + scalar_string(w[i]);
        return s + "] " + scalar_string(b) + ")";
    }
};

using OctonionZp = SplitOctonion<Zp>;
using OctonionQ = SplitOctonion<Rational>;

namespace detail {

template <class K>
K dot(const Vec3<K>& x, const Vec3<K>& y) {
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

// <u, x cross y> = det(u, x, y) for the standard volume form
template <class K>
Vec3<K> cross(const Vec3<K>& x, const Vec3<K>& y) {
    return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

}  // namespace detail

template <class K>
SplitOctonion<K> oct_scalar(const K& s) {
    const K z = scalar_like(s, 0);
    return {s, s, {z, z, z}, {z, z, z}};
}

template <class K>
SplitOctonion<K> oct_zero(const K& ref) {
    return oct_scalar(scalar_like(ref, 0));
}

template <class K>
SplitOctonion<K> oct_identity(const K& ref) {
    return oct_scalar(scalar_like(ref, 1));
}

/// i-th standard basis vector in coordinate order (a, v0, v1, v2, w0, w1, w2, b)
template <class K>
SplitOctonion<K> oct_basis(const K& ref, int i) {
    require(i >= 0 && i < 8, "octonion basis index is 0..7");
    std::array<K, 8> c;
    c.fill(scalar_like(ref, 0));
    c[i] = scalar_like(ref, 1);
    return SplitOctonion<K>::from_coordinates(c);
}

template <class K>
SplitOctonion<K> oct_multiply(const SplitOctonion<K>& x, const SplitOctonion<K>& y) {
    using detail::cross;
    using detail::dot;
    SplitOctonion<K> r;
    r.a = x.a * y.a + dot(x.v, y.w);
    r.b = x.b * y.b + dot(y.v, x.w);
    const auto ww = cross(x.w, y.w);
    const auto vv = cross(x.v, y.v);
    for (int i = 0; i < 3; ++i) {
        r.v[i] = x.a * y.v[i] + y.b * x.v[i] - ww[i];
        r.w[i] = y.a * x.w[i] + x.b * y.w[i] + vv[i];
    }
    return r;
}

template <class K>
SplitOctonion<K> operator*(const SplitOctonion<K>& x, const SplitOctonion<K>& y) {
    return oct_multiply(x, y);
}

template <class K>
SplitOctonion<K> oct_conj(const SplitOctonion<K>& x) {
    return {x.b, x.a, {-x.v[0], -x.v[1], -x.v[2]}, {-x.w[0], -x.w[1], -x.w[2]}};
}

template <class K>
K oct_norm(const SplitOctonion<K>& x) {
    return x.a * x.b - detail::dot(x.v, x.w);
}

template <class K>
K oct_trace(const SplitOctonion<K>& x) {
    return x.a + x.b;
}

template <class K>
struct NormTraceConj {
    K norm, trace;
    SplitOctonion<K> conj;
};

/// Norm, trace and conjugate, with x conj(x) = Nm(x) and x + conj(x) = tr(x) checked.
template <class K>
NormTraceConj<K> oct_norm_trace_conj(const SplitOctonion<K>& x) {
    NormTraceConj<K> r{oct_norm(x), oct_trace(x), oct_conj(x)};
    ensure(oct_multiply(x, r.conj) == oct_scalar(r.norm), "x conj(x) is not the norm");
    ensure(x + r.conj == oct_scalar(r.trace), "x + conj(x) is not the trace");
    return r;
}

template <class K>
SplitOctonion<K> associator(const SplitOctonion<K>& x, const SplitOctonion<K>& y, const SplitOctonion<K>& z) {
    return (x * y) * z - x * (y * z);
}

/// First triple of basis elements (i, j, k) with nonzero associator.
template <class K>
std::optional<std::array<int, 3>> nonassociative_basis_triple(const K& ref) {
    const auto zero = oct_zero(ref);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            for (int k = 0; k < 8; ++k)
                if (associator(oct_basis(ref, i), oct_basis(ref, j), oct_basis(ref, k)) != zero) return std::array<int, 3>{i, j, k};
    return std::nullopt;
}

template <class K>
K polarized_norm(const SplitOctonion<K>& x, const SplitOctonion<K>& y) {
    return oct_norm(x + y) - oct_norm(x) - oct_norm(y);
}

/// determinant of the Gram matrix of the polarized norm on the standard basis
template <class K>
K norm_gram_determinant(const K& ref) {
    std::array<std::array<K, 8>, 8> m;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) m[i][j] = polarized_norm(oct_basis(ref, i), oct_basis(ref, j));
    K det = scalar_like(ref, 1);
    const K zero = scalar_like(ref, 0);
    for (int c = 0; c < 8; ++c) {
        int piv = -1;
        for (int r = c; r < 8; ++r)
            if (m[r][c] != zero) {
                piv = r;
                break;
            }
        if (piv < 0) return zero;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det = det * m[c][c];
        const K inv = scalar_inverse(m[c][c]);
        for (int r = c + 1; r < 8; ++r) {
            const K f = m[r][c] * inv;
            for (int k = c; k < 8; ++k) m[r][k] = m[r][k] - f * m[c][k];
        }
    }
    return det;
}

template <class K>
SplitOctonion<K> random_octonion(const K& ref, std::mt19937_64& rng) {
    std::array<K, 8> c;
    if constexpr (std::is_same_v<K, Zp>) {
        std::uniform_int_distribution<long long> d(0, ref.modulus() - 1);
        for (auto& x : c) x = Zp(ref.modulus(), d(rng));
    } else {
        std::uniform_int_distribution<long long> num(-9, 9), den(1, 5);
        for (auto& x : c) x = Rational(num(rng), den(rng));
    }
    return SplitOctonion<K>::from_coordinates(c);
}

// ---------------------------------------------------------------------------
// Jordan algebra

/// Hermitian matrix (a z conj(y); conj(z) b x; y conj(x) c).
template <class K>
struct JordanElement {
    K a, b, c;
    SplitOctonion<K> x, y, z;

    bool operator==(const JordanElement& o) const {
        return a == o.a && b == o.b && c == o.c && x == o.x && y == o.y && z == o.z;
    }
    bool operator!=(const JordanElement& o) const { return !(*this == o); }
};

template <class K>
using OctMatrix = std::array<std::array<SplitOctonion<K>, 3>, 3>;

template <class K>
OctMatrix<K> jordan_matrix(const JordanElement<K>& A) {
    return {{{oct_scalar(A.a), A.z, oct_conj(A.y)},
             {oct_conj(A.z), oct_scalar(A.b), A.x},
             {A.y, oct_conj(A.x), oct_scalar(A.c)}}};
}

template <class K>
OctMatrix<K> oct_matrix_multiply(const OctMatrix<K>& P, const OctMatrix<K>& Q) {
    OctMatrix<K> R;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            R[i][j] = P[i][0] * Q[0][j];
            for (int k = 1; k < 3; ++k) R[i][j] = R[i][j] + P[i][k] * Q[k][j];
        }
    return R;
}

template <class K>
JordanElement<K> jordan_identity(const K& ref) {
    const K one = scalar_like(ref, 1);
    const auto z = oct_zero(ref);
    return {one, one, one, z, z, z};
}

template <class K>
JordanElement<K> jordan_from_matrix(const OctMatrix<K>& M) {
    auto scalar_entry = [](const SplitOctonion<K>& o) {
        ensure(o == oct_scalar(o.a), "diagonal entry of a Jordan product is not a scalar");
        return o.a;
    };
    JordanElement<K> A{scalar_entry(M[0][0]), scalar_entry(M[1][1]), scalar_entry(M[2][2]), M[1][2], M[2][0], M[0][1]};
    ensure(M[1][0] == oct_conj(A.z) && M[0][2] == oct_conj(A.y) && M[2][1] == oct_conj(A.x), "Jordan product is not hermitian");
    return A;
}

/// (AB + BA)/2 with octonionic matrix products.
template <class K>
JordanElement<K> jordan_product(const JordanElement<K>& A, const JordanElement<K>& B) {
    require(characteristic(A.a) != 2, "the Jordan product divides by 2");
    const auto P = jordan_matrix(A), Q = jordan_matrix(B);
    const auto PQ = oct_matrix_multiply(P, Q), QP = oct_matrix_multiply(Q, P);
    const K half = scalar_inverse(scalar_like(A.a, 2));
    OctMatrix<K> S;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) S[i][j] = (PQ[i][j] + QP[i][j]).scaled(half);
    return jordan_from_matrix(S);
}

template <class K>
K jordan_det(const JordanElement<K>& A) {
    const K t = oct_trace((A.x * A.y) * A.z);
    return A.a * A.b * A.c + t - A.a * oct_norm(A.x) - A.b * oct_norm(A.y) - A.c * oct_norm(A.z);
}

template <class K>
JordanElement<K> random_jordan(const K& ref, std::mt19937_64& rng) {
    auto s = random_octonion(ref, rng);
    return {s.a, s.b, s.v[0], random_octonion(ref, rng), random_octonion(ref, rng), random_octonion(ref, rng)};
}

template <class K>
JordanElement<K> jordan_cycle(const JordanElement<K>& A) {
    return {A.b, A.c, A.a, A.y, A.z, A.x};
}

// ---------------------------------------------------------------------------
// identity suite

struct OctonionReport {
    std::uint32_t p = 0;
    int samples = 0;
    int composition_failures = 0;
    int anti_automorphism_failures = 0;
    int trace_associativity_failures = 0;
    int norm_trace_failures = 0;
    int exhaustive_pairs = 0;
    int exhaustive_failures = 0;
    std::optional<std::array<int, 3>> nonassociative_triple;
    bool gram_nondegenerate = false;
    bool jordan_det_identity = false;
    int jordan_commutativity_failures = 0;
    int jordan_identity_failures = 0;
    int jordan_unit_failures = 0;
    int det_cycle_failures = 0;
    int jordan_samples = 0;

    bool ok() const {
        return composition_failures == 0 && anti_automorphism_failures == 0 && trace_associativity_failures == 0 &&
               norm_trace_failures == 0 && exhaustive_failures == 0 && nonassociative_triple.has_value() && gram_nondegenerate &&
               jordan_det_identity && jordan_commutativity_failures == 0 && jordan_identity_failures == 0 &&
               jordan_unit_failures == 0 && det_cycle_failures == 0;
    }
};

template <class K>
void octonion_pair_checks(const SplitOctonion<K>& x, const SplitOctonion<K>& y, const SplitOctonion<K>& z, OctonionReport& r) {
    const auto xy = x * y;
    if (oct_norm(xy) != oct_norm(x) * oct_norm(y)) ++r.composition_failures;
    if (oct_conj(xy) != oct_conj(y) * oct_conj(x)) ++r.anti_automorphism_failures;
    if (oct_trace(xy * z) != oct_trace(x * (y * z))) ++r.trace_associativity_failures;
    if (x * oct_conj(x) != oct_scalar(oct_norm(x)) || x + oct_conj(x) != oct_scalar(oct_trace(x))) ++r.norm_trace_failures;
}

/// Composition, conjugation, trace and Jordan identities over F_p (p = 0 for the rationals).
inline OctonionReport verify_octonions(std::uint32_t p, int samples, std::uint64_t seed, int jordan_samples = 200) {
    require(samples >= 0 && jordan_samples >= 0, "sample counts must be nonnegative");
    OctonionReport r;
    r.p = p;
    r.samples = samples;
    r.jordan_samples = jordan_samples;
    std::mt19937_64 rng(seed);
    auto run = [&](const auto& ref) {
        for (int s = 0; s < samples; ++s) {
            const auto x = random_octonion(ref, rng), y = random_octonion(ref, rng), z = random_octonion(ref, rng);
            octonion_pair_checks(x, y, z, r);
        }
        r.nonassociative_triple = nonassociative_basis_triple(ref);
        r.gram_nondegenerate = norm_gram_determinant(ref) != scalar_like(ref, 0);
        r.jordan_det_identity = jordan_det(jordan_identity(ref)) == scalar_like(ref, 1);
        const bool odd = characteristic(ref) != 2;
        for (int s = 0; s < jordan_samples; ++s) {
            const auto A = random_jordan(ref, rng), B = random_jordan(ref, rng);
            if (jordan_det(jordan_cycle(A)) != jordan_det(A)) ++r.det_cycle_failures;
            if (!odd) continue;
            if (jordan_product(A, B) != jordan_product(B, A)) ++r.jordan_commutativity_failures;
            if (jordan_product(A, jordan_identity(ref)) != A) ++r.jordan_unit_failures;
            const auto A2 = jordan_product(A, A);
            if (jordan_product(A2, jordan_product(A, B)) != jordan_product(A, jordan_product(A2, B))) ++r.jordan_identity_failures;
        }
    };
    if (p == 0) {
        run(Rational(0));
    } else {
        const Zp ref = prime_field_scalar(p, 0);
        run(ref);
        if (p == 3) {
            // all pairs of elements supported on at most two basis vectors
            std::vector<OctonionZp> pool;
            for (int i = 0; i < 8; ++i)
                for (int j = i; j < 8; ++j)
                    for (long long ci = 0; ci < 3; ++ci)
                        for (long long cj = 0; cj < 3; ++cj) {
                            if (i == j && cj) continue;
                            auto o = oct_basis(ref, i).scaled(Zp(3, ci));
                            if (i != j) o = o + oct_basis(ref, j).scaled(Zp(3, cj));
                            if (std::find(pool.begin(), pool.end(), o) == pool.end()) pool.push_back(o);
                        }
            OctonionReport sub;
            for (const auto& x : pool)
                for (const auto& y : pool) {
                    octonion_pair_checks(x, y, oct_identity(ref), sub);
                    ++r.exhaustive_pairs;
                }
            r.exhaustive_failures = sub.composition_failures + sub.anti_automorphism_failures + sub.norm_trace_failures;
        }
    }
    return r;
}

}  // namespace lietype

#endif
