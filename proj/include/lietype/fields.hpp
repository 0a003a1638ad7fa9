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
 * @file fields.hpp
 * @brief Small finite fields F_{p^k} with compatible subfield embeddings.
 *
 * Every field F_{p^k} is realised as F_p[x]/(f) for a fixed primitive defining
 * polynomial f, so x is the distinguished generator g of F_{p^k}^x and elements
 * are stored as integer codes sum c_i p^i of their coordinates in 1, x, ..., x^{k-1}.
 * Discrete logarithms are tabulated when the field is constructed.
 *
 * The defining polynomial is the Conway polynomial for p <= 7, k <= 6 (computed
 * here from its definition rather than tabulated), and otherwise the first
 * primitive polynomial in the same ordering. With Conway polynomials the map
 * g_d -> g_k^((p^k-1)/(p^d-1)) is a field embedding F_{p^d} -> F_{p^k} for every d | k,
 * so embeddings compose and multiplicative characters restrict along norms.
 *
 * Fields live in a process-wide registry (see gf()) and are immutable once built.
 */

#ifndef LIETYPE_FIELDS_HPP
#define LIETYPE_FIELDS_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace lietype {

// ---------------------------------------------------------------------------
// integer helpers

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    a %= m;
    return a < 0 ? a + m : a;
}

struct PrimePower {
    std::uint32_t p = 2;
    std::uint32_t k = 1;
    std::uint32_t q = 2;

    static constexpr std::uint32_t kMaxOrder = 1u << 16;

    PrimePower() = default;
    PrimePower(std::uint32_t p_, std::uint32_t k_) : p(p_), k(k_) {
        require(is_prime(p_), "characteristic must be prime");
        require(k_ >= 1, "extension degree must be positive");
        const std::uint64_t order = ipow(p_, k_);
        require(order <= kMaxOrder, "field order exceeds 2^16");
        q = static_cast<std::uint32_t>(order);
    }

    /// Parse q = p^k.
    static PrimePower of(std::uint64_t q) {
        require(q >= 2, "field order must be at least 2");
        auto f = prime_factors(q);
        require(f.size() == 1, "field order must be a prime power");
        std::uint32_t k = 0;
        for (std::uint64_t t = q; t > 1; t /= f[0]) ++k;
        return {static_cast<std::uint32_t>(f[0]), k};
    }

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

inline bool is_prime_power(std::uint64_t q) { return q >= 2 && prime_factors(q).size() == 1; }

// ---------------------------------------------------------------------------
// polynomials over F_p used while choosing defining polynomials

namespace detail {

using FpPoly = std::vector<std::uint32_t>;  // ascending, length = degree + 1

inline FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, std::uint32_t p) {
    const std::size_t k = f.size() - 1;
    std::vector<std::uint64_t> r(2 * k, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    for (std::size_t i = r.size(); i-- > k;) {
        const std::uint64_t c = r[i] % p;
        if (!c) continue;
        // f monic: x^k = -sum f_j x^j
        for (std::size_t j = 0; j < k; ++j) r[i - k + j] = (r[i - k + j] + (p - c) * f[j]) % p;
        r[i] = 0;
    }
    FpPoly out(k, 0);
    for (std::size_t i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(r[i] % p);
    return out;
}

inline FpPoly fp_powmod(FpPoly base, std::uint64_t e, const FpPoly& f, std::uint32_t p) {
    const std::size_t k = f.size() - 1;
    FpPoly r(k, 0);
    r[0] = 1;
    base.resize(k, 0);
    while (e) {
        if (e & 1u) r = fp_mulmod(r, base, f, p);
        base = fp_mulmod(base, base, f, p);
        e >>= 1u;
    }
    return r;
}

inline bool fp_is_one(const FpPoly& a) {
    if (a.empty() || a[0] != 1) return false;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i]) return false;
    return true;
}

/// x has multiplicative order p^k - 1 modulo f; this forces f irreducible.
inline bool is_primitive(const FpPoly& f, std::uint32_t p) {
    const std::size_t k = f.size() - 1;
    if (f[0] == 0) return false;
    const std::uint64_t n = ipow(p, static_cast<unsigned>(k)) - 1;
    FpPoly x(k, 0);
    if (k == 1)
        x[0] = (p - f[0]) % p;  // x = -f_0 in F_p
    else
        x[1] = 1;
    if (!fp_is_one(fp_powmod(x, n, f, p))) return false;
    for (auto r : prime_factors(n))
        if (fp_is_one(fp_powmod(x, n / r, f, p))) return false;
    return true;
}

/// evaluate g (over F_p) at y in F_p[x]/(f)
inline FpPoly fp_compose(const FpPoly& g, const FpPoly& y, const FpPoly& f, std::uint32_t p) {
    const std::size_t k = f.size() - 1;
    FpPoly acc(k, 0);
    for (std::size_t i = g.size(); i-- > 0;) {
        acc = fp_mulmod(acc, y, f, p);
        acc[0] = (acc[0] + g[i]) % p;
    }
    return acc;
}

inline FpPoly conway_polynomial(std::uint32_t p, std::uint32_t k);

/// Candidate number t in Conway order -> monic polynomial of degree k.
/// Writing f = x^k - a_{k-1} x^{k-1} + a_{k-2} x^{k-2} - ..., the tuple
/// (a_{k-1}, ..., a_0) is compared lexicographically.
inline FpPoly conway_candidate(std::uint64_t t, std::uint32_t p, std::uint32_t k) {
    FpPoly f(k + 1, 0);
    f[k] = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        const std::uint32_t a = static_cast<std::uint32_t>(t % p);
        t /= p;
        f[i] = ((k - i) % 2 == 0) ? a : (p - a) % p;
    }
    return f;
}

inline FpPoly search_conway(std::uint32_t p, std::uint32_t k) {
    std::vector<std::pair<std::uint32_t, FpPoly>> subs;
    for (std::uint32_t d = 1; d < k; ++d)
        if (k % d == 0) subs.emplace_back(d, conway_polynomial(p, d));
    const std::uint64_t total = ipow(p, k);
    const std::uint64_t n = total - 1;
    for (std::uint64_t t = 0; t < total; ++t) {
        const FpPoly f = conway_candidate(t, p, k);
        if (!is_primitive(f, p)) continue;
        bool ok = true;
        for (const auto& [d, g] : subs) {
            FpPoly x(k, 0);
            x[1] = 1;
            const FpPoly y = fp_powmod(x, n / (ipow(p, d) - 1), f, p);
            const FpPoly v = fp_compose(g, y, f, p);
            for (auto c : v)
                if (c) ok = false;
            if (!ok) break;
        }
        if (ok) return f;
    }
    throw ConsistencyError("no Conway polynomial found");
}

inline FpPoly least_primitive(std::uint32_t p, std::uint32_t k) {
    const std::uint64_t total = ipow(p, k);
    for (std::uint64_t t = 0; t < total; ++t) {
        FpPoly f(k + 1, 0);
        f[k] = 1;
        std::uint64_t s = t;
        for (std::uint32_t i = 0; i < k; ++i, s /= p) f[i] = static_cast<std::uint32_t>(s % p);
        if (is_primitive(f, p)) return f;
    }
    throw ConsistencyError("no primitive polynomial found");
}

inline bool conway_tabulated(std::uint32_t p, std::uint32_t k) { return p <= 7 && k <= 6; }

inline FpPoly conway_polynomial(std::uint32_t p, std::uint32_t k) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, FpPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({p, k});
        if (it != cache.end()) return it->second;
    }
    FpPoly f = search_conway(p, k);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(std::make_pair(p, k), f);
    return f;
}

}  // namespace detail

/// The defining polynomial (ascending coefficients, monic) used for F_{p^k}.
inline std::vector<std::uint32_t> defining_polynomial(std::uint32_t p, std::uint32_t k) {
    require(is_prime(p), "characteristic must be prime");
    return detail::conway_tabulated(p, k) ? detail::conway_polynomial(p, k) : detail::least_primitive(p, k);
}

// ---------------------------------------------------------------------------

class FiniteField {
   public:
    using Code = std::uint32_t;

    explicit FiniteField(PrimePower pp) : pp_(pp), poly_(defining_polynomial(pp.p, pp.k)) {
        const std::uint32_t q = pp_.q;
        exp_.resize(q - 1);
        log_.assign(q, 0);
        // walk powers of x in F_p[x]/(f)
        std::vector<std::uint32_t> cur(pp_.k, 0);
        cur[0] = 1;
        for (std::uint32_t i = 0; i < q - 1; ++i) {
            Code c = encode(cur);
            exp_[i] = c;
            log_[c] = i;
            cur = times_x(cur);
        }
        if (pp_.q <= 256) {
            add_.resize(std::size_t(q) * q);
            for (Code a = 0; a < q; ++a)
                for (Code b = 0; b < q; ++b) add_[a * q + b] = add_digits(a, b, false);
        }
    }

    const PrimePower& order() const { return pp_; }
    std::uint32_t p() const { return pp_.p; }
    std::uint32_t k() const { return pp_.k; }
    std::uint32_t q() const { return pp_.q; }
    const std::vector<std::uint32_t>& polynomial() const { return poly_; }
    bool is_conway() const { return detail::conway_tabulated(pp_.p, pp_.k); }

    Code zero() const { return 0; }
    Code one() const { return 1; }
    Code generator() const { return exp_.size() > 1 ? exp_[1] : 1; }

    Code add(Code a, Code b) const {
        if (!add_.empty()) return add_[a * pp_.q + b];
        return add_digits(a, b, false);
    }
    Code sub(Code a, Code b) const { return add_digits(a, b, true); }
    Code neg(Code a) const { return add_digits(0, a, true); }
    Code mul(Code a, Code b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        const std::uint32_t n = pp_.q - 1;
        if (s >= n) s -= n;
        return exp_[s];
    }
    Code inv(Code a) const {
        if (a == 0) throw DomainError("inverse of zero");
        const std::uint32_t n = pp_.q - 1;
        return exp_[(n - log_[a]) % n];
    }
    Code div(Code a, Code b) const { return mul(a, inv(b)); }
    Code pow(Code a, std::int64_t e) const {
        const std::int64_t n = pp_.q - 1;
        if (a == 0) {
            if (e == 0) return 1;
            if (e < 0) throw DomainError("negative power of zero");
            return 0;
        }
        return exp_[mod_floor(static_cast<std::int64_t>(log_[a]) * mod_floor(e, n), n)];
    }
    /// discrete log with respect to generator()
    std::uint32_t log(Code a) const {
        if (a == 0) throw DomainError("logarithm of zero");
        return log_[a];
    }
    Code exp(std::int64_t i) const { return exp_[mod_floor(i, pp_.q - 1)]; }
    /// image of an integer under Z -> F_p -> F_q
    Code from_int(std::int64_t n) const { return static_cast<Code>(mod_floor(n, pp_.p)); }

    std::uint64_t multiplicative_order(Code a) const {
        const std::uint64_t n = pp_.q - 1;
        return n / std::gcd<std::uint64_t>(n, log(a));
    }

    std::vector<std::uint32_t> digits(Code a) const {
        std::vector<std::uint32_t> d(pp_.k);
        for (auto& x : d) {
            x = a % pp_.p;
            a /= pp_.p;
        }
        return d;
    }
    Code encode(const std::vector<std::uint32_t>& d) const {
        Code c = 0;
        for (std::size_t i = d.size(); i-- > 0;) c = c * pp_.p + d[i] % pp_.p;
        return c;
    }

   private:
    Code add_digits(Code a, Code b, bool subtract) const {
        const std::uint32_t p = pp_.p;
        if (p == 2) return a ^ b;
        Code r = 0, scale = 1;
        for (std::uint32_t i = 0; i < pp_.k; ++i) {
            const std::uint32_t x = a % p, y = b % p;
            a /= p;
            b /= p;
            r += scale * (subtract ? (x + p - y) % p : (x + y) % p);
            scale *= p;
        }
        return r;
    }
    std::vector<std::uint32_t> times_x(const std::vector<std::uint32_t>& v) const {
        const std::uint32_t p = pp_.p, k = pp_.k;
        if (k == 1) return {static_cast<std::uint32_t>((std::uint64_t(v[0]) * ((p - poly_[0]) % p)) % p)};
        std::vector<std::uint32_t> r(k, 0);
        const std::uint32_t top = v[k - 1];
        for (std::uint32_t i = k - 1; i > 0; --i) r[i] = v[i - 1];
        for (std::uint32_t i = 0; i < k; ++i) r[i] = (r[i] + std::uint64_t(p - poly_[i]) % p * top) % p;
        return r;
    }

    PrimePower pp_;
    std::vector<std::uint32_t> poly_;
    std::vector<Code> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<Code> add_;
};

/// Process-wide registry; references stay valid for the life of the program.
inline const FiniteField& gf(std::uint32_t p, std::uint32_t k) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<FiniteField>> fields;
    PrimePower pp(p, k);
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = fields[{p, k}];
    if (!slot) slot = std::make_unique<FiniteField>(pp);
    return *slot;
}

inline const FiniteField& gf(std::uint64_t q) {
    auto pp = PrimePower::of(q);
    return gf(pp.p, pp.k);
}

/// The field with q^n elements, q itself a prime power.
inline const FiniteField& gf_ext(std::uint64_t q, std::uint32_t n) {
    auto pp = PrimePower::of(q);
    return gf(pp.p, pp.k * n);
}

// ---------------------------------------------------------------------------

struct FieldElement {
    const FiniteField* field = nullptr;
    FiniteField::Code code = 0;

    FieldElement() = default;
    FieldElement(const FiniteField& f, FiniteField::Code c) : field(&f), code(c) {}

    bool is_zero() const { return code == 0; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.field == b.field && a.code == b.code;
    }
};

namespace detail {
inline const FiniteField& common(const FieldElement& a, const FieldElement& b) {
    if (!a.field || a.field != b.field) throw UsageError("field elements belong to different fields");
    return *a.field;
}
}  // namespace detail

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    const auto& f = detail::common(a, b);
    return {f, f.add(a.code, b.code)};
}
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    const auto& f = detail::common(a, b);
    return {f, f.sub(a.code, b.code)};
}
inline FieldElement operator-(const FieldElement& a) { return {*a.field, a.field->neg(a.code)}; }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const auto& f = detail::common(a, b);
    return {f, f.mul(a.code, b.code)};
}
inline FieldElement inverse(const FieldElement& a) { return {*a.field, a.field->inv(a.code)}; }
inline FieldElement power(const FieldElement& a, std::int64_t e) { return {*a.field, a.field->pow(a.code, e)}; }

enum class FieldOp { Add, Mul, Inv, Neg };

inline FieldElement field_arith(const FieldElement& x, const FieldElement& y, FieldOp op) {
    switch (op) {
        case FieldOp::Add:
            return x + y;
        case FieldOp::Mul:
            return x * y;
        case FieldOp::Inv:
            return inverse(x);
        case FieldOp::Neg:
            return -x;
    }
    return x;
}

/// x -> x^{base_q}; base_q must be the order of a subfield.
inline FieldElement frobenius(const FieldElement& x, std::uint64_t base_q) {
    const auto& f = *x.field;
    require(is_prime_power(base_q), "Frobenius base must be a prime power");
    auto pp = PrimePower::of(base_q);
    require(pp.p == f.p() && f.k() % pp.k == 0, "Frobenius base is not a subfield order");
    if (x.is_zero()) return x;
    return {f, f.pow(x.code, static_cast<std::int64_t>(base_q))};
}

// ---------------------------------------------------------------------------
// subfield embeddings

/// Ring embedding F_{p^d} -> F_{p^k}, d | k.
class Embedding {
   public:
    Embedding(const FiniteField& small, const FiniteField& big) : small_(&small), big_(&big) {
        require(small.p() == big.p(), "fields of different characteristic");
        require(big.k() % small.k() == 0, "degree of subfield does not divide degree of field");
        const std::uint64_t ns = small.q() - 1, nb = big.q() - 1;
        const std::uint64_t m = nb / ns;
        // image of the small generator: first g^{m j} (gcd(j, ns) = 1) that is a root of
        // the small defining polynomial; j = 1 for Conway pairs.
        std::int64_t found = -1;
        for (std::uint64_t j = 1; j <= std::max<std::uint64_t>(ns, 1) && found < 0; ++j) {
            if (std::gcd(j, ns) != 1 && ns > 1) continue;
            const auto y = big.exp(static_cast<std::int64_t>((m * j) % nb));
            if (root_of_small_poly(y)) found = static_cast<std::int64_t>(j);
        }
        ensure(found >= 0, "no embedding of defining polynomial roots");
        image_gen_log_ = (m * static_cast<std::uint64_t>(found)) % nb;
        fwd_.assign(small.q(), 0);
        back_.assign(big.q(), kNone);
        for (FiniteField::Code c = 1; c < small.q(); ++c) {
            const auto img = big.exp(static_cast<std::int64_t>((image_gen_log_ * small.log(c)) % nb));
            fwd_[c] = img;
            back_[img] = c;
        }
        back_[0] = 0;
    }

    FiniteField::Code operator()(FiniteField::Code c) const { return fwd_[c]; }
    bool contains(FiniteField::Code big_code) const { return back_[big_code] != kNone; }
    /// inverse on the image
    FiniteField::Code preimage(FiniteField::Code big_code) const {
        if (!contains(big_code)) throw UsageError("element does not lie in the subfield");
        return back_[big_code];
    }
    const FiniteField& small() const { return *small_; }
    const FiniteField& big() const { return *big_; }

   private:
    static constexpr FiniteField::Code kNone = ~FiniteField::Code(0);
    bool root_of_small_poly(FiniteField::Code y) const {
        // small field is F_p[x]/(f) with f over F_p; prime field sits in big as codes < p
        const auto& f = small_->polynomial();
        FiniteField::Code acc = 0;
        for (std::size_t i = f.size(); i-- > 0;) acc = big_->add(big_->mul(acc, y), f[i]);
        return acc == 0;
    }
    const FiniteField* small_;
    const FiniteField* big_;
    std::uint64_t image_gen_log_ = 0;
    std::vector<FiniteField::Code> fwd_;
    std::vector<FiniteField::Code> back_;
};

inline const Embedding& embedding(const FiniteField& small, const FiniteField& big) {
    static std::mutex mu;
    static std::map<std::pair<const FiniteField*, const FiniteField*>, std::unique_ptr<Embedding>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{&small, &big}];
    if (!slot) slot = std::make_unique<Embedding>(small, big);
    return *slot;
}

inline FieldElement subfield_embed(const FieldElement& x, const PrimePower& into) {
    const auto& big = gf(into.p, into.k);
    const auto& e = embedding(*x.field, big);
    return {big, e(x.code)};
}

/// (norm, trace) from F_{q^n} down to F_q.
inline std::pair<FieldElement, FieldElement> norm_trace(const FieldElement& x, const PrimePower& to) {
    const auto& big = *x.field;
    require(to.p == big.p() && big.k() % to.k == 0, "target is not a subfield");
    const auto& small = gf(to.p, to.k);
    const std::uint32_t n = big.k() / to.k;
    FiniteField::Code nm = 1, tr = 0, y = x.code;
    for (std::uint32_t i = 0; i < n; ++i) {
        nm = big.mul(nm, y);
        tr = big.add(tr, y);
        y = big.pow(y, small.q());
    }
    const auto& e = embedding(small, big);
    return {FieldElement(small, e.preimage(nm)), FieldElement(small, e.preimage(tr))};
}

// ---------------------------------------------------------------------------
// multiplicative characters

/// chi_a(g^j) = exp(2 pi i a j / modulus) for the fixed generator g of F_{q^n}^x.
struct MultiplicativeCharacter {
    std::uint64_t modulus = 1;
    std::uint64_t exponent = 0;

    MultiplicativeCharacter() = default;
    MultiplicativeCharacter(std::uint64_t m, std::int64_t a) : modulus(m), exponent(static_cast<std::uint64_t>(mod_floor(a, static_cast<std::int64_t>(m)))) {
        require(m >= 1, "character modulus must be positive");
    }
};

inline std::complex<double> root_of_unity(std::int64_t num, std::uint64_t den) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(mod_floor(num, static_cast<std::int64_t>(den))) / static_cast<double>(den);
    return {std::cos(t), std::sin(t)};
}

inline std::complex<double> char_eval(const MultiplicativeCharacter& chi, const FieldElement& x) {
    if (x.is_zero()) throw DomainError("multiplicative character evaluated at zero");
    require(chi.modulus == x.field->q() - 1, "character modulus does not match the field");
    return root_of_unity(static_cast<std::int64_t>((chi.exponent * x.field->log(x.code)) % chi.modulus), chi.modulus);
}

/// a q^i != a mod (q^n - 1) for 0 < i < n
inline bool is_regular_character(std::uint64_t a, std::uint32_t n, std::uint64_t q) {
    const std::uint64_t m = ipow(q, n) - 1;
    a %= m;
    std::uint64_t b = a;
    for (std::uint32_t i = 1; i < n; ++i) {
        b = (b * q) % m;
        if (b == a) return false;
    }
    return true;
}

/// Representatives (least element) of the Frobenius orbits of regular exponents mod q^n - 1.
inline std::vector<std::uint64_t> regular_orbit_representatives(std::uint32_t n, std::uint64_t q) {
    const std::uint64_t m = ipow(q, n) - 1;
    std::vector<std::uint64_t> reps;
    for (std::uint64_t a = 0; a < m; ++a) {
        if (!is_regular_character(a, n, q)) continue;
        std::uint64_t b = a, least = a;
        for (std::uint32_t i = 1; i < n; ++i) {
            b = (b * q) % m;
            least = std::min(least, b);
        }
        if (least == a) reps.push_back(a);
    }
    return reps;
}

}  // namespace lietype

#endif
