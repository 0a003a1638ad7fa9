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

#ifndef LIETYPE_POLYNOMIAL_HPP
#define LIETYPE_POLYNOMIAL_HPP

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace lietype {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Dense univariate polynomial with coefficients in an integral domain T,
 * stored in ascending powers. The zero polynomial has no coefficients.
 */
template <class T>
class Polynomial {
   public:
    Polynomial() = default;
    Polynomial(std::initializer_list<T> c) : c_(c) { trim(); }
    explicit Polynomial(std::vector<T> c) : c_(std::move(c)) { trim(); }

    static Polynomial constant(const T& a) { return Polynomial(std::vector<T>{a}); }

    /// x^k
    static Polynomial monomial(std::size_t k, const T& a = T(1)) {
        std::vector<T> c(k + 1, T(0));
        c[k] = a;
        return Polynomial(std::move(c));
    }

    /// x^k - 1
    static Polynomial x_pow_minus_one(std::size_t k) {
        std::vector<T> c(k + 1, T(0));
        c[0] = T(-1);
        c[k] += T(1);
        return Polynomial(std::move(c));
    }

    /// x^k + 1
    static Polynomial x_pow_plus_one(std::size_t k) {
        std::vector<T> c(k + 1, T(0));
        c[0] = T(1);
        c[k] += T(1);
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<T>& coefficients() const { return c_; }
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    T leading() const { return c_.empty() ? T(0) : c_.back(); }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) {
        *this = *this * o;
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == T(0)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(Polynomial a, const T& s) {
        for (auto& x : a.c_) x *= s;
        a.trim();
        return a;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(T(1)), b = *this;
        while (e) {
            if (e & 1u) r *= b;
            b *= b;
            e >>= 1u;
        }
        return r;
    }

    template <class U>
    U evaluate(const U& x) const {
        U r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + U(*it);
        return r;
    }

    /// p(-x)
    Polynomial negate_variable() const {
        auto c = c_;
        for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
        return Polynomial(std::move(c));
    }

    /// Division by a divisor with leading coefficient +-1; returns (quotient, remainder).
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
        require(!d.is_zero(), "polynomial division by zero");
        require(d.leading() == T(1) || d.leading() == T(-1), "divisor must have unit leading coefficient");
        if (degree() < d.degree()) return {Polynomial{}, *this};
        std::vector<T> rem = c_;
        std::vector<T> quo(c_.size() - d.c_.size() + 1, T(0));
        const T lead = d.leading();
        for (int i = static_cast<int>(rem.size()) - 1; i >= d.degree(); --i) {
            T f = rem[i] * lead;  // lead is its own inverse
            if (f == T(0)) continue;
            const std::size_t shift = i - d.degree();
            quo[shift] = f;
            for (std::size_t j = 0; j < d.c_.size(); ++j) rem[shift + j] -= f * d.c_[j];
        }
        return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
    }

    /// Number of times d divides *this exactly.
    int multiplicity(const Polynomial& d) const {
        int m = 0;
        Polynomial cur = *this;
        while (!cur.is_zero()) {
            auto [qt, r] = cur.divmod(d);
            if (!r.is_zero()) break;
            cur = std::move(qt);
            ++m;
        }
        return m;
    }

    std::string to_string(const std::string& var = "q") const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            T a = c_[i];
            if (a == T(0)) continue;
            bool neg = a < T(0);
            T mag = neg ? T(-a) : a;
            if (first)
                os << (neg ? "-" : "");
            else
                os << (neg ? " - " : " + ");
            if (i == 0 || mag != T(1)) os << mag;
            if (i > 0) {
                if (mag != T(1)) os << "*";
                os << var;
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        return os.str();
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

using IntPolynomial = Polynomial<BigInt>;

}  // namespace lietype

#endif
