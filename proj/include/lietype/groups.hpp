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
 * @file groups.hpp
 * @brief Fully enumerated matrix groups GL_n, SL_n, U_n and Sp_4 over small fields.
 *
 * Models:
 *   GL_n(F_q), SL_n(F_q)  entries in F_q.
 *   U_n(F_q)              entries in F_{q^2}, g^T J conj(g) = J with J the antidiagonal of ones.
 *   Sp_4(F_q)             g^T J g = J, J antidiagonal with signs (+1, +1, -1, -1).
 * In each model the upper triangular elements form a Borel subgroup.
 *
 * A group is generated by its diagonal part, its upper unitriangular part and a
 * monomial antidiagonal element, then closed by breadth-first search. Subgroups
 * are Group objects of their own that remember their parent ids.
 */

#ifndef LIETYPE_GROUPS_HPP
#define LIETYPE_GROUPS_HPP

#include <deque>
#include <map>
#include <mutex>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "etale.hpp"
#include "matrix.hpp"
#include "rootdata.hpp"

namespace lietype {

enum class Family { GL, SL, U, Sp };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::GL:
            return "GL";
        case Family::SL:
            return "SL";
        case Family::U:
            return "U";
        case Family::Sp:
            return "Sp";
    }
    return "?";
}

inline Family parse_family(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (s == "GL") return Family::GL;
    if (s == "SL") return Family::SL;
    if (s == "U" || s == "GU") return Family::U;
    if (s == "SP" || s == "SP4") return Family::Sp;
    throw UsageError("unknown group family '" + s + "'");
}

/// Order of the group as a polynomial in q.
inline IntPolynomial family_order_polynomial(Family f, int n) {
    switch (f) {
        case Family::GL:
            return gl_order_polynomial(n);
        case Family::SL:
            return n == 1 ? IntPolynomial{BigInt(1)} : sl_order_polynomial(n);
        case Family::U:
            return ennola_unitary_order(n);
        case Family::Sp:
            return sp_order_polynomial(n);
    }
    return {};
}

enum class ElementKind { Semisimple, Unipotent, Mixed };

inline const char* kind_name(ElementKind k) {
    switch (k) {
        case ElementKind::Semisimple:
            return "ss";
        case ElementKind::Unipotent:
            return "unip";
        case ElementKind::Mixed:
            return "mixed";
    }
    return "?";
}

struct ClassData {
    std::vector<std::uint32_t> class_of;  // per element
    std::vector<std::uint32_t> rep;
    std::vector<std::uint64_t> size;
    std::vector<std::uint64_t> centralizer;
    std::vector<std::uint64_t> elem_order;
    std::vector<ElementKind> kind;
    std::vector<std::vector<std::uint32_t>> members;

    std::size_t count() const { return rep.size(); }
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

class Group {
   public:
    static constexpr std::uint64_t kMaxOrder = 500000;

    const std::string& label() const { return label_; }
    Family family() const { return family_; }
    int n() const { return n_; }
    std::uint64_t q() const { return q_; }
    std::uint32_t p() const { return field_->p(); }
    const FiniteField& field() const { return *field_; }
    std::size_t order() const { return elems_.size(); }

    const Mat& element(std::uint32_t i) const { return elems_[i]; }
    const std::vector<Mat>& elements() const { return elems_; }
    std::optional<std::uint32_t> find(const Mat& m) const {
        auto it = index_.find(m.key(field_->q()));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    bool contains(const Mat& m) const { return index_.count(m.key(field_->q())) > 0; }
    std::uint32_t id_of(const Mat& m) const {
        auto r = find(m);
        if (!r) throw UsageError("matrix is not an element of " + label_);
        return *r;
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return id_of(mat_mul(*field_, elems_[a], elems_[b])); }
    std::uint32_t inverse(std::uint32_t a) const { return inv_[a]; }
    std::uint32_t identity() const { return identity_; }
    std::uint32_t conjugate(std::uint32_t g, std::uint32_t x) const { return mul(mul(g, x), inv_[g]); }
    std::uint32_t power(std::uint32_t a, std::int64_t e) const {
        if (e < 0) {
            a = inv_[a];
            e = -e;
        }
        Mat r = Mat::identity(n_), b = elems_[a];
        while (e) {
            if (e & 1) r = mat_mul(*field_, r, b);
            b = mat_mul(*field_, b, b);
            e >>= 1;
        }
        return id_of(r);
    }
    std::uint64_t element_order(std::uint32_t a) const {
        std::uint64_t k = 1;
        Mat x = elems_[a];
        const Mat id = Mat::identity(n_);
        while (!(x == id)) {
            x = mat_mul(*field_, x, elems_[a]);
            ++k;
        }
        return k;
    }
    const std::vector<std::uint32_t>& generators() const { return gens_; }
    const ClassData& classes() const { return classes_; }
    std::size_t num_classes() const { return classes_.count(); }
    std::uint32_t class_of(std::uint32_t a) const { return classes_.class_of[a]; }

    /// null for a top-level group
    const GroupPtr& parent() const { return parent_; }
    std::uint32_t to_parent(std::uint32_t a) const { return to_parent_.empty() ? a : to_parent_[a]; }
    /// Levi block composition that the group preserves (one block for a full group)
    const std::vector<int>& blocks() const { return blocks_; }

    bool is_scalar(std::uint32_t a) const {
        const Mat& m = elems_[a];
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if ((i == j && m(i, j) != m(0, 0)) || (i != j && m(i, j))) return false;
        return true;
    }

    // -- construction ------------------------------------------------------

    /// closure of generators; identity first
    static std::vector<Mat> closure(const FiniteField& f, int n, const std::vector<Mat>& gens, std::size_t limit = kMaxOrder * 4) {
        std::vector<Mat> out{Mat::identity(n)};
        std::unordered_set<std::uint64_t> seen{out[0].key(f.q())};
        for (std::size_t i = 0; i < out.size(); ++i) {
            for (const auto& g : gens) {
                Mat y = mat_mul(f, out[i], g);
                if (seen.insert(y.key(f.q())).second) {
                    out.push_back(y);
                    if (out.size() > limit) throw ResourceError("group closure exceeded element bound");
                }
            }
        }
        return out;
    }

    /// greedy generating set of the group formed by the given elements
    static std::vector<Mat> greedy_generators(const FiniteField& f, int n, const std::vector<Mat>& elems) {
        std::vector<Mat> gens;
        std::unordered_set<std::uint64_t> span{Mat::identity(n).key(f.q())};
        for (const auto& x : elems) {
            if (span.count(x.key(f.q()))) continue;
            gens.push_back(x);
            span.clear();
            for (const auto& y : closure(f, n, gens)) span.insert(y.key(f.q()));
        }
        return gens;
    }

    Group(std::string label, Family fam, int n, std::uint64_t q, const FiniteField& f, std::vector<Mat> elems,
          std::vector<Mat> gens, GroupPtr parent = nullptr, std::vector<std::uint32_t> to_parent = {},
          std::vector<int> blocks = {})
        : label_(std::move(label)),
          family_(fam),
          n_(n),
          q_(q),
          field_(&f),
          elems_(std::move(elems)),
          parent_(std::move(parent)),
          to_parent_(std::move(to_parent)),
          blocks_(std::move(blocks)) {
        if (blocks_.empty()) blocks_ = {n_};
        index_.reserve(elems_.size() * 2);
        for (std::uint32_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i].key(f.q()), i);
        ensure(index_.size() == elems_.size(), "duplicate group elements");
        identity_ = id_of(Mat::identity(n_));
        inv_.resize(elems_.size());
        for (std::uint32_t i = 0; i < elems_.size(); ++i) inv_[i] = id_of(mat_inverse(f, elems_[i]));
        for (const auto& g : gens) gens_.push_back(id_of(g));
        compute_classes();
    }

   private:
    void compute_classes() {
        const std::size_t N = elems_.size();
        classes_.class_of.assign(N, ~0u);
        for (std::uint32_t x = 0; x < N; ++x) {
            if (classes_.class_of[x] != ~0u) continue;
            const std::uint32_t c = static_cast<std::uint32_t>(classes_.rep.size());
            std::vector<std::uint32_t> orbit{x};
            classes_.class_of[x] = c;
            for (std::size_t i = 0; i < orbit.size(); ++i)
                for (auto g : gens_) {
                    const std::uint32_t y = conjugate(g, orbit[i]);
                    if (classes_.class_of[y] == ~0u) {
                        classes_.class_of[y] = c;
                        orbit.push_back(y);
                    }
                }
            std::sort(orbit.begin(), orbit.end());
            classes_.rep.push_back(x);
            classes_.size.push_back(orbit.size());
            ensure(N % orbit.size() == 0, "class size does not divide group order");
            classes_.centralizer.push_back(N / orbit.size());
            const std::uint64_t o = element_order(x);
            classes_.elem_order.push_back(o);
            const std::uint32_t p = field_->p();
            ElementKind k;
            if (o % p != 0)
                k = ElementKind::Semisimple;
            else {
                std::uint64_t t = o;
                while (t % p == 0) t /= p;
                k = t == 1 ? ElementKind::Unipotent : ElementKind::Mixed;
            }
            classes_.kind.push_back(k);
            classes_.members.push_back(std::move(orbit));
        }
    }

    std::string label_;
    Family family_;
    int n_;
    std::uint64_t q_;
    const FiniteField* field_;
    std::vector<Mat> elems_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
    std::vector<std::uint32_t> inv_;
    std::uint32_t identity_ = 0;
    std::vector<std::uint32_t> gens_;
    ClassData classes_;
    GroupPtr parent_;
    std::vector<std::uint32_t> to_parent_;
    std::vector<int> blocks_;
};

/// Field of matrix entries for the family.
inline const FiniteField& entry_field(Family fam, std::uint64_t q) {
    auto pp = PrimePower::of(q);
    return fam == Family::U ? gf(pp.p, 2 * pp.k) : gf(pp.p, pp.k);
}

/// Membership predicate of the standard model.
inline bool in_family(Family fam, const FiniteField& E, std::uint64_t q, const Mat& g) {
    const int n = g.n;
    switch (fam) {
        case Family::GL:
            return determinant(E, g) != 0;
        case Family::SL:
            return determinant(E, g) == 1;
        case Family::U: {
            const Mat J = unitary_form(n);
            return mat_mul(E, mat_mul(E, transpose(g), J), entry_power(E, g, q)) == J;
        }
        case Family::Sp: {
            const Mat J = symplectic_form(E, n);
            return mat_mul(E, mat_mul(E, transpose(g), J), g) == J;
        }
    }
    return false;
}

inline std::string group_label(Family fam, int n, std::uint64_t q) {
    return family_name(fam) + "(" + std::to_string(n) + "," + std::to_string(q) + ")";
}

/// Estimated order from the closed formula; throws ResourceError above the bound.
inline std::uint64_t checked_group_order(Family fam, int n, std::uint64_t q) {
    require(is_prime_power(q), "q must be a prime power");
    require(n >= 1 && n <= Mat::kMax, "matrix size must be between 1 and 4");
    if (fam == Family::Sp) require(n % 2 == 0, "symplectic groups need even size");
    const BigInt est = family_order_polynomial(fam, n).evaluate(BigInt(q));
    if (est > Group::kMaxOrder)
        throw ResourceError(group_label(fam, n, q) + " has order " + est.str() + ", above the enumeration bound 500000");
    return static_cast<std::uint64_t>(est);
}

inline GroupPtr build_group(Family fam, int n, std::uint64_t q) {
    const std::uint64_t expected = checked_group_order(fam, n, q);
    const FiniteField& E = entry_field(fam, q);
    const auto pred = [&](const Mat& g) { return in_family(fam, E, q, g); };
    // diagonal part
    std::vector<Mat> diag, unip;
    {
        const std::uint64_t total = ipow(E.q() - 1, n);
        for (std::uint64_t t = 0; t < total; ++t) {
            std::uint64_t s = t;
            std::vector<Code> d(n);
            for (int i = 0; i < n; ++i, s /= E.q() - 1) d[i] = E.exp(static_cast<std::int64_t>(s % (E.q() - 1)));
            Mat m = Mat::diagonal(d);
            if (pred(m)) diag.push_back(m);
        }
    }
    // upper unitriangular part
    {
        const int m = n * (n - 1) / 2;
        const std::uint64_t total = ipow(E.q(), m);
        for (std::uint64_t t = 0; t < total; ++t) {
            std::uint64_t s = t;
            Mat u = Mat::identity(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, s /= E.q()) u(i, j) = static_cast<Code>(s % E.q());
            if (pred(u)) unip.push_back(u);
        }
    }
    std::vector<Mat> gens = Group::greedy_generators(E, n, diag);
    for (const auto& g : Group::greedy_generators(E, n, unip)) gens.push_back(g);
    // monomial antidiagonal element with entries +-1
    bool have_w0 = false;
    for (std::uint32_t signs = 0; signs < (1u << n) && !have_w0; ++signs) {
        Mat w(n);
        for (int i = 0; i < n; ++i) w(i, n - 1 - i) = (signs >> i) & 1u ? E.neg(1) : 1;
        if (pred(w)) {
            gens.push_back(w);
            have_w0 = true;
        }
    }
    ensure(have_w0, "no antidiagonal element in the group");
    auto elems = Group::closure(E, n, gens, expected);
    if (elems.size() != expected)
        throw ConsistencyError(group_label(fam, n, q) + ": enumerated " + std::to_string(elems.size()) +
                               " elements, formula gives " + std::to_string(expected));
    return std::make_shared<const Group>(group_label(fam, n, q), fam, n, q, E, std::move(elems), std::move(gens));
}

/// A subgroup given by parent element ids.
inline GroupPtr make_subgroup(const GroupPtr& parent, const std::vector<std::uint32_t>& ids, const std::string& label,
                              std::vector<int> blocks = {}) {
    std::vector<Mat> elems;
    elems.reserve(ids.size());
    for (auto i : ids) elems.push_back(parent->element(i));
    auto gens = Group::greedy_generators(parent->field(), parent->n(), elems);
    auto check = Group::closure(parent->field(), parent->n(), gens, ids.size());
    if (check.size() != ids.size()) throw UsageError("element set is not a subgroup");
    return std::make_shared<const Group>(label, parent->family(), parent->n(), parent->q(), parent->field(),
                                         std::move(elems), std::move(gens), parent, ids, std::move(blocks));
}

// ---------------------------------------------------------------------------
// Jordan decomposition of elements

struct ElementJordanPair {
    std::uint32_t s = 0;
    std::uint32_t u = 0;
};

inline ElementJordanPair jordan_decompose(const Group& G, std::uint32_t g) {
    const std::uint64_t m = G.element_order(g);
    const std::uint64_t p = G.p();
    std::uint64_t mp = 1, mq = m;
    while (mq % p == 0) {
        mq /= p;
        mp *= p;
    }
    // a mp + b mq = 1
    std::int64_t a = 0, b = 0;
    {
        std::int64_t r0 = static_cast<std::int64_t>(mp), r1 = static_cast<std::int64_t>(mq);
        std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (r1) {
            const std::int64_t qt = r0 / r1;
            std::tie(r0, r1) = std::make_pair(r1, r0 - qt * r1);
            std::tie(s0, s1) = std::make_pair(s1, s0 - qt * s1);
            std::tie(t0, t1) = std::make_pair(t1, t0 - qt * t1);
        }
        a = s0;
        b = t0;
    }
    const auto mm = static_cast<std::int64_t>(m);
    return {G.power(g, mod_floor(a * static_cast<std::int64_t>(mp), mm)),
            G.power(g, mod_floor(b * static_cast<std::int64_t>(mq), mm))};
}

// ---------------------------------------------------------------------------
// standard parabolic subgroups

struct Parabolic {
    std::vector<int> composition;
    int l = 0;  // number of simple roots in the Levi
    GroupPtr P, M, N;

    std::string name() const {
        std::string s = "(";
        for (std::size_t i = 0; i < composition.size(); ++i) s += (i ? "," : "") + std::to_string(composition[i]);
        return s + ")";
    }
};

inline std::vector<std::vector<int>> compositions(int n) {
    std::vector<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> c;
        int len = 1;
        for (int i = 0; i < n - 1; ++i) {
            if (mask & (1u << i)) {
                c.push_back(len);
                len = 1;
            } else {
                ++len;
            }
        }
        c.push_back(len);
        out.push_back(c);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a > b;
    });
    return out;
}

inline bool refines(const std::vector<int>& fine, const std::vector<int>& coarse) {
    std::size_t j = 0;
    int acc = 0;
    for (int x : fine) {
        acc += x;
        if (j >= coarse.size() || acc > coarse[j]) return false;
        if (acc == coarse[j]) {
            acc = 0;
            ++j;
        }
    }
    return acc == 0 && j == coarse.size();
}

inline std::vector<int> block_index(const std::vector<int>& comp) {
    std::vector<int> b;
    for (std::size_t i = 0; i < comp.size(); ++i)
        for (int k = 0; k < comp[i]; ++k) b.push_back(static_cast<int>(i));
    return b;
}

/// Levi projection: zero the blocks off the diagonal.
inline Mat levi_projection(const Mat& g, const std::vector<int>& comp) {
    const auto b = block_index(comp);
    Mat m = g;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (b[i] != b[j]) m(i, j) = 0;
    return m;
}

inline int levi_rank(Family fam, int n, const std::vector<int>& comp) {
    if (fam == Family::GL || fam == Family::SL) {
        int l = 0;
        for (int d : comp) l += d - 1;
        return l;
    }
    return n / 2 - static_cast<int>(comp.size()) / 2;
}

inline std::vector<Parabolic> compute_standard_parabolics(const GroupPtr& G) {
    const int n = G->n();
    const Family fam = G->family();
    std::vector<Parabolic> out;
    for (const auto& comp : compositions(n)) {
        if (!refines(comp, G->blocks())) continue;
        if (fam == Family::U || fam == Family::Sp) {
            auto r = comp;
            std::reverse(r.begin(), r.end());
            if (r != comp) continue;
        }
        const auto b = block_index(comp);
        std::vector<std::uint32_t> pid, mid, nid;
        for (std::uint32_t x = 0; x < G->order(); ++x) {
            const Mat& g = G->element(x);
            bool upper = true, diag = true, unitri = true;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const Code v = g(i, j);
                    if (b[i] > b[j] && v) upper = false;
                    if (b[i] != b[j] && v) diag = false;
                    if (b[i] == b[j] && v != (i == j ? 1u : 0u)) unitri = false;
                }
            if (!upper) continue;
            pid.push_back(G->to_parent(x));
            if (diag) mid.push_back(G->to_parent(x));
            if (unitri) nid.push_back(G->to_parent(x));
        }
        Parabolic P;
        P.composition = comp;
        P.l = levi_rank(fam, n, comp);
        // subgroups are expressed over the top-level group
        GroupPtr top = G;
        while (top->parent()) top = top->parent();
        P.P = make_subgroup(top, pid, G->label() + " P" + P.name(), comp);
        P.M = make_subgroup(top, mid, G->label() + " M" + P.name(), comp);
        P.N = make_subgroup(top, nid, G->label() + " N" + P.name(), comp);
        ensure(P.P->order() == P.M->order() * P.N->order(), "P = MN fails");
        out.push_back(std::move(P));
    }
    if (out.empty()) throw UsageError("no standard parabolics for " + G->label());
    return out;
}

/// All standard parabolics of G containing its upper triangular Borel subgroup, cached per group.
inline const std::vector<Parabolic>& standard_parabolics(const GroupPtr& G) {
    static std::mutex mu;
    static std::map<const Group*, std::pair<GroupPtr, std::vector<Parabolic>>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(G.get());
        if (it != cache.end() && it->second.first == G) return it->second.second;
    }
    auto ps = compute_standard_parabolics(G);
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[G.get()];
    slot = {G, std::move(ps)};
    return slot.second;
}

// ---------------------------------------------------------------------------
// tori

struct TorusEmbedding {
    GroupPtr group;
    std::vector<TorusFactor> factors;
    std::vector<std::uint64_t> orders;
    std::vector<std::uint32_t> ids;                    // ambient ids
    std::vector<std::vector<std::uint64_t>> coords;    // exponent of each factor generator
    std::vector<Mat> algebra_basis;
    std::unordered_set<std::uint64_t> algebra;          // keys of all elements of C
    std::unordered_map<std::uint32_t, std::size_t> position;

    std::size_t size() const { return ids.size(); }
};

inline TorusEmbedding embed_etale_torus(const GroupPtr& G, const EtaleTorus& t) {
    require(t.n == G->n() && t.E == &G->field(), "torus datum does not match the group");
    const FiniteField& E = G->field();
    TorusEmbedding out;
    out.group = G;
    out.factors = t.factors;
    out.orders = t.orders;
    out.algebra_basis = t.algebra_basis;
    std::size_t total = 1;
    for (auto o : t.orders) total *= o;
    // powers of each generator
    std::vector<std::vector<Mat>> pw(t.generators.size());
    for (std::size_t f = 0; f < t.generators.size(); ++f) {
        Mat x = Mat::identity(t.n);
        for (std::uint64_t j = 0; j < t.orders[f]; ++j) {
            pw[f].push_back(x);
            x = mat_mul(E, x, t.generators[f]);
        }
        ensure(x == Mat::identity(t.n), "torus generator has the wrong order");
    }
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t s = idx;
        std::vector<std::uint64_t> c(t.orders.size());
        Mat m = Mat::identity(t.n);
        for (std::size_t f = 0; f < t.orders.size(); ++f) {
            c[f] = s % t.orders[f];
            s /= t.orders[f];
            m = mat_mul(E, m, pw[f][c[f]]);
        }
        auto id = G->find(m);
        ensure(id.has_value(), "torus element outside the group");
        ensure(out.position.emplace(*id, out.ids.size()).second, "torus parametrisation is not injective");
        out.ids.push_back(*id);
        out.coords.push_back(std::move(c));
    }
    const std::size_t dimC = t.algebra_basis.size();
    const std::uint64_t combos = ipow(E.q(), static_cast<unsigned>(dimC));
    for (std::uint64_t s = 0; s < combos; ++s) {
        std::uint64_t r = s;
        Mat m(t.n);
        for (std::size_t i = 0; i < dimC; ++i, r /= E.q()) m = mat_add(E, m, mat_scale(E, static_cast<Code>(r % E.q()), t.algebra_basis[i]));
        out.algebra.insert(m.key(E.q()));
    }
    return out;
}

/// Block diagonal image of prod F_{q^{n_i}}^x in GL_n(F_q) under the regular representation.
inline TorusEmbedding embed_torus(const GroupPtr& G, const std::vector<int>& partition) {
    require(G->family() == Family::GL, "embed_torus expects a general linear group");
    int s = 0;
    std::vector<TorusFactor> f;
    for (int a : partition) {
        require(a >= 1, "partition parts must be positive");
        s += a;
        f.push_back({FactorKind::Split, a});
    }
    require(s == G->n(), "partition does not sum to n");
    return embed_etale_torus(G, build_etale_torus(f, G->q(), FormKind::None));
}

struct WeylQuotient {
    std::uint64_t normalizer_order = 0;
    std::uint64_t order = 0;                             // |N/T|
    std::vector<std::uint32_t> coset_reps;                // ambient ids
    std::vector<std::vector<std::size_t>> action;        // permutation of torus positions per coset rep
};

namespace detail {
inline WeylQuotient weyl_from_normalizer(const Group& G, const std::vector<std::uint32_t>& N, const std::vector<std::uint32_t>& T) {
    WeylQuotient w;
    w.normalizer_order = N.size();
    ensure(N.size() % T.size() == 0, "torus does not divide its normalizer");
    w.order = N.size() / T.size();
    std::unordered_map<std::uint32_t, std::size_t> pos;
    for (std::size_t i = 0; i < T.size(); ++i) pos[T[i]] = i;
    std::unordered_set<std::uint32_t> covered;
    for (auto g : N) {
        if (covered.count(g)) continue;
        for (auto t : T) covered.insert(G.mul(g, t));
        w.coset_reps.push_back(g);
        std::vector<std::size_t> perm(T.size());
        for (std::size_t i = 0; i < T.size(); ++i) perm[i] = pos.at(G.conjugate(g, T[i]));
        w.action.push_back(std::move(perm));
    }
    ensure(w.coset_reps.size() == w.order, "coset enumeration mismatch");
    return w;
}
}  // namespace detail

/// N_G(T)/T for an abelian subgroup T given by ambient ids.
inline WeylQuotient normalizer_weyl(const Group& G, const std::vector<std::uint32_t>& T) {
    std::unordered_set<std::uint32_t> Tset(T.begin(), T.end());
    std::vector<Mat> tm;
    for (auto t : T) tm.push_back(G.element(t));
    const auto tgens = Group::greedy_generators(G.field(), G.n(), tm);
    std::vector<std::uint32_t> N;
    for (std::uint32_t g = 0; g < G.order(); ++g) {
        bool ok = true;
        for (const auto& x : tgens)
            if (!Tset.count(G.conjugate(g, G.id_of(x)))) {
                ok = false;
                break;
            }
        if (ok) N.push_back(g);
    }
    return detail::weyl_from_normalizer(G, N, T);
}

/// N_G(C)/(C n G) for the algebra C of an embedded torus.
inline WeylQuotient algebra_normalizer_weyl(const TorusEmbedding& emb) {
    const Group& G = *emb.group;
    const FiniteField& E = G.field();
    std::vector<std::uint32_t> N;
    for (std::uint32_t g = 0; g < G.order(); ++g) {
        const Mat& x = G.element(g);
        const Mat& xi = G.element(G.inverse(g));
        bool ok = true;
        for (const auto& b : emb.algebra_basis)
            if (!emb.algebra.count(mat_mul(E, mat_mul(E, x, b), xi).key(E.q()))) {
                ok = false;
                break;
            }
        if (ok) N.push_back(g);
    }
    return detail::weyl_from_normalizer(G, N, emb.ids);
}

/// Is there g in G with g H1 g^{-1} = H2?
inline bool subgroups_conjugate(const Group& G, const std::vector<std::uint32_t>& H1, const std::vector<std::uint32_t>& H2) {
    if (H1.size() != H2.size()) return false;
    std::unordered_set<std::uint32_t> target(H2.begin(), H2.end());
    std::vector<Mat> hm;
    for (auto h : H1) hm.push_back(G.element(h));
    const auto gens = Group::greedy_generators(G.field(), G.n(), hm);
    for (std::uint32_t g = 0; g < G.order(); ++g) {
        bool ok = true;
        for (const auto& x : gens)
            if (!target.count(G.conjugate(g, G.id_of(x)))) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

inline bool is_abelian(const Group& G, const std::vector<std::uint32_t>& H) {
    std::vector<Mat> hm;
    for (auto h : H) hm.push_back(G.element(h));
    const auto gens = Group::greedy_generators(G.field(), G.n(), hm);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (!(mat_mul(G.field(), gens[i], gens[j]) == mat_mul(G.field(), gens[j], gens[i]))) return false;
    return true;
}

}  // namespace lietype

#endif
