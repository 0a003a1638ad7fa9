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

#ifndef LIETYPE_ACCEPTANCE_HPP
#define LIETYPE_ACCEPTANCE_HPP

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "lietype/dlchar.hpp"
#include "lietype/duality.hpp"
#include "lietype/exceptional.hpp"
#include "lietype/rootdata.hpp"

namespace lietype {

namespace tolerance {
inline constexpr double kOrthogonality = 1e-6;  // oracle row/column orthogonality before snapping
inline constexpr double kValue = 1e-6;          // class function comparisons
}  // namespace tolerance

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

namespace acceptance {

// Accumulates failures with a short reason each.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        ++total_;
        if (!ok) failures_.push_back(what);
    }
    void note(const std::string& s) { notes_.push_back(s); }
    bool ok() const { return failures_.empty(); }

    std::string summary() const {
        std::ostringstream os;
        os << (total_ - failures_.size()) << "/" << total_ << " checks";
        for (const auto& n : notes_) os << "; " << n;
        for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) os << "; FAILED " << failures_[i];
        if (failures_.size() > 5) os << "; ... " << failures_.size() - 5 << " more";
        return os.str();
    }

private:
    std::size_t total_ = 0;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

inline std::string str(const BigInt& x) { return x.str(); }

struct GroupSpec {
    Family family;
    int n;
    std::uint64_t q;
};

inline std::vector<GroupSpec> order_groups() {
    std::vector<GroupSpec> out;
    for (std::uint64_t q : {2, 3, 4, 5}) out.push_back({Family::GL, 2, q});
    for (std::uint64_t q : {2, 3}) out.push_back({Family::GL, 3, q});
    for (std::uint64_t q : {2, 3, 4, 5}) out.push_back({Family::SL, 2, q});
    out.push_back({Family::U, 2, 2});
    out.push_back({Family::U, 3, 2});
    out.push_back({Family::Sp, 4, 2});
    return out;
}

inline void orders(Check& c) {
    for (const auto& s : order_groups()) {
        auto G = build_group(s.family, s.n, s.q);
        const BigInt poly = family_order_polynomial(s.family, s.n).evaluate(BigInt(s.q));
        c.expect(BigInt(G->order()) == poly, G->label() + " has " + std::to_string(G->order()) + " elements, polynomial " + str(poly));
    }
}

// |W| and N from the standard classification tables, independent of the degree list
inline std::pair<BigInt, int> weyl_table(const RootSystemType& t) {
    const int l = t.rank;
    BigInt fact = 1;
    for (int i = 2; i <= l; ++i) fact *= i;
    switch (t.family) {
        case 'A': return {fact * (l + 1), l * (l + 1) / 2};
        case 'B':
        case 'C': return {fact * pow(BigInt(2), static_cast<unsigned>(l)), l * l};
        case 'D': return {fact * pow(BigInt(2), static_cast<unsigned>(l - 1)), l * (l - 1)};
        case 'G': return {BigInt(12), 6};
        case 'F': return {BigInt(1152), 24};
        default: break;
    }
    if (l == 6) return {BigInt(51840), 36};
    if (l == 7) return {BigInt(2903040), 63};
    return {BigInt(696729600), 120};
}

inline void exponents(Check& c) {
    const auto types = tabulated_types();
    c.expect(types.size() == 14, "fourteen tabulated types");
    for (const auto& t : types) {
        const auto [w, N] = weyl_table(t);
        BigInt prod = 1;
        int sum = 0;
        for (int d : degrees(t)) {
            prod *= d;
            sum += d - 1;
        }
        c.expect(prod == w, t.name() + " product of degrees " + str(prod) + " vs |W| " + str(w));
        c.expect(sum == N, t.name() + " sum of exponents " + std::to_string(sum) + " vs N " + std::to_string(N));
        c.expect(q_to_one_limit(t) == w, t.name() + " q -> 1 limit");
    }
}

inline std::vector<GroupPtr> oracle_groups() {
    std::vector<GroupPtr> out;
    for (const auto& s : order_groups()) out.push_back(build_group(s.family, s.n, s.q));
    out.push_back(build_group(Family::U, 3, 3));
    return out;
}

inline void oracle(Check& c) {
    for (const auto& G : oracle_groups()) {
        const auto& T = character_table(G);
        const double err = orthogonality_error(T);
        c.expect(err < tolerance::kOrthogonality, G->label() + " orthogonality error " + std::to_string(err));
        long long s = 0;
        for (auto d : T.degrees) s += d * d;
        c.expect(s == static_cast<long long>(G->order()), G->label() + " sum of squared degrees");
        c.expect(T.size() == G->num_classes(), G->label() + " irreducibles vs classes");
    }
}

inline void green(Check& c) {
    for (auto [n, q] : std::vector<std::pair<int, std::uint64_t>>{{2, 2}, {2, 3}, {2, 5}, {3, 2}}) {
        auto G = build_group(Family::GL, n, q);
        const auto& T = character_table(G);
        std::set<std::size_t> rows;
        BigInt dim = 1;
        for (int i = 1; i < n; ++i) dim *= BigInt(ipow(q, static_cast<unsigned>(i)) - 1);
        for (auto e : regular_orbit_representatives(static_cast<std::uint32_t>(n), q)) {
            const auto chi = green_cuspidal(G, e);
            std::optional<std::size_t> row;
            for (std::size_t i = 0; i < T.size(); ++i)
                if (T.irr[i].approx_equal(chi, tolerance::kValue)) row = i;
            c.expect(row.has_value(), G->label() + " orbit " + std::to_string(e) + " matches no oracle row");
            if (row) rows.insert(*row);
            c.expect(std::abs(chi.degree() - static_cast<double>(dim)) < tolerance::kValue, G->label() + " cuspidal dimension");
        }
        const auto cusp = cuspidal_indices(T);
        c.expect(rows.size() == cusp.size(), G->label() + " Green characters cover the cuspidals");
        if (n == 2) c.expect(rows.size() == (q * q - q) / 2, G->label() + " cuspidal count (q^2 - q)/2");
    }
}

inline void dl_dimensions(Check& c) {
    for (auto [fam, n, q] : std::vector<std::tuple<Family, int, std::uint64_t>>{
             {Family::GL, 2, 3}, {Family::GL, 2, 5}, {Family::GL, 3, 2}, {Family::U, 3, 2}}) {
        auto G = build_group(fam, n, q);
        for (const auto& tc : all_torus_characters(fam, n, q)) {
            const auto R = dl_character(G, tc);
            const BigInt d = dl_dimension(tc.torus, q);
            c.expect(std::abs(R.degree() - static_cast<double>(d)) < tolerance::kValue,
                     G->label() + " " + tc.label() + " dimension " + str(d));
            const auto [eg, et] = epsilon_signs(tc.torus);
            c.expect((d > 0 ? 1 : -1) == eg * et, G->label() + " " + tc.label() + " sign");
        }
    }
}

inline void dl_orthogonality(Check& c) {
    for (std::uint64_t q : {3u, 5u}) {
        auto G = build_group(Family::GL, 2, q);
        const auto& T = character_table(G);
        const auto pairs = all_torus_characters(Family::GL, 2, q);
        std::vector<ClassFunction> R;
        std::vector<std::vector<long long>> m;
        for (const auto& p : pairs) {
            R.push_back(dl_character(G, p));
            m.push_back(decompose(R.back(), T));
        }
        for (std::size_t i = 0; i < pairs.size(); ++i)
            for (std::size_t j = 0; j < pairs.size(); ++j) {
                const Complex ip = inner_product(R[i], R[j]);
                const long long formula = dl_inner_product(pairs[i], pairs[j]);
                c.expect(std::abs(ip - static_cast<double>(formula)) < tolerance::kValue,
                         G->label() + " <" + pairs[i].label() + ", " + pairs[j].label() + ">");
                bool share = false;
                for (std::size_t k = 0; k < T.size(); ++k)
                    if (m[i][k] && m[j][k]) share = true;
                c.expect(share == geometric_conjugacy_test(pairs[i], pairs[j]),
                         G->label() + " disjointness of " + pairs[i].label() + ", " + pairs[j].label());
            }
    }
}

inline void u3(Check& c) {
    const auto r = u3_unipotent_decomposition(2);
    c.expect(r.sign != 0, "R_T 1 is not of the form +-(1 - St + 2 pi)");
    c.expect(r.pi_degree == 2, "dim pi = " + std::to_string(r.pi_degree));
    c.expect(r.pi_cuspidal, "pi cuspidal");
    c.expect(r.norm == 6, "<R, R> = " + std::to_string(r.norm));
    c.expect(r.pairing_with_split == 0, "<R, R_T0 1> = " + std::to_string(r.pairing_with_split));
    c.expect(r.dimension == r.expected_dimension, "dim R matches eps_G eps_T |G|_p'/|T|");
    c.expect(r.sign == -1, std::string("R_T 1 = -(1 - St + 2pi); observed R_T 1 = ") + (r.sign > 0 ? "+" : "-") +
                               "(1 - St + 2pi) with dim R = " + std::to_string(r.dimension));
}

inline void steinberg_duality(Check& c) {
    for (auto G : {build_group(Family::GL, 2, 3), build_group(Family::GL, 3, 2)}) {
        try {
            const auto vals = steinberg_values(G);
            c.expect(vals.size() == G->num_classes(), G->label() + " Steinberg values");
        } catch (const std::exception& e) {
            c.expect(false, G->label() + " " + e.what());
        }
    }
    for (auto G : {build_group(Family::GL, 2, 3), build_group(Family::GL, 3, 2), build_group(Family::U, 3, 2)}) {
        try {
            steinberg(G);
            c.expect(true, G->label() + " dim St = q^N");
        } catch (const std::exception& e) {
            c.expect(false, G->label() + " " + e.what());
        }
        const auto r = duality_check(G);
        c.expect(r.involution, G->label() + " D^2 = Id");
        c.expect(r.isometry, G->label() + " D isometry");
        c.expect(r.trivial_to_steinberg, G->label() + " D(1) = St");
        c.expect(r.irreducible_to_signed, G->label() + " D(irr) = +-irr");
    }
}

inline void st2_id2(Check& c) {
    for (int m = 1; m <= 4; ++m) {
        c.expect(st2_id2_identity(m), "P + D = q^m (P - D) for m = " + std::to_string(m));
        const auto [P, D] = st2_id2_polynomials(m);
        // nonnegative integer values: P - D is even with nonnegative value for every prime power checked
        for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
            try {
                const auto [st, id] = st2_id2_dimensions(m, q);
                c.expect(id > 0 && st > 0, "positive dimensions");
            } catch (const std::exception& e) {
                c.expect(false, std::string("m = ") + std::to_string(m) + " q = " + std::to_string(q) + " " + e.what());
            }
        }
    }
    const auto [st, id] = st2_id2_dimensions(1, 3);
    auto G = build_group(Family::GL, 2, 3);
    const auto& T = character_table(G);
    const auto m = decompose(ps_character(G, 1, 1), T);
    std::multiset<long long> degs;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (long long k = 0; k < m[i]; ++k) degs.insert(T.degrees[i]);
    c.expect(degs == std::multiset<long long>{static_cast<long long>(id), static_cast<long long>(st)},
             "Ind_B(chi, chi) of GL_2(F_3) has degrees {" + str(id) + ", " + str(st) + "}");
}

inline void jordan_scaling(Check& c) {
    auto G = build_group(Family::GL, 2, 4);
    const auto& T = character_table(G);
    const auto m = decompose(induce(ClassFunction::trivial(parabolic_with_composition(G, {1, 1}).P), G), T);
    std::vector<long long> dims;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) dims.push_back(T.degrees[i]);
    std::sort(dims.begin(), dims.end());
    c.expect(dims == std::vector<long long>{1, 4}, "unipotent principal series of GL_2(F_4) has degrees {1, 4}");
    const auto out = jordan_dimension_scale(2, 2, 2, dims);
    c.expect(out == std::vector<BigInt>{7, 28}, "scaled dimensions {7, 28}");
    const BigInt total = p_part_split(gl_order_polynomial(4), 2).second / 9;
    c.expect(total == 35 && out.size() == 2 && out[0] + out[1] == total, "sum equals |GL_4(F_2)|_p'/9 = 35");
}

inline void drinfeld(Check& c) {
    const auto a = drinfeld_count(2, 2);
    c.expect(a.count == 6, "q = 2 count " + std::to_string(a.count));
    c.expect(a.free_action && a.action_preserves_curve, "q = 2 free SL_2 action");
    const auto b = drinfeld_count(3, 2);
    c.expect(b.group_order == 24 && b.count % 24 == 0, "q = 3 count " + std::to_string(b.count) + " is a multiple of 24");
    c.expect(b.free_action && b.action_preserves_curve, "q = 3 free SL_2 action");
    const auto e = drinfeld_count(3, 3);
    c.expect(e.count > 0 && e.count % 24 == 0 && e.free_action, "q = 3 over F_27 count " + std::to_string(e.count));
    c.note("q=3 over F_9: " + std::to_string(b.count) + " points; over F_27: " + std::to_string(e.count));
}

inline void octonions(Check& c) {
    for (std::uint32_t p : {5u, 7u}) {
        const auto r = verify_octonions(p, 10000, oracle_seed(), 100);
        c.expect(r.composition_failures == 0, "F_" + std::to_string(p) + " composition failures " + std::to_string(r.composition_failures));
        c.expect(r.nonassociative_triple.has_value(), "F_" + std::to_string(p) + " non-associating basis triple");
        c.expect(r.jordan_det_identity, "F_" + std::to_string(p) + " jordan_det(identity) = 1");
        c.expect(r.ok(), "F_" + std::to_string(p) + " identity suite");
    }
}

inline void sweep(Check& c) {
    const auto scan = unit_torus_scan(4, {2, 3, 4, 5});
    c.expect(scan.only_split_at_two && !scan.hits.empty(), "unit tori are split with q = 2");
    for (std::uint64_t q : {3u, 5u})
        for (const auto& r : ps_restrictions(q))
            c.expect(r.components == (r.ratio_order == 2 ? 2 : 1),
                     "q = " + std::to_string(q) + " Ps(" + std::to_string(r.alpha) + "," + std::to_string(r.beta) + ") on SL_2");
    {
        auto G = build_group(Family::GL, 2, 2);
        const auto& T = character_table(G);
        const auto cusp = cuspidal_indices(T);
        c.expect(cusp.size() == 1, "GL_2(F_2) has one cuspidal");
        if (cusp.size() == 1) {
            // S_3 reflection character: 2 at 1, 0 on transpositions, -1 on 3-cycles
            bool ok = T.degrees[cusp[0]] == 2;
            for (std::uint32_t g = 0; g < G->order(); ++g) {
                const auto o = G->element_order(g);
                const double expect = o == 1 ? 2.0 : o == 2 ? 0.0 : -1.0;
                if (std::abs(T.irr[cusp[0]].at(g) - expect) > tolerance::kValue) ok = false;
            }
            c.expect(ok, "GL_2(F_2) cuspidal is the two-dimensional character of S_3; observed cuspidal degree " +
                             std::to_string(T.degrees[cusp[0]]));
        }
    }
    auto degrees_of = [](const GroupPtr& G) {
        const Parabolic* B = nullptr;
        for (const auto& P : standard_parabolics(G))
            if (P.l == 0) B = &P;
        const auto& T = character_table(G);
        const auto m = decompose(induce(ClassFunction::trivial(B->P), G), T);
        std::multiset<long long> d;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (long long k = 0; k < m[i]; ++k) d.insert(T.degrees[i]);
        return d;
    };
    c.expect(degrees_of(build_group(Family::GL, 3, 2)) == std::multiset<long long>{1, 6, 6, 8}, "Ind_B 1 of GL_3(F_2)");
    c.expect(degrees_of(build_group(Family::U, 3, 2)) == std::multiset<long long>{1, 8}, "Ind_B 1 of U_3(F_2)");
}

struct Criterion {
    int id;
    std::string name;
    std::function<void(Check&)> run;
};

inline const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {1, "orders", orders},
        {2, "exponents", exponents},
        {3, "oracle", oracle},
        {4, "green", green},
        {5, "dl-dimension", dl_dimensions},
        {6, "dl-orthogonality", dl_orthogonality},
        {7, "u3-unipotent", u3},
        {8, "steinberg-duality", steinberg_duality},
        {9, "st2-id2", st2_id2},
        {10, "jordan-scaling", jordan_scaling},
        {11, "drinfeld", drinfeld},
        {12, "octonions", octonions},
        {13, "sweep", sweep},
    };
    return all;
}

}  // namespace acceptance

/// Selects criteria by suite name: "all", a criterion number, or a criterion name.
inline std::vector<int> acceptance_selection(const std::string& suite) {
    std::vector<int> out;
    for (const auto& c : acceptance::criteria())
        if (suite == "all" || suite == std::to_string(c.id) || suite == c.name) out.push_back(c.id);
    if (out.empty()) throw UsageError("unknown acceptance suite '" + suite + "'");
    return out;
}

inline CriterionResult run_criterion(int id) {
    for (const auto& c : acceptance::criteria()) {
        if (c.id != id) continue;
        CriterionResult r;
        r.id = c.id;
        r.name = c.name;
        acceptance::Check check;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(check);
            r.passed = check.ok();
            r.detail = check.summary();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = check.summary() + "; exception: " + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return r;
    }
    throw UsageError("no acceptance criterion " + std::to_string(id));
}

inline std::vector<CriterionResult> run_acceptance(const std::string& suite = "all") {
    std::vector<CriterionResult> out;
    for (int id : acceptance_selection(suite)) out.push_back(run_criterion(id));
    return out;
}

}  // namespace lietype

#endif
