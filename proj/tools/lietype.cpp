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

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lietype/lietype.hpp"

using namespace lietype;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kResource = 3 };

struct Options {
    std::string format = "text";
    bool json = false;
    std::string seed;

    // group selection
    std::string family = "gl";
    int n = 2;
    std::uint64_t q = 2;

    // orders
    std::string type;
    int rank = 0;

    // green
    std::string lambda, rho;
    bool unitary = false;

    // dl
    std::uint64_t chi = 1;
    bool verify = false;
    int ext = 2;

    // duality
    std::string check = "all";

    // oct
    std::uint32_t p = 5;
    int samples = 10000;

    // verify
    std::string suite = "all";

    Format fmt() const { return json ? Format::Json : parse_format(format); }
};

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string matrix_string(const Group& G, std::uint32_t id) {
    const Mat& m = G.element(id);
    std::vector<std::string> rows;
    for (int i = 0; i < G.n(); ++i) {
        std::vector<std::string> r;
        for (int j = 0; j < G.n(); ++j) r.push_back(std::to_string(m(i, j)));
        rows.push_back("[" + join(r, ",") + "]");
    }
    return "[" + join(rows, ",") + "]";
}

GroupPtr selected_group(const Options& o) { return build_group(parse_family(o.family), o.n, o.q); }

// ---------------------------------------------------------------------------
// orders

int cmd_orders(const Options& o) {
    Json j = json_document("orders");
    std::vector<std::vector<std::string>> rows;
    if (!o.type.empty()) {
        require(o.type.size() == 1, "type is a single letter A-G");
        const RootSystemType t(static_cast<char>(std::toupper(static_cast<unsigned char>(o.type[0]))), o.rank);
        require(is_prime_power(o.q), "q must be a prime power");
        const BigInt value = order_polynomial(t).evaluate(BigInt(o.q));
        j["type"] = t.name();
        j["q"] = o.q;
        j["order"] = value.str();
        j["factored"] = factored_form(t);
        j["degrees"] = degrees(t);
        j["weyl_order"] = weyl_order(t).str();
        j["positive_roots"] = positive_roots(t);
        rows.push_back({t.name(), std::to_string(o.q), value.str(), factored_form(t)});
    } else {
        const Family fam = parse_family(o.family);
        require(is_prime_power(o.q), "q must be a prime power");
        const auto poly = family_order_polynomial(fam, o.n);
        const BigInt value = poly.evaluate(BigInt(o.q));
        j["group"] = group_label(fam, o.n, o.q);
        j["q"] = o.q;
        j["order"] = value.str();
        j["polynomial"] = poly.to_string();
        rows.push_back({group_label(fam, o.n, o.q), std::to_string(o.q), value.str(), poly.to_string()});
    }
    switch (o.fmt()) {
        case Format::Json: write_json(std::cout, j); break;
        case Format::Tsv: write_tsv(std::cout, {"group", "q", "order", "formula"}, rows); break;
        case Format::Text:
            for (const auto& r : rows) std::cout << "|" << r[0] << "(F_" << r[1] << ")| = " << r[2] << "\n  = " << r[3] << "\n";
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// tori

int cmd_tori(const Options& o) {
    const Family fam = parse_family(o.family);
    const auto cls = torus_classes(fam, o.n);
    Json j = json_document("tori");
    j["family"] = family_name(fam);
    j["n"] = o.n;
    j["q"] = o.q;
    std::vector<std::vector<std::string>> rows;
    for (const auto& t : cls) {
        const auto [w, shape] = torus_weyl_group(t);
        const BigInt ord = torus_order(t, o.q);
        Json e;
        e["label"] = t.label();
        e["order_polynomial"] = t.order_poly.to_string();
        e["order"] = ord.str();
        e["split_rank"] = t.split_rank;
        e["anisotropic_mod_center"] = t.anisotropic_mod_center;
        e["weyl_order"] = w;
        e["weyl_group"] = shape;
        j["tori"].push_back(e);
        rows.push_back({t.label(), t.order_poly.to_string(), ord.str(), std::to_string(t.split_rank), std::to_string(w), shape});
    }
    switch (o.fmt()) {
        case Format::Json: write_json(std::cout, j); break;
        case Format::Tsv: write_tsv(std::cout, {"torus", "order_polynomial", "order", "split_rank", "weyl_order", "weyl_group"}, rows); break;
        case Format::Text:
            std::cout << cls.size() << " classes of maximal tori in " << group_label(fam, o.n, o.q) << "\n";
            for (const auto& r : rows) std::cout << "  " << r[0] << "  |T| = " << r[1] << " = " << r[2] << "  split rank " << r[3] << "  |W(T)| = " << r[4] << " (" << r[5] << ")\n";
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// group

int cmd_group(const Options& o) {
    auto G = selected_group(o);
    const auto& cls = G->classes();
    Json j = json_document("group");
    j["group"] = G->label();
    j["order"] = G->order();
    j["classes"] = cls.count();
    std::vector<std::vector<std::string>> rows;
    for (std::size_t c = 0; c < cls.count(); ++c) {
        Json e;
        e["index"] = c;
        e["size"] = cls.size[c];
        e["centralizer"] = cls.centralizer[c];
        e["element_order"] = cls.elem_order[c];
        e["kind"] = kind_name(cls.kind[c]);
        e["representative"] = matrix_string(*G, cls.rep[c]);
        j["class_data"].push_back(e);
        rows.push_back({std::to_string(c), std::to_string(cls.size[c]), std::to_string(cls.centralizer[c]),
                        std::to_string(cls.elem_order[c]), kind_name(cls.kind[c]), matrix_string(*G, cls.rep[c])});
    }
    switch (o.fmt()) {
        case Format::Json: write_json(std::cout, j); break;
        case Format::Tsv: write_tsv(std::cout, {"class", "size", "centralizer", "order", "kind", "representative"}, rows); break;
        case Format::Text:
            std::cout << G->label() << ": order " << G->order() << ", " << cls.count() << " classes\n";
            for (const auto& r : rows) std::cout << "  " << r[0] << "  size " << r[1] << "  |C| " << r[2] << "  ord " << r[3] << "  " << r[4] << "  " << r[5] << "\n";
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// chartable

int cmd_chartable(const Options& o) {
    auto G = selected_group(o);
    const auto& T = character_table(G);
    const auto& cls = G->classes();
    const auto cusp = cuspidal_indices(T);
    Json j = json_document("chartable");
    j["group"] = G->label();
    j["seed"] = T.seed;
    j["degrees"] = T.degrees;
    j["class_sizes"] = cls.size;
    j["cuspidal"] = cusp;
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < T.size(); ++i) {
        Json row = Json::array();
        std::vector<std::string> cells{std::to_string(i), std::to_string(T.degrees[i])};
        for (std::size_t c = 0; c < T.irr[i].size(); ++c) {
            row.push_back(complex_json(T.irr[i][c]));
            cells.push_back(complex_string(T.irr[i][c]));
        }
        j["characters"].push_back(row);
        rows.push_back(cells);
    }
    std::vector<std::string> header{"chi", "degree"};
    for (std::size_t c = 0; c < cls.count(); ++c) header.push_back("c" + std::to_string(c));
    switch (o.fmt()) {
        case Format::Json: write_json(std::cout, j); break;
        case Format::Tsv: write_tsv(std::cout, header, rows); break;
        case Format::Text: {
            std::cout << G->label() << ": " << T.size() << " irreducibles, degrees";
            for (auto d : T.degrees) std::cout << " " << d;
            std::cout << "\ncuspidal:";
            for (auto c : cusp) std::cout << " chi" << c;
            std::cout << "\n";
            for (const auto& r : rows) std::cout << "  chi" << r[0] << ": " << join({r.begin() + 2, r.end()}, "  ") << "\n";
        }
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// green

int cmd_green(const Options& o) {
    Json j = json_document("green");
    std::vector<std::pair<Partition, Partition>> pairs;
    if (!o.lambda.empty() || !o.rho.empty()) {
        require(!o.lambda.empty() && !o.rho.empty(), "give both --lambda and --rho");
        pairs.emplace_back(parse_partition(o.lambda), parse_partition(o.rho));
        require(partition_size(pairs[0].first) == partition_size(pairs[0].second), "partitions of different sizes");
    } else {
        require(o.n >= 1 && o.n <= 8, "n must be between 1 and 8");
        for (const auto& l : partitions(o.n))
            for (const auto& r : partitions(o.n)) pairs.emplace_back(l, r);
    }
    j["unitary"] = o.unitary;
    std::vector<std::vector<std::string>> rows;
    for (const auto& [l, r] : pairs) {
        const auto Q = o.unitary ? unitary_green_polynomial(l, r) : green_polynomial(l, r);
        Json e;
        e["lambda"] = l;
        e["rho"] = r;
        e["polynomial"] = Q.to_string();
        j["green"].push_back(e);
        rows.push_back({partition_string(l), partition_string(r), Q.to_string()});
    }
    switch (o.fmt()) {
        case Format::Json: write_json(std::cout, j); break;
        case Format::Tsv: write_tsv(std::cout, {"lambda", "rho", "polynomial"}, rows); break;
        case Format::Text:
            for (const auto& r : rows) std::cout << "Q^" << r[0] << "_" << r[1] << "(q) = " << r[2] << "\n";
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// dl

int cmd_dl_dims(const Options& o) {
    const Family fam = parse_family(o.family);
    Json j = json_document("dl dims");
    j["group"] = group_label(fam, o.n, o.q);
    std::vector<std::vector<std::string>> rows;
    for (const auto& t : torus_classes(fam, o.n)) {
        const auto [eg, et] = epsilon_signs(t);
        const BigInt d = dl_dimension(t, o.q);
        Json e;
        e["torus"] = t.label();
        e["epsilon_G"] = eg;
        e["epsilon_T"] = et;
        e["dimension"] = d.str();
        j["tori"].push_back(e);
        rows.push_back({t.label(), std::to_string(eg), std::to_string(et), d.str()});
    }
    switch (o.fmt()) {
        case Format::Json: write_json(std::cout, j); break;
        case Format::Tsv: write_tsv(std::cout, {"torus", "epsilon_G", "epsilon_T", "dimension"}, rows); break;
        case Format::Text:
            std::cout << "dim R(T, theta) in " << group_label(fam, o.n, o.q) << "\n";
            for (const auto& r : rows) std::cout << "  " << r[0] << "  eps_G " << r[1] << "  eps_T " << r[2] << "  dim " << r[3] << "\n";
    }
    return kOk;
}

int cmd_dl_green(const Options& o) {
    auto G = build_group(Family::GL, o.n, o.q);
    const auto chi = green_cuspidal(G, o.chi);
    Json j = json_document("dl green");
    j["group"] = G->label();
    j["chi"] = o.chi;
    Json vals = Json::array();
    for (std::size_t c = 0; c < chi.size(); ++c) vals.push_back(complex_json(chi[c]));
    j["values"] = vals;
    j["degree"] = complex_json(chi.degree());
    int status = kOk;
    if (o.verify) {
        const auto& T = character_table(G);
        std::optional<std::size_t> row;
        for (std::size_t i = 0; i < T.size(); ++i)
            if (T.irr[i].approx_equal(chi)) row = i;
        const bool cusp = is_cuspidal(chi);
        j["oracle_row"] = row ? Json(*row) : Json(nullptr);
        j["cuspidal"] = cusp;
        j["verified"] = row.has_value() && cusp;
        if (!row || !cusp) status = kVerifyFailed;
    }
    if (o.fmt() == Format::Json) {
        write_json(std::cout, j);
    } else {
        std::cout << "Green cuspidal of " << G->label() << " for chi = " << o.chi << ": degree " << complex_string(chi.degree()) << "\n ";
        for (std::size_t c = 0; c < chi.size(); ++c) std::cout << " " << complex_string(chi[c]);
        std::cout << "\n";
        if (o.verify) std::cout << (status == kOk ? "verified against oracle row " + std::to_string(j["oracle_row"].get<std::size_t>()) : std::string("NOT verified")) << "\n";
    }
    return status;
}

int cmd_dl_drinfeld(const Options& o) {
    const auto r = drinfeld_count(o.q, o.ext);
    Json j = json_document("dl drinfeld");
    j["q"] = r.q;
    j["ext"] = r.d;
    j["points"] = r.count;
    j["sl2_order"] = r.group_order;
    j["orbits"] = r.orbits;
    j["free_action"] = r.free_action;
    j["action_preserves_curve"] = r.action_preserves_curve;
    if (o.fmt() == Format::Json) {
        write_json(std::cout, j);
    } else {
        std::cout << "xy^q - x^q y = 1 over F_" << ipow(o.q, static_cast<unsigned>(o.ext)) << ": " << r.count << " points, "
                  << r.orbits << " SL_2(F_" << o.q << ")-orbits, action " << (r.free_action ? "free" : "not free") << "\n";
    }
    return r.free_action && r.action_preserves_curve ? kOk : kVerifyFailed;
}

int cmd_dl_u3(const Options& o) {
    const auto r = u3_unipotent_decomposition(o.q);
    Json j = json_document("dl u3");
    j["q"] = r.q;
    j["dimension"] = r.dimension;
    j["expected_dimension"] = r.expected_dimension;
    j["norm"] = r.norm;
    j["pairing_with_split"] = r.pairing_with_split;
    j["sign"] = r.sign;
    j["pi_degree"] = r.pi_degree;
    j["pi_cuspidal"] = r.pi_cuspidal;
    j["multiplicities"] = r.multiplicities;
    if (o.fmt() == Format::Json) {
        write_json(std::cout, j);
    } else {
        std::cout << "U_3(F_" << o.q << "), T = (q+1)^3 torus\n"
                  << "  R_T 1 = " << (r.sign > 0 ? "+" : r.sign < 0 ? "-" : "?") << "(1 - St + 2 pi)\n"
                  << "  dim R_T 1 = " << r.dimension << " (formula " << r.expected_dimension << ")\n"
                  << "  <R, R> = " << r.norm << ", <R, R_T0 1> = " << r.pairing_with_split << "\n"
                  << "  dim pi = " << r.pi_degree << ", cuspidal " << (r.pi_cuspidal ? "yes" : "no") << "\n";
    }
    return r.sign != 0 ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------------------
// duality

int cmd_duality(const Options& o) {
    auto G = selected_group(o);
    static const std::vector<std::string> names{"involution", "isometry", "trivial_to_steinberg", "irreducible_to_signed"};
    std::vector<std::string> wanted;
    if (o.check == "all") {
        wanted = names;
    } else {
        require(std::find(names.begin(), names.end(), o.check) != names.end(), "unknown duality check '" + o.check + "'");
        wanted = {o.check};
    }
    const auto r = duality_check(G);
    const std::map<std::string, bool> result{{"involution", r.involution},
                                             {"isometry", r.isometry},
                                             {"trivial_to_steinberg", r.trivial_to_steinberg},
                                             {"irreducible_to_signed", r.irreducible_to_signed}};
    bool ok = true;
    Json j = json_document("duality");
    j["group"] = G->label();
    for (const auto& w : wanted) {
        j["checks"][w] = result.at(w);
        ok = ok && result.at(w);
    }
    j["images"] = r.images;
    j["signs"] = r.signs;
    if (o.fmt() == Format::Json) {
        write_json(std::cout, j);
    } else {
        std::cout << "duality on " << G->label() << "\n";
        for (const auto& w : wanted) std::cout << "  " << (result.at(w) ? "PASS" : "FAIL") << "  " << w << "\n";
        std::cout << "  D(chi_i) =";
        for (std::size_t i = 0; i < r.images.size(); ++i) std::cout << " " << (r.signs[i] < 0 ? "-" : "+") << "chi" << r.images[i];
        std::cout << "\n";
    }
    return ok ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------------------
// oct

int cmd_oct_verify(const Options& o) {
    std::uint64_t seed = oracle_seed();
    const auto r = verify_octonions(o.p, o.samples, seed);
    Json j = json_document("oct verify");
    j["p"] = r.p;
    j["samples"] = r.samples;
    j["composition_failures"] = r.composition_failures;
    j["anti_automorphism_failures"] = r.anti_automorphism_failures;
    j["trace_associativity_failures"] = r.trace_associativity_failures;
    j["norm_trace_failures"] = r.norm_trace_failures;
    j["exhaustive_pairs"] = r.exhaustive_pairs;
    j["exhaustive_failures"] = r.exhaustive_failures;
    j["nonassociative_triple"] = r.nonassociative_triple ? Json(*r.nonassociative_triple) : Json(nullptr);
    j["gram_nondegenerate"] = r.gram_nondegenerate;
    j["jordan_det_identity"] = r.jordan_det_identity;
    j["jordan_commutativity_failures"] = r.jordan_commutativity_failures;
    j["jordan_identity_failures"] = r.jordan_identity_failures;
    j["jordan_unit_failures"] = r.jordan_unit_failures;
    j["det_cycle_failures"] = r.det_cycle_failures;
    j["ok"] = r.ok();
    if (o.fmt() == Format::Json) {
        write_json(std::cout, j);
    } else {
        std::cout << "split octonions over " << (o.p ? "F_" + std::to_string(o.p) : std::string("Q")) << ", " << r.samples << " samples\n";
        for (const auto& [k, v] : j.items())
            if (k != "schema" && k != "command" && k != "p" && k != "samples") std::cout << "  " << k << ": " << v.dump() << "\n";
    }
    return r.ok() ? kOk : kVerifyFailed;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const Options& o) {
    const auto ids = acceptance_selection(o.suite);
    Json j = json_document("verify");
    j["suite"] = o.suite;
    int failed = 0;
    for (int id : ids) {
        const auto r = run_criterion(id);
        if (!r.passed) ++failed;
        Json e;
        e["id"] = r.id;
        e["name"] = r.name;
        e["passed"] = r.passed;
        e["detail"] = r.detail;
        j["criteria"].push_back(e);
        if (o.fmt() == Format::Text) {
            std::printf("[%s] %2d %-18s %7.2fs  %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds, r.detail.c_str());
            std::fflush(stdout);
        } else if (o.fmt() == Format::Tsv) {
            if (id == ids.front()) std::cout << "id\tname\tpassed\tdetail\n";
            std::cout << r.id << "\t" << r.name << "\t" << (r.passed ? "true" : "false") << "\t" << r.detail << "\n";
        }
    }
    j["failed"] = failed;
    if (o.fmt() == Format::Json) write_json(std::cout, j);
    else if (o.fmt() == Format::Text) std::cout << failed << " of " << ids.size() << " criteria failed\n";
    return failed ? kVerifyFailed : kOk;
}

void add_group_options(CLI::App* app, Options& o) {
    app->add_option("--family,--group", o.family, "gl, sl, u or sp")->capture_default_str();
    app->add_option("--n", o.n, "matrix size")->capture_default_str();
    app->add_option("--q", o.q, "field size")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lietype: characters of finite groups of Lie type"};
    Options o;
    app.require_subcommand(1);
    app.add_option("--format", o.format, "text, json or tsv")->capture_default_str();
    app.add_flag("--json", o.json, "same as --format json");
    app.add_option("--seed", o.seed, "oracle seed (overrides LIETYPE_SEED)");
    app.fallthrough();

    auto* orders = app.add_subcommand("orders", "group orders from order polynomials");
    orders->add_option("--type", o.type, "root system family A-G");
    orders->add_option("--rank", o.rank, "rank for --type");
    add_group_options(orders, o);

    auto* tori = app.add_subcommand("tori", "conjugacy classes of maximal tori");
    add_group_options(tori, o);

    auto* group = app.add_subcommand("group", "conjugacy classes of an enumerated group");
    add_group_options(group, o);

    auto* chartable = app.add_subcommand("chartable", "character table from the oracle");
    add_group_options(chartable, o);

    auto* green = app.add_subcommand("green", "Green polynomials");
    green->add_option("--lambda", o.lambda, "unipotent class partition, e.g. 2,1");
    green->add_option("--rho", o.rho, "torus partition");
    green->add_option("--n", o.n, "all pairs of partitions of n");
    green->add_flag("--unitary", o.unitary, "unitary Green polynomials");

    auto* dl = app.add_subcommand("dl", "Deligne-Lusztig characters");
    dl->require_subcommand(1);
    auto* dims = dl->add_subcommand("dims", "dimensions of R(T, theta)");
    add_group_options(dims, o);
    auto* dlgreen = dl->add_subcommand("green", "Green's cuspidal character of GL_n");
    dlgreen->add_option("--n", o.n, "matrix size")->capture_default_str();
    dlgreen->add_option("--q", o.q, "field size")->capture_default_str();
    dlgreen->add_option("--chi", o.chi, "exponent of a regular character of F_{q^n}^x")->capture_default_str();
    dlgreen->add_flag("--verify", o.verify, "compare with the oracle table");
    auto* drinfeld = dl->add_subcommand("drinfeld", "points of xy^q - x^q y = 1");
    drinfeld->add_option("--q", o.q, "field size")->capture_default_str();
    drinfeld->add_option("--ext", o.ext, "extension degree")->capture_default_str();
    auto* u3 = dl->add_subcommand("u3", "unipotent cuspidal of U_3");
    u3->add_option("--q", o.q, "field size")->capture_default_str();

    auto* duality = app.add_subcommand("duality", "Alvis-Curtis duality checks");
    add_group_options(duality, o);
    duality->add_option("--check", o.check, "all, involution, isometry, trivial_to_steinberg or irreducible_to_signed")->capture_default_str();

    auto* oct = app.add_subcommand("oct", "split octonions");
    oct->require_subcommand(1);
    auto* octv = oct->add_subcommand("verify", "composition and Jordan identities");
    octv->add_option("--p", o.p, "prime, or 0 for the rationals")->capture_default_str();
    octv->add_option("--samples", o.samples, "random pairs")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "acceptance suite");
    verify->add_option("--suite", o.suite, "all, a criterion number or name")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (!o.seed.empty()) {
            std::stoull(o.seed);
            setenv("LIETYPE_SEED", o.seed.c_str(), 1);
        }
        o.fmt();
        if (orders->parsed()) return cmd_orders(o);
        if (tori->parsed()) return cmd_tori(o);
        if (group->parsed()) return cmd_group(o);
        if (chartable->parsed()) return cmd_chartable(o);
        if (green->parsed()) return cmd_green(o);
        if (dims->parsed()) return cmd_dl_dims(o);
        if (dlgreen->parsed()) return cmd_dl_green(o);
        if (drinfeld->parsed()) return cmd_dl_drinfeld(o);
        if (u3->parsed()) return cmd_dl_u3(o);
        if (duality->parsed()) return cmd_duality(o);
        if (octv->parsed()) return cmd_oct_verify(o);
        if (verify->parsed()) return cmd_verify(o);
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kResource;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFailed;
    }
    std::cerr << app.help();
    return kUsage;
}
