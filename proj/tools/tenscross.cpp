#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "common.hpp"
#include "tenscross/serialize.hpp"

using namespace tenscross;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Outcome {
    Json body;
    bool ok = true;
};

struct Supergroup {
    int vdim = 2;
};

Supergroup parse_supergroup(const std::vector<std::string>& params) {
    Supergroup sg;
    for (const auto& kv : params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("--supergroup expects key=value, got '" + kv + "'");
        const std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
        if (key == "vdim") {
            try {
                sg.vdim = std::stoi(value);
            } catch (const std::exception&) {
                throw UsageError("vdim must be an integer");
            }
            if (sg.vdim < 0 || sg.vdim > 4) throw UsageError("vdim must be in [0, 4]");
        } else if (key == "group") {
            if (value != "C2") throw UsageError("only group=C2 is supported");
        } else {
            throw UsageError("unknown supergroup key '" + key + "'");
        }
    }
    return sg;
}

// "a,b;c,d"
Matrix parse_matrix(const std::string& text, int n) {
    Matrix m(n, n);
    std::stringstream rows(text);
    std::string row;
    int i = 0;
    while (std::getline(rows, row, ';')) {
        if (i >= n) throw UsageError("matrix '" + text + "' has too many rows");
        std::stringstream cols(row);
        std::string cell;
        int j = 0;
        while (std::getline(cols, cell, ',')) {
            if (j >= n) throw UsageError("matrix '" + text + "' has too many columns");
            try {
                m(i, j++) = Rational::parse(cell);
            } catch (const std::exception&) {
                throw UsageError("bad matrix entry '" + cell + "'");
            }
        }
        if (j != n) throw UsageError("matrix '" + text + "' has a short row");
        ++i;
    }
    if (i != n) throw UsageError("matrix '" + text + "' has too few rows");
    return m;
}

CompatibleData parse_data(const SupergroupPresentation& p, const std::string& t, const std::string& beta) {
    CompatibleData d = identity_data(p);
    if (!t.empty()) d.T = parse_matrix(t, p.v_dim);
    if (!beta.empty()) d.beta = parse_matrix(beta, p.v_dim);
    try {
        validate_data(d, p);
    } catch (const CompatibilityError& e) {
        throw UsageError(e.what());
    }
    return d;
}

int parse_grade(const std::string& g, int u) {
    if (g == "1") return 0;
    if (g == "u") return u;
    throw UsageError("--g must be 1 or u");
}

Gamma parse_gamma(const std::string& text) {
    try {
        return Gamma::parse(text);
    } catch (const std::exception&) {
        throw UsageError("bad --gamma '" + text + "'");
    }
}

CrossedSystem make_system(std::shared_ptr<const SupergroupContext> ctx, const std::string& family,
                          const std::string& g, const std::string& gamma) {
    const int grade = parse_grade(g, ctx->p.u);
    const Gamma gm = parse_gamma(gamma);
    if (family == "D") return make_family_d(ctx, grade, gm);
    if (family.size() > 1 && family.front() == 'C') {
        Rational xi;
        try {
            xi = Rational::parse(family.substr(1));
        } catch (const std::exception&) {
            throw UsageError("bad family '" + family + "'");
        }
        return make_family_c(ctx, xi, grade, gm);
    }
    throw UsageError("--family must be D or C<xi>");
}

Json galois_json(const GaloisReport& r) {
    return Json{{"left_bijective", r.left_bijective},
                {"right_bijective", r.right_bijective},
                {"left_coinvariants_trivial", r.left_coinvariants_trivial},
                {"right_coinvariants_trivial", r.right_coinvariants_trivial},
                {"bicomodule", r.bicomodule},
                {"ok", r.ok()}};
}

Json group_law_json(const GroupLawReport& r) {
    return Json{{"in_kernel", r.in_kernel},
                {"algebra_map", r.algebra_map},
                {"bijective", r.bijective},
                {"left_colinear", r.left_colinear},
                {"right_colinear", r.right_colinear},
                {"ok", r.ok()}};
}

bool report_ok(const Json& r) {
    if (!r["validation"]["valid"].get<bool>()) return false;
    if (r["pentagon_sweep"]["pentagon_failures"].get<long>() != 0) return false;
    if (r["pentagon_sweep"]["triangle_failures"].get<long>() != 0) return false;
    for (const auto& d : r["dual_table"])
        if (!d["zigzag"].get<bool>()) return false;
    return true;
}

// Scalars as "path: value"; long arrays are summarised.
void render_text(const Json& j, const std::string& path, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) render_text(v, path.empty() ? k : path + "." + k, os);
    } else if (j.is_array()) {
        if (j.size() > 12) {
            os << path << ": [" << j.size() << " entries]\n";
            return;
        }
        for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], path + "[" + std::to_string(i) + "]", os);
    } else {
        os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact supergroup Hopf algebras, biGalois objects and C2-crossed tensor categories"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string output, format = "json";
    app.add_option("-o,--output", output, "Write the report to this file");
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    std::vector<std::string> supergroup;
    std::string variant = "A", input;
    auto* build_hopf = app.add_subcommand("build-hopf", "Structure constants of a Hopf algebra as JSON");
    build_hopf->add_option("--supergroup", supergroup, "vdim=<k> group=C2")->expected(0, 2);
    build_hopf->add_option("--variant", variant, "A, Acop, B or Btwist")
        ->check(CLI::IsMember({"A", "Acop", "B", "Btwist"}));

    auto* verify_hopf = app.add_subcommand("verify-hopf", "Check the Hopf axioms");
    verify_hopf->add_option("--supergroup", supergroup, "vdim=<k> group=C2")->expected(0, 2);
    verify_hopf->add_option("--variant", variant, "A, Acop, B or Btwist")
        ->check(CLI::IsMember({"A", "Acop", "B", "Btwist"}));
    verify_hopf->add_option("--input", input, "Hopf algebra JSON file")->check(CLI::ExistingFile);

    std::string t_left, beta_left, t_right, beta_right;
    auto* bigalois = app.add_subcommand("bigalois", "Build L(T, beta) and check the biGalois property");
    bigalois->add_option("--supergroup", supergroup, "vdim=<k> group=C2")->expected(0, 2);
    bigalois->add_option("--T", t_left, "T as \"a,b;c,d\"");
    bigalois->add_option("--beta", beta_left, "symmetric beta as \"a,b;c,d\"");

    auto* cot = app.add_subcommand("cotensor", "Cotensor product L(d) box L(d') and the group law");
    cot->add_option("--supergroup", supergroup, "vdim=<k> group=C2")->expected(0, 2);
    cot->add_option("--T", t_left, "left T");
    cot->add_option("--beta", beta_left, "left beta");
    cot->add_option("--T2", t_right, "right T");
    cot->add_option("--beta2", beta_right, "right beta");

    std::string family = "D", grade = "1", gamma = "1", action = "report";
    int threads = 0;
    auto* crossed = app.add_subcommand("crossed", "A crossed system and its tensor category");
    crossed->add_option("--family", family, "D or C<xi>");
    crossed->add_option("--g", grade, "1 or u");
    crossed->add_option("--gamma", gamma, "1, -1, i or -i");
    crossed->add_option("--threads", threads, "worker threads (0: TENSCROSS_THREADS or hardware)");
    crossed->add_option("action", action, "report, validate, pentagon or duals")
        ->check(CLI::IsMember({"report", "validate", "pentagon", "duals"}));

    bool pentagon = false, all_eight = false, coherent = false;
    std::uint64_t seed = 0;
    int group_law = 10;
    auto* sweep = app.add_subcommand("sweep", "Seeded verification sweeps");
    sweep->add_flag("--pentagon", pentagon, "pentagon and triangle sweep over the generating set");
    sweep->add_flag("--all-eight", all_eight, "sweep the eight systems");
    sweep->add_flag("--coherent", coherent, "use gamma^2 = -1 for g = u");
    sweep->add_option("--family", family, "D or C<xi> when not --all-eight");
    sweep->add_option("--g", grade, "1 or u");
    sweep->add_option("--gamma", gamma, "1, -1, i or -i");
    sweep->add_option("--seed", seed, "seed for the random group-law pairs");
    sweep->add_option("--group-law", group_law, "number of random group-law pairs")->check(CLI::NonNegativeNumber);
    sweep->add_option("--threads", threads, "worker threads");

    auto* report = app.add_subcommand("report", "Category reports for the eight systems");
    report->add_flag("--coherent", coherent, "use gamma^2 = -1 for g = u");
    report->add_option("--threads", threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Outcome out;
    try {
        const Supergroup sg = parse_supergroup(supergroup);
        auto ctx = std::make_shared<const SupergroupContext>(SupergroupContext::standard(sg.vdim));
        if (*build_hopf) {
            out.body = to_json(tools::build_variant(variant, sg.vdim));
        } else if (*verify_hopf) {
            HopfAlgebraData h;
            if (!input.empty()) {
                std::ifstream in(input);
                Json j;
                try {
                    j = Json::parse(in);
                } catch (const Json::parse_error& e) {
                    throw UsageError(std::string("bad JSON input: ") + e.what());
                }
                h = hopf_from_json(j);
            } else {
                h = tools::build_variant(variant, sg.vdim);
            }
            auto violations = verify_hopf_axioms(h);
            out.ok = violations.empty();
            out.body = Json{{"name", h.name}, {"dim", h.dim}, {"violations", violations}, {"ok", out.ok}};
        } else if (*bigalois) {
            CompatibleData d = parse_data(ctx->p, t_left, beta_left);
            ComoduleAlgebra l = build_L(d, *ctx);
            GaloisReport g = is_bigalois(l);
            out.ok = g.ok();
            out.body = Json{{"data", to_json(d)},
                            {"dim", l.dim},
                            {"inner", is_inner(d, *ctx)},
                            {"galois", galois_json(g)},
                            {"algebra", to_json(l)}};
        } else if (*cot) {
            CompatibleData d = parse_data(ctx->p, t_left, beta_left);
            CompatibleData e = parse_data(ctx->p, t_right, beta_right);
            ComoduleAlgebra ld = build_L(d, *ctx), le = build_L(e, *ctx);
            CotensorProduct box = cotensor(ld, le);
            GroupLawReport law = verify_group_law(d, e, *ctx);
            out.ok = law.ok();
            out.body = Json{{"left", to_json(d)},
                            {"right", to_json(e)},
                            {"product", to_json(data_product(d, e))},
                            {"dim", box.algebra.dim},
                            {"group_law", group_law_json(law)}};
        } else if (*crossed) {
            CrossedSystem s = make_system(ctx, family, grade, gamma);
            if (action == "report") {
                out.body = category_report(s, threads);
                out.ok = report_ok(out.body);
            } else if (action == "validate") {
                ValidationReport r = validate_crossed_system(s);
                out.ok = r.ok();
                out.body = Json{{"name", s.name}, {"validation", to_json(r)}};
            } else if (action == "pentagon") {
                SweepResult r = pentagon_sweep(s, generating_set(s), threads);
                out.ok = r.ok();
                out.body = Json{{"name", s.name}, {"pentagon_sweep", to_json(r)}};
            } else {
                Json table = Json::array();
                for (const auto& x : generating_set(s)) {
                    DualData d = dual_object(s, x);
                    out.ok = out.ok && d.ok();
                    table.push_back({{"object", x.name},
                                     {"dual_dim", d.dual.v.dim},
                                     {"ev_colinear", d.ev_colinear},
                                     {"coev_colinear", d.coev_colinear},
                                     {"zigzag_left", d.zigzag_left},
                                     {"zigzag_right", d.zigzag_right}});
                }
                out.body = Json{{"name", s.name}, {"duals", table}};
            }
        } else if (*sweep) {
            if (sg.vdim != 2) throw UsageError("sweep needs vdim=2");
            std::vector<CrossedSystem> systems;
            if (all_eight)
                systems = coherent ? build_the_eight_coherent(ctx) : build_the_eight(ctx);
            else
                systems.push_back(make_system(ctx, family, grade, gamma));
            out.body["seed"] = seed;
            if (pentagon) {
                Json rows = Json::array();
                for (const auto& s : systems) {
                    SweepResult r = pentagon_sweep(s, generating_set(s), threads);
                    out.ok = out.ok && r.ok();
                    rows.push_back({{"name", s.name}, {"pentagon_sweep", to_json(r)}});
                }
                out.body["systems"] = rows;
            }
            std::mt19937_64 rng(seed);
            long failures = 0;
            Json failed = Json::array();
            for (int i = 0; i < group_law; ++i) {
                CompatibleData d = tools::sample_compatible_data(rng, ctx->p, 3, 2);
                CompatibleData e = tools::sample_compatible_data(rng, ctx->p, 3, 2);
                if (!verify_group_law(d, e, *ctx).ok()) {
                    ++failures;
                    failed.push_back({{"left", to_json(d)}, {"right", to_json(e)}});
                }
            }
            out.ok = out.ok && failures == 0;
            out.body["group_law"] = Json{{"pairs", group_law}, {"failures", failures}, {"failed", failed}};
        } else if (*report) {
            if (sg.vdim != 2) throw UsageError("report needs vdim=2");
            Json all = Json::array();
            for (const auto& s : coherent ? build_the_eight_coherent(ctx) : build_the_eight(ctx)) {
                Json r = category_report(s, threads);
                out.ok = out.ok && report_ok(r);
                all.push_back(r);
            }
            out.body = Json{{"categories", all}};
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const SchemaError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    std::ostringstream text;
    if (format == "json")
        text << out.body.dump(2) << "\n";
    else
        render_text(out.body, "", text);
    if (output.empty()) {
        std::cout << text.str();
    } else {
        std::ofstream f(output, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << output << "\n";
            return 2;
        }
        f << text.str();
    }
    return out.ok ? 0 : 1;
}
