// Acceptance run: one PASS/FAIL line per criterion. Tolerances are fixed here.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "../tools/common.hpp"
#include "support/oracles.hpp"
#include "tenscross/crossed.hpp"

using namespace tenscross;

namespace {

constexpr double kHopfSeconds = 30;
constexpr double kBigaloisSeconds = 60;     // per xi
constexpr double kPentagonSeconds = 600;    // all eight
constexpr int kGroupLawPairs = 50;
constexpr int kAssociativityTriples = 20;
constexpr int kCoproductSamples = 10;
constexpr std::uint64_t kSeed = 20240607;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Result {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << what << "; ";
        }
    }
};

std::shared_ptr<const SupergroupContext> ctx2() {
    static const auto c = std::make_shared<const SupergroupContext>(SupergroupContext::standard(2));
    return c;
}

CompatibleData u_xi(int xi) { return t_xi_data(*ctx2(), Rational(xi)); }

Result hopf_axioms() {
    Result r;
    auto t0 = Clock::now();
    for (const char* v : {"A", "Acop", "B", "Btwist"}) {
        auto h = tools::build_variant(v, 2);
        auto violations = verify_hopf_axioms(h);
        r.detail << v << " dim " << h.dim << " violations " << violations.size() << "; ";
        r.require(violations.empty(), std::string(v) + " violates the axioms");
    }
    double t = seconds_since(t0);
    r.detail << "time " << t << " s";
    r.require(t < kHopfSeconds, "too slow");
    return r;
}

Result projective_covers() {
    Result r;
    const auto& h = ctx2()->a;
    const int u = ctx2()->p.u;
    for (int g : {0, u}) {
        auto series = composition_series(projective_cover(h, g));
        std::sort(series.begin(), series.end());
        std::vector<int> want = {g, g, g ^ u, g ^ u};
        std::sort(want.begin(), want.end());
        r.require(series == want, "P_" + std::to_string(g) + " has the wrong composition factors");
    }
    r.detail << "P_1 and P_u each have factors {g, g, ug, ug}";
    return r;
}

Result bigalois() {
    Result r;
    const auto& c = *ctx2();
    for (int xi : {0, 1, 5}) {
        auto t0 = Clock::now();
        auto d = u_xi(xi);
        auto l = build_L(d, c);
        r.require(is_bigalois(l).ok(), "U_" + std::to_string(xi) + " is not biGalois");
        auto box = cotensor(l, l);
        r.require(box.algebra.dim == c.a->dim, "cotensor square has the wrong dimension");
        r.require(verify_group_law(d, d, c).ok(), "group law fails for U_" + std::to_string(xi));
        r.require(data_product(d, d) == identity_data(c.p), "U_" + std::to_string(xi) + " does not have order two");
        double t = seconds_since(t0);
        r.require(t < kBigaloisSeconds, "too slow");
        r.detail << "xi=" << xi << " " << t << " s; ";
    }
    return r;
}

Result group_law() {
    Result r;
    const auto& c = *ctx2();
    std::mt19937_64 rng(kSeed);
    int ok = 0;
    for (int i = 0; i < kGroupLawPairs; ++i) {
        auto d = oracle::random_compatible(rng, c.p), e = oracle::random_compatible(rng, c.p);
        if (verify_group_law(d, e, c).ok()) ++ok;
    }
    r.require(ok == kGroupLawPairs, "group law failures");
    int assoc = 0;
    for (int i = 0; i < kAssociativityTriples; ++i) {
        auto a = oracle::random_compatible(rng, c.p, true), b = oracle::random_compatible(rng, c.p, true),
             d = oracle::random_compatible(rng, c.p, true);
        if (data_product(data_product(a, b), d) == data_product(a, data_product(b, d))) ++assoc;
    }
    r.require(assoc == kAssociativityTriples, "data_product is not associative");
    r.detail << ok << "/" << kGroupLawPairs << " pairs, " << assoc << "/" << kAssociativityTriples << " triples";
    return r;
}

Result pentagon(const std::vector<CrossedSystem>& eight, const std::vector<CrossedSystem>& coherent) {
    Result r;
    auto t0 = Clock::now();
    for (const auto& s : eight) {
        auto sw = pentagon_sweep(s, generating_set(s));
        r.detail << s.name << " " << sw.pentagon_failures << "/" << sw.pentagons << " pentagon, "
                 << sw.triangle_failures << "/" << sw.triangles << " triangle failures; ";
        r.require(sw.ok(), s.name + " fails coherence");
    }
    double t = seconds_since(t0);
    r.require(t < kPentagonSeconds, "too slow");
    long coherent_failures = 0;
    for (const auto& s : coherent) {
        auto sw = pentagon_sweep(s, generating_set(s));
        coherent_failures += sw.pentagon_failures + sw.triangle_failures;
    }
    r.detail << "time " << t << " s; with gamma^2 = -1 for g = u: " << coherent_failures << " failures";
    return r;
}

Result fp_dims(const std::vector<CrossedSystem>& eight) {
    Result r;
    for (const auto& s : eight) {
        auto fp = fp_dim_category(s);
        r.require(fp.total == Rational(16), s.name + " FPdim " + fp.total.str());
        r.require(fp.simples.size() == 4, s.name + " simple count");
        for (const auto& p : fp.projective_dims) r.require(p == Rational(4), s.name + " projective FPdim");
    }
    r.detail << "FPdim 16, 4 simples, projectives of FPdim 4 in all eight";
    return r;
}

Result equivalences(const std::vector<CrossedSystem>& eight) {
    Result r;
    auto by_name = [&](const std::string& n) -> const CrossedSystem& {
        for (const auto& s : eight)
            if (s.name == n) return s;
        throw std::logic_error("missing " + n);
    };
    for (const char* sign : {"+1", "-1"}) {
        const Gamma gamma = Gamma::parse(sign);
        const auto& c0 = by_name(std::string("C0(1,id,") + sign + ")");
        for (int xi : {1, 2}) {
            auto cx = make_family_c(ctx2(), Rational(xi), 0, gamma);
            auto res = equivalence_search(cx, c0);
            Matrix want{{Rational(1), Rational(xi, 2)}, {Rational(0), Rational(1)}};
            r.require(res.data && res.data->m.T == want && verify_equivalence(cx, c0, *res.data).ok(),
                      "no witness for " + cx.name);
        }
        auto alpha = equivalence_search(by_name(std::string("D(1,id,") + sign + ")"),
                                        by_name(std::string("D(u,iota,") + sign + ")"));
        r.require(!alpha.data && std::count(alpha.obstructions.begin(), alpha.obstructions.end(), "alpha"),
                  "alpha obstruction missing");
        for (const char* g : {"(1,id,", "(u,iota,"}) {
            auto t = equivalence_search(by_name(std::string("D") + g + sign + ")"),
                                        by_name(std::string("C0") + g + sign + ")"));
            r.require(!t.data && std::count(t.obstructions.begin(), t.obstructions.end(), "T-solvability"),
                      "T-solvability obstruction missing");
        }
    }
    std::vector<Fingerprint> fps;
    for (const auto& s : eight) fps.push_back(invariant_fingerprint(s));
    for (std::size_t i = 0; i < fps.size(); ++i)
        for (std::size_t j = i + 1; j < fps.size(); ++j) r.require(!(fps[i] == fps[j]), "fingerprints coincide");
    r.detail << "witnesses [[1,xi/2],[0,1]] for xi=1,2; alpha and T-solvability obstructions; 8 distinct fingerprints";
    return r;
}

Result duals(const std::vector<CrossedSystem>& eight, const std::vector<CrossedSystem>& coherent) {
    Result r;
    const int u = ctx2()->p.u;
    for (const auto& s : eight) {
        int bad = 0;
        for (int a : {0, u})
            for (int g : {0, u})
                if (!dual_object(s, graded_simple(s, g, a)).ok()) ++bad;
        r.detail << s.name << " " << bad << "/4 zig-zag failures; ";
        r.require(bad == 0, s.name + " zig-zag");
        auto d = dual_of(s, graded_simple(s, 0, u));
        r.require(d.grade == u && composition_series(d.v) == std::vector<int>{s.g}, s.name + " dual table");
    }
    int coherent_bad = 0;
    for (const auto& s : coherent)
        for (int a : {0, u})
            for (int g : {0, u})
                if (!dual_object(s, graded_simple(s, g, a)).ok()) ++coherent_bad;
    r.detail << "with gamma^2 = -1 for g = u: " << coherent_bad << " failures";
    return r;
}

Result oracles() {
    Result r;
    const auto& h = *ctx2()->a;
    std::mt19937_64 rng(kSeed + 1);
    std::uniform_int_distribution<unsigned> mask(0, 3);
    std::uniform_int_distribution<int> grp(0, 1);
    int agree = 0;
    for (int i = 0; i < kCoproductSamples; ++i) {
        unsigned s = mask(rng);
        int g = grp(rng);
        if (h.coproducts[oracle::monomial_index(h, s, g)] == oracle::closed_form_coproduct(h, s, g)) ++agree;
    }
    r.require(agree == kCoproductSamples, "coproduct differs from the closed formula");
    r.detail << agree << "/" << kCoproductSamples << " coproducts; ";

    const auto& c = *ctx2();
    KData kd;
    kd.w1 = Matrix{{1}, {0}};
    kd.w2 = Matrix{{0}, {1}};
    kd.w3 = Matrix{{0}, {1}, {1}, {0}};
    kd.beta = Matrix{{2, 1, 0}, {-1, 4, 3}, {0, -3, -2}};
    kd.F = {0, 3};
    std::vector<std::pair<ComoduleAlgebra, std::string>> algebras = {{build_K(c.p, c.b, kd), "w"}};
    for (int xi : {0, 1, 5}) algebras.emplace_back(build_L(u_xi(xi), c), "x");
    for (const auto& [k, symbol] : algebras) {
        std::vector<std::string> f_labels;
        for (const auto& l : k.labels)
            if (l.find(symbol) == std::string::npos) f_labels.push_back(l == "1" ? "" : l);
        const int n = k.mono->generators;
        auto words = oracle::normal_words(n, f_labels, symbol);
        const int count = (1 << n) * static_cast<int>(f_labels.size());
        r.require(words == std::set<std::string>(k.labels.begin(), k.labels.end()) && k.dim == count,
                  "normal-form basis of " + k.name + " differs from the enumeration");
        r.detail << k.name << " dim " << k.dim << " = 2^" << n << "*" << f_labels.size() << " (dim W*|F| would be "
                 << n * static_cast<int>(f_labels.size()) << "); ";
    }
    return r;
}

}  // namespace

int main() {
    const auto eight = build_the_eight(ctx2());
    const auto coherent = build_the_eight_coherent(ctx2());
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
        {"Hopf axiom suite", hopf_axioms},
        {"projective covers", projective_covers},
        {"biGalois objects U_xi", bigalois},
        {"group law and data product", group_law},
        {"pentagon and triangle", [&] { return pentagon(eight, coherent); }},
        {"FP dimensions", [&] { return fp_dims(eight); }},
        {"equivalence and non-equivalence", [&] { return equivalences(eight); }},
        {"duals", [&] { return duals(eight, coherent); }},
        {"oracle checks", oracles},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Result r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail << "exception: " << e.what();
        }
        all = all && r.pass;
        std::cout << "criterion " << i + 1 << " " << (r.pass ? "PASS" : "FAIL") << " " << criteria[i].first << ": "
                  << r.detail.str() << std::endl;
    }
    return all ? 0 : 1;
}
