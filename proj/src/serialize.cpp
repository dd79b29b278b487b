#include "tenscross/serialize.hpp"

#include <algorithm>
#include <set>

namespace tenscross {

namespace {

void require_keys(const Json& j, const std::vector<std::string>& keys, const char* what) {
    if (!j.is_object()) throw SchemaError(std::string(what) + ": expected an object");
    std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto& [k, v] : j.items())
        if (!allowed.count(k)) throw SchemaError(std::string(what) + ": unknown key '" + k + "'");
    for (const auto& k : keys)
        if (!j.contains(k)) throw SchemaError(std::string(what) + ": missing key '" + k + "'");
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw SchemaError(std::string(what) + ": expected an integer");
    return j.get<int>();
}

Rational triple_value(const Json& e, std::size_t at) {
    return Rational(e.at(at).get<std::int64_t>(), e.at(at + 1).get<std::int64_t>());
}

Json sparse_rows(const SparseMatrix& m) {
    Json out = Json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [j, c] : m.row(i)) out.push_back({i, j, c.num(), c.den()});
    return out;
}

SparseMatrix sparse_from(const Json& j, int rows, int cols) {
    if (!j.is_array()) throw SchemaError("coaction: expected an array");
    std::vector<std::vector<std::pair<int, Rational>>> r(rows);
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 4) throw SchemaError("coaction: entries are [row, col, num, den]");
        int i = as_int(e[0], "row"), c = as_int(e[1], "col");
        if (i < 0 || i >= rows || c < 0 || c >= cols) throw SchemaError("coaction: index out of range");
        r[i].emplace_back(c, triple_value(e, 2));
    }
    SparseMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        std::sort(r[i].begin(), r[i].end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [c, v] : r[i]) m.push(i, c, v);
    }
    return m;
}

Json mult_table(int dim, const std::vector<SVec>& products) {
    Json out = Json::array();
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (const auto& [k, c] : products[static_cast<std::size_t>(i) * dim + j])
                out.push_back({i, j, k, c.num(), c.den()});
    return out;
}

Json scalar_json(const Gamma& gamma, const GammaScalar& x) {
    GammaScalar n = normalize(gamma, x);
    return Json{{"coeff", to_json(n.coeff)}, {"gamma_power", n.power}};
}

std::string simple_name(const SupergroupContext& ctx, int x, int grade) {
    const auto& G = ctx.p.group;
    return "[k_" + G.label(x) + "," + G.label(grade) + "]";
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw SchemaError("rational: expected a \"num/den\" string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        throw SchemaError(std::string("rational: ") + e.what());
    }
}

Json to_json(const Matrix& m) {
    Json out = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        out.push_back(row);
    }
    return out;
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw SchemaError("matrix: expected rows");
    const int rows = static_cast<int>(j.size());
    const int cols = rows ? static_cast<int>(j[0].size()) : 0;
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols) throw SchemaError("matrix: ragged rows");
        for (int c = 0; c < cols; ++c) m(i, c) = rational_from_json(j[i][c]);
    }
    return m;
}

Json to_json(const HopfAlgebraData& h) {
    Json j;
    j["name"] = h.name;
    j["dim"] = h.dim;
    j["labels"] = h.labels;
    j["unit"] = h.unit;
    j["group"] = h.group.orders();
    j["mult"] = mult_table(h.dim, h.products);
    Json comult = Json::array();
    for (int a = 0; a < h.dim; ++a)
        for (const auto& [ij, c] : h.coproducts[a]) comult.push_back({a, ij / h.dim, ij % h.dim, c.num(), c.den()});
    j["comult"] = comult;
    Json counit = Json::array();
    for (const auto& c : h.counit) counit.push_back(to_json(c));
    j["counit"] = counit;
    Json antipode = Json::array();
    for (int c = 0; c < h.dim; ++c)
        for (int r = 0; r < h.dim; ++r)
            if (!h.antipode(r, c).is_zero()) antipode.push_back({r, c, h.antipode(r, c).num(), h.antipode(r, c).den()});
    j["antipode"] = antipode;
    j["grouplikes"] = h.group_basis;
    j["grading"] = h.grading;
    return j;
}

HopfAlgebraData hopf_from_json(const Json& j) {
    require_keys(j, {"name", "dim", "labels", "unit", "group", "mult", "comult", "counit", "antipode", "grouplikes",
                     "grading"},
                 "hopf");
    HopfAlgebraData h;
    h.name = j["name"].get<std::string>();
    h.dim = as_int(j["dim"], "dim");
    const int n = h.dim;
    h.labels = j["labels"].get<std::vector<std::string>>();
    h.unit = as_int(j["unit"], "unit");
    h.group = FiniteAbelianGroup(j["group"].get<std::vector<int>>());
    h.group_basis = j["grouplikes"].get<std::vector<int>>();
    h.grading = j["grading"].get<std::vector<int>>();
    if (static_cast<int>(h.labels.size()) != n || static_cast<int>(h.grading.size()) != n ||
        static_cast<int>(h.group_basis.size()) != h.group.size())
        throw SchemaError("hopf: sizes disagree with dim");
    auto index_ok = [&](int i) {
        if (i < 0 || i >= n) throw SchemaError("hopf: basis index out of range");
        return i;
    };

    std::vector<SparseAccumulator> prod(static_cast<std::size_t>(n) * n);
    for (const auto& e : j["mult"]) {
        if (!e.is_array() || e.size() != 5) throw SchemaError("hopf: mult entries are [i, j, k, num, den]");
        int a = index_ok(as_int(e[0], "mult")), b = index_ok(as_int(e[1], "mult")), k = index_ok(as_int(e[2], "mult"));
        prod[static_cast<std::size_t>(a) * n + b].add(k, triple_value(e, 3));
    }
    for (auto& p : prod) h.products.push_back(p.take());

    std::vector<SparseAccumulator> cop(n);
    for (const auto& e : j["comult"]) {
        if (!e.is_array() || e.size() != 5) throw SchemaError("hopf: comult entries are [a, i, j, num, den]");
        int a = index_ok(as_int(e[0], "comult")), i = index_ok(as_int(e[1], "comult")),
            k = index_ok(as_int(e[2], "comult"));
        cop[a].add(static_cast<std::int64_t>(i) * n + k, triple_value(e, 3));
    }
    for (auto& c : cop) h.coproducts.push_back(c.take());

    if (!j["counit"].is_array() || static_cast<int>(j["counit"].size()) != n) throw SchemaError("hopf: counit size");
    for (const auto& c : j["counit"]) h.counit.push_back(rational_from_json(c));

    h.antipode = Matrix(n, n);
    for (const auto& e : j["antipode"]) {
        if (!e.is_array() || e.size() != 4) throw SchemaError("hopf: antipode entries are [i, j, num, den]");
        h.antipode(index_ok(as_int(e[0], "antipode")), index_ok(as_int(e[1], "antipode"))) = triple_value(e, 2);
    }
    h.basis_group.assign(n, -1);
    for (int g = 0; g < h.group.size(); ++g) h.basis_group[index_ok(h.group_basis[g])] = g;
    return h;
}

Json to_json(const Comodule& m, const std::string& host_ref) {
    Json j;
    j["host_ref"] = host_ref;
    j["dim"] = m.dim;
    j["coaction"] = sparse_rows(m.coaction);
    return j;
}

Comodule comodule_from_json(const Json& j, const HopfPtr& host) {
    require_keys(j, {"host_ref", "dim", "coaction"}, "comodule");
    Comodule m;
    m.host = host;
    m.dim = as_int(j["dim"], "dim");
    m.coaction = sparse_from(j["coaction"], host->dim * m.dim, m.dim);
    if (!is_comodule(m)) throw SchemaError("comodule: coaction is not coassociative and counital");
    return m;
}

Json to_json(const ComoduleAlgebra& a) {
    Json j;
    j["name"] = a.name;
    j["dim"] = a.dim;
    j["labels"] = a.labels;
    Json unit = Json::array();
    for (const auto& [i, c] : a.unit) unit.push_back({i, c.num(), c.den()});
    j["unit"] = unit;
    j["mult"] = mult_table(a.dim, a.products);
    j["left"] = a.left_host ? sparse_rows(a.left) : Json();
    j["right"] = a.right_host ? sparse_rows(a.right) : Json();
    return j;
}

Json to_json(const CompatibleData& d) {
    Json j;
    j["T"] = to_json(d.T);
    j["beta"] = to_json(d.beta);
    j["alpha"] = d.alpha;
    const int n = d.psi.group().size();
    Json psi = Json::array();
    for (int g = 0; g < n; ++g) {
        Json row = Json::array();
        for (int h = 0; h < n; ++h) row.push_back(to_json(d.psi(g, h)));
        psi.push_back(row);
    }
    j["psi"] = psi;
    return j;
}

CompatibleData compatible_data_from_json(const Json& j, const SupergroupPresentation& p) {
    require_keys(j, {"T", "beta", "alpha", "psi"}, "compatible data");
    CompatibleData d = identity_data(p);
    d.T = matrix_from_json(j["T"]);
    d.beta = matrix_from_json(j["beta"]);
    d.alpha = j["alpha"].get<std::vector<int>>();
    Matrix psi = matrix_from_json(j["psi"]);
    if (psi.rows() != p.group.size() || psi.cols() != p.group.size()) throw SchemaError("compatible data: psi size");
    std::vector<Rational> values;
    for (int g = 0; g < psi.rows(); ++g)
        for (int h = 0; h < psi.cols(); ++h) values.push_back(psi(g, h));
    d.psi = GroupTwoCocycle(p.group, values);
    try {
        validate_data(d, p);
    } catch (const CompatibilityError& e) {
        throw SchemaError(std::string("compatible data: ") + e.what());
    }
    return d;
}

Json to_json(const ValidationReport& r) { return Json{{"valid", r.ok()}, {"passed", r.passed}, {"failed", r.failed}}; }

Json to_json(const SweepResult& r) {
    return Json{{"pentagons", r.pentagons},
                {"pentagon_failures", r.pentagon_failures},
                {"triangles", r.triangles},
                {"triangle_failures", r.triangle_failures}};
}

Json to_json(const Fingerprint& f, const SupergroupContext& ctx) {
    const auto& G = ctx.p.group;
    Json action = Json::object();
    for (std::size_t x = 0; x < f.simple_action.size(); ++x)
        action[G.label(static_cast<int>(x))] = G.label(f.simple_action[x]);
    return Json{{"g", G.label(f.g)},
                {"action", f.outer ? "outer" : "inner"},
                {"simple_action", action},
                {"gamma", f.gamma.str()}};
}

Json category_report(const CrossedSystem& s, int threads) {
    const auto& ctx = *s.ctx;
    const auto& G = ctx.p.group;
    Json j;
    j["name"] = s.name;
    j["system"] = Json{{"L", to_json(s.ldata)}, {"g", G.label(s.g)}, {"gamma", s.gamma.str()}};
    j["validation"] = to_json(validate_crossed_system(s));

    FpDimReport fp = fp_dim_category(s);
    Json simples = Json::array();
    for (std::size_t i = 0; i < fp.simples.size(); ++i)
        simples.push_back({{"object", fp.simples[i]}, {"fpdim", to_json(fp.simple_dims[i])}});
    j["simples"] = simples;

    Json projectives = Json::array();
    std::size_t i = 0;
    for (int a : {0, s.u()})
        for (int x = 0; x < G.size(); ++x, ++i) {
            GradedObject p = graded_projective(s, x, a);
            Json series = Json::array();
            for (int y : composition_series(p.v)) series.push_back(simple_name(ctx, y, a));
            projectives.push_back({{"object", p.name}, {"composition_series", series}, {"fpdim", to_json(fp.projective_dims[i])}});
        }
    j["projectives"] = projectives;
    j["fpdim"] = to_json(fp.total);

    Json duals = Json::array();
    for (int a : {0, s.u()})
        for (int x = 0; x < G.size(); ++x) {
            GradedObject k = graded_simple(s, x, a);
            DualData d = dual_object(s, k);
            auto series = composition_series(d.dual.v);
            duals.push_back({{"object", k.name},
                             {"dual", simple_name(ctx, series.front(), d.dual.grade)},
                             {"zigzag", d.ok()}});
        }
    j["dual_table"] = duals;

    Json scalars = Json::array();
    for (int x = 0; x < G.size(); ++x)
        for (int y = 0; y < G.size(); ++y)
            for (int z = 0; z < G.size(); ++z) {
                GradedObject a = graded_simple(s, x, s.u()), b = graded_simple(s, y, s.u()),
                             c = graded_simple(s, z, s.u());
                ScaledMatrix m = associator_scaled(s, a, b, c);
                scalars.push_back({{"objects", a.name + b.name + c.name},
                                   {"value", scalar_json(s.gamma, {m.m.to_dense()(0, 0), m.gamma_power})}});
            }
    j["associator_scalars"] = scalars;
    j["fingerprint"] = to_json(invariant_fingerprint(s), ctx);
    j["pentagon_sweep"] = to_json(pentagon_sweep(s, generating_set(s), threads));
    return j;
}

}  // namespace tenscross
