#include "tenscross/crossed.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace tenscross {

namespace {

std::optional<std::int64_t> integer_sqrt(std::int64_t n) {
    if (n < 0) return std::nullopt;
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(n))));
    for (std::int64_t c = std::max<std::int64_t>(0, r - 1); c <= r + 1; ++c)
        if (c * c == n) return c;
    return std::nullopt;
}

}  // namespace

Gamma Gamma::rational(const Rational& r) {
    if (r.is_zero()) throw std::invalid_argument("Gamma: zero");
    return Gamma{r * r, r < Rational(0) ? -1 : 1};
}

Gamma Gamma::root(const Rational& square, int sign) {
    if (square.is_zero()) throw std::invalid_argument("Gamma: zero");
    return Gamma{square, sign < 0 ? -1 : 1};
}

std::optional<Rational> Gamma::value() const {
    auto n = integer_sqrt(square.num()), d = integer_sqrt(square.den());
    if (!n || !d) return std::nullopt;
    return Rational(sign * *n, *d);
}

std::string Gamma::str() const {
    std::ostringstream os;
    if (auto v = value()) {
        os << *v;
        return os.str();
    }
    os << square;
    std::string root = square == Rational(-1) ? "i" : "sqrt(" + os.str() + ")";
    return (sign < 0 ? "-" : "") + root;
}

Gamma Gamma::parse(const std::string& text) {
    if (text == "i" || text == "+i") return root(Rational(-1), 1);
    if (text == "-i") return root(Rational(-1), -1);
    return rational(Rational::parse(text.size() > 1 && text.front() == '+' ? text.substr(1) : text));
}

GammaScalar normalize(const Gamma& gamma, GammaScalar x) {
    while (x.power >= 2) {
        x.coeff *= gamma.square;
        x.power -= 2;
    }
    while (x.power < 0) {
        x.coeff /= gamma.square;
        x.power += 2;
    }
    if (x.power == 1) {
        if (auto v = gamma.value()) {
            x.coeff *= *v;
            x.power = 0;
        }
    }
    if (x.coeff.is_zero()) x.power = 0;
    return x;
}

bool gamma_equal(const Gamma& gamma, const GammaScalar& a, const GammaScalar& b) {
    GammaScalar x = normalize(gamma, a), y = normalize(gamma, b);
    return x.coeff == y.coeff && x.power == y.power;
}

namespace {

const HopfAlgebraData& host_of(const CrossedSystem& s) { return *s.ctx->a; }

SVec column_of(const SparseMatrix& transposed, int j) {
    const auto& r = transposed.row(j);
    return SVec(r.begin(), r.end());
}

SparseMatrix sparse_difference(const SparseMatrix& a, const SparseMatrix& b) { return a + Rational(-1) * b; }

bool sparse_equal(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && sparse_difference(a, b).nnz() == 0;
}

Matrix conjugation(const ComoduleAlgebra& a, const SVec& b) {
    auto binv = a.inverse(b);
    if (!binv) throw std::logic_error("conjugation: element is not invertible");
    Matrix m(a.dim, a.dim);
    for (int j = 0; j < a.dim; ++j)
        for (const auto& [i, c] : a.multiply(a.multiply(*binv, sv_unit(j)), b)) m(i, j) = c;
    return m;
}

void derive_coordinates(CrossedSystem& s) {
    const auto& H = host_of(s);
    const auto& L = *s.L;
    const int n = H.dim;
    if (L.dim != n) throw std::invalid_argument("crossed system: L and H differ in dimension");

    // theta: v_S g -> x_S e_(alpha g, g) is the identity on basis positions.
    bool ok = L.unit == sv_unit(H.unit);
    const SparseMatrix rt = L.right.transpose();
    for (int j = 0; j < n && ok; ++j) ok = column_of(rt, j) == H.coproducts[j];

    s.K = Matrix(n, n);
    const SparseMatrix lt = L.left.transpose();
    for (int j = 0; j < n; ++j)
        for (const auto& [r, c] : lt.row(j)) s.K(r / n, j) += c * H.counit[r % n];

    s.tau.assign(static_cast<std::size_t>(n) * n, Rational(0));
    for (int h = 0; h < n; ++h)
        for (int k = 0; k < n; ++k)
            for (const auto& [i, c] : L.product(h, k)) s.tau[h * n + k] += c * H.counit[i];

    // Convolution inverse in (H (x) H)*: sum tau(h1, k1) tau_bar(h2, k2) = eps(h) eps(k).
    auto convolution_system = [&](const std::vector<Rational>& left_factor, bool left) {
        Matrix m(n * n, n * n);
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                for (const auto& [ih, ch] : H.coproducts[h])
                    for (const auto& [ik, ck] : H.coproducts[k]) {
                        int h1 = ih / n, h2 = ih % n, k1 = ik / n, k2 = ik % n;
                        if (left)
                            m(h * n + k, h2 * n + k2) += ch * ck * left_factor[h1 * n + k1];
                        else
                            m(h * n + k, h1 * n + k1) += ch * ck * left_factor[h2 * n + k2];
                    }
        return m;
    };
    Vec eps2(n * n);
    for (int h = 0; h < n; ++h)
        for (int k = 0; k < n; ++k) eps2[h * n + k] = H.counit[h] * H.counit[k];
    auto tb = solve(convolution_system(s.tau, true), eps2);
    if (!tb) throw std::logic_error("crossed system: tau has no convolution inverse");
    s.tau_bar.assign(tb->begin(), tb->end());
    ok = ok && convolution_system(s.tau, false) * Vec(s.tau_bar.begin(), s.tau_bar.end()) == eps2;
    s.trivial_split = Vec(s.tau_bar.begin(), s.tau_bar.end()) == eps2;

    // nu(h) = eps f(theta K(h_1) (x) theta(h_2)).
    s.nu.assign(n, Rational(0));
    const auto& sp = s.box->space;
    for (int h = 0; h < n; ++h) {
        Vec amb(sp.ambient());
        for (const auto& [idx, c] : H.coproducts[h]) {
            int h1 = idx / n, h2 = idx % n;
            for (int k = 0; k < n; ++k)
                if (!s.K(k, h1).is_zero()) amb[k * n + h2] += c * s.K(k, h1);
        }
        Vec coords = sp.coords(amb);
        if (sp.basis * coords != amb) {
            ok = false;
            continue;
        }
        Vec img = s.f * coords;
        for (int i = 0; i < n; ++i) s.nu[h] += img[i] * H.counit[i];
    }
    s.coordinates_ok = ok;
}

Comodule unit_comodule(const CrossedSystem& s, int a, int b) {
    const int g = (a != 0 && b != 0) ? s.g : 0;
    return simple_comodule(s.ctx->a, g);
}

bool unit_is_trivial(const CrossedSystem& s, int a, int b) { return a == 0 || b == 0 || s.g == 0; }

Comodule attach_unit(const CrossedSystem& s, const Comodule& v, int a, int b) {
    if (unit_is_trivial(s, a, b)) return v;
    return tensor_comodules(v, unit_comodule(s, a, b));
}

}  // namespace

CompatibleData t_xi_data(const SupergroupContext& ctx, const Rational& xi) {
    if (ctx.p.v_dim != 2) throw std::invalid_argument("t_xi_data: needs dim V = 2");
    CompatibleData d = identity_data(ctx.p);
    d.T = Matrix{{Rational(1), xi}, {Rational(0), Rational(-1)}};
    return d;
}

CrossedSystem make_crossed_system(std::shared_ptr<const SupergroupContext> ctx, const CompatibleData& ldata, int g,
                                  const Gamma& gamma, const std::string& name, std::optional<Matrix> f) {
    CrossedSystem s;
    s.name = name;
    s.ctx = ctx;
    s.ldata = ldata;
    s.L = std::make_shared<ComoduleAlgebra>(build_L(ldata, *ctx));
    const CompatibleData id = identity_data(ctx->p);
    s.H = std::make_shared<ComoduleAlgebra>(build_L(id, *ctx));
    s.box = std::make_shared<CotensorProduct>(cotensor(*s.L, *s.L));
    s.g = g;
    s.gamma = gamma;
    if (f) {
        s.f = *f;
    } else {
        if (!(data_product(ldata, ldata) == id)) throw std::invalid_argument("make_crossed_system: L box L is not H");
        Matrix law = group_law_map(ldata, ldata, *ctx, *s.L, *s.L, *s.H, *s.box);
        s.f = invert(law);
        if (g != 0) s.f = sign_twist_map(*s.H, *ctx) * s.f;
    }
    derive_coordinates(s);
    return s;
}

namespace {

std::string rational_label(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string system_name(const std::string& family, int g, const Gamma& gamma) {
    std::string gs = gamma.str();
    if (gs.front() != '-') gs = "+" + gs;
    return family + (g == 0 ? "(1,id," : "(u,iota,") + gs + ")";
}

}  // namespace

CrossedSystem make_family_c(std::shared_ptr<const SupergroupContext> ctx, const Rational& xi, int g,
                            const Gamma& gamma) {
    return make_crossed_system(ctx, t_xi_data(*ctx, xi), g, gamma, system_name("C" + rational_label(xi), g, gamma));
}

CrossedSystem make_family_d(std::shared_ptr<const SupergroupContext> ctx, int g, const Gamma& gamma) {
    CompatibleData id = identity_data(ctx->p);
    return make_crossed_system(std::move(ctx), id, g, gamma, system_name("D", g, gamma));
}

namespace {

std::vector<CrossedSystem> eight_systems(std::shared_ptr<const SupergroupContext> ctx, bool coherent) {
    std::vector<CrossedSystem> out;
    const int u = ctx->p.u;
    for (int family = 0; family < 2; ++family)
        for (int g : {0, u})
            for (int sign : {1, -1}) {
                const Gamma plain = Gamma::rational(Rational(sign));
                CrossedSystem s = family == 0 ? make_family_c(ctx, Rational(0), g, plain) : make_family_d(ctx, g, plain);
                if (coherent) {
                    s.gamma = Gamma::root(coherent_gamma_square(s), sign);
                    s.name = system_name(family == 0 ? "C0" : "D", g, s.gamma);
                }
                out.push_back(std::move(s));
            }
    return out;
}

}  // namespace

std::vector<CrossedSystem> build_the_eight(std::shared_ptr<const SupergroupContext> ctx) {
    return eight_systems(std::move(ctx), false);
}

std::vector<CrossedSystem> build_the_eight_coherent(std::shared_ptr<const SupergroupContext> ctx) {
    return eight_systems(std::move(ctx), true);
}

// ---------------------------------------------------------------------------
// Objects, tensor products, associators

GradedObject graded_simple(const CrossedSystem& s, int g, int grade) {
    const auto& G = s.ctx->p.group;
    return {simple_comodule(s.ctx->a, g), grade, "[k_" + G.label(g) + "," + G.label(grade) + "]"};
}

GradedObject graded_projective(const CrossedSystem& s, int g, int grade) {
    const auto& G = s.ctx->p.group;
    return {projective_cover(s.ctx->a, g), grade, "[P_" + G.label(g) + "," + G.label(grade) + "]"};
}

std::vector<GradedObject> generating_set(const CrossedSystem& s) {
    const int u = s.u();
    return {graded_simple(s, 0, 0),     graded_simple(s, u, 0),     graded_simple(s, 0, u),
            graded_simple(s, u, u),     graded_projective(s, 0, 0), graded_projective(s, 0, u)};
}

Comodule functor_apply(const CrossedSystem& s, int a, const Comodule& w) { return a == 0 ? w : pushforward(w, s.K); }

GradedObject tensor_objects(const CrossedSystem& s, const GradedObject& x, const GradedObject& y) {
    Comodule v = tensor_comodules(x.v, functor_apply(s, x.grade, y.v));
    v = attach_unit(s, v, x.grade, y.grade);
    return {std::move(v), s.ctx->p.group.mul(x.grade, y.grade), "(" + x.name + "*" + y.name + ")"};
}

SparseMatrix tensor_morphisms(const SparseMatrix& f, const SparseMatrix& k) { return kronecker(f, k); }

SparseMatrix split_matrix(const CrossedSystem& s, int a, const Comodule& x, const Comodule& y) {
    if (a == 0 || s.trivial_split) return SparseMatrix::identity(x.dim * y.dim);
    const int n = host_of(s).dim;
    auto lx = coaction_components(x), ly = coaction_components(y);
    SparseMatrix acc(x.dim * y.dim, x.dim * y.dim);
    for (int h = 0; h < n; ++h) {
        if (lx[h].nnz() == 0) continue;
        SparseMatrix mh(y.dim, y.dim);
        for (int k = 0; k < n; ++k) {
            const Rational& t = s.tau_bar[h * n + k];
            if (!t.is_zero() && ly[k].nnz() != 0) mh = mh + t * ly[k];
        }
        if (mh.nnz() != 0) acc = acc + kronecker(lx[h], mh);
    }
    return acc;
}

SparseMatrix pseudonat_matrix(const CrossedSystem& s, int a, int b, const Comodule& x) {
    if (a == 0 || b == 0) return SparseMatrix::identity(x.dim);
    auto lx = coaction_components(x);
    SparseMatrix acc(x.dim, x.dim);
    for (int h = 0; h < host_of(s).dim; ++h)
        if (!s.nu[h].is_zero() && lx[h].nnz() != 0) acc = acc + s.nu[h] * lx[h];
    return acc;
}

int gamma_power(int a, int b, int c) { return (a != 0 && b != 0 && c != 0) ? 1 : 0; }

ScaledMatrix associator_scaled(const CrossedSystem& s, const GradedObject& x, const GradedObject& y,
                               const GradedObject& z) {
    const int a = x.grade, b = y.grade, c = z.grade;
    const int dv = x.v.dim, dw = y.v.dim, dz = z.v.dim;
    const Comodule bz = functor_apply(s, b, z.v);
    SparseMatrix out = SparseMatrix::identity(dv * dw * dz);
    if (a != 0) {
        const Comodule yp = attach_unit(s, bz, b, c);
        out = kronecker(SparseMatrix::identity(dv), split_matrix(s, a, y.v, yp));
        if (!unit_is_trivial(s, b, c)) {
            SparseMatrix s2 = split_matrix(s, a, bz, unit_comodule(s, b, c));
            out = kronecker(SparseMatrix::identity(dv * dw), s2) * out;
        }
        if (b != 0) out = kronecker(SparseMatrix::identity(dv * dw), pseudonat_matrix(s, a, b, z.v)) * out;
    }
    return {std::move(out), gamma_power(a, b, c)};
}

SparseMatrix associator(const CrossedSystem& s, const GradedObject& x, const GradedObject& y, const GradedObject& z) {
    ScaledMatrix a = associator_scaled(s, x, y, z);
    GammaScalar k = normalize(s.gamma, {Rational(1), a.gamma_power});
    if (k.power != 0) throw std::domain_error("associator: component involves the formal scalar " + s.gamma.str());
    return k.coeff.is_one() ? a.m : k.coeff * a.m;
}

bool associator_is_comodule_iso(const CrossedSystem& s, const GradedObject& x, const GradedObject& y,
                                const GradedObject& z) {
    Matrix m = associator_scaled(s, x, y, z).m.to_dense();
    GradedObject src = tensor_objects(s, x, tensor_objects(s, y, z));
    GradedObject dst = tensor_objects(s, tensor_objects(s, x, y), z);
    return src.grade == dst.grade && is_invertible(m) && is_comodule_map(m, src.v, dst.v);
}

bool pentagon_check(const CrossedSystem& s, const GradedObject& w, const GradedObject& x, const GradedObject& y,
                    const GradedObject& z) {
    const GradedObject wx = tensor_objects(s, w, x);
    const GradedObject xy = tensor_objects(s, x, y);
    const GradedObject yz = tensor_objects(s, y, z);
    const ScaledMatrix l1 = associator_scaled(s, wx, y, z), l2 = associator_scaled(s, w, x, yz);
    const ScaledMatrix r1 = associator_scaled(s, w, x, y), r2 = associator_scaled(s, w, xy, z),
                       r3 = associator_scaled(s, x, y, z);
    SparseMatrix lhs = l1.m * l2.m;
    SparseMatrix rhs = kronecker(r1.m, SparseMatrix::identity(z.v.dim)) * r2.m *
                       kronecker(SparseMatrix::identity(w.v.dim), r3.m);
    // gamma^(pl - pr) lhs = rhs
    GammaScalar k = normalize(s.gamma, {Rational(1), l1.gamma_power + l2.gamma_power - r1.gamma_power -
                                                         r2.gamma_power - r3.gamma_power});
    if (k.power != 0) return lhs.nnz() == 0 && rhs.nnz() == 0;
    return sparse_equal(k.coeff * lhs, rhs);
}

bool triangle_check(const CrossedSystem& s, const GradedObject& x, const GradedObject& y) {
    const GradedObject one{trivial_comodule(s.ctx->a), 0, "1"};
    return associator_scaled(s, x, one, y).m.is_identity() && associator_scaled(s, one, x, y).m.is_identity() &&
           associator_scaled(s, x, y, one).m.is_identity();
}

int worker_threads() {
    if (const char* env = std::getenv("TENSCROSS_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) return t;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

SweepResult pentagon_sweep(const CrossedSystem& s, const std::vector<GradedObject>& objects, int threads) {
    const long n = static_cast<long>(objects.size());
    const long total = n * n * n * n;
    if (threads <= 0) threads = worker_threads();
    std::atomic<long> next{0}, fails{0};
    auto work = [&] {
        for (long q = next++; q < total; q = next++) {
            long i = q / (n * n * n), j = (q / (n * n)) % n, k = (q / n) % n, l = q % n;
            if (!pentagon_check(s, objects[i], objects[j], objects[k], objects[l])) ++fails;
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    SweepResult r;
    r.pentagons = total;
    r.pentagon_failures = fails;
    for (const auto& x : objects)
        for (const auto& y : objects) {
            ++r.triangles;
            if (!triangle_check(s, x, y)) ++r.triangle_failures;
        }
    return r;
}

// ---------------------------------------------------------------------------
// Validation

namespace {

GammaScalar scalar_of(const SparseMatrix& m) { return {m.to_dense()(0, 0), 0}; }

GammaScalar times(GammaScalar a, const GammaScalar& b) {
    a.coeff *= b.coeff;
    a.power += b.power;
    return a;
}

// Both sides of the coherence identity of gamma on (a, b, c, d), evaluated on
// the one-dimensional objects k_g(b,c).
std::pair<GammaScalar, GammaScalar> action_coherence(const CrossedSystem& s, int a, int b, int c, int d) {
    const auto& G = s.ctx->p.group;
    const int bc = G.mul(b, c), ab = G.mul(a, b), cd = G.mul(c, d);
    GammaScalar l{Rational(1), gamma_power(a, b, c) + gamma_power(a, bc, d) + gamma_power(b, c, d)};
    l = times(l, scalar_of(split_matrix(s, a, unit_comodule(s, b, c), unit_comodule(s, bc, d))));
    GammaScalar r{Rational(1), gamma_power(ab, c, d) + gamma_power(a, b, cd)};
    r = times(r, scalar_of(pseudonat_matrix(s, a, b, unit_comodule(s, c, d))));
    r = times(r, scalar_of(split_matrix(s, a, functor_apply(s, b, unit_comodule(s, c, d)), unit_comodule(s, b, cd))));
    return {l, r};
}

}  // namespace

Rational coherent_gamma_square(const CrossedSystem& s) {
    const int u = s.u();
    auto [l, r] = action_coherence(s, u, u, u, u);
    // l = x gamma^2, r = y gamma^0
    if (l.power - r.power != 2) throw std::logic_error("coherent_gamma_square: unexpected gamma powers");
    return r.coeff / l.coeff;
}

ValidationReport validate_crossed_system(const CrossedSystem& s) {
    ValidationReport rep;
    auto record = [&](const std::string& name, bool ok) { (ok ? rep.passed : rep.failed).push_back(name); };
    const auto& G = s.ctx->p.group;
    const int u = s.u();
    const int grades[2] = {0, u};
    auto gval = [&](int a, int b) { return (a != 0 && b != 0) ? s.g : 0; };

    record("coordinates", s.coordinates_ok);
    record("L-bigalois", is_bigalois(*s.L).ok());
    record("g-fixed", box_grouplike(*s.L, s.g) == s.g);
    record("f-isomorphism", is_bicomodule_algebra_iso(s.f, s.box->algebra, *s.H, s.g));

    bool grouplike = true;
    for (int a : grades)
        for (int b : grades)
            for (int c : grades) {
                int acted = a == 0 ? gval(b, c) : box_grouplike(*s.L, gval(b, c));
                grouplike = grouplike && G.mul(acted, gval(a, G.mul(b, c))) == G.mul(gval(a, b), gval(G.mul(a, b), c));
            }
    record("grouplike-cocycle", grouplike);
    if (!s.coordinates_ok) return rep;

    const auto& H = s.ctx->a;
    std::vector<Comodule> gens = {simple_comodule(H, 0), simple_comodule(H, u), projective_cover(H, 0),
                                  projective_cover(H, u)};

    bool unit = true;
    for (int a : grades)
        for (int b : grades) unit = unit && pseudonat_matrix(s, a, b, trivial_comodule(H)).is_identity();
    record("pseudonat-unit", unit);

    bool monoidal = true;
    for (int a : grades)
        for (int b : grades)
            for (const auto& x : gens)
                for (const auto& y : gens) {
                    SparseMatrix lhs = split_matrix(s, G.mul(a, b), x, y) * pseudonat_matrix(s, a, b, tensor_comodules(x, y));
                    SparseMatrix rhs = kronecker(pseudonat_matrix(s, a, b, x), pseudonat_matrix(s, a, b, y)) *
                                       split_matrix(s, a, functor_apply(s, b, x), functor_apply(s, b, y)) *
                                       split_matrix(s, b, x, y);
                    monoidal = monoidal && sparse_equal(lhs, rhs);
                }
    record("pseudonat-monoidal", monoidal);

    // gamma_(a,b,c) appears on both sides and is omitted.
    bool coherent = true;
    for (int a : grades)
        for (int b : grades)
            for (int c : grades)
                for (const auto& x : gens) {
                    const int bc = G.mul(b, c), ab = G.mul(a, b);
                    const Comodule ubc = unit_comodule(s, b, c);
                    SparseMatrix lhs = pseudonat_matrix(s, a, bc, x) * split_matrix(s, a, ubc, functor_apply(s, bc, x)) *
                                       pseudonat_matrix(s, b, c, x);
                    const Comodule cx = functor_apply(s, c, x);
                    SparseMatrix rhs = pseudonat_matrix(s, ab, c, x) * pseudonat_matrix(s, a, b, cx) *
                                       split_matrix(s, a, functor_apply(s, b, cx), ubc);
                    coherent = coherent && sparse_equal(lhs, rhs);
                }
    record("f-coherence", coherent);

    bool cocycle = true;
    for (int a : grades)
        for (int b : grades)
            for (int c : grades)
                for (int d : grades) {
                    auto [l, r] = action_coherence(s, a, b, c, d);
                    cocycle = cocycle && gamma_equal(s.gamma, l, r);
                }
    record("gamma-cocycle", cocycle);
    return rep;
}

// ---------------------------------------------------------------------------
// Duals and Frobenius-Perron dimensions

GradedObject dual_of(const CrossedSystem& s, const GradedObject& x) {
    const auto& G = s.ctx->p.group;
    Comodule dv = dual_comodule(x.v);
    std::string name = x.name + "*";
    if (x.grade == 0) return {std::move(dv), 0, name};
    Comodule v = tensor_comodules(simple_comodule(s.ctx->a, G.inv(s.g)), functor_apply(s, x.grade, dv));
    return {std::move(v), x.grade, name};
}

DualData dual_object(const CrossedSystem& s, const GradedObject& x) {
    DualData out;
    out.dual = dual_of(s, x);
    const GradedObject& d = out.dual;
    const GradedObject dx = tensor_objects(s, d, x);
    const GradedObject xd = tensor_objects(s, x, d);
    const Comodule one = trivial_comodule(s.ctx->a);
    if (dx.grade != 0 || xd.grade != 0) return out;
    auto evs = comodule_hom_space(dx.v, one);
    auto coevs = comodule_hom_space(one, xd.v);
    if (evs.empty() || coevs.empty()) return out;

    const ScaledMatrix a_xdx = associator_scaled(s, x, d, x);
    const ScaledMatrix a_dxd = associator_scaled(s, d, x, d);
    const Matrix a_xdx_inv = invert(a_xdx.m.to_dense());
    const Matrix a_dxd_m = a_dxd.m.to_dense();
    const Matrix ix = Matrix::identity(x.v.dim), id = Matrix::identity(d.v.dim);
    for (const Matrix& ev : evs) {
        // (id (x) ev) alpha^-1 (coev (x) id) = id with alpha = gamma^p m and
        // coev = gamma^p c is linear in c.
        const int n = x.v.dim * x.v.dim;
        Matrix sys(n, static_cast<int>(coevs.size()));
        for (std::size_t i = 0; i < coevs.size(); ++i) {
            Matrix z = kronecker(ix, ev) * a_xdx_inv * kronecker(coevs[i], ix);
            for (int r = 0; r < x.v.dim; ++r)
                for (int c = 0; c < x.v.dim; ++c) sys(r * x.v.dim + c, static_cast<int>(i)) = z(r, c);
        }
        Vec target(n);
        for (int r = 0; r < x.v.dim; ++r) target[r * x.v.dim + r] = 1;
        auto sol = solve(sys, target);
        if (!sol) continue;
        Matrix coev(xd.v.dim, 1);
        for (std::size_t i = 0; i < coevs.size(); ++i) coev = coev + (*sol)[i] * coevs[i];
        out.ev = ev;
        out.coev = coev;
        out.coev_gamma_power = a_xdx.gamma_power;
        out.ev_colinear = is_comodule_map(ev, dx.v, one);
        out.coev_colinear = is_comodule_map(coev, one, xd.v);
        out.zigzag_left = kronecker(ix, ev) * a_xdx_inv * kronecker(coev, ix) == ix;
        GammaScalar k = normalize(s.gamma, {Rational(1), a_dxd.gamma_power + a_xdx.gamma_power});
        Matrix right = kronecker(ev, id) * a_dxd_m * kronecker(id, coev);
        out.zigzag_right = k.power == 0 && k.coeff * right == id;
        if (out.ok()) break;
    }
    return out;
}

FpDimReport fp_dim_category(const CrossedSystem& s) {
    FpDimReport rep;
    const auto& G = s.ctx->p.group;
    for (int a : {0, s.u()})
        for (int g = 0; g < G.size(); ++g) {
            GradedObject simple = graded_simple(s, g, a);
            GradedObject dual = dual_of(s, simple);
            // Invertible: both products with the dual are the unit object.
            bool invertible = true;
            for (const GradedObject& p : {tensor_objects(s, simple, dual), tensor_objects(s, dual, simple)})
                invertible = invertible && p.grade == 0 && p.v.dim == 1 && composition_series(p.v) == std::vector<int>{0};
            rep.simples_invertible = rep.simples_invertible && invertible;
            rep.simples.push_back(simple.name);
            rep.simple_dims.push_back(Rational(invertible ? 1 : 0));
            // Composition factors of [P_g, a] are the [k_x, a], each of FP dimension 1.
            GradedObject proj = graded_projective(s, g, a);
            Rational pd(static_cast<std::int64_t>(composition_series(proj.v).size()));
            rep.projective_dims.push_back(pd);
            rep.total += rep.simple_dims.back() * pd;
        }
    return rep;
}

std::string Fingerprint::str(const SupergroupContext& ctx) const {
    const auto& G = ctx.p.group;
    std::ostringstream os;
    os << "g=" << G.label(g) << " action=" << (outer ? "outer" : "inner") << " simples=";
    for (std::size_t x = 0; x < simple_action.size(); ++x)
        os << (x ? "," : "") << G.label(static_cast<int>(x)) << "->" << G.label(simple_action[x]);
    os << " gamma=" << gamma.str();
    return os.str();
}

Fingerprint invariant_fingerprint(const CrossedSystem& s) {
    Fingerprint fp;
    fp.g = s.g;
    fp.outer = !is_inner(s.ldata, *s.ctx);
    for (int x = 0; x < s.ctx->p.group.size(); ++x) fp.simple_action.push_back(box_grouplike(*s.L, x));
    fp.gamma = s.gamma;
    return fp;
}

// ---------------------------------------------------------------------------
// Equivalences

std::optional<bool> similar_2x2(const Matrix& a, const Matrix& b) {
    if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2) return std::nullopt;
    auto scalar = [](const Matrix& m) { return m(0, 1).is_zero() && m(1, 0).is_zero() && m(0, 0) == m(1, 1); };
    if (scalar(a) || scalar(b)) return a == b;
    return a(0, 0) + a(1, 1) == b(0, 0) + b(1, 1) && determinant(a) == determinant(b);
}

namespace {

// Maps a vector of the ambient space P (x) Q (x) R to coordinates of S (x) R, S a subspace of P (x) Q.
Matrix coords_left(const Subspace& sp, int r, const Matrix& ambient, bool& contained) {
    std::vector<int> rows;
    for (int p : sp.pivots)
        for (int k = 0; k < r; ++k) rows.push_back(p * r + k);
    Matrix c = ambient.select_rows(rows);
    contained = kronecker(sp.basis, Matrix::identity(r)) * c == ambient;
    return c;
}

// Same for P (x) S with S a subspace of Q (x) R.
Matrix coords_right(int p, const Subspace& sp, const Matrix& ambient, bool& contained) {
    std::vector<int> rows;
    for (int i = 0; i < p; ++i)
        for (int k : sp.pivots) rows.push_back(i * sp.ambient() + k);
    Matrix c = ambient.select_rows(rows);
    contained = kronecker(Matrix::identity(p), sp.basis) * c == ambient;
    return c;
}

struct HuCandidate {
    Matrix hu;
    bool valid = false;
};

HuCandidate build_hu(const CrossedSystem& s, const CrossedSystem& t, const CompatibleData& m, int h,
                     const ComoduleAlgebra& M, const CotensorProduct& A, const CotensorProduct& B) {
    const auto& ctx = *s.ctx;
    HuCandidate out;
    CompatibleData da = data_product(m, s.ldata), db = data_product(t.ldata, m);
    CompatibleData twisted = da;
    twisted.T = ctx.p.action[ctx.p.u] * da.T;
    const bool equal = da == db;
    if (!equal && !(twisted == db)) return out;
    auto la = build_L(da, ctx), lb = build_L(db, ctx);
    Matrix theta_a = group_law_map(m, s.ldata, ctx, M, *s.L, la, A);
    Matrix theta_b = group_law_map(t.ldata, m, ctx, *t.L, M, lb, B);
    Matrix j = (equal == (h == 0)) ? Matrix::identity(la.dim) : sign_twist_map(la, ctx);
    out.hu = theta_b * j * invert(theta_a);
    out.valid = true;
    return out;
}

}  // namespace

EquivalenceCheck verify_equivalence(const CrossedSystem& s, const CrossedSystem& t, const EquivalenceData& d) {
    EquivalenceCheck out;
    const auto& ctx = *s.ctx;
    const auto& G = ctx.p.group;
    const auto& H = host_of(s);
    const int n = H.dim;
    out.grouplike = G.mul(d.m.alpha[s.g], G.mul(d.h, d.h)) == t.g;
    out.gamma = s.gamma == t.gamma;

    auto M = std::make_shared<ComoduleAlgebra>(build_L(d.m, ctx));
    CotensorProduct A = cotensor(*M, *s.L);
    CotensorProduct B = cotensor(*t.L, *M);
    out.hu_iso = is_bicomodule_algebra_iso(d.hu, A.algebra, B.algebra, d.h);
    if (!out.hu_iso) return out;

    const int dm = M->dim, dl = s.L->dim, dlp = t.L->dim;
    CotensorProduct S = cotensor(*M, s.box->algebra);

    // M box (L_u box L_u) -> M box H -> H box M.
    Matrix conj_b = conjugation(*M, right_grouplike_element(*M, s.g));
    Matrix lhs_mh = kronecker(conj_b, s.f) * S.space.basis;
    Matrix phi(n * dm, dm * n);
    const SparseMatrix mlt = M->left.transpose();
    for (int i = 0; i < dm; ++i)
        for (int h = 0; h < n; ++h) {
            if (H.counit[h].is_zero()) continue;
            for (const auto& [r, c] : mlt.row(i)) phi((r / dm) * dm + r % dm, i * n + h) += c * H.counit[h];
        }
    Matrix lhs = phi * lhs_mh;

    // (z (x) id)(id (x) h^u)(h^u (x) id) on M (x) L_u (x) L_u.
    bool contained = true, step_ok = true;
    Matrix amb = kronecker(Matrix::identity(dm), s.box->space.basis) * S.space.basis;
    Matrix c1 = coords_left(A.space, dl, amb, contained);
    step_ok = step_ok && contained;
    Matrix amb1 = kronecker(B.space.basis, Matrix::identity(dl)) * kronecker(d.hu, Matrix::identity(dl)) * c1;
    Matrix conj_bp = conjugation(*t.L, right_grouplike_element(*t.L, d.h));
    Matrix c2 = coords_right(dlp, A.space, amb1, contained);
    step_ok = step_ok && contained;
    Matrix amb2 = kronecker(Matrix::identity(dlp), B.space.basis) * kronecker(conj_bp, d.hu) * c2;
    Matrix c3 = coords_left(t.box->space, dm, amb2, contained);
    step_ok = step_ok && contained;
    Matrix rhs = kronecker(t.f, Matrix::identity(dm)) * c3;

    if (step_ok) {
        std::optional<Rational> ratio;
        bool proportional = true;
        for (int i = 0; i < lhs.rows() && proportional; ++i)
            for (int j = 0; j < lhs.cols() && proportional; ++j) {
                const Rational &x = lhs(i, j), &y = rhs(i, j);
                if (x.is_zero() != y.is_zero()) proportional = false;
                else if (!x.is_zero()) {
                    Rational q = x / y;
                    if (ratio && *ratio != q) proportional = false;
                    ratio = q;
                }
            }
        if (proportional && ratio) out.ratio = ratio;
    }
    out.f_compatible = out.ratio.has_value() && out.ratio->is_one();
    return out;
}

EquivalenceResult equivalence_search(const CrossedSystem& s, const CrossedSystem& t, const SearchBox& box) {
    EquivalenceResult res;
    const auto& ctx = *s.ctx;
    const int u = ctx.p.u;
    if (s.gamma != t.gamma) res.obstructions.push_back("gamma");
    if (s.g != t.g) res.obstructions.push_back("alpha");
    const Matrix tu = ctx.p.action[u];
    auto sim = similar_2x2(s.ldata.T, t.ldata.T);
    auto sim_u = similar_2x2(s.ldata.T, tu * t.ldata.T);
    if (sim && sim_u && !*sim && !*sim_u) res.obstructions.push_back("T-solvability");
    if (!res.obstructions.empty()) return res;
    const int k = ctx.p.v_dim;
    if (k != 2) throw std::invalid_argument("equivalence_search: needs dim V = 2");

    std::vector<Rational> values;
    for (int den = 1; den <= box.denominator; ++den)
        for (int num = -box.bound * den; num <= box.bound * den; ++num) values.emplace_back(num, den);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    struct Cand {
        int changed;
        Rational dist;
        std::vector<Rational> key;
        Matrix T;
    };
    std::vector<Cand> cands;
    const Matrix I = Matrix::identity(2);
    for (const auto& a : values)
        for (const auto& b : values)
            for (const auto& c : values)
                for (const auto& d : values) {
                    Matrix T{{a, b}, {c, d}};
                    if (determinant(T).is_zero()) continue;
                    Matrix lhs = T * s.ldata.T, rhs = t.ldata.T * T;
                    if (lhs != rhs && lhs != tu * rhs) continue;
                    int changed = 0;
                    Rational dist(0);
                    for (int i = 0; i < 2; ++i)
                        for (int j = 0; j < 2; ++j) {
                            Rational e = T(i, j) - I(i, j);
                            changed += e.is_zero() ? 0 : 1;
                            dist += e < Rational(0) ? -e : e;
                        }
                    cands.push_back({changed, dist, {a, b, c, d}, T});
                }
    std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
        if (x.changed != y.changed) return x.changed < y.changed;
        if (x.dist != y.dist) return x.dist < y.dist;
        return x.key < y.key;
    });

    for (const auto& cand : cands) {
        CompatibleData m = identity_data(ctx.p);
        m.T = cand.T;
        auto M = build_L(m, ctx);
        CotensorProduct A = cotensor(M, *s.L);
        CotensorProduct B = cotensor(*t.L, M);
        for (int h : {0, u}) {
            ++res.candidates_tried;
            HuCandidate hc = build_hu(s, t, m, h, M, A, B);
            if (!hc.valid) continue;
            EquivalenceData data{m, h, hc.hu, Rational(1)};
            EquivalenceCheck chk = verify_equivalence(s, t, data);
            if (chk.ok()) {
                res.data = data;
                return res;
            }
        }
    }
    res.obstructions.push_back("box-exhausted");
    return res;
}

}  // namespace tenscross
