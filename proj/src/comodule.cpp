#include "tenscross/comodule.hpp"

#include <algorithm>
#include <numeric>

namespace tenscross {

std::vector<std::vector<CoactionTerm>> coaction_terms(const Comodule& m) {
    std::vector<std::vector<CoactionTerm>> cols(m.dim);
    for (int r = 0; r < m.coaction.rows(); ++r)
        for (const auto& [j, c] : m.coaction.row(r)) cols[j].push_back({r / m.dim, r % m.dim, c});
    return cols;
}

std::vector<SparseMatrix> coaction_components(const Comodule& m) {
    const int n = m.host->dim;
    std::vector<SparseMatrix> out(n, SparseMatrix(m.dim, m.dim));
    for (int r = 0; r < m.coaction.rows(); ++r)
        for (const auto& [j, c] : m.coaction.row(r)) out[r / m.dim].push(r % m.dim, j, c);
    return out;
}

Comodule comodule_from_terms(const HopfPtr& host, const std::vector<std::vector<CoactionTerm>>& cols) {
    const int d = static_cast<int>(cols.size());
    std::vector<std::map<int, Rational>> rows(static_cast<std::size_t>(host->dim) * d);
    for (int j = 0; j < d; ++j)
        for (const auto& t : cols[j]) {
            if (t.c.is_zero()) continue;
            auto& slot = rows[static_cast<std::size_t>(t.h) * d + t.i][j];
            slot += t.c;
        }
    Comodule m{host, d, SparseMatrix(host->dim * d, d)};
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [j, c] : rows[r]) m.coaction.push(static_cast<int>(r), j, c);
    return m;
}

bool same_host(const HopfPtr& a, const HopfPtr& b) {
    return a == b || (a && b && a->dim == b->dim && a->name == b->name);
}

Comodule trivial_comodule(const HopfPtr& host) { return simple_comodule(host, 0); }

Comodule simple_comodule(const HopfPtr& host, int g) {
    if (g < 0 || g >= host->group.size()) throw std::invalid_argument("simple_comodule: not a group element");
    return comodule_from_terms(host, {{{host->group_basis[g], 0, Rational(1)}}});
}

Comodule projective_cover(const HopfPtr& host, int g) {
    const auto& h = *host;
    if (h.basis_group.empty() || h.generators.empty()) throw std::invalid_argument("projective_cover: needs a supergroup algebra");
    int u = h.generators.front().grading;
    int top = g;
    for (std::size_t i = 0; i < h.generators.size(); ++i) top = h.group.mul(top, u);
    std::vector<int> basis, pos(h.dim, -1);
    for (int a = 0; a < h.dim; ++a)
        if (h.basis_group[a] == top) {
            pos[a] = static_cast<int>(basis.size());
            basis.push_back(a);
        }
    std::vector<std::vector<CoactionTerm>> cols(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (const auto& [idx, c] : h.coproducts[basis[j]]) {
            int l = idx / h.dim, r = idx % h.dim;
            if (pos[r] < 0) throw std::logic_error("projective_cover: coproduct leaves the span");
            cols[j].push_back({l, pos[r], c});
        }
    return comodule_from_terms(host, cols);
}

Comodule tensor_comodules(const Comodule& x, const Comodule& y) {
    if (!same_host(x.host, y.host)) throw std::invalid_argument("tensor_comodules: different hosts");
    auto tx = coaction_terms(x), ty = coaction_terms(y);
    std::vector<std::vector<CoactionTerm>> cols(static_cast<std::size_t>(x.dim) * y.dim);
    for (int a = 0; a < x.dim; ++a)
        for (int b = 0; b < y.dim; ++b) {
            auto& col = cols[static_cast<std::size_t>(a) * y.dim + b];
            for (const auto& s : tx[a])
                for (const auto& t : ty[b])
                    for (const auto& [hk, c] : x.host->product(s.h, t.h)) col.push_back({hk, s.i * y.dim + t.i, s.c * t.c * c});
        }
    return comodule_from_terms(x.host, cols);
}

Comodule dual_comodule(const Comodule& x) {
    const auto& h = *x.host;
    std::vector<std::vector<CoactionTerm>> cols(x.dim);
    auto tx = coaction_terms(x);
    const Matrix sinv = invert(h.antipode);
    // lambda(e^a) = sum_i S^-1(c_ai) (x) e^i, where lambda(e_i) = sum_a c_ai (x) e_a;
    // this makes ev: X* (x) X -> k colinear.
    for (int i = 0; i < x.dim; ++i)
        for (const auto& t : tx[i])
            for (int r = 0; r < h.dim; ++r)
                if (!sinv(r, t.h).is_zero()) cols[t.i].push_back({r, i, t.c * sinv(r, t.h)});
    return comodule_from_terms(x.host, cols);
}

Comodule pushforward(const Comodule& x, const Matrix& k) {
    const int n = x.host->dim;
    if (k.rows() != n || k.cols() != n) throw DimensionMismatch("pushforward: map shape");
    auto tx = coaction_terms(x);
    std::vector<std::vector<CoactionTerm>> cols(x.dim);
    for (int j = 0; j < x.dim; ++j)
        for (const auto& t : tx[j])
            for (int r = 0; r < n; ++r)
                if (!k(r, t.h).is_zero()) cols[j].push_back({r, t.i, t.c * k(r, t.h)});
    return comodule_from_terms(x.host, cols);
}

bool is_comodule(const Comodule& x) {
    const auto& h = *x.host;
    const int n = h.dim, d = x.dim;
    auto tx = coaction_terms(x);
    for (int j = 0; j < d; ++j) {
        SparseAccumulator l, r, e;
        for (const auto& t : tx[j]) {
            for (const auto& [idx, c] : h.coproducts[t.h]) l.add(static_cast<std::int64_t>(idx) * d + t.i, t.c * c);
            for (const auto& s : tx[t.i])
                r.add((static_cast<std::int64_t>(t.h) * n + s.h) * d + s.i, t.c * s.c);
            e.add(t.i, t.c * h.counit[t.h]);
        }
        if (l.take() != r.take()) return false;
        if (e.take() != sv_unit(j)) return false;
    }
    return true;
}

bool is_comodule_map(const Matrix& f, const Comodule& x, const Comodule& y) {
    if (f.rows() != y.dim || f.cols() != x.dim) return false;
    auto tx = coaction_terms(x), ty = coaction_terms(y);
    for (int a = 0; a < x.dim; ++a) {
        SparseAccumulator l, r;
        for (int c = 0; c < y.dim; ++c) {
            if (f(c, a).is_zero()) continue;
            for (const auto& t : ty[c]) l.add(static_cast<std::int64_t>(t.h) * y.dim + t.i, f(c, a) * t.c);
        }
        for (const auto& t : tx[a])
            for (int b = 0; b < y.dim; ++b)
                if (!f(b, t.i).is_zero()) r.add(static_cast<std::int64_t>(t.h) * y.dim + b, t.c * f(b, t.i));
        if (l.take() != r.take()) return false;
    }
    return true;
}

std::vector<Matrix> comodule_hom_space(const Comodule& x, const Comodule& y) {
    if (!same_host(x.host, y.host)) throw std::invalid_argument("comodule_hom_space: different hosts");
    const int dx = x.dim, dy = y.dim;
    auto tx = coaction_terms(x), ty = coaction_terms(y);
    // unknown f[b][a] has index b * dx + a; equation (h, b, a)
    std::map<std::int64_t, SparseAccumulator> eqs;
    auto key = [&](int h, int b, int a) { return (static_cast<std::int64_t>(h) * dy + b) * dx + a; };
    for (int c = 0; c < dy; ++c)
        for (const auto& t : ty[c])
            for (int a = 0; a < dx; ++a) eqs[key(t.h, t.i, a)].add(c * dx + a, t.c);
    for (int a = 0; a < dx; ++a)
        for (const auto& t : tx[a])
            for (int b = 0; b < dy; ++b) eqs[key(t.h, b, a)].add(b * dx + t.i, -t.c);
    SparseEliminator el(dx * dy);
    for (auto& [k, acc] : eqs) el.add_row(acc.take());
    std::vector<Matrix> out;
    for (const auto& v : el.kernel()) {
        Matrix f(dy, dx);
        for (int b = 0; b < dy; ++b)
            for (int a = 0; a < dx; ++a) f(b, a) = v[static_cast<std::size_t>(b) * dx + a];
        out.push_back(f);
    }
    return out;
}

Comodule quotient_by_line(const Comodule& x, const Vec& v, int p) {
    const int d = x.dim;
    if (v[p].is_zero()) throw std::invalid_argument("quotient_by_line: pivot coordinate is zero");
    // q(e_i) = e_i for i != p, q(e_p) = -sum_{i != p} v_i / v_p e_i; then renumber
    std::vector<int> pos(d);
    for (int i = 0, k = 0; i < d; ++i) pos[i] = i == p ? -1 : k++;
    auto tx = coaction_terms(x);
    std::vector<std::vector<CoactionTerm>> cols(d - 1);
    for (int j = 0; j < d; ++j) {
        if (j == p) continue;
        for (const auto& t : tx[j]) {
            if (t.i != p) {
                cols[pos[j]].push_back({t.h, pos[t.i], t.c});
            } else {
                for (int i = 0; i < d; ++i)
                    if (i != p && !v[i].is_zero()) cols[pos[j]].push_back({t.h, pos[i], -t.c * v[i] / v[p]});
            }
        }
    }
    return comodule_from_terms(x.host, cols);
}

std::vector<int> composition_series(const Comodule& x0, std::mt19937_64* rng) {
    const auto& h = *x0.host;
    Comodule x = x0;
    std::vector<int> out;
    while (x.dim > 0) {
        std::vector<int> order(h.group.size());
        std::iota(order.begin(), order.end(), 0);
        if (rng) std::shuffle(order.begin(), order.end(), *rng);
        bool found = false;
        for (int g : order) {
            const int gb = h.group_basis[g];
            SparseEliminator el(x.dim);
            for (int r = 0; r < x.coaction.rows(); ++r) {
                SVec row(x.coaction.row(r).begin(), x.coaction.row(r).end());
                if (r / x.dim == gb) row = sv_sub(row, sv_unit(r % x.dim));
                if (!row.empty()) el.add_row(row);
            }
            auto ker = el.kernel();
            if (ker.empty()) continue;
            Vec v = ker.front();
            if (rng && ker.size() > 1) {
                std::uniform_int_distribution<int> coef(-3, 3);
                do {
                    v.assign(x.dim, Rational(0));
                    for (const auto& k : ker) v = vec_add(v, vec_scale(Rational(coef(*rng)), k));
                } while (vec_is_zero(v));
            }
            std::vector<int> nz;
            for (int i = 0; i < x.dim; ++i)
                if (!v[i].is_zero()) nz.push_back(i);
            int p = nz.front();
            if (rng) p = nz[std::uniform_int_distribution<std::size_t>(0, nz.size() - 1)(*rng)];
            out.push_back(g);
            x = quotient_by_line(x, v, p);
            found = true;
            break;
        }
        if (!found) throw std::logic_error("composition_series: no simple subcomodule found");
    }
    return out;
}

std::vector<int> grothendieck_vector(const Comodule& x) {
    std::vector<int> v(x.host->group.size(), 0);
    for (int g : composition_series(x)) ++v[g];
    return v;
}

std::vector<int> head(const Comodule& x) {
    std::vector<int> v(x.host->group.size(), 0);
    for (int g = 0; g < x.host->group.size(); ++g)
        v[g] = static_cast<int>(comodule_hom_space(x, simple_comodule(x.host, g)).size());
    return v;
}

Rational fp_dim_object(const Comodule& x) {
    Rational total = 0;
    const auto triv = trivial_comodule(x.host);
    for (int g : composition_series(x)) {
        auto prod = tensor_comodules(simple_comodule(x.host, g), simple_comodule(x.host, x.host->group.inv(g)));
        if (prod.coaction != triv.coaction) throw std::logic_error("fp_dim_object: simple comodule is not invertible");
        total += 1;
    }
    return total;
}

}  // namespace tenscross
