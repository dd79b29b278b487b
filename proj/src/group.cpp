#include "tenscross/group.hpp"

#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>

namespace tenscross {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders)) {
    size_ = 1;
    for (int n : orders_) {
        if (n < 1) throw std::invalid_argument("cyclic order must be positive");
        size_ *= n;
    }
}

FiniteAbelianGroup FiniteAbelianGroup::product(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    std::vector<int> o = a.orders_;
    o.insert(o.end(), b.orders_.begin(), b.orders_.end());
    return FiniteAbelianGroup(o);
}

std::vector<int> FiniteAbelianGroup::exponents(int g) const {
    std::vector<int> e(orders_.size());
    for (int i = static_cast<int>(orders_.size()) - 1; i >= 0; --i) {
        e[i] = g % orders_[i];
        g /= orders_[i];
    }
    return e;
}

int FiniteAbelianGroup::index(const std::vector<int>& exps) const {
    if (exps.size() != orders_.size()) throw std::invalid_argument("exponent tuple length");
    int g = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        int e = ((exps[i] % orders_[i]) + orders_[i]) % orders_[i];
        g = g * orders_[i] + e;
    }
    return g;
}

int FiniteAbelianGroup::mul(int g, int h) const {
    auto a = exponents(g), b = exponents(h);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return index(a);
}

int FiniteAbelianGroup::inv(int g) const {
    auto a = exponents(g);
    for (auto& x : a) x = -x;
    return index(a);
}

int FiniteAbelianGroup::pow(int g, int k) const {
    auto a = exponents(g);
    for (auto& x : a) x *= k;
    return index(a);
}

int FiniteAbelianGroup::order_of(int g) const {
    int k = 1, x = g;
    while (x != 0) {
        x = mul(x, g);
        ++k;
    }
    return k;
}

std::string FiniteAbelianGroup::label(int g) const {
    if (orders_ == std::vector<int>{2}) return g == 0 ? "1" : "u";
    auto e = exponents(g);
    std::ostringstream os;
    os << "g(";
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << ")";
    return os.str();
}

int FiniteAbelianGroup::parse_label(const std::string& s) const {
    for (int g = 0; g < size_; ++g)
        if (label(g) == s) return g;
    throw std::invalid_argument("unknown group element '" + s + "'");
}

GroupTwoCocycle::GroupTwoCocycle(FiniteAbelianGroup g, std::vector<Rational> values)
    : group_(std::move(g)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != group_.size() * group_.size())
        throw std::invalid_argument("cocycle table must have |G|^2 entries");
    for (const auto& v : values_)
        if (v.is_zero()) throw std::invalid_argument("cocycle values must be nonzero");
}

GroupTwoCocycle GroupTwoCocycle::trivial(const FiniteAbelianGroup& g) {
    return GroupTwoCocycle(g, std::vector<Rational>(static_cast<std::size_t>(g.size()) * g.size(), Rational(1)));
}

GroupTwoCocycle GroupTwoCocycle::bicharacter(const FiniteAbelianGroup& g, const Matrix& q) {
    const int r = static_cast<int>(g.orders().size());
    if (q.rows() != r || q.cols() != r) throw std::invalid_argument("bicharacter matrix shape");
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (q(i, j) != Rational(1) && q(i, j) != Rational(-1))
                throw std::invalid_argument("bicharacter entries must be +-1 over the rationals");
    std::vector<Rational> vals(static_cast<std::size_t>(g.size()) * g.size());
    for (int x = 0; x < g.size(); ++x)
        for (int y = 0; y < g.size(); ++y) {
            auto ex = g.exponents(x), ey = g.exponents(y);
            Rational v = 1;
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    if (q(i, j) == Rational(-1) && (ex[i] * ey[j]) % 2 != 0) v = -v;
            vals[static_cast<std::size_t>(x) * g.size() + y] = v;
        }
    return GroupTwoCocycle(g, vals);
}

GroupTwoCocycle GroupTwoCocycle::operator*(const GroupTwoCocycle& o) const {
    if (group_ != o.group_) throw std::invalid_argument("cocycle product over different groups");
    std::vector<Rational> v(values_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] * o.values_[i];
    return GroupTwoCocycle(group_, v);
}

GroupTwoCocycle GroupTwoCocycle::inverse() const {
    std::vector<Rational> v(values_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i].inverse();
    return GroupTwoCocycle(group_, v);
}

bool GroupTwoCocycle::is_trivial() const {
    for (const auto& v : values_)
        if (!v.is_one()) return false;
    return true;
}

bool is_2cocycle(const GroupTwoCocycle& psi) {
    const auto& G = psi.group();
    for (int g = 0; g < G.size(); ++g)
        for (int h = 0; h < G.size(); ++h)
            for (int k = 0; k < G.size(); ++k)
                if (psi(g, h) * psi(G.mul(g, h), k) != psi(h, k) * psi(g, G.mul(h, k))) return false;
    return true;
}

bool is_normalized(const GroupTwoCocycle& psi) {
    const auto& G = psi.group();
    for (int g = 0; g < G.size(); ++g) {
        if (!psi(g, 0).is_one() || !psi(0, g).is_one()) return false;
        if (!psi(g, G.inv(g)).is_one()) return false;
        for (int h = 0; h < G.size(); ++h)
            if (psi(g, h).inverse() != psi(G.inv(h), G.inv(g))) return false;
    }
    return true;
}

GroupTwoCocycle apply_coboundary(const GroupTwoCocycle& psi, const std::vector<Rational>& b) {
    const auto& G = psi.group();
    std::vector<Rational> v(static_cast<std::size_t>(G.size()) * G.size());
    for (int g = 0; g < G.size(); ++g)
        for (int h = 0; h < G.size(); ++h)
            v[static_cast<std::size_t>(g) * G.size() + h] = psi(g, h) * b[g] * b[h] / b[G.mul(g, h)];
    return GroupTwoCocycle(G, v);
}

namespace {

std::optional<std::int64_t> isqrt_exact(std::int64_t n) {
    if (n < 0) return std::nullopt;
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<long double>(n))));
    for (std::int64_t c = std::max<std::int64_t>(0, r - 2); c <= r + 2; ++c)
        if (c * c == n) return c;
    return std::nullopt;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x < Rational(0)) return std::nullopt;
    auto n = isqrt_exact(x.num()), d = isqrt_exact(x.den());
    if (!n || !d) return std::nullopt;
    return Rational(*n, *d);
}

}  // namespace

/*
 * b(1) fixes psi'(g,1) = psi'(1,g) = 1. For each pair {g, g^-1} with g != g^-1
 * we set b(g) = 1 on the smaller index and solve psi'(g,g^-1) = 1 for the other;
 * for involutions b(g)^2 is forced, which may leave the rationals. The last
 * identity psi'(g,h)^-1 = psi'(h^-1,g^-1) then follows from the cocycle law.
 */
NormalizedCocycle normalize_2cocycle(const GroupTwoCocycle& psi) {
    if (!is_2cocycle(psi)) throw std::invalid_argument("normalize_2cocycle: input is not a 2-cocycle");
    const auto& G = psi.group();
    std::vector<Rational> b(G.size(), Rational(1));
    b[0] = psi(0, 0).inverse();
    for (int g = 1; g < G.size(); ++g) {
        int gi = G.inv(g);
        if (gi < g) continue;
        if (gi == g) {
            auto r = rational_sqrt(b[0] / psi(g, g));
            if (!r)
                throw NeedsFieldExtension("normalizing at " + G.label(g) + " needs b^2 = " + (b[0] / psi(g, g)).str() +
                                          ", which has no rational root");
            b[g] = *r;
        } else {
            b[g] = 1;
            b[gi] = b[0] / psi(g, gi);
        }
    }
    NormalizedCocycle out{apply_coboundary(psi, b), b};
    if (!is_normalized(out.psi)) throw std::logic_error("normalize_2cocycle: result not normalized");
    return out;
}

bool is_trivial_class_c2(const GroupTwoCocycle& psi) {
    if (psi.group().orders() != std::vector<int>{2}) throw std::invalid_argument("is_trivial_class_c2: group is not C2");
    // H^2(C2, k^x) = 0 for k algebraically closed, so every cocycle is a coboundary there.
    return is_2cocycle(psi);
}

}  // namespace tenscross
