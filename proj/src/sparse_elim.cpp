#include "tenscross/sparse_vec.hpp"

namespace tenscross {

bool SparseEliminator::add_row(SVec row) {
    while (!row.empty()) {
        auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) {
            Rational lead = row.front().second;
            pivots_.emplace(row.front().first, sv_scale(lead.inverse(), row));
            return true;
        }
        row = sv_sub(row, sv_scale(row.front().second, it->second));
    }
    return false;
}

std::vector<Vec> SparseEliminator::kernel() const {
    std::vector<Vec> out;
    for (int f = 0; f < ncols_; ++f) {
        if (pivots_.count(f)) continue;
        Vec x(ncols_);
        x[f] = 1;
        for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
            Rational s = 0;
            for (std::size_t k = 1; k < it->second.size(); ++k) s += it->second[k].second * x[it->second[k].first];
            x[it->first] = -s;
        }
        out.push_back(std::move(x));
    }
    return out;
}

Subspace SparseEliminator::kernel_subspace() const {
    auto ker = kernel();
    Subspace s;
    s.basis = Matrix(ncols_, static_cast<int>(ker.size()));
    for (int j = 0; j < static_cast<int>(ker.size()); ++j) s.basis.set_col(j, ker[j]);
    for (int f = 0; f < ncols_; ++f)
        if (!pivots_.count(f)) s.pivots.push_back(f);
    return s;
}

}  // namespace tenscross
