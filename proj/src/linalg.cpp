#include "affwhit/linalg.hpp"

#include <iterator>

namespace affwhit::linalg {

namespace {

// row -= factor * pivot, for entries of pivot (all columns >= its lead).
void axpy(SparseRow& row, const Scalar& factor, const SparseRow& pivot) {
    auto hint = row.begin();
    for (const auto& [col, val] : pivot) {
        hint = row.lower_bound(col);
        if (hint != row.end() && hint->first == col) {
            hint->second -= factor * val;
            if (hint->second == 0) hint = row.erase(hint);
        } else {
            hint = row.emplace_hint(hint, col, -factor * val);
        }
    }
}

} // namespace

bool Echelon::insert(SparseRow row) {
    for (auto it = row.begin(); it != row.end();) {
        if (it->second == 0) {
            it = row.erase(it);
            continue;
        }
        auto piv = pivots_.find(it->first);
        if (piv == pivots_.end()) {
            ++it;
            continue;
        }
        std::size_t col = it->first;
        Scalar factor = it->second;
        axpy(row, factor, piv->second);
        it = row.upper_bound(col);
    }
    if (row.empty()) return false;
    Scalar lead = row.begin()->second;
    for (auto& [col, val] : row) val /= lead;
    pivots_.emplace(row.begin()->first, std::move(row));
    return true;
}

std::vector<SparseRow> Echelon::nullspace() const {
    // Back-substitute into reduced row echelon form, highest pivot first.
    std::map<std::size_t, SparseRow> rref = pivots_;
    for (auto it = rref.rbegin(); it != rref.rend(); ++it) {
        SparseRow& row = it->second;
        for (auto e = std::next(row.begin()); e != row.end();) {
            auto other = rref.find(e->first);
            if (other == rref.end() || other->first == it->first) {
                ++e;
                continue;
            }
            std::size_t col = e->first;
            Scalar factor = e->second;
            axpy(row, factor, other->second);
            e = row.upper_bound(col);
        }
    }

    std::vector<SparseRow> basis;
    for (std::size_t free = 0; free < columns_; ++free) {
        if (rref.count(free)) continue;
        SparseRow v;
        v.emplace(free, Scalar(1));
        for (const auto& [pc, row] : rref) {
            auto e = row.find(free);
            if (e != row.end()) v.emplace(pc, -e->second);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const std::vector<std::vector<Scalar>>& rows) {
    std::size_t cols = 0;
    for (const auto& r : rows) cols = std::max(cols, r.size());
    Echelon ech(cols);
    for (const auto& r : rows) {
        SparseRow s;
        for (std::size_t c = 0; c < r.size(); ++c)
            if (r[c] != 0) s.emplace(c, r[c]);
        ech.insert(std::move(s));
    }
    return ech.rank();
}

} // namespace affwhit::linalg
