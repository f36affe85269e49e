#include "frob/matrix.hpp"

namespace frob {

PolyMatrix PolyMatrix::drop_rows_cols(const std::vector<bool>& drop_row, const std::vector<bool>& drop_col) const {
    std::vector<int> ri, ci;
    for (int i = 0; i < rows_; ++i)
        if (!drop_row[static_cast<size_t>(i)]) ri.push_back(i);
    for (int j = 0; j < cols_; ++j)
        if (!drop_col[static_cast<size_t>(j)]) ci.push_back(j);
    PolyMatrix r(ring_, static_cast<int>(ri.size()), static_cast<int>(ci.size()));
    for (size_t i = 0; i < ri.size(); ++i)
        for (size_t j = 0; j < ci.size(); ++j) r.at(static_cast<int>(i), static_cast<int>(j)) = at(ri[i], ci[j]);
    return r;
}

PolyMatrix PolyMatrix::select_cols(const std::vector<int>& idx) const {
    PolyMatrix r(ring_, rows_, static_cast<int>(idx.size()));
    for (int i = 0; i < rows_; ++i)
        for (size_t j = 0; j < idx.size(); ++j) r.at(i, static_cast<int>(j)) = at(i, idx[j]);
    return r;
}

PolyMatrix PolyMatrix::hcat(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix r(a.ring_, a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
}

PolyMatrix PolyMatrix::mul(const PolyMatrix& rhs) const {
    PolyMatrix r(ring_, rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                if (rhs.at(k, j).is_zero()) continue;
                r.at(i, j) = add(r.at(i, j), frob::mul(at(i, k), rhs.at(k, j)));
            }
        }
    return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t k = 0; k < a.a_.size(); ++k)
        if (!(a.a_[k] == b.a_[k])) return false;
    return true;
}

} // namespace frob
