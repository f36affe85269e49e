#pragma once

#include <functional>
#include <vector>

#include "frob/poly.hpp"

namespace frob {

// Dense matrix of sparse polynomials, row-major.  Rows index target
// generators, columns index source generators (relations, kernel elements).
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(RingPtr ring, int rows, int cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), Poly(ring_)) {}

    const RingPtr& ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Poly& at(int i, int j) { return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)]; }
    const Poly& at(int i, int j) const {
        return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
    }

    PolyMatrix transpose() const {
        PolyMatrix r(ring_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool col_is_zero(int j) const {
        for (int i = 0; i < rows_; ++i)
            if (!at(i, j).is_zero()) return false;
        return true;
    }
    bool row_is_zero(int i) const {
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) return false;
        return true;
    }
    bool is_zero() const {
        for (const Poly& f : a_)
            if (!f.is_zero()) return false;
        return true;
    }

    PolyMatrix map(const std::function<Poly(const Poly&)>& fn) const {
        PolyMatrix r(ring_, rows_, cols_);
        for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = fn(a_[k]);
        return r;
    }

    PolyMatrix drop_rows_cols(const std::vector<bool>& drop_row, const std::vector<bool>& drop_col) const;
    PolyMatrix select_cols(const std::vector<int>& idx) const;
    // horizontal concatenation; rows must agree
    static PolyMatrix hcat(const PolyMatrix& a, const PolyMatrix& b);

    PolyMatrix mul(const PolyMatrix& rhs) const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

private:
    RingPtr ring_;
    int rows_ = 0, cols_ = 0;
    std::vector<Poly> a_;
};

} // namespace frob
