#pragma once

#include <cstdint>
#include <vector>

#include "frob/matrix.hpp"
#include "frob/poly.hpp"

namespace frob {

struct ModTerm {
    int32_t comp = 0;
    Monomial m;
    uint64_t c = 0;
};

// Module monomial order on a graded free module.  `shifts` are the scaled
// generator degrees; degree of a term is shifts[comp] + scale*wdeg(m).
//
// Components below elim_rank form a dominant block: any term there beats any
// term in the tail block.  Within the front block: degree, then ring order,
// then lower component wins.  The tail block carries the Schreyer order
// induced by the matrix columns it tracks (degree, then image lead compare,
// then lower component).
struct ModOrder {
    const Ring* ring = nullptr;
    int64_t scale = 1;
    std::vector<int64_t> shifts;
    int elim_rank = 0; // 0 = single block

    struct SchreyerRef {
        bool zero = true; // zero column: ranks below every nonzero image
        int32_t comp = 0;
        Monomial m;
    };
    std::vector<SchreyerRef> schreyer; // indexed by comp - elim_rank; empty = plain order

    int64_t term_deg(const ModTerm& t) const {
        return shifts[static_cast<size_t>(t.comp)] + scale * ring->wdeg(t.m);
    }

    // 1 if a > b
    int cmp(const ModTerm& a, const ModTerm& b) const;
};

// Element of a free module: terms strictly descending in the given order.
class ModElem {
public:
    std::vector<ModTerm> t;

    bool is_zero() const { return t.empty(); }
    const ModTerm& lead() const { return t.front(); }

    static ModElem normalize(std::vector<ModTerm> terms, const ModOrder& ord, const Fp& F);
};

ModElem mod_add(const ModElem& a, const ModElem& b, const ModOrder& ord, const Fp& F);
// a - c * x^m * b
ModElem mod_sub_mul(const ModElem& a, const ModElem& b, const Monomial& m, uint64_t c, const ModOrder& ord,
                    const Fp& F);
ModElem mod_scale(const ModElem& a, uint64_t c, const Fp& F);
ModElem mod_mul_poly(const ModElem& a, const Poly& f, const ModOrder& ord, const Fp& F);

// columns of a matrix as module elements and back
ModElem column_to_elem(const PolyMatrix& A, int j, const ModOrder& ord, const Fp& F);
void elem_to_column(const ModElem& e, PolyMatrix& A, int j, int comp_offset = 0);

} // namespace frob
