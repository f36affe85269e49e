#pragma once

#include <vector>

#include "frob/modelem.hpp"

namespace frob {

// Buchberger with Gebauer-Moller pair elimination.  Deterministic: pairs are
// processed by (degree, i, j); the returned basis is reduced (autoreduced,
// monic, sorted by descending lead).
std::vector<ModElem> buchberger(std::vector<ModElem> input, const ModOrder& ord, const Fp& F);

// Full normal form against a (not necessarily Groebner) list of reducers;
// reducers tried in list order, leading term first.
ModElem mod_normal_form(ModElem f, const std::vector<ModElem>& basis, const ModOrder& ord, const Fp& F);

// Reduced Groebner basis of an ideal (rank-1 module).
std::vector<Poly> ideal_groebner(const std::vector<Poly>& gens);
Poly poly_normal_form(const Poly& f, const std::vector<Poly>& basis);

// Syzygies over the ambient polynomial ring of the columns of B, where B maps
// a graded free module with column degrees `col_degs` to one with generator
// degrees `target_degs` (all scaled by `scale`).  Columns of the result
// generate ker(B); homogeneous columns in, homogeneous columns out.
PolyMatrix syzygy_matrix(const PolyMatrix& B, const std::vector<int64_t>& target_degs,
                         const std::vector<int64_t>& col_degs, int64_t scale);

// Groebner basis of the submodule of a graded free module spanned by the
// columns of B (plain degree-TOP order).  Returns basis elements.
std::vector<ModElem> module_groebner(const PolyMatrix& B, const std::vector<int64_t>& target_degs,
                                     int64_t scale, ModOrder* order_out = nullptr);

// degree of a homogeneous matrix column given row degrees; 0 for zero columns
int64_t column_degree(const PolyMatrix& B, int j, const std::vector<int64_t>& target_degs, int64_t scale);

} // namespace frob
