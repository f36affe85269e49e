#include "frob/modelem.hpp"

#include <algorithm>

namespace frob {

int ModOrder::cmp(const ModTerm& a, const ModTerm& b) const {
    bool fa = a.comp < elim_rank, fb = b.comp < elim_rank;
    if (fa != fb) return fa ? 1 : -1;
    int64_t da = term_deg(a), db = term_deg(b);
    if (da != db) return da > db ? 1 : -1;
    if (!fa && !schreyer.empty()) {
        const SchreyerRef& ra = schreyer[static_cast<size_t>(a.comp - elim_rank)];
        const SchreyerRef& rb = schreyer[static_cast<size_t>(b.comp - elim_rank)];
        if (ra.zero != rb.zero) return rb.zero ? 1 : -1;
        if (!ra.zero) {
            Monomial ma = mono_mul(a.m, ra.m, ring->nvars());
            Monomial mb = mono_mul(b.m, rb.m, ring->nvars());
            int c = ring->cmp(ma, mb);
            if (c != 0) return c;
            if (ra.comp != rb.comp) return ra.comp < rb.comp ? 1 : -1;
        }
    }
    int c = ring->cmp(a.m, b.m);
    if (c != 0) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
}

ModElem ModElem::normalize(std::vector<ModTerm> terms, const ModOrder& ord, const Fp& F) {
    std::sort(terms.begin(), terms.end(), [&](const ModTerm& a, const ModTerm& b) { return ord.cmp(a, b) > 0; });
    ModElem r;
    for (ModTerm& t : terms) {
        uint64_t c = t.c % F.p;
        if (c == 0) continue;
        if (!r.t.empty() && r.t.back().comp == t.comp && r.t.back().m == t.m) {
            r.t.back().c = F.add(r.t.back().c, c);
            if (r.t.back().c == 0) r.t.pop_back();
        } else {
            r.t.push_back(ModTerm{t.comp, t.m, c});
        }
    }
    return r;
}

ModElem mod_add(const ModElem& a, const ModElem& b, const ModOrder& ord, const Fp& F) {
    ModElem r;
    r.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        int c = ord.cmp(a.t[i], b.t[j]);
        if (c > 0) {
            r.t.push_back(a.t[i++]);
        } else if (c < 0) {
            r.t.push_back(b.t[j++]);
        } else {
            uint64_t s = F.add(a.t[i].c, b.t[j].c);
            if (s != 0) r.t.push_back(ModTerm{a.t[i].comp, a.t[i].m, s});
            ++i;
            ++j;
        }
    }
    while (i < a.t.size()) r.t.push_back(a.t[i++]);
    while (j < b.t.size()) r.t.push_back(b.t[j++]);
    return r;
}

ModElem mod_sub_mul(const ModElem& a, const ModElem& b, const Monomial& m, uint64_t c, const ModOrder& ord,
                    const Fp& F) {
    int nv = ord.ring->nvars();
    uint64_t nc = F.neg(c % F.p);
    ModElem shifted;
    shifted.t.reserve(b.t.size());
    for (const ModTerm& t : b.t) shifted.t.push_back(ModTerm{t.comp, mono_mul(t.m, m, nv), F.mul(t.c, nc)});
    return mod_add(a, shifted, ord, F);
}

ModElem mod_scale(const ModElem& a, uint64_t c, const Fp& F) {
    c %= F.p;
    ModElem r;
    if (c == 0) return r;
    r.t.reserve(a.t.size());
    for (const ModTerm& t : a.t) r.t.push_back(ModTerm{t.comp, t.m, F.mul(t.c, c)});
    return r;
}

ModElem mod_mul_poly(const ModElem& a, const Poly& f, const ModOrder& ord, const Fp& F) {
    ModElem acc;
    for (const Term& t : f.terms()) {
        ModElem part;
        part.t.reserve(a.t.size());
        int nv = ord.ring->nvars();
        for (const ModTerm& at : a.t) part.t.push_back(ModTerm{at.comp, mono_mul(at.m, t.m, nv), F.mul(at.c, t.c)});
        part = ModElem::normalize(std::move(part.t), ord, F);
        acc = mod_add(acc, part, ord, F);
    }
    return acc;
}

ModElem column_to_elem(const PolyMatrix& A, int j, const ModOrder& ord, const Fp& F) {
    std::vector<ModTerm> terms;
    for (int i = 0; i < A.rows(); ++i)
        for (const Term& t : A.at(i, j).terms()) terms.push_back(ModTerm{i, t.m, t.c});
    return ModElem::normalize(std::move(terms), ord, F);
}

void elem_to_column(const ModElem& e, PolyMatrix& A, int j, int comp_offset) {
    std::vector<std::vector<Term>> rows(static_cast<size_t>(A.rows()));
    for (const ModTerm& t : e.t) {
        int r = t.comp - comp_offset;
        if (r < 0 || r >= A.rows()) continue;
        rows[static_cast<size_t>(r)].push_back(Term{t.m, t.c});
    }
    for (int i = 0; i < A.rows(); ++i) A.at(i, j) = Poly::from_terms(A.ring(), std::move(rows[static_cast<size_t>(i)]));
}

} // namespace frob
