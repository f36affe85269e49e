#include "frob/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace frob {

namespace {

struct Pair {
    int64_t deg;
    int i, j; // i < j
    Monomial lcm;
};

struct PairLess {
    bool operator()(const Pair& a, const Pair& b) const {
        return std::tie(a.deg, a.i, a.j) < std::tie(b.deg, b.i, b.j);
    }
};

int find_reducer(const std::vector<ModElem>& basis, const ModTerm& t, int nvars, int skip = -1) {
    for (size_t k = 0; k < basis.size(); ++k) {
        if (static_cast<int>(k) == skip || basis[k].is_zero()) continue;
        const ModTerm& l = basis[k].lead();
        if (l.comp == t.comp && mono_divides(l.m, t.m, nvars)) return static_cast<int>(k);
    }
    return -1;
}

} // namespace

ModElem mod_normal_form(ModElem f, const std::vector<ModElem>& basis, const ModOrder& ord, const Fp& F) {
    int nv = ord.ring->nvars();
    ModElem rem;
    while (!f.is_zero()) {
        const ModTerm t = f.lead();
        int k = find_reducer(basis, t, nv);
        if (k < 0) {
            rem.t.push_back(t);
            f.t.erase(f.t.begin());
            continue;
        }
        const ModElem& g = basis[static_cast<size_t>(k)];
        uint64_t c = F.mul(t.c, F.inv(g.lead().c));
        f = mod_sub_mul(f, g, mono_div(t.m, g.lead().m, nv), c, ord, F);
    }
    return rem;
}

std::vector<ModElem> buchberger(std::vector<ModElem> input, const ModOrder& ord, const Fp& F) {
    const int nv = ord.ring->nvars();
    const bool rank1 = ord.shifts.size() == 1; // product criterion is only valid for ideals
    std::vector<ModElem> basis;
    std::set<Pair, PairLess> queue;

    auto pair_deg = [&](int comp, const Monomial& l) {
        return ord.shifts[static_cast<size_t>(comp)] + ord.scale * ord.ring->wdeg(l);
    };

    // Gebauer-Moller update: filter new pairs against each other, prune old ones.
    auto add_elem = [&](ModElem e) {
        e = mod_scale(e, F.inv(e.lead().c), F);
        const int t = static_cast<int>(basis.size());
        const ModTerm& lt = e.lead();

        std::vector<Pair> cand;
        for (int i = 0; i < t; ++i) {
            if (basis[static_cast<size_t>(i)].is_zero()) continue;
            const ModTerm& li = basis[static_cast<size_t>(i)].lead();
            if (li.comp != lt.comp) continue;
            Monomial l = mono_lcm(li.m, lt.m, nv);
            cand.push_back(Pair{pair_deg(lt.comp, l), i, t, l});
        }
        std::vector<Pair> kept;
        std::vector<bool> coprime(cand.size(), false);
        for (size_t a = 0; a < cand.size(); ++a)
            coprime[a] = rank1 && mono_coprime(basis[static_cast<size_t>(cand[a].i)].lead().m, lt.m, nv);
        for (size_t a = 0; a < cand.size(); ++a) {
            bool dominated = false;
            if (!coprime[a]) {
                for (size_t b = a + 1; b < cand.size() && !dominated; ++b)
                    if (mono_divides(cand[b].lcm, cand[a].lcm, nv)) dominated = true;
                for (const Pair& kp : kept)
                    if (mono_divides(kp.lcm, cand[a].lcm, nv)) { dominated = true; break; }
            }
            if (!dominated) kept.push_back(cand[a]);
        }
        for (auto it = queue.begin(); it != queue.end();) {
            const Pair& pr = *it;
            const Monomial& li = basis[static_cast<size_t>(pr.i)].lead().m;
            const Monomial& lj = basis[static_cast<size_t>(pr.j)].lead().m;
            bool drop = basis[static_cast<size_t>(pr.i)].lead().comp == lt.comp &&
                        mono_divides(lt.m, pr.lcm, nv) &&
                        !(mono_lcm(li, lt.m, nv) == pr.lcm) && !(mono_lcm(lj, lt.m, nv) == pr.lcm);
            it = drop ? queue.erase(it) : std::next(it);
        }
        for (size_t a = 0; a < kept.size(); ++a) {
            bool cp = rank1 && mono_coprime(basis[static_cast<size_t>(kept[a].i)].lead().m, lt.m, nv);
            if (!cp) queue.insert(kept[a]);
        }
        basis.push_back(std::move(e));
    };

    for (ModElem& e : input) {
        if (e.is_zero()) continue;
        ModElem r = mod_normal_form(std::move(e), basis, ord, F);
        if (!r.is_zero()) add_elem(std::move(r));
    }

    while (!queue.empty()) {
        Pair pr = *queue.begin();
        queue.erase(queue.begin());
        const ModElem& fi = basis[static_cast<size_t>(pr.i)];
        const ModElem& fj = basis[static_cast<size_t>(pr.j)];
        // both monic
        ModElem s = mod_sub_mul(ModElem{}, fi, mono_div(pr.lcm, fi.lead().m, nv), F.neg(1), ord, F);
        s = mod_sub_mul(s, fj, mono_div(pr.lcm, fj.lead().m, nv), 1, ord, F);
        s = mod_normal_form(std::move(s), basis, ord, F);
        if (!s.is_zero()) add_elem(std::move(s));
    }

    // minimal leads, then reduce tails to the unique reduced basis
    std::vector<char> keep(basis.size(), 1);
    for (size_t a = 0; a < basis.size(); ++a) {
        for (size_t b = 0; b < basis.size() && keep[a]; ++b) {
            if (a == b || !keep[b]) continue;
            const ModTerm& la = basis[a].lead();
            const ModTerm& lb = basis[b].lead();
            if (la.comp == lb.comp && mono_divides(lb.m, la.m, nv)) {
                if (la.m == lb.m && a < b) continue; // equal leads cannot occur; guard keeps earlier
                keep[a] = 0;
            }
        }
    }
    std::vector<ModElem> out;
    for (size_t a = 0; a < basis.size(); ++a)
        if (keep[a]) out.push_back(std::move(basis[a]));
    // tails: leads are pairwise irreducible, so one full pass per element suffices
    // provided reducers are used lead-first; iterate to a fixpoint to be safe
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t a = 0; a < out.size(); ++a) {
            ModElem f = out[a];
            ModElem rem;
            while (!f.is_zero()) {
                const ModTerm t = f.lead();
                int k = find_reducer(out, t, nv, static_cast<int>(a));
                if (k < 0) {
                    rem.t.push_back(t);
                    f.t.erase(f.t.begin());
                    continue;
                }
                const ModElem& g = out[static_cast<size_t>(k)];
                uint64_t c = F.mul(t.c, F.inv(g.lead().c));
                f = mod_sub_mul(f, g, mono_div(t.m, g.lead().m, nv), c, ord, F);
                changed = true;
            }
            out[a] = std::move(rem);
        }
        out.erase(std::remove_if(out.begin(), out.end(), [](const ModElem& e) { return e.is_zero(); }), out.end());
    }
    for (ModElem& e : out) e = mod_scale(e, F.inv(e.lead().c), F);
    std::sort(out.begin(), out.end(), [&](const ModElem& a, const ModElem& b) { return ord.cmp(a.lead(), b.lead()) > 0; });
    return out;
}

std::vector<Poly> ideal_groebner(const std::vector<Poly>& gens) {
    RingPtr ring;
    for (const Poly& g : gens)
        if (g.ring()) { ring = g.ring(); break; }
    if (!ring) return {};
    ModOrder ord;
    ord.ring = ring.get();
    ord.scale = 1;
    ord.shifts = {0};
    const Fp& F = ring->field();
    std::vector<ModElem> in;
    for (const Poly& g : gens) {
        if (g.is_zero()) continue;
        std::vector<ModTerm> ts;
        for (const Term& t : g.terms()) ts.push_back(ModTerm{0, t.m, t.c});
        in.push_back(ModElem::normalize(std::move(ts), ord, F));
    }
    std::vector<ModElem> gb = buchberger(std::move(in), ord, F);
    std::vector<Poly> out;
    out.reserve(gb.size());
    for (const ModElem& e : gb) {
        std::vector<Term> ts;
        for (const ModTerm& t : e.t) ts.push_back(Term{t.m, t.c});
        out.push_back(Poly::from_terms(ring, std::move(ts)));
    }
    return out;
}

Poly poly_normal_form(const Poly& f, const std::vector<Poly>& basis) {
    if (f.is_zero() || basis.empty()) return f;
    RingPtr ring = f.ring();
    ModOrder ord;
    ord.ring = ring.get();
    ord.scale = 1;
    ord.shifts = {0};
    const Fp& F = ring->field();
    auto to_elem = [&](const Poly& g) {
        std::vector<ModTerm> ts;
        for (const Term& t : g.terms()) ts.push_back(ModTerm{0, t.m, t.c});
        return ModElem::normalize(std::move(ts), ord, F);
    };
    std::vector<ModElem> b;
    for (const Poly& g : basis)
        if (!g.is_zero()) b.push_back(to_elem(g));
    ModElem r = mod_normal_form(to_elem(f), b, ord, F);
    std::vector<Term> ts;
    for (const ModTerm& t : r.t) ts.push_back(Term{t.m, t.c});
    return Poly::from_terms(ring, std::move(ts));
}

int64_t column_degree(const PolyMatrix& B, int j, const std::vector<int64_t>& target_degs, int64_t scale) {
    for (int i = 0; i < B.rows(); ++i) {
        const Poly& f = B.at(i, j);
        if (!f.is_zero()) return target_degs[static_cast<size_t>(i)] + scale * f.degree();
    }
    return 0;
}

PolyMatrix syzygy_matrix(const PolyMatrix& B, const std::vector<int64_t>& target_degs,
                         const std::vector<int64_t>& col_degs, int64_t scale) {
    RingPtr ring = B.ring();
    const Fp& F = ring->field();
    const int r = B.rows();
    const int c = B.cols();

    ModOrder ord;
    ord.ring = ring.get();
    ord.scale = scale;
    ord.shifts = target_degs;
    ord.shifts.insert(ord.shifts.end(), col_degs.begin(), col_degs.end());
    ord.elim_rank = r;
    ord.schreyer.resize(static_cast<size_t>(c));

    // front-block order, for locating column leads
    ModOrder front;
    front.ring = ring.get();
    front.scale = scale;
    front.shifts = target_degs;

    std::vector<ModElem> in;
    in.reserve(static_cast<size_t>(c));
    for (int j = 0; j < c; ++j) {
        ModElem col = column_to_elem(B, j, front, F);
        auto& ref = ord.schreyer[static_cast<size_t>(j)];
        if (col.is_zero()) {
            ref.zero = true;
        } else {
            ref.zero = false;
            ref.comp = col.lead().comp;
            ref.m = col.lead().m;
        }
        std::vector<ModTerm> ts = col.t;
        ts.push_back(ModTerm{r + j, Monomial::one(), 1});
        in.push_back(ModElem::normalize(std::move(ts), ord, F));
    }

    std::vector<ModElem> gb = buchberger(std::move(in), ord, F);
    std::vector<const ModElem*> syz;
    for (const ModElem& e : gb)
        if (e.lead().comp >= r) syz.push_back(&e); // all terms in the tail block
    PolyMatrix out(ring, c, static_cast<int>(syz.size()));
    for (size_t k = 0; k < syz.size(); ++k) elem_to_column(*syz[k], out, static_cast<int>(k), r);
    return out;
}

std::vector<ModElem> module_groebner(const PolyMatrix& B, const std::vector<int64_t>& target_degs, int64_t scale,
                                     ModOrder* order_out) {
    RingPtr ring = B.ring();
    const Fp& F = ring->field();
    ModOrder ord;
    ord.ring = ring.get();
    ord.scale = scale;
    ord.shifts = target_degs;
    std::vector<ModElem> in;
    for (int j = 0; j < B.cols(); ++j) {
        ModElem col = column_to_elem(B, j, ord, F);
        if (!col.is_zero()) in.push_back(std::move(col));
    }
    if (order_out) *order_out = ord;
    return buchberger(std::move(in), ord, F);
}

} // namespace frob
