#include "frob/quotient.hpp"

#include <algorithm>

namespace frob {

std::vector<std::vector<int>> monomial_minimal_covers(const std::vector<Monomial>& gens, int nvars) {
    std::vector<std::vector<int>> covers;
    int n = nvars;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool covers_all = true;
        for (const Monomial& g : gens) {
            bool hit = false;
            for (int i = 0; i < n && !hit; ++i)
                if ((mask >> i & 1u) && g.e[static_cast<size_t>(i)] > 0) hit = true;
            if (!hit) { covers_all = false; break; }
        }
        if (!covers_all) continue;
        bool minimal = true;
        for (const auto& c : covers) {
            uint32_t cm = 0;
            for (int i : c) cm |= 1u << i;
            if ((cm & mask) == cm) { minimal = false; break; }
        }
        if (!minimal) continue;
        std::vector<int> vars;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1u) vars.push_back(i);
        covers.push_back(std::move(vars));
    }
    // masks are enumerated in increasing popcount-compatible order only loosely;
    // prune any cover that strictly contains another
    std::vector<std::vector<int>> out;
    for (const auto& a : covers) {
        bool minimal = true;
        for (const auto& b : covers) {
            if (&a == &b || b.size() >= a.size()) continue;
            if (std::includes(a.begin(), a.end(), b.begin(), b.end())) { minimal = false; break; }
        }
        if (minimal) out.push_back(a);
    }
    return out;
}

std::shared_ptr<const QuotientRing> QuotientRing::make(RingPtr ring, Ideal I, std::vector<Ideal> user_min_primes,
                                                       std::string name) {
    for (const Poly& g : I.gens()) {
        if (g.is_zero()) fail(Errc::InvalidArgument, "zero generator in defining ideal");
        if (!g.is_homogeneous()) fail(Errc::InvalidArgument, "defining ideal must be homogeneous: " + g.str());
    }

    // Krull dimension from the initial ideal
    std::vector<Monomial> lead;
    for (const Poly& g : I.groebner()) lead.push_back(g.lead().m);
    HilbertSeries hs = hilbert_numerator(*ring, lead, 1);
    int64_t dim = hs.dim();

    bool monomial = true;
    for (const Poly& g : I.gens())
        if (g.nterms() != 1) monomial = false;

    std::vector<MinimalPrime> primes;
    if (!user_min_primes.empty()) {
        for (Ideal& p : user_min_primes) {
            if (!p.contains(I)) fail(Errc::InvalidArgument, "declared minimal prime does not contain the defining ideal");
            std::vector<Monomial> plead;
            for (const Poly& g : p.groebner()) plead.push_back(g.lead().m);
            if (hilbert_numerator(*ring, plead, 1).dim() != dim)
                fail(Errc::InvalidArgument, "declared minimal prime is not equidimensional with the ring");
            primes.push_back(MinimalPrime{std::move(p), false});
        }
    } else if (monomial) {
        std::vector<Monomial> gens;
        for (const Poly& g : I.gens()) gens.push_back(g.lead().m);
        gens = minimalize_monomials(std::move(gens), ring->nvars());
        for (const auto& cover : monomial_minimal_covers(gens, ring->nvars())) {
            std::vector<Poly> pg;
            for (int v : cover) pg.push_back(Poly::variable(ring, v));
            primes.push_back(MinimalPrime{Ideal(ring, std::move(pg)), true});
        }
    } else {
        fail(Errc::InvalidArgument,
             "minimal primes must be declared for non-monomial defining ideals (ring " + name + ")");
    }

    // reduced <=> I = intersection of minimal primes
    Ideal inter = primes.front().prime;
    for (size_t k = 1; k < primes.size(); ++k) inter = ideal_intersect(inter, primes[k].prime);
    bool reduced = inter == I;

    return std::shared_ptr<const QuotientRing>(
        new QuotientRing(std::move(ring), std::move(I), std::move(primes), reduced, dim, std::move(name)));
}

std::vector<Monomial> QuotientRing::initial_ideal() const {
    std::vector<Monomial> lead;
    for (const Poly& g : I_.groebner()) lead.push_back(g.lead().m);
    return minimalize_monomials(std::move(lead), ring_->nvars());
}

HilbertSeries QuotientRing::hilbert_series() const { return hilbert_numerator(*ring_, initial_ideal(), 1); }

int64_t QuotientRing::hf(int64_t d) const { return count_standard_monomials(*ring_, initial_ideal(), 1, d); }

} // namespace frob
