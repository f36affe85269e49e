#include "frob/hilbert.hpp"

#include <algorithm>
#include <functional>

#include "frob/error.hpp"

namespace frob {

int HilbertSeries::pole_cancellation() const {
    if (num.empty()) return 0;
    // repeatedly divide by (1 - u); N(u) = (1-u)Q(u) iff sum of coefficients is 0
    std::map<int64_t, int64_t> cur = num;
    int order = 0;
    while (true) {
        int64_t total = 0;
        for (const auto& [e, c] : cur) total += c;
        if (total != 0) return order;
        // synthetic division by (1 - u): Q(e) = -sum_{e' <= e} N(e') shifted; do it low-to-high:
        // N = (1-u) Q => q_e = q_{e-1}... iterate: q_{min-1}=0; n_e = q_e - q_{e-1} => q_e = n_e + q_{e-1}
        std::map<int64_t, int64_t> q;
        int64_t lo = cur.begin()->first, hi = cur.rbegin()->first;
        int64_t carry = 0;
        for (int64_t e = lo; e < hi; ++e) {
            auto it = cur.find(e);
            int64_t n = it == cur.end() ? 0 : it->second;
            carry = n + carry;
            if (carry != 0) q[e] = carry;
        }
        cur = std::move(q);
        ++order;
        if (cur.empty()) return order; // numerator was a power of (1-u) times 0? safeguard
    }
}

std::vector<int64_t> HilbertSeries::expand(int64_t lo, int64_t hi) const {
    if (hi < lo) return {};
    int64_t base = lo;
    if (!num.empty()) base = std::min(base, num.begin()->first);
    size_t len = static_cast<size_t>(hi - base + 1);
    std::vector<int64_t> c(len, 0);
    for (const auto& [e, v] : num)
        if (e <= hi) c[static_cast<size_t>(e - base)] += v;
    for (int64_t w : weights)
        for (size_t k = static_cast<size_t>(w); k < len; ++k) c[k] += c[k - static_cast<size_t>(w)];
    return std::vector<int64_t>(c.begin() + static_cast<long>(lo - base), c.end());
}

int64_t HilbertSeries::total_length() const {
    if (num.empty()) return 0;
    if (dim() > 0) fail(Errc::NonStabilized, "series of a positive-dimensional module has no finite length");
    int64_t lo = num.begin()->first;
    int64_t wsum = 0;
    for (int64_t w : weights) wsum += w;
    int64_t hi = num.rbegin()->first + wsum;
    std::vector<int64_t> c = expand(lo, hi);
    int64_t total = 0;
    for (int64_t v : c) total += v;
    return total;
}

void HilbertSeries::add_shifted(const HilbertSeries& other, int64_t shift) {
    for (const auto& [e, v] : other.num) {
        int64_t& slot = num[e + shift];
        slot += v;
        if (slot == 0) num.erase(e + shift);
    }
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens, int nvars) {
    std::vector<Monomial> out;
    // stable: keep a generator unless divisible by another kept or smaller one
    std::sort(gens.begin(), gens.end(), [nvars](const Monomial& a, const Monomial& b) {
        uint32_t da = a.total_degree(nvars), db = b.total_degree(nvars);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.e.begin(), a.e.end(), b.e.begin(), b.e.end());
    });
    for (const Monomial& g : gens) {
        bool dominated = false;
        for (const Monomial& k : out)
            if (mono_divides(k, g, nvars)) { dominated = true; break; }
        if (!dominated) out.push_back(g);
    }
    return out;
}

namespace {

void numerator_rec(const Ring& ring, std::vector<Monomial> gens, int64_t scale, HilbertSeries& acc, int64_t sign,
                   int64_t shift) {
    int nv = ring.nvars();
    gens = minimalize_monomials(std::move(gens), nv);
    if (!gens.empty() && gens.front().is_one(nv)) return; // unit ideal: numerator 0
    if (gens.empty()) {
        int64_t& slot = acc.num[shift];
        slot += sign;
        if (slot == 0) acc.num.erase(shift);
        return;
    }
    Monomial pivot = gens.back();
    gens.pop_back();
    numerator_rec(ring, gens, scale, acc, sign, shift);
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const Monomial& g : gens) colon.push_back(mono_colon(g, pivot, nv));
    numerator_rec(ring, std::move(colon), scale, acc, -sign, shift + scale * ring.wdeg(pivot));
}

} // namespace

HilbertSeries hilbert_numerator(const Ring& ring, std::vector<Monomial> gens, int64_t scale) {
    HilbertSeries hs;
    for (int64_t w : ring.weights()) hs.weights.push_back(scale * w);
    numerator_rec(ring, std::move(gens), scale, hs, 1, 0);
    return hs;
}

int64_t count_standard_monomials(const Ring& ring, const std::vector<Monomial>& J, int64_t scale, int64_t d) {
    if (d < 0 || d % scale != 0) return 0;
    int64_t target = d / scale;
    int nv = ring.nvars();
    const auto& w = ring.weights();
    int64_t count = 0;
    Monomial m;
    std::function<void(int, int64_t)> rec = [&](int var, int64_t rem) {
        if (var == nv - 1) {
            if (rem % w[static_cast<size_t>(var)] != 0) return;
            m.e[static_cast<size_t>(var)] = static_cast<uint32_t>(rem / w[static_cast<size_t>(var)]);
            for (const Monomial& g : J)
                if (mono_divides(g, m, nv)) return;
            ++count;
            return;
        }
        for (int64_t e = 0; e * w[static_cast<size_t>(var)] <= rem; ++e) {
            m.e[static_cast<size_t>(var)] = static_cast<uint32_t>(e);
            rec(var + 1, rem - e * w[static_cast<size_t>(var)]);
        }
    };
    rec(0, target);
    return count;
}

int64_t monomial_quotient_length(const Ring& ring, const std::vector<Monomial>& J) {
    int nv = ring.nvars();
    std::vector<uint32_t> bound(static_cast<size_t>(nv), 0);
    for (int i = 0; i < nv; ++i) {
        uint32_t b = 0;
        bool found = false;
        for (const Monomial& g : J) {
            bool pure = true;
            for (int k = 0; k < nv; ++k)
                if (k != i && g.e[static_cast<size_t>(k)] != 0) { pure = false; break; }
            if (pure && g.e[static_cast<size_t>(i)] > 0) {
                found = true;
                b = b == 0 ? g.e[static_cast<size_t>(i)] : std::min(b, g.e[static_cast<size_t>(i)]);
            }
        }
        if (!found) fail(Errc::NonStabilized, "monomial quotient has positive dimension");
        bound[static_cast<size_t>(i)] = b;
    }
    int64_t count = 0;
    Monomial m;
    std::function<void(int)> rec = [&](int var) {
        if (var == nv) {
            for (const Monomial& g : J)
                if (mono_divides(g, m, nv)) return;
            ++count;
            return;
        }
        for (uint32_t e = 0; e < bound[static_cast<size_t>(var)]; ++e) {
            m.e[static_cast<size_t>(var)] = e;
            rec(var + 1);
        }
        m.e[static_cast<size_t>(var)] = 0;
    };
    rec(0);
    return count;
}

} // namespace frob
