#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "frob/ring.hpp"

namespace frob {

// Hilbert series numerator over the denominator prod_i (1 - u^{w_i}).
// Weights and exponents are in the scaled grading; shifts may be negative.
struct HilbertSeries {
    std::map<int64_t, int64_t> num; // exponent -> coefficient, zeros absent
    std::vector<int64_t> weights;   // scaled denominator exponents

    bool numerator_zero() const { return num.empty(); }
    // order of vanishing of the numerator at u = 1
    int pole_cancellation() const;
    // pole order at u = 1; -1 when the numerator is zero (zero module)
    int64_t dim() const {
        if (numerator_zero()) return -1;
        return static_cast<int64_t>(weights.size()) - pole_cancellation();
    }
    // power series coefficients on [lo, hi]
    std::vector<int64_t> expand(int64_t lo, int64_t hi) const;
    // total of all coefficients; requires dim() <= 0
    int64_t total_length() const;

    void add_shifted(const HilbertSeries& other, int64_t shift);
};

// minimal generators among a set of monomials
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens, int nvars);

// numerator of P/J for a monomial ideal J, computed by the colon recursion
HilbertSeries hilbert_numerator(const Ring& ring, std::vector<Monomial> gens, int64_t scale = 1);

// number of monomials of scaled weighted degree d outside the monomial ideal J
int64_t count_standard_monomials(const Ring& ring, const std::vector<Monomial>& J, int64_t scale, int64_t d);

// k-dimension of P/J; requires dim(P/J) = 0, else NonStabilized
int64_t monomial_quotient_length(const Ring& ring, const std::vector<Monomial>& J);

} // namespace frob
