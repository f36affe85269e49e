#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frob/ring.hpp"

namespace frob {

struct Term {
    Monomial m;
    uint64_t c = 0;
};

// Sparse multivariate polynomial: terms strictly descending in the ring order,
// no zero coefficients.  Immutable in practice; all operations return fresh values.
class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

    static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
    static Poly constant(RingPtr ring, uint64_t c);
    static Poly monomial(RingPtr ring, Monomial m, uint64_t c = 1);
    static Poly variable(RingPtr ring, int i);

    // Builds from arbitrary term list (combines, drops zeros, sorts).
    static Poly from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t nterms() const { return t_.size(); }
    const Term& lead() const { return t_.front(); }

    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one(ring_->nvars())); }
    // nonzero scalar; in the graded setting these are exactly the units
    bool is_unit() const { return t_.size() == 1 && t_[0].m.is_one(ring_->nvars()); }

    // weighted degree of the leading term; requires nonzero
    int64_t degree() const { return ring_->wdeg(t_.front().m); }
    bool is_homogeneous() const;
    // degree if nonzero and homogeneous
    std::optional<int64_t> homogeneous_degree() const;

    std::string str() const;

    friend bool operator==(const Poly& a, const Poly& b);

private:
    RingPtr ring_;
    std::vector<Term> t_;

    friend Poly add(const Poly&, const Poly&);
    friend Poly sub(const Poly&, const Poly&);
    friend Poly neg(const Poly&);
    friend Poly mul(const Poly&, const Poly&);
    friend Poly scale(const Poly&, uint64_t);
    friend Poly mul_term(const Poly&, const Monomial&, uint64_t);
    friend Poly entry_power(const Poly&, uint32_t);
    friend Poly poly_pow(const Poly&, uint64_t);
};

void check_same_ring(const Poly& a, const Poly& b);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, uint64_t c);
Poly mul_term(const Poly& a, const Monomial& m, uint64_t c);
Poly poly_pow(const Poly& a, uint64_t e);

// f^(p^n) via the exponent map: every term c x^a goes to c x^(p^n a).
Poly entry_power(const Poly& f, uint32_t n);

// `x^2*y - 3*z`: integer coefficients reduced mod p, `^`, `*`, `+`, `-`.
// line/col seed the positions reported in parse errors.
Poly parse_poly(const RingPtr& ring, const std::string& text, int line = 1, int col = 1);

inline Poly operator+(const Poly& a, const Poly& b) { return add(a, b); }
inline Poly operator-(const Poly& a, const Poly& b) { return sub(a, b); }
inline Poly operator-(const Poly& a) { return neg(a); }
inline Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }

} // namespace frob
