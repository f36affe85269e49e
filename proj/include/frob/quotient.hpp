#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "frob/hilbert.hpp"
#include "frob/ideal.hpp"

namespace frob {

class ModulePresentation;
class FreeResolution;
struct PushforwardPresentation;

struct MinimalPrime {
    Ideal prime;
    bool computed = false; // combinatorial extraction vs user-supplied
};

// R = P/I for a homogeneous ideal I.  Minimal primes are extracted
// combinatorially for monomial I and validated (containment,
// equidimensionality) when user-supplied.  reduced <=> I equals the
// intersection of the declared minimal primes.
class QuotientRing : public std::enable_shared_from_this<QuotientRing> {
public:
    static std::shared_ptr<const QuotientRing> make(RingPtr ring, Ideal I,
                                                    std::vector<Ideal> user_min_primes = {},
                                                    std::string name = "R");

    const RingPtr& ambient() const { return ring_; }
    const Ideal& defining_ideal() const { return I_; }
    const std::vector<MinimalPrime>& minimal_primes() const { return min_primes_; }
    bool is_reduced() const { return reduced_; }
    const std::string& name() const { return name_; }
    bool is_polynomial_ring() const { return I_.gens().empty(); }

    Poly nf(const Poly& f) const { return I_.normal_form(f); }

    HilbertSeries hilbert_series() const;
    int64_t dim() const { return dim_; }
    int64_t hf(int64_t d) const; // Hilbert function of R itself

    // cached invariants; definitions live with the Frobenius machinery
    struct Cache {
        std::mutex mu;
        std::optional<int64_t> depth;
        std::optional<uint64_t> multiplicity;
        std::optional<int> embdim;
        std::optional<bool> regular;
        std::map<int, std::shared_ptr<const FreeResolution>> k_resolution; // by length
        std::map<uint32_t, std::shared_ptr<const PushforwardPresentation>> pushforward; // of R, by n
    };
    Cache& cache() const { return cache_; }

    std::vector<Monomial> initial_ideal() const; // lead monomials of GB(I)

private:
    QuotientRing(RingPtr ring, Ideal I, std::vector<MinimalPrime> primes, bool reduced, int64_t dim,
                 std::string name)
        : ring_(std::move(ring)), I_(std::move(I)), min_primes_(std::move(primes)), reduced_(reduced),
          dim_(dim), name_(std::move(name)) {}

    RingPtr ring_;
    Ideal I_;
    std::vector<MinimalPrime> min_primes_;
    bool reduced_;
    int64_t dim_;
    std::string name_;
    mutable Cache cache_;
};

using QRingPtr = std::shared_ptr<const QuotientRing>;

// minimal primes of a monomial ideal: one prime of variables per minimal cover
std::vector<std::vector<int>> monomial_minimal_covers(const std::vector<Monomial>& gens, int nvars);

} // namespace frob
