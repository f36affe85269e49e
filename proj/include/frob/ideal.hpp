#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "frob/groebner.hpp"
#include "frob/poly.hpp"

namespace frob {

// Ideal of the ambient polynomial ring with a lazily computed, cached reduced
// Groebner basis.  Value-like; the basis cache is shared on copy.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Poly> gens);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& gens() const { return gens_; }

    // reduced Groebner basis; thread-safe, computed once
    const std::vector<Poly>& groebner() const;

    Poly normal_form(const Poly& f) const { return poly_normal_form(f, groebner()); }
    bool member(const Poly& f) const { return normal_form(f).is_zero(); }
    bool is_zero_ideal() const { return groebner().empty(); }
    bool is_unit_ideal() const {
        const auto& g = groebner();
        return g.size() == 1 && g[0].is_unit();
    }
    bool contains(const Ideal& other) const;

    std::string canonical_key() const; // ring description + sorted generator strings

    friend bool operator==(const Ideal& a, const Ideal& b); // compares reduced bases

private:
    RingPtr ring_;
    std::vector<Poly> gens_;
    struct Cache {
        std::mutex mu;
        bool done = false;
        std::vector<Poly> gb;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
// (a : f) and (a : b)
Ideal ideal_colon(const Ideal& a, const Poly& f);
Ideal ideal_colon(const Ideal& a, const Ideal& b);
// (a : b^infinity); iterates colon, capped at 64 rounds
Ideal ideal_saturation(const Ideal& a, const Ideal& b);
// generated by q-th powers of the generators; q must be a power of p
Ideal bracket_power(const Ideal& a, uint64_t q);

// GB cache backed by FROB_CACHE_DIR (enabled when the variable is set).
// Keys are content hashes of (ring description, generator list).
void set_gb_cache_dir(const std::string& dir); // empty disables
std::string gb_cache_dir();

} // namespace frob
