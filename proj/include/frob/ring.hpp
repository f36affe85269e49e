#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "frob/field.hpp"
#include "frob/monomial.hpp"

namespace frob {

enum class MonoOrder { WDegRevLex, WDegLex };

class Poly;

// Ambient graded polynomial ring F_p[x_1..x_m] with positive weights and a
// weighted-degree-compatible monomial order.  Immutable; shared by handle.
class Ring {
public:
    Ring(uint64_t p, std::vector<std::string> vars, std::vector<int64_t> weights,
         MonoOrder order = MonoOrder::WDegRevLex);

    const Fp& field() const { return field_; }
    uint64_t characteristic() const { return field_.p; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& var_names() const { return vars_; }
    const std::vector<int64_t>& weights() const { return weights_; }
    MonoOrder order() const { return order_; }

    int64_t wdeg(const Monomial& m) const {
        int64_t d = 0;
        for (int i = 0; i < nvars(); ++i) d += weights_[static_cast<size_t>(i)] * m.e[static_cast<size_t>(i)];
        return d;
    }

    // 1 if a > b, 0 if equal, -1 if a < b
    int cmp(const Monomial& a, const Monomial& b) const;

    int var_index(const std::string& name) const; // -1 if unknown

    std::string format_mono(const Monomial& m) const;
    std::string format_term(uint64_t c, const Monomial& m) const;

    std::string canonical_description() const; // stable; used for hashing and caching

    friend bool operator==(const Ring& a, const Ring& b) {
        return a.field_.p == b.field_.p && a.vars_ == b.vars_ && a.weights_ == b.weights_ && a.order_ == b.order_;
    }

private:
    Fp field_;
    std::vector<std::string> vars_;
    std::vector<int64_t> weights_;
    MonoOrder order_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(uint64_t p, std::vector<std::string> vars, std::vector<int64_t> weights,
                  MonoOrder order = MonoOrder::WDegRevLex);

} // namespace frob
