#pragma once

#include <array>
#include <cstdint>
#include <functional>

namespace frob {

inline constexpr int kMaxVars = 8;

// Dense exponent vector; the active variable count lives on the ring.
struct Monomial {
    std::array<uint32_t, kMaxVars> e{};

    static Monomial one() { return Monomial{}; }
    static Monomial var(int i, uint32_t k = 1) {
        Monomial m;
        m.e[static_cast<size_t>(i)] = k;
        return m;
    }

    bool is_one(int nvars) const {
        for (int i = 0; i < nvars; ++i)
            if (e[static_cast<size_t>(i)] != 0) return false;
        return true;
    }
    uint32_t total_degree(int nvars) const {
        uint32_t d = 0;
        for (int i = 0; i < nvars; ++i) d += e[static_cast<size_t>(i)];
        return d;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b, int nvars) {
    Monomial r;
    for (int i = 0; i < nvars; ++i) r.e[static_cast<size_t>(i)] = a.e[static_cast<size_t>(i)] + b.e[static_cast<size_t>(i)];
    return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b, int nvars) {
    for (int i = 0; i < nvars; ++i)
        if (a.e[static_cast<size_t>(i)] > b.e[static_cast<size_t>(i)]) return false;
    return true;
}

// b / a, caller guarantees divisibility
inline Monomial mono_div(const Monomial& b, const Monomial& a, int nvars) {
    Monomial r;
    for (int i = 0; i < nvars; ++i) r.e[static_cast<size_t>(i)] = b.e[static_cast<size_t>(i)] - a.e[static_cast<size_t>(i)];
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b, int nvars) {
    Monomial r;
    for (int i = 0; i < nvars; ++i)
        r.e[static_cast<size_t>(i)] = a.e[static_cast<size_t>(i)] > b.e[static_cast<size_t>(i)] ? a.e[static_cast<size_t>(i)] : b.e[static_cast<size_t>(i)];
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b, int nvars) {
    for (int i = 0; i < nvars; ++i)
        if (a.e[static_cast<size_t>(i)] != 0 && b.e[static_cast<size_t>(i)] != 0) return false;
    return true;
}

// componentwise max(0, b - a); the colon of monomial ideals
inline Monomial mono_colon(const Monomial& b, const Monomial& a, int nvars) {
    Monomial r;
    for (int i = 0; i < nvars; ++i) {
        uint32_t bi = b.e[static_cast<size_t>(i)], ai = a.e[static_cast<size_t>(i)];
        r.e[static_cast<size_t>(i)] = bi > ai ? bi - ai : 0;
    }
    return r;
}

inline Monomial mono_pow(const Monomial& a, uint64_t q, int nvars) {
    Monomial r;
    for (int i = 0; i < nvars; ++i) r.e[static_cast<size_t>(i)] = static_cast<uint32_t>(a.e[static_cast<size_t>(i)] * q);
    return r;
}

} // namespace frob
