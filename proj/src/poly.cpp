#include "frob/poly.hpp"

#include <algorithm>
#include <cctype>

namespace frob {

void check_same_ring(const Poly& a, const Poly& b) {
    if (!a.ring() || !b.ring() || !(*a.ring() == *b.ring()))
        fail(Errc::RingMismatch, "operands live in different rings");
}

Poly Poly::constant(RingPtr ring, uint64_t c) {
    Poly r(std::move(ring));
    c %= r.ring_->characteristic();
    if (c != 0) r.t_.push_back(Term{Monomial::one(), c});
    return r;
}

Poly Poly::monomial(RingPtr ring, Monomial m, uint64_t c) {
    Poly r(std::move(ring));
    c %= r.ring_->characteristic();
    if (c != 0) r.t_.push_back(Term{m, c});
    return r;
}

Poly Poly::variable(RingPtr ring, int i) { return monomial(std::move(ring), Monomial::var(i), 1); }

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
    Poly r(std::move(ring));
    const Ring& R = *r.ring_;
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return R.cmp(a.m, b.m) > 0; });
    for (const Term& t : terms) {
        uint64_t c = t.c % R.characteristic();
        if (c == 0) continue;
        if (!r.t_.empty() && r.t_.back().m == t.m) {
            r.t_.back().c = R.field().add(r.t_.back().c, c);
            if (r.t_.back().c == 0) r.t_.pop_back();
        } else {
            r.t_.push_back(Term{t.m, c});
        }
    }
    return r;
}

bool Poly::is_homogeneous() const {
    if (t_.empty()) return true;
    int64_t d = ring_->wdeg(t_[0].m);
    for (const Term& t : t_)
        if (ring_->wdeg(t.m) != d) return false;
    return true;
}

std::optional<int64_t> Poly::homogeneous_degree() const {
    if (t_.empty() || !is_homogeneous()) return std::nullopt;
    return ring_->wdeg(t_[0].m);
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < t_.size(); ++i) {
        if (i) s += " + ";
        s += ring_->format_term(t_[i].c, t_[i].m);
    }
    return s;
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return true;
    check_same_ring(a, b);
    if (a.t_.size() != b.t_.size()) return false;
    for (size_t i = 0; i < a.t_.size(); ++i)
        if (!(a.t_[i].m == b.t_[i].m) || a.t_[i].c != b.t_[i].c) return false;
    return true;
}

Poly add(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    check_same_ring(a, b);
    const Ring& R = *a.ring_;
    Poly r(a.ring_);
    r.t_.reserve(a.t_.size() + b.t_.size());
    size_t i = 0, j = 0;
    while (i < a.t_.size() && j < b.t_.size()) {
        int c = R.cmp(a.t_[i].m, b.t_[j].m);
        if (c > 0) {
            r.t_.push_back(a.t_[i++]);
        } else if (c < 0) {
            r.t_.push_back(b.t_[j++]);
        } else {
            uint64_t s = R.field().add(a.t_[i].c, b.t_[j].c);
            if (s != 0) r.t_.push_back(Term{a.t_[i].m, s});
            ++i;
            ++j;
        }
    }
    while (i < a.t_.size()) r.t_.push_back(a.t_[i++]);
    while (j < b.t_.size()) r.t_.push_back(b.t_[j++]);
    return r;
}

Poly neg(const Poly& a) {
    Poly r = a;
    const Fp& F = a.ring_->field();
    for (Term& t : r.t_) t.c = F.neg(t.c);
    return r;
}

Poly sub(const Poly& a, const Poly& b) { return add(a, neg(b)); }

Poly scale(const Poly& a, uint64_t c) {
    const Fp& F = a.ring_->field();
    c %= F.p;
    if (c == 0) return Poly::zero(a.ring_);
    Poly r = a;
    for (Term& t : r.t_) t.c = F.mul(t.c, c);
    return r;
}

Poly mul_term(const Poly& a, const Monomial& m, uint64_t c) {
    const Fp& F = a.ring_->field();
    c %= F.p;
    if (c == 0) return Poly::zero(a.ring_);
    Poly r(a.ring_);
    r.t_.reserve(a.t_.size());
    int n = a.ring_->nvars();
    for (const Term& t : a.t_) r.t_.push_back(Term{mono_mul(t.m, m, n), F.mul(t.c, c)});
    return r;
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    check_same_ring(a, b);
    Poly acc = Poly::zero(a.ring_);
    for (const Term& t : b.t_) acc = add(acc, mul_term(a, t.m, t.c));
    return acc;
}

Poly poly_pow(const Poly& a, uint64_t e) {
    Poly r = Poly::constant(a.ring_, 1);
    Poly base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Poly entry_power(const Poly& f, uint32_t n) {
    if (n == 0) return f;
    uint64_t q = 1;
    const uint64_t p = f.ring_->characteristic();
    for (uint32_t i = 0; i < n; ++i) {
        q *= p;
        if (q > (1ULL << 20)) fail(Errc::InvalidArgument, "Frobenius power p^n too large");
    }
    int nv = f.ring_->nvars();
    Poly r(f.ring_);
    r.t_.reserve(f.t_.size());
    // coefficients are fixed: c^(p^n) = c in F_p
    for (const Term& t : f.t_) r.t_.push_back(Term{mono_pow(t.m, q, nv), t.c});
    // exponent map is strictly order-preserving, term order survives
    return r;
}

Poly parse_poly(const RingPtr& ring, const std::string& text, int line, int col0) {
    const Fp& F = ring->field();
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    auto col = [&] { return col0 + static_cast<int>(pos); };
    auto peek = [&]() -> char {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    };

    std::vector<Term> terms;
    bool first = true;
    while (peek() != '\0') {
        uint64_t sign = 1;
        char c = peek();
        if (c == '+' || c == '-') {
            ++pos;
            if (c == '-') sign = F.neg(1);
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", line, col());
        }
        first = false;
        uint64_t coeff = sign;
        Monomial mono = Monomial::one();
        bool any = false;
        while (true) {
            char f = peek();
            if (f >= '0' && f <= '9') {
                uint64_t v = 0;
                while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                    v = v * 10 + static_cast<uint64_t>(text[pos] - '0');
                    if (v > (1ULL << 62)) throw ParseError("coefficient literal too large", line, col());
                    ++pos;
                }
                coeff = F.mul(coeff, v % F.p);
                any = true;
            } else if (std::isalpha(static_cast<unsigned char>(f)) || f == '_') {
                std::string name;
                while (pos < text.size() &&
                       (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
                    name += text[pos++];
                }
                int vi = ring->var_index(name);
                if (vi < 0) throw ParseError("unknown variable '" + name + "'", line, col());
                uint64_t e = 1;
                if (peek() == '^') {
                    ++pos;
                    if (!(peek() >= '0' && peek() <= '9'))
                        throw ParseError("expected exponent after '^'", line, col());
                    e = 0;
                    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
                        e = e * 10 + static_cast<uint64_t>(text[pos] - '0');
                        if (e > 1000000) throw ParseError("exponent too large", line, col());
                        ++pos;
                    }
                }
                mono.e[static_cast<size_t>(vi)] += static_cast<uint32_t>(e);
                any = true;
            } else {
                throw ParseError("expected coefficient or variable", line, col());
            }
            if (peek() == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!any) throw ParseError("empty term", line, col());
        if (coeff != 0) terms.push_back(Term{mono, coeff});
    }
    return Poly::from_terms(ring, std::move(terms));
}

} // namespace frob
