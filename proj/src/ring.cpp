#include "frob/ring.hpp"

#include <sstream>

#include "frob/poly.hpp"

namespace frob {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::RingMismatch: return "RingMismatch";
        case Errc::BadFrobeniusPower: return "BadFrobeniusPower";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::ZeroModule: return "ZeroModule";
        case Errc::UnsupportedNonReduced: return "UnsupportedNonReduced";
        case Errc::NonStabilized: return "NonStabilized";
        case Errc::InternalInconsistency: return "InternalInconsistency";
        case Errc::SaturationCapExceeded: return "SaturationCapExceeded";
        case Errc::ParseError: return "ParseError";
        case Errc::UnknownName: return "UnknownName";
        case Errc::CompositeCharacteristic: return "CompositeCharacteristic";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

Ring::Ring(uint64_t p, std::vector<std::string> vars, std::vector<int64_t> weights, MonoOrder order)
    : vars_(std::move(vars)), weights_(std::move(weights)), order_(order) {
    if (!is_prime_u64(p)) fail(Errc::CompositeCharacteristic, "characteristic " + std::to_string(p) + " is not prime");
    field_.p = p;
    if (vars_.empty() || vars_.size() > kMaxVars)
        fail(Errc::InvalidArgument, "variable count must be in [1, " + std::to_string(kMaxVars) + "]");
    if (weights_.size() != vars_.size()) fail(Errc::InvalidArgument, "weights/variables size mismatch");
    for (int64_t w : weights_)
        if (w < 1) fail(Errc::InvalidArgument, "weights must be positive");
    for (size_t i = 0; i < vars_.size(); ++i)
        for (size_t j = i + 1; j < vars_.size(); ++j)
            if (vars_[i] == vars_[j]) fail(Errc::InvalidArgument, "duplicate variable name " + vars_[i]);
}

int Ring::cmp(const Monomial& a, const Monomial& b) const {
    int64_t da = wdeg(a), db = wdeg(b);
    if (da != db) return da > db ? 1 : -1;
    if (order_ == MonoOrder::WDegRevLex) {
        for (int i = nvars() - 1; i >= 0; --i) {
            int64_t d = static_cast<int64_t>(a.e[static_cast<size_t>(i)]) - static_cast<int64_t>(b.e[static_cast<size_t>(i)]);
            if (d != 0) return d < 0 ? 1 : -1;
        }
        return 0;
    }
    for (int i = 0; i < nvars(); ++i) {
        int64_t d = static_cast<int64_t>(a.e[static_cast<size_t>(i)]) - static_cast<int64_t>(b.e[static_cast<size_t>(i)]);
        if (d != 0) return d > 0 ? 1 : -1;
    }
    return 0;
}

int Ring::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

std::string Ring::format_mono(const Monomial& m) const {
    std::string s;
    for (int i = 0; i < nvars(); ++i) {
        uint32_t e = m.e[static_cast<size_t>(i)];
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += vars_[static_cast<size_t>(i)];
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

std::string Ring::format_term(uint64_t c, const Monomial& m) const {
    if (m.is_one(nvars())) return std::to_string(c);
    if (c == 1) return format_mono(m);
    return std::to_string(c) + "*" + format_mono(m);
}

std::string Ring::canonical_description() const {
    std::ostringstream os;
    os << "p=" << field_.p << ";vars=";
    for (size_t i = 0; i < vars_.size(); ++i) os << (i ? "," : "") << vars_[i];
    os << ";weights=";
    for (size_t i = 0; i < weights_.size(); ++i) os << (i ? "," : "") << weights_[i];
    os << ";order=" << (order_ == MonoOrder::WDegRevLex ? "wgrevlex" : "wlex");
    return os.str();
}

RingPtr make_ring(uint64_t p, std::vector<std::string> vars, std::vector<int64_t> weights, MonoOrder order) {
    return std::make_shared<const Ring>(p, std::move(vars), std::move(weights), order);
}

} // namespace frob
