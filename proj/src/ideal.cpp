#include "frob/ideal.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "frob/prng.hpp"

namespace frob {

namespace {

std::string g_cache_dir = [] {
    const char* env = std::getenv("FROB_CACHE_DIR");
    return env ? std::string(env) : std::string();
}();
std::mutex g_cache_mu;

std::string cache_key(const Ideal& I) {
    uint64_t h = Prng::hash_str(I.ring()->canonical_description());
    for (const Poly& g : I.gens()) h = Prng::hash_str(g.str(), h);
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

bool load_cached_gb(const Ideal& I, const std::string& key, std::vector<Poly>& out) {
    std::filesystem::path p = std::filesystem::path(g_cache_dir) / (key + ".gb");
    std::ifstream in(p);
    if (!in) return false;
    std::string line;
    if (!std::getline(in, line) || line != I.ring()->canonical_description()) return false;
    std::vector<Poly> gb;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        gb.push_back(parse_poly(I.ring(), line));
    }
    out = std::move(gb);
    return true;
}

void store_cached_gb(const Ideal& I, const std::string& key, const std::vector<Poly>& gb) {
    std::error_code ec;
    std::filesystem::create_directories(g_cache_dir, ec);
    std::filesystem::path p = std::filesystem::path(g_cache_dir) / (key + ".gb");
    std::ofstream out(p, std::ios::trunc);
    if (!out) return;
    out << I.ring()->canonical_description() << "\n";
    for (const Poly& g : gb) out << g.str() << "\n";
}

} // namespace

void set_gb_cache_dir(const std::string& dir) {
    std::lock_guard<std::mutex> lock(g_cache_mu);
    g_cache_dir = dir;
}

std::string gb_cache_dir() {
    std::lock_guard<std::mutex> lock(g_cache_mu);
    return g_cache_dir;
}

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
    for (const Poly& g : gens_)
        if (g.ring() && !(*g.ring() == *ring_)) fail(Errc::RingMismatch, "ideal generator from another ring");
}

const std::vector<Poly>& Ideal::groebner() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->done) {
        std::string dir = gb_cache_dir();
        bool hit = false;
        std::string key;
        if (!dir.empty()) {
            key = cache_key(*this);
            hit = load_cached_gb(*this, key, cache_->gb);
        }
        if (!hit) {
            cache_->gb = ideal_groebner(gens_);
            if (!dir.empty()) store_cached_gb(*this, key, cache_->gb);
        }
        cache_->done = true;
    }
    return cache_->gb;
}

bool Ideal::contains(const Ideal& other) const {
    for (const Poly& g : other.gens())
        if (!member(g)) return false;
    return true;
}

std::string Ideal::canonical_key() const {
    std::vector<std::string> gs;
    for (const Poly& g : gens_) gs.push_back(g.str());
    std::sort(gs.begin(), gs.end());
    std::string s = ring_->canonical_description() + "|";
    for (const std::string& g : gs) s += g + ";";
    return s;
}

bool operator==(const Ideal& a, const Ideal& b) {
    const auto& ga = a.groebner();
    const auto& gb = b.groebner();
    if (ga.size() != gb.size()) return false;
    for (size_t i = 0; i < ga.size(); ++i)
        if (!(ga[i] == gb[i])) return false;
    return true;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    std::vector<Poly> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    std::vector<Poly> gens;
    for (const Poly& f : a.gens())
        for (const Poly& g : b.gens()) gens.push_back(mul(f, g));
    return Ideal(a.ring(), std::move(gens));
}

// A ∩ B from syzygies of the two-row matrix [[1, a_i, 0], [1, 0, b_j]]:
// a syzygy (c, u, v) satisfies c = -Σu a_i = -Σv b_j, so row 0 generates A ∩ B.
Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    RingPtr ring = a.ring();
    const auto& ga = a.gens();
    const auto& gb = b.gens();
    if (ga.empty()) return a;
    if (gb.empty()) return b;
    PolyMatrix M(ring, 2, 1 + static_cast<int>(ga.size()) + static_cast<int>(gb.size()));
    M.at(0, 0) = Poly::constant(ring, 1);
    M.at(1, 0) = Poly::constant(ring, 1);
    for (size_t i = 0; i < ga.size(); ++i) M.at(0, 1 + static_cast<int>(i)) = ga[i];
    for (size_t j = 0; j < gb.size(); ++j) M.at(1, 1 + static_cast<int>(ga.size()) + static_cast<int>(j)) = gb[j];
    std::vector<int64_t> tdeg = {0, 0};
    std::vector<int64_t> cdeg(static_cast<size_t>(M.cols()), 0);
    PolyMatrix S = syzygy_matrix(M, tdeg, cdeg, 1);
    std::vector<Poly> gens;
    for (int j = 0; j < S.cols(); ++j)
        if (!S.at(0, j).is_zero()) gens.push_back(S.at(0, j));
    return Ideal(ring, std::move(gens));
}

// (A : f): row 0 of the syzygies of [f | a_1 .. a_k]
Ideal ideal_colon(const Ideal& a, const Poly& f) {
    RingPtr ring = a.ring();
    if (f.is_zero()) return Ideal(ring, {Poly::constant(ring, 1)});
    PolyMatrix M(ring, 1, 1 + static_cast<int>(a.gens().size()));
    M.at(0, 0) = f;
    for (size_t i = 0; i < a.gens().size(); ++i) M.at(0, 1 + static_cast<int>(i)) = a.gens()[i];
    std::vector<int64_t> tdeg = {0};
    std::vector<int64_t> cdeg(static_cast<size_t>(M.cols()), 0);
    PolyMatrix S = syzygy_matrix(M, tdeg, cdeg, 1);
    std::vector<Poly> gens;
    for (int j = 0; j < S.cols(); ++j)
        if (!S.at(0, j).is_zero()) gens.push_back(S.at(0, j));
    return Ideal(ring, std::move(gens));
}

Ideal ideal_colon(const Ideal& a, const Ideal& b) {
    RingPtr ring = a.ring();
    bool first = true;
    Ideal acc;
    for (const Poly& f : b.gens()) {
        if (f.is_zero()) continue;
        Ideal c = ideal_colon(a, f);
        acc = first ? c : ideal_intersect(acc, c);
        first = false;
    }
    if (first) return Ideal(ring, {Poly::constant(ring, 1)}); // colon by the zero ideal
    return acc;
}

Ideal ideal_saturation(const Ideal& a, const Ideal& b) {
    Ideal cur = a;
    for (int round = 0; round < 64; ++round) {
        Ideal next = ideal_colon(cur, b);
        if (next == cur) return cur;
        cur = next;
    }
    fail(Errc::SaturationCapExceeded, "saturation did not stabilize within 64 colon rounds");
}

Ideal bracket_power(const Ideal& a, uint64_t q) {
    RingPtr ring = a.ring();
    uint64_t p = ring->characteristic();
    uint32_t n = 0;
    uint64_t t = 1;
    while (t < q) {
        t *= p;
        ++n;
    }
    if (t != q) fail(Errc::BadFrobeniusPower, std::to_string(q) + " is not a power of p=" + std::to_string(p));
    if (q == 1) return a;
    std::vector<Poly> gens;
    for (const Poly& g : a.gens()) gens.push_back(entry_power(g, n));
    return Ideal(ring, std::move(gens));
}

} // namespace frob
