#include "frob/module.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace frob {

namespace {

int64_t lcm64(int64_t a, int64_t b) { return a / std::gcd(a, b) * b; }

void check_same_qring(const ModulePresentation& M, const ModulePresentation& N) {
    if (M.ring().get() == N.ring().get()) return;
    if (!(*M.ring()->ambient() == *N.ring()->ambient()) ||
        !(M.ring()->defining_ideal().canonical_key() == N.ring()->defining_ideal().canonical_key()))
        fail(Errc::RingMismatch, "modules live over different rings");
}

// columns f*e_c for every Groebner generator f of I and every component
PolyMatrix ideal_columns(const QuotientRing& R, int rank) {
    RingPtr ring = R.ambient();
    const auto& gb = R.defining_ideal().groebner();
    PolyMatrix out(ring, rank, static_cast<int>(gb.size()) * rank);
    int j = 0;
    for (const Poly& f : gb)
        for (int c = 0; c < rank; ++c) {
            out.at(c, j) = f;
            ++j;
        }
    return out;
}

std::vector<int64_t> derive_col_degs(const PolyMatrix& A, const std::vector<int64_t>& row_degs, int64_t scale) {
    std::vector<int64_t> out(static_cast<size_t>(A.cols()), 0);
    for (int j = 0; j < A.cols(); ++j) out[static_cast<size_t>(j)] = column_degree(A, j, row_degs, scale);
    return out;
}

} // namespace

// ---------------------------------------------------------------- BettiTable

uint64_t BettiTable::total(int i) const {
    uint64_t t = 0;
    for (const auto& [key, v] : b)
        if (key.first == i) t += v;
    return t;
}

std::string BettiTable::text() const {
    std::vector<int64_t> degrees;
    for (const auto& [key, v] : b) degrees.push_back(key.second);
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    std::ostringstream os;
    os << "deg\\i";
    for (int i = 0; i <= max_i; ++i) os << "\t" << i;
    os << "\n";
    for (int64_t dg : degrees) {
        if (scale > 1 && dg % scale != 0)
            os << dg << "/" << scale;
        else
            os << dg / scale;
        for (int i = 0; i <= max_i; ++i) {
            auto it = b.find({i, dg});
            os << "\t" << (it == b.end() ? 0 : static_cast<int64_t>(it->second));
        }
        os << "\n";
    }
    return os.str();
}

// ------------------------------------------------------- ModulePresentation

ModulePresentation::ModulePresentation(QRingPtr R, std::vector<int64_t> gen_degs, PolyMatrix rel, int64_t scale)
    : R_(std::move(R)), gen_degs_(std::move(gen_degs)), scale_(scale) {
    if (scale_ < 1) fail(Errc::InvalidArgument, "degree scale must be positive");
    if (rel.rows() != static_cast<int>(gen_degs_.size()))
        fail(Errc::InvalidArgument, "relation rows do not match generator count");
    // reduce entries, enforce homogeneous columns, drop zero columns
    PolyMatrix nf = rel.map([&](const Poly& f) { return R_->nf(f); });
    std::vector<int> keep;
    for (int j = 0; j < nf.cols(); ++j) {
        bool nonzero = false;
        int64_t cd = 0;
        for (int i = 0; i < nf.rows(); ++i) {
            const Poly& f = nf.at(i, j);
            if (f.is_zero()) continue;
            auto hd = f.homogeneous_degree();
            if (!hd) fail(Errc::InvalidArgument, "inhomogeneous relation entry: " + f.str());
            int64_t d = gen_degs_[static_cast<size_t>(i)] + scale_ * *hd;
            if (!nonzero) {
                cd = d;
                nonzero = true;
            } else if (d != cd) {
                fail(Errc::InvalidArgument, "relation column is not homogeneous");
            }
        }
        if (nonzero) keep.push_back(j);
    }
    rel_ = nf.select_cols(keep);
    col_degs_ = derive_col_degs(rel_, gen_degs_, scale_);
}

ModulePresentation ModulePresentation::free_module(QRingPtr R, std::vector<int64_t> gen_degs, int64_t scale) {
    PolyMatrix empty(R->ambient(), static_cast<int>(gen_degs.size()), 0);
    return ModulePresentation(std::move(R), std::move(gen_degs), std::move(empty), scale);
}

ModulePresentation ModulePresentation::zero(QRingPtr R) { return free_module(std::move(R), {}, 1); }

ModulePresentation ModulePresentation::cyclic(QRingPtr R, const std::vector<Poly>& rels) {
    PolyMatrix m(R->ambient(), 1, static_cast<int>(rels.size()));
    for (size_t j = 0; j < rels.size(); ++j) m.at(0, static_cast<int>(j)) = rels[j];
    return ModulePresentation(std::move(R), {0}, std::move(m), 1);
}

ModulePresentation ModulePresentation::residue_field(QRingPtr R) {
    std::vector<Poly> vars;
    for (int i = 0; i < R->ambient()->nvars(); ++i) vars.push_back(Poly::variable(R->ambient(), i));
    return cyclic(std::move(R), vars);
}

const std::vector<std::vector<Monomial>>& ModulePresentation::lead_module() const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (!cache_->lead_done) {
        int n = ngens();
        std::vector<std::vector<Monomial>> lead(static_cast<size_t>(n));
        if (n > 0) {
            PolyMatrix aug = PolyMatrix::hcat(rel_, ideal_columns(*R_, n));
            std::vector<ModElem> gb = module_groebner(aug, gen_degs_, scale_);
            for (const ModElem& e : gb) lead[static_cast<size_t>(e.lead().comp)].push_back(e.lead().m);
            for (auto& l : lead) l = minimalize_monomials(std::move(l), R_->ambient()->nvars());
        }
        cache_->lead = std::move(lead);
        cache_->lead_done = true;
    }
    return cache_->lead;
}

int64_t ModulePresentation::hf(int64_t d) const {
    const auto& lead = lead_module();
    const Ring& ring = *R_->ambient();
    int64_t total = 0;
    for (int c = 0; c < ngens(); ++c)
        total += count_standard_monomials(ring, lead[static_cast<size_t>(c)], scale_,
                                          d - gen_degs_[static_cast<size_t>(c)]);
    return total;
}

std::vector<int64_t> ModulePresentation::hf_range(int64_t lo, int64_t hi) const {
    std::vector<int64_t> out;
    for (int64_t d = lo; d <= hi; ++d) out.push_back(hf(d));
    return out;
}

HilbertSeries ModulePresentation::hilbert_series() const {
    const auto& lead = lead_module();
    const Ring& ring = *R_->ambient();
    HilbertSeries acc;
    for (int64_t w : ring.weights()) acc.weights.push_back(scale_ * w);
    for (int c = 0; c < ngens(); ++c) {
        HilbertSeries hc = hilbert_numerator(ring, lead[static_cast<size_t>(c)], scale_);
        acc.add_shifted(hc, gen_degs_[static_cast<size_t>(c)]);
    }
    return acc;
}

ModulePresentation ModulePresentation::rescaled(int64_t new_scale) const {
    if (new_scale == scale_) return *this;
    if (new_scale % scale_ != 0) fail(Errc::InvalidArgument, "rescale target must be a multiple of the scale");
    int64_t f = new_scale / scale_;
    std::vector<int64_t> degs = gen_degs_;
    for (int64_t& d : degs) d *= f;
    return ModulePresentation(R_, std::move(degs), rel_, new_scale);
}

std::string ModulePresentation::describe() const {
    std::ostringstream os;
    os << ngens() << " generators, " << nrels() << " relations over " << R_->name();
    if (scale_ > 1) os << " (degree scale 1/" << scale_ << ")";
    return os.str();
}

bool is_zero_module(const ModulePresentation& M) {
    if (M.ngens() == 0) return true;
    const auto& lead = M.lead_module();
    int nv = M.ring()->ambient()->nvars();
    for (const auto& l : lead) {
        bool unit = false;
        for (const Monomial& m : l)
            if (m.is_one(nv)) { unit = true; break; }
        if (!unit) return false;
    }
    return true;
}

// ------------------------------------------------------------ minimalization

namespace {

struct PruneResult {
    PolyMatrix A;
    std::vector<int64_t> row_degs;
    std::vector<int> kept_rows;
};

// cancel unit entries of A (rows = generators), Nakayama-style
PruneResult prune_unit_entries(PolyMatrix A, std::vector<int64_t> row_degs, const QuotientRing& R) {
    const Fp& F = R.ambient()->field();
    std::vector<int> kept(static_cast<size_t>(A.rows()));
    std::iota(kept.begin(), kept.end(), 0);
    while (true) {
        int pr = -1, pc = -1;
        for (int j = 0; j < A.cols() && pr < 0; ++j)
            for (int i = 0; i < A.rows(); ++i)
                if (A.at(i, j).is_unit()) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        uint64_t uinv = F.inv(A.at(pr, pc).lead().c);
        for (int j = 0; j < A.cols(); ++j) {
            if (j == pc || A.at(pr, j).is_zero()) continue;
            Poly lam = scale(A.at(pr, j), uinv);
            for (int t = 0; t < A.rows(); ++t) {
                if (A.at(t, pc).is_zero()) continue;
                A.at(t, j) = R.nf(sub(A.at(t, j), mul(lam, A.at(t, pc))));
            }
        }
        std::vector<bool> dr(static_cast<size_t>(A.rows()), false), dc(static_cast<size_t>(A.cols()), false);
        dr[static_cast<size_t>(pr)] = true;
        dc[static_cast<size_t>(pc)] = true;
        A = A.drop_rows_cols(dr, dc);
        row_degs.erase(row_degs.begin() + pr);
        kept.erase(kept.begin() + pr);
    }
    return PruneResult{std::move(A), std::move(row_degs), std::move(kept)};
}

} // namespace

PolyMatrix kernel_into_coker(const PolyMatrix& B, const PolyMatrix& relsY, const std::vector<int64_t>& target_degs,
                             const std::vector<int64_t>& src_degs, int64_t scale, const QuotientRing& R) {
    RingPtr ring = R.ambient();
    int src = B.cols();
    PolyMatrix aug = B;
    if (relsY.cols() > 0) aug = PolyMatrix::hcat(aug, relsY);
    PolyMatrix icols = ideal_columns(R, B.rows());
    if (icols.cols() > 0) aug = PolyMatrix::hcat(aug, icols);
    std::vector<int64_t> cdegs = src_degs;
    {
        auto extra = derive_col_degs(aug, target_degs, scale);
        cdegs.insert(cdegs.end(), extra.begin() + src, extra.end());
    }
    PolyMatrix S = syzygy_matrix(aug, target_degs, cdegs, scale);
    // first `src` rows generate the preimage; reduce mod I and drop columns that die
    PolyMatrix K(ring, src, S.cols());
    for (int i = 0; i < src; ++i)
        for (int j = 0; j < S.cols(); ++j) K.at(i, j) = R.nf(S.at(i, j));
    std::vector<int> keep;
    for (int j = 0; j < K.cols(); ++j)
        if (!K.col_is_zero(j)) keep.push_back(j);
    return K.select_cols(keep);
}

ModulePresentation minimal_presentation(const ModulePresentation& M, MinimalizeInfo* info) {
    const QuotientRing& R = *M.ring();
    const Fp& F = R.ambient()->field();

    PruneResult pr = prune_unit_entries(M.relations(), M.gen_degrees(), R);
    if (info) info->kept_rows = pr.kept_rows;
    ModulePresentation stage1(M.ring(), pr.row_degs, std::move(pr.A), M.scale());
    if (stage1.nrels() == 0) return stage1;

    // minimally generate the relation columns: prune units in their syzygies
    PolyMatrix A = stage1.relations();
    std::vector<int64_t> cdegs = stage1.col_degrees();
    PolyMatrix S = kernel_into_coker(A, PolyMatrix(R.ambient(), stage1.ngens(), 0), stage1.gen_degrees(), cdegs,
                                     stage1.scale(), R);
    while (true) {
        int pi = -1, pj = -1;
        for (int j = 0; j < S.cols() && pi < 0; ++j)
            for (int i = 0; i < S.rows(); ++i)
                if (S.at(i, j).is_unit()) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        uint64_t uinv = F.inv(S.at(pi, pj).lead().c);
        for (int j = 0; j < S.cols(); ++j) {
            if (j == pj || S.at(pi, j).is_zero()) continue;
            Poly lam = scale(S.at(pi, j), uinv);
            for (int t = 0; t < S.rows(); ++t) {
                if (S.at(t, pj).is_zero()) continue;
                S.at(t, j) = R.nf(sub(S.at(t, j), mul(lam, S.at(t, pj))));
            }
        }
        std::vector<bool> dr(static_cast<size_t>(S.rows()), false), dc(static_cast<size_t>(S.cols()), false);
        dr[static_cast<size_t>(pi)] = true;
        dc[static_cast<size_t>(pj)] = true;
        S = S.drop_rows_cols(dr, dc);
        std::vector<bool> none(static_cast<size_t>(A.rows()), false), dcol(static_cast<size_t>(A.cols()), false);
        dcol[static_cast<size_t>(pi)] = true;
        A = A.drop_rows_cols(none, dcol);
    }
    return ModulePresentation(M.ring(), stage1.gen_degrees(), std::move(A), stage1.scale());
}

bool is_free_module(const ModulePresentation& M) { return minimal_presentation(M).nrels() == 0; }

// --------------------------------------------------------------- resolution

int default_resolution_cap(const QuotientRing& R) { return static_cast<int>(R.dim()) + 4; }

namespace {

void minimalize_complex(std::vector<PolyMatrix>& d, std::vector<std::vector<int64_t>>& degs,
                        const QuotientRing& R) {
    const Fp& F = R.ambient()->field();
    bool again = true;
    while (again) {
        again = false;
        // d[0] comes from a minimal presentation and stays unit-free
        for (size_t idx = 1; idx < d.size() && !again; ++idx) {
            PolyMatrix& A = d[idx];
            int pr = -1, pc = -1;
            for (int j = 0; j < A.cols() && pr < 0; ++j)
                for (int i = 0; i < A.rows(); ++i)
                    if (A.at(i, j).is_unit()) {
                        pr = i;
                        pc = j;
                        break;
                    }
            if (pr < 0) continue;
            again = true;
            uint64_t uinv = F.inv(A.at(pr, pc).lead().c);
            Poly upoly = Poly::constant(R.ambient(), A.at(pr, pc).lead().c);
            // clear row pr via column ops; mirror as row ops on d[idx+1]
            for (int j = 0; j < A.cols(); ++j) {
                if (j == pc || A.at(pr, j).is_zero()) continue;
                Poly lam = scale(A.at(pr, j), uinv);
                for (int t = 0; t < A.rows(); ++t) A.at(t, j) = R.nf(sub(A.at(t, j), mul(lam, A.at(t, pc))));
                if (idx + 1 < d.size()) {
                    PolyMatrix& D = d[idx + 1];
                    for (int k = 0; k < D.cols(); ++k) D.at(pc, k) = R.nf(add(D.at(pc, k), mul(lam, D.at(j, k))));
                }
            }
            // clear column pc via row ops; mirror as column ops on d[idx-1]
            for (int t = 0; t < A.rows(); ++t) {
                if (t == pr || A.at(t, pc).is_zero()) continue;
                Poly mu = scale(A.at(t, pc), uinv);
                for (int j = 0; j < A.cols(); ++j) A.at(t, j) = R.nf(sub(A.at(t, j), mul(mu, A.at(pr, j))));
                PolyMatrix& D = d[idx - 1];
                for (int g = 0; g < D.rows(); ++g) D.at(g, pr) = R.nf(add(D.at(g, pr), mul(mu, D.at(g, t))));
            }
            std::vector<bool> dr(static_cast<size_t>(A.rows()), false), dc(static_cast<size_t>(A.cols()), false);
            dr[static_cast<size_t>(pr)] = true;
            dc[static_cast<size_t>(pc)] = true;
            A = A.drop_rows_cols(dr, dc);
            degs[idx].erase(degs[idx].begin() + pr);
            degs[idx + 1].erase(degs[idx + 1].begin() + pc);
            {
                PolyMatrix& D = d[idx - 1];
                std::vector<bool> nr(static_cast<size_t>(D.rows()), false), ncol(static_cast<size_t>(D.cols()), false);
                ncol[static_cast<size_t>(pr)] = true;
                D = D.drop_rows_cols(nr, ncol);
            }
            if (idx + 1 < d.size()) {
                PolyMatrix& D = d[idx + 1];
                std::vector<bool> nr(static_cast<size_t>(D.rows()), false), ncol(static_cast<size_t>(D.cols()), false);
                nr[static_cast<size_t>(pc)] = true;
                D = D.drop_rows_cols(nr, ncol);
            }
        }
    }
}

} // namespace

FreeResolution free_resolution(const ModulePresentation& M, int L) {
    if (L < 1) fail(Errc::InvalidArgument, "resolution length must be at least 1");
    const QuotientRing& R = *M.ring();
    ModulePresentation pres = minimal_presentation(M);

    FreeResolution res;
    res.R = M.ring();
    res.scale = M.scale();
    res.length = L;
    res.degs.resize(static_cast<size_t>(L) + 1);
    res.d.resize(static_cast<size_t>(L), PolyMatrix(R.ambient(), 0, 0));
    res.degs[0] = pres.gen_degrees();
    if (pres.ngens() == 0) {
        for (int i = 0; i < L; ++i) res.d[static_cast<size_t>(i)] = PolyMatrix(R.ambient(), 0, 0);
        return res;
    }
    res.d[0] = pres.relations();
    res.degs[1] = pres.col_degrees();
    for (int i = 2; i <= L; ++i) {
        if (res.degs[static_cast<size_t>(i) - 1].empty()) {
            res.d[static_cast<size_t>(i) - 1] = PolyMatrix(R.ambient(), 0, 0);
            continue;
        }
        PolyMatrix K = kernel_into_coker(res.d[static_cast<size_t>(i) - 2],
                                         PolyMatrix(R.ambient(), res.d[static_cast<size_t>(i) - 2].rows(), 0),
                                         res.degs[static_cast<size_t>(i) - 2], res.degs[static_cast<size_t>(i) - 1],
                                         res.scale, R);
        res.d[static_cast<size_t>(i) - 1] = K;
        res.degs[static_cast<size_t>(i)] = derive_col_degs(K, res.degs[static_cast<size_t>(i) - 1], res.scale);
    }
    minimalize_complex(res.d, res.degs, R);
    return res;
}

BettiTable FreeResolution::betti_table() const {
    BettiTable t;
    t.scale = scale;
    t.max_i = length;
    for (int i = 0; i <= length; ++i)
        for (int64_t dg : degs[static_cast<size_t>(i)]) ++t.b[{i, dg}];
    return t;
}

std::optional<int> FreeResolution::finite_pd() const {
    for (int i = 0; i <= length; ++i)
        if (betti(i) == 0) return i - 1;
    return std::nullopt;
}

// ----------------------------------------------------- transpose and syzygy

ModulePresentation transpose(const ModulePresentation& M) {
    ModulePresentation pres = minimal_presentation(M);
    if (pres.nrels() == 0) return ModulePresentation::zero(M.ring());
    std::vector<int64_t> gdegs;
    for (int64_t d : pres.col_degrees()) gdegs.push_back(-d);
    return ModulePresentation(M.ring(), std::move(gdegs), pres.relations().transpose(), M.scale());
}

ModulePresentation syzygy_module(const ModulePresentation& M, int i) {
    if (i < 0) fail(Errc::InvalidArgument, "negative syzygy index");
    if (i == 0) return minimal_presentation(M);
    FreeResolution res = free_resolution(M, i + 1);
    if (res.betti(i) == 0) return ModulePresentation::zero(M.ring());
    return ModulePresentation(M.ring(), res.degs[static_cast<size_t>(i)], res.d[static_cast<size_t>(i)], M.scale());
}

// ------------------------------------------------------- hom / tensor / ext

namespace {

std::pair<ModulePresentation, ModulePresentation> common_scale(const ModulePresentation& M,
                                                               const ModulePresentation& N) {
    int64_t s = lcm64(M.scale(), N.scale());
    return {M.rescaled(s), N.rescaled(s)};
}

// B^T tensor Id_k: matrix of "compose with d" on Hom covers; rows (j, s), cols (t, s)
PolyMatrix hom_transpose_block(const PolyMatrix& dmat, int b0) {
    RingPtr ring = dmat.ring();
    int rows = dmat.cols() * b0, cols = dmat.rows() * b0;
    PolyMatrix out(ring, rows, cols);
    for (int j = 0; j < dmat.cols(); ++j)
        for (int t = 0; t < dmat.rows(); ++t) {
            if (dmat.at(t, j).is_zero()) continue;
            for (int s = 0; s < b0; ++s) out.at(j * b0 + s, t * b0 + s) = dmat.at(t, j);
        }
    return out;
}

// B tensor Id_k on N^k covers: rows (t, s), cols (t, l)
PolyMatrix coker_rel_block(const PolyMatrix& B, int k) {
    RingPtr ring = B.ring();
    int b0 = B.rows(), b1 = B.cols();
    PolyMatrix out(ring, b0 * k, b1 * k);
    for (int t = 0; t < k; ++t)
        for (int s = 0; s < b0; ++s)
            for (int l = 0; l < b1; ++l) out.at(t * b0 + s, t * b1 + l) = B.at(s, l);
    return out;
}

std::vector<int64_t> hom_cover_degs(const std::vector<int64_t>& from_degs, const std::vector<int64_t>& n_degs) {
    std::vector<int64_t> out;
    out.reserve(from_degs.size() * n_degs.size());
    for (int64_t ft : from_degs)
        for (int64_t es : n_degs) out.push_back(es - ft);
    return out;
}

ModulePresentation ext_from_resolution(const FreeResolution& res, int i, const ModulePresentation& Nmin) {
    const QuotientRing& R = *res.R;
    RingPtr ring = R.ambient();
    int64_t scale = res.scale;
    int b0 = Nmin.ngens();
    const PolyMatrix& B = Nmin.relations();
    int bi = res.betti(i);
    if (bi == 0 || b0 == 0) return ModulePresentation::zero(res.R);

    std::vector<int64_t> degs_i = hom_cover_degs(res.degs[static_cast<size_t>(i)], Nmin.gen_degrees());
    std::vector<int64_t> degs_next = hom_cover_degs(res.degs[static_cast<size_t>(i) + 1], Nmin.gen_degrees());

    PolyMatrix phi_next = hom_transpose_block(res.d[static_cast<size_t>(i)], b0); // into Hom(F_{i+1}, N)
    PolyMatrix relsNext = coker_rel_block(B, res.betti(i + 1));
    PolyMatrix U = kernel_into_coker(phi_next, relsNext, degs_next, degs_i, scale, R);
    if (U.cols() == 0) return ModulePresentation::zero(res.R);
    std::vector<int64_t> udegs = derive_col_degs(U, degs_i, scale);

    PolyMatrix image(ring, b0 * bi, 0);
    if (i >= 1 && res.betti(i - 1) > 0) image = hom_transpose_block(res.d[static_cast<size_t>(i) - 1], b0);
    PolyMatrix relsHere = PolyMatrix::hcat(image, coker_rel_block(B, bi));
    PolyMatrix rels = kernel_into_coker(U, relsHere, degs_i, udegs, scale, R);
    return ModulePresentation(res.R, std::move(udegs), std::move(rels), scale);
}

const FreeResolution& k_resolution(const QuotientRing& R, int len) {
    auto& cache = R.cache();
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.k_resolution.lower_bound(len);
    if (it == cache.k_resolution.end()) {
        auto qr = R.shared_from_this();
        auto res = std::make_shared<FreeResolution>(
            free_resolution(ModulePresentation::residue_field(qr), len));
        it = cache.k_resolution.emplace(len, std::move(res)).first;
    }
    return *it->second;
}

FreeResolution rescale_resolution(const FreeResolution& res, int64_t new_scale) {
    FreeResolution out = res;
    int64_t f = new_scale / res.scale;
    out.scale = new_scale;
    for (auto& dv : out.degs)
        for (int64_t& d : dv) d *= f;
    return out;
}

} // namespace

ModulePresentation hom_module(const ModulePresentation& M, const ModulePresentation& N) {
    check_same_qring(M, N);
    auto [Ms, Ns] = common_scale(M, N);
    const QuotientRing& R = *Ms.ring();
    ModulePresentation Mp = minimal_presentation(Ms);
    ModulePresentation Np = minimal_presentation(Ns);
    int a0 = Mp.ngens(), b0 = Np.ngens();
    if (a0 == 0 || b0 == 0) return ModulePresentation::zero(M.ring());
    int64_t scale = Ms.scale();

    std::vector<int64_t> degs0 = hom_cover_degs(Mp.gen_degrees(), Np.gen_degrees());
    std::vector<int64_t> degs1 = hom_cover_degs(Mp.col_degrees(), Np.gen_degrees());

    PolyMatrix phi = hom_transpose_block(Mp.relations(), b0);
    PolyMatrix relsTarget = coker_rel_block(Np.relations(), Mp.nrels());
    PolyMatrix U = kernel_into_coker(phi, relsTarget, degs1, degs0, scale, R);
    if (U.cols() == 0) return ModulePresentation::zero(M.ring());
    std::vector<int64_t> udegs = derive_col_degs(U, degs0, scale);
    PolyMatrix rels = kernel_into_coker(U, coker_rel_block(Np.relations(), a0), degs0, udegs, scale, R);
    return ModulePresentation(M.ring(), std::move(udegs), std::move(rels), scale);
}

ModulePresentation dual_module(const ModulePresentation& M) {
    return hom_module(M, ModulePresentation::free_module(M.ring(), {0}, M.scale()));
}

ModulePresentation tensor_module(const ModulePresentation& M, const ModulePresentation& N) {
    check_same_qring(M, N);
    auto [Ms, Ns] = common_scale(M, N);
    ModulePresentation Mp = minimal_presentation(Ms);
    ModulePresentation Np = minimal_presentation(Ns);
    int a0 = Mp.ngens(), b0 = Np.ngens();
    int a1 = Mp.nrels(), b1 = Np.nrels();
    RingPtr ring = M.ring()->ambient();
    std::vector<int64_t> degs;
    degs.reserve(static_cast<size_t>(a0) * static_cast<size_t>(b0));
    for (int t = 0; t < a0; ++t)
        for (int s = 0; s < b0; ++s)
            degs.push_back(Mp.gen_degrees()[static_cast<size_t>(t)] + Np.gen_degrees()[static_cast<size_t>(s)]);
    PolyMatrix rel(ring, a0 * b0, a1 * b0 + a0 * b1);
    int col = 0;
    for (int j = 0; j < a1; ++j)
        for (int s = 0; s < b0; ++s) {
            for (int t = 0; t < a0; ++t) rel.at(t * b0 + s, col) = Mp.relations().at(t, j);
            ++col;
        }
    for (int t = 0; t < a0; ++t)
        for (int l = 0; l < b1; ++l) {
            for (int s = 0; s < b0; ++s) rel.at(t * b0 + s, col) = Np.relations().at(s, l);
            ++col;
        }
    return ModulePresentation(M.ring(), std::move(degs), std::move(rel), Ms.scale());
}

ModulePresentation ext_module(int i, const ModulePresentation& M, const ModulePresentation& N, int L) {
    check_same_qring(M, N);
    if (i < 0) fail(Errc::InvalidArgument, "negative Ext index");
    if (L < 0) L = default_resolution_cap(*M.ring());
    if (i >= L) fail(Errc::CapExceeded, "Ext index " + std::to_string(i) + " requires resolution past cap " +
                                            std::to_string(L));
    if (i == 0) return hom_module(M, N);
    auto [Ms, Ns] = common_scale(M, N);
    FreeResolution res = free_resolution(Ms, i + 1);
    return ext_from_resolution(res, i, minimal_presentation(Ns));
}

// -------------------------------------------------------- depth / dimension

int64_t depth(const ModulePresentation& M) {
    if (is_zero_module(M)) fail(Errc::ZeroModule, "depth of the zero module");
    const QuotientRing& R = *M.ring();
    int dimR = static_cast<int>(R.dim());
    const FreeResolution& kres = k_resolution(R, dimR + 2);
    FreeResolution scaled = M.scale() == 1 ? kres : rescale_resolution(kres, M.scale());
    ModulePresentation Mp = minimal_presentation(M);
    for (int i = 0; i <= dimR; ++i) {
        ModulePresentation e = i == 0
                                   ? hom_module(ModulePresentation::residue_field(M.ring()).rescaled(M.scale()), Mp)
                                   : ext_from_resolution(scaled, i, Mp);
        if (!is_zero_module(e)) return i;
    }
    fail(Errc::InternalInconsistency, "no nonvanishing Ext^i(k, M) found for i <= dim R");
}

int64_t module_dim(const ModulePresentation& M) {
    if (is_zero_module(M)) fail(Errc::ZeroModule, "dimension of the zero module");
    const auto& lead = M.lead_module();
    const Ring& ring = *M.ring()->ambient();
    int64_t best = 0;
    for (const auto& l : lead) {
        int64_t d = hilbert_numerator(ring, l, 1).dim();
        best = std::max(best, d);
    }
    return best;
}

bool is_mcm(const ModulePresentation& M) { return depth(M) == M.ring()->dim(); }

// ------------------------------------------------------------------ torsion

TorsionResult torsion_submodule(const ModulePresentation& M) {
    const QuotientRing& R = *M.ring();
    if (!R.is_reduced())
        fail(Errc::UnsupportedNonReduced, "torsion via double duals requires a reduced ring");
    ModulePresentation Mp = minimal_presentation(M);
    RingPtr ring = R.ambient();
    int64_t scale = Mp.scale();
    int a0 = Mp.ngens();
    if (a0 == 0) {
        TorsionResult r{ModulePresentation::zero(M.ring()), PolyMatrix(ring, 0, 0), ModulePresentation::zero(M.ring())};
        return r;
    }
    std::vector<int64_t> negD, negD1;
    for (int64_t d : Mp.gen_degrees()) negD.push_back(-d);
    for (int64_t d : Mp.col_degrees()) negD1.push_back(-d);

    // generators of M* = ker(A^T) inside R^{a0}
    PolyMatrix U = kernel_into_coker(Mp.relations().transpose(), PolyMatrix(ring, Mp.nrels(), 0), negD1, negD,
                                     scale, R);
    std::vector<int64_t> udegs = derive_col_degs(U, negD, scale);

    // T(M) = ker(M -> M**) = ker of the evaluation composite M -> R^u given by U^T
    std::vector<int64_t> eval_target;
    for (int64_t d : udegs) eval_target.push_back(-d);
    PolyMatrix K = kernel_into_coker(U.transpose(), PolyMatrix(ring, U.cols(), 0), eval_target, Mp.gen_degrees(),
                                     scale, R);
    std::vector<int64_t> kdegs = derive_col_degs(K, Mp.gen_degrees(), scale);
    PolyMatrix trels = kernel_into_coker(K, Mp.relations(), Mp.gen_degrees(), kdegs, scale, R);

    TorsionResult out{minimal_presentation(ModulePresentation(M.ring(), kdegs, trels, scale)), K,
                      minimal_presentation(ModulePresentation(M.ring(), Mp.gen_degrees(),
                                                              PolyMatrix::hcat(Mp.relations(), K), scale))};
    return out;
}

// ------------------------------------------------------------ Fitting ideals

namespace {

Poly minor_det(const PolyMatrix& A, const std::vector<int>& rows, const std::vector<int>& cols, size_t depth,
               std::vector<bool>& used, const QuotientRing& R) {
    RingPtr ring = A.ring();
    if (depth == rows.size()) return Poly::constant(ring, 1);
    Poly acc = Poly::zero(ring);
    const Fp& F = ring->field();
    int r = rows[depth];
    int parity = 0;
    for (size_t ci = 0; ci < cols.size(); ++ci) {
        if (used[ci]) continue;
        const Poly& e = A.at(r, cols[ci]);
        if (!e.is_zero()) {
            used[ci] = true;
            Poly sub_det = minor_det(A, rows, cols, depth + 1, used, R);
            used[ci] = false;
            if (!sub_det.is_zero()) {
                Poly term = mul(e, sub_det);
                if (parity % 2 == 1) term = scale(term, F.neg(1));
                acc = add(acc, term);
            }
        }
        ++parity;
    }
    return acc;
}

std::vector<Poly> fitting_minors(const PolyMatrix& A, int k, const QuotientRing& R) {
    std::vector<Poly> out;
    if (k <= 0 || k > A.rows() || k > A.cols()) return out;
    std::vector<int> rows(static_cast<size_t>(k)), cols(static_cast<size_t>(k));
    std::function<void(int, int)> pick_cols;
    std::function<void(int, int)> pick_rows = [&](int from, int depth) {
        if (depth == k) {
            std::function<void(int, int)> pc = [&](int cfrom, int cdepth) {
                if (cdepth == k) {
                    std::vector<bool> used(static_cast<size_t>(k), false);
                    Poly d = R.nf(minor_det(A, rows, cols, 0, used, R));
                    if (!d.is_zero()) out.push_back(d);
                    return;
                }
                for (int c = cfrom; c <= A.cols() - (k - cdepth); ++c) {
                    cols[static_cast<size_t>(cdepth)] = c;
                    pc(c + 1, cdepth + 1);
                }
            };
            pc(0, 0);
            return;
        }
        for (int r = from; r <= A.rows() - (k - depth); ++r) {
            rows[static_cast<size_t>(depth)] = r;
            pick_rows(r + 1, depth + 1);
        }
    };
    pick_rows(0, 0);
    return out;
}

} // namespace

Ideal fitting_ideal(const ModulePresentation& M, int r) {
    RingPtr ring = M.ring()->ambient();
    ModulePresentation Mp = minimal_presentation(M);
    int n = Mp.ngens();
    if (r < 0) return Ideal(ring, {});
    int k = n - r;
    if (k <= 0) return Ideal(ring, {Poly::constant(ring, 1)});
    if (k > Mp.nrels()) return Ideal(ring, {});
    return Ideal(ring, fitting_minors(Mp.relations(), k, *M.ring()));
}

Ideal non_free_locus(const ModulePresentation& M) {
    const QuotientRing& R = *M.ring();
    RingPtr ring = R.ambient();
    ModulePresentation Mp = minimal_presentation(M);
    int n = Mp.ngens();
    std::vector<Poly> jgens = R.defining_ideal().gens();
    Ideal prev(ring, {}); // Fitt_{-1} = 0
    for (int r = 0; r <= n; ++r) {
        int k = n - r;
        Ideal fr = k <= 0 ? Ideal(ring, {Poly::constant(ring, 1)})
                          : (k > Mp.nrels() ? Ideal(ring, {}) : Ideal(ring, fitting_minors(Mp.relations(), k, R)));
        Ideal ann = ideal_colon(R.defining_ideal(), prev);
        for (const Poly& f : fr.gens())
            for (const Poly& a : ann.gens()) {
                Poly t = R.nf(mul(f, a));
                if (!t.is_zero()) jgens.push_back(t);
            }
        prev = fr;
    }
    return Ideal(ring, std::move(jgens));
}

LocalRankReport local_rank_at_min_primes(const ModulePresentation& M) {
    const QuotientRing& R = *M.ring();
    RingPtr ring = R.ambient();
    ModulePresentation Mp = minimal_presentation(M);
    int n = Mp.ngens();
    LocalRankReport report;
    bool all_free = true;
    std::optional<int> shared_rank;
    bool shared_ok = true;
    for (const MinimalPrime& mp : R.minimal_primes()) {
        const Ideal& P = mp.prime;
        auto outside = [&](const Ideal& J) {
            for (const Poly& g : J.gens())
                if (!P.member(g)) return true;
            return false;
        };
        int rstar = -1;
        Ideal prev(ring, {});
        Ideal below(ring, {});
        for (int r = 0; r <= n; ++r) {
            int k = n - r;
            Ideal fr = k <= 0 ? Ideal(ring, {Poly::constant(ring, 1)})
                              : (k > Mp.nrels() ? Ideal(ring, {}) : Ideal(ring, fitting_minors(Mp.relations(), k, R)));
            if (outside(fr)) {
                rstar = r;
                below = prev;
                break;
            }
            prev = fr;
        }
        LocalRank lr;
        std::string pstr;
        for (const Poly& g : P.gens()) pstr += (pstr.empty() ? "" : ", ") + g.str();
        lr.prime = "(" + pstr + ")";
        bool free_here = false;
        if (rstar == 0) {
            free_here = true;
            lr.rank = 0;
        } else if (rstar > 0) {
            Ideal ann = ideal_colon(R.defining_ideal(), below);
            if (outside(ann)) {
                free_here = true;
                lr.rank = rstar;
            }
        }
        if (!free_here) {
            all_free = false;
            shared_ok = false;
        } else {
            if (!shared_rank) shared_rank = *lr.rank;
            else if (*shared_rank != *lr.rank) shared_ok = false;
        }
        report.at.push_back(std::move(lr));
    }
    report.has_constant_rank = all_free && shared_ok && shared_rank.has_value();
    if (report.has_constant_rank) report.rank = shared_rank;
    return report;
}

// ------------------------------------------------------------ canonical form

ModulePresentation canonical_form(const ModulePresentation& M) {
    ModulePresentation Mp = minimal_presentation(M);
    RingPtr ring = M.ring()->ambient();
    const Fp& F = ring->field();
    int n = Mp.ngens();
    std::vector<int> rowperm(static_cast<size_t>(n));
    std::iota(rowperm.begin(), rowperm.end(), 0);
    std::stable_sort(rowperm.begin(), rowperm.end(), [&](int a, int b) {
        return Mp.gen_degrees()[static_cast<size_t>(a)] < Mp.gen_degrees()[static_cast<size_t>(b)];
    });
    PolyMatrix A(ring, n, Mp.nrels());
    std::vector<int64_t> degs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        degs[static_cast<size_t>(i)] = Mp.gen_degrees()[static_cast<size_t>(rowperm[static_cast<size_t>(i)])];
        for (int j = 0; j < Mp.nrels(); ++j) A.at(i, j) = Mp.relations().at(rowperm[static_cast<size_t>(i)], j);
    }
    // monic columns (first nonzero entry), then sort by (degree, printed form)
    std::vector<std::pair<std::pair<int64_t, std::string>, int>> keys;
    for (int j = 0; j < A.cols(); ++j) {
        for (int i = 0; i < n; ++i) {
            if (!A.at(i, j).is_zero()) {
                uint64_t inv = F.inv(A.at(i, j).lead().c);
                for (int t = 0; t < n; ++t) A.at(t, j) = scale(A.at(t, j), inv);
                break;
            }
        }
        std::string key;
        for (int i = 0; i < n; ++i) key += A.at(i, j).str() + "|";
        keys.push_back({{column_degree(A, j, degs, Mp.scale()), key}, j});
    }
    std::sort(keys.begin(), keys.end());
    std::vector<int> colperm;
    for (auto& k : keys) colperm.push_back(k.second);
    return ModulePresentation(M.ring(), std::move(degs), A.select_cols(colperm), Mp.scale());
}

bool presentations_match(const ModulePresentation& A, const ModulePresentation& B) {
    int64_t s = lcm64(A.scale(), B.scale());
    ModulePresentation ca = canonical_form(A.rescaled(s));
    ModulePresentation cb = canonical_form(B.rescaled(s));
    return ca.gen_degrees() == cb.gen_degrees() && ca.relations() == cb.relations();
}

} // namespace frob
