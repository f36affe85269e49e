#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "frob/quotient.hpp"

namespace frob {

struct BettiTable {
    int64_t scale = 1;
    int max_i = 0;
    std::map<std::pair<int, int64_t>, uint64_t> b; // (homological degree, scaled internal degree) -> count

    uint64_t total(int i) const;
    bool operator==(const BettiTable& o) const { return scale == o.scale && b == o.b; }
    std::string text() const;
};

// Graded cokernel of a matrix over R.  Generator degrees are integers in a
// grading scaled by `scale` (true degree = stored/scale); relation entries are
// normal forms mod the defining ideal, columns homogeneous, zero columns dropped.
class ModulePresentation {
public:
    ModulePresentation() = default;
    ModulePresentation(QRingPtr R, std::vector<int64_t> gen_degs, PolyMatrix rel, int64_t scale = 1);

    static ModulePresentation free_module(QRingPtr R, std::vector<int64_t> gen_degs, int64_t scale = 1);
    static ModulePresentation zero(QRingPtr R);
    // R/J with generator in degree 0; relation columns are J's generators
    static ModulePresentation cyclic(QRingPtr R, const std::vector<Poly>& rels);
    // the residue field R/m
    static ModulePresentation residue_field(QRingPtr R);

    const QRingPtr& ring() const { return R_; }
    int ngens() const { return static_cast<int>(gen_degs_.size()); }
    int nrels() const { return rel_.cols(); }
    const std::vector<int64_t>& gen_degrees() const { return gen_degs_; }
    const std::vector<int64_t>& col_degrees() const { return col_degs_; }
    const PolyMatrix& relations() const { return rel_; }
    int64_t scale() const { return scale_; }

    bool is_presented_free() const { return rel_.cols() == 0; }

    // leading module of (relations + I*F): minimal monomial generators per component
    const std::vector<std::vector<Monomial>>& lead_module() const;

    int64_t hf(int64_t d) const; // Hilbert function at scaled degree d
    std::vector<int64_t> hf_range(int64_t lo, int64_t hi) const;
    HilbertSeries hilbert_series() const;

    ModulePresentation rescaled(int64_t new_scale) const; // new_scale must be a multiple

    std::string describe() const;

private:
    QRingPtr R_;
    std::vector<int64_t> gen_degs_;
    int64_t scale_ = 1;
    PolyMatrix rel_;
    std::vector<int64_t> col_degs_;

    struct Cache {
        std::mutex mu;
        bool lead_done = false;
        std::vector<std::vector<Monomial>> lead;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

class FreeResolution {
public:
    QRingPtr R;
    int64_t scale = 1;
    int length = 0;                          // differentials d_1..d_length
    std::vector<PolyMatrix> d;               // d[i] is d_{i+1}: F_{i+1} -> F_i
    std::vector<std::vector<int64_t>> degs;  // degs[i] = generator degrees of F_i

    int betti(int i) const {
        return i <= static_cast<int>(degs.size()) - 1 ? static_cast<int>(degs[static_cast<size_t>(i)].size()) : 0;
    }
    BettiTable betti_table() const;
    // largest s with beta_s > 0; nullopt when beta_i > 0 for all i <= length (pd possibly infinite)
    std::optional<int> finite_pd() const;
};

struct MinimalizeInfo {
    std::vector<int> kept_rows; // surviving generator indices of the input presentation
};

// Two-phase minimalization: prune unit relation entries (Nakayama), then prune
// redundant relation columns against their own syzygies.
ModulePresentation minimal_presentation(const ModulePresentation& M, MinimalizeInfo* info = nullptr);

bool is_zero_module(const ModulePresentation& M);
bool is_free_module(const ModulePresentation& M); // via minimal presentation

int default_resolution_cap(const QuotientRing& R);
FreeResolution free_resolution(const ModulePresentation& M, int L);

ModulePresentation transpose(const ModulePresentation& M);
// syzygy module: image of d_i presented as coker(d_{i+1})
ModulePresentation syzygy_module(const ModulePresentation& M, int i);

ModulePresentation dual_module(const ModulePresentation& M);
ModulePresentation hom_module(const ModulePresentation& M, const ModulePresentation& N);
ModulePresentation tensor_module(const ModulePresentation& M, const ModulePresentation& N);
// Ext^i(M, N) through a free resolution of M; i < L required
ModulePresentation ext_module(int i, const ModulePresentation& M, const ModulePresentation& N, int L = -1);

int64_t depth(const ModulePresentation& M);
int64_t module_dim(const ModulePresentation& M);
bool is_mcm(const ModulePresentation& M);

struct TorsionResult {
    ModulePresentation torsion;
    PolyMatrix embedding; // torsion generators in the coordinates of M's generators
    ModulePresentation quotient;
};
TorsionResult torsion_submodule(const ModulePresentation& M);

Ideal fitting_ideal(const ModulePresentation& M, int r);
// J(M) = sum_r Fitt_r(M) * Ann(Fitt_{r-1}(M)); vanishing locus = non-free locus
Ideal non_free_locus(const ModulePresentation& M);

struct LocalRank {
    std::string prime; // printable generators
    std::optional<int> rank; // nullopt = not free at this prime
};
struct LocalRankReport {
    std::vector<LocalRank> at;
    bool has_constant_rank = false;
    std::optional<int> rank; // set when constant
};
LocalRankReport local_rank_at_min_primes(const ModulePresentation& M);

// --- helpers shared with the Frobenius layer ---

// columns generating {x in P^src : B x = 0 in coker(relsY) over R}; relsY may
// be empty (kernel into a free module).  Entries are reduced mod I and zero
// columns dropped.
PolyMatrix kernel_into_coker(const PolyMatrix& B, const PolyMatrix& relsY,
                             const std::vector<int64_t>& target_degs, const std::vector<int64_t>& src_degs,
                             int64_t scale, const QuotientRing& R);

// canonical normalization for literal comparison: columns sorted by (degree,
// entries), rows by generator degree
ModulePresentation canonical_form(const ModulePresentation& M);
bool presentations_match(const ModulePresentation& A, const ModulePresentation& B);

} // namespace frob
