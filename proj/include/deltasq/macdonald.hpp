#pragma once

#include "deltasq/symfunc.hpp"

#include <memory>

namespace deltasq {

// Number of worker threads used when building Macdonald tables and by the
// verification campaigns. Results never depend on this.
void set_parallelism(int threads);
int parallelism();

// Monomial expansions of the modified Macdonald polynomials of one degree,
// computed by the combinatorial filling formula and kept immutable.
class MacdonaldBasis {
public:
    explicit MacdonaldBasis(int degree);

    int degree() const { return degree_; }
    const std::vector<Partition>& partitions() const { return parts_; }
    const SymFunc& htilde(const Partition& mu) const;
    const std::vector<QTRat>& htilde_pcoords(const Partition& mu) const;

    // <H_la, H_mu>_* == w_mu delta_{la,mu}; diagonal-only when full is false.
    bool validate_orthogonality(bool full, std::string* detail = nullptr) const;

    // Used by the disk cache (see cache_* below).
    static MacdonaldBasis from_table(int degree, std::vector<SymFunc> table);

private:
    MacdonaldBasis() = default;
    int degree_ = 0;
    std::vector<Partition> parts_;
    std::vector<SymFunc> table_;           // monomial expansions, canonical order
    std::vector<std::vector<QTRat>> pco_;  // power-sum coordinates
    void finish();
};

// Process-wide bound for on-demand Macdonald tables.
inline constexpr int kMacdonaldDegreeBound = 8;

// Shared immutable basis for one degree; built (or loaded from the cache
// directory, when configured) on first use.
const MacdonaldBasis& macdonald_basis(int degree);

// When set, macdonald_basis() first tries to load validated tables from
// this directory. Empty string disables.
void set_cache_dir(const std::string& dir);
std::string cache_dir();

SymFunc htilde(const Partition& mu);

// Star scalar product <f,g>_* = <omega phi f, g>.
QTRat star_inner(const SymFunc& f, const SymFunc& g);

// Coordinates of a symmetric function in the Macdonald basis.
struct DeltaExpansion {
    int degree = 0;
    std::map<Partition, QTRat> coeffs;
};

DeltaExpansion macdonald_expand(const SymFunc& f);
SymFunc reconstruct(const DeltaExpansion& e);

enum class EigenFamily { e, h };

// Delta_f g (or Delta'_f g when primed) for f = e_k / h_k.
SymFunc delta_op(EigenFamily fam, int k, const SymFunc& g, bool primed);
SymFunc nabla(const SymFunc& g);
SymFunc pi_op(const SymFunc& g, bool inverse);

// Pieri coefficients: h_k^perp H_mu = sum_{nu subset_k mu} c^{(k)}_{mu nu} H_nu
// and e_k[X/M] H_nu = sum_{mu supset_k nu} d^{(k)}_{mu nu} H_mu.
std::map<Partition, QTRat> pieri_c_all(int k, const Partition& mu);  // keyed by nu
std::map<Partition, QTRat> pieri_d_all(int k, const Partition& nu);  // keyed by mu
QTRat pieri_c(int k, const Partition& mu, const Partition& nu);
QTRat pieri_d(int k, const Partition& mu, const Partition& nu);

// E_{n,k} from the (z;q)_k expansion of e_n[X(1-z)/(1-q)].
SymFunc enk(int n, int k);

bool reciprocity_check(const Partition& alpha, const Partition& beta);
bool cauchy_check(int n);

// Disk cache management. Files are JSON, one per degree, with a stored
// integrity value <H_mu, H_mu>_* per partition.
void cache_build(const std::string& dir, int max_degree);
struct CacheCheck {
    bool ok = true;
    bool empty = true;
    std::string detail;
};
CacheCheck cache_check(const std::string& dir, int max_degree);
void cache_clear(const std::string& dir);

} // namespace deltasq
