#pragma once

#include <cstdint>
#include <vector>

#include "fitring/modpres.hpp"

namespace fitring {

// G as a product of cyclic groups C_{n_1} x ... x C_{n_k}.
struct AbelianGroup {
    std::vector<std::uint64_t> cyclic_orders;
    std::uint64_t order() const;
};

// One factor A_f (residue degree f) or A_f[C_p] of Z_p[G].
struct DecompFactor {
    unsigned f = 1;
    bool has_c = false;
    unsigned multiplicity = 1;
};

// Orbit sizes of chi -> chi^p on the dual of H (coordinatewise
// multiplication by p); requires gcd(p, #H) = 1. Sorted ascending.
std::vector<unsigned> frobenius_orbits(const AbelianGroup& H, std::uint64_t p);

// Factors of Z_p[G] for p^2 not dividing #G. Aggregated by (f, has_c).
std::vector<DecompFactor> decompose_group_ring(const AbelianGroup& G, std::uint64_t p);

// sum of f * (p or 1) * multiplicity over the factors
std::uint64_t decomposition_order(const std::vector<DecompFactor>& fs, std::uint64_t p);

// Both sides of the main inequality multiply across factors; reports must
// come one per factor (counting multiplicity).
bool corollary_check(const std::vector<DecompFactor>& fs, const std::vector<ModuleReport>& reports);

// PID path of a module over A_f alone: #L = #A/Fit_A(L) holds on the nose,
// so the report is always an equality with principal Fitting ideal.
ModuleReport analyze_pid_module(const Cfg& cfg, const Matrix& rel);

} // namespace fitring
