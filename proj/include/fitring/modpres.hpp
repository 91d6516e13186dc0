#pragma once

#include <cstdint>
#include <map>

#include "fitring/normalization.hpp"

namespace fitring {

// A finite R-module M = R^t / (column span of rel). The columns always
// include p^e times each standard basis vector, which makes M finite by
// construction and bounds every elementary divisor below the precision.
struct Presentation {
    Cfg cfg;
    unsigned t = 0;
    unsigned kill_exp = 0;
    std::vector<std::vector<GroupRingElem>> cols; // each column has t entries

    std::size_t ncols() const { return cols.size(); }
};

// Builds a presentation, appending any missing p^e-kill columns and
// checking the precision invariant Nprec >= e*t + 1.
Presentation make_presentation(const Cfg& cfg, unsigned t,
                               std::vector<std::vector<GroupRingElem>> cols, unsigned kill_exp);

Presentation lift_presentation(const Presentation& p, const Cfg& target);

// The kernel K of R^t ->> M as an A-lattice of ambient rank p*t (T-closure
// of the relation columns).
Lattice relation_lattice(const Presentation& P);

unsigned module_cardinality(const Presentation& P); // log_p #M

// Ideal generated by all t x t minors of the relation matrix. Throws
// CapacityExceeded if C(s, t) exceeds minor_cap.
RIdeal fitting_ideal(const Presentation& P, std::uint64_t minor_cap = 100000);

unsigned kernel_min_gens(const Presentation& P); // dim_Fq K/mK

// Determinant over R by division-free cofactor expansion.
GroupRingElem det_r(const Cfg& cfg, const std::vector<std::vector<GroupRingElem>>& m);

struct BaseChange {
    TildeLattice h;          // H = R~ K inside R~^t
    Lattice k_eta;           // eta-image of K (no closure)
    unsigned tilde_card = 0; // log_p #M~
};
BaseChange base_change(const Presentation& P);

unsigned hk_quotient(const Presentation& P); // log_p #(H/K)

struct PsiCounts {
    unsigned ker_log = 0;   // log_p #ker(psi), via TM /\ NM
    unsigned coker_log = 0; // log_p #coker(psi) = log_p #M/mM
    bool ker_killed_by_m = true;
};
PsiCounts psi_counts(const Presentation& P);

unsigned m_quotient_card(const Presentation& P); // log_p #(M/mM)

Presentation direct_sum(const Presentation& a, const Presentation& b);

// Fitting ideal of the base-changed presentation, computed over R~
// (componentwise determinants); used against extend_ideal(Fit_R(M)).
TildeLattice tilde_fitting_ideal(const Presentation& P, std::uint64_t minor_cap = 100000);

// Everything the top-level checks need about one module, plus pass/fail
// flags for each verified identity.
struct ModuleReport {
    unsigned t = 0;
    std::size_t s = 0;
    unsigned card_log_p = 0;
    unsigned fit_quot_log_p = 0;
    bool principal = false;
    unsigned dim_k_mod_mk = 0;
    unsigned tilde_card_log_p = 0;
    unsigned hk_log_p = 0;
    std::map<std::string, bool> flags;

    bool equality() const { return card_log_p == fit_quot_log_p; }
    bool all_flags_pass() const;
};

} // namespace fitring
