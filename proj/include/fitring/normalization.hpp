#pragma once

#include "fitring/groupring.hpp"

namespace fitring {

// Element of the normalization R~ = A x A[zeta_p], realized as
// A[T]/(T) x A[T]/(N) with N = ((1+T)^p - 1)/T. The first component is a
// single A-coordinate, the second has p-1 coordinates in the basis
// 1, T, ..., T^(p-2).
class TildeElem {
  public:
    TildeElem() = default;
    TildeElem(Cfg cfg, CoeffElem a_part, std::vector<CoeffElem> z_part);
    static TildeElem zero(const Cfg& cfg);
    static TildeElem one(const Cfg& cfg);
    static TildeElem e1(const Cfg& cfg); // idempotent (1, 0)

    const Cfg& cfg() const { return cfg_; }
    const CoeffElem& a_part() const { return a_; }
    const std::vector<CoeffElem>& z_part() const { return z_; }
    bool is_zero() const;

    TildeElem operator+(const TildeElem& o) const;
    TildeElem operator-(const TildeElem& o) const;
    TildeElem operator*(const TildeElem& o) const;
    bool operator==(const TildeElem& o) const;

    // flat A-coordinates: [a, z_0, ..., z_{p-2}]
    std::vector<CoeffElem> coords() const;
    static TildeElem from_coords(const Cfg& cfg, const std::vector<CoeffElem>& v);

  private:
    Cfg cfg_;
    CoeffElem a_;
    std::vector<CoeffElem> z_;
};

// eta(r) = (r mod T, r mod N); an injective ring morphism R -> R~.
TildeElem eta(const GroupRingElem& r);

// vartheta(r1, r2) = r1 - r2 mod m; returned as a residue-field element
// (coordinates mod p). Zero on the image of eta.
CoeffElem vartheta(const TildeElem& x);

// T and e1 acting on flat tilde coordinate vectors of rank p*t.
std::vector<CoeffElem> tilde_t_apply(const Cfg& cfg, const std::vector<CoeffElem>& v);
std::vector<CoeffElem> tilde_e1_apply(const Cfg& cfg, const std::vector<CoeffElem>& v);

// An R~-submodule of R~^t as an A-lattice in flat tilde coordinates.
class TildeLattice {
  public:
    TildeLattice(Lattice lat, std::size_t slots);
    const Lattice& lat() const { return lat_; }
    std::size_t slots() const { return slots_; }
    bool operator==(const TildeLattice& o) const { return lat_ == o.lat_; }

  private:
    Lattice lat_;
    std::size_t slots_;
};

// Smallest T/e1-stable lattice containing the given columns (the R~-span).
TildeLattice tilde_closure(const Cfg& cfg, std::size_t slots,
                           const std::vector<std::vector<CoeffElem>>& cols);

TildeLattice tilde_ideal_from_generators(const Cfg& cfg, const std::vector<TildeElem>& gs);

// J * R~ inside R~ (extension of scalars along eta).
TildeLattice extend_ideal(const RIdeal& J);

// The eta-image of J as a plain lattice (no R~-closure).
Lattice eta_image_lattice(const RIdeal& J);

// Stability predicate: the extension adds nothing, i.e. J is
// already an R~-ideal.
bool is_tilde_stable(const RIdeal& J);

unsigned tilde_quotient_card(const TildeLattice& L); // log_p #(R~^t / L)

} // namespace fitring
