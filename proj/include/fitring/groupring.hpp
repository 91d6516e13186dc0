#pragma once

#include "fitring/linalg.hpp"

namespace fitring {

// Element of R = A[C] identified with A[T]/((1+T)^p - 1) via c = 1 + T.
// Coordinates are in the A-basis 1, T, ..., T^(p-1).
class GroupRingElem {
  public:
    GroupRingElem() = default;
    GroupRingElem(Cfg cfg, std::vector<CoeffElem> coords); // size must equal p
    static GroupRingElem zero(const Cfg& cfg);
    static GroupRingElem one(const Cfg& cfg);
    static GroupRingElem t(const Cfg& cfg);               // the element T = c - 1
    static GroupRingElem c(const Cfg& cfg);               // group generator 1 + T
    static GroupRingElem scalar(const Cfg& cfg, const CoeffElem& a);
    static GroupRingElem from_int(const Cfg& cfg, long long v);
    static GroupRingElem from_coords(const Cfg& cfg, std::vector<CoeffElem> v);

    const Cfg& cfg() const { return cfg_; }
    const std::vector<CoeffElem>& coords() const { return c_; }
    bool is_zero() const;

    GroupRingElem operator+(const GroupRingElem& o) const;
    GroupRingElem operator-(const GroupRingElem& o) const;
    GroupRingElem operator*(const GroupRingElem& o) const;
    GroupRingElem operator-() const;
    bool operator==(const GroupRingElem& o) const;

    GroupRingElem lift_to(const Cfg& target) const;

  private:
    Cfg cfg_;
    std::vector<CoeffElem> c_;
};

// Regular representation: column j holds the coordinates of a * T^j.
Matrix mult_matrix(const GroupRingElem& a);

// An ideal of R stored as a T-stable A-lattice of ambient rank p.
class RIdeal {
  public:
    explicit RIdeal(Lattice lat); // verifies T-stability
    const Lattice& lat() const { return lat_; }
    const Cfg& cfg() const { return lat_.cfg(); }
    bool operator==(const RIdeal& o) const { return lat_ == o.lat_; }

  private:
    Lattice lat_;
};

RIdeal ideal_from_generators(const Cfg& cfg, const std::vector<GroupRingElem>& gs);
RIdeal maximal_ideal(const Cfg& cfg); // m = (p, T)
RIdeal ideal_mul(const RIdeal& a, const RIdeal& b);

unsigned ideal_quotient_card(const RIdeal& J); // log_p #(R/J)
unsigned min_generators(const RIdeal& J);      // dim_Fq J/mJ
bool is_principal(const RIdeal& J);

// T acting on an A-coordinate vector of rank p*t (t group-ring slots).
std::vector<CoeffElem> t_apply(const Cfg& cfg, const std::vector<CoeffElem>& v);

} // namespace fitring
