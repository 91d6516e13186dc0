#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "fitring/common.hpp"

namespace fitring {

// The coefficient ring A truncated at precision p^nprec: a Galois ring of
// characteristic p^nprec with residue field F_q, q = p^d. Elements are
// polynomials of degree < d in a root of the monic polynomial h, whose
// reduction mod p is irreducible over F_p.
struct RingConfig {
    std::uint64_t p = 0;
    unsigned d = 0;
    unsigned nprec = 0;
    std::vector<std::uint64_t> h; // monic, degree d, coefficients low-to-high
    std::uint64_t pn = 0;         // p^nprec

    // Validates everything (primality of p, irreducibility of h mod p,
    // p^nprec fitting in 64 bits) and fills derived fields. Passing an
    // empty h picks a default modulus: x for d = 1, otherwise the first
    // irreducible monic polynomial of degree d in lexicographic order.
    static std::shared_ptr<const RingConfig> make(std::uint64_t p, unsigned d, unsigned nprec,
                                                  std::vector<std::uint64_t> h = {});

    std::uint64_t ppow(unsigned e) const; // p^e, e <= nprec
    bool same(const RingConfig& o) const;
};

using Cfg = std::shared_ptr<const RingConfig>;

// Lift an element's integer coordinates into a config with the same p, d, h
// but larger nprec (used by the precision-retry path).
Cfg lift_config(const Cfg& cfg, unsigned new_nprec);

class CoeffElem {
  public:
    CoeffElem() = default;
    CoeffElem(Cfg cfg, std::vector<std::uint64_t> coords); // coords reduced mod p^nprec
    static CoeffElem from_int(const Cfg& cfg, long long v);
    static CoeffElem zero(const Cfg& cfg);
    static CoeffElem one(const Cfg& cfg);

    const Cfg& cfg() const { return cfg_; }
    const std::vector<std::uint64_t>& coords() const { return c_; }

    bool is_zero() const;

    CoeffElem operator+(const CoeffElem& o) const;
    CoeffElem operator-(const CoeffElem& o) const;
    CoeffElem operator*(const CoeffElem& o) const;
    CoeffElem operator-() const;
    bool operator==(const CoeffElem& o) const;

    // Largest v with p^v dividing every coordinate, capped at nprec.
    // valuation() == nprec iff the element is zero at this precision.
    unsigned valuation() const;

    // Exact division by p^v; requires valuation() >= v.
    CoeffElem shift_down(unsigned v) const;

    // Coordinatewise floor division by p^v (representative-dependent;
    // used for canonical reduction, not a ring operation).
    CoeffElem floor_div_ppow(unsigned v) const;

    CoeffElem mul_ppow(unsigned v) const; // multiply by the scalar p^v

    CoeffElem unit_inverse() const; // throws NotAUnit if valuation() > 0

    // Reduction mod p: d integers in [0, p). Zero iff valuation() >= 1.
    std::vector<std::uint64_t> residue() const;

    CoeffElem lift_to(const Cfg& target) const; // same integer coordinates, larger nprec

  private:
    Cfg cfg_;
    std::vector<std::uint64_t> c_;
};

bool same_cfg(const Cfg& a, const Cfg& b);
void require_same_cfg(const Cfg& a, const Cfg& b);

} // namespace fitring
