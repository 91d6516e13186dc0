#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fitring/coeff.hpp"

namespace fitring {

// Dense matrix over CoeffElem, row-major.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<CoeffElem> a;

    Matrix() = default;
    Matrix(const Cfg& cfg, std::size_t r, std::size_t c);

    CoeffElem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const CoeffElem& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    std::vector<CoeffElem> col(std::size_t j) const;
    void set_col(std::size_t j, const std::vector<CoeffElem>& v);
    static Matrix from_cols(const Cfg& cfg, std::size_t rows,
                            const std::vector<std::vector<CoeffElem>>& cols);

    bool operator==(const Matrix& o) const;
};

// Elementary divisor valuations e_1 <= ... <= e_min(r,c), each in [0, nprec];
// nprec encodes a divisor that vanishes at this precision.
std::vector<unsigned> snf_valuations(const Cfg& cfg, Matrix m);

// Columns generating {x : m x = 0} over A/p^nprec.
Matrix kernel_basis(const Cfg& cfg, Matrix m);

// Rank over F_q of the entrywise residue of m.
unsigned mod_p_rank(const Cfg& cfg, const Matrix& m);

// A finitely generated A-submodule of A^n, in Howell-style canonical column
// form: pivot rows strictly increasing, pivot entries exactly p^v, columns
// zero at earlier pivot rows, entries at later pivot rows reduced mod p^v of
// that pivot, and the span closed under multiplication by p (annihilator
// columns included). Two lattices are equal iff their canonical forms match.
class Lattice {
  public:
    Lattice(Cfg cfg, std::size_t ambient, Matrix gens);

    const Cfg& cfg() const { return cfg_; }
    std::size_t ambient() const { return ambient_; }
    const Matrix& gens() const { return gens_; }
    const Matrix& canon() const { return canon_; }
    const std::vector<std::pair<std::size_t, unsigned>>& pivots() const { return pivots_; }

    bool contains_vector(std::vector<CoeffElem> v) const;
    bool contains(const Lattice& other) const;
    bool operator==(const Lattice& o) const;

    // log_p of the number of elements of the span inside (A/p^nprec)^n
    unsigned size_log_p() const;

    std::vector<std::vector<CoeffElem>> basis_cols() const; // canonical columns

  private:
    Cfg cfg_;
    std::size_t ambient_;
    Matrix gens_;
    Matrix canon_;
    std::vector<std::pair<std::size_t, unsigned>> pivots_; // (row, valuation) per column
};

// log_p #(A^n / L), via SNF of the original generators. Throws
// PrecisionExhausted unless all n elementary divisors are < nprec.
unsigned cokernel_cardinality(std::size_t n, const Lattice& L);

// log_p #(L_big / L_small); requires containment.
unsigned quotient_cardinality(const Lattice& big, const Lattice& small);

Lattice lattice_sum(const Lattice& a, const Lattice& b);
Lattice lattice_intersection(const Lattice& a, const Lattice& b);

} // namespace fitring
