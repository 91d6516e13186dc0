#include "fitring/linalg.hpp"

#include <algorithm>
#include <deque>

namespace fitring {

Matrix::Matrix(const Cfg& cfg, std::size_t r, std::size_t c)
    : rows(r), cols(c), a(r * c, CoeffElem::zero(cfg)) {}

std::vector<CoeffElem> Matrix::col(std::size_t j) const {
    std::vector<CoeffElem> v;
    v.reserve(rows);
    for (std::size_t i = 0; i < rows; ++i) v.push_back(at(i, j));
    return v;
}

void Matrix::set_col(std::size_t j, const std::vector<CoeffElem>& v) {
    for (std::size_t i = 0; i < rows; ++i) at(i, j) = v[i];
}

Matrix Matrix::from_cols(const Cfg& cfg, std::size_t rows,
                         const std::vector<std::vector<CoeffElem>>& cols) {
    Matrix m(cfg, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!(a[k] == o.a[k])) return false;
    return true;
}

namespace {

using Col = std::vector<CoeffElem>;

bool col_is_zero(const Col& c) {
    return std::all_of(c.begin(), c.end(), [](const CoeffElem& x) { return x.is_zero(); });
}

void col_sub_scaled(Col& c, const Col& b, const CoeffElem& w) {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] - b[i] * w;
}

Col col_scale(const Col& c, const CoeffElem& w) {
    Col r = c;
    for (auto& x : r) x = x * w;
    return r;
}

struct HowellResult {
    std::vector<Col> cols;
    std::vector<std::pair<std::size_t, unsigned>> pivots;
};

// Howell-style column echelon over the chain ring A/p^nprec. Pivot choice:
// minimal valuation, ties broken by column order, so the sweep is
// deterministic. Annihilator shifts p^(nprec-v) * pivot are fed back into the
// worklist so membership is decidable by reduction.
HowellResult howell(const Cfg& cfg, std::size_t n, const std::vector<Col>& input) {
    const unsigned N = cfg->nprec;
    std::deque<Col> active;
    for (const auto& c : input)
        if (!col_is_zero(c)) active.push_back(c);

    std::vector<Col> assigned;
    std::vector<std::pair<std::size_t, unsigned>> pivots;

    for (std::size_t r = 0; r < n; ++r) {
        // pick the active column with minimal valuation at row r
        std::size_t best = active.size();
        unsigned bestv = N;
        for (std::size_t k = 0; k < active.size(); ++k) {
            unsigned v = active[k][r].valuation();
            if (v < bestv) {
                bestv = v;
                best = k;
            }
        }
        if (best == active.size()) continue; // no pivot in this row

        Col piv = active[best];
        active.erase(active.begin() + static_cast<long>(best));
        const unsigned v = bestv;
        CoeffElem u = piv[r].shift_down(v); // unit part
        piv = col_scale(piv, u.unit_inverse());

        for (auto& c : active) {
            if (c[r].is_zero()) continue;
            col_sub_scaled(c, piv, c[r].shift_down(v));
        }
        active.erase(std::remove_if(active.begin(), active.end(), col_is_zero), active.end());

        if (v > 0) {
            Col extra = piv;
            for (auto& x : extra) x = x.mul_ppow(N - v);
            if (!col_is_zero(extra)) active.push_back(extra);
        }
        assigned.push_back(std::move(piv));
        pivots.emplace_back(r, v);
    }

    // reduce entries at later pivot rows to canonical residues mod p^v
    for (std::size_t i = 0; i < assigned.size(); ++i) {
        const std::size_t ri = pivots[i].first;
        const unsigned vi = pivots[i].second;
        for (std::size_t j = 0; j < i; ++j) {
            CoeffElem q = assigned[j][ri].floor_div_ppow(vi);
            if (!q.is_zero()) col_sub_scaled(assigned[j], assigned[i], q);
        }
    }

    return {std::move(assigned), std::move(pivots)};
}

} // namespace

Lattice::Lattice(Cfg cfg, std::size_t ambient, Matrix gens)
    : cfg_(std::move(cfg)), ambient_(ambient), gens_(std::move(gens)) {
    if (gens_.rows != ambient_) throw std::invalid_argument("generator rows != ambient rank");
    std::vector<Col> cols;
    cols.reserve(gens_.cols);
    for (std::size_t j = 0; j < gens_.cols; ++j) cols.push_back(gens_.col(j));
    auto hw = howell(cfg_, ambient_, cols);
    canon_ = Matrix::from_cols(cfg_, ambient_, hw.cols);
    pivots_ = std::move(hw.pivots);
}

bool Lattice::contains_vector(std::vector<CoeffElem> v) const {
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        const auto [r, val] = pivots_[k];
        CoeffElem q = v[r].floor_div_ppow(val);
        if (!q.is_zero())
            for (std::size_t i = 0; i < ambient_; ++i) v[i] = v[i] - canon_.at(i, k) * q;
    }
    return std::all_of(v.begin(), v.end(), [](const CoeffElem& x) { return x.is_zero(); });
}

bool Lattice::contains(const Lattice& other) const {
    if (ambient_ != other.ambient_) throw ConfigMismatch("ambient rank mismatch");
    require_same_cfg(cfg_, other.cfg_);
    for (std::size_t j = 0; j < other.canon_.cols; ++j)
        if (!contains_vector(other.canon_.col(j))) return false;
    return true;
}

bool Lattice::operator==(const Lattice& o) const {
    return ambient_ == o.ambient_ && same_cfg(cfg_, o.cfg_) && canon_ == o.canon_;
}

unsigned Lattice::size_log_p() const {
    unsigned s = 0;
    for (const auto& [r, v] : pivots_) s += cfg_->nprec - v;
    return s * cfg_->d;
}

std::vector<std::vector<CoeffElem>> Lattice::basis_cols() const {
    std::vector<Col> out;
    out.reserve(canon_.cols);
    for (std::size_t j = 0; j < canon_.cols; ++j) out.push_back(canon_.col(j));
    return out;
}

// ---- SNF over the chain ring by valuation-pivot elimination ----

namespace {

struct SnfState {
    std::vector<unsigned> divisors;
    Matrix V; // accumulated column transform (right multiplication), optional
    bool track = false;
};

SnfState snf_impl(const Cfg& cfg, Matrix m, bool track) {
    const unsigned N = cfg->nprec;
    const std::size_t R = m.rows, C = m.cols;
    SnfState st;
    st.track = track;
    if (track) {
        st.V = Matrix(cfg, C, C);
        for (std::size_t j = 0; j < C; ++j) st.V.at(j, j) = CoeffElem::one(cfg);
    }
    const std::size_t steps = std::min(R, C);
    for (std::size_t k = 0; k < steps; ++k) {
        // global minimum valuation in the trailing submatrix
        unsigned bestv = N;
        std::size_t bi = k, bj = k;
        for (std::size_t i = k; i < R; ++i)
            for (std::size_t j = k; j < C; ++j) {
                unsigned v = m.at(i, j).valuation();
                if (v < bestv) {
                    bestv = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bestv == N) {
            for (std::size_t k2 = k; k2 < steps; ++k2) st.divisors.push_back(N);
            return st;
        }
        // move pivot to (k, k)
        if (bi != k)
            for (std::size_t j = 0; j < C; ++j) std::swap(m.at(k, j), m.at(bi, j));
        if (bj != k) {
            for (std::size_t i = 0; i < R; ++i) std::swap(m.at(i, k), m.at(i, bj));
            if (track)
                for (std::size_t i = 0; i < C; ++i) std::swap(st.V.at(i, k), st.V.at(i, bj));
        }
        const unsigned v = bestv;
        CoeffElem uinv = m.at(k, k).shift_down(v).unit_inverse();
        for (std::size_t i = 0; i < R; ++i) m.at(i, k) = m.at(i, k) * uinv;
        if (track)
            for (std::size_t i = 0; i < C; ++i) st.V.at(i, k) = st.V.at(i, k) * uinv;
        // clear row k
        for (std::size_t j = k + 1; j < C; ++j) {
            if (m.at(k, j).is_zero()) continue;
            CoeffElem w = m.at(k, j).shift_down(v);
            for (std::size_t i = 0; i < R; ++i) m.at(i, j) = m.at(i, j) - m.at(i, k) * w;
            if (track)
                for (std::size_t i = 0; i < C; ++i)
                    st.V.at(i, j) = st.V.at(i, j) - st.V.at(i, k) * w;
        }
        // clear column k
        for (std::size_t i = k + 1; i < R; ++i) {
            if (m.at(i, k).is_zero()) continue;
            CoeffElem w = m.at(i, k).shift_down(v);
            for (std::size_t j = 0; j < C; ++j) m.at(i, j) = m.at(i, j) - m.at(k, j) * w;
        }
        st.divisors.push_back(v);
    }
    return st;
}

} // namespace

std::vector<unsigned> snf_valuations(const Cfg& cfg, Matrix m) {
    return snf_impl(cfg, std::move(m), false).divisors;
}

Matrix kernel_basis(const Cfg& cfg, Matrix m) {
    const std::size_t C = m.cols;
    const unsigned N = cfg->nprec;
    SnfState st = snf_impl(cfg, std::move(m), true);
    std::vector<std::vector<CoeffElem>> gens;
    for (std::size_t k = 0; k < C; ++k) {
        unsigned e = k < st.divisors.size() ? st.divisors[k] : N;
        if (e == 0) continue; // annihilator is p^N = 0
        std::vector<CoeffElem> col = st.V.col(k);
        if (e < N)
            for (auto& x : col) x = x.mul_ppow(N - e);
        gens.push_back(std::move(col));
    }
    return Matrix::from_cols(cfg, C, gens);
}

unsigned mod_p_rank(const Cfg& cfg, const Matrix& m) {
    auto divs = snf_valuations(cfg, m);
    unsigned r = 0;
    for (unsigned e : divs)
        if (e == 0) ++r;
    return r;
}

unsigned cokernel_cardinality(std::size_t n, const Lattice& L) {
    auto divs = snf_valuations(L.cfg(), L.gens());
    const unsigned N = L.cfg()->nprec;
    if (divs.size() < n)
        throw PrecisionExhausted("cokernel: fewer generators than ambient rank");
    unsigned sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (divs[i] >= N)
            throw PrecisionExhausted("cokernel: elementary divisor at precision cap");
        sum += divs[i];
    }
    return sum * L.cfg()->d;
}

unsigned quotient_cardinality(const Lattice& big, const Lattice& small) {
    if (!big.contains(small)) throw NotContained("quotient: lattices not nested");
    return big.size_log_p() - small.size_log_p();
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
    if (a.ambient() != b.ambient()) throw ConfigMismatch("ambient rank mismatch");
    require_same_cfg(a.cfg(), b.cfg());
    std::vector<std::vector<CoeffElem>> cols = a.basis_cols();
    for (auto& c : b.basis_cols()) cols.push_back(std::move(c));
    return Lattice(a.cfg(), a.ambient(), Matrix::from_cols(a.cfg(), a.ambient(), cols));
}

Lattice lattice_intersection(const Lattice& a, const Lattice& b) {
    if (a.ambient() != b.ambient()) throw ConfigMismatch("ambient rank mismatch");
    require_same_cfg(a.cfg(), b.cfg());
    const Cfg& cfg = a.cfg();
    const std::size_t n = a.ambient();
    auto ca = a.basis_cols();
    auto cb = b.basis_cols();
    // solve B_a x = B_b y; kernel of [B_a | -B_b] projected through B_a
    Matrix stacked(cfg, n, ca.size() + cb.size());
    for (std::size_t j = 0; j < ca.size(); ++j) stacked.set_col(j, ca[j]);
    for (std::size_t j = 0; j < cb.size(); ++j) {
        std::vector<CoeffElem> neg = cb[j];
        for (auto& x : neg) x = -x;
        stacked.set_col(ca.size() + j, neg);
    }
    Matrix ker = kernel_basis(cfg, stacked);
    std::vector<std::vector<CoeffElem>> gens;
    for (std::size_t k = 0; k < ker.cols; ++k) {
        std::vector<CoeffElem> v(n, CoeffElem::zero(cfg));
        for (std::size_t j = 0; j < ca.size(); ++j) {
            const CoeffElem& x = ker.at(j, k);
            if (x.is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i) v[i] = v[i] + ca[j][i] * x;
        }
        gens.push_back(std::move(v));
    }
    return Lattice(cfg, n, Matrix::from_cols(cfg, n, gens));
}

} // namespace fitring
