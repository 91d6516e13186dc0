#include "fitring/normalization.hpp"

#include <algorithm>

namespace fitring {

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// N(T) = ((1+T)^p - 1)/T = sum_{k=1}^{p} C(p,k) T^(k-1); monic of degree
// p-1, constant term p. Coefficients below the leading one.
std::vector<CoeffElem> n_poly_low(const Cfg& cfg) {
    const std::size_t p = cfg->p;
    std::vector<CoeffElem> low(p - 1, CoeffElem::zero(cfg));
    for (std::size_t k = 1; k < p; ++k)
        low[k - 1] = CoeffElem::from_int(cfg, static_cast<long long>(binom(p, k)));
    return low;
}

// z-component multiplication: polynomials of degree < p-1 modulo N.
std::vector<CoeffElem> zmul(const Cfg& cfg, const std::vector<CoeffElem>& x,
                            const std::vector<CoeffElem>& y) {
    const std::size_t m = cfg->p - 1; // degree of N
    if (m == 1) {
        // p = 2: N = T + 2, a rank-1 component
        return {x[0] * y[0]};
    }
    std::vector<CoeffElem> conv(2 * m - 1, CoeffElem::zero(cfg));
    for (std::size_t i = 0; i < m; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < m; ++j) conv[i + j] = conv[i + j] + x[i] * y[j];
    }
    auto low = n_poly_low(cfg);
    for (std::size_t k = 2 * m - 2; k >= m; --k) {
        const CoeffElem top = conv[k];
        if (!top.is_zero()) {
            for (std::size_t i = 0; i < m; ++i)
                conv[k - m + i] = conv[k - m + i] - top * low[i];
            conv[k] = CoeffElem::zero(cfg);
        }
        if (k == m) break;
    }
    conv.resize(m);
    return conv;
}

} // namespace

TildeElem::TildeElem(Cfg cfg, CoeffElem a_part, std::vector<CoeffElem> z_part)
    : cfg_(std::move(cfg)), a_(std::move(a_part)), z_(std::move(z_part)) {
    if (z_.size() != cfg_->p - 1) throw std::invalid_argument("z-part size != p-1");
}

TildeElem TildeElem::zero(const Cfg& cfg) {
    return TildeElem(cfg, CoeffElem::zero(cfg),
                     std::vector<CoeffElem>(cfg->p - 1, CoeffElem::zero(cfg)));
}

TildeElem TildeElem::one(const Cfg& cfg) {
    auto e = zero(cfg);
    e.a_ = CoeffElem::one(cfg);
    e.z_[0] = CoeffElem::one(cfg);
    return e;
}

TildeElem TildeElem::e1(const Cfg& cfg) {
    auto e = zero(cfg);
    e.a_ = CoeffElem::one(cfg);
    return e;
}

bool TildeElem::is_zero() const {
    return a_.is_zero() &&
           std::all_of(z_.begin(), z_.end(), [](const CoeffElem& x) { return x.is_zero(); });
}

TildeElem TildeElem::operator+(const TildeElem& o) const {
    require_same_cfg(cfg_, o.cfg_);
    TildeElem r = *this;
    r.a_ = a_ + o.a_;
    for (std::size_t i = 0; i < z_.size(); ++i) r.z_[i] = z_[i] + o.z_[i];
    return r;
}

TildeElem TildeElem::operator-(const TildeElem& o) const {
    require_same_cfg(cfg_, o.cfg_);
    TildeElem r = *this;
    r.a_ = a_ - o.a_;
    for (std::size_t i = 0; i < z_.size(); ++i) r.z_[i] = z_[i] - o.z_[i];
    return r;
}

TildeElem TildeElem::operator*(const TildeElem& o) const {
    require_same_cfg(cfg_, o.cfg_);
    return TildeElem(cfg_, a_ * o.a_, zmul(cfg_, z_, o.z_));
}

bool TildeElem::operator==(const TildeElem& o) const {
    return same_cfg(cfg_, o.cfg_) && a_ == o.a_ && z_ == o.z_;
}

std::vector<CoeffElem> TildeElem::coords() const {
    std::vector<CoeffElem> v;
    v.reserve(cfg_->p);
    v.push_back(a_);
    for (const auto& x : z_) v.push_back(x);
    return v;
}

TildeElem TildeElem::from_coords(const Cfg& cfg, const std::vector<CoeffElem>& v) {
    if (v.size() != cfg->p) throw std::invalid_argument("tilde coords size != p");
    return TildeElem(cfg, v[0], std::vector<CoeffElem>(v.begin() + 1, v.end()));
}

TildeElem eta(const GroupRingElem& r) {
    const Cfg& cfg = r.cfg();
    const std::size_t p = cfg->p;
    const auto& c = r.coords();
    // mod T: evaluate at T = 0
    CoeffElem a = c[0];
    // mod N: reduce the single T^(p-1) term
    std::vector<CoeffElem> z(c.begin(), c.begin() + static_cast<long>(p - 1));
    const CoeffElem& top = c[p - 1];
    if (!top.is_zero()) {
        auto low = n_poly_low(cfg);
        for (std::size_t i = 0; i < p - 1; ++i) z[i] = z[i] - top * low[i];
    }
    return TildeElem(cfg, a, std::move(z));
}

CoeffElem vartheta(const TildeElem& x) {
    CoeffElem diff = x.a_part() - x.z_part()[0];
    return CoeffElem(x.cfg(), diff.residue());
}

std::vector<CoeffElem> tilde_t_apply(const Cfg& cfg, const std::vector<CoeffElem>& v) {
    const std::size_t p = cfg->p;
    if (v.size() % p != 0) throw std::invalid_argument("vector length not a multiple of p");
    auto low = n_poly_low(cfg);
    std::vector<CoeffElem> out;
    out.reserve(v.size());
    for (std::size_t b = 0; b < v.size(); b += p) {
        out.push_back(CoeffElem::zero(cfg)); // T acts as 0 on the A-component
        // shift the z polynomial up by one and reduce T^(p-1)
        const std::size_t m = p - 1;
        std::vector<CoeffElem> z(m, CoeffElem::zero(cfg));
        for (std::size_t k = 0; k + 1 < m; ++k) z[k + 1] = v[b + 1 + k];
        const CoeffElem& top = v[b + p - 1];
        if (!top.is_zero())
            for (std::size_t k = 0; k < m; ++k) z[k] = z[k] - top * low[k];
        for (auto& x : z) out.push_back(std::move(x));
    }
    return out;
}

std::vector<CoeffElem> tilde_e1_apply(const Cfg& cfg, const std::vector<CoeffElem>& v) {
    const std::size_t p = cfg->p;
    std::vector<CoeffElem> out(v.size(), CoeffElem::zero(cfg));
    for (std::size_t b = 0; b < v.size(); b += p) out[b] = v[b];
    return out;
}

TildeLattice::TildeLattice(Lattice lat, std::size_t slots) : lat_(std::move(lat)), slots_(slots) {
    if (lat_.ambient() != slots_ * lat_.cfg()->p)
        throw std::invalid_argument("tilde lattice ambient rank != p * slots");
}

TildeLattice tilde_closure(const Cfg& cfg, std::size_t slots,
                           const std::vector<std::vector<CoeffElem>>& cols) {
    const std::size_t n = slots * cfg->p;
    Lattice cur(cfg, n, Matrix::from_cols(cfg, n, cols));
    // the ambient rank bounds the number of strict growth steps
    for (std::size_t iter = 0; iter <= n + 1; ++iter) {
        std::vector<std::vector<CoeffElem>> next = cur.basis_cols();
        const std::size_t base = next.size();
        for (std::size_t k = 0; k < base; ++k) {
            next.push_back(tilde_t_apply(cfg, next[k]));
            next.push_back(tilde_e1_apply(cfg, next[k]));
        }
        Lattice grown(cfg, n, Matrix::from_cols(cfg, n, next));
        if (grown == cur) return TildeLattice(std::move(cur), slots);
        cur = std::move(grown);
    }
    throw std::logic_error("tilde closure did not stabilize");
}

TildeLattice tilde_ideal_from_generators(const Cfg& cfg, const std::vector<TildeElem>& gs) {
    std::vector<std::vector<CoeffElem>> cols;
    for (const auto& g : gs) cols.push_back(g.coords());
    return tilde_closure(cfg, 1, cols);
}

TildeLattice extend_ideal(const RIdeal& J) {
    const Cfg& cfg = J.cfg();
    std::vector<std::vector<CoeffElem>> cols;
    for (const auto& b : J.lat().basis_cols())
        cols.push_back(eta(GroupRingElem::from_coords(cfg, b)).coords());
    return tilde_closure(cfg, 1, cols);
}

Lattice eta_image_lattice(const RIdeal& J) {
    const Cfg& cfg = J.cfg();
    std::vector<std::vector<CoeffElem>> cols;
    for (const auto& b : J.lat().basis_cols())
        cols.push_back(eta(GroupRingElem::from_coords(cfg, b)).coords());
    return Lattice(cfg, cfg->p, Matrix::from_cols(cfg, cfg->p, cols));
}

bool is_tilde_stable(const RIdeal& J) {
    return extend_ideal(J).lat() == eta_image_lattice(J);
}

unsigned tilde_quotient_card(const TildeLattice& L) {
    return cokernel_cardinality(L.lat().ambient(), L.lat());
}

} // namespace fitring
