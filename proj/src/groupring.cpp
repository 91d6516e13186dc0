#include "fitring/groupring.hpp"

#include <algorithm>

namespace fitring {

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Reductions of T^j for j in [p, 2p-2], from (1+T)^p = 1:
// T^p = -sum_{k=1}^{p-1} C(p,k) T^k.
std::vector<std::vector<CoeffElem>> tpow_table(const Cfg& cfg) {
    const std::size_t p = cfg->p;
    std::vector<std::vector<CoeffElem>> tab;
    std::vector<CoeffElem> tp(p, CoeffElem::zero(cfg));
    for (std::size_t k = 1; k < p; ++k)
        tp[k] = -CoeffElem::from_int(cfg, static_cast<long long>(binom(p, k)));
    tab.push_back(tp);
    for (std::size_t j = p + 1; j <= 2 * p - 2; ++j) {
        const auto& prev = tab.back();
        std::vector<CoeffElem> next(p, CoeffElem::zero(cfg));
        for (std::size_t k = 0; k + 1 < p; ++k) next[k + 1] = prev[k];
        const CoeffElem& top = prev[p - 1]; // coefficient shifting into T^p
        if (!top.is_zero())
            for (std::size_t k = 0; k < p; ++k) next[k] = next[k] + top * tab[0][k];
        tab.push_back(std::move(next));
    }
    return tab;
}

} // namespace

GroupRingElem::GroupRingElem(Cfg cfg, std::vector<CoeffElem> coords)
    : cfg_(std::move(cfg)), c_(std::move(coords)) {
    if (c_.size() != cfg_->p) throw std::invalid_argument("coordinate count != p");
}

GroupRingElem GroupRingElem::zero(const Cfg& cfg) {
    return GroupRingElem(cfg, std::vector<CoeffElem>(cfg->p, CoeffElem::zero(cfg)));
}

GroupRingElem GroupRingElem::one(const Cfg& cfg) { return from_int(cfg, 1); }

GroupRingElem GroupRingElem::t(const Cfg& cfg) {
    auto e = zero(cfg);
    e.c_[1] = CoeffElem::one(cfg);
    return e;
}

GroupRingElem GroupRingElem::c(const Cfg& cfg) { return one(cfg) + t(cfg); }

GroupRingElem GroupRingElem::scalar(const Cfg& cfg, const CoeffElem& a) {
    auto e = zero(cfg);
    e.c_[0] = a;
    return e;
}

GroupRingElem GroupRingElem::from_int(const Cfg& cfg, long long v) {
    return scalar(cfg, CoeffElem::from_int(cfg, v));
}

GroupRingElem GroupRingElem::from_coords(const Cfg& cfg, std::vector<CoeffElem> v) {
    return GroupRingElem(cfg, std::move(v));
}

bool GroupRingElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const CoeffElem& x) { return x.is_zero(); });
}

GroupRingElem GroupRingElem::operator+(const GroupRingElem& o) const {
    require_same_cfg(cfg_, o.cfg_);
    GroupRingElem r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

GroupRingElem GroupRingElem::operator-(const GroupRingElem& o) const {
    require_same_cfg(cfg_, o.cfg_);
    GroupRingElem r = *this;
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

GroupRingElem GroupRingElem::operator-() const {
    GroupRingElem r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

GroupRingElem GroupRingElem::operator*(const GroupRingElem& o) const {
    require_same_cfg(cfg_, o.cfg_);
    const std::size_t p = cfg_->p;
    std::vector<CoeffElem> conv(2 * p - 1, CoeffElem::zero(cfg_));
    for (std::size_t i = 0; i < p; ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < p; ++j) conv[i + j] = conv[i + j] + c_[i] * o.c_[j];
    }
    std::vector<CoeffElem> out(conv.begin(), conv.begin() + static_cast<long>(p));
    if (p > 1) {
        auto tab = tpow_table(cfg_);
        for (std::size_t j = p; j <= 2 * p - 2; ++j) {
            const CoeffElem& ck = conv[j];
            if (ck.is_zero()) continue;
            const auto& red = tab[j - p];
            for (std::size_t k = 0; k < p; ++k) out[k] = out[k] + ck * red[k];
        }
    }
    return GroupRingElem(cfg_, std::move(out));
}

bool GroupRingElem::operator==(const GroupRingElem& o) const {
    if (!same_cfg(cfg_, o.cfg_)) return false;
    return c_ == o.c_;
}

GroupRingElem GroupRingElem::lift_to(const Cfg& target) const {
    std::vector<CoeffElem> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(x.lift_to(target));
    return GroupRingElem(target, std::move(c));
}

Matrix mult_matrix(const GroupRingElem& a) {
    const Cfg& cfg = a.cfg();
    const std::size_t p = cfg->p;
    Matrix m(cfg, p, p);
    GroupRingElem cur = a;
    const GroupRingElem t = GroupRingElem::t(cfg);
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t i = 0; i < p; ++i) m.at(i, j) = cur.coords()[i];
        if (j + 1 < p) cur = cur * t;
    }
    return m;
}

std::vector<CoeffElem> t_apply(const Cfg& cfg, const std::vector<CoeffElem>& v) {
    const std::size_t p = cfg->p;
    if (v.size() % p != 0) throw std::invalid_argument("vector length not a multiple of p");
    std::vector<CoeffElem> out;
    out.reserve(v.size());
    const GroupRingElem t = GroupRingElem::t(cfg);
    for (std::size_t b = 0; b < v.size(); b += p) {
        GroupRingElem slot(cfg, std::vector<CoeffElem>(v.begin() + static_cast<long>(b),
                                                       v.begin() + static_cast<long>(b + p)));
        GroupRingElem prod = slot * t;
        for (const auto& x : prod.coords()) out.push_back(x);
    }
    return out;
}

RIdeal::RIdeal(Lattice lat) : lat_(std::move(lat)) {
    if (lat_.ambient() != lat_.cfg()->p)
        throw std::invalid_argument("R-ideal lattice must have ambient rank p");
    for (const auto& b : lat_.basis_cols())
        if (!lat_.contains_vector(t_apply(lat_.cfg(), b)))
            throw std::invalid_argument("lattice is not T-stable");
}

RIdeal ideal_from_generators(const Cfg& cfg, const std::vector<GroupRingElem>& gs) {
    const std::size_t p = cfg->p;
    std::vector<std::vector<CoeffElem>> cols;
    for (const auto& g : gs) {
        require_same_cfg(cfg, g.cfg());
        std::vector<CoeffElem> cur = g.coords();
        for (std::size_t j = 0; j < p; ++j) {
            cols.push_back(cur);
            if (j + 1 < p) cur = t_apply(cfg, cur);
        }
    }
    return RIdeal(Lattice(cfg, p, Matrix::from_cols(cfg, p, cols)));
}

RIdeal maximal_ideal(const Cfg& cfg) {
    return ideal_from_generators(
        cfg, {GroupRingElem::from_int(cfg, static_cast<long long>(cfg->p)),
              GroupRingElem::t(cfg)});
}

RIdeal ideal_mul(const RIdeal& a, const RIdeal& b) {
    require_same_cfg(a.cfg(), b.cfg());
    const Cfg& cfg = a.cfg();
    std::vector<GroupRingElem> prods;
    for (const auto& x : a.lat().basis_cols())
        for (const auto& y : b.lat().basis_cols())
            prods.push_back(GroupRingElem::from_coords(cfg, x) *
                            GroupRingElem::from_coords(cfg, y));
    return ideal_from_generators(cfg, prods);
}

unsigned ideal_quotient_card(const RIdeal& J) {
    return cokernel_cardinality(J.cfg()->p, J.lat());
}

unsigned min_generators(const RIdeal& J) {
    const Cfg& cfg = J.cfg();
    std::vector<std::vector<CoeffElem>> mgens;
    for (const auto& b : J.lat().basis_cols()) {
        std::vector<CoeffElem> pb = b;
        for (auto& x : pb) x = x.mul_ppow(1);
        mgens.push_back(std::move(pb));
        mgens.push_back(t_apply(cfg, b));
    }
    Lattice mj(cfg, cfg->p, Matrix::from_cols(cfg, cfg->p, mgens));
    unsigned diff = quotient_cardinality(J.lat(), mj);
    if (diff % cfg->d != 0) throw std::logic_error("J/mJ dimension not divisible by d");
    return diff / cfg->d;
}

bool is_principal(const RIdeal& J) { return min_generators(J) <= 1; }

} // namespace fitring
