#include "fitring/modpres.hpp"

#include <algorithm>

namespace fitring {

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// N(T) = ((1+T)^p - 1)/T as an element of R
GroupRingElem n_element(const Cfg& cfg) {
    const std::size_t p = cfg->p;
    std::vector<CoeffElem> c(p, CoeffElem::zero(cfg));
    for (std::size_t k = 1; k <= p; ++k)
        c[k - 1] = CoeffElem::from_int(cfg, static_cast<long long>(binom(p, k)));
    return GroupRingElem::from_coords(cfg, c);
}

std::vector<CoeffElem> expand_column(const Cfg& cfg, const std::vector<GroupRingElem>& col) {
    std::vector<CoeffElem> v;
    v.reserve(col.size() * cfg->p);
    for (const auto& g : col)
        for (const auto& x : g.coords()) v.push_back(x);
    return v;
}

// blockwise multiplication of an ambient vector by a ring element
std::vector<CoeffElem> blockwise_mul(const Cfg& cfg, const std::vector<CoeffElem>& v,
                                     const GroupRingElem& g) {
    const std::size_t p = cfg->p;
    std::vector<CoeffElem> out;
    out.reserve(v.size());
    for (std::size_t b = 0; b < v.size(); b += p) {
        GroupRingElem slot(cfg, std::vector<CoeffElem>(v.begin() + static_cast<long>(b),
                                                       v.begin() + static_cast<long>(b + p)));
        GroupRingElem prod = slot * g;
        for (const auto& x : prod.coords()) out.push_back(x);
    }
    return out;
}

// blockwise eta on an ambient vector of rank p*t
std::vector<CoeffElem> eta_expand_vec(const Cfg& cfg, const std::vector<CoeffElem>& v) {
    const std::size_t p = cfg->p;
    std::vector<CoeffElem> out;
    out.reserve(v.size());
    for (std::size_t b = 0; b < v.size(); b += p) {
        GroupRingElem slot(cfg, std::vector<CoeffElem>(v.begin() + static_cast<long>(b),
                                                       v.begin() + static_cast<long>(b + p)));
        TildeElem im = eta(slot);
        for (const auto& x : im.coords()) out.push_back(x);
    }
    return out;
}

std::vector<std::vector<CoeffElem>> ambient_basis(const Cfg& cfg, std::size_t n) {
    std::vector<std::vector<CoeffElem>> cols;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<CoeffElem> e(n, CoeffElem::zero(cfg));
        e[i] = CoeffElem::one(cfg);
        cols.push_back(std::move(e));
    }
    return cols;
}

// all size-k subsets of [0, n), lexicographic
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

Presentation make_presentation(const Cfg& cfg, unsigned t,
                               std::vector<std::vector<GroupRingElem>> cols, unsigned kill_exp) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    if (kill_exp < 1) throw std::invalid_argument("kill exponent must be >= 1");
    if (cfg->nprec < kill_exp * t + 1)
        throw PrecisionExhausted("Nprec < e*t + 1");
    for (const auto& c : cols) {
        if (c.size() != t) throw std::invalid_argument("column length != t");
        for (const auto& g : c) require_same_cfg(cfg, g.cfg());
    }
    // append any missing p^e-kill columns
    for (unsigned i = 0; i < t; ++i) {
        std::vector<GroupRingElem> kill(t, GroupRingElem::zero(cfg));
        kill[i] = GroupRingElem::scalar(cfg, CoeffElem::one(cfg).mul_ppow(kill_exp));
        bool present = std::any_of(cols.begin(), cols.end(),
                                   [&](const auto& c) { return c == kill; });
        if (!present) cols.push_back(std::move(kill));
    }
    Presentation P;
    P.cfg = cfg;
    P.t = t;
    P.kill_exp = kill_exp;
    P.cols = std::move(cols);
    return P;
}

Presentation lift_presentation(const Presentation& p, const Cfg& target) {
    std::vector<std::vector<GroupRingElem>> cols;
    cols.reserve(p.cols.size());
    for (const auto& c : p.cols) {
        std::vector<GroupRingElem> nc;
        nc.reserve(c.size());
        for (const auto& g : c) nc.push_back(g.lift_to(target));
        cols.push_back(std::move(nc));
    }
    return make_presentation(target, p.t, std::move(cols), p.kill_exp);
}

Lattice relation_lattice(const Presentation& P) {
    const Cfg& cfg = P.cfg;
    const std::size_t n = cfg->p * P.t;
    std::vector<std::vector<CoeffElem>> gens;
    for (const auto& col : P.cols) {
        std::vector<CoeffElem> cur = expand_column(cfg, col);
        for (std::size_t j = 0; j < cfg->p; ++j) {
            gens.push_back(cur);
            if (j + 1 < cfg->p) cur = t_apply(cfg, cur);
        }
    }
    return Lattice(cfg, n, Matrix::from_cols(cfg, n, gens));
}

unsigned module_cardinality(const Presentation& P) {
    return cokernel_cardinality(P.cfg->p * P.t, relation_lattice(P));
}

GroupRingElem det_r(const Cfg& cfg, const std::vector<std::vector<GroupRingElem>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return GroupRingElem::one(cfg);
    if (n == 1) return m[0][0];
    GroupRingElem acc = GroupRingElem::zero(cfg);
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][0].is_zero()) continue;
        std::vector<std::vector<GroupRingElem>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            minor.emplace_back(m[r].begin() + 1, m[r].end());
        }
        GroupRingElem term = m[i][0] * det_r(cfg, minor);
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

RIdeal fitting_ideal(const Presentation& P, std::uint64_t minor_cap) {
    const Cfg& cfg = P.cfg;
    const std::size_t s = P.ncols();
    const unsigned t = P.t;
    // C(s, t) guard
    std::uint64_t count = 1;
    for (unsigned i = 1; i <= t; ++i) {
        count = count * (s - t + i) / i;
        if (count > minor_cap) throw CapacityExceeded("minor enumeration over cap");
    }
    std::vector<GroupRingElem> minors;
    std::vector<std::size_t> idx(t);
    for (unsigned i = 0; i < t; ++i) idx[i] = i;
    do {
        std::vector<std::vector<GroupRingElem>> sq(t, std::vector<GroupRingElem>(t));
        for (unsigned r = 0; r < t; ++r)
            for (unsigned c = 0; c < t; ++c) sq[r][c] = P.cols[idx[c]][r];
        GroupRingElem d = det_r(cfg, sq);
        if (!d.is_zero()) minors.push_back(std::move(d));
    } while (next_combination(idx, s));
    return ideal_from_generators(cfg, minors);
}

unsigned kernel_min_gens(const Presentation& P) {
    const Cfg& cfg = P.cfg;
    Lattice K = relation_lattice(P);
    std::vector<std::vector<CoeffElem>> mgens;
    for (const auto& b : K.basis_cols()) {
        std::vector<CoeffElem> pb = b;
        for (auto& x : pb) x = x.mul_ppow(1);
        mgens.push_back(std::move(pb));
        mgens.push_back(t_apply(cfg, b));
    }
    Lattice mk(cfg, K.ambient(), Matrix::from_cols(cfg, K.ambient(), mgens));
    unsigned diff = quotient_cardinality(K, mk);
    if (diff % cfg->d != 0) throw std::logic_error("K/mK dimension not divisible by d");
    return diff / cfg->d;
}

BaseChange base_change(const Presentation& P) {
    const Cfg& cfg = P.cfg;
    Lattice K = relation_lattice(P);
    std::vector<std::vector<CoeffElem>> eta_cols;
    for (const auto& b : K.basis_cols()) eta_cols.push_back(eta_expand_vec(cfg, b));
    Lattice k_eta(cfg, K.ambient(), Matrix::from_cols(cfg, K.ambient(), eta_cols));
    TildeLattice h = tilde_closure(cfg, P.t, eta_cols);
    unsigned tilde_card = cokernel_cardinality(K.ambient(), h.lat());
    return BaseChange{std::move(h), std::move(k_eta), tilde_card};
}

unsigned hk_quotient(const Presentation& P) {
    BaseChange bc = base_change(P);
    return bc.h.lat().size_log_p() - bc.k_eta.size_log_p();
}

unsigned m_quotient_card(const Presentation& P) {
    const Cfg& cfg = P.cfg;
    Lattice K = relation_lattice(P);
    std::vector<std::vector<CoeffElem>> gens = K.basis_cols();
    for (const auto& e : ambient_basis(cfg, K.ambient())) {
        std::vector<CoeffElem> pe = e;
        for (auto& x : pe) x = x.mul_ppow(1);
        gens.push_back(std::move(pe));
        gens.push_back(t_apply(cfg, e));
    }
    Lattice mlat(cfg, K.ambient(), Matrix::from_cols(cfg, K.ambient(), gens));
    return cokernel_cardinality(K.ambient(), mlat);
}

PsiCounts psi_counts(const Presentation& P) {
    const Cfg& cfg = P.cfg;
    Lattice K = relation_lattice(P);
    const std::size_t n = K.ambient();

    // preimages in R^t of TM and NM
    std::vector<std::vector<CoeffElem>> g1 = K.basis_cols();
    std::vector<std::vector<CoeffElem>> g2 = K.basis_cols();
    const GroupRingElem nelt = n_element(cfg);
    for (const auto& e : ambient_basis(cfg, n)) {
        g1.push_back(t_apply(cfg, e));
        g2.push_back(blockwise_mul(cfg, e, nelt));
    }
    Lattice l1(cfg, n, Matrix::from_cols(cfg, n, g1));
    Lattice l2(cfg, n, Matrix::from_cols(cfg, n, g2));
    Lattice inter = lattice_intersection(l1, l2);

    PsiCounts out;
    out.ker_log = quotient_cardinality(inter, K);
    out.coker_log = m_quotient_card(P);
    for (const auto& b : inter.basis_cols()) {
        std::vector<CoeffElem> pb = b;
        for (auto& x : pb) x = x.mul_ppow(1);
        if (!K.contains_vector(pb) || !K.contains_vector(t_apply(cfg, b))) {
            out.ker_killed_by_m = false;
            break;
        }
    }
    return out;
}

Presentation direct_sum(const Presentation& a, const Presentation& b) {
    require_same_cfg(a.cfg, b.cfg);
    const Cfg& cfg = a.cfg;
    const unsigned t = a.t + b.t;
    std::vector<std::vector<GroupRingElem>> cols;
    for (const auto& c : a.cols) {
        std::vector<GroupRingElem> nc(t, GroupRingElem::zero(cfg));
        for (unsigned i = 0; i < a.t; ++i) nc[i] = c[i];
        cols.push_back(std::move(nc));
    }
    for (const auto& c : b.cols) {
        std::vector<GroupRingElem> nc(t, GroupRingElem::zero(cfg));
        for (unsigned i = 0; i < b.t; ++i) nc[a.t + i] = c[i];
        cols.push_back(std::move(nc));
    }
    return make_presentation(cfg, t, std::move(cols), std::max(a.kill_exp, b.kill_exp));
}

TildeLattice tilde_fitting_ideal(const Presentation& P, std::uint64_t minor_cap) {
    const Cfg& cfg = P.cfg;
    const std::size_t s = P.ncols();
    const unsigned t = P.t;
    std::uint64_t count = 1;
    for (unsigned i = 1; i <= t; ++i) {
        count = count * (s - t + i) / i;
        if (count > minor_cap) throw CapacityExceeded("minor enumeration over cap");
    }
    // componentwise determinant over the product ring R~
    auto tilde_det = [&](const std::vector<std::vector<TildeElem>>& m, auto&& self) -> TildeElem {
        const std::size_t k = m.size();
        if (k == 0) return TildeElem::one(cfg);
        if (k == 1) return m[0][0];
        TildeElem acc = TildeElem::zero(cfg);
        for (std::size_t i = 0; i < k; ++i) {
            if (m[i][0].is_zero()) continue;
            std::vector<std::vector<TildeElem>> minor;
            for (std::size_t r = 0; r < k; ++r) {
                if (r == i) continue;
                minor.emplace_back(m[r].begin() + 1, m[r].end());
            }
            TildeElem term = m[i][0] * self(minor, self);
            acc = (i % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    std::vector<TildeElem> minors;
    std::vector<std::size_t> idx(t);
    for (unsigned i = 0; i < t; ++i) idx[i] = i;
    do {
        std::vector<std::vector<TildeElem>> sq(t, std::vector<TildeElem>(t));
        for (unsigned r = 0; r < t; ++r)
            for (unsigned c = 0; c < t; ++c) sq[r][c] = eta(P.cols[idx[c]][r]);
        TildeElem d = tilde_det(sq, tilde_det);
        if (!d.is_zero()) minors.push_back(std::move(d));
    } while (next_combination(idx, s));
    return tilde_ideal_from_generators(cfg, minors);
}

bool ModuleReport::all_flags_pass() const {
    return std::all_of(flags.begin(), flags.end(), [](const auto& kv) { return kv.second; });
}

} // namespace fitring
