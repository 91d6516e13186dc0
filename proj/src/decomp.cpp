#include "fitring/decomp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace fitring {

std::uint64_t AbelianGroup::order() const {
    std::uint64_t n = 1;
    for (auto x : cyclic_orders) n *= x;
    return n;
}

std::vector<unsigned> frobenius_orbits(const AbelianGroup& H, std::uint64_t p) {
    const std::uint64_t n = H.order();
    if (n % p == 0) throw std::invalid_argument("p divides #H");
    const auto& ords = H.cyclic_orders;
    const std::size_t k = ords.size();

    // enumerate the dual group as tuples in prod Z/n_i
    auto encode = [&](const std::vector<std::uint64_t>& x) {
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < k; ++i) code = code * ords[i] + x[i];
        return code;
    };
    std::set<std::uint64_t> seen;
    std::vector<unsigned> sizes;
    std::vector<std::uint64_t> x(k, 0);
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        std::uint64_t v = idx;
        for (std::size_t i = k; i-- > 0;) {
            x[i] = v % ords[i];
            v /= ords[i];
        }
        if (seen.count(encode(x))) continue;
        // walk the orbit of chi -> chi^p
        std::vector<std::uint64_t> y = x;
        unsigned len = 0;
        do {
            seen.insert(encode(y));
            for (std::size_t i = 0; i < k; ++i) y[i] = (y[i] * p) % ords[i];
            ++len;
        } while (y != x);
        sizes.push_back(len);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::vector<DecompFactor> decompose_group_ring(const AbelianGroup& G, std::uint64_t p) {
    const std::uint64_t n = G.order();
    if (n % (p * p) == 0) throw std::invalid_argument("p^2 divides #G");
    const bool has_cp = (n % p == 0);
    AbelianGroup H = G;
    if (has_cp) {
        // strip one C_p from the unique coordinate divisible by p
        for (auto& o : H.cyclic_orders) {
            if (o % p == 0) {
                o /= p;
                break;
            }
        }
    }
    H.cyclic_orders.erase(std::remove(H.cyclic_orders.begin(), H.cyclic_orders.end(), 1ull),
                          H.cyclic_orders.end());
    auto orbits = frobenius_orbits(H, p);
    std::map<unsigned, unsigned> mult;
    for (unsigned f : orbits) ++mult[f];
    std::vector<DecompFactor> out;
    for (const auto& [f, m] : mult) out.push_back(DecompFactor{f, has_cp, m});
    return out;
}

std::uint64_t decomposition_order(const std::vector<DecompFactor>& fs, std::uint64_t p) {
    std::uint64_t total = 0;
    for (const auto& f : fs)
        total += std::uint64_t(f.f) * (f.has_c ? p : 1) * f.multiplicity;
    return total;
}

bool corollary_check(const std::vector<DecompFactor>& fs, const std::vector<ModuleReport>& reports) {
    std::size_t expected = 0;
    for (const auto& f : fs) expected += f.multiplicity;
    if (reports.size() != expected)
        throw std::invalid_argument("one report required per factor");
    unsigned card = 0, fitq = 0;
    bool all_principal = true;
    for (const auto& r : reports) {
        card += r.card_log_p;
        fitq += r.fit_quot_log_p;
        all_principal = all_principal && r.principal;
    }
    if (card > fitq) return false;
    if (all_principal && card != fitq) return false;
    return true;
}

ModuleReport analyze_pid_module(const Cfg& cfg, const Matrix& rel) {
    const std::size_t t = rel.rows;
    ModuleReport rep;
    rep.t = static_cast<unsigned>(t);
    rep.s = rel.cols;

    Lattice L(cfg, t, rel);
    rep.card_log_p = cokernel_cardinality(t, L);

    // Fit_A = (p^v) with v the minimal valuation over all t x t minors
    std::vector<std::size_t> idx(t);
    for (std::size_t i = 0; i < t; ++i) idx[i] = i;
    unsigned best = cfg->nprec;
    bool more = rel.cols >= t;
    auto det_a = [&](const std::vector<std::size_t>& sel, auto&& self,
                     std::vector<std::size_t> rows) -> CoeffElem {
        if (rows.empty()) return CoeffElem::one(cfg);
        CoeffElem acc = CoeffElem::zero(cfg);
        const std::size_t c0 = sel[sel.size() - rows.size()];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const CoeffElem& x = rel.at(rows[i], c0);
            if (x.is_zero()) continue;
            std::vector<std::size_t> rest;
            for (std::size_t r2 = 0; r2 < rows.size(); ++r2)
                if (r2 != i) rest.push_back(rows[r2]);
            CoeffElem term = x * self(sel, self, rest);
            acc = (i % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    };
    while (more) {
        std::vector<std::size_t> rows(t);
        std::iota(rows.begin(), rows.end(), 0);
        CoeffElem d = det_a(idx, det_a, rows);
        best = std::min(best, d.valuation());
        // next combination
        more = false;
        for (std::size_t i = t; i-- > 0;) {
            if (idx[i] + (t - i) < rel.cols) {
                ++idx[i];
                for (std::size_t j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
                more = true;
                break;
            }
        }
    }
    if (best >= cfg->nprec)
        throw PrecisionExhausted("all maximal minors vanish at this precision");
    rep.fit_quot_log_p = best * cfg->d;
    rep.principal = true; // A is a PID
    rep.flags["pid_cardinality_identity"] = (rep.card_log_p == rep.fit_quot_log_p);
    rep.flags["main_inequality"] = (rep.card_log_p <= rep.fit_quot_log_p);
    return rep;
}

} // namespace fitring
