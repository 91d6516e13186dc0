// Brute-force cross-check by explicit coset enumeration. Deliberately
// independent of the lattice/SNF machinery: its own ring arithmetic on raw
// integer vectors, additive closures by worklist, determinants by
// permutation sum.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "fitring/harness.hpp"

namespace fitring {

namespace {

using u64 = std::uint64_t;

struct OracleRing {
    u64 p;
    unsigned nprec;
    u64 pn;
    std::vector<u64> binoms; // C(p, k), k = 0..p

    explicit OracleRing(const Cfg& cfg) : p(cfg->p), nprec(cfg->nprec), pn(cfg->pn) {
        binoms.assign(p + 1, 1);
        for (u64 k = 1; k <= p; ++k) {
            u64 r = 1;
            for (u64 i = 1; i <= k; ++i) r = r * (p - k + i) / i;
            binoms[k] = r;
        }
    }

    // multiply two elements of Z/p^N [T]/((1+T)^p - 1), coordinates in T-powers
    std::vector<u64> mul(const std::vector<u64>& a, const std::vector<u64>& b) const {
        std::vector<u64> conv(2 * p - 1, 0);
        for (u64 i = 0; i < p; ++i)
            for (u64 j = 0; j < p; ++j)
                conv[i + j] = (conv[i + j] + a[i] * b[j]) % pn;
        // T^p = -sum_{k=1}^{p-1} C(p,k) T^k, applied repeatedly from the top
        for (u64 deg = 2 * p - 2; deg >= p; --deg) {
            u64 top = conv[deg];
            if (top != 0) {
                conv[deg] = 0;
                for (u64 k = 1; k < p; ++k) {
                    u64 sub = (top * (binoms[k] % pn)) % pn;
                    conv[deg - p + k] = (conv[deg - p + k] + pn - sub) % pn;
                }
            }
            if (deg == p) break;
        }
        conv.resize(p);
        return conv;
    }

    std::vector<u64> tmul(const std::vector<u64>& a) const {
        std::vector<u64> t(p, 0);
        if (p > 1) t[1] = 1;
        else t[0] = 0;
        return mul(a, t);
    }
};

u64 encode(const std::vector<u64>& v, u64 base) {
    u64 code = 0;
    for (auto it = v.rbegin(); it != v.rend(); ++it) code = code * base + *it;
    return code;
}

// additive closure of the given generators inside (Z/p^N)^len
std::unordered_set<u64> additive_closure(const std::vector<std::vector<u64>>& gens, u64 pn,
                                         std::size_t len) {
    std::unordered_set<u64> seen;
    std::vector<std::vector<u64>> work;
    std::vector<u64> zero(len, 0);
    seen.insert(encode(zero, pn));
    work.push_back(zero);
    while (!work.empty()) {
        std::vector<u64> cur = std::move(work.back());
        work.pop_back();
        for (const auto& g : gens) {
            std::vector<u64> nxt(len);
            for (std::size_t i = 0; i < len; ++i) nxt[i] = (cur[i] + g[i]) % pn;
            if (seen.insert(encode(nxt, pn)).second) work.push_back(nxt);
        }
    }
    return seen;
}

// determinant by permutation sum; entries are ring elements
std::vector<u64> perm_det(const OracleRing& ring,
                          const std::vector<std::vector<std::vector<u64>>>& m) {
    const std::size_t t = m.size();
    std::vector<std::size_t> perm(t);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<u64> acc(ring.p, 0);
    do {
        // parity by inversion count
        unsigned inv = 0;
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = i + 1; j < t; ++j)
                if (perm[i] > perm[j]) ++inv;
        std::vector<u64> prod(ring.p, 0);
        prod[0] = 1;
        for (std::size_t i = 0; i < t; ++i) prod = ring.mul(prod, m[i][perm[i]]);
        for (u64 k = 0; k < ring.p; ++k) {
            if (inv % 2 == 0)
                acc[k] = (acc[k] + prod[k]) % ring.pn;
            else
                acc[k] = (acc[k] + ring.pn - prod[k]) % ring.pn;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

unsigned log_p_of(u64 n, u64 p) {
    unsigned e = 0;
    while (n > 1) {
        n /= p;
        ++e;
    }
    return e;
}

} // namespace

bool oracle_check(const Presentation& P) {
    const Cfg& cfg = P.cfg;
    if (cfg->d != 1) throw std::invalid_argument("oracle requires d = 1");
    const OracleRing ring(cfg);
    const std::size_t t = P.t;
    const std::size_t len = ring.p * t;

    // total ambient size guard: pn^len <= 2^16
    double bits = static_cast<double>(len) * std::log2(static_cast<double>(ring.pn));
    if (bits > 16.0) throw std::invalid_argument("oracle size guard exceeded");

    // raw integer copies of the relation columns, slot-major T-power coords
    std::vector<std::vector<std::vector<u64>>> cols; // cols[j][slot] = ring element
    for (const auto& col : P.cols) {
        std::vector<std::vector<u64>> c;
        for (const auto& g : col) {
            std::vector<u64> e;
            for (const auto& x : g.coords()) e.push_back(x.coords()[0]);
            c.push_back(std::move(e));
        }
        cols.push_back(std::move(c));
    }

    // K as additive closure of T^j * columns
    std::vector<std::vector<u64>> kgens;
    for (const auto& col : cols) {
        std::vector<std::vector<u64>> cur = col;
        for (u64 j = 0; j < ring.p; ++j) {
            std::vector<u64> flat;
            for (const auto& slot : cur) flat.insert(flat.end(), slot.begin(), slot.end());
            kgens.push_back(std::move(flat));
            if (j + 1 < ring.p)
                for (auto& slot : cur) slot = ring.tmul(slot);
        }
    }
    auto kset = additive_closure(kgens, ring.pn, len);

    u64 ambient_count = 1;
    for (std::size_t i = 0; i < len; ++i) ambient_count *= ring.pn;
    u64 m_count = ambient_count / static_cast<u64>(kset.size());
    unsigned card_oracle = log_p_of(m_count, ring.p);

    if (card_oracle != module_cardinality(P)) return false;

    // Fitting ideal by enumerating all t x t minors
    std::vector<std::vector<u64>> fgens;
    std::vector<std::size_t> idx(t);
    std::iota(idx.begin(), idx.end(), 0);
    bool more = cols.size() >= t;
    while (more) {
        std::vector<std::vector<std::vector<u64>>> sq(t);
        for (std::size_t r = 0; r < t; ++r) {
            sq[r].resize(t);
            for (std::size_t c = 0; c < t; ++c) sq[r][c] = cols[idx[c]][r];
        }
        std::vector<u64> det = perm_det(ring, sq);
        std::vector<u64> cur = det;
        for (u64 j = 0; j < ring.p; ++j) {
            fgens.push_back(cur);
            if (j + 1 < ring.p) cur = ring.tmul(cur);
        }
        more = false;
        for (std::size_t i = t; i-- > 0;) {
            if (idx[i] + (t - i) < cols.size()) {
                ++idx[i];
                for (std::size_t j2 = i + 1; j2 < t; ++j2) idx[j2] = idx[j2 - 1] + 1;
                more = true;
                break;
            }
        }
    }
    auto fset = additive_closure(fgens, ring.pn, ring.p);

    RIdeal fit = fitting_ideal(P);
    u64 r_count = 1;
    for (u64 i = 0; i < ring.p; ++i) r_count *= ring.pn;
    unsigned fitq_oracle = log_p_of(r_count / static_cast<u64>(fset.size()), ring.p);
    if (fitq_oracle != ideal_quotient_card(fit)) return false;

    // lattice basis vectors of the computed Fitting ideal must appear in the
    // enumerated ideal; with equal sizes this forces set equality
    for (const auto& b : fit.lat().basis_cols()) {
        std::vector<u64> raw;
        for (const auto& x : b) raw.push_back(x.coords()[0]);
        if (!fset.count(encode(raw, ring.pn))) return false;
    }
    return true;
}

} // namespace fitring
