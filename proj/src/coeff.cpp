#include "fitring/coeff.hpp"

#include <algorithm>

namespace fitring {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

// ---- polynomial arithmetic over F_p (coefficients low-to-high) ----

std::vector<u64> poly_mod_p(const std::vector<u64>& a, u64 p) {
    std::vector<u64> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] % p;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// remainder of a / b over F_p, b monic
std::vector<u64> poly_rem(std::vector<u64> a, const std::vector<u64>& b, u64 p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        u64 lead = a.back() % p;
        std::size_t sh = a.size() - 1 - db;
        if (lead != 0) {
            for (std::size_t i = 0; i <= db; ++i) {
                u64 sub = (u128(lead) * (b[i] % p)) % p;
                a[sh + i] = (a[sh + i] + p - sub) % p;
            }
        }
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

bool divides_mod_p(const std::vector<u64>& divisor, const std::vector<u64>& h, u64 p) {
    return poly_rem(poly_mod_p(h, p), divisor, p).empty();
}

// h monic of degree d; irreducible over F_p iff no monic factor of degree <= d/2.
bool irreducible_mod_p(const std::vector<u64>& h, u64 p, unsigned d) {
    if (d == 1) return true;
    if (h[0] % p == 0) return false; // divisible by x
    for (unsigned dd = 1; dd <= d / 2; ++dd) {
        // enumerate monic polynomials of degree dd
        std::vector<u64> div(dd + 1, 0);
        div[dd] = 1;
        u64 count = 1;
        for (unsigned i = 0; i < dd; ++i) count *= p;
        for (u64 idx = 0; idx < count; ++idx) {
            u64 v = idx;
            for (unsigned i = 0; i < dd; ++i) {
                div[i] = v % p;
                v /= p;
            }
            if (divides_mod_p(div, h, p)) return false;
        }
    }
    return true;
}

std::vector<u64> default_modulus(u64 p, unsigned d) {
    if (d == 1) return {0, 1}; // x
    std::vector<u64> h(d + 1, 0);
    h[d] = 1;
    u64 count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (u64 idx = 0; idx < count; ++idx) {
        u64 v = idx;
        for (unsigned i = 0; i < d; ++i) {
            h[i] = v % p;
            v /= p;
        }
        if (irreducible_mod_p(h, p, d)) return h;
    }
    throw std::invalid_argument("no irreducible modulus found"); // unreachable
}

} // namespace

std::shared_ptr<const RingConfig> RingConfig::make(u64 p, unsigned d, unsigned nprec,
                                                   std::vector<u64> h) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (d < 1) throw std::invalid_argument("d must be >= 1");
    if (nprec < 1) throw std::invalid_argument("Nprec must be >= 1");

    u64 pn = 1;
    for (unsigned i = 0; i < nprec; ++i) {
        if (pn > (u64(1) << 62) / p)
            throw PrecisionExhausted("p^Nprec exceeds 64-bit working range");
        pn *= p;
    }

    if (h.empty()) {
        h = default_modulus(p, d);
    } else {
        if (h.size() != std::size_t(d) + 1 || h[d] != 1)
            throw std::invalid_argument("h must be monic of degree d");
        if (!irreducible_mod_p(h, p, d))
            throw std::invalid_argument("h must be irreducible mod p");
    }
    for (auto& c : h) c %= pn;
    h[d] = 1;

    auto cfg = std::make_shared<RingConfig>();
    cfg->p = p;
    cfg->d = d;
    cfg->nprec = nprec;
    cfg->h = std::move(h);
    cfg->pn = pn;
    return cfg;
}

u64 RingConfig::ppow(unsigned e) const {
    u64 r = 1;
    for (unsigned i = 0; i < e && i < nprec; ++i) r *= p;
    return e >= nprec ? pn : r;
}

bool RingConfig::same(const RingConfig& o) const {
    return p == o.p && d == o.d && nprec == o.nprec && h == o.h;
}

Cfg lift_config(const Cfg& cfg, unsigned new_nprec) {
    std::vector<u64> h = cfg->h; // integer coefficients carry over
    return RingConfig::make(cfg->p, cfg->d, new_nprec, std::move(h));
}

bool same_cfg(const Cfg& a, const Cfg& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->same(*b);
}

void require_same_cfg(const Cfg& a, const Cfg& b) {
    if (!same_cfg(a, b)) throw ConfigMismatch("ring configurations differ");
}

// ---- CoeffElem ----

CoeffElem::CoeffElem(Cfg cfg, std::vector<u64> coords) : cfg_(std::move(cfg)), c_(std::move(coords)) {
    if (c_.size() != cfg_->d) throw std::invalid_argument("coordinate count != d");
    for (auto& x : c_) x %= cfg_->pn;
}

CoeffElem CoeffElem::from_int(const Cfg& cfg, long long v) {
    std::vector<u64> c(cfg->d, 0);
    long long m = v % static_cast<long long>(cfg->pn);
    if (m < 0) m += static_cast<long long>(cfg->pn);
    c[0] = static_cast<u64>(m);
    return CoeffElem(cfg, std::move(c));
}

CoeffElem CoeffElem::zero(const Cfg& cfg) { return from_int(cfg, 0); }
CoeffElem CoeffElem::one(const Cfg& cfg) { return from_int(cfg, 1); }

bool CoeffElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](u64 x) { return x == 0; });
}

CoeffElem CoeffElem::operator+(const CoeffElem& o) const {
    require_same_cfg(cfg_, o.cfg_);
    CoeffElem r = *this;
    for (unsigned i = 0; i < cfg_->d; ++i) r.c_[i] = (c_[i] + o.c_[i]) % cfg_->pn;
    return r;
}

CoeffElem CoeffElem::operator-(const CoeffElem& o) const {
    require_same_cfg(cfg_, o.cfg_);
    CoeffElem r = *this;
    for (unsigned i = 0; i < cfg_->d; ++i) r.c_[i] = (c_[i] + cfg_->pn - o.c_[i]) % cfg_->pn;
    return r;
}

CoeffElem CoeffElem::operator-() const {
    CoeffElem r = *this;
    for (unsigned i = 0; i < cfg_->d; ++i) r.c_[i] = (cfg_->pn - c_[i]) % cfg_->pn;
    return r;
}

CoeffElem CoeffElem::operator*(const CoeffElem& o) const {
    require_same_cfg(cfg_, o.cfg_);
    const unsigned d = cfg_->d;
    const u64 pn = cfg_->pn;
    std::vector<u64> conv(2 * d - 1, 0);
    for (unsigned i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (unsigned j = 0; j < d; ++j) {
            u64 prod = static_cast<u64>((u128(c_[i]) * o.c_[j]) % pn);
            conv[i + j] = (conv[i + j] + prod) % pn;
        }
    }
    // reduce by the monic modulus h
    for (unsigned k = 2 * d - 2; k >= d; --k) {
        u64 top = conv[k];
        if (top != 0) {
            for (unsigned i = 0; i < d; ++i) {
                u64 sub = static_cast<u64>((u128(top) * cfg_->h[i]) % pn);
                conv[k - d + i] = (conv[k - d + i] + pn - sub) % pn;
            }
            conv[k] = 0;
        }
        if (k == d) break;
    }
    conv.resize(d);
    CoeffElem r;
    r.cfg_ = cfg_;
    r.c_ = std::move(conv);
    return r;
}

bool CoeffElem::operator==(const CoeffElem& o) const {
    return same_cfg(cfg_, o.cfg_) && c_ == o.c_;
}

unsigned CoeffElem::valuation() const {
    unsigned best = cfg_->nprec;
    for (u64 x : c_) {
        if (x == 0) continue;
        unsigned v = 0;
        while (x % cfg_->p == 0) {
            x /= cfg_->p;
            ++v;
        }
        best = std::min(best, v);
        if (best == 0) break;
    }
    return best;
}

CoeffElem CoeffElem::shift_down(unsigned v) const {
    if (v == 0) return *this;
    if (valuation() < v) throw std::invalid_argument("shift_down: valuation too small");
    u64 pv = cfg_->ppow(v);
    CoeffElem r = *this;
    for (auto& x : r.c_) x /= pv;
    return r;
}

CoeffElem CoeffElem::floor_div_ppow(unsigned v) const {
    if (v == 0) return *this;
    u64 pv = cfg_->ppow(v);
    CoeffElem r = *this;
    for (auto& x : r.c_) x /= pv;
    return r;
}

CoeffElem CoeffElem::mul_ppow(unsigned v) const {
    if (v == 0) return *this;
    u64 pv = cfg_->ppow(v);
    CoeffElem r = *this;
    for (auto& x : r.c_) x = static_cast<u64>((u128(x) * pv) % cfg_->pn);
    return r;
}

CoeffElem CoeffElem::unit_inverse() const {
    if (valuation() != 0) throw NotAUnit("unit_inverse: element is not a unit");
    const u64 p = cfg_->p;
    const unsigned d = cfg_->d;

    // inverse in the residue field by Fermat: a^(q-2), computed with
    // coordinates reduced mod p after every multiplication
    u64 q = 1;
    for (unsigned i = 0; i < d; ++i) {
        if (q > (u64(1) << 62) / p) throw PrecisionExhausted("residue field too large");
        q *= p;
    }
    auto red_p = [&](CoeffElem x) {
        auto c = x.coords();
        for (auto& y : c) y %= p;
        return CoeffElem(cfg_, std::move(c));
    };
    CoeffElem base = red_p(*this);
    CoeffElem acc = CoeffElem::one(cfg_);
    u64 e = q - 2;
    while (e > 0) {
        if (e & 1) acc = red_p(acc * base);
        base = red_p(base * base);
        e >>= 1;
    }

    // Newton lift: b <- b(2 - ab), doubling the correct precision each step
    CoeffElem two = CoeffElem::from_int(cfg_, 2);
    CoeffElem b = acc;
    for (unsigned iter = 0; iter < 64; ++iter) {
        CoeffElem ab = (*this) * b;
        if (ab == CoeffElem::one(cfg_)) return b;
        b = b * (two - ab);
    }
    throw std::logic_error("unit_inverse: Newton iteration failed to converge");
}

std::vector<u64> CoeffElem::residue() const {
    std::vector<u64> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] % cfg_->p;
    return r;
}

CoeffElem CoeffElem::lift_to(const Cfg& target) const {
    if (target->p != cfg_->p || target->d != cfg_->d)
        throw ConfigMismatch("lift_to: incompatible configs");
    return CoeffElem(target, c_);
}

} // namespace fitring
