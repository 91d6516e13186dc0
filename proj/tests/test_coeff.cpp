#include "doctest.h"

#include "fitring/coeff.hpp"

using namespace fitring;

namespace {

// every element of A for small configs, by odometer over coordinates
std::vector<CoeffElem> all_elements(const Cfg& cfg) {
    std::vector<CoeffElem> out;
    std::vector<std::uint64_t> c(cfg->d, 0);
    while (true) {
        out.emplace_back(cfg, c);
        unsigned i = 0;
        while (i < cfg->d && ++c[i] == cfg->pn) c[i++] = 0;
        if (i == cfg->d) break;
    }
    return out;
}

} // namespace

TEST_CASE("config validation") {
    CHECK_THROWS(RingConfig::make(4, 1, 2));
    CHECK_THROWS(RingConfig::make(1, 1, 2));
    CHECK_THROWS(RingConfig::make(2, 1, 0));
    CHECK_THROWS(RingConfig::make(2, 1, 80)); // p^nprec overflows
    // reducible modulus x^2 must be rejected
    CHECK_THROWS(RingConfig::make(2, 2, 2, {0, 0, 1}));
    // x^2 + x + 1 is irreducible mod 2
    auto cfg = RingConfig::make(2, 2, 3, {1, 1, 1});
    CHECK(cfg->pn == 8);
    // default modulus search must produce a valid config for several (p, d)
    for (std::uint64_t p : {2ull, 3ull, 5ull})
        for (unsigned d : {1u, 2u, 3u}) {
            auto c = RingConfig::make(p, d, 2);
            CHECK(c->h.size() == d + 1);
            CHECK(c->h.back() == 1);
        }
}

TEST_CASE("ring axioms, exhaustive over GR(8, 2)") {
    auto cfg = RingConfig::make(2, 2, 3);
    auto elems = all_elements(cfg);
    REQUIRE(elems.size() == 64);
    auto zero = CoeffElem::zero(cfg);
    auto one = CoeffElem::one(cfg);
    for (const auto& a : elems) {
        CHECK(a + zero == a);
        CHECK(a * one == a);
        CHECK(a - a == zero);
        CHECK(a + (-a) == zero);
    }
    // spot-check associativity/distributivity on a subsample
    for (std::size_t i = 0; i < elems.size(); i += 7)
        for (std::size_t j = 0; j < elems.size(); j += 5)
            for (std::size_t k = 0; k < elems.size(); k += 11) {
                const auto &a = elems[i], &b = elems[j], &c = elems[k];
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
                CHECK(a * b == b * a);
            }
}

TEST_CASE("valuation and p-power shifts") {
    auto cfg = RingConfig::make(3, 1, 4); // Z/81
    CHECK(CoeffElem::zero(cfg).valuation() == 4);
    CHECK(CoeffElem::one(cfg).valuation() == 0);
    CHECK(CoeffElem::from_int(cfg, 27).valuation() == 3);
    CHECK(CoeffElem::from_int(cfg, 18).valuation() == 2);
    CHECK(CoeffElem::from_int(cfg, -3).valuation() == 1);
    auto x = CoeffElem::from_int(cfg, 45); // 9 * 5
    CHECK(x.shift_down(2) == CoeffElem::from_int(cfg, 5));
    CHECK(x.shift_down(2).mul_ppow(2) == x);
    // mixed-valuation coordinates in d = 2
    auto cfg2 = RingConfig::make(2, 2, 3);
    CHECK(CoeffElem(cfg2, {4, 2}).valuation() == 1);
    CHECK(CoeffElem(cfg2, {4, 0}).valuation() == 2);
}

TEST_CASE("floor division is coordinatewise") {
    auto cfg = RingConfig::make(2, 2, 3);
    auto x = CoeffElem(cfg, {5, 6});
    auto y = x.floor_div_ppow(1);
    CHECK(y.coords() == std::vector<std::uint64_t>{2, 3});
}

TEST_CASE("unit inverses, exhaustive over GR(8, 2) and Z/27") {
    for (auto cfg : {RingConfig::make(2, 2, 3), RingConfig::make(3, 1, 3)}) {
        auto one = CoeffElem::one(cfg);
        unsigned units = 0;
        for (const auto& a : all_elements(cfg)) {
            if (a.valuation() == 0) {
                ++units;
                CHECK(a * a.unit_inverse() == one);
            } else {
                CHECK_THROWS_AS((void)a.unit_inverse(), NotAUnit);
            }
        }
        // #units = (q - 1) * q^(d*(nprec-1)) / ... counted directly:
        std::uint64_t q = 1;
        for (unsigned i = 0; i < cfg->d; ++i) q *= cfg->p;
        std::uint64_t total = 1;
        for (unsigned i = 0; i < cfg->d; ++i) total *= cfg->pn;
        CHECK(units == total - total / q);
    }
}

TEST_CASE("residue map") {
    auto cfg = RingConfig::make(3, 2, 2);
    CHECK(CoeffElem(cfg, {4, 8}).residue() == std::vector<std::uint64_t>{1, 2});
    CHECK(CoeffElem(cfg, {3, 6}).residue() == std::vector<std::uint64_t>{0, 0});
}

TEST_CASE("precision lift preserves arithmetic") {
    auto cfg = RingConfig::make(2, 2, 2);
    auto big = lift_config(cfg, 4);
    CHECK(big->pn == 16);
    auto a = CoeffElem(cfg, {3, 2});
    auto b = CoeffElem(cfg, {1, 3});
    // products agree after reducing the lifted product back down
    auto lifted = a.lift_to(big) * b.lift_to(big);
    auto small = a * b;
    for (unsigned i = 0; i < cfg->d; ++i)
        CHECK(lifted.coords()[i] % cfg->pn == small.coords()[i]);
}
