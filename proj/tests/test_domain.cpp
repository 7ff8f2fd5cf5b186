#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "qspectra/cyclo.hpp"
#include "qspectra/domain.hpp"
#include "qspectra/function.hpp"

using namespace qspectra;

TEST_SUITE("domain") {

TEST_CASE("sym_rep examples") {
    CHECK(sym_rep(2, 3) == -1);
    CHECK(sym_rep(0, 7) == 0);
    CHECK(sym_rep(2, 4) == 2);
    CHECK(sym_rep(3, 4) == -1);
    CHECK(sym_rep(1, 2) == 1);
    CHECK_THROWS_AS(sym_rep(0, 1), DomainError);
}

TEST_CASE("sym_rep is congruent and in range for all q") {
    for (int q = 2; q <= kMaxAlphabet; ++q) {
        for (int r = 0; r < q; ++r) {
            const int s = sym_rep(r, q);
            CHECK(((s % q) + q) % q == r);
            CHECK(2 * std::abs(s) <= q);
            if (q % 2 == 0) CHECK(s != -q / 2);
        }
    }
}

TEST_CASE("flat index and unflatten") {
    const DomainSpec s32(3, 2);
    const std::vector<int> a{0, 0}, b{1, 2};
    CHECK(flat_index(a, s32) == 0);
    CHECK(flat_index(b, s32) == 5);
    CHECK(unflatten(8, s32) == std::vector<int>{2, 2});
    for (int q : {2, 3, 5}) {
        for (int n : {1, 2, 3}) {
            const DomainSpec spec(q, n);
            for (std::size_t x = 0; x < spec.size(); ++x) {
                const auto c = unflatten(x, spec);
                CHECK(c == oracle::coords(x, q, n));
                CHECK(flat_index(c, spec) == x);
            }
        }
    }
    const std::vector<int> bad{3, 0};
    CHECK_THROWS_AS(flat_index(bad, s32), DomainError);
    CHECK_THROWS_AS(unflatten(9, s32), DomainError);
}

TEST_CASE("domain limits") {
    CHECK_THROWS_AS(DomainSpec(1, 2), DomainError);
    CHECK_THROWS_AS(DomainSpec(65, 1), DomainError);
    CHECK_THROWS_AS(DomainSpec(3, 0), DomainError);
    CHECK_NOTHROW(DomainSpec(2, 40));
    CHECK_THROWS_AS(DomainSpec(2, 41), DomainError);
    CHECK(DomainSpec(4, 3).size() == 64);
}

TEST_CASE("inner product and negation") {
    const DomainSpec spec(5, 3);
    for (std::size_t x = 0; x < spec.size(); x += 7) {
        for (std::size_t z = 0; z < spec.size(); z += 5) {
            const auto cx = oracle::coords(x, 5, 3), cz = oracle::coords(z, 5, 3);
            int dot = 0;
            for (int i = 0; i < 3; ++i) dot += cx[static_cast<std::size_t>(i)] * cz[static_cast<std::size_t>(i)];
            CHECK(inner_product(x, z, spec) == dot % 5);
        }
        const auto nx = oracle::coords(negate(x, spec), 5, 3);
        const auto cx = oracle::coords(x, 5, 3);
        for (int i = 0; i < 3; ++i) CHECK((nx[static_cast<std::size_t>(i)] + cx[static_cast<std::size_t>(i)]) % 5 == 0);
    }
}

}  // TEST_SUITE domain

TEST_SUITE("cyclo") {

TEST_CASE("ring examples") {
    const CycloNum xi3 = CycloNum::root_power(3, 1);
    CHECK(cyclo_is_zero(cyclo_add(cyclo_add(xi3, cyclo_mul(xi3, xi3)), CycloNum::integer(3, 1))));
    const CycloNum xi4 = CycloNum::root_power(4, 1);
    CHECK(cyclo_mul(xi4, CycloNum::root_power(4, 3)) == CycloNum::integer(4, 1));
    for (int q : {3, 4, 5, 6, 7, 12}) {
        CHECK(cyclo_conj(CycloNum::root_power(q, 1)) == CycloNum::root_power(q, q - 1));
    }
    CHECK_THROWS_AS(cyclo_add(xi3, xi4), DomainError);
}

TEST_CASE("canonical form is unique") {
    // sum of all primitive 5th roots is -1
    CycloNum acc = CycloNum::integer(5, 0);
    for (int k = 1; k < 5; ++k) acc = acc + CycloNum::root_power(5, k);
    CHECK(acc == CycloNum::integer(5, -1));
    CHECK(acc.as_integer() == std::optional<std::int64_t>(-1));
    CHECK_FALSE(CycloNum::root_power(5, 1).as_integer().has_value());
    // xi_6^3 = -1, and xi_12 lifted agrees with xi_6
    CHECK(CycloNum::root_power(6, 3) == CycloNum::integer(6, -1));
    CHECK(CycloNum::root_power(6, 1).lift(12) == CycloNum::root_power(12, 2));
}

TEST_CASE("complex conversion is a ring homomorphism") {
    std::mt19937_64 rng(11);
    for (int q : {3, 4, 5, 7, 8, 9, 12, 15, 64}) {
        for (int trial = 0; trial < 20; ++trial) {
            CycloNum a = CycloNum::integer(q, 0), b = CycloNum::integer(q, 0);
            std::complex<double> ca = 0, cb = 0;
            for (int term = 0; term < 6; ++term) {
                const int ka = static_cast<int>(rng() % static_cast<unsigned>(q));
                const int kb = static_cast<int>(rng() % static_cast<unsigned>(q));
                a = a + CycloNum::root_power(q, ka);
                b = b - CycloNum::root_power(q, kb);
                ca += std::polar(1.0, 2 * std::numbers::pi * ka / q);
                cb -= std::polar(1.0, 2 * std::numbers::pi * kb / q);
            }
            const std::complex<double> prod = (a * b).to_complex();
            CHECK(std::abs(prod - ca * cb) <= 1e-12 * std::max(1.0, std::abs(ca * cb)) + 1e-12);
            CHECK(std::abs((a * b) .to_complex() - (b * a).to_complex()) == doctest::Approx(0.0));
            CHECK(a * b == b * a);
            CHECK((a + b).conj() == a.conj() + b.conj());
        }
    }
}

TEST_CASE("exact division") {
    const CycloNum x = CycloNum::root_power(7, 2) * 6;
    CHECK(x.divide_exact(3) == CycloNum::root_power(7, 2) * 2);
    CHECK_THROWS(x.divide_exact(4));
    CHECK_THROWS_AS(cyclotomic_field(193), DomainError);
}

}  // TEST_SUITE cyclo

TEST_SUITE("function") {

TEST_CASE("kind validation") {
    const DomainSpec spec(3, 1);
    CHECK_NOTHROW(DiscreteFunction::from_codes(spec, ValueKind::two_valued_pm1, {1, -1, 1}));
    CHECK_THROWS_AS(DiscreteFunction::from_codes(spec, ValueKind::two_valued_pm1, {1, 0, 1}), KindError);
    CHECK_THROWS_AS(DiscreteFunction::from_codes(spec, ValueKind::three_valued_omega, {0, 3, 1}), KindError);
    CHECK_THROWS_AS(DiscreteFunction::from_codes(spec, ValueKind::boolean01, {0, 2, 1}), KindError);
    CHECK_THROWS_AS(DiscreteFunction::from_codes(spec, ValueKind::integer, {0, 2}), DomainError);
    CHECK(parse_kind("omega3") == ValueKind::three_valued_omega);
    CHECK_THROWS_AS(parse_kind("pm2"), KindError);
    CHECK(ring_order(ValueKind::three_valued_omega, 4) == 12);
    CHECK(ring_order(ValueKind::three_valued_omega, 6) == 6);
}

TEST_CASE("pm1 recoding") {
    const DomainSpec spec(2, 1);
    const auto one = DiscreteFunction::from_codes(spec, ValueKind::boolean01, {1, 1});
    CHECK(one.to_pm1() == DiscreteFunction::from_codes(spec, ValueKind::two_valued_pm1, {-1, -1}));
    const auto ints = DiscreteFunction::from_codes(spec, ValueKind::integer, {7, 3});
    CHECK(ints.to_pm1() == DiscreteFunction::from_codes(spec, ValueKind::two_valued_pm1, {-1, 1}));
    const auto three = DiscreteFunction::from_codes(DomainSpec(3, 1), ValueKind::integer, {0, 1, 2});
    CHECK_THROWS_AS(three.to_pm1(), KindError);
    const auto w = DiscreteFunction::from_codes(DomainSpec(3, 1), ValueKind::three_valued_omega, {0, 1, 2});
    CHECK(w.is_unimodular());
    CHECK(std::abs(w.value(1) - std::polar(1.0, 2 * std::numbers::pi / 3)) < 1e-15);
}

}  // TEST_SUITE function
