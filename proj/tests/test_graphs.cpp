#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "qspectra/graphs.hpp"

using namespace qspectra;

namespace {

std::size_t at(std::initializer_list<int> c, const DomainSpec& spec) {
    const std::vector<int> v(c);
    return flat_index(v, spec);
}

std::vector<std::pair<std::size_t, std::size_t>> sorted_pairs(GraphKind kind, const DomainSpec& spec) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const Edge& e : edges(kind, spec)) out.emplace_back(std::min(e.x, e.y), std::max(e.x, e.y));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_SUITE("graphs") {

TEST_CASE("eigenvalue examples") {
    const DomainSpec s32(3, 2);
    CHECK(eigenvalue_hamming(0, s32) == 4);
    CHECK(eigenvalue_hamming(at({0, 2}, s32), s32) == 1);
    CHECK(eigenvalue_hamming(at({1, 2}, s32), s32) == -2);
    CHECK(eigenvalue_cycle(0, s32) == doctest::Approx(4.0));
    CHECK(eigenvalue_cycle(at({1, 2}, s32), s32) == doctest::Approx(-2.0));
    const DomainSpec s41(4, 1);
    CHECK(eigenvalue_cycle(2, s41) == doctest::Approx(-2.0));
    CHECK(eigenvalue_cycle(1, s41) == doctest::Approx(0.0));
    CHECK(eigenvalue_cycle_exact(2, s41) == CycloNum::integer(4, -2));
    CHECK(edge_count(GraphKind::hamming, s32) == 18);
    CHECK(edge_count(GraphKind::cycle_power, DomainSpec(5, 2)) == 50);
    CHECK(vertex_degree(GraphKind::hamming, DomainSpec(5, 3)) == 12);
    CHECK(vertex_degree(GraphKind::cycle_power, DomainSpec(2, 3)) == 6);
    CHECK(parse_graph(graph_token(GraphKind::cycle_power)) == GraphKind::cycle_power);
}

TEST_CASE("edges agree with all-pairs distances") {
    for (int q = 2; q <= 6; ++q) {
        for (int n = 1; n <= 3; ++n) {
            const DomainSpec spec(q, n);
            for (GraphKind kind : {GraphKind::hamming, GraphKind::cycle_power}) {
                auto ref = oracle::edge_list(kind == GraphKind::cycle_power, q, n);
                std::sort(ref.begin(), ref.end());
                CHECK(sorted_pairs(kind, spec) == ref);
                CHECK(edge_count(kind, spec) == ref.size());
            }
        }
    }
    // the triangle C_3
    CHECK(sorted_pairs(GraphKind::cycle_power, DomainSpec(3, 1)) ==
          std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {0, 2}, {1, 2}});
    std::vector<int> per(2);
    for (const Edge& e : edges(GraphKind::cycle_power, DomainSpec(5, 2))) ++per[static_cast<std::size_t>(e.direction)];
    CHECK(per == std::vector<int>{25, 25});
}

TEST_CASE("characters are eigenvectors of the adjacency operator") {
    for (int q : {2, 3, 4, 5, 6}) {
        for (int n : {1, 2, 3}) {
            const DomainSpec spec(q, n);
            for (std::size_t z = 0; z < spec.size(); ++z) {
                const auto phi = character_values(z, spec);
                const auto exact = character_exact(z, spec);
                for (GraphKind kind : {GraphKind::hamming, GraphKind::cycle_power}) {
                    const auto av = apply_adjacency(kind, spec, phi);
                    const double lambda = eigenvalue(kind, z, spec);
                    for (std::size_t x = 0; x < spec.size(); ++x) CHECK(std::abs(av[x] - lambda * phi[x]) < 1e-9);
                }
                const auto ae = apply_adjacency(GraphKind::cycle_power, spec, exact);
                const CycloNum lambda = eigenvalue_cycle_exact(z, spec);
                CHECK(std::abs(lambda.to_complex() - eigenvalue_cycle(z, spec)) < 1e-12);
                for (std::size_t x = 0; x < spec.size(); ++x) CHECK(ae[x] == lambda * exact[x]);
                const auto ah = apply_adjacency(GraphKind::hamming, spec, exact);
                for (std::size_t x = 0; x < spec.size(); ++x) {
                    CHECK(ah[x] == exact[x] * eigenvalue_hamming(z, spec));
                }
            }
        }
    }
}

TEST_CASE("cycle eigenvalues peak only at z = 0") {
    for (int q = 2; q <= 7; ++q) {
        const DomainSpec spec(q, 2);
        for (std::size_t z = 0; z < spec.size(); ++z) {
            const double l = eigenvalue_cycle(z, spec);
            CHECK(l <= 4.0 + 1e-12);
            if (z != 0) CHECK(l < 4.0 - 1e-9);
        }
    }
}

TEST_CASE("quadratic form equals the edge sum") {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int q : {2, 3, 4, 5}) {
        const DomainSpec spec(q, 2);
        const auto one = DiscreteFunction::from_codes(spec, ValueKind::integer, std::vector<std::int64_t>(spec.size(), 1));
        CHECK(quadratic_form(forward(one), GraphKind::cycle_power) == doctest::Approx(4.0 * static_cast<double>(spec.size())));
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<std::int64_t> codes(spec.size());
            for (auto& c : codes) c = d(rng);
            const auto f = DiscreteFunction::from_codes(spec, ValueKind::integer, codes);
            const Spectrum s = forward(f);
            for (GraphKind kind : {GraphKind::hamming, GraphKind::cycle_power}) {
                double direct = 0;
                for (const auto& [x, y] : oracle::edge_list(kind == GraphKind::cycle_power, q, 2)) {
                    direct += 2.0 * static_cast<double>(codes[x] * codes[y]);
                }
                CHECK(quadratic_form(s, kind) == doctest::Approx(direct).epsilon(1e-12));
            }
        }
    }
    // phi_1 on the triangle: sum over its 3 edges of 2 Re(w) = -3
    const auto phi1 = DiscreteFunction::from_codes(DomainSpec(3, 1), ValueKind::three_valued_omega, {0, 1, 2});
    CHECK(quadratic_form(forward(phi1), GraphKind::cycle_power) == doctest::Approx(-3.0));
}

TEST_CASE("Lee and Hamming distances") {
    const std::vector<int> a{0, 4}, b{4, 0}, c{2, 2}, e{0, 0};
    CHECK(lee_distance(a, b, 5) == 2);
    CHECK(lee_distance(c, e, 5) == 4);
    CHECK(hamming_distance(a, b) == 2);
    CHECK(hamming_distance(a, a) == 0);
    for (int q : {2, 3}) {
        const DomainSpec spec(q, 3);
        for (std::size_t x = 0; x < spec.size(); ++x) {
            for (std::size_t y = 0; y < spec.size(); ++y) {
                const auto u = oracle::coords(x, q, 3), v = oracle::coords(y, q, 3);
                CHECK(lee_distance(u, v, q) == hamming_distance(u, v));
            }
        }
    }
}

}  // TEST_SUITE graphs
