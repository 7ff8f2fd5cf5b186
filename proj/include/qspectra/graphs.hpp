#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qspectra/cyclo.hpp"
#include "qspectra/domain.hpp"
#include "qspectra/transform.hpp"

namespace qspectra {

/// Cayley graphs on Z_q^n: hamming is H(n,q) (connecting set Z_q \ {0} per
/// coordinate), cycle_power is C_q^n (connecting set {-1, 1}). For q = 2 the
/// cycle power is a multigraph with every edge doubled, so it stays 2n-regular.
enum class GraphKind { hamming, cycle_power };

std::string_view graph_token(GraphKind kind);
GraphKind parse_graph(std::string_view token);

int vertex_degree(GraphKind kind, const DomainSpec& spec);
/// Number of (multi)edges: n(q-1)q^n/2 for hamming, n q^n for cycle_power.
std::size_t edge_count(GraphKind kind, const DomainSpec& spec);

struct Edge {
    std::size_t x;
    std::size_t y;
    int direction;  // 0-based coordinate in which x and y differ
};

/// Calls fn(x, y, direction) once per undirected edge (twice per edge for the
/// q = 2 cycle power). Deterministic order: by x, then direction.
template <class Fn>
void for_each_edge(GraphKind kind, const DomainSpec& spec, Fn&& fn) {
    const int q = spec.q();
    for (std::size_t x = 0; x < spec.size(); ++x) {
        for (int i = 0; i < spec.n(); ++i) {
            const std::size_t stride = spec.stride(i);
            const int xi = coordinate(x, i, spec);
            const std::size_t base = x - static_cast<std::size_t>(xi) * stride;
            if (kind == GraphKind::cycle_power) {
                fn(x, base + static_cast<std::size_t>((xi + 1) % q) * stride, i);
            } else {
                for (int c = xi + 1; c < q; ++c) fn(x, base + static_cast<std::size_t>(c) * stride, i);
            }
        }
    }
}

std::vector<Edge> edges(GraphKind kind, const DomainSpec& spec);

/// sin^2(pi k / q) for every residue k, memoized per q.
const std::vector<double>& sin_squared_table(int q);

/// (q-1)n - q wt(z)
std::int64_t eigenvalue_hamming(std::size_t z, const DomainSpec& spec);
/// 2n - 4 sum_k a_k(z) sin^2(pi k / q), a_k(z) = multiplicity of the symmetric
/// representative k among the coordinates of z.
double eigenvalue_cycle(std::size_t z, const DomainSpec& spec);
/// The same eigenvalue as an element of Z[xi_q]: sum_i xi^{z_i} + xi^{-z_i}.
CycloNum eigenvalue_cycle_exact(std::size_t z, const DomainSpec& spec);
double eigenvalue(GraphKind kind, std::size_t z, const DomainSpec& spec);

/// (Af, f) = q^{-n} sum_z lambda_z |W_f(z)|^2.
double quadratic_form(const Spectrum& s, GraphKind kind);

/// (Av)(x) = sum over neighbours y of v(y), with multiplicity.
std::vector<std::complex<double>> apply_adjacency(GraphKind kind, const DomainSpec& spec,
                                                  std::span<const std::complex<double>> v);
std::vector<CycloNum> apply_adjacency(GraphKind kind, const DomainSpec& spec, std::span<const CycloNum> v);

/// phi_z as exact values in Z[xi_q].
std::vector<CycloNum> character_exact(std::size_t z, const DomainSpec& spec);
std::vector<std::complex<double>> character_values(std::size_t z, const DomainSpec& spec);

int lee_distance(std::span<const int> u, std::span<const int> v, int q);
int hamming_distance(std::span<const int> u, std::span<const int> v);

}  // namespace qspectra
