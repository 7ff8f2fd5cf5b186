#include "qspectra/graphs.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include "qspectra/degrees.hpp"

namespace qspectra {

std::string_view graph_token(GraphKind kind) {
    return kind == GraphKind::hamming ? "hamming" : "cycle";
}

GraphKind parse_graph(std::string_view token) {
    if (token == "hamming") return GraphKind::hamming;
    if (token == "cycle" || token == "cycle_power") return GraphKind::cycle_power;
    throw DomainError("unknown graph kind '" + std::string(token) + "' (expected hamming or cycle)");
}

int vertex_degree(GraphKind kind, const DomainSpec& spec) {
    return kind == GraphKind::hamming ? spec.n() * (spec.q() - 1) : 2 * spec.n();
}

std::size_t edge_count(GraphKind kind, const DomainSpec& spec) {
    return spec.size() * static_cast<std::size_t>(vertex_degree(kind, spec)) / 2;
}

std::vector<Edge> edges(GraphKind kind, const DomainSpec& spec) {
    std::vector<Edge> out;
    out.reserve(edge_count(kind, spec));
    for_each_edge(kind, spec, [&](std::size_t x, std::size_t y, int dir) { out.push_back({x, y, dir}); });
    return out;
}

const std::vector<double>& sin_squared_table(int q) {
    static std::mutex mutex;
    static std::array<std::vector<double>, kMaxAlphabet + 1> tables;
    if (q < 2 || q > kMaxAlphabet) throw DomainError("sin_squared_table: q out of range");
    std::lock_guard lock(mutex);
    auto& table = tables[static_cast<std::size_t>(q)];
    if (table.empty()) {
        table.resize(static_cast<std::size_t>(q));
        for (int r = 0; r < q; ++r) {
            const long double s = std::sin(std::numbers::pi_v<long double> * sym_rep(r, q) / q);
            table[static_cast<std::size_t>(r)] = static_cast<double>(s * s);
        }
    }
    return table;
}

std::int64_t eigenvalue_hamming(std::size_t z, const DomainSpec& spec) {
    return static_cast<std::int64_t>(spec.q() - 1) * spec.n() - static_cast<std::int64_t>(spec.q()) * weight(z, spec);
}

double eigenvalue_cycle(std::size_t z, const DomainSpec& spec) {
    const auto& s2 = sin_squared_table(spec.q());
    double acc = 0.0;
    for (int i = 0; i < spec.n(); ++i) acc += s2[static_cast<std::size_t>(coordinate(z, i, spec))];
    return 2.0 * spec.n() - 4.0 * acc;
}

CycloNum eigenvalue_cycle_exact(std::size_t z, const DomainSpec& spec) {
    const int q = spec.q();
    std::vector<std::int64_t> cyclic(static_cast<std::size_t>(q), 0);
    for (int i = 0; i < spec.n(); ++i) {
        const int zi = coordinate(z, i, spec);
        cyclic[static_cast<std::size_t>(zi)] += 1;
        cyclic[static_cast<std::size_t>((q - zi) % q)] += 1;
    }
    return CycloNum::from_cyclic(q, cyclic);
}

double eigenvalue(GraphKind kind, std::size_t z, const DomainSpec& spec) {
    return kind == GraphKind::hamming ? static_cast<double>(eigenvalue_hamming(z, spec)) : eigenvalue_cycle(z, spec);
}

double quadratic_form(const Spectrum& s, GraphKind kind) {
    const DomainSpec& spec = s.spec();
    double acc = 0.0;
    for (std::size_t z = 0; z < spec.size(); ++z) {
        if (s.is_zero(z)) continue;
        acc += eigenvalue(kind, z, spec) * s.norm2(z);
    }
    return acc / static_cast<double>(spec.size());
}

std::vector<std::complex<double>> apply_adjacency(GraphKind kind, const DomainSpec& spec,
                                                  std::span<const std::complex<double>> v) {
    std::vector<std::complex<double>> out(spec.size(), 0.0);
    for_each_edge(kind, spec, [&](std::size_t x, std::size_t y, int) {
        out[x] += v[y];
        out[y] += v[x];
    });
    return out;
}

std::vector<CycloNum> apply_adjacency(GraphKind kind, const DomainSpec& spec, std::span<const CycloNum> v) {
    const int order = v.empty() ? 1 : v.front().order();
    std::vector<CycloNum> out(spec.size(), CycloNum(order));
    for_each_edge(kind, spec, [&](std::size_t x, std::size_t y, int) {
        out[x] = out[x] + v[y];
        out[y] = out[y] + v[x];
    });
    return out;
}

std::vector<CycloNum> character_exact(std::size_t z, const DomainSpec& spec) {
    std::vector<CycloNum> out;
    out.reserve(spec.size());
    for (std::size_t x = 0; x < spec.size(); ++x) {
        out.push_back(CycloNum::root_power(spec.q(), inner_product(x, z, spec)));
    }
    return out;
}

std::vector<std::complex<double>> character_values(std::size_t z, const DomainSpec& spec) {
    std::vector<std::complex<double>> out(spec.size());
    for (std::size_t x = 0; x < spec.size(); ++x) {
        out[x] = std::polar(1.0, 2.0 * std::numbers::pi * inner_product(x, z, spec) / spec.q());
    }
    return out;
}

int lee_distance(std::span<const int> u, std::span<const int> v, int q) {
    if (u.size() != v.size()) throw DomainError("lee_distance: length mismatch");
    int d = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const int diff = std::abs(u[i] - v[i]);
        d += std::min(diff, q - diff);
    }
    return d;
}

int hamming_distance(std::span<const int> u, std::span<const int> v) {
    if (u.size() != v.size()) throw DomainError("hamming_distance: length mismatch");
    int d = 0;
    for (std::size_t i = 0; i < u.size(); ++i) d += u[i] != v[i] ? 1 : 0;
    return d;
}

}  // namespace qspectra
