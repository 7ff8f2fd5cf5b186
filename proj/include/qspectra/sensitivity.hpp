#pragma once

#include <cstdint>
#include <vector>

#include "qspectra/function.hpp"
#include "qspectra/graphs.hpp"
#include "qspectra/transform.hpp"

namespace qspectra {

struct EdgeCount {
    std::int64_t total = 0;
    std::vector<std::int64_t> per_direction;
};

struct SensitivityReport {
    std::vector<int> relevant;  // 0-based variable indices
    int t = 0;
    std::int64_t I_cycle = 0;
    std::int64_t I_hamming = 0;
    std::vector<std::int64_t> per_direction_cycle;
    std::vector<std::int64_t> per_direction_hamming;
};

/// f with coordinate `axis` (0-based) fixed to a, as a function on Z_q^{n-1}.
/// Throws DomainError for n = 1 (no coordinates would remain) or bad indices.
DiscreteFunction retract(const DiscreteFunction& f, int axis, int a);

/// Variable i is relevant iff two points differing only in coordinate i
/// carry different values.
std::vector<int> relevant_variables(const DiscreteFunction& f);
int relevant_count(const DiscreteFunction& f);

/// Mixed coloured edges {x, y} with f(x) != f(y). Needs an exact kind.
EdgeCount mixed_edges(const DiscreteFunction& f, GraphKind kind);
SensitivityReport sensitivity_report(const DiscreteFunction& f);

/// q^{-n} sum_z |W(z)|^2 sum_k a_k(z) sin^2(pi k / q): the mixed-edge count
/// on C_q^n of a {-1, 1}-valued function.
double spectral_I_two_valued(const Spectrum& s);
/// 4/(3 q^n) sum_z |W(z)|^2 sum_k a_k(z) sin^2(pi k / q), for values in {1, w, w^2}.
double spectral_I_three_valued(const Spectrum& s);
/// q/(3 q^n) sum_z |W(z)|^2 wt(z): mixed edges of a {1, w, w^2}-valued
/// function on H(n, q).
double spectral_I_three_valued_hamming(const Spectrum& s);

/// Groups the q retracts at `axis` into equality classes of sizes t_j and
/// returns sum_j t_j (q - t_j), the number of ordered pairs of distinct retracts.
std::int64_t retract_pair_count(const DiscreteFunction& f, int axis);

/// Number of positions where the retracts at a and b differ, i.e. the support
/// of f|_{x_i=a} - f|_{x_i=b}.
std::int64_t retract_difference_support(const DiscreteFunction& f, int axis, int a, int b);

/// Number of points where f is nonzero (exact kinds; omega3 never vanishes).
std::int64_t support_size(const DiscreteFunction& f);

struct SupportReport {
    int deg0 = 0;
    int t = 0;
    bool support_applicable = false;  // q >= 3 and f != 0
    bool support_holds = true;        // |supp f| >= q^{n - deg0} for f and, if two-valued, both indicators
    std::int64_t min_support = 0;
    std::int64_t support_threshold = 0;
    bool retract_holds = true;        // every differing retract pair: |supp diff| >= q^{n - deg0}
    std::int64_t retract_pairs_checked = 0;
    bool vanishing_holds = true;      // W(z) = 0 when z_i != 0 for an irrelevant i
    bool deg0_le_t = true;            // deg0 <= t
    bool deg0_le_n_minus_t = true;    // the n - t variant, recorded only
};

/// Support bounds for nonzero functions with deg_0 <= m, retract-difference
/// supports, vanishing of coefficients on irrelevant coordinates and
/// deg_0 <= t(f). `s` must be the spectrum of f.
SupportReport check_support_bounds(const DiscreteFunction& f, const Spectrum& s);
SupportReport check_support_bounds(const DiscreteFunction& f);

}  // namespace qspectra
