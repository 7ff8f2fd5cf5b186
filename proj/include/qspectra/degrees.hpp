#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "qspectra/function.hpp"
#include "qspectra/transform.hpp"

namespace qspectra {

/// deg_m of a function whose spectrum is identically zero.
class UndefinedDegreeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Number of nonzero coordinates of z.
int weight(std::size_t z, const DomainSpec& spec);
/// sum_k |sym_rep(z_k)|^m, with 0^0 = 0 so that char_degree(z, 0) == weight(z).
std::int64_t char_degree(std::size_t z, int m, const DomainSpec& spec);
std::int64_t char_degree(std::span<const int> residues, int m, int q);

struct DegreeProfile {
    int deg0 = 0;
    std::int64_t deg1 = 0;
    std::int64_t deg2 = 0;
    std::map<int, std::int64_t> generic;  // m -> deg_m for every requested m
};

/// deg_m(f) = max over z with W_f(z) != 0 of char_degree(z, m), for m = 0, 1, 2
/// and every m in `ms`. Throws UndefinedDegreeError on an all-zero spectrum.
DegreeProfile degree_profile(const Spectrum& s, std::span<const int> ms = {});

// ---- Boolean functions on {0,1}^n -----------------------------------------

/// M_f(y) over GF(2), indexed like the truth table (x_n is the lowest bit).
struct AnfTable {
    int n = 0;
    std::vector<std::uint8_t> coefficients;
};

/// Real multilinear coefficients a(y); integer valued functions get exact
/// integer coefficients, others double with a 1e-9 zero threshold.
struct NnfTable {
    int n = 0;
    std::variant<std::vector<std::int64_t>, std::vector<double>> coefficients;

    bool exact() const noexcept { return coefficients.index() == 0; }
    bool is_zero(std::size_t y) const;
    double at(std::size_t y) const;
};

/// Butterfly Moebius transform; needs q = 2 and kind boolean01.
AnfTable moebius(const DiscreteFunction& f);
/// Moebius transform applied to an ANF table (inverse of itself).
AnfTable moebius(const AnfTable& anf);
int algebraic_degree(const AnfTable& anf);

/// a(y) = sum_{x <= y} (-1)^{wt(y)-wt(x)} f(x); needs q = 2 and real values.
NnfTable nnf(const DiscreteFunction& f);
int numerical_degree(const NnfTable& table);
/// Evaluates the NNF polynomial at every point of {0,1}^n.
std::vector<double> evaluate_nnf(const NnfTable& table);

// ---- Interpolation over T^n ------------------------------------------------

/// Polynomial over C with per-variable exponents below |T|. Monomials are
/// keyed by their exponent vector; coefficients below the zero threshold are
/// dropped.
struct InterpPolynomial {
    int n = 0;
    std::vector<std::complex<double>> points;  // T
    std::map<std::vector<int>, std::complex<double>> terms;

    std::complex<double> evaluate(std::span<const std::complex<double>> x) const;
    /// Max total degree of a monomial (0 for the zero polynomial).
    int degree() const;
    /// Max number of distinct variables in a monomial.
    int variable_degree() const;
};

/// Interpolates values given on T^n (flat order over indices into T, x_n
/// fastest). Builds P by recursion on the last variable using the Lagrange
/// basis of T. Throws DomainError on repeated points.
InterpPolynomial lagrange_interpolate(std::span<const std::complex<double>> values,
                                      std::span<const std::complex<double>> points, int n,
                                      double zero_threshold = 1e-9);

struct Prop2Report {
    int variable_degree_g = 0;  // deg'_num g
    int deg0_f = 0;
    int degree_g = 0;           // deg_num g
    std::int64_t deg1_f = 0;
    bool variable_degree_matches = false;  // deg'_num g == deg_0 f
    bool degree_dominates = false;         // deg_num g >= deg_1 f
};

/// Interpolates g with f = g o s, s(x) = xi^x per coordinate, and compares its
/// degrees with deg_0 f and deg_1 f. Constant and zero functions report 0s.
Prop2Report check_prop2(const DiscreteFunction& f);

struct Prop3Report {
    int deg_alg = 0;
    int deg0 = 0;        // of (-1)^f
    int min_weight = 0;  // smallest wt(y) with W_{(-1)^f}(y) != 0
    int n = 0;
    bool stated_holds = false;  // deg_alg <= min{deg0, n - deg0}
    bool exempt = false;        // deg_alg <= 1
    bool refined_holds = false; // deg_alg <= min{deg0, n - min_weight}
};

/// Compares deg_alg(f) with min{deg_0, n - deg_0} for a Boolean function.
Prop3Report check_prop3(const DiscreteFunction& f);

}  // namespace qspectra
