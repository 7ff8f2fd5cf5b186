#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qspectra/domain.hpp"

namespace qspectra {

/// Largest root-of-unity order handled by the exact arithmetic
/// (lcm(q, 3) for q <= 64 stays below this).
inline constexpr int kMaxCycloOrder = 192;

/// Z[x]/(Phi_N) data for one order N: the cyclotomic polynomial and a table
/// of the complex roots e^{2 pi i k / N}. Instances are created once per
/// order and live for the whole process.
struct CyclotomicField {
    int order;
    int degree;                       // phi(N)
    std::vector<std::int64_t> poly;   // Phi_N, monic, lowest degree first, size degree + 1
    std::vector<std::complex<double>> roots;

    /// Reduces a polynomial (lowest degree first) modulo Phi_N and writes the
    /// `degree` canonical coefficients to `out`. `work` is clobbered.
    void reduce(std::span<const std::int64_t> poly_in, std::span<std::int64_t> out,
                std::vector<std::int64_t>& work) const;

    /// Zero test for an element given in Z[x]/(x^N - 1) form (size N).
    bool cyclic_is_zero(std::span<const std::int64_t> cyclic, std::vector<std::int64_t>& work) const;

    std::complex<double> cyclic_to_complex(std::span<const std::int64_t> cyclic) const;
};

const CyclotomicField& cyclotomic_field(int order);

/// Element of Z[xi_N], xi_N = e^{2 pi i / N}, stored in the canonical basis
/// 1, xi, ..., xi^{phi(N)-1}. Value type; immutable operations.
class CycloNum {
public:
    explicit CycloNum(int order = 1);

    static CycloNum integer(int order, std::int64_t value);
    /// xi_N^k for any integer k
    static CycloNum root_power(int order, std::int64_t k);
    /// Reduces a representative in Z[x]/(x^N - 1) (size N) to canonical form.
    static CycloNum from_cyclic(int order, std::span<const std::int64_t> cyclic);

    int order() const noexcept { return field_->order; }
    std::span<const std::int64_t> coefficients() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;
    /// The rational integer this element equals, if it is one.
    std::optional<std::int64_t> as_integer() const;
    std::complex<double> to_complex() const;

    CycloNum conj() const;
    /// Same number viewed in Z[xi_M]; M must be a multiple of order().
    CycloNum lift(int multiple_order) const;
    /// Exact division by a rational integer; throws if not divisible.
    CycloNum divide_exact(std::int64_t divisor) const;

    CycloNum operator-() const;
    friend CycloNum operator+(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator-(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
    friend CycloNum operator*(const CycloNum& a, std::int64_t k);
    friend bool operator==(const CycloNum& a, const CycloNum& b);

    std::string to_string() const;

private:
    CycloNum(const CyclotomicField* field, std::vector<std::int64_t> coeffs)
        : field_(field), coeffs_(std::move(coeffs)) {}
    std::vector<std::int64_t> to_cyclic() const;

    const CyclotomicField* field_;
    std::vector<std::int64_t> coeffs_;
};

CycloNum cyclo_add(const CycloNum& a, const CycloNum& b);
CycloNum cyclo_mul(const CycloNum& a, const CycloNum& b);
CycloNum cyclo_conj(const CycloNum& a);
bool cyclo_is_zero(const CycloNum& a);

}  // namespace qspectra
