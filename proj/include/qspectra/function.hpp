#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qspectra/cyclo.hpp"
#include "qspectra/domain.hpp"

namespace qspectra {

enum class ValueKind {
    two_valued_pm1,      // values in {-1, 1}
    three_valued_omega,  // values in {1, w, w^2}, w = e^{2 pi i / 3}; stored as exponents 0/1/2
    boolean01,           // values in {0, 1}
    integer,             // arbitrary int64 values
    complex,             // floating complex values
};

/// File token of a kind: pm1, omega3, bool01, int, complex.
std::string_view kind_token(ValueKind kind);
ValueKind parse_kind(std::string_view token);

constexpr bool is_exact(ValueKind kind) noexcept { return kind != ValueKind::complex; }

/// Order N of the cyclotomic ring Z[xi_N] holding the values of a function
/// of this kind together with every character of Z_q^n.
int ring_order(ValueKind kind, int q);

/// Dense table of a function on Z_q^n. Exact kinds store one integer code per
/// point (the value itself, or the exponent of w for three_valued_omega);
/// the complex kind stores floating values.
class DiscreteFunction {
public:
    static DiscreteFunction from_codes(const DomainSpec& spec, ValueKind kind, std::vector<std::int64_t> codes);
    static DiscreteFunction from_complex(const DomainSpec& spec, std::vector<std::complex<double>> values);

    const DomainSpec& spec() const noexcept { return spec_; }
    ValueKind kind() const noexcept { return kind_; }
    bool exact() const noexcept { return is_exact(kind_); }
    std::size_t size() const noexcept { return spec_.size(); }

    /// Exact kinds only.
    std::span<const std::int64_t> codes() const;
    /// Complex kind only.
    std::span<const std::complex<double>> complex_values() const;

    std::complex<double> value(std::size_t x) const;
    /// f(x) in Z[xi_order]; order must be a multiple of ring_order(kind, q).
    CycloNum exact_value(std::size_t x, int order) const;

    /// Exact equality of the values at two points (bitwise for complex).
    bool same_value(std::size_t x, std::size_t y) const noexcept;
    bool is_constant() const noexcept;
    bool is_unimodular() const;

    /// Two-valued recoding onto {-1, 1}: identity for pm1, 1 - 2f for bool01,
    /// otherwise the smaller code maps to 1 and the larger to -1. Throws
    /// KindError when the function takes more than two values.
    DiscreteFunction to_pm1() const;

    friend bool operator==(const DiscreteFunction& a, const DiscreteFunction& b);

private:
    DiscreteFunction(DomainSpec spec, ValueKind kind) : spec_(spec), kind_(kind) {}

    DomainSpec spec_;
    ValueKind kind_;
    std::vector<std::int64_t> codes_;
    std::vector<std::complex<double>> complex_;
};

}  // namespace qspectra
