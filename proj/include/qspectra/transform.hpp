#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qspectra/cyclo.hpp"
#include "qspectra/function.hpp"

namespace qspectra {

/// Fourier-Hadamard coefficients W_f(z) = (f, phi_z) = sum_x f(x) xi^{-<x,z>},
/// indexed by the flat index of z. Unnormalized: f = q^{-n} sum_z W_f(z) phi_z.
///
/// Exact spectra hold canonical Z[xi_N] coefficients (N = ring_order of the
/// source kind); floating spectra hold complex doubles and a zero threshold.
class Spectrum {
public:
    static constexpr std::string_view kNormalization = "unnormalized W_f(z)=(f,phi_z)";

    /// Exact spectrum from canonical coefficients, phi(order) per entry.
    Spectrum(const DomainSpec& spec, ValueKind source_kind, int order, std::vector<std::int64_t> coefficients);
    /// Floating spectrum; entries with |W| <= zero_threshold count as zero.
    Spectrum(const DomainSpec& spec, ValueKind source_kind, std::vector<std::complex<double>> values,
             double zero_threshold);

    const DomainSpec& spec() const noexcept { return spec_; }
    ValueKind source_kind() const noexcept { return source_kind_; }
    bool exact() const noexcept { return exact_; }
    /// Root-of-unity order of the exact representation (0 for floating).
    int order() const noexcept { return order_; }
    std::size_t size() const noexcept { return spec_.size(); }

    CycloNum exact_at(std::size_t z) const;
    std::complex<double> value(std::size_t z) const noexcept { return approx_[z]; }
    /// |W_f(z)|^2 in double precision
    double norm2(std::size_t z) const noexcept { return std::norm(approx_[z]); }
    bool is_zero(std::size_t z) const noexcept { return zero_[z] != 0; }
    bool all_zero() const noexcept;
    double zero_threshold() const noexcept { return zero_threshold_; }

private:
    DomainSpec spec_;
    ValueKind source_kind_;
    bool exact_;
    int order_ = 0;
    int degree_ = 0;
    double zero_threshold_ = 0.0;
    std::vector<std::int64_t> coefficients_;
    std::vector<std::complex<double>> approx_;
    std::vector<std::uint8_t> zero_;
};

/// Axis-by-axis DFT over Z_q^n; exact for exact kinds.
Spectrum forward(const DiscreteFunction& f);
/// Direct double loop over x and z with canonical ring operations.
Spectrum naive_forward(const DiscreteFunction& f);
/// f(x) = q^{-n} sum_z W(z) phi_z(x). Exact spectra come back in the source
/// kind when the values allow it, else as integer or complex kind.
DiscreteFunction inverse(const Spectrum& s);

/// sum_z |W(z)|^2 in double precision.
double parseval_sum(const Spectrum& s);
/// sum_z W(z) conj(W(z)) computed exactly (exact spectra only); the result is
/// a rational integer for every function.
CycloNum parseval_exact(const Spectrum& s);

/// Spectrum in Z[x]/(x^N - 1) form, N = ring_order, kept unreduced so a
/// single table entry can be changed in O(q^n N): W(z) += delta xi^{-<x,z>}.
/// Used by streaming sweeps.
class SpectrumAccumulator {
public:
    explicit SpectrumAccumulator(const DiscreteFunction& f);

    const DomainSpec& spec() const noexcept { return spec_; }
    int order() const noexcept { return order_; }

    /// Adds delta * xi_N^{shift} to f(x): delta given in cyclic form of
    /// length N (a sparse list of (exponent, coefficient) pairs).
    void update(std::size_t x, std::span<const std::pair<int, std::int64_t>> delta);

    std::span<const std::int64_t> cyclic_at(std::size_t z) const noexcept {
        return {cyclic_.data() + z * static_cast<std::size_t>(order_), static_cast<std::size_t>(order_)};
    }
    Spectrum to_spectrum(ValueKind source_kind) const;

private:
    DomainSpec spec_;
    int order_;
    std::vector<std::int64_t> cyclic_;
    std::vector<int> inner_;  // <x, z> for x on one axis, cached per axis value
};

}  // namespace qspectra
