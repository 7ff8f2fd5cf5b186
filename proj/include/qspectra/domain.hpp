#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qspectra {

/// Invalid alphabet size, arity, coordinate or index.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operation not defined for the value kind of its argument.
class KindError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kMaxAlphabet = 64;
inline constexpr std::uint64_t kMaxPoints = std::uint64_t{1} << 40;

/// The group Z_q^n. Points are indexed with x_n varying fastest.
class DomainSpec {
public:
    DomainSpec(int q, int n);

    int q() const noexcept { return q_; }
    int n() const noexcept { return n_; }
    /// q^n
    std::size_t size() const noexcept { return size_; }
    /// q^k for 0 <= k <= n
    std::size_t stride(int axis) const noexcept { return strides_[static_cast<std::size_t>(axis)]; }

    friend bool operator==(const DomainSpec& a, const DomainSpec& b) noexcept {
        return a.q_ == b.q_ && a.n_ == b.n_;
    }

private:
    int q_;
    int n_;
    std::size_t size_;
    // strides_[i] = q^{n-1-i}: the flat-index step of coordinate i (0-based)
    std::vector<std::size_t> strides_;
};

/// Symmetric representative of residue r in Z_q. For odd q the range is
/// {-(q-1)/2, ..., (q-1)/2}; for even q it is {-(q-2)/2, ..., q/2}.
int sym_rep(int r, int q);

std::size_t flat_index(std::span<const int> coords, const DomainSpec& spec);
std::vector<int> unflatten(std::size_t flat, const DomainSpec& spec);

/// Coordinate `axis` (0-based) of the point with the given flat index.
inline int coordinate(std::size_t flat, int axis, const DomainSpec& spec) noexcept {
    return static_cast<int>((flat / spec.stride(axis)) % static_cast<std::size_t>(spec.q()));
}

/// <x, z> mod q for two flat indices.
int inner_product(std::size_t x, std::size_t z, const DomainSpec& spec) noexcept;

/// Flat index of -z (componentwise mod q).
std::size_t negate(std::size_t z, const DomainSpec& spec) noexcept;

}  // namespace qspectra
