#include "qspectra/domain.hpp"

namespace qspectra {

DomainSpec::DomainSpec(int q, int n) : q_(q), n_(n), size_(1) {
    if (q < 2 || q > kMaxAlphabet) {
        throw DomainError("alphabet size q must lie in [2, " + std::to_string(kMaxAlphabet) +
                          "], got " + std::to_string(q));
    }
    if (n < 1) {
        throw DomainError("arity n must be at least 1, got " + std::to_string(n));
    }
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= static_cast<std::uint64_t>(q);
        if (total > kMaxPoints) {
            throw DomainError("q^n exceeds 2^40 for q=" + std::to_string(q) +
                              ", n=" + std::to_string(n));
        }
    }
    size_ = static_cast<std::size_t>(total);
    strides_.assign(static_cast<std::size_t>(n), 1);
    for (int i = n - 2; i >= 0; --i) {
        strides_[static_cast<std::size_t>(i)] =
            strides_[static_cast<std::size_t>(i) + 1] * static_cast<std::size_t>(q);
    }
}

int sym_rep(int r, int q) {
    if (q < 2) {
        throw DomainError("sym_rep: q must be at least 2");
    }
    if (r < 0 || r >= q) {
        throw DomainError("sym_rep: residue " + std::to_string(r) + " outside [0, q)");
    }
    // odd q: upper end (q-1)/2; even q: upper end q/2
    return r <= q / 2 ? r : r - q;
}

std::size_t flat_index(std::span<const int> coords, const DomainSpec& spec) {
    if (coords.size() != static_cast<std::size_t>(spec.n())) {
        throw DomainError("flat_index: expected " + std::to_string(spec.n()) + " coordinates, got " +
                          std::to_string(coords.size()));
    }
    std::size_t flat = 0;
    for (int c : coords) {
        if (c < 0 || c >= spec.q()) {
            throw DomainError("flat_index: coordinate " + std::to_string(c) + " outside [0, q)");
        }
        flat = flat * static_cast<std::size_t>(spec.q()) + static_cast<std::size_t>(c);
    }
    return flat;
}

std::vector<int> unflatten(std::size_t flat, const DomainSpec& spec) {
    if (flat >= spec.size()) {
        throw DomainError("unflatten: index " + std::to_string(flat) + " outside [0, q^n)");
    }
    std::vector<int> coords(static_cast<std::size_t>(spec.n()));
    for (int i = spec.n() - 1; i >= 0; --i) {
        coords[static_cast<std::size_t>(i)] = static_cast<int>(flat % static_cast<std::size_t>(spec.q()));
        flat /= static_cast<std::size_t>(spec.q());
    }
    return coords;
}

int inner_product(std::size_t x, std::size_t z, const DomainSpec& spec) noexcept {
    const auto q = static_cast<std::size_t>(spec.q());
    std::size_t acc = 0;
    for (int i = 0; i < spec.n(); ++i) {
        acc += (x % q) * (z % q);
        x /= q;
        z /= q;
    }
    return static_cast<int>(acc % q);
}

std::size_t negate(std::size_t z, const DomainSpec& spec) noexcept {
    const auto q = static_cast<std::size_t>(spec.q());
    std::size_t out = 0;
    for (int i = 0; i < spec.n(); ++i) {
        const std::size_t c = (z / spec.stride(i)) % q;
        out += ((q - c) % q) * spec.stride(i);
    }
    return out;
}

}  // namespace qspectra
