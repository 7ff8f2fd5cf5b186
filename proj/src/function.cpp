#include "qspectra/function.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qspectra {

std::string_view kind_token(ValueKind kind) {
    switch (kind) {
        case ValueKind::two_valued_pm1: return "pm1";
        case ValueKind::three_valued_omega: return "omega3";
        case ValueKind::boolean01: return "bool01";
        case ValueKind::integer: return "int";
        case ValueKind::complex: return "complex";
    }
    return "?";
}

ValueKind parse_kind(std::string_view token) {
    for (ValueKind k : {ValueKind::two_valued_pm1, ValueKind::three_valued_omega, ValueKind::boolean01,
                        ValueKind::integer, ValueKind::complex}) {
        if (kind_token(k) == token) return k;
    }
    throw KindError("unknown value kind '" + std::string(token) + "' (expected pm1, omega3, bool01, int or complex)");
}

int ring_order(ValueKind kind, int q) {
    return kind == ValueKind::three_valued_omega ? std::lcm(q, 3) : q;
}

DiscreteFunction DiscreteFunction::from_codes(const DomainSpec& spec, ValueKind kind, std::vector<std::int64_t> codes) {
    if (!is_exact(kind)) {
        throw KindError("from_codes: kind complex has no integer codes");
    }
    if (codes.size() != spec.size()) {
        throw DomainError("function table has " + std::to_string(codes.size()) + " values, expected q^n = " +
                          std::to_string(spec.size()));
    }
    for (std::size_t x = 0; x < codes.size(); ++x) {
        const std::int64_t c = codes[x];
        const bool ok = (kind == ValueKind::two_valued_pm1 && (c == 1 || c == -1)) ||
                        (kind == ValueKind::three_valued_omega && c >= 0 && c <= 2) ||
                        (kind == ValueKind::boolean01 && (c == 0 || c == 1)) || kind == ValueKind::integer;
        if (!ok) {
            throw KindError("value " + std::to_string(c) + " at index " + std::to_string(x) +
                            " is not valid for kind " + std::string(kind_token(kind)));
        }
    }
    DiscreteFunction f(spec, kind);
    f.codes_ = std::move(codes);
    return f;
}

DiscreteFunction DiscreteFunction::from_complex(const DomainSpec& spec, std::vector<std::complex<double>> values) {
    if (values.size() != spec.size()) {
        throw DomainError("function table has " + std::to_string(values.size()) + " values, expected q^n = " +
                          std::to_string(spec.size()));
    }
    DiscreteFunction f(spec, ValueKind::complex);
    f.complex_ = std::move(values);
    return f;
}

std::span<const std::int64_t> DiscreteFunction::codes() const {
    if (!exact()) throw KindError("complex-kind function has no integer codes");
    return codes_;
}

std::span<const std::complex<double>> DiscreteFunction::complex_values() const {
    if (exact()) throw KindError("exact-kind function has no floating table");
    return complex_;
}

std::complex<double> DiscreteFunction::value(std::size_t x) const {
    switch (kind_) {
        case ValueKind::complex: return complex_[x];
        case ValueKind::three_valued_omega: return cyclotomic_field(3).roots[static_cast<std::size_t>(codes_[x])];
        default: return {static_cast<double>(codes_[x]), 0.0};
    }
}

CycloNum DiscreteFunction::exact_value(std::size_t x, int order) const {
    if (!exact()) throw KindError("complex-kind function has no exact values");
    if (kind_ == ValueKind::three_valued_omega) {
        if (order % 3 != 0) throw DomainError("three-valued function needs a ring order divisible by 3");
        return CycloNum::root_power(order, codes_[x] * (order / 3));
    }
    return CycloNum::integer(order, codes_[x]);
}

bool DiscreteFunction::same_value(std::size_t x, std::size_t y) const noexcept {
    return exact() ? codes_[x] == codes_[y] : complex_[x] == complex_[y];
}

bool DiscreteFunction::is_constant() const noexcept {
    for (std::size_t x = 1; x < size(); ++x) {
        if (!same_value(0, x)) return false;
    }
    return true;
}

bool DiscreteFunction::is_unimodular() const {
    switch (kind_) {
        case ValueKind::two_valued_pm1:
        case ValueKind::three_valued_omega: return true;
        case ValueKind::boolean01: return false;
        case ValueKind::integer:
            return std::all_of(codes_.begin(), codes_.end(), [](std::int64_t c) { return c == 1 || c == -1; });
        case ValueKind::complex:
            return std::all_of(complex_.begin(), complex_.end(),
                               [](std::complex<double> v) { return std::abs(std::abs(v) - 1.0) <= 1e-12; });
    }
    return false;
}

DiscreteFunction DiscreteFunction::to_pm1() const {
    if (kind_ == ValueKind::two_valued_pm1) return *this;
    if (!exact()) throw KindError("two-valued recoding needs an exact kind");
    if (kind_ == ValueKind::boolean01) {
        std::vector<std::int64_t> out(codes_.size());
        std::transform(codes_.begin(), codes_.end(), out.begin(), [](std::int64_t c) { return 1 - 2 * c; });
        return from_codes(spec_, ValueKind::two_valued_pm1, std::move(out));
    }
    const auto [lo, hi] = std::minmax_element(codes_.begin(), codes_.end());
    const std::int64_t low = *lo;
    const std::int64_t high = *hi;
    std::vector<std::int64_t> out(codes_.size());
    for (std::size_t x = 0; x < codes_.size(); ++x) {
        const std::int64_t c = codes_[x];
        if (c != low && c != high) {
            throw KindError("function takes more than two values");
        }
        out[x] = c == low ? 1 : -1;
    }
    return from_codes(spec_, ValueKind::two_valued_pm1, std::move(out));
}

bool operator==(const DiscreteFunction& a, const DiscreteFunction& b) {
    return a.spec_ == b.spec_ && a.kind_ == b.kind_ && a.codes_ == b.codes_ && a.complex_ == b.complex_;
}

}  // namespace qspectra
