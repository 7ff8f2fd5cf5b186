#include "qspectra/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

namespace qspectra {
namespace {

// Exact quotient of num by the monic polynomial den (lowest degree first).
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
    const std::size_t dd = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
        const std::int64_t c = num[k];
        quot[k - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) {
            num[k - dd + j] -= c * den[j];
        }
    }
    return quot;
}

std::unique_ptr<CyclotomicField> build_field(int order, std::map<int, std::unique_ptr<CyclotomicField>>& cache);

const CyclotomicField& field_locked(int order, std::map<int, std::unique_ptr<CyclotomicField>>& cache) {
    auto it = cache.find(order);
    if (it == cache.end()) {
        it = cache.emplace(order, build_field(order, cache)).first;
    }
    return *it->second;
}

std::unique_ptr<CyclotomicField> build_field(int order, std::map<int, std::unique_ptr<CyclotomicField>>& cache) {
    // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d
    std::vector<std::int64_t> poly(static_cast<std::size_t>(order) + 1, 0);
    poly.front() = -1;
    poly.back() = 1;
    for (int d = 1; d < order; ++d) {
        if (order % d == 0) {
            poly = divide_monic(std::move(poly), field_locked(d, cache).poly);
        }
    }
    auto field = std::make_unique<CyclotomicField>();
    field->order = order;
    field->degree = static_cast<int>(poly.size()) - 1;
    field->poly = std::move(poly);
    field->roots.resize(static_cast<std::size_t>(order));
    for (int k = 0; k < order; ++k) {
        const long double angle = 2.0L * std::numbers::pi_v<long double> * k / order;
        field->roots[static_cast<std::size_t>(k)] = {static_cast<double>(std::cos(angle)),
                                                     static_cast<double>(std::sin(angle))};
    }
    return field;
}

std::int64_t mod_order(std::int64_t k, int order) {
    const std::int64_t r = k % order;
    return r < 0 ? r + order : r;
}

void check_same_order(const CycloNum& a, const CycloNum& b) {
    if (a.order() != b.order()) {
        throw DomainError("cyclotomic operands have different orders " + std::to_string(a.order()) +
                          " and " + std::to_string(b.order()));
    }
}

}  // namespace

const CyclotomicField& cyclotomic_field(int order) {
    if (order < 1 || order > kMaxCycloOrder) {
        throw DomainError("root-of-unity order " + std::to_string(order) + " outside [1, " +
                          std::to_string(kMaxCycloOrder) + "]");
    }
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CyclotomicField>> cache;
    std::lock_guard lock(mutex);
    return field_locked(order, cache);
}

void CyclotomicField::reduce(std::span<const std::int64_t> poly_in, std::span<std::int64_t> out,
                             std::vector<std::int64_t>& work) const {
    work.assign(poly_in.begin(), poly_in.end());
    const auto d = static_cast<std::size_t>(degree);
    for (std::size_t k = work.size(); k-- > d;) {
        const std::int64_t c = work[k];
        if (c == 0) continue;
        // poly is monic: subtract c * x^{k-d} * Phi_N
        for (std::size_t j = 0; j <= d; ++j) {
            work[k - d + j] -= c * poly[j];
        }
    }
    for (std::size_t j = 0; j < d; ++j) {
        out[j] = j < work.size() ? work[j] : 0;
    }
}

bool CyclotomicField::cyclic_is_zero(std::span<const std::int64_t> cyclic, std::vector<std::int64_t>& work) const {
    work.assign(cyclic.begin(), cyclic.end());
    const auto d = static_cast<std::size_t>(degree);
    for (std::size_t k = work.size(); k-- > d;) {
        const std::int64_t c = work[k];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= d; ++j) {
            work[k - d + j] -= c * poly[j];
        }
    }
    for (std::size_t j = 0; j < d && j < work.size(); ++j) {
        if (work[j] != 0) return false;
    }
    return true;
}

std::complex<double> CyclotomicField::cyclic_to_complex(std::span<const std::int64_t> cyclic) const {
    std::complex<double> acc{};
    for (std::size_t k = 0; k < cyclic.size(); ++k) {
        if (cyclic[k] != 0) {
            acc += static_cast<double>(cyclic[k]) * roots[k % roots.size()];
        }
    }
    return acc;
}

CycloNum::CycloNum(int order)
    : field_(&cyclotomic_field(order)), coeffs_(static_cast<std::size_t>(field_->degree), 0) {}

CycloNum CycloNum::integer(int order, std::int64_t value) {
    CycloNum out(order);
    out.coeffs_[0] = value;
    return out;
}

CycloNum CycloNum::root_power(int order, std::int64_t k) {
    std::vector<std::int64_t> cyclic(static_cast<std::size_t>(order), 0);
    cyclic[static_cast<std::size_t>(mod_order(k, order))] = 1;
    return from_cyclic(order, cyclic);
}

CycloNum CycloNum::from_cyclic(int order, std::span<const std::int64_t> cyclic) {
    const CyclotomicField& field = cyclotomic_field(order);
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(field.degree));
    std::vector<std::int64_t> work;
    field.reduce(cyclic, coeffs, work);
    return CycloNum(&field, std::move(coeffs));
}

std::vector<std::int64_t> CycloNum::to_cyclic() const {
    std::vector<std::int64_t> cyclic(static_cast<std::size_t>(order()), 0);
    std::copy(coeffs_.begin(), coeffs_.end(), cyclic.begin());
    return cyclic;
}

bool CycloNum::is_zero() const noexcept {
    for (std::int64_t c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

std::optional<std::int64_t> CycloNum::as_integer() const {
    for (std::size_t j = 1; j < coeffs_.size(); ++j) {
        if (coeffs_[j] != 0) return std::nullopt;
    }
    return coeffs_[0];
}

std::complex<double> CycloNum::to_complex() const {
    return field_->cyclic_to_complex(coeffs_);
}

CycloNum CycloNum::conj() const {
    const int order_n = order();
    std::vector<std::int64_t> cyclic(static_cast<std::size_t>(order_n), 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        cyclic[static_cast<std::size_t>(mod_order(-static_cast<std::int64_t>(k), order_n))] += coeffs_[k];
    }
    return from_cyclic(order_n, cyclic);
}

CycloNum CycloNum::lift(int multiple_order) const {
    if (multiple_order % order() != 0) {
        throw DomainError("cannot lift order " + std::to_string(order()) + " to " + std::to_string(multiple_order));
    }
    const std::size_t step = static_cast<std::size_t>(multiple_order / order());
    std::vector<std::int64_t> cyclic(static_cast<std::size_t>(multiple_order), 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        cyclic[k * step] = coeffs_[k];
    }
    return from_cyclic(multiple_order, cyclic);
}

CycloNum CycloNum::divide_exact(std::int64_t divisor) const {
    if (divisor == 0) {
        throw DomainError("division by zero");
    }
    std::vector<std::int64_t> out(coeffs_);
    for (std::int64_t& c : out) {
        if (c % divisor != 0) {
            throw DomainError("cyclotomic value " + to_string() + " is not divisible by " + std::to_string(divisor));
        }
        c /= divisor;
    }
    return CycloNum(field_, std::move(out));
}

CycloNum CycloNum::operator-() const {
    std::vector<std::int64_t> out(coeffs_);
    for (std::int64_t& c : out) c = -c;
    return CycloNum(field_, std::move(out));
}

CycloNum operator+(const CycloNum& a, const CycloNum& b) {
    check_same_order(a, b);
    std::vector<std::int64_t> out(a.coeffs_);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += b.coeffs_[j];
    return CycloNum(a.field_, std::move(out));
}

CycloNum operator-(const CycloNum& a, const CycloNum& b) {
    check_same_order(a, b);
    std::vector<std::int64_t> out(a.coeffs_);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] -= b.coeffs_[j];
    return CycloNum(a.field_, std::move(out));
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    check_same_order(a, b);
    const std::size_t d = a.coeffs_.size();
    std::vector<std::int64_t> prod(d == 0 ? 1 : 2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    std::vector<std::int64_t> out(d);
    std::vector<std::int64_t> work;
    a.field_->reduce(prod, out, work);
    return CycloNum(a.field_, std::move(out));
}

CycloNum operator*(const CycloNum& a, std::int64_t k) {
    std::vector<std::int64_t> out(a.coeffs_);
    for (std::int64_t& c : out) c *= k;
    return CycloNum(a.field_, std::move(out));
}

bool operator==(const CycloNum& a, const CycloNum& b) {
    return a.order() == b.order() && a.coeffs_ == b.coeffs_;
}

std::string CycloNum::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const std::int64_t c = coeffs_[k];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const std::int64_t mag = c < 0 ? -c : c;
        if (k == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << '*';
            os << 'w';
            if (k > 1) os << '^' << k;
        }
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

CycloNum cyclo_add(const CycloNum& a, const CycloNum& b) { return a + b; }
CycloNum cyclo_mul(const CycloNum& a, const CycloNum& b) { return a * b; }
CycloNum cyclo_conj(const CycloNum& a) { return a.conj(); }
bool cyclo_is_zero(const CycloNum& a) { return a.is_zero(); }

}  // namespace qspectra
