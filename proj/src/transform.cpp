#include "qspectra/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qspectra {
namespace {

// Cyclic (x^N - 1) representation of every f(x), N = ring_order.
std::vector<std::int64_t> cyclic_table(const DiscreteFunction& f, int order) {
    const auto n_order = static_cast<std::size_t>(order);
    std::vector<std::int64_t> table(f.size() * n_order, 0);
    const auto codes = f.codes();
    const bool omega = f.kind() == ValueKind::three_valued_omega;
    for (std::size_t x = 0; x < f.size(); ++x) {
        if (omega) {
            table[x * n_order + static_cast<std::size_t>(codes[x] * (order / 3))] = 1;
        } else {
            table[x * n_order] = codes[x];
        }
    }
    return table;
}

// One tensor DFT pass per axis, in place on the cyclic table:
// out[.., z_i, ..] = sum_{x_i} in[.., x_i, ..] * xi_q^{sign * x_i z_i}.
void cyclic_dft(std::vector<std::int64_t>& table, const DomainSpec& spec, int order, int sign) {
    const int q = spec.q();
    const auto n_order = static_cast<std::size_t>(order);
    const int step = order / q;
    std::vector<std::int64_t> line(static_cast<std::size_t>(q) * n_order);
    for (int axis = 0; axis < spec.n(); ++axis) {
        const std::size_t stride = spec.stride(axis);
        const std::size_t block = stride * static_cast<std::size_t>(q);
        for (std::size_t outer = 0; outer < spec.size(); outer += block) {
            for (std::size_t inner = 0; inner < stride; ++inner) {
                const std::size_t base = outer + inner;
                std::fill(line.begin(), line.end(), 0);
                for (int zi = 0; zi < q; ++zi) {
                    std::int64_t* dst = line.data() + static_cast<std::size_t>(zi) * n_order;
                    for (int xi = 0; xi < q; ++xi) {
                        const std::int64_t* src =
                            table.data() + (base + static_cast<std::size_t>(xi) * stride) * n_order;
                        const int shift = ((sign * xi * zi) % q + q) % q * step;
                        for (std::size_t k = 0; k < n_order; ++k) {
                            dst[(k + static_cast<std::size_t>(shift)) % n_order] += src[k];
                        }
                    }
                }
                for (int zi = 0; zi < q; ++zi) {
                    std::copy_n(line.data() + static_cast<std::size_t>(zi) * n_order, n_order,
                                table.data() + (base + static_cast<std::size_t>(zi) * stride) * n_order);
                }
            }
        }
    }
}

void complex_dft(std::vector<std::complex<double>>& table, const DomainSpec& spec, int sign) {
    const int q = spec.q();
    std::vector<std::complex<double>> twiddle(static_cast<std::size_t>(q));
    for (int k = 0; k < q; ++k) {
        const double angle = sign * 2.0 * std::numbers::pi * k / q;
        twiddle[static_cast<std::size_t>(k)] = std::polar(1.0, angle);
    }
    std::vector<std::complex<double>> line(static_cast<std::size_t>(q));
    for (int axis = 0; axis < spec.n(); ++axis) {
        const std::size_t stride = spec.stride(axis);
        const std::size_t block = stride * static_cast<std::size_t>(q);
        for (std::size_t outer = 0; outer < spec.size(); outer += block) {
            for (std::size_t inner = 0; inner < stride; ++inner) {
                const std::size_t base = outer + inner;
                for (int zi = 0; zi < q; ++zi) {
                    std::complex<double> acc{};
                    for (int xi = 0; xi < q; ++xi) {
                        acc += table[base + static_cast<std::size_t>(xi) * stride] *
                               twiddle[static_cast<std::size_t>((xi * zi) % q)];
                    }
                    line[static_cast<std::size_t>(zi)] = acc;
                }
                for (int zi = 0; zi < q; ++zi) {
                    table[base + static_cast<std::size_t>(zi) * stride] = line[static_cast<std::size_t>(zi)];
                }
            }
        }
    }
}

double floating_threshold(const DomainSpec& spec, double max_abs) {
    return 1e-8 * std::pow(static_cast<double>(spec.q()), spec.n() / 2.0) * max_abs;
}

Spectrum exact_from_cyclic(const DomainSpec& spec, ValueKind kind, int order, std::span<const std::int64_t> table) {
    const CyclotomicField& field = cyclotomic_field(order);
    const auto n_order = static_cast<std::size_t>(order);
    const auto degree = static_cast<std::size_t>(field.degree);
    std::vector<std::int64_t> coeffs(spec.size() * degree);
    std::vector<std::int64_t> work;
    for (std::size_t z = 0; z < spec.size(); ++z) {
        field.reduce(table.subspan(z * n_order, n_order), std::span(coeffs).subspan(z * degree, degree), work);
    }
    return Spectrum(spec, kind, order, std::move(coeffs));
}

}  // namespace

Spectrum::Spectrum(const DomainSpec& spec, ValueKind source_kind, int order, std::vector<std::int64_t> coefficients)
    : spec_(spec), source_kind_(source_kind), exact_(true), order_(order) {
    const CyclotomicField& field = cyclotomic_field(order);
    degree_ = field.degree;
    const auto degree = static_cast<std::size_t>(degree_);
    if (coefficients.size() != spec.size() * degree) {
        throw DomainError("exact spectrum needs phi(N) coefficients per entry");
    }
    coefficients_ = std::move(coefficients);
    approx_.resize(spec.size());
    zero_.resize(spec.size());
    for (std::size_t z = 0; z < spec.size(); ++z) {
        const std::span<const std::int64_t> c(coefficients_.data() + z * degree, degree);
        approx_[z] = field.cyclic_to_complex(c);
        zero_[z] = std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; }) ? 1 : 0;
    }
}

Spectrum::Spectrum(const DomainSpec& spec, ValueKind source_kind, std::vector<std::complex<double>> values,
                   double zero_threshold)
    : spec_(spec), source_kind_(source_kind), exact_(false), zero_threshold_(zero_threshold) {
    if (values.size() != spec.size()) {
        throw DomainError("spectrum needs q^n entries");
    }
    approx_ = std::move(values);
    zero_.resize(spec.size());
    for (std::size_t z = 0; z < spec.size(); ++z) {
        zero_[z] = std::abs(approx_[z]) <= zero_threshold_ ? 1 : 0;
    }
}

CycloNum Spectrum::exact_at(std::size_t z) const {
    if (!exact_) throw KindError("floating spectrum has no exact coefficients");
    const auto degree = static_cast<std::size_t>(degree_);
    std::vector<std::int64_t> cyclic(static_cast<std::size_t>(order_), 0);
    std::copy_n(coefficients_.begin() + static_cast<std::ptrdiff_t>(z * degree), degree, cyclic.begin());
    return CycloNum::from_cyclic(order_, cyclic);
}

bool Spectrum::all_zero() const noexcept {
    return std::all_of(zero_.begin(), zero_.end(), [](std::uint8_t v) { return v != 0; });
}

Spectrum forward(const DiscreteFunction& f) {
    const DomainSpec& spec = f.spec();
    if (f.exact()) {
        const int order = ring_order(f.kind(), spec.q());
        std::vector<std::int64_t> table = cyclic_table(f, order);
        cyclic_dft(table, spec, order, -1);
        return exact_from_cyclic(spec, f.kind(), order, table);
    }
    const auto values = f.complex_values();
    std::vector<std::complex<double>> table(values.begin(), values.end());
    double max_abs = 0.0;
    for (const auto& v : table) max_abs = std::max(max_abs, std::abs(v));
    complex_dft(table, spec, -1);
    return Spectrum(spec, f.kind(), std::move(table), floating_threshold(spec, max_abs));
}

Spectrum naive_forward(const DiscreteFunction& f) {
    const DomainSpec& spec = f.spec();
    const int q = spec.q();
    if (f.exact()) {
        const int order = ring_order(f.kind(), q);
        const int step = order / q;
        const auto degree = static_cast<std::size_t>(cyclotomic_field(order).degree);
        // terms[x * order + k] = f(x) * xi^k, canonical
        std::vector<CycloNum> roots;
        for (int k = 0; k < order; ++k) roots.push_back(CycloNum::root_power(order, k));
        std::vector<std::int64_t> terms(f.size() * static_cast<std::size_t>(order) * degree);
        for (std::size_t x = 0; x < f.size(); ++x) {
            const CycloNum v = f.exact_value(x, order);
            for (int k = 0; k < order; ++k) {
                const CycloNum t = cyclo_mul(v, roots[static_cast<std::size_t>(k)]);
                std::copy(t.coefficients().begin(), t.coefficients().end(),
                          terms.begin() + static_cast<std::ptrdiff_t>((x * static_cast<std::size_t>(order) + static_cast<std::size_t>(k)) * degree));
            }
        }
        std::vector<std::int64_t> coeffs(spec.size() * degree);
        for (std::size_t z = 0; z < spec.size(); ++z) {
            std::int64_t* acc = coeffs.data() + z * degree;
            for (std::size_t x = 0; x < f.size(); ++x) {
                const int e = ((-inner_product(x, z, spec) * step) % order + order) % order;
                const std::int64_t* t = terms.data() + (x * static_cast<std::size_t>(order) + static_cast<std::size_t>(e)) * degree;
                for (std::size_t j = 0; j < degree; ++j) acc[j] += t[j];
            }
        }
        return Spectrum(spec, f.kind(), order, std::move(coeffs));
    }
    const auto values = f.complex_values();
    double max_abs = 0.0;
    for (const auto& v : values) max_abs = std::max(max_abs, std::abs(v));
    std::vector<std::complex<double>> out(spec.size());
    for (std::size_t z = 0; z < spec.size(); ++z) {
        std::complex<double> acc{};
        for (std::size_t x = 0; x < f.size(); ++x) {
            acc += values[x] * std::polar(1.0, -2.0 * std::numbers::pi * inner_product(x, z, spec) / q);
        }
        out[z] = acc;
    }
    return Spectrum(spec, f.kind(), std::move(out), floating_threshold(spec, max_abs));
}

DiscreteFunction inverse(const Spectrum& s) {
    const DomainSpec& spec = s.spec();
    const auto total = static_cast<std::int64_t>(spec.size());
    if (!s.exact()) {
        std::vector<std::complex<double>> table(spec.size());
        for (std::size_t z = 0; z < spec.size(); ++z) table[z] = s.value(z);
        complex_dft(table, spec, +1);
        for (auto& v : table) v /= static_cast<double>(total);
        return DiscreteFunction::from_complex(spec, std::move(table));
    }

    const int order = s.order();
    const auto n_order = static_cast<std::size_t>(order);
    std::vector<std::int64_t> table(spec.size() * n_order, 0);
    for (std::size_t z = 0; z < spec.size(); ++z) {
        const CycloNum w = s.exact_at(z);
        std::copy(w.coefficients().begin(), w.coefficients().end(),
                  table.begin() + static_cast<std::ptrdiff_t>(z * n_order));
    }
    cyclic_dft(table, spec, order, +1);

    std::vector<CycloNum> values;
    values.reserve(spec.size());
    for (std::size_t x = 0; x < spec.size(); ++x) {
        values.push_back(CycloNum::from_cyclic(order, std::span(table).subspan(x * n_order, n_order)).divide_exact(total));
    }

    const ValueKind kind = s.source_kind();
    if (kind == ValueKind::three_valued_omega) {
        std::vector<std::int64_t> codes(spec.size());
        bool ok = true;
        for (std::size_t x = 0; x < spec.size() && ok; ++x) {
            ok = false;
            for (int v = 0; v < 3; ++v) {
                if (values[x] == CycloNum::root_power(order, v * (order / 3))) {
                    codes[x] = v;
                    ok = true;
                    break;
                }
            }
        }
        if (ok) return DiscreteFunction::from_codes(spec, kind, std::move(codes));
    }
    std::vector<std::int64_t> codes(spec.size());
    bool integral = true;
    for (std::size_t x = 0; x < spec.size() && integral; ++x) {
        const auto v = values[x].as_integer();
        integral = v.has_value();
        if (integral) codes[x] = *v;
    }
    if (integral) {
        const auto fits = [&](ValueKind k) {
            return std::all_of(codes.begin(), codes.end(), [k](std::int64_t c) {
                return k == ValueKind::integer || (k == ValueKind::two_valued_pm1 && (c == 1 || c == -1)) ||
                       (k == ValueKind::boolean01 && (c == 0 || c == 1));
            });
        };
        const ValueKind target = (kind != ValueKind::three_valued_omega && fits(kind)) ? kind : ValueKind::integer;
        return DiscreteFunction::from_codes(spec, target, std::move(codes));
    }
    std::vector<std::complex<double>> approx(spec.size());
    for (std::size_t x = 0; x < spec.size(); ++x) approx[x] = values[x].to_complex();
    return DiscreteFunction::from_complex(spec, std::move(approx));
}

double parseval_sum(const Spectrum& s) {
    double acc = 0.0;
    for (std::size_t z = 0; z < s.size(); ++z) acc += s.norm2(z);
    return acc;
}

CycloNum parseval_exact(const Spectrum& s) {
    if (!s.exact()) throw KindError("parseval_exact needs an exact spectrum");
    CycloNum acc(s.order());
    for (std::size_t z = 0; z < s.size(); ++z) {
        if (s.is_zero(z)) continue;
        const CycloNum w = s.exact_at(z);
        acc = acc + w * w.conj();
    }
    return acc;
}

SpectrumAccumulator::SpectrumAccumulator(const DiscreteFunction& f)
    : spec_(f.spec()), order_(ring_order(f.kind(), f.spec().q())) {
    if (!f.exact()) throw KindError("SpectrumAccumulator needs an exact kind");
    cyclic_ = cyclic_table(f, order_);
    cyclic_dft(cyclic_, spec_, order_, -1);
    inner_.resize(spec_.size());
}

void SpectrumAccumulator::update(std::size_t x, std::span<const std::pair<int, std::int64_t>> delta) {
    const int q = spec_.q();
    const int step = order_ / q;
    const auto n_order = static_cast<std::size_t>(order_);
    // inner_[z] = <x, z> mod q, built one axis at a time (z_n fastest)
    inner_[0] = 0;
    std::size_t filled = 1;
    for (int axis = 0; axis < spec_.n(); ++axis) {
        const int xi = coordinate(x, axis, spec_);
        for (std::size_t p = filled; p-- > 0;) {
            const int base = inner_[p];
            for (int c = q - 1; c >= 0; --c) {
                inner_[p * static_cast<std::size_t>(q) + static_cast<std::size_t>(c)] = (base + xi * c) % q;
            }
        }
        filled *= static_cast<std::size_t>(q);
    }
    for (std::size_t z = 0; z < spec_.size(); ++z) {
        std::int64_t* w = cyclic_.data() + z * n_order;
        const int rot = (q - inner_[z]) % q * step;
        for (const auto& [exponent, coeff] : delta) {
            w[static_cast<std::size_t>((exponent + rot) % order_)] += coeff;
        }
    }
}

Spectrum SpectrumAccumulator::to_spectrum(ValueKind source_kind) const {
    return exact_from_cyclic(spec_, source_kind, order_, cyclic_);
}

}  // namespace qspectra
