#include "qspectra/sensitivity.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "qspectra/degrees.hpp"

namespace qspectra {
namespace {

void check_axis(const DiscreteFunction& f, int axis) {
    if (axis < 0 || axis >= f.spec().n()) {
        throw DomainError("variable index " + std::to_string(axis) + " outside [0, " + std::to_string(f.spec().n()) + ")");
    }
}

// Calls fn(x) for every point with coordinate `axis` equal to 0.
template <class Fn>
void for_each_line_base(const DomainSpec& spec, int axis, Fn&& fn) {
    const std::size_t stride = spec.stride(axis);
    const std::size_t block = stride * static_cast<std::size_t>(spec.q());
    for (std::size_t outer = 0; outer < spec.size(); outer += block) {
        for (std::size_t inner = 0; inner < stride; ++inner) fn(outer + inner);
    }
}

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

double cycle_weighted_sum(const Spectrum& s) {
    const DomainSpec& spec = s.spec();
    const auto& s2 = sin_squared_table(spec.q());
    double acc = 0.0;
    for (std::size_t z = 0; z < spec.size(); ++z) {
        if (s.is_zero(z)) continue;
        double weight_sum = 0.0;
        for (int i = 0; i < spec.n(); ++i) weight_sum += s2[static_cast<std::size_t>(coordinate(z, i, spec))];
        acc += s.norm2(z) * weight_sum;
    }
    return acc;
}

}  // namespace

DiscreteFunction retract(const DiscreteFunction& f, int axis, int a) {
    const DomainSpec& spec = f.spec();
    check_axis(f, axis);
    if (a < 0 || a >= spec.q()) throw DomainError("retract value outside Z_q");
    if (spec.n() == 1) throw DomainError("retract of a one-variable function has no remaining coordinates");
    const DomainSpec sub(spec.q(), spec.n() - 1);
    const std::size_t stride = spec.stride(axis);
    const std::size_t block = stride * static_cast<std::size_t>(spec.q());
    const std::size_t offset = static_cast<std::size_t>(a) * stride;
    if (f.exact()) {
        const auto codes = f.codes();
        std::vector<std::int64_t> out;
        out.reserve(sub.size());
        for (std::size_t outer = 0; outer < spec.size(); outer += block) {
            for (std::size_t inner = 0; inner < stride; ++inner) out.push_back(codes[outer + offset + inner]);
        }
        return DiscreteFunction::from_codes(sub, f.kind(), std::move(out));
    }
    const auto values = f.complex_values();
    std::vector<std::complex<double>> out;
    out.reserve(sub.size());
    for (std::size_t outer = 0; outer < spec.size(); outer += block) {
        for (std::size_t inner = 0; inner < stride; ++inner) out.push_back(values[outer + offset + inner]);
    }
    return DiscreteFunction::from_complex(sub, std::move(out));
}

std::vector<int> relevant_variables(const DiscreteFunction& f) {
    const DomainSpec& spec = f.spec();
    std::vector<int> out;
    for (int axis = 0; axis < spec.n(); ++axis) {
        const std::size_t stride = spec.stride(axis);
        bool relevant = false;
        for_each_line_base(spec, axis, [&](std::size_t base) {
            if (relevant) return;
            for (int c = 1; c < spec.q(); ++c) {
                if (!f.same_value(base, base + static_cast<std::size_t>(c) * stride)) {
                    relevant = true;
                    return;
                }
            }
        });
        if (relevant) out.push_back(axis);
    }
    return out;
}

int relevant_count(const DiscreteFunction& f) {
    return static_cast<int>(relevant_variables(f).size());
}

EdgeCount mixed_edges(const DiscreteFunction& f, GraphKind kind) {
    if (!f.exact()) {
        throw KindError("mixed-edge counting needs an exact value kind");
    }
    EdgeCount count;
    count.per_direction.assign(static_cast<std::size_t>(f.spec().n()), 0);
    const auto codes = f.codes();
    for_each_edge(kind, f.spec(), [&](std::size_t x, std::size_t y, int dir) {
        if (codes[x] != codes[y]) ++count.per_direction[static_cast<std::size_t>(dir)];
    });
    for (std::int64_t c : count.per_direction) count.total += c;
    return count;
}

SensitivityReport sensitivity_report(const DiscreteFunction& f) {
    SensitivityReport report;
    report.relevant = relevant_variables(f);
    report.t = static_cast<int>(report.relevant.size());
    EdgeCount cycle = mixed_edges(f, GraphKind::cycle_power);
    EdgeCount hamming = mixed_edges(f, GraphKind::hamming);
    report.I_cycle = cycle.total;
    report.I_hamming = hamming.total;
    report.per_direction_cycle = std::move(cycle.per_direction);
    report.per_direction_hamming = std::move(hamming.per_direction);
    return report;
}

double spectral_I_two_valued(const Spectrum& s) {
    return cycle_weighted_sum(s) / static_cast<double>(s.size());
}

double spectral_I_three_valued(const Spectrum& s) {
    return 4.0 * cycle_weighted_sum(s) / (3.0 * static_cast<double>(s.size()));
}

double spectral_I_three_valued_hamming(const Spectrum& s) {
    const DomainSpec& spec = s.spec();
    double acc = 0.0;
    for (std::size_t z = 0; z < spec.size(); ++z) {
        if (s.is_zero(z)) continue;
        acc += s.norm2(z) * weight(z, spec);
    }
    return static_cast<double>(spec.q()) * acc / (3.0 * static_cast<double>(spec.size()));
}

std::int64_t retract_pair_count(const DiscreteFunction& f, int axis) {
    check_axis(f, axis);
    const DomainSpec& spec = f.spec();
    const int q = spec.q();
    const std::size_t stride = spec.stride(axis);
    // class_of[a]: smallest b with retract b equal to retract a
    std::vector<int> class_of(static_cast<std::size_t>(q));
    for (int a = 0; a < q; ++a) {
        class_of[static_cast<std::size_t>(a)] = a;
        for (int b = 0; b < a; ++b) {
            if (class_of[static_cast<std::size_t>(b)] != b) continue;
            bool equal = true;
            for_each_line_base(spec, axis, [&](std::size_t base) {
                if (equal && !f.same_value(base + static_cast<std::size_t>(a) * stride,
                                           base + static_cast<std::size_t>(b) * stride)) {
                    equal = false;
                }
            });
            if (equal) {
                class_of[static_cast<std::size_t>(a)] = b;
                break;
            }
        }
    }
    std::map<int, std::int64_t> sizes;
    for (int c : class_of) ++sizes[c];
    std::int64_t pairs = 0;
    for (const auto& [cls, t] : sizes) pairs += t * (q - t);
    return pairs;
}

std::int64_t retract_difference_support(const DiscreteFunction& f, int axis, int a, int b) {
    check_axis(f, axis);
    const DomainSpec& spec = f.spec();
    if (a < 0 || a >= spec.q() || b < 0 || b >= spec.q()) throw DomainError("retract value outside Z_q");
    const std::size_t stride = spec.stride(axis);
    std::int64_t count = 0;
    for_each_line_base(spec, axis, [&](std::size_t base) {
        if (!f.same_value(base + static_cast<std::size_t>(a) * stride, base + static_cast<std::size_t>(b) * stride)) {
            ++count;
        }
    });
    return count;
}

std::int64_t support_size(const DiscreteFunction& f) {
    std::int64_t count = 0;
    if (f.kind() == ValueKind::three_valued_omega) return static_cast<std::int64_t>(f.size());
    if (f.exact()) {
        for (std::int64_t c : f.codes()) count += c != 0 ? 1 : 0;
    } else {
        for (const auto& v : f.complex_values()) count += v != 0.0 ? 1 : 0;
    }
    return count;
}

SupportReport check_support_bounds(const DiscreteFunction& f) {
    return check_support_bounds(f, forward(f));
}

SupportReport check_support_bounds(const DiscreteFunction& f, const Spectrum& s) {
    const DomainSpec& spec = f.spec();
    const int q = spec.q();
    const int n = spec.n();
    SupportReport report;
    const std::vector<int> relevant = relevant_variables(f);
    report.t = static_cast<int>(relevant.size());
    const bool nonzero = !s.all_zero();
    report.deg0 = nonzero ? degree_profile(s).deg0 : 0;
    const std::int64_t threshold = ipow(q, n - report.deg0);
    report.support_threshold = threshold;

    // |supp f| >= q^{n - deg0}; two-valued tables also check the indicator of
    // each value class, which has the same deg0 when f is not constant.
    report.support_applicable = q >= 3 && nonzero;
    std::vector<std::int64_t> supports;
    if (nonzero) supports.push_back(support_size(f));
    if (f.exact()) {
        const auto codes = f.codes();
        std::map<std::int64_t, std::int64_t> classes;
        for (std::int64_t c : codes) ++classes[c];
        if (classes.size() == 2) {
            for (const auto& [value, size] : classes) supports.push_back(size);
        }
    }
    report.min_support = supports.empty() ? 0 : *std::min_element(supports.begin(), supports.end());
    report.support_holds = supports.empty() || report.min_support >= threshold;

    for (int axis = 0; axis < n; ++axis) {
        for (int a = 0; a < q; ++a) {
            for (int b = a + 1; b < q; ++b) {
                const std::int64_t diff = retract_difference_support(f, axis, a, b);
                if (diff == 0) continue;
                ++report.retract_pairs_checked;
                if (diff < threshold) report.retract_holds = false;
            }
        }
    }

    std::vector<std::uint8_t> irrelevant(static_cast<std::size_t>(n), 1);
    for (int i : relevant) irrelevant[static_cast<std::size_t>(i)] = 0;
    for (std::size_t z = 0; z < spec.size() && report.vanishing_holds; ++z) {
        if (s.is_zero(z)) continue;
        for (int i = 0; i < n; ++i) {
            if (irrelevant[static_cast<std::size_t>(i)] && coordinate(z, i, spec) != 0) {
                report.vanishing_holds = false;
                break;
            }
        }
    }
    report.deg0_le_t = report.deg0 <= report.t;
    report.deg0_le_n_minus_t = report.deg0 <= n - report.t;
    return report;
}

}  // namespace qspectra
