#include "qspectra/degrees.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

namespace qspectra {
namespace {

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

void require_boolean_cube(const DiscreteFunction& f, const char* what) {
    if (f.spec().q() != 2) {
        throw DomainError(std::string(what) + " needs q = 2, got q = " + std::to_string(f.spec().q()));
    }
}

}  // namespace

int weight(std::size_t z, const DomainSpec& spec) {
    int w = 0;
    for (int i = 0; i < spec.n(); ++i) {
        if (coordinate(z, i, spec) != 0) ++w;
    }
    return w;
}

std::int64_t char_degree(std::span<const int> residues, int m, int q) {
    if (m < 0) throw DomainError("char_degree: m must be non-negative");
    std::int64_t acc = 0;
    for (int r : residues) {
        const int s = sym_rep(r, q);
        if (s != 0) acc += ipow(s < 0 ? -s : s, m);
    }
    return acc;
}

std::int64_t char_degree(std::size_t z, int m, const DomainSpec& spec) {
    const std::vector<int> coords = unflatten(z, spec);
    return char_degree(coords, m, spec.q());
}

DegreeProfile degree_profile(const Spectrum& s, std::span<const int> ms) {
    if (s.all_zero()) {
        throw UndefinedDegreeError("degree of the zero function is undefined");
    }
    const DomainSpec& spec = s.spec();
    std::vector<int> orders = {0, 1, 2};
    orders.insert(orders.end(), ms.begin(), ms.end());
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());

    std::vector<std::int64_t> best(orders.size(), 0);
    std::vector<int> coords(static_cast<std::size_t>(spec.n()));
    for (std::size_t z = 0; z < spec.size(); ++z) {
        if (s.is_zero(z)) continue;
        for (int i = 0; i < spec.n(); ++i) coords[static_cast<std::size_t>(i)] = coordinate(z, i, spec);
        for (std::size_t k = 0; k < orders.size(); ++k) {
            best[k] = std::max(best[k], char_degree(coords, orders[k], spec.q()));
        }
    }
    DegreeProfile profile;
    for (std::size_t k = 0; k < orders.size(); ++k) {
        if (orders[k] == 0) profile.deg0 = static_cast<int>(best[k]);
        if (orders[k] == 1) profile.deg1 = best[k];
        if (orders[k] == 2) profile.deg2 = best[k];
    }
    for (int m : ms) {
        profile.generic[m] = best[static_cast<std::size_t>(std::find(orders.begin(), orders.end(), m) - orders.begin())];
    }
    return profile;
}

AnfTable moebius(const DiscreteFunction& f) {
    require_boolean_cube(f, "moebius");
    if (f.kind() != ValueKind::boolean01) {
        throw KindError("moebius needs a bool01 function");
    }
    AnfTable anf{f.spec().n(), {}};
    const auto codes = f.codes();
    anf.coefficients.assign(codes.begin(), codes.end());
    return moebius(anf);
}

AnfTable moebius(const AnfTable& anf) {
    AnfTable out = anf;
    auto& c = out.coefficients;
    for (std::size_t bit = 1; bit < c.size(); bit <<= 1) {
        for (std::size_t y = 0; y < c.size(); ++y) {
            if (y & bit) c[y] ^= c[y ^ bit];
        }
    }
    return out;
}

int algebraic_degree(const AnfTable& anf) {
    int deg = 0;
    for (std::size_t y = 0; y < anf.coefficients.size(); ++y) {
        if (anf.coefficients[y]) deg = std::max(deg, std::popcount(y));
    }
    return deg;
}

bool NnfTable::is_zero(std::size_t y) const {
    if (exact()) return std::get<0>(coefficients)[y] == 0;
    return std::abs(std::get<1>(coefficients)[y]) <= 1e-9;
}

double NnfTable::at(std::size_t y) const {
    if (exact()) return static_cast<double>(std::get<0>(coefficients)[y]);
    return std::get<1>(coefficients)[y];
}

NnfTable nnf(const DiscreteFunction& f) {
    require_boolean_cube(f, "nnf");
    NnfTable table;
    table.n = f.spec().n();
    if (f.exact() && f.kind() != ValueKind::three_valued_omega) {
        const auto codes = f.codes();
        std::vector<std::int64_t> a(codes.begin(), codes.end());
        for (std::size_t bit = 1; bit < a.size(); bit <<= 1) {
            for (std::size_t y = 0; y < a.size(); ++y) {
                if (y & bit) a[y] -= a[y ^ bit];
            }
        }
        table.coefficients = std::move(a);
        return table;
    }
    std::vector<double> a(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
        const std::complex<double> v = f.value(x);
        if (std::abs(v.imag()) > 1e-9) {
            throw KindError("nnf needs a real-valued function");
        }
        a[x] = v.real();
    }
    for (std::size_t bit = 1; bit < a.size(); bit <<= 1) {
        for (std::size_t y = 0; y < a.size(); ++y) {
            if (y & bit) a[y] -= a[y ^ bit];
        }
    }
    table.coefficients = std::move(a);
    return table;
}

int numerical_degree(const NnfTable& table) {
    int deg = 0;
    const std::size_t size = std::size_t{1} << table.n;
    for (std::size_t y = 0; y < size; ++y) {
        if (!table.is_zero(y)) deg = std::max(deg, std::popcount(y));
    }
    return deg;
}

std::vector<double> evaluate_nnf(const NnfTable& table) {
    const std::size_t size = std::size_t{1} << table.n;
    std::vector<double> out(size, 0.0);
    for (std::size_t x = 0; x < size; ++x) {
        double acc = 0.0;
        // monomial x^y is 1 exactly when y is a submask of x
        for (std::size_t y = x;; y = (y - 1) & x) {
            acc += table.at(y);
            if (y == 0) break;
        }
        out[x] = acc;
    }
    return out;
}

std::complex<double> InterpPolynomial::evaluate(std::span<const std::complex<double>> x) const {
    std::complex<double> acc{};
    for (const auto& [exps, coeff] : terms) {
        std::complex<double> mono = coeff;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            for (int e = 0; e < exps[i]; ++e) mono *= x[i];
        }
        acc += mono;
    }
    return acc;
}

int InterpPolynomial::degree() const {
    int deg = 0;
    for (const auto& [exps, coeff] : terms) {
        int total = 0;
        for (int e : exps) total += e;
        deg = std::max(deg, total);
    }
    return deg;
}

int InterpPolynomial::variable_degree() const {
    int deg = 0;
    for (const auto& [exps, coeff] : terms) {
        deg = std::max(deg, static_cast<int>(std::count_if(exps.begin(), exps.end(), [](int e) { return e > 0; })));
    }
    return deg;
}

InterpPolynomial lagrange_interpolate(std::span<const std::complex<double>> values,
                                      std::span<const std::complex<double>> points, int n, double zero_threshold) {
    const std::size_t k = points.size();
    if (k == 0) throw DomainError("lagrange_interpolate: empty point set");
    if (n < 0) throw DomainError("lagrange_interpolate: negative arity");
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (points[i] == points[j]) throw DomainError("lagrange_interpolate: repeated point in T");
        }
    }
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= k;
    if (values.size() != total) {
        throw DomainError("lagrange_interpolate: expected |T|^n values");
    }

    // basis[i][e] = coefficient of x^e in prod_{j != i} (x - t_j) / (t_i - t_j)
    std::vector<std::vector<std::complex<double>>> basis(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::complex<double>> poly{1.0};
        std::complex<double> denom = 1.0;
        for (std::size_t j = 0; j < k; ++j) {
            if (j == i) continue;
            std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
            for (std::size_t e = 0; e < poly.size(); ++e) {
                next[e + 1] += poly[e];
                next[e] -= points[j] * poly[e];
            }
            poly = std::move(next);
            denom *= points[i] - points[j];
        }
        for (auto& c : poly) c /= denom;
        basis[i] = std::move(poly);
    }

    // Dense coefficients over exponent vectors in {0..k-1}^m (last exponent
    // fastest). Level m interpolates the first m variables for each fixed
    // suffix; the recursion runs on the last remaining variable.
    std::vector<std::complex<double>> coeffs(values.begin(), values.end());
    std::size_t block = 1;  // k^{level}
    for (int level = 0; level < n; ++level) {
        // variable index handled now: n-1-level; coeffs layout [prefix][var][done-block]
        const std::size_t prefixes = total / (block * k);
        std::vector<std::complex<double>> next(total, 0.0);
        for (std::size_t p = 0; p < prefixes; ++p) {
            for (std::size_t i = 0; i < k; ++i) {
                const std::size_t src = (p * k + i) * block;
                for (std::size_t e = 0; e < k; ++e) {
                    const std::complex<double> b = basis[i][e];
                    if (b == 0.0) continue;
                    const std::size_t dst = (p * k + e) * block;
                    for (std::size_t r = 0; r < block; ++r) next[dst + r] += coeffs[src + r] * b;
                }
            }
        }
        coeffs = std::move(next);
        block *= k;
    }

    double scale = 1.0;
    for (const auto& v : values) scale = std::max(scale, std::abs(v));
    InterpPolynomial out;
    out.n = n;
    out.points.assign(points.begin(), points.end());
    std::vector<int> exps(static_cast<std::size_t>(n));
    for (std::size_t idx = 0; idx < total; ++idx) {
        if (std::abs(coeffs[idx]) <= zero_threshold * scale) continue;
        std::size_t rest = idx;
        for (int i = n - 1; i >= 0; --i) {
            exps[static_cast<std::size_t>(i)] = static_cast<int>(rest % k);
            rest /= k;
        }
        out.terms.emplace(exps, coeffs[idx]);
    }
    return out;
}

Prop2Report check_prop2(const DiscreteFunction& f) {
    const DomainSpec& spec = f.spec();
    const int q = spec.q();
    std::vector<std::complex<double>> points(static_cast<std::size_t>(q));
    for (int k = 0; k < q; ++k) points[static_cast<std::size_t>(k)] = std::polar(1.0, 2.0 * std::numbers::pi * k / q);
    std::vector<std::complex<double>> values(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) values[x] = f.value(x);
    const InterpPolynomial g = lagrange_interpolate(values, points, spec.n());

    Prop2Report report;
    report.variable_degree_g = g.variable_degree();
    report.degree_g = g.degree();
    const Spectrum s = forward(f);
    if (!s.all_zero()) {
        const DegreeProfile profile = degree_profile(s);
        report.deg0_f = profile.deg0;
        report.deg1_f = profile.deg1;
    }
    report.variable_degree_matches = report.variable_degree_g == report.deg0_f;
    report.degree_dominates = report.degree_g >= report.deg1_f;
    return report;
}

Prop3Report check_prop3(const DiscreteFunction& f) {
    require_boolean_cube(f, "check_prop3");
    Prop3Report report;
    report.n = f.spec().n();
    report.deg_alg = algebraic_degree(moebius(f));
    const Spectrum s = forward(f.to_pm1());
    int min_w = report.n;
    int max_w = 0;
    for (std::size_t y = 0; y < s.size(); ++y) {
        if (s.is_zero(y)) continue;
        const int w = std::popcount(y);
        min_w = std::min(min_w, w);
        max_w = std::max(max_w, w);
    }
    report.deg0 = max_w;
    report.min_weight = min_w;
    report.stated_holds = report.deg_alg <= std::min(report.deg0, report.n - report.deg0);
    report.exempt = report.deg_alg <= 1;
    report.refined_holds = report.deg_alg <= std::min(report.deg0, report.n - report.min_weight);
    return report;
}

}  // namespace qspectra
