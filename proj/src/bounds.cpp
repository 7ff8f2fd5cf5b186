#include "qspectra/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

namespace qspectra {
namespace {

constexpr double kPiSquared = std::numbers::pi * std::numbers::pi;

BoundEntry make_entry(std::string name, std::string formula_id, double value, bool applicable, bool asserted, int t) {
    BoundEntry e{std::move(name), std::move(formula_id), value, applicable, asserted, true, value - t};
    if (applicable) e.holds = t <= value + kBoundSlack;
    return e;
}

int ceil_log2(int q) {
    return static_cast<int>(std::bit_width(static_cast<unsigned>(q - 1)));
}

}  // namespace

const BoundEntry* BoundReport::find(const std::string& formula_id) const {
    for (const auto& e : entries) {
        if (e.formula_id == formula_id) return &e;
    }
    return nullptr;
}

bool BoundReport::all_hold() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const BoundEntry& e) { return !e.applicable || !e.asserted || e.holds; });
}

BoundReport bounds_two_valued(const DegreeProfile& profile, int q, int t) {
    BoundReport report;
    report.t_observed = t;
    const int d = profile.deg0;
    const bool live = d >= 1;
    const double qd = static_cast<double>(q);
    report.entries.push_back(make_entry("lee_deg1", "two_valued.deg1",
                                        kPiSquared / 4.0 * static_cast<double>(profile.deg1) * std::pow(qd, d - 1),
                                        live, true, t));
    report.entries.push_back(make_entry("lee_deg2", "two_valued.deg2",
                                        kPiSquared / 2.0 * static_cast<double>(profile.deg2) * std::pow(qd, d - 2),
                                        live, true, t));
    report.entries.push_back(
        make_entry("nisan_szegedy", "context.d2^(d-1)", d * std::pow(2.0, d - 1), live && q == 2, false, t));
    report.entries.push_back(make_entry("wellens", "context.4.394*2^(ceil(log2 q)d)",
                                        4.394 * std::pow(2.0, ceil_log2(q) * d), live, false, t));
    report.entries.push_back(make_entry("valyuzhenich", "context.dq^(d+1)/(4(q-1))",
                                        d * std::pow(qd, d + 1) / (4.0 * (q - 1)), live && !std::has_single_bit(static_cast<unsigned>(q)),
                                        false, t));
    return report;
}

BoundReport bounds_three_valued(const DegreeProfile& profile, int q, int t) {
    BoundReport report;
    report.t_observed = t;
    const int d = profile.deg0;
    const bool live = d >= 1;
    const double qd = static_cast<double>(q);
    report.entries.push_back(make_entry("lee_deg1", "three_valued.deg1",
                                        kPiSquared / 3.0 * static_cast<double>(profile.deg1) * std::pow(qd, d - 1),
                                        live, true, t));
    report.entries.push_back(make_entry("lee_deg2", "three_valued.deg2",
                                        2.0 * kPiSquared / 3.0 * static_cast<double>(profile.deg2) * std::pow(qd, d - 2),
                                        live, true, t));
    report.entries.push_back(make_entry("hamming_degree", "three_valued.dq^(d+1)/(3(q-1))",
                                        d * std::pow(qd, d + 1) / (3.0 * (q - 1)), live, true, t));
    return report;
}

double tightness(const BoundReport& report) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& e : report.entries) {
        if (e.applicable && e.asserted) best = std::min(best, e.value);
    }
    if (!std::isfinite(best)) {
        throw NoApplicableBoundError("no applicable bound (constant function?)");
    }
    return report.t_observed / best;
}

}  // namespace qspectra
