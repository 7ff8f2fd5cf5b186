#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qspectra/degrees.hpp"

namespace qspectra {

/// Tolerance added to every bound before comparing with t(f).
inline constexpr double kBoundSlack = 1e-9;

struct BoundEntry {
    std::string name;
    std::string formula_id;
    double value = 0.0;
    bool applicable = false;
    /// Main bounds are asserted; prior-work comparison constants are context.
    bool asserted = false;
    bool holds = true;
    double margin = 0.0;  // value - t
};

struct BoundReport {
    int t_observed = 0;
    std::vector<BoundEntry> entries;

    const BoundEntry* find(const std::string& formula_id) const;
    /// True when every applicable asserted entry holds.
    bool all_hold() const;
};

/// Bound on the relevant variables of a two-valued function:
///   (pi^2/4) deg1 q^{deg0-1} and (pi^2/2) deg2 q^{deg0-2},
/// plus comparison constants d 2^{d-1} (q = 2), 4.394 * 2^{ceil(log2 q) d} and
/// d q^{d+1} / (4(q-1)) (q not a power of two). Constant functions
/// (deg0 = 0) get every entry marked not applicable.
BoundReport bounds_two_valued(const DegreeProfile& profile, int q, int t);

/// Three-valued bounds (pi^2/3) deg1 q^{deg0-1}, (2 pi^2/3) deg2 q^{deg0-2}
/// and d q^{d+1} / (3(q-1)).
BoundReport bounds_three_valued(const DegreeProfile& profile, int q, int t);

class NoApplicableBoundError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// t / (smallest applicable asserted bound).
double tightness(const BoundReport& report);

}  // namespace qspectra
