#pragma once

#include <string>

#include <json.hpp>

#include "qspectra/explorer.hpp"
#include "qspectra/function.hpp"

namespace qspectra {

inline constexpr int kSchemaVersion = 1;

/// v rounded to 12 significant digits (non-finite values become null).
nlohmann::json json_number(double v);

struct AnalysisReport {
    nlohmann::json document;
    /// An asserted check (bound, identity, support law) failed.
    bool violation = false;
};

/// parse -> transform -> degrees -> sensitivity -> bounds. Two-valued tables
/// (pm1, bool01, or int with exactly two values) are analysed through their
/// {-1, 1} recoding; omega3 tables get the three-valued bounds. Throws
/// KindError for the complex kind.
AnalysisReport analyze(const DiscreteFunction& f);

/// One line per nonzero coefficient: `z=(a,b,...) W=<value>`, z in symmetric
/// representatives. Exact values are printed in the basis 1, w, w^2, ... of
/// Z[w], w = e^{2 pi i / N}, followed by a decimal approximation when not an
/// integer.
std::string spectrum_listing(const DiscreteFunction& f);

nlohmann::json sweep_report(const SweepSummary& summary);

/// Two-space indented JSON with a trailing newline.
std::string dump_json(const nlohmann::json& doc);

}  // namespace qspectra
