#include "qspectra/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>

#include "qspectra/bounds.hpp"
#include "qspectra/degrees.hpp"
#include "qspectra/sensitivity.hpp"
#include "qspectra/transform.hpp"

namespace qspectra {
namespace {

using nlohmann::json;

std::string sig12(double v) {
    if (v == 0.0) v = 0.0;
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    (void)ec;
    return std::string(buf, ptr);
}

json bound_json(const BoundEntry& e) {
    return json{{"name", e.name},
                {"formula_id", e.formula_id},
                {"value", json_number(e.value)},
                {"applicable", e.applicable},
                {"asserted", e.asserted},
                {"holds", e.applicable ? json(e.holds) : json(nullptr)},
                {"margin", e.applicable ? json_number(e.margin) : json(nullptr)}};
}

json profile_json(const DegreeProfile& p) {
    return json{{"deg0", p.deg0}, {"deg1", p.deg1}, {"deg2", p.deg2}};
}

json table_json(std::span<const std::int64_t> codes) {
    return json(std::vector<std::int64_t>(codes.begin(), codes.end()));
}

DiscreteFunction boolean_form(const DiscreteFunction& pm) {
    std::vector<std::int64_t> codes(pm.codes().begin(), pm.codes().end());
    for (auto& c : codes) c = (1 - c) / 2;
    return DiscreteFunction::from_codes(pm.spec(), ValueKind::boolean01, std::move(codes));
}

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

nlohmann::json json_number(double v) {
    if (!std::isfinite(v)) return nullptr;
    const std::string text = sig12(v);
    double rounded = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), rounded);
    return rounded;
}

AnalysisReport analyze(const DiscreteFunction& f) {
    if (!f.exact()) {
        throw KindError("analysis needs an exact value kind; complex tables support 'spectrum' only");
    }
    const DomainSpec& spec = f.spec();
    const int q = spec.q();
    const int n = spec.n();
    const std::set<std::int64_t> classes(f.codes().begin(), f.codes().end());
    const bool two = f.kind() == ValueKind::two_valued_pm1 || f.kind() == ValueKind::boolean01 ||
                     (f.kind() == ValueKind::integer && classes.size() == 2);
    const bool three = f.kind() == ValueKind::three_valued_omega;
    const bool constant = f.is_constant();

    const Spectrum sf = forward(f);
    const DiscreteFunction a = two && f.kind() != ValueKind::two_valued_pm1 ? f.to_pm1() : f;
    const Spectrum sa = two && f.kind() != ValueKind::two_valued_pm1 ? forward(a) : sf;

    AnalysisReport out;
    json& doc = out.document;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "analyze";
    doc["input"] = {{"q", q}, {"n", n}, {"kind", kind_token(f.kind())}, {"points", spec.size()}};
    doc["degenerate"] = constant ? json("constant") : json(nullptr);
    doc["analysis"] = two ? "two_valued" : (three ? "three_valued" : "general");
    if (two && f.kind() != ValueKind::two_valued_pm1) {
        doc["recoding"] = f.kind() == ValueKind::boolean01 ? "1-2f" : "smaller value -> 1, larger -> -1";
    }

    std::size_t nonzero = 0;
    for (std::size_t z = 0; z < spec.size(); ++z) nonzero += sf.is_zero(z) ? 0 : 1;
    std::int64_t energy = 0;
    for (std::int64_t c : f.codes()) energy += three ? 1 : c * c;
    const auto parseval = parseval_exact(sf).as_integer();
    doc["spectrum"] = {{"normalization", Spectrum::kNormalization},
                       {"nonzero_coefficients", nonzero},
                       {"sum_abs_W_squared", parseval ? json(*parseval) : json(nullptr)},
                       {"q^n_sum_abs_f_squared", static_cast<std::int64_t>(spec.size()) * energy}};
    if (!parseval || *parseval != static_cast<std::int64_t>(spec.size()) * energy) out.violation = true;

    std::optional<DegreeProfile> profile;
    if (!sa.all_zero()) profile = degree_profile(sa);
    doc["degrees"] = profile ? profile_json(*profile) : json(nullptr);
    if (profile) doc["degrees"]["convention"] = "symmetric representatives, 0^0 = 0";

    const SensitivityReport sens = sensitivity_report(f);
    std::vector<int> one_based;
    for (int i : sens.relevant) one_based.push_back(i + 1);
    doc["relevant_variables"] = one_based;
    doc["t"] = sens.t;
    doc["sensitivity"] = {
        {"I_cycle", {{"value", sens.I_cycle}, {"graph", "cycle_power"}, {"unit", "mixed edges"}}},
        {"I_hamming", {{"value", sens.I_hamming}, {"graph", "hamming"}, {"unit", "mixed edges"}}},
        {"per_direction_cycle", sens.per_direction_cycle},
        {"per_direction_hamming", sens.per_direction_hamming}};

    json identities = json::array();
    const auto identity = [&](const char* name, double spectral, std::int64_t direct) {
        const bool holds = std::abs(spectral - static_cast<double>(direct)) <= 1e-6 && std::llround(spectral) == direct;
        if (!holds) out.violation = true;
        identities.push_back({{"name", name}, {"spectral", json_number(spectral)}, {"direct", direct}, {"holds", holds}});
    };
    if (two) identity("two_valued_cycle", spectral_I_two_valued(sa), sens.I_cycle);
    if (three) {
        identity("three_valued_cycle", spectral_I_three_valued(sa), sens.I_cycle);
        identity("three_valued_hamming", spectral_I_three_valued_hamming(sa), sens.I_hamming);
    }
    doc["spectral_identities"] = identities;

    json bounds = {{"family", nullptr}, {"entries", json::array()}, {"tightness", nullptr}, {"slack", kBoundSlack}};
    if (two || three) {
        const DegreeProfile p = profile.value_or(DegreeProfile{});
        const BoundReport r = two ? bounds_two_valued(p, q, sens.t) : bounds_three_valued(p, q, sens.t);
        bounds["family"] = two ? "two_valued" : "three_valued";
        for (const auto& e : r.entries) bounds["entries"].push_back(bound_json(e));
        if (!constant) bounds["tightness"] = json_number(tightness(r));
        if (!r.all_hold()) out.violation = true;
    }
    doc["bounds"] = bounds;

    json checks;
    const SupportReport sup = check_support_bounds(a, sa);
    const bool support_ok = (!sup.support_applicable || sup.support_holds) && sup.retract_holds && sup.vanishing_holds &&
                            sup.deg0_le_t;
    if (!support_ok) out.violation = true;
    checks["support"] = {{"applicable", sup.support_applicable},
                         {"holds", sup.support_applicable ? json(sup.support_holds) : json(nullptr)},
                         {"min_support", sup.min_support},
                         {"threshold", sup.support_threshold},
                         {"retract_pairs_checked", sup.retract_pairs_checked},
                         {"retract_holds", sup.retract_holds},
                         {"vanishing_on_irrelevant_holds", sup.vanishing_holds},
                         {"deg0_le_t", sup.deg0_le_t},
                         {"deg0_le_n_minus_t", sup.deg0_le_n_minus_t}};

    if ((two || three) && !constant && profile) {
        const std::int64_t unit = ipow(q, n - profile->deg0);
        bool ok = true;
        json retracts = json::array();
        for (int i : sens.relevant) {
            const std::int64_t pairs = retract_pair_count(a, i);
            ok = ok && pairs >= 2 * q - 2;
            retracts.push_back({{"variable", i + 1}, {"retract_pairs", pairs}});
        }
        const std::int64_t I = two ? sens.I_cycle : sens.I_hamming;
        const std::int64_t lower = two ? 2 * sens.t * unit : (q - 1) * sens.t * unit;
        ok = ok && I >= lower;
        if (!ok) out.violation = true;
        checks["proof_steps"] = {{"graph", two ? "cycle_power" : "hamming"},
                                 {"I", I},
                                 {"lower_bound", lower},
                                 {"retracts", retracts},
                                 {"retract_pairs_min", 2 * q - 2},
                                 {"holds", ok}};
    }

    const Prop2Report p2 = check_prop2(a);
    const bool p2_ok = p2.variable_degree_matches && p2.degree_dominates;
    if (!p2_ok) out.violation = true;
    checks["interpolation"] = {{"variable_degree_g", p2.variable_degree_g}, {"deg0_f", p2.deg0_f},
                               {"degree_g", p2.degree_g},                   {"deg1_f", p2.deg1_f},
                               {"variable_degree_matches", p2.variable_degree_matches},
                               {"degree_dominates", p2.degree_dominates}};

    if (two && q == 2) {
        const DiscreteFunction b = boolean_form(a);
        const Prop3Report p3 = check_prop3(b);
        if (!(p3.exempt || p3.refined_holds)) out.violation = true;
        checks["algebraic_degree"] = {{"deg_alg", p3.deg_alg},
                                      {"deg_num", numerical_degree(nnf(b))},
                                      {"deg0", p3.deg0},
                                      {"min_weight", p3.min_weight},
                                      {"stated_holds", p3.stated_holds},
                                      {"exempt", p3.exempt},
                                      {"refined_holds", p3.refined_holds}};
    }
    doc["checks"] = checks;
    doc["violation"] = out.violation;
    return out;
}

std::string spectrum_listing(const DiscreteFunction& f) {
    const Spectrum s = forward(f);
    const DomainSpec& spec = s.spec();
    std::string out;
    for (std::size_t z = 0; z < spec.size(); ++z) {
        if (s.is_zero(z)) continue;
        out += "z=(";
        for (int i = 0; i < spec.n(); ++i) {
            if (i) out += ',';
            out += std::to_string(sym_rep(coordinate(z, i, spec), spec.q()));
        }
        out += ") W=";
        std::complex<double> v = s.value(z);
        const double tiny = s.exact() ? 1e-12 : s.zero_threshold();
        if (std::abs(v.real()) <= tiny) v.real(0.0);
        if (std::abs(v.imag()) <= tiny) v.imag(0.0);
        std::string approx;
        if (v.imag() == 0.0) {
            approx = sig12(v.real());
        } else if (v.real() == 0.0) {
            approx = sig12(v.imag()) + "i";
        } else {
            approx = sig12(v.real()) + (v.imag() < 0 ? "-" : "+") + sig12(std::abs(v.imag())) + "i";
        }
        if (s.exact()) {
            const CycloNum w = s.exact_at(z);
            if (const auto k = w.as_integer()) {
                out += std::to_string(*k);
            } else {
                out += w.to_string() + " ~ " + approx;
            }
        } else {
            out += approx;
        }
        out += '\n';
    }
    return out;
}

nlohmann::json sweep_report(const SweepSummary& summary) {
    const Corpus& c = summary.corpus;
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "verify";
    json corpus = {{"q", c.spec.q()}, {"n", c.spec.n()}, {"kind", kind_token(c.kind)},
                   {"mode", c.exhaustive ? "exhaustive" : "random"}};
    if (c.exhaustive) {
        corpus["enumeration"] = "reflected Gray code, index = lexicographic table rank";
    } else {
        corpus["count"] = c.count;
        corpus["seed"] = c.seed;
        corpus["generator"] = "mt19937_64 seeded with splitmix64(seed, index)";
    }
    doc["corpus"] = corpus;
    doc["functions"] = summary.functions;
    doc["nonconstant"] = summary.nonconstant;
    json laws = json::array();
    for (const auto& law : summary.laws) {
        json entry = {{"law", law_token(law.law)}, {"checked", law.checked}, {"violations", law.violations}};
        if (law.first_counterexample) {
            entry["first_counterexample"] = {{"index", *law.first_counterexample},
                                             {"table", table_json(law.counterexample_codes)}};
        } else {
            entry["first_counterexample"] = nullptr;
        }
        laws.push_back(entry);
        if (law.law == Law::prop3) {
            doc["prop3_truth_set"] = {{"functions", summary.prop3.functions},
                                      {"stated_holds", summary.prop3.stated_holds},
                                      {"exempt_deg_alg_le_1", summary.prop3.exempt},
                                      {"refined_holds", summary.prop3.refined_holds},
                                      {"stated_fails_nonexempt", summary.prop3.stated_fails_nonexempt}};
        }
        if (law.law == Law::support) {
            doc["deg0_le_n_minus_t_holds"] = summary.corollary_literal_holds;
        }
        if (law.law == Law::spectral_I) doc["max_identity_deviation"] = json_number(summary.max_identity_deviation);
        if (law.law == Law::parseval && !is_exact(c.kind)) {
            doc["max_parseval_relative_error"] = json_number(summary.max_parseval_relative_error);
        }
    }
    doc["laws"] = laws;
    doc["total_violations"] = summary.total_violations();
    json extremal = json::array();
    for (const auto& rec : summary.extremal) {
        extremal.push_back({{"index", rec.index},
                            {"table", table_json(rec.codes)},
                            {"degrees", profile_json(rec.profile)},
                            {"t", rec.t},
                            {"best_bound", rec.best_bound},
                            {"best_bound_value", json_number(rec.best_bound_value)},
                            {"tightness", json_number(rec.tightness)}});
    }
    doc["extremal"] = extremal;
    char digest[17];
    std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(summary.digest));
    doc["digest"] = digest;
    return doc;
}

std::string dump_json(const nlohmann::json& doc) {
    return doc.dump(2) + "\n";
}

}  // namespace qspectra
