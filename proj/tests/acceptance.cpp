// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "qspectra/explorer.hpp"
#include "qspectra/graphs.hpp"
#include "qspectra/report.hpp"
#include "qspectra/sensitivity.hpp"

using namespace qspectra;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

int threads() {
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

SweepSummary run(const Corpus& corpus, std::vector<Law> laws) {
    SweepOptions opt;
    opt.laws = std::move(laws);
    opt.threads = threads();
    return sweep(corpus, opt);
}

Corpus exhaustive(int q, int n, ValueKind kind) {
    return Corpus{DomainSpec(q, n), kind, true, 0, 0};
}

Corpus random(int q, int n, ValueKind kind, std::uint64_t count, std::uint64_t seed) {
    return Corpus{DomainSpec(q, n), kind, false, count, seed};
}

// Appends "label checked/violations" and clears pass on any violation.
void tally(Outcome& out, const std::string& label, const SweepSummary& s, Law law) {
    const LawSummary* l = s.find(law);
    if (!l || l->checked == 0 || l->violations != 0) out.pass = false;
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += label + " " + std::string(law_token(law)) + " " + std::to_string(l ? l->checked : 0) + " checked, " +
                  std::to_string(l ? l->violations : 0) + " violations";
}

Outcome ac1() {
    Outcome out;
    std::uint64_t checked = 0;
    for (int q = 2; q <= 6; ++q) {
        for (int n = 1; n <= 3; ++n) {
            for (ValueKind kind : {ValueKind::integer, ValueKind::complex}) {
                const SweepSummary s = run(random(q, n, kind, 100, 1000 + static_cast<std::uint64_t>(10 * q + n)), {Law::transform});
                const LawSummary* l = s.find(Law::transform);
                checked += l->checked;
                if (l->checked != 100 || l->violations) out.pass = false;
            }
        }
    }
    std::vector<DiscreteFunction> named;
    for (int m = 1; m <= 3; ++m) named.push_back(gen_fm(m, m));
    for (int n = 1; n <= 3; ++n) {
        const DomainSpec b(2, n);
        named.push_back(gen_named("xor_all", b));
        named.push_back(gen_named("jmath", b));
        if (n % 2) named.push_back(gen_named("majority", b));
        for (int q = 2; q <= 6; ++q) {
            const DomainSpec spec(q, n);
            for (int i = 0; i < n; ++i) {
                FamilyParams p;
                p.index = i;
                named.push_back(gen_named("dictator", spec, p));
            }
            FamilyParams c;
            c.kind = ValueKind::integer;
            c.value = -3;
            named.push_back(gen_named("constant", spec, c));
            for (std::size_t z = 0; z < spec.size(); z += 7) {
                FamilyParams p;
                p.z = unflatten(z, spec);
                named.push_back(gen_named("character", spec, p));
            }
        }
    }
    std::size_t bad = 0;
    double worst = 0;
    for (const auto& f : named) {
        const Spectrum fast = forward(f), slow = naive_forward(f);
        for (std::size_t z = 0; z < f.size(); ++z) {
            const bool same = f.exact() ? fast.exact_at(z) == slow.exact_at(z)
                                        : std::abs(fast.value(z) - slow.value(z)) <= 1e-9 * static_cast<double>(f.size());
            if (!same) {
                ++bad;
                break;
            }
        }
        const DiscreteFunction back = inverse(fast);
        if (f.exact()) {
            if (!(back == f)) ++bad;
        } else {
            for (std::size_t x = 0; x < f.size(); ++x) worst = std::max(worst, std::abs(back.value(x) - f.value(x)));
        }
    }
    if (bad || worst > 1e-9) out.pass = false;
    out.detail = std::to_string(checked) + " random and " + std::to_string(named.size()) +
                 " named functions, " + std::to_string(bad) + " mismatches, character roundtrip error " +
                 num(worst);
    return out;
}

Outcome ac2() {
    Outcome out;
    tally(out, "pm1 Z_3^2", run(exhaustive(3, 2, ValueKind::two_valued_pm1), {Law::parseval}), Law::parseval);
    tally(out, "omega3 Z_3^2", run(exhaustive(3, 2, ValueKind::three_valued_omega), {Law::parseval}), Law::parseval);
    const SweepSummary s = run(random(5, 3, ValueKind::complex, 1000, 2), {Law::parseval});
    tally(out, "complex Z_5^3", s, Law::parseval);
    if (s.max_parseval_relative_error > 1e-9) out.pass = false;
    out.detail += "; max relative error " + num(s.max_parseval_relative_error);
    return out;
}

Outcome ac3() {
    Outcome out;
    double worst = 0;
    std::size_t characters = 0;
    for (auto [q, n] : {std::pair{3, 2}, {4, 2}, {5, 2}, {3, 3}}) {
        const DomainSpec spec(q, n);
        for (std::size_t z = 0; z < spec.size(); ++z) {
            const auto phi = character_values(z, spec);
            for (GraphKind kind : {GraphKind::hamming, GraphKind::cycle_power}) {
                const auto av = apply_adjacency(kind, spec, phi);
                const double lambda = kind == GraphKind::hamming ? static_cast<double>(eigenvalue_hamming(z, spec))
                                                                 : eigenvalue_cycle(z, spec);
                for (std::size_t x = 0; x < spec.size(); ++x) worst = std::max(worst, std::abs(av[x] - lambda * phi[x]));
            }
            ++characters;
        }
    }
    out.pass = worst <= 1e-9;
    out.detail = std::to_string(characters) + " characters on both graphs, max |A phi - lambda phi| " + num(worst);
    return out;
}

Outcome ac4() {
    Outcome out;
    double dev = 0;
    for (const auto& [label, corpus] : {std::pair{"pm1 Z_3^2", exhaustive(3, 2, ValueKind::two_valued_pm1)},
                                        std::pair{"pm1 Z_4^2", exhaustive(4, 2, ValueKind::two_valued_pm1)},
                                        std::pair{"omega3 Z_3^2", exhaustive(3, 2, ValueKind::three_valued_omega)}}) {
        const SweepSummary s = run(corpus, {Law::spectral_I});
        tally(out, label, s, Law::spectral_I);
        dev = std::max(dev, s.max_identity_deviation);
    }
    if (dev > 1e-6) out.pass = false;
    out.detail += "; max pre-round deviation " + num(dev);
    return out;
}

// Criteria 5 to 7 share their corpora, so the sweeps run once.
struct BoundSweeps {
    std::vector<std::pair<std::string, SweepSummary>> two, three;
};

BoundSweeps bound_sweeps() {
    BoundSweeps b;
    const std::vector<Law> two{Law::theorem1, Law::proof_steps};
    const std::vector<Law> three{Law::three_valued, Law::proof_steps};
    b.two.emplace_back("pm1 Z_3^2", run(exhaustive(3, 2, ValueKind::two_valued_pm1), two));
    b.two.emplace_back("pm1 Z_4^2", run(exhaustive(4, 2, ValueKind::two_valued_pm1), two));
    b.two.emplace_back("pm1 Z_5^3 x1e5", run(random(5, 3, ValueKind::two_valued_pm1, 100000, 5), two));
    b.three.emplace_back("omega3 Z_3^2", run(exhaustive(3, 2, ValueKind::three_valued_omega), three));
    b.three.emplace_back("omega3 Z_4^2 x1e4", run(random(4, 2, ValueKind::three_valued_omega, 10000, 6), three));
    b.three.emplace_back("omega3 Z_5^2 x1e4", run(random(5, 2, ValueKind::three_valued_omega, 10000, 7), three));
    return b;
}

Outcome ac8() {
    Outcome out;
    for (int m = 1; m <= 3; ++m) {
        const DiscreteFunction f = gen_fm_pm1(m, m + 1);
        const Spectrum s = forward(f);
        const DegreeProfile p = degree_profile(s);
        const int t = relevant_count(f);
        bool vanish = true;
        for (std::size_t z = 0; z < s.size(); ++z) {
            for (int k = m; k < m + 1; ++k) {
                if (coordinate(z, k, f.spec()) != 0 && !s.is_zero(z)) vanish = false;
            }
        }
        const double four_m = std::pow(4.0, m);
        const double ours = bounds_two_valued(p, 4, t).find("two_valued.deg2")->value;
        const double expected = std::numbers::pi * std::numbers::pi * m * four_m / 32.0;
        const double prior = m * four_m / 3.0;
        const bool ok = t == m && p.deg0 == m && p.deg2 == m && vanish && std::abs(ours - expected) <= 1e-9 * expected &&
                        ours < prior;
        if (!ok) out.pass = false;
        if (!out.detail.empty()) out.detail += "; ";
        out.detail += "m=" + std::to_string(m) + " t=" + std::to_string(t) + " deg0=" + std::to_string(p.deg0) +
                      " deg2=" + std::to_string(p.deg2) + " bound " + num(ours) + " < " + num(prior);
    }
    return out;
}

Outcome ac9() {
    Outcome out;
    const SweepSummary s = run(exhaustive(2, 4, ValueKind::boolean01), {Law::degree_relations, Law::prop3});
    tally(out, "bool01 Z_2^4", s, Law::degree_relations);
    tally(out, "bool01 Z_2^4", s, Law::prop3);
    const Prop3Tally& t = s.prop3;
    out.detail += "; deg_alg <= min{deg0, n-deg0} holds for " + std::to_string(t.stated_holds) + "/" +
                  std::to_string(t.functions) + ", deg_alg <= 1 for " + std::to_string(t.exempt) +
                  ", deg_alg <= min{deg0, n-min wt} for " + std::to_string(t.refined_holds) +
                  ", stated form fails with deg_alg >= 2 for " + std::to_string(t.stated_fails_nonexempt);
    return out;
}

Outcome ac10() {
    Outcome out;
    const SweepSummary s = run(exhaustive(3, 2, ValueKind::two_valued_pm1), {Law::support});
    tally(out, "pm1 Z_3^2", s, Law::support);
    out.detail += "; deg0 <= n-t recorded for " + std::to_string(s.corollary_literal_holds) + "/" +
                  std::to_string(s.functions);
    return out;
}

Outcome ac11() {
    Outcome out;
    std::size_t compared = 0;
    for (const Corpus& corpus : {random(5, 3, ValueKind::complex, 500, 11), random(4, 2, ValueKind::two_valued_pm1, 3000, 12),
                                 random(4, 2, ValueKind::three_valued_omega, 3000, 13),
                                 exhaustive(3, 2, ValueKind::three_valued_omega), exhaustive(2, 3, ValueKind::boolean01)}) {
        std::vector<Law> laws;
        for (Law law : all_laws()) {
            if (law_applicable(law, corpus.kind, corpus.spec.q())) laws.push_back(law);
        }
        std::string first;
        for (int t : {1, 4, 1, 4}) {
            SweepOptions opt;
            opt.laws = laws;
            opt.threads = t;
            const std::string doc = dump_json(sweep_report(sweep(corpus, opt)));
            if (first.empty()) {
                first = doc;
            } else if (doc != first) {
                out.pass = false;
            }
            ++compared;
        }
    }
    out.detail = std::to_string(compared) + " reports over 5 corpora, threads 1 and 4, repeated";
    return out;
}

void emit(int id, const std::string& name, const Outcome& o, double seconds, double limit, bool& all,
          const char* note = "") {
    const bool in_time = limit <= 0 || seconds < limit;
    const bool pass = o.pass && in_time;
    all = all && pass;
    std::string timing = num(std::round(seconds * 100) / 100) + " s";
    if (limit > 0) timing += " (limit " + num(limit) + " s)";
    timing += note;
    std::printf("AC%02d %s %s: %s [%s]\n", id, pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), timing.c_str());
    std::fflush(stdout);
}

template <class Fn>
auto timed(Fn&& fn, double& seconds) {
    const auto start = std::chrono::steady_clock::now();
    auto result = fn();
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace

int main() {
    bool all = true;
    double secs = 0;

    Outcome o = timed(ac1, secs);
    emit(1, "transform correctness", o, secs, 10, all);
    o = timed(ac2, secs);
    emit(2, "Parseval", o, secs, 30, all);
    o = timed(ac3, secs);
    emit(3, "eigenvalue identities", o, secs, 10, all);
    o = timed(ac4, secs);
    emit(4, "spectral sensitivity identities", o, secs, 300, all);

    const BoundSweeps b = timed(bound_sweeps, secs);
    Outcome five, six, seven;
    for (const auto& [label, s] : b.two) {
        tally(five, label, s, Law::theorem1);
        tally(seven, label, s, Law::proof_steps);
    }
    for (const auto& [label, s] : b.three) {
        tally(six, label, s, Law::three_valued);
        tally(seven, label, s, Law::proof_steps);
    }
    emit(5, "two-valued bounds", five, secs, 0, all, ", sweeps shared with AC06-AC07");
    emit(6, "three-valued bounds", six, secs, 0, all, ", shared with AC05");
    emit(7, "proof-step inequalities", seven, secs, 0, all, ", shared with AC05");

    o = timed(ac8, secs);
    emit(8, "f_m reproduction", o, secs, 0, all);
    o = timed(ac9, secs);
    emit(9, "Boolean degree relations", o, secs, 60, all);
    o = timed(ac10, secs);
    emit(10, "support bounds", o, secs, 0, all);
    o = timed(ac11, secs);
    emit(11, "determinism", o, secs, 0, all);
    return all ? 0 : 1;
}
