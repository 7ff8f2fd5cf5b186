#include "qspectra/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "qspectra/graphs.hpp"
#include "qspectra/sensitivity.hpp"
#include "qspectra/transform.hpp"

namespace qspectra {
namespace {

LawSummary summary_for(Law law) {
    LawSummary s;
    s.law = law;
    return s;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

double uniform_symmetric(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
}

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

int value_set_size(ValueKind kind) {
    switch (kind) {
        case ValueKind::two_valued_pm1:
        case ValueKind::boolean01: return 2;
        case ValueKind::three_valued_omega: return 3;
        default: return 0;
    }
}

// Corpus-kind code for an enumeration digit.
std::int64_t digit_code(ValueKind kind, int digit) {
    return kind == ValueKind::two_valued_pm1 ? (digit == 0 ? 1 : -1) : digit;
}

// Code of the analysed function (pm1 recoding for two-valued kinds).
std::int64_t analysis_code(ValueKind kind, int digit) {
    return kind == ValueKind::three_valued_omega ? digit : (digit == 0 ? 1 : -1);
}

bool two_valued(ValueKind kind) {
    return kind == ValueKind::two_valued_pm1 || kind == ValueKind::boolean01;
}

std::uint64_t mix_words(std::initializer_list<std::uint64_t> words) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (std::uint64_t w : words) {
        for (int b = 0; b < 8; ++b) {
            h ^= (w >> (8 * b)) & 0xFF;
            h *= 0x100000001b3ULL;
        }
    }
    return splitmix64(h);
}

struct ShardResult {
    std::uint64_t functions = 0;
    std::uint64_t nonconstant = 0;
    std::vector<LawSummary> laws;
    std::vector<ExtremalRecord> extremal;
    Prop3Tally prop3;
    std::uint64_t corollary_literal_holds = 0;
    double max_identity_deviation = 0.0;
    double max_parseval_relative_error = 0.0;
    std::uint64_t digest = 0;
};

void note_violation(LawSummary& law, std::uint64_t index, const DiscreteFunction& f) {
    ++law.violations;
    if (!law.first_counterexample || index < *law.first_counterexample) {
        law.first_counterexample = index;
        if (f.exact()) {
            law.counterexample_codes.assign(f.codes().begin(), f.codes().end());
        } else {
            law.counterexample_codes.clear();
        }
    }
}

void offer_extremal(std::vector<ExtremalRecord>& top, std::size_t k, ExtremalRecord rec) {
    if (k == 0) return;
    if (top.size() == k && !extremal_before(rec, top.back())) return;
    const auto pos = std::upper_bound(top.begin(), top.end(), rec, extremal_before);
    top.insert(pos, std::move(rec));
    if (top.size() > k) top.pop_back();
}

class Evaluator {
public:
    Evaluator(const Corpus& corpus, const SweepOptions& options) : corpus_(corpus), options_(options) {
        result_.laws.reserve(options.laws.size());
        for (Law law : options.laws) result_.laws.push_back(summary_for(law));
    }

    // f: function in the corpus kind; a: analysed function (pm1 recoding for
    // two-valued kinds, otherwise f); sa: spectrum of a.
    void evaluate(std::uint64_t index, const DiscreteFunction& f, const DiscreteFunction& a, const Spectrum& sa) {
        const DomainSpec& spec = a.spec();
        const int q = spec.q();
        const int n = spec.n();
        ++result_.functions;
        const bool constant = a.is_constant();
        if (!constant) ++result_.nonconstant;

        std::optional<DegreeProfile> profile;
        if (!sa.all_zero()) profile = degree_profile(sa);
        std::optional<SensitivityReport> sens;
        if (a.exact()) sens = sensitivity_report(a);
        const int t = sens ? sens->t : relevant_count(a);

        std::uint64_t failed_mask = 0;
        for (std::size_t li = 0; li < result_.laws.size(); ++li) {
            LawSummary& law = result_.laws[li];
            const std::optional<bool> ok = check(law.law, f, a, sa, profile, sens, t, constant);
            if (!ok) continue;
            ++law.checked;
            if (!*ok) {
                note_violation(law, index, f);
                failed_mask |= std::uint64_t{1} << li;
            }
        }

        if (!constant && profile && (two_valued(corpus_.kind) || corpus_.kind == ValueKind::three_valued_omega)) {
            const BoundReport report = two_valued(corpus_.kind) ? bounds_two_valued(*profile, q, t)
                                                                : bounds_three_valued(*profile, q, t);
            const double tight = tightness(report);
            const bool qualifies = options_.top_k > 0 &&
                                   (result_.extremal.size() < options_.top_k || tight >= result_.extremal.back().tightness);
            if (qualifies) {
                ExtremalRecord rec;
                rec.index = index;
                rec.codes.assign(f.codes().begin(), f.codes().end());
                rec.profile = *profile;
                rec.t = t;
                rec.tightness = tight;
                rec.best_bound_value = std::numeric_limits<double>::infinity();
                for (const auto& e : report.entries) {
                    if (e.applicable && e.asserted && e.value < rec.best_bound_value) {
                        rec.best_bound_value = e.value;
                        rec.best_bound = e.formula_id;
                    }
                }
                offer_extremal(result_.extremal, options_.top_k, std::move(rec));
            }
        }

        const std::uint64_t deg0 = profile ? static_cast<std::uint64_t>(profile->deg0) : ~0ULL;
        const std::uint64_t deg1 = profile ? static_cast<std::uint64_t>(profile->deg1) : ~0ULL;
        const std::uint64_t deg2 = profile ? static_cast<std::uint64_t>(profile->deg2) : ~0ULL;
        result_.digest += mix_words({index, deg0, deg1, deg2, static_cast<std::uint64_t>(t),
                                     sens ? static_cast<std::uint64_t>(sens->I_cycle) : 0,
                                     sens ? static_cast<std::uint64_t>(sens->I_hamming) : 0, failed_mask});
        (void)n;
    }

    ShardResult take() { return std::move(result_); }

private:
    std::optional<bool> check(Law law, const DiscreteFunction& f, const DiscreteFunction& a, const Spectrum& sa,
                              const std::optional<DegreeProfile>& profile, const std::optional<SensitivityReport>& sens,
                              int t, bool constant) {
        const DomainSpec& spec = a.spec();
        const int q = spec.q();
        const int n = spec.n();
        const ValueKind kind = corpus_.kind;
        switch (law) {
            case Law::transform: {
                const Spectrum fast = forward(f);
                const Spectrum slow = naive_forward(f);
                if (f.exact()) {
                    for (std::size_t z = 0; z < fast.size(); ++z) {
                        if (!(fast.exact_at(z) == slow.exact_at(z))) return false;
                    }
                    return inverse(fast) == f;
                }
                double scale = 1.0;
                for (const auto& v : f.complex_values()) scale = std::max(scale, std::abs(v));
                const double tol = 1e-9 * static_cast<double>(spec.size()) * scale;
                for (std::size_t z = 0; z < fast.size(); ++z) {
                    if (std::abs(fast.value(z) - slow.value(z)) > tol) return false;
                }
                const DiscreteFunction back = inverse(fast);
                for (std::size_t x = 0; x < f.size(); ++x) {
                    if (std::abs(back.value(x) - f.value(x)) > 1e-9) return false;
                }
                return true;
            }
            case Law::parseval: {
                const Spectrum sf = (&f == &a) ? sa : forward(f);
                if (f.exact()) {
                    std::int64_t energy = 0;
                    for (std::size_t x = 0; x < f.size(); ++x) {
                        energy += f.kind() == ValueKind::three_valued_omega ? 1 : f.codes()[x] * f.codes()[x];
                    }
                    const auto total = parseval_exact(sf).as_integer();
                    return total && *total == static_cast<std::int64_t>(spec.size()) * energy;
                }
                double energy = 0.0;
                for (const auto& v : f.complex_values()) energy += std::norm(v);
                const double expected = static_cast<double>(spec.size()) * energy;
                const double rel = std::abs(parseval_sum(sf) - expected) / std::max(expected, 1e-300);
                result_.max_parseval_relative_error = std::max(result_.max_parseval_relative_error, rel);
                return rel <= 1e-9;
            }
            case Law::spectral_I: {
                if (!sens) return std::nullopt;
                const auto agrees = [&](double spectral, std::int64_t direct) {
                    const double dev = std::abs(spectral - static_cast<double>(direct));
                    result_.max_identity_deviation = std::max(result_.max_identity_deviation, dev);
                    return dev <= 1e-6 && std::llround(spectral) == direct;
                };
                if (two_valued(kind)) return agrees(spectral_I_two_valued(sa), sens->I_cycle);
                if (kind == ValueKind::three_valued_omega) {
                    const bool cycle = agrees(spectral_I_three_valued(sa), sens->I_cycle);
                    const bool hamming = agrees(spectral_I_three_valued_hamming(sa), sens->I_hamming);
                    return cycle && hamming;
                }
                return std::nullopt;
            }
            case Law::theorem1: {
                if (!two_valued(kind) || constant) return std::nullopt;
                return bounds_two_valued(*profile, q, t).all_hold();
            }
            case Law::three_valued: {
                if (kind != ValueKind::three_valued_omega || constant) return std::nullopt;
                return bounds_three_valued(*profile, q, t).all_hold();
            }
            case Law::proof_steps: {
                if (!sens || constant || !(two_valued(kind) || kind == ValueKind::three_valued_omega)) return std::nullopt;
                const std::int64_t unit = ipow(q, n - profile->deg0);
                bool ok = true;
                for (int i : sens->relevant) {
                    const auto dir = static_cast<std::size_t>(i);
                    if (two_valued(kind)) {
                        ok = ok && sens->per_direction_cycle[dir] >= 2 * unit;
                    } else {
                        ok = ok && sens->per_direction_hamming[dir] >= (q - 1) * unit;
                    }
                    ok = ok && retract_pair_count(a, i) >= 2 * q - 2;
                }
                if (two_valued(kind)) {
                    ok = ok && sens->I_cycle >= 2 * static_cast<std::int64_t>(t) * unit;
                } else {
                    ok = ok && sens->I_hamming >= static_cast<std::int64_t>(q - 1) * t * unit;
                }
                return ok;
            }
            case Law::support: {
                const SupportReport r = check_support_bounds(a, sa);
                if (r.deg0_le_n_minus_t) ++result_.corollary_literal_holds;
                return (!r.support_applicable || r.support_holds) && r.retract_holds && r.vanishing_holds && r.deg0_le_t;
            }
            case Law::prop2: {
                const Prop2Report r = check_prop2(a);
                return r.variable_degree_matches && r.degree_dominates;
            }
            case Law::prop3: {
                if (!two_valued(kind) || q != 2) return std::nullopt;
                const Prop3Report r = check_prop3(boolean_of(a));
                ++result_.prop3.functions;
                if (r.stated_holds) ++result_.prop3.stated_holds;
                if (r.exempt) ++result_.prop3.exempt;
                if (r.refined_holds) ++result_.prop3.refined_holds;
                if (!r.stated_holds && !r.exempt) ++result_.prop3.stated_fails_nonexempt;
                return r.exempt || r.refined_holds;
            }
            case Law::degree_relations: {
                if (!two_valued(kind) || q != 2) return std::nullopt;
                const DiscreteFunction b = boolean_of(a);
                const AnfTable anf = moebius(b);
                const NnfTable poly = nnf(b);
                const int deg_alg = algebraic_degree(anf);
                const int deg_num = numerical_degree(poly);
                const int deg0 = profile ? profile->deg0 : 0;
                bool ok = deg_alg <= deg_num && deg_num == deg0;
                ok = ok && moebius(anf).coefficients == std::vector<std::uint8_t>(b.codes().begin(), b.codes().end());
                const std::vector<double> values = evaluate_nnf(poly);
                for (std::size_t x = 0; x < values.size() && ok; ++x) {
                    ok = values[x] == static_cast<double>(b.codes()[x]);
                }
                // (-1)^{f xor l_1} = (-1)^f (-1)^{wt(x)}
                std::vector<std::int64_t> twisted(a.codes().begin(), a.codes().end());
                for (std::size_t x = 0; x < twisted.size(); ++x) {
                    if (std::popcount(x) % 2) twisted[x] = -twisted[x];
                }
                const Spectrum st = forward(DiscreteFunction::from_codes(spec, ValueKind::two_valued_pm1, std::move(twisted)));
                const std::size_t ones = spec.size() - 1;
                for (std::size_t y = 0; y < spec.size() && ok; ++y) {
                    ok = sa.is_zero(y) == st.is_zero(y ^ ones);
                }
                return ok;
            }
            case Law::degree_identities: {
                if (q > 3) return std::nullopt;
                if (!profile) return true;
                bool ok = profile->deg1 == profile->deg0 && profile->deg2 == profile->deg0;
                if (constant || !(two_valued(kind) || kind == ValueKind::three_valued_omega)) return ok;
                const double d = profile->deg0;
                const double pi2 = std::numbers::pi * std::numbers::pi;
                const double c1 = two_valued(kind) ? pi2 / 4.0 : pi2 / 3.0;
                const double c2 = two_valued(kind) ? pi2 / 2.0 : 2.0 * pi2 / 3.0;
                const BoundReport r = two_valued(kind) ? bounds_two_valued(*profile, q, t) : bounds_three_valued(*profile, q, t);
                const double reduced1 = c1 * d * std::pow(q, d - 1);
                const double reduced2 = c2 * d * std::pow(q, d - 2);
                ok = ok && std::abs(r.entries[0].value - reduced1) <= 1e-9 * reduced1 &&
                     std::abs(r.entries[1].value - reduced2) <= 1e-9 * reduced2;
                return ok;
            }
        }
        return std::nullopt;
    }

    static DiscreteFunction boolean_of(const DiscreteFunction& pm) {
        std::vector<std::int64_t> codes(pm.codes().begin(), pm.codes().end());
        for (auto& c : codes) c = (1 - c) / 2;
        return DiscreteFunction::from_codes(pm.spec(), ValueKind::boolean01, std::move(codes));
    }

    const Corpus& corpus_;
    const SweepOptions& options_;
    ShardResult result_;
};

DiscreteFunction analysed(const DiscreteFunction& f) {
    return two_valued(f.kind()) ? f.to_pm1() : f;
}

ShardResult run_random_shard(const Corpus& corpus, const SweepOptions& options, std::uint64_t lo, std::uint64_t hi) {
    Evaluator ev(corpus, options);
    for (std::uint64_t i = lo; i < hi; ++i) {
        const DiscreteFunction f = random_function(corpus, i);
        const DiscreteFunction a = analysed(f);
        ev.evaluate(i, f, a, forward(a));
    }
    return ev.take();
}

ShardResult run_exhaustive_shard(const Corpus& corpus, const SweepOptions& options, std::uint64_t lo, std::uint64_t hi) {
    Evaluator ev(corpus, options);
    const DomainSpec& spec = corpus.spec;
    const int base = value_set_size(corpus.kind);
    GrayCounter gray(base, spec.size(), lo);
    std::vector<std::int64_t> fcodes(spec.size());
    std::vector<std::int64_t> acodes(spec.size());
    for (std::size_t x = 0; x < spec.size(); ++x) {
        fcodes[x] = digit_code(corpus.kind, gray.digits()[x]);
        acodes[x] = analysis_code(corpus.kind, gray.digits()[x]);
    }
    const ValueKind akind = two_valued(corpus.kind) ? ValueKind::two_valued_pm1 : corpus.kind;
    SpectrumAccumulator acc(DiscreteFunction::from_codes(spec, akind, acodes));
    const int order = acc.order();
    std::vector<std::pair<int, std::int64_t>> delta;
    for (std::uint64_t pos = lo; pos < hi; ++pos) {
        std::uint64_t rank = 0;
        for (std::size_t x = 0; x < spec.size(); ++x) {
            rank = rank * static_cast<std::uint64_t>(base) + static_cast<std::uint64_t>(gray.digits()[x]);
        }
        const DiscreteFunction f = DiscreteFunction::from_codes(spec, corpus.kind, fcodes);
        const DiscreteFunction a = corpus.kind == akind ? f : DiscreteFunction::from_codes(spec, akind, acodes);
        ev.evaluate(rank, f, a, acc.to_spectrum(akind));
        if (pos + 1 == hi) break;
        const std::size_t x = gray.next();
        const std::int64_t before = acodes[x];
        fcodes[x] = digit_code(corpus.kind, gray.digits()[x]);
        acodes[x] = analysis_code(corpus.kind, gray.digits()[x]);
        delta.clear();
        if (akind == ValueKind::three_valued_omega) {
            delta.emplace_back(static_cast<int>(acodes[x]) * (order / 3), 1);
            delta.emplace_back(static_cast<int>(before) * (order / 3), -1);
        } else {
            delta.emplace_back(0, acodes[x] - before);
        }
        acc.update(x, delta);
    }
    return ev.take();
}

template <class Work>
std::vector<ShardResult> run_sharded(std::uint64_t total, int threads, Work&& work) {
    const std::uint64_t workers = static_cast<std::uint64_t>(std::max(1, threads));
    const std::uint64_t shard_count = std::max<std::uint64_t>(1, std::min<std::uint64_t>(total, workers * 8));
    std::vector<ShardResult> results(static_cast<std::size_t>(shard_count));
    const auto bounds = [&](std::uint64_t s) { return total * s / shard_count; };
    std::atomic<std::uint64_t> next{0};
    const auto drain = [&] {
        for (std::uint64_t s = next++; s < shard_count; s = next++) {
            results[static_cast<std::size_t>(s)] = work(bounds(s), bounds(s + 1));
        }
    };
    if (workers == 1 || shard_count == 1) {
        drain();
        return results;
    }
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < std::min(workers, shard_count); ++w) pool.emplace_back(drain);
    for (auto& th : pool) th.join();
    return results;
}

SweepSummary merge(const Corpus& corpus, const SweepOptions& options, std::vector<ShardResult> shards) {
    SweepSummary out;
    out.corpus = corpus;
    for (Law law : options.laws) out.laws.push_back(summary_for(law));
    for (auto& shard : shards) {
        out.functions += shard.functions;
        out.nonconstant += shard.nonconstant;
        out.digest += shard.digest;
        out.corollary_literal_holds += shard.corollary_literal_holds;
        out.max_identity_deviation = std::max(out.max_identity_deviation, shard.max_identity_deviation);
        out.max_parseval_relative_error = std::max(out.max_parseval_relative_error, shard.max_parseval_relative_error);
        out.prop3.functions += shard.prop3.functions;
        out.prop3.stated_holds += shard.prop3.stated_holds;
        out.prop3.exempt += shard.prop3.exempt;
        out.prop3.refined_holds += shard.prop3.refined_holds;
        out.prop3.stated_fails_nonexempt += shard.prop3.stated_fails_nonexempt;
        for (std::size_t li = 0; li < shard.laws.size(); ++li) {
            LawSummary& dst = out.laws[li];
            const LawSummary& src = shard.laws[li];
            dst.checked += src.checked;
            dst.violations += src.violations;
            if (src.first_counterexample &&
                (!dst.first_counterexample || *src.first_counterexample < *dst.first_counterexample)) {
                dst.first_counterexample = src.first_counterexample;
                dst.counterexample_codes = src.counterexample_codes;
            }
        }
        for (auto& rec : shard.extremal) offer_extremal(out.extremal, options.top_k, std::move(rec));
    }
    return out;
}

}  // namespace

DiscreteFunction gen_fm(int m, int n) {
    if (m < 1 || m > n) throw DomainError("gen_fm needs 1 <= m <= n");
    const DomainSpec spec(4, n);
    std::vector<std::int64_t> codes(spec.size());
    for (std::size_t x = 0; x < spec.size(); ++x) {
        std::int64_t v = 1;
        for (int i = 0; i < m; ++i) v *= coordinate(x, i, spec) < 2 ? 1 : 0;
        codes[x] = v;
    }
    return DiscreteFunction::from_codes(spec, ValueKind::boolean01, std::move(codes));
}

DiscreteFunction gen_fm_pm1(int m, int n) {
    return gen_fm(m, n).to_pm1();
}

DiscreteFunction gen_named(std::string_view name, const DomainSpec& spec, const FamilyParams& params) {
    const int q = spec.q();
    const int n = spec.n();
    const auto need_binary = [&] {
        if (q != 2) throw DomainError("family '" + std::string(name) + "' needs q = 2");
    };
    std::vector<std::int64_t> codes(spec.size());
    if (name == "xor_all") {
        need_binary();
        for (std::size_t x = 0; x < spec.size(); ++x) codes[x] = std::popcount(x) % 2;
        return DiscreteFunction::from_codes(spec, ValueKind::boolean01, std::move(codes));
    }
    if (name == "jmath") {
        need_binary();
        for (std::size_t x = 0; x < spec.size(); ++x) codes[x] = n - 2 * std::popcount(x);
        return DiscreteFunction::from_codes(spec, ValueKind::integer, std::move(codes));
    }
    if (name == "majority") {
        need_binary();
        if (n % 2 == 0) throw DomainError("majority needs an odd number of variables");
        for (std::size_t x = 0; x < spec.size(); ++x) codes[x] = std::popcount(x) > n / 2 ? 1 : 0;
        return DiscreteFunction::from_codes(spec, ValueKind::boolean01, std::move(codes));
    }
    if (name == "dictator") {
        if (params.index < 0 || params.index >= n) throw DomainError("dictator index outside [0, n)");
        for (std::size_t x = 0; x < spec.size(); ++x) codes[x] = 2 * coordinate(x, params.index, spec) < q ? 1 : -1;
        return DiscreteFunction::from_codes(spec, ValueKind::two_valued_pm1, std::move(codes));
    }
    if (name == "constant") {
        if (!is_exact(params.kind)) {
            return DiscreteFunction::from_complex(
                spec, std::vector<std::complex<double>>(spec.size(), static_cast<double>(params.value)));
        }
        std::fill(codes.begin(), codes.end(), params.value);
        return DiscreteFunction::from_codes(spec, params.kind, std::move(codes));
    }
    if (name == "character") {
        const std::size_t z = flat_index(params.z, spec);
        return DiscreteFunction::from_complex(spec, character_values(z, spec));
    }
    throw DomainError("unknown family '" + std::string(name) + "'");
}

std::uint64_t corpus_size(const Corpus& corpus) {
    if (!corpus.exhaustive) return corpus.count;
    const int base = value_set_size(corpus.kind);
    if (base == 0) {
        throw InfeasibleCorpusError("exhaustive corpora need a finite value set (pm1, omega3 or bool01)");
    }
    std::uint64_t total = 1;
    for (std::size_t x = 0; x < corpus.spec.size(); ++x) {
        total *= static_cast<std::uint64_t>(base);
        if (total > kMaxExhaustive) {
            throw InfeasibleCorpusError("exhaustive corpus exceeds 2^32 functions");
        }
    }
    return total;
}

DiscreteFunction random_function(const Corpus& corpus, std::uint64_t index) {
    std::mt19937_64 rng(splitmix64(corpus.seed ^ splitmix64(index + 1)));
    const DomainSpec& spec = corpus.spec;
    if (corpus.kind == ValueKind::complex) {
        std::vector<std::complex<double>> values(spec.size());
        for (auto& v : values) {
            const double re = uniform_symmetric(rng);
            v = {re, uniform_symmetric(rng)};
        }
        return DiscreteFunction::from_complex(spec, std::move(values));
    }
    std::vector<std::int64_t> codes(spec.size());
    for (auto& c : codes) {
        if (corpus.kind == ValueKind::integer) {
            c = static_cast<std::int64_t>(uniform_below(rng, 9)) - 4;
        } else {
            c = digit_code(corpus.kind, static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(value_set_size(corpus.kind)))));
        }
    }
    return DiscreteFunction::from_codes(spec, corpus.kind, std::move(codes));
}

DiscreteFunction exhaustive_function(const Corpus& corpus, std::uint64_t rank) {
    const std::uint64_t total = corpus_size(Corpus{corpus.spec, corpus.kind, true, 0, 0});
    if (rank >= total) throw DomainError("rank outside the exhaustive corpus");
    const auto base = static_cast<std::uint64_t>(value_set_size(corpus.kind));
    std::vector<std::int64_t> codes(corpus.spec.size());
    for (std::size_t x = codes.size(); x-- > 0;) {
        codes[x] = digit_code(corpus.kind, static_cast<int>(rank % base));
        rank /= base;
    }
    return DiscreteFunction::from_codes(corpus.spec, corpus.kind, std::move(codes));
}

GrayCounter::GrayCounter(int base, std::size_t length, std::uint64_t start)
    : base_(base), counter_(length, 0), gray_(length, 0), flip_(length, 0), position_(start) {
    for (std::size_t pos = length; pos-- > 0;) {
        counter_[pos] = static_cast<int>(start % static_cast<std::uint64_t>(base));
        start /= static_cast<std::uint64_t>(base);
    }
    refresh_from(0);
}

void GrayCounter::refresh_from(std::size_t pos) {
    for (std::size_t j = pos; j < counter_.size(); ++j) {
        const bool flip = j == 0 ? false : (flip_[j - 1] != (gray_[j - 1] % 2 == 1));
        flip_[j] = flip ? 1 : 0;
        gray_[j] = flip ? base_ - 1 - counter_[j] : counter_[j];
    }
}

std::size_t GrayCounter::next() {
    std::size_t j = counter_.size();
    while (j-- > 0) {
        if (counter_[j] + 1 < base_) break;
        counter_[j] = 0;
    }
    if (j == static_cast<std::size_t>(-1)) throw DomainError("Gray counter overflow");
    ++counter_[j];
    ++position_;
    const std::vector<int> before(gray_.begin() + static_cast<std::ptrdiff_t>(j), gray_.end());
    refresh_from(j);
    for (std::size_t k = j; k < gray_.size(); ++k) {
        if (gray_[k] != before[k - j]) return k;
    }
    return j;
}

std::string_view law_token(Law law) {
    switch (law) {
        case Law::transform: return "transform";
        case Law::parseval: return "parseval";
        case Law::spectral_I: return "spectral_I";
        case Law::theorem1: return "theorem1";
        case Law::three_valued: return "three_valued";
        case Law::proof_steps: return "proof_steps";
        case Law::support: return "support";
        case Law::prop2: return "prop2";
        case Law::prop3: return "prop3";
        case Law::degree_relations: return "degree_relations";
        case Law::degree_identities: return "degree_identities";
    }
    return "?";
}

std::vector<Law> all_laws() {
    return {Law::transform, Law::parseval,    Law::spectral_I, Law::theorem1,         Law::three_valued,
            Law::proof_steps, Law::support,   Law::prop2,      Law::prop3,            Law::degree_relations,
            Law::degree_identities};
}

Law parse_law(std::string_view token) {
    for (Law law : all_laws()) {
        if (law_token(law) == token) return law;
    }
    throw DomainError("unknown law '" + std::string(token) + "'");
}

bool law_applicable(Law law, ValueKind kind, int q) {
    switch (law) {
        case Law::transform:
        case Law::parseval:
        case Law::prop2: return true;
        case Law::support: return is_exact(kind);
        case Law::spectral_I:
        case Law::proof_steps: return two_valued(kind) || kind == ValueKind::three_valued_omega;
        case Law::theorem1: return two_valued(kind);
        case Law::three_valued: return kind == ValueKind::three_valued_omega;
        case Law::prop3:
        case Law::degree_relations: return two_valued(kind) && q == 2;
        case Law::degree_identities: return q <= 3 && is_exact(kind);
    }
    return false;
}

bool extremal_before(const ExtremalRecord& a, const ExtremalRecord& b) {
    if (a.tightness != b.tightness) return a.tightness > b.tightness;
    return a.codes < b.codes;
}

std::uint64_t SweepSummary::total_violations() const {
    std::uint64_t total = 0;
    for (const auto& law : laws) total += law.violations;
    return total;
}

const LawSummary* SweepSummary::find(Law law) const {
    for (const auto& l : laws) {
        if (l.law == law) return &l;
    }
    return nullptr;
}

SweepSummary sweep(const Corpus& corpus, const SweepOptions& options) {
    for (Law law : options.laws) {
        if (!law_applicable(law, corpus.kind, corpus.spec.q())) {
            throw InfeasibleCorpusError("law " + std::string(law_token(law)) + " does not apply to kind " +
                                        std::string(kind_token(corpus.kind)) + " with q = " +
                                        std::to_string(corpus.spec.q()));
        }
    }
    const std::uint64_t total = corpus_size(corpus);
    std::vector<ShardResult> shards;
    if (corpus.exhaustive) {
        shards = run_sharded(total, options.threads, [&](std::uint64_t lo, std::uint64_t hi) {
            return lo < hi ? run_exhaustive_shard(corpus, options, lo, hi) : ShardResult{};
        });
    } else {
        shards = run_sharded(total, options.threads, [&](std::uint64_t lo, std::uint64_t hi) {
            return run_random_shard(corpus, options, lo, hi);
        });
    }
    for (auto& shard : shards) {
        if (shard.laws.empty()) {
            for (Law law : options.laws) shard.laws.push_back(summary_for(law));
        }
    }
    return merge(corpus, options, std::move(shards));
}

std::vector<ExtremalRecord> search_extremal(const Corpus& corpus, std::size_t k, int threads) {
    if (!two_valued(corpus.kind) && corpus.kind != ValueKind::three_valued_omega) {
        throw InfeasibleCorpusError("extremal search needs a two- or three-valued corpus");
    }
    if (corpus_size(corpus) == 0) throw NoApplicableBoundError("empty corpus");
    const SweepSummary summary = sweep(corpus, SweepOptions{{}, threads, k});
    if (summary.extremal.empty()) throw NoApplicableBoundError("corpus has no non-constant function");
    return summary.extremal;
}

std::vector<ExtremalRecord> search_extremal(std::span<const DiscreteFunction> functions, std::size_t k) {
    std::vector<ExtremalRecord> top;
    for (std::size_t i = 0; i < functions.size(); ++i) {
        const DiscreteFunction& f = functions[i];
        if (!f.exact() || f.is_constant()) continue;
        const bool three = f.kind() == ValueKind::three_valued_omega;
        const DiscreteFunction a = three ? f : f.to_pm1();
        const DegreeProfile profile = degree_profile(forward(a));
        const int t = relevant_count(a);
        const BoundReport report = three ? bounds_three_valued(profile, f.spec().q(), t)
                                         : bounds_two_valued(profile, f.spec().q(), t);
        ExtremalRecord rec;
        rec.index = i;
        rec.codes.assign(f.codes().begin(), f.codes().end());
        rec.profile = profile;
        rec.t = t;
        rec.tightness = tightness(report);
        rec.best_bound_value = std::numeric_limits<double>::infinity();
        for (const auto& e : report.entries) {
            if (e.applicable && e.asserted && e.value < rec.best_bound_value) {
                rec.best_bound_value = e.value;
                rec.best_bound = e.formula_id;
            }
        }
        offer_extremal(top, k, std::move(rec));
    }
    if (top.empty()) throw NoApplicableBoundError("no non-constant function among the inputs");
    return top;
}

}  // namespace qspectra
