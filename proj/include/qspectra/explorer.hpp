#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qspectra/bounds.hpp"
#include "qspectra/degrees.hpp"
#include "qspectra/function.hpp"

namespace qspectra {

// ---- Families ----------------------------------------------------------------

/// f_m(x) = h(x_1) ... h(x_m) on Z_4^n with h = (1, 1, 0, 0); boolean01 kind.
DiscreteFunction gen_fm(int m, int n);
/// 1 - 2 f_m, the {-1, 1} form used for two-valued analysis.
DiscreteFunction gen_fm_pm1(int m, int n);

struct FamilyParams {
    int index = 0;                 // dictator coordinate (0-based)
    std::int64_t value = 1;        // constant value
    ValueKind kind = ValueKind::two_valued_pm1;  // constant kind
    std::vector<int> z;            // character index
};

/// Named families: xor_all (q = 2, bool01), jmath (q = 2, int: n - 2 sum x_i),
/// dictator (pm1: 1 when x_i < q/2, else -1), majority (q = 2, odd n, bool01),
/// constant (any kind) and character (complex, phi_z).
DiscreteFunction gen_named(std::string_view name, const DomainSpec& spec, const FamilyParams& params = {});

// ---- Corpora -----------------------------------------------------------------

/// Streaming exhaustive sweeps are capped at this many functions.
inline constexpr std::uint64_t kMaxExhaustive = std::uint64_t{1} << 32;

struct Corpus {
    DomainSpec spec{2, 1};
    ValueKind kind = ValueKind::two_valued_pm1;
    bool exhaustive = true;
    std::uint64_t count = 0;  // random mode
    std::uint64_t seed = 0;   // random mode
};

class InfeasibleCorpusError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Number of functions the corpus yields; throws InfeasibleCorpusError for
/// exhaustive corpora over infinite or too large value sets.
std::uint64_t corpus_size(const Corpus& corpus);

/// Function number `index` of a random corpus: values drawn independently
/// and uniformly (pm1/omega3/bool01 value sets; int in [-4, 4]; complex with
/// real and imaginary parts uniform in [-1, 1]) from a mt19937_64 seeded with
/// splitmix64(seed, index).
DiscreteFunction random_function(const Corpus& corpus, std::uint64_t index);

/// Function with lexicographic rank `rank` of an exhaustive corpus (x_n last).
DiscreteFunction exhaustive_function(const Corpus& corpus, std::uint64_t rank);

/// Reflected b-ary Gray code over `length` digits (digit 0 most significant).
/// Consecutive states differ in exactly one digit, by +-1.
class GrayCounter {
public:
    GrayCounter(int base, std::size_t length, std::uint64_t start);

    std::span<const int> digits() const noexcept { return gray_; }
    std::uint64_t position() const noexcept { return position_; }
    /// Advances one step; returns the digit that changed.
    std::size_t next();

private:
    void refresh_from(std::size_t pos);

    int base_;
    std::vector<int> counter_;
    std::vector<int> gray_;
    std::vector<std::uint8_t> flip_;  // flip_[pos]: reflection in force at pos
    std::uint64_t position_;
};

// ---- Sweeps ------------------------------------------------------------------

enum class Law {
    transform,          // forward == naive_forward, inverse o forward == id
    parseval,           // sum |W|^2 == q^n sum |f|^2
    spectral_I,         // spectral sensitivity identities vs direct counts
    theorem1,           // two-valued Lee-degree bounds
    three_valued,       // three-valued bounds
    proof_steps,        // I >= 2 t q^{n-d}, I_H >= (q-1) t q^{n-d}, retract pairs >= 2q-2
    support,            // support and retract-difference bounds, vanishing coefficients
    prop2,              // interpolation degrees vs deg_0, deg_1
    prop3,              // deg_alg vs min{deg_0, n - deg_0}
    degree_relations,   // Boolean: deg_alg <= deg_num = deg_0((-1)^f), reflection
    degree_identities,  // q in {2,3}: deg_m = deg_0 and reduced bound forms
};

std::string_view law_token(Law law);
Law parse_law(std::string_view token);
std::vector<Law> all_laws();
bool law_applicable(Law law, ValueKind kind, int q);

struct LawSummary {
    Law law = Law::parseval;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::optional<std::uint64_t> first_counterexample;  // corpus index
    std::vector<std::int64_t> counterexample_codes;
};

struct ExtremalRecord {
    std::uint64_t index = 0;
    std::vector<std::int64_t> codes;
    DegreeProfile profile;
    int t = 0;
    std::string best_bound;
    double best_bound_value = 0.0;
    double tightness = 0.0;
};

/// Orders records by tightness (descending), then truth table (ascending).
bool extremal_before(const ExtremalRecord& a, const ExtremalRecord& b);

struct Prop3Tally {
    std::uint64_t functions = 0;
    std::uint64_t stated_holds = 0;
    std::uint64_t exempt = 0;               // deg_alg <= 1
    std::uint64_t refined_holds = 0;        // deg_alg <= min{deg0, n - min wt}
    std::uint64_t stated_fails_nonexempt = 0;
};

struct SweepSummary {
    Corpus corpus;
    std::uint64_t functions = 0;
    std::uint64_t nonconstant = 0;
    std::vector<LawSummary> laws;
    std::vector<ExtremalRecord> extremal;
    Prop3Tally prop3;
    std::uint64_t corollary_literal_holds = 0;  // deg0 <= n - t, recorded only
    double max_identity_deviation = 0.0;        // spectral I pre-rounding deviation
    double max_parseval_relative_error = 0.0;   // floating spectra only
    std::uint64_t digest = 0;

    std::uint64_t total_violations() const;
    const LawSummary* find(Law law) const;
};

struct SweepOptions {
    std::vector<Law> laws;
    int threads = 1;
    std::size_t top_k = 10;
};

/// Runs every requested law over every function of the corpus. Exhaustive
/// corpora are streamed along a Gray code with incremental spectrum updates;
/// random corpora are generated per index, so results do not depend on the
/// number of threads.
SweepSummary sweep(const Corpus& corpus, const SweepOptions& options);

/// Top-k functions by tightness of the asserted bounds (two-valued for
/// pm1/bool01, three-valued for omega3). Throws NoApplicableBoundError when
/// the corpus has no non-constant function.
std::vector<ExtremalRecord> search_extremal(const Corpus& corpus, std::size_t k, int threads = 1);
/// Same, over an explicit list of functions (indices are list positions).
std::vector<ExtremalRecord> search_extremal(std::span<const DiscreteFunction> functions, std::size_t k);

}  // namespace qspectra
