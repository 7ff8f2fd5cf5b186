#include <doctest.h>

#include <random>

#include "qspectra/explorer.hpp"
#include "qspectra/io.hpp"
#include "qspectra/report.hpp"

using namespace qspectra;

namespace {

int parse_error_line(std::string_view text) {
    try {
        parse_truth_table(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("canonical text") {
    const auto f = DiscreteFunction::from_codes(DomainSpec(2, 2), ValueKind::two_valued_pm1, {1, -1, -1, 1});
    CHECK(format_truth_table(f) == "q 2 n 2 kind pm1\n1\n-1\n-1\n1\n");
    const auto c = DiscreteFunction::from_complex(DomainSpec(2, 1), std::vector<std::complex<double>>{{0.5, -1}, {0.1, 0}});
    CHECK(format_truth_table(c) == "q 2 n 1 kind complex\n0.5 -1\n0.1 0\n");
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1e-20) == "1e-20");
}

TEST_CASE("roundtrip is byte-identical for every kind") {
    std::mt19937_64 rng(1);
    for (ValueKind kind : {ValueKind::two_valued_pm1, ValueKind::three_valued_omega, ValueKind::boolean01,
                           ValueKind::integer, ValueKind::complex}) {
        for (int q : {2, 3, 5}) {
            const Corpus corpus{DomainSpec(q, 2), kind, false, 4, rng()};
            for (std::uint64_t i = 0; i < 4; ++i) {
                const DiscreteFunction f = random_function(corpus, i);
                const std::string text = format_truth_table(f);
                const DiscreteFunction back = parse_truth_table(text);
                CHECK(back == f);
                CHECK(format_truth_table(back) == text);
            }
        }
    }
}

TEST_CASE("lenient input, strict structure") {
    const DiscreteFunction f = parse_truth_table("q 3 n 1 kind omega3\r\n0\r\n2\r\n1\r\n\r\n\n");
    CHECK(f.kind() == ValueKind::three_valued_omega);
    CHECK(f.codes()[1] == 2);
    CHECK(parse_truth_table("q 2 n 1 kind int\n7\n-7\n").codes()[1] == -7);
    CHECK(parse_error_line("q 3  n 1 kind pm1\n1\n1\n1\n") == 0);
}

TEST_CASE("parse errors carry positions") {
    CHECK(parse_error_line("") == 1);
    CHECK(parse_error_line("q 3 n 1 kind pm2\n1\n1\n1\n") == 1);
    CHECK(parse_error_line("q 3 n 1\n1\n1\n1\n") == 1);
    CHECK(parse_error_line("q 3 n 1 kind pm1\n1\n0\n1\n") == 3);
    CHECK(parse_error_line("q 3 n 1 kind pm1\n1\n1\n") == 4);
    CHECK(parse_error_line("q 3 n 1 kind pm1\n1\n1\n1\n1\n") == 5);
    CHECK(parse_error_line("q 2 n 1 kind complex\n1 0\n1\n") == 3);
    CHECK(parse_error_line("q 2 n 1 kind bool01\n1\nx\n") == 3);
    CHECK(parse_error_line("q 3 n 1 kind omega3\n0\n3\n1\n") == 3);
    try {
        parse_truth_table("q 3 n 2 kind pm1\n1\n1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()) == "line 4, column 1: expected q^n = 9 value lines, found 2");
        CHECK(e.column() == 1);
    }
}

TEST_CASE("json numbers") {
    CHECK(json_number(std::numbers::pi).dump() == "3.14159265359");
    CHECK(json_number(1.0 / 3.0).dump() == "0.333333333333");
    CHECK(json_number(2.0).dump() == "2.0");
    CHECK(json_number(std::numeric_limits<double>::infinity()).is_null());
}

TEST_CASE("analysis report") {
    const AnalysisReport r = analyze(gen_fm(2, 3));
    const auto& d = r.document;
    CHECK_FALSE(r.violation);
    CHECK(d.at("schema_version") == kSchemaVersion);
    CHECK(d.at("analysis") == "two_valued");
    CHECK(d.at("recoding") == "1-2f");
    CHECK(d.at("degrees").at("deg0") == 2);
    CHECK(d.at("relevant_variables") == nlohmann::json::array({1, 2}));
    CHECK(d.at("t") == 2);
    CHECK(d.at("bounds").at("tightness").get<double>() == doctest::Approx(0.202642367285));
    CHECK(d.at("sensitivity").at("I_cycle").at("value") == 32);
    CHECK(d.at("checks").at("support").at("deg0_le_n_minus_t") == false);
    CHECK(dump_json(d).back() == '\n');

    const auto c = DiscreteFunction::from_codes(DomainSpec(3, 2), ValueKind::two_valued_pm1, std::vector<std::int64_t>(9, 1));
    const AnalysisReport rc = analyze(c);
    CHECK_FALSE(rc.violation);
    for (const auto& e : rc.document.at("bounds").at("entries")) CHECK(e.at("applicable") == false);
    CHECK(rc.document.at("bounds").at("tightness").is_null());

    const auto phi = DiscreteFunction::from_codes(DomainSpec(3, 1), ValueKind::three_valued_omega, {0, 1, 2});
    const AnalysisReport r3 = analyze(phi);
    CHECK(r3.document.at("analysis") == "three_valued");
    CHECK(r3.document.at("bounds").at("tightness").get<double>() == doctest::Approx(1.0 / 1.5));

    const auto cx = DiscreteFunction::from_complex(DomainSpec(2, 1), std::vector<std::complex<double>>{1.0, 2.0});
    CHECK_THROWS_AS(analyze(cx), KindError);
}

TEST_CASE("spectrum listing") {
    const auto one = DiscreteFunction::from_codes(DomainSpec(3, 2), ValueKind::integer, std::vector<std::int64_t>(9, 1));
    CHECK(spectrum_listing(one) == "z=(0,0) W=9\n");
    const auto h = DiscreteFunction::from_codes(DomainSpec(4, 1), ValueKind::boolean01, {1, 1, 0, 0});
    CHECK(spectrum_listing(h) == "z=(0) W=2\nz=(1) W=1 - w ~ 1-1i\nz=(-1) W=1 + w ~ 1+1i\n");
    FamilyParams p;
    p.z = {1, 2};
    CHECK(spectrum_listing(gen_named("character", DomainSpec(3, 2), p)) == "z=(1,-1) W=9\n");
}

}  // TEST_SUITE io
