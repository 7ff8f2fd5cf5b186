#include "qspectra/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace qspectra {
namespace {

struct Token {
    std::string_view text;
    int column = 0;
};

std::vector<Token> split_line(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

std::int64_t parse_int(const Token& tok, int line) {
    std::int64_t v = 0;
    const char* end = tok.text.data() + tok.text.size();
    const auto [ptr, ec] = std::from_chars(tok.text.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError("expected an integer, found '" + std::string(tok.text) + "'", line, tok.column);
    }
    return v;
}

double parse_real(const Token& tok, int line) {
    double v = 0;
    const char* end = tok.text.data() + tok.text.size();
    const auto [ptr, ec] = std::from_chars(tok.text.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError("expected a decimal number, found '" + std::string(tok.text) + "'", line, tok.column);
    }
    return v;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    while (!lines.empty() && split_line(lines.back()).empty()) lines.pop_back();
    return lines;
}

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

DiscreteFunction parse_truth_table(std::string_view text) {
    const std::vector<std::string_view> lines = split_lines(text);
    if (lines.empty()) throw ParseError("empty input, expected header 'q <int> n <int> kind <token>'", 1, 1);

    const std::vector<Token> head = split_line(lines[0]);
    const char* keys[] = {"q", "n", "kind"};
    for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t at = 2 * k;
        if (at >= head.size() || head[at].text != keys[k]) {
            const int col = at < head.size() ? head[at].column : static_cast<int>(lines[0].size()) + 1;
            throw ParseError(std::string("header must read 'q <int> n <int> kind <token>', expected '") + keys[k] + "'",
                             1, col);
        }
        if (at + 1 >= head.size()) {
            throw ParseError(std::string("missing value after '") + keys[k] + "'", 1,
                             static_cast<int>(lines[0].size()) + 1);
        }
    }
    if (head.size() > 6) throw ParseError("unexpected token after header", 1, head[6].column);

    const std::int64_t q = parse_int(head[1], 1);
    const std::int64_t n = parse_int(head[3], 1);
    ValueKind kind;
    try {
        kind = parse_kind(head[5].text);
    } catch (const std::exception& e) {
        throw ParseError(e.what(), 1, head[5].column);
    }
    if (q < 2 || q > kMaxAlphabet) throw ParseError("q must lie in [2, 64]", 1, head[1].column);
    if (n < 1 || n > 40) throw ParseError("n must be positive", 1, head[3].column);
    std::optional<DomainSpec> spec;
    try {
        spec.emplace(static_cast<int>(q), static_cast<int>(n));
    } catch (const DomainError& e) {
        throw ParseError(e.what(), 1, head[3].column);
    }

    const std::size_t expected = spec->size();
    const std::size_t found = lines.size() - 1;
    if (found != expected) {
        const int line = static_cast<int>(std::min(found, expected)) + 2;
        throw ParseError("expected q^n = " + std::to_string(expected) + " value lines, found " + std::to_string(found),
                         line, 1);
    }

    const std::size_t width = kind == ValueKind::complex ? 2 : 1;
    std::vector<std::int64_t> codes;
    std::vector<std::complex<double>> values;
    for (std::size_t x = 0; x < expected; ++x) {
        const int line = static_cast<int>(x) + 2;
        const std::vector<Token> toks = split_line(lines[x + 1]);
        if (toks.size() != width) {
            const int col = toks.size() > width ? toks[width].column : static_cast<int>(lines[x + 1].size()) + 1;
            throw ParseError("expected " + std::to_string(width) + (width == 1 ? " value" : " values (re im)") +
                                 ", found " + std::to_string(toks.size()),
                             line, col);
        }
        if (kind == ValueKind::complex) {
            values.emplace_back(parse_real(toks[0], line), parse_real(toks[1], line));
            continue;
        }
        const std::int64_t v = parse_int(toks[0], line);
        const bool ok = kind == ValueKind::integer || (kind == ValueKind::two_valued_pm1 && (v == 1 || v == -1)) ||
                        (kind == ValueKind::boolean01 && (v == 0 || v == 1)) ||
                        (kind == ValueKind::three_valued_omega && v >= 0 && v <= 2);
        if (!ok) {
            throw ParseError("value " + std::to_string(v) + " not allowed for kind " + std::string(kind_token(kind)),
                             line, toks[0].column);
        }
        codes.push_back(v);
    }
    if (kind == ValueKind::complex) return DiscreteFunction::from_complex(*spec, std::move(values));
    return DiscreteFunction::from_codes(*spec, kind, std::move(codes));
}

DiscreteFunction read_truth_table(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_truth_table(buf.str());
}

std::string format_double(double v) {
    if (v == 0.0) v = 0.0;  // drop the sign of -0
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string format_truth_table(const DiscreteFunction& f) {
    const DomainSpec& spec = f.spec();
    std::string out = "q " + std::to_string(spec.q()) + " n " + std::to_string(spec.n()) + " kind " +
                      std::string(kind_token(f.kind())) + "\n";
    if (f.exact()) {
        for (std::int64_t c : f.codes()) {
            out += std::to_string(c);
            out += '\n';
        }
    } else {
        for (const auto& v : f.complex_values()) {
            out += format_double(v.real());
            out += ' ';
            out += format_double(v.imag());
            out += '\n';
        }
    }
    return out;
}

void write_truth_table(const DiscreteFunction& f, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << format_truth_table(f);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace qspectra
