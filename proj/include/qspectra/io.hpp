#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qspectra/function.hpp"

namespace qspectra {

/// Malformed truth-table text. line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column);

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// Truth-table text: a header line `q <int> n <int> kind <token>` followed by
/// q^n value lines in flat order (x_n fastest). Complex values are written as
/// `<re> <im>`. Lines may end in CRLF; trailing blank lines are ignored.
DiscreteFunction parse_truth_table(std::string_view text);
DiscreteFunction read_truth_table(const std::filesystem::path& path);

/// Canonical form: LF line endings, single spaces, shortest round-trip decimals.
std::string format_truth_table(const DiscreteFunction& f);
void write_truth_table(const DiscreteFunction& f, const std::filesystem::path& path);

/// Shortest decimal that reads back as the same double.
std::string format_double(double v);

}  // namespace qspectra
