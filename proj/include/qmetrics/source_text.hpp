#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qmetrics {

/// A source position: 1-based line, 0-based column.
struct SourceSpan {
    int line = 1;
    int column = 0;

    friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
    friend auto operator<=>(const SourceSpan&, const SourceSpan&) = default;
};

/// Splits on '\n'; a trailing newline does not produce an extra empty line.
std::vector<std::string_view> split_lines(std::string_view text);

/// A counted line is non-blank and its first non-whitespace character does
/// not begin a comment (`//` for OpenQASM, `#` for the Qiskit dialect).
bool is_counted_line(std::string_view line, std::string_view comment_prefix);

int count_source_lines(std::string_view text, std::string_view comment_prefix);

/// Reads a whole file as text. Throws std::runtime_error when unreadable.
std::string read_text_file(const std::string& path);

}  // namespace qmetrics
