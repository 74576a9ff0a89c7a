#include "qmetrics/source_text.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qmetrics {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

bool is_counted_line(std::string_view line, std::string_view comment_prefix) {
    std::size_t i = 0;
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) return false;
    return line.substr(i, comment_prefix.size()) != comment_prefix;
}

int count_source_lines(std::string_view text, std::string_view comment_prefix) {
    int n = 0;
    for (auto line : split_lines(text)) {
        if (is_counted_line(line, comment_prefix)) ++n;
    }
    return n;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace qmetrics
