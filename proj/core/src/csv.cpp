#include "citegraph/csv.hpp"

#include <charconv>

namespace citegraph {

void CsvWriter::row(const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) buf_.push_back(',');
        buf_ += cells[i];
    }
    buf_.push_back('\n');
}

std::string CsvWriter::cell(std::string_view raw) {
    const bool needs_quote = raw.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quote) return std::string(raw);
    std::string out;
    out.reserve(raw.size() + 2);
    out.push_back('"');
    for (char c : raw) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string CsvWriter::cell(double value) {
    // Shortest round-trip representation keeps output deterministic.
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

std::string CsvWriter::cell(long long value) {
    return std::to_string(value);
}

std::string CsvWriter::cell(const std::optional<double>& value) {
    return value ? cell(*value) : std::string();
}

}  // namespace citegraph
