#pragma once

#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace citegraph {

// RFC 4180 CSV writer: UTF-8, LF line endings, quoting only when needed.
class CsvWriter {
public:
    void row(const std::vector<std::string>& cells);
    void row(std::initializer_list<std::string> cells) { row(std::vector<std::string>(cells)); }

    const std::string& str() const { return buf_; }

    static std::string cell(std::string_view raw);
    static std::string cell(double value);
    static std::string cell(long long value);
    static std::string cell(const std::optional<double>& value);  // empty cell when null

private:
    std::string buf_;
};

}  // namespace citegraph
