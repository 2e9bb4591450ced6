#include "citegraph/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "citegraph/errors.hpp"
#include "citegraph/util.hpp"

namespace citegraph {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::create_directories(path.parent_path());
    const auto tmp = path.parent_path() /
                     (path.filename().string() + ".tmp-" + fnv1a64_hex(path.string()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DataError("cannot write file: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw DataError("short write: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string file_fingerprint(const std::filesystem::path& path) {
    return fnv1a64_hex(read_file(path));
}

}  // namespace citegraph
