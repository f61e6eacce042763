#include "entrokit/data_dir.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#ifndef ENTROKIT_SOURCE_DATA_DIR
#define ENTROKIT_SOURCE_DATA_DIR "data"
#endif

namespace entrokit {

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("ENTROPY_INJECT_DATA_DIR"))
        return std::filesystem::path(env);
    return std::filesystem::path(ENTROKIT_SOURCE_DATA_DIR);
}

std::string read_data_file(const std::string& relative_path) {
    const auto path = data_dir() / relative_path;
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open data file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace entrokit
