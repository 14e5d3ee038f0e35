#pragma once
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace curvekit::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). The report goes to out,
// usage diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Runs every corpus check. Throws std::invalid_argument when the directory is
// missing or holds no manifest.
Json corpus_verify(const std::filesystem::path& dir, std::uint64_t seed, unsigned bits);

}  // namespace curvekit::cli
