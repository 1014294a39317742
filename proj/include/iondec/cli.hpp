#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace iondec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitDataFile = 2;

// Environment variable naming the directory that holds salts.csv.
inline constexpr const char* kDataDirEnv = "IONDEC_DATA_DIR";
inline constexpr const char* kDataFileName = "salts.csv";

// Data file precedence: explicit flag, then $IONDEC_DATA_DIR/salts.csv, then
// the bundled file.
std::filesystem::path resolve_data_file(const std::string& flag_value);

// Runs one invocation. Output goes to `out` unless --output names a file, in
// which case the file is written only after the command succeeds.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Locale-independent number formatting.
std::string format_shortest(double value);
std::string format_fixed(double value, int decimals);

}  // namespace iondec::cli
