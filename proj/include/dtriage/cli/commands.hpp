#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dtriage::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitSchema = 3;

/// Runs one pipeline subcommand (ingest, survival, assess, classify, report,
/// explain). `args` excludes the program name. Errors go to `err` as a
/// one-line JSON report and map to the documented exit codes; output files
/// are written atomically, so a failed run never leaves a truncated file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dtriage::cli
