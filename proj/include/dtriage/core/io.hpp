#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>

namespace dtriage::core {

/// Reads an entire file; throws Error("IoFailure") when unreadable.
std::string read_file(const std::filesystem::path& path);

/// Writes via a sibling temp file plus rename, so a failed run never leaves a
/// truncated file at `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Streaming variant of write_file_atomic for batch producers: append any
/// number of chunks, then commit(). Without commit() the temp file is removed
/// and `path` is untouched.
class AtomicFileWriter {
 public:
  explicit AtomicFileWriter(std::filesystem::path path);
  ~AtomicFileWriter();

  AtomicFileWriter(const AtomicFileWriter&) = delete;
  AtomicFileWriter& operator=(const AtomicFileWriter&) = delete;

  void append(std::string_view chunk);
  void commit();

 private:
  std::filesystem::path path_;
  std::filesystem::path temp_path_;
  std::ofstream stream_;
  bool committed_{false};
};

}  // namespace dtriage::core
