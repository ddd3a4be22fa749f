#include "dtriage/core/io.hpp"

#include <sstream>
#include <system_error>

#include "dtriage/core/error.hpp"

namespace dtriage::core {

namespace {

std::filesystem::path temp_sibling(const std::filesystem::path& path) {
  auto temp = path;
  temp += ".tmp";
  return temp;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream.good()) {
    throw Error("IoFailure", "cannot read " + path.string());
  }
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  if (stream.bad()) {
    throw Error("IoFailure", "read failed for " + path.string());
  }
  return buffer.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  AtomicFileWriter writer(path);
  writer.append(content);
  writer.commit();
}

AtomicFileWriter::AtomicFileWriter(std::filesystem::path path)
    : path_(std::move(path)), temp_path_(temp_sibling(path_)) {
  if (!path_.parent_path().empty()) {
    std::error_code ec;
    std::filesystem::create_directories(path_.parent_path(), ec);
  }
  stream_.open(temp_path_, std::ios::binary | std::ios::trunc);
  if (!stream_.good()) {
    throw Error("IoFailure", "cannot write " + temp_path_.string());
  }
}

AtomicFileWriter::~AtomicFileWriter() {
  if (!committed_) {
    stream_.close();
    std::error_code ec;
    std::filesystem::remove(temp_path_, ec);
  }
}

void AtomicFileWriter::append(std::string_view chunk) {
  stream_.write(chunk.data(), static_cast<std::streamsize>(chunk.size()));
  if (!stream_.good()) {
    throw Error("IoFailure", "write failed for " + temp_path_.string());
  }
}

void AtomicFileWriter::commit() {
  stream_.flush();
  if (!stream_.good()) {
    throw Error("IoFailure", "flush failed for " + temp_path_.string());
  }
  stream_.close();
  std::error_code ec;
  std::filesystem::rename(temp_path_, path_, ec);
  if (ec) {
    throw Error("IoFailure", "rename failed for " + path_.string() + ": " + ec.message());
  }
  committed_ = true;
}

}  // namespace dtriage::core
