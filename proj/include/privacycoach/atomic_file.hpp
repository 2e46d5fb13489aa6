#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace privacycoach {

class StorageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Writes `contents` to a temporary sibling, fsyncs it, renames it over
/// `target` and fsyncs the directory. Readers see either the old or the new
/// file, never a partial one. Throws StorageError.
void write_file_atomically(const std::filesystem::path& target, std::string_view contents);

/// Removes `target` and fsyncs its directory. Returns false if it did not exist.
bool remove_file_durably(const std::filesystem::path& target);

/// Throws StorageError if the file cannot be read.
std::string read_file(const std::filesystem::path& path);

} // namespace privacycoach
