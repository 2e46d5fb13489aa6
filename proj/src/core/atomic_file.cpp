#include "privacycoach/atomic_file.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include <fcntl.h>
#include <sys/stat.h>
#include <unistd.h>

namespace privacycoach {

namespace {

std::string errno_text(const std::string& what, const std::filesystem::path& path) {
    return what + " '" + path.string() + "': " + std::strerror(errno);
}

class FileDescriptor {
public:
    explicit FileDescriptor(int fd) : fd_(fd) {}
    FileDescriptor(const FileDescriptor&) = delete;
    FileDescriptor& operator=(const FileDescriptor&) = delete;
    ~FileDescriptor() {
        if (fd_ >= 0) ::close(fd_);
    }
    int get() const { return fd_; }
    int release() { return std::exchange(fd_, -1); }

private:
    int fd_;
};

void sync_directory(const std::filesystem::path& dir) {
    FileDescriptor fd(::open(dir.empty() ? "." : dir.c_str(), O_RDONLY | O_DIRECTORY | O_CLOEXEC));
    if (fd.get() < 0) throw StorageError(errno_text("cannot open directory", dir));
    if (::fsync(fd.get()) != 0) throw StorageError(errno_text("cannot sync directory", dir));
}

} // namespace

void write_file_atomically(const std::filesystem::path& target, std::string_view contents) {
    const auto dir = target.parent_path();
    std::string pattern = (dir / ("." + target.filename().string() + ".tmp-XXXXXX")).string();

    FileDescriptor fd(::mkstemp(pattern.data()));
    if (fd.get() < 0) throw StorageError(errno_text("cannot create temporary file in", dir));
    const std::filesystem::path temp(pattern);

    auto cleanup_and_throw = [&](const std::string& what) {
        const auto message = errno_text(what, temp);
        ::close(fd.release());
        ::unlink(temp.c_str());
        throw StorageError(message);
    };

    std::size_t written = 0;
    while (written < contents.size()) {
        const auto n = ::write(fd.get(), contents.data() + written, contents.size() - written);
        if (n < 0) {
            if (errno == EINTR) continue;
            cleanup_and_throw("cannot write");
        }
        written += static_cast<std::size_t>(n);
    }
    if (::fchmod(fd.get(), 0644) != 0) cleanup_and_throw("cannot chmod");
    if (::fsync(fd.get()) != 0) cleanup_and_throw("cannot sync");
    if (::close(fd.release()) != 0) {
        ::unlink(temp.c_str());
        throw StorageError(errno_text("cannot close", temp));
    }
    if (::rename(temp.c_str(), target.c_str()) != 0) {
        const auto message = errno_text("cannot rename into", target);
        ::unlink(temp.c_str());
        throw StorageError(message);
    }
    sync_directory(dir);
}

bool remove_file_durably(const std::filesystem::path& target) {
    if (::unlink(target.c_str()) != 0) {
        if (errno == ENOENT) return false;
        throw StorageError(errno_text("cannot remove", target));
    }
    sync_directory(target.parent_path());
    return true;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw StorageError("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw StorageError("cannot read '" + path.string() + "'");
    return buffer.str();
}

} // namespace privacycoach
