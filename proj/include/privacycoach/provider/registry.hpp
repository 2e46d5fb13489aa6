#pragma once

#include "privacycoach/atomic_file.hpp"
#include "privacycoach/policy.hpp"
#include "privacycoach/tag_id.hpp"

#include <filesystem>
#include <map>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace privacycoach::provider {

struct Found {
    PrivacyPolicy policy;
    std::string document; // canonical XML, as served
};
struct UnknownTag {};
struct InvalidTagIdOutcome {
    TagIdError reason;
};

using LookupOutcome = std::variant<Found, UnknownTag, InvalidTagIdOutcome>;

enum class RegisterOutcome { created, replaced };
enum class DeleteOutcome { deleted, unknown_tag };

class TagMismatch : public std::invalid_argument {
public:
    TagMismatch(const TagId& path_tag, const TagId& policy_tag);
};

struct SkippedFile {
    std::filesystem::path file;
    std::string reason;
};

/**
 * Tag-to-policy store of the Policy Provider, one canonical XML file per tag
 * under the storage root.
 *
 * Reads run in parallel; mutations are exclusive and reach disk (temporary
 * file, fsync, rename) before they become visible in memory. Holds nothing
 * but tag ids and policies.
 */
class PolicyRegistry {
public:
    /// Loads every well-formed `{tagid}.xml` under `storage_root`. Files that
    /// do not parse, or whose name disagrees with their tag, are skipped and
    /// listed in skipped(). Throws StorageError if the root is not a readable
    /// directory.
    explicit PolicyRegistry(std::filesystem::path storage_root);

    PolicyRegistry(const PolicyRegistry&) = delete;
    PolicyRegistry& operator=(const PolicyRegistry&) = delete;

    LookupOutcome get_policy(std::string_view tag_text) const;
    LookupOutcome get_policy(const TagId& tag) const;

    /// Throws TagMismatch if policy.tag() != tag, StorageError on write failure.
    RegisterOutcome register_policy(const TagId& tag, const PrivacyPolicy& policy);

    /// Throws StorageError.
    DeleteOutcome delete_policy(const TagId& tag);

    /// Canonical ids in lexicographic order.
    std::vector<TagId> list_tags() const;

    std::size_t size() const;
    const std::filesystem::path& storage_root() const noexcept { return root_; }
    const std::vector<SkippedFile>& skipped() const noexcept { return skipped_; }

    std::filesystem::path file_for(const TagId& tag) const { return root_ / (tag.str() + ".xml"); }

private:
    struct Entry {
        PrivacyPolicy policy;
        std::string document;
    };

    std::filesystem::path root_;
    std::vector<SkippedFile> skipped_;
    mutable std::shared_mutex mutex_;
    std::map<TagId, Entry> entries_;
};

} // namespace privacycoach::provider
