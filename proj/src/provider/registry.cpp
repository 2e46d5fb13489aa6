#include "privacycoach/provider/registry.hpp"

#include "privacycoach/xml_codec.hpp"

#include <mutex>

namespace privacycoach::provider {

namespace fs = std::filesystem;

TagMismatch::TagMismatch(const TagId& path_tag, const TagId& policy_tag)
    : std::invalid_argument("policy declares tag " + policy_tag.str() + " but was submitted for " + path_tag.str()) {}

PolicyRegistry::PolicyRegistry(fs::path storage_root) : root_(std::move(storage_root)) {
    std::error_code ec;
    if (!fs::is_directory(root_, ec))
        throw StorageError("storage root '" + root_.string() + "' is not a directory");

    fs::directory_iterator it(root_, ec);
    if (ec) throw StorageError("cannot read storage root '" + root_.string() + "': " + ec.message());

    for (const auto& entry : it) {
        const auto& path = entry.path();
        if (path.extension() != ".xml" || !entry.is_regular_file(ec)) continue;

        const auto stem = path.stem().string();
        if (TagId::check(stem)) {
            skipped_.push_back({path, "file name is not a tag id"});
            continue;
        }
        const auto tag = TagId::parse(stem);
        if (tag.str() != stem) {
            skipped_.push_back({path, "file name is not in canonical lowercase form"});
            continue;
        }
        try {
            auto policy = policy_from_xml(read_file(path));
            if (policy.tag() != tag) {
                skipped_.push_back({path, "policy declares tag " + policy.tag().str()});
                continue;
            }
            auto document = policy_to_xml(policy);
            entries_.emplace(tag, Entry{std::move(policy), std::move(document)});
        } catch (const std::exception& e) {
            skipped_.push_back({path, e.what()});
        }
    }
}

LookupOutcome PolicyRegistry::get_policy(std::string_view tag_text) const {
    if (auto error = TagId::check(tag_text)) return InvalidTagIdOutcome{*error};
    return get_policy(TagId::parse(tag_text));
}

LookupOutcome PolicyRegistry::get_policy(const TagId& tag) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(tag);
    if (it == entries_.end()) return UnknownTag{};
    return Found{it->second.policy, it->second.document};
}

RegisterOutcome PolicyRegistry::register_policy(const TagId& tag, const PrivacyPolicy& policy) {
    if (policy.tag() != tag) throw TagMismatch(tag, policy.tag());
    auto document = policy_to_xml(policy);

    std::unique_lock lock(mutex_);
    write_file_atomically(file_for(tag), document);
    auto [it, inserted] = entries_.insert_or_assign(tag, Entry{policy, std::move(document)});
    return inserted ? RegisterOutcome::created : RegisterOutcome::replaced;
}

DeleteOutcome PolicyRegistry::delete_policy(const TagId& tag) {
    std::unique_lock lock(mutex_);
    auto it = entries_.find(tag);
    if (it == entries_.end()) return DeleteOutcome::unknown_tag;
    remove_file_durably(file_for(tag));
    entries_.erase(it);
    return DeleteOutcome::deleted;
}

std::vector<TagId> PolicyRegistry::list_tags() const {
    std::shared_lock lock(mutex_);
    std::vector<TagId> tags;
    tags.reserve(entries_.size());
    for (const auto& [tag, entry] : entries_) tags.push_back(tag);
    return tags;
}

std::size_t PolicyRegistry::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

} // namespace privacycoach::provider
