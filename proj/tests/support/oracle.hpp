#pragma once

// Brute-force reference for the per-variable matching rule. Works purely on
// the textual drafts and its own copy of the level orderings, so it shares no
// code path with the library's ordinal-based matcher.

#include "privacycoach/policy.hpp"
#include "privacycoach/profile.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

inline const std::map<std::string, std::vector<std::string>>& level_orders() {
    static const std::map<std::string, std::vector<std::string>> orders = {
        {"identity", {"anonymous", "pseudonymous", "identified"}},
        {"logging", {"none", "presence", "full-events"}},
        {"profiling", {"none", "compensated", "unconditional"}},
        {"retention", {"transaction-only", "month", "year", "indefinite"}},
        {"sharing", {"none", "affiliates", "third-parties"}},
        {"linking", {"item-only", "purchase-linked", "identity-linked"}},
    };
    return orders;
}

inline const std::map<std::string, std::vector<std::string>>& kind_dimensions() {
    static const std::map<std::string, std::vector<std::string>> dims = {
        {"badge", {"identity", "logging", "profiling", "retention", "sharing"}},
        {"product", {"linking", "profiling", "retention", "sharing"}},
    };
    return dims;
}

inline const std::map<std::string, std::vector<std::string>>& kind_channels() {
    static const std::map<std::string, std::vector<std::string>> channels = {
        {"badge", {"email", "sms", "premises-display", "cashier-display"}},
        {"product", {"email", "sms", "in-store-display"}},
    };
    return channels;
}

inline int rank(const std::string& dimension, const std::string& level) {
    const auto& order = level_orders().at(dimension);
    for (std::size_t i = 0; i < order.size(); ++i)
        if (order[i] == level) return static_cast<int>(i);
    throw std::logic_error("oracle: unknown level " + level);
}

/// True iff every variable of `policy` is within the user's bounds.
inline bool acceptable(const privacycoach::PolicyDraft& policy, const privacycoach::ProfileDraft& profile) {
    const privacycoach::KindSectionDraft* section = nullptr;
    for (const auto& s : profile.sections)
        if (s.kind == policy.kind) section = &s;
    if (section == nullptr) throw std::logic_error("oracle: profile lacks kind " + policy.kind);

    for (const auto& d : policy.dimensions) {
        std::string max;
        for (const auto& m : section->dimensions)
            if (m.name == d.name) max = m.max;
        if (rank(d.name, d.level) > rank(d.name, max)) return false;
    }
    for (const auto& c : policy.channels) {
        bool allowed = false;
        for (const auto& a : section->channels)
            if (a.name == c.name) allowed = a.allowed;
        if (c.used && !allowed) return false;
    }
    return true;
}

/// Every complete policy draft of `kind`, built by nested enumeration over the
/// oracle's own tables.
inline std::vector<privacycoach::PolicyDraft> enumerate_drafts(const std::string& kind, const std::string& tag) {
    const auto& dims = kind_dimensions().at(kind);
    const auto& channels = kind_channels().at(kind);
    std::vector<privacycoach::PolicyDraft> out;

    std::vector<std::size_t> odometer(dims.size(), 0);
    while (true) {
        for (unsigned mask = 0; mask < (1u << channels.size()); ++mask) {
            privacycoach::PolicyDraft d;
            d.tag = tag;
            d.kind = kind;
            for (std::size_t i = 0; i < dims.size(); ++i)
                d.dimensions.push_back({dims[i], level_orders().at(dims[i])[odometer[i]]});
            for (std::size_t i = 0; i < channels.size(); ++i)
                d.channels.push_back({channels[i], ((mask >> i) & 1u) != 0});
            out.push_back(std::move(d));
        }
        std::size_t pos = 0;
        while (pos < dims.size() && ++odometer[pos] == level_orders().at(dims[pos]).size()) odometer[pos++] = 0;
        if (pos == dims.size()) break;
    }
    return out;
}

} // namespace oracle
