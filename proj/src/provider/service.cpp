#include "privacycoach/provider/service.hpp"

#include "privacycoach/xml_codec.hpp"

#include <httplib.h>

#include <ctime>

namespace privacycoach::provider {

namespace {

constexpr const char* kXmlType = "application/xml";
constexpr std::string_view kDecl = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";

std::string error_body(std::string_view code, std::string_view attributes = {}) {
    std::string out(kDecl);
    out += "<error code=\"";
    out += code;
    out += '"';
    out += attributes;
    out += "/>\n";
    return out;
}

std::string attr(std::string_view key, std::string_view value) {
    return " " + std::string(key) + "=\"" + escape_xml_attribute(value) + "\"";
}

void allow_cross_origin(httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
}

} // namespace

// ── AccessLog ───────────────────────────────────────────────────────────────

std::string AccessLog::format_line(std::chrono::system_clock::time_point when, std::string_view method,
                                   std::string_view tag, int status) {
    const std::time_t t = std::chrono::system_clock::to_time_t(when);
    std::tm utc{};
    gmtime_r(&t, &utc);
    char stamp[32];
    std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);

    std::string line(stamp);
    line += ' ';
    line += method;
    line += ' ';
    line += tag.empty() ? "-" : tag;
    line += ' ';
    line += std::to_string(status);
    return line;
}

void AccessLog::record(std::string_view method, std::string_view tag, int status) {
    const auto line = format_line(std::chrono::system_clock::now(), method, tag, status);
    std::lock_guard lock(mutex_);
    *sink_ << line << '\n';
    sink_->flush();
}

std::string normalize_base_path(std::string_view base) {
    std::string out(base);
    while (!out.empty() && out.back() == '/') out.pop_back();
    if (!out.empty() && out.front() != '/') out.insert(out.begin(), '/');
    return out;
}

// ── ProviderService ─────────────────────────────────────────────────────────

struct ProviderService::Impl {
    PolicyRegistry& registry;
    std::string base;
    AccessLog* log;
    httplib::Server server;
    bool bound = false;

    Impl(PolicyRegistry& r, std::string b, AccessLog* l) : registry(r), base(normalize_base_path(b)), log(l) {}

    // Tag id field for the access log: canonical id or "-".
    std::string logged_tag(const std::string& path) const {
        const std::string prefix = base + "/tagpolicy/";
        if (path.compare(0, prefix.size(), prefix) != 0) return "-";
        const auto segment = path.substr(prefix.size());
        if (TagId::check(segment)) return "-";
        return TagId::parse(segment).str();
    }

    void get_policy(const httplib::Request& req, httplib::Response& res) {
        allow_cross_origin(res);
        const auto& raw = req.path_params.at("tag");
        const auto outcome = registry.get_policy(raw);
        if (const auto* found = std::get_if<Found>(&outcome)) {
            res.status = 200;
            res.set_content(found->document, kXmlType);
        } else if (std::holds_alternative<UnknownTag>(outcome)) {
            res.status = 404;
            res.set_content(error_body("unknown-tag", attr("tag", TagId::parse(raw).str())), kXmlType);
        } else {
            invalid_tag(res, raw, std::get<InvalidTagIdOutcome>(outcome).reason);
        }
    }

    void put_policy(const httplib::Request& req, httplib::Response& res) {
        const auto& raw = req.path_params.at("tag");
        if (auto error = TagId::check(raw)) return invalid_tag(res, raw, *error);
        const auto tag = TagId::parse(raw);

        try {
            const auto draft = policy_draft_from_xml(req.body);
            auto report = validate_policy(draft);
            if (!report.valid()) throw ValidationError(std::move(report));
            const auto policy = PrivacyPolicy::from_draft(draft);
            if (policy.tag() != tag) {
                res.status = 400;
                res.set_content(error_body("tag-mismatch", attr("tag", tag.str()) + attr("declared", policy.tag().str())),
                                kXmlType);
                return;
            }
            const auto outcome = registry.register_policy(tag, policy);
            res.status = outcome == RegisterOutcome::created ? 201 : 200;
            res.set_content(policy_to_xml(policy), kXmlType);
        } catch (const ValidationError& e) {
            res.status = 400;
            res.set_content(validation_report_to_xml(e.report()), kXmlType);
        } catch (const StorageError&) {
            res.status = 500;
            res.set_content(error_body("storage-failure", attr("tag", tag.str())), kXmlType);
        }
    }

    void delete_policy(const httplib::Request& req, httplib::Response& res) {
        const auto& raw = req.path_params.at("tag");
        if (auto error = TagId::check(raw)) return invalid_tag(res, raw, *error);
        const auto tag = TagId::parse(raw);
        try {
            if (registry.delete_policy(tag) == DeleteOutcome::deleted) {
                res.status = 204;
            } else {
                res.status = 404;
                res.set_content(error_body("unknown-tag", attr("tag", tag.str())), kXmlType);
            }
        } catch (const StorageError&) {
            res.status = 500;
            res.set_content(error_body("storage-failure", attr("tag", tag.str())), kXmlType);
        }
    }

    void list_tags(const httplib::Request&, httplib::Response& res) {
        allow_cross_origin(res);
        std::string body(kDecl);
        body += "<tags>\n";
        for (const auto& tag : registry.list_tags()) body += "  <tag id=\"" + tag.str() + "\"/>\n";
        body += "</tags>\n";
        res.status = 200;
        res.set_content(body, kXmlType);
    }

    static void invalid_tag(httplib::Response& res, const std::string& raw, TagIdError reason) {
        res.status = 400;
        res.set_content(error_body("invalid-tag-id", attr("tag", raw) + attr("reason", to_string(reason))), kXmlType);
    }
};

ProviderService::ProviderService(PolicyRegistry& registry, std::string base_path, AccessLog* log)
    : impl_(std::make_unique<Impl>(registry, std::move(base_path), log)) {
    auto& s = impl_->server;
    auto* impl = impl_.get();
    const auto policy_route = impl->base + "/tagpolicy/:tag";

    s.set_payload_max_length(64 * 1024);
    s.Get(policy_route, [impl](const httplib::Request& req, httplib::Response& res) { impl->get_policy(req, res); });
    s.Put(policy_route, [impl](const httplib::Request& req, httplib::Response& res) { impl->put_policy(req, res); });
    s.Delete(policy_route,
             [impl](const httplib::Request& req, httplib::Response& res) { impl->delete_policy(req, res); });
    s.Get(impl->base + "/tags",
          [impl](const httplib::Request& req, httplib::Response& res) { impl->list_tags(req, res); });

    s.set_logger([impl](const httplib::Request& req, const httplib::Response& res) {
        if (impl->log) impl->log->record(req.method, impl->logged_tag(req.path), res.status);
    });
}

ProviderService::~ProviderService() { stop(); }

int ProviderService::bind(const std::string& host, int port) {
    int bound = -1;
    if (port == 0) {
        bound = impl_->server.bind_to_any_port(host);
    } else if (impl_->server.bind_to_port(host, port)) {
        bound = port;
    }
    if (bound <= 0) throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
    impl_->bound = true;
    return bound;
}

void ProviderService::serve() {
    if (!impl_->bound) throw std::logic_error("ProviderService::serve() called before bind()");
    impl_->server.listen_after_bind();
}

void ProviderService::stop() {
    if (impl_) impl_->server.stop();
}

void ProviderService::wait_until_ready() const { impl_->server.wait_until_ready(); }

const std::string& ProviderService::base_path() const noexcept { return impl_->base; }

} // namespace privacycoach::provider
