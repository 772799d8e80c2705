#pragma once

// Measurement record types shared between the crawler, the metrics stage
// and the reporting stage, with their JSONL (de)serialization. Field names
// in the JSON objects mirror the struct members; timestamps are RFC 3339
// UTC strings.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "noticescope/detail/time_util.hpp"

namespace noticescope::harvest {

struct SiteEntry {
    std::string domain;  // lowercase hostname
    std::string tld;     // list label, e.g. "nl" ("com" for the US list)
    int rank = 0;        // 1-based within its list

    friend bool operator==(const SiteEntry&, const SiteEntry&) = default;
};

struct VantagePoint {
    std::string label;  // ISO country code, e.g. "NL"
    std::string proxy_url;  // empty = direct fetch
    std::string accept_language;
    bool eu_member = false;

    friend bool operator==(const VantagePoint&, const VantagePoint&) = default;
};

struct CookieRecord {
    std::string name;
    std::string cookie_domain;  // no leading dot
    std::string path;
    std::optional<int64_t> expires;  // unix seconds; persistent iff set and in the future
    std::string set_by_url;

    bool persistent_at(int64_t fetch_time) const {
        return expires.has_value() && *expires > fetch_time;
    }

    friend bool operator==(const CookieRecord&, const CookieRecord&) = default;
};

enum class FailureKind {
    DnsFailure,
    ConnectFailure,
    TlsFailure,
    HttpError,
    Timeout,
    EmptyBody,
    InternalCrash,
};

inline std::string to_string(FailureKind k) {
    switch (k) {
        case FailureKind::DnsFailure: return "dns_failure";
        case FailureKind::ConnectFailure: return "connect_failure";
        case FailureKind::TlsFailure: return "tls_failure";
        case FailureKind::HttpError: return "http_error";
        case FailureKind::Timeout: return "timeout";
        case FailureKind::EmptyBody: return "empty_body";
        case FailureKind::InternalCrash: return "internal_crash";
    }
    return "internal_crash";
}

inline std::optional<FailureKind> failure_kind_from_string(std::string_view s) {
    if (s == "dns_failure") return FailureKind::DnsFailure;
    if (s == "connect_failure") return FailureKind::ConnectFailure;
    if (s == "tls_failure") return FailureKind::TlsFailure;
    if (s == "http_error") return FailureKind::HttpError;
    if (s == "timeout") return FailureKind::Timeout;
    if (s == "empty_body") return FailureKind::EmptyBody;
    if (s == "internal_crash") return FailureKind::InternalCrash;
    return std::nullopt;
}

struct PageSnapshot {
    SiteEntry site;
    std::string vantage;
    int64_t fetch_time = 0;
    std::string final_url;
    std::vector<std::string> redirect_chain;  // [0] is the requested URL
    int http_status = 0;
    std::string body;  // capped at the configured byte limit
    bool body_truncated = false;
    std::vector<CookieRecord> cookies;
};

struct Failure {
    FailureKind kind = FailureKind::InternalCrash;
    int status = 0;  // HttpError only, in [400, 599]
    std::string detail;
};

struct CrawlOutcome {
    SiteEntry site;
    std::string vantage;
    std::optional<PageSnapshot> snapshot;  // set on success
    std::optional<Failure> failure;        // set otherwise

    bool success() const { return snapshot.has_value(); }
};

inline void to_json(nlohmann::json& j, const SiteEntry& s) {
    j = {{"domain", s.domain}, {"tld", s.tld}, {"rank", s.rank}};
}

inline void from_json(const nlohmann::json& j, SiteEntry& s) {
    j.at("domain").get_to(s.domain);
    j.at("tld").get_to(s.tld);
    j.at("rank").get_to(s.rank);
}

inline void to_json(nlohmann::json& j, const CookieRecord& c) {
    j = {{"name", c.name},
         {"cookie_domain", c.cookie_domain},
         {"path", c.path},
         {"expires", c.expires ? nlohmann::json(detail::format_rfc3339(*c.expires))
                               : nlohmann::json(nullptr)},
         {"set_by_url", c.set_by_url}};
}

inline void from_json(const nlohmann::json& j, CookieRecord& c) {
    j.at("name").get_to(c.name);
    j.at("cookie_domain").get_to(c.cookie_domain);
    j.at("path").get_to(c.path);
    j.at("set_by_url").get_to(c.set_by_url);
    if (j.at("expires").is_null())
        c.expires = std::nullopt;
    else
        c.expires = detail::parse_rfc3339(j.at("expires").get<std::string>());
}

}  // namespace noticescope::harvest

namespace noticescope::noticemetrics {

// One measurement row per (site, vantage) pair.
struct BannerObservation {
    std::string site_domain;
    std::string tld;
    std::string vantage_label;
    bool vpn_eu = false;
    bool banner_exists = false;
    std::optional<int> height_px;
    std::optional<int> word_count;
    std::optional<int> link_count;
    std::string language = "und";  // ISO 639-1 or "und"
    int third_party_persistent_cookies = 0;
    int match_count = 0;

    friend bool operator==(const BannerObservation&, const BannerObservation&) = default;
};

inline void to_json(nlohmann::json& j, const BannerObservation& o) {
    auto opt = [](const std::optional<int>& v) {
        return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
    };
    j = {{"site_domain", o.site_domain},
         {"tld", o.tld},
         {"vantage_label", o.vantage_label},
         {"vpn_eu", o.vpn_eu},
         {"banner_exists", o.banner_exists},
         {"height_px", opt(o.height_px)},
         {"word_count", opt(o.word_count)},
         {"link_count", opt(o.link_count)},
         {"language", o.language},
         {"third_party_persistent_cookies", o.third_party_persistent_cookies},
         {"match_count", o.match_count}};
}

inline void from_json(const nlohmann::json& j, BannerObservation& o) {
    auto opt = [&](const char* key) -> std::optional<int> {
        if (j.at(key).is_null()) return std::nullopt;
        return j.at(key).get<int>();
    };
    j.at("site_domain").get_to(o.site_domain);
    j.at("tld").get_to(o.tld);
    j.at("vantage_label").get_to(o.vantage_label);
    j.at("vpn_eu").get_to(o.vpn_eu);
    j.at("banner_exists").get_to(o.banner_exists);
    o.height_px = opt("height_px");
    o.word_count = opt("word_count");
    o.link_count = opt("link_count");
    j.at("language").get_to(o.language);
    j.at("third_party_persistent_cookies").get_to(o.third_party_persistent_cookies);
    j.at("match_count").get_to(o.match_count);
}

}  // namespace noticescope::noticemetrics
