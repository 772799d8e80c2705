#pragma once

// Per-page banner metrics: consolidates multiple selector matches into one
// measurement row, counts words and links/buttons, detects the notice
// language and counts third-party persistent cookies.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "noticescope/detail/stopwords_data.hpp"
#include "noticescope/detail/textscan.hpp"
#include "noticescope/public_suffix.hpp"
#include "noticescope/query.hpp"
#include "noticescope/records.hpp"

namespace noticescope::noticemetrics {

// Visible text of an HTML fragment: tags stripped via a real parse, the
// five XML entities and numeric references decoded, adjacent text nodes
// joined with single spaces.
inline std::string text_of_html(std::string_view fragment) {
    auto doc = domquery::parse_html(fragment);
    return domquery::text_content(doc, doc.root());
}

// Number of maximal non-whitespace runs (NBSP counts as whitespace).
inline int count_words(std::string_view text) {
    return detail::count_word_runs(text);
}

// Links and buttons inside a banner subtree: anchors with an href, button
// elements, submit/button inputs, and anything with role="button". An
// element matching several of those counts once.
inline int count_links(std::string_view fragment) {
    auto doc = domquery::parse_html(fragment);
    int count = 0;
    for (domquery::NodeId id : doc.elements()) {
        const domquery::Node& n = doc.node(id);
        bool countable = false;
        if (n.tag == "a" && n.attr("href")) countable = true;
        if (n.tag == "button") countable = true;
        if (n.tag == "input") {
            const std::string* type = n.attr("type");
            if (type) {
                std::string t = detail::to_lower_ascii(*type);
                if (t == "submit" || t == "button") countable = true;
            }
        }
        if (const std::string* role = n.attr("role");
            role && detail::to_lower_ascii(*role) == "button")
            countable = true;
        if (countable) ++count;
    }
    return count;
}

// Stopword-frequency language detection over the bundled sets. Returns
// "und" for text under 3 words or when fewer than 2 stopwords hit; ties
// break to the lexicographically smallest code.
inline std::string detect_language(std::string_view text) {
    if (count_words(text) < 3) return "und";
    std::vector<std::string> tokens = detail::word_tokens(text);
    std::string best = "und";
    size_t best_hits = 0;
    for (const auto& [code, words] : detail::stopword_sets()) {
        size_t hits = 0;
        for (const auto& token : tokens)
            if (words.contains(token)) ++hits;
        if (hits > best_hits || (hits == best_hits && hits > 0 && code < best)) {
            best = std::string(code);
            best_hits = hits;
        }
    }
    return best_hits < 2 ? "und" : best;
}

struct ConsolidatedBanner {
    std::optional<int> height_px;   // max over known heights
    std::optional<int> word_count;  // from the longest-text match
    std::optional<int> link_count;  // same match as word_count
    std::string inner_text;         // of that match, for language detection
    int match_count = 0;
};

// Applies the multi-match rule: tallest element gives the height, the
// element with the longest text gives words/links/text. Deterministic
// under permutation of the input (ties break on the text bytes, then the
// raw fragment bytes).
inline ConsolidatedBanner consolidate(const std::vector<domquery::BannerMatch>& matches) {
    ConsolidatedBanner out;
    out.match_count = static_cast<int>(matches.size());
    if (matches.empty()) return out;

    const domquery::BannerMatch* longest = nullptr;
    std::string longest_text;
    for (const auto& m : matches) {
        if (m.height_px && (!out.height_px || *m.height_px > *out.height_px))
            out.height_px = m.height_px;
        std::string text = text_of_html(m.inner_html);
        bool take = false;
        if (!longest) {
            take = true;
        } else if (text.size() != longest_text.size()) {
            take = text.size() > longest_text.size();
        } else if (text != longest_text) {
            take = text < longest_text;
        } else {
            take = m.inner_html < longest->inner_html;
        }
        if (take) {
            longest = &m;
            longest_text = std::move(text);
        }
    }
    out.word_count = count_words(longest_text);
    out.link_count = count_links(longest->inner_html);
    out.inner_text = std::move(longest_text);
    return out;
}

// Cookies that are persistent at fetch time and whose registrable domain
// differs from the site's.
inline int count_third_party_persistent(const std::vector<harvest::CookieRecord>& cookies,
                                        std::string_view site_domain,
                                        int64_t fetch_time) {
    std::string site_reg = registrable_domain(detail::to_lower_ascii(site_domain));
    int count = 0;
    for (const auto& c : cookies) {
        if (!c.persistent_at(fetch_time)) continue;
        std::string_view dom = c.cookie_domain;
        while (!dom.empty() && dom.front() == '.') dom.remove_prefix(1);
        if (registrable_domain(detail::to_lower_ascii(dom)) != site_reg) ++count;
    }
    return count;
}

// Assembles the per-(site, vantage) measurement row.
inline BannerObservation build_observation(const harvest::SiteEntry& site,
                                           const harvest::VantagePoint& vantage,
                                           const std::vector<domquery::BannerMatch>& matches,
                                           const std::vector<harvest::CookieRecord>& cookies,
                                           int64_t fetch_time) {
    BannerObservation o;
    o.site_domain = site.domain;
    o.tld = site.tld;
    o.vantage_label = vantage.label;
    o.vpn_eu = vantage.eu_member;
    ConsolidatedBanner c = consolidate(matches);
    o.match_count = c.match_count;
    o.banner_exists = c.match_count >= 1;
    if (o.banner_exists) {
        o.height_px = c.height_px;
        o.word_count = c.word_count;
        o.link_count = c.link_count;
        o.language = detect_language(c.inner_text);
    }
    o.third_party_persistent_cookies =
        count_third_party_persistent(cookies, site.domain, fetch_time);
    return o;
}

}  // namespace noticescope::noticemetrics
