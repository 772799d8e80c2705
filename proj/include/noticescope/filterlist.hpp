#pragma once

// Cosmetic filter list support: parses crowd-sourced selector lists of the
// content-blocker variety (`##` hide rules, `domain##sel` scoped hides,
// `domain#@#sel` exceptions, `!` comments, `~domain` negation) and resolves
// which selectors apply to a given hostname.
//
// Only the element-hiding subset is handled. Network rules, scriptlets,
// procedural/extended selectors and snippet filters are counted as skipped.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "noticescope/detail/strings.hpp"

namespace noticescope::filterlist {

enum class RuleKind { Hide, Exception };

struct DomainPattern {
    std::string domain;  // lowercase, no leading "~"
    bool negated = false;

    friend bool operator==(const DomainPattern&, const DomainPattern&) = default;
};

struct FilterRule {
    RuleKind kind = RuleKind::Hide;
    // Empty means generic (applies on every domain); otherwise the rule is
    // domain-scoped and carries at least one pattern.
    std::vector<DomainPattern> domains;
    std::string selector_text;  // never empty

    bool generic() const { return domains.empty(); }

    // True when this rule is active on `domain` (lowercase hostname).
    // A scoped rule applies if some positive pattern is a label-suffix of
    // the domain (or the rule has only negated patterns), and no negated
    // pattern matches.
    bool applies_to(std::string_view domain) const {
        if (domains.empty()) return true;
        bool has_positive = false;
        bool positive_hit = false;
        for (const auto& p : domains) {
            bool hit = detail::domain_suffix_match(domain, p.domain);
            if (p.negated) {
                if (hit) return false;
            } else {
                has_positive = true;
                positive_hit |= hit;
            }
        }
        return !has_positive || positive_hit;
    }

    // Canonical list-syntax form; parse_rule(to_line()) reproduces the rule.
    std::string to_line() const {
        std::string out;
        for (size_t i = 0; i < domains.size(); ++i) {
            if (i) out.push_back(',');
            if (domains[i].negated) out.push_back('~');
            out += domains[i].domain;
        }
        out += kind == RuleKind::Exception ? "#@#" : "##";
        out += selector_text;
        return out;
    }

    friend bool operator==(const FilterRule&, const FilterRule&) = default;
};

// Result of classifying one input line.
struct ParsedLine {
    enum class Type { Rule, Comment, Skipped, Malformed };
    Type type;
    std::optional<FilterRule> rule;  // set iff type == Rule
    std::string reason;              // machine-readable, set for Skipped/Malformed
};

struct ListStats {
    size_t parsed = 0;
    size_t skipped = 0;
    size_t malformed = 0;
    size_t comments = 0;  // includes blank lines

    size_t total() const { return parsed + skipped + malformed + comments; }
    friend bool operator==(const ListStats&, const ListStats&) = default;
};

struct RuleSet {
    std::vector<FilterRule> rules;  // input order
    ListStats stats;
    std::string source_version;  // from a "! Version:" comment when present
    // Skip/malformed reasons seen, with counts (diagnostic).
    std::unordered_map<std::string, size_t> skip_reasons;
};

namespace impl {

inline ParsedLine skip(std::string reason) {
    return {ParsedLine::Type::Skipped, std::nullopt, std::move(reason)};
}

inline ParsedLine malformed(std::string reason) {
    return {ParsedLine::Type::Malformed, std::nullopt, std::move(reason)};
}

// Parses "a.com,~b.a.com" into patterns. Returns false on an empty or
// all-empty list.
inline bool parse_domains(std::string_view part, std::vector<DomainPattern>& out,
                          std::string& why) {
    for (auto item : detail::split(part, ',')) {
        item = detail::trim(item);
        if (item.empty()) continue;
        DomainPattern p;
        if (item.front() == '~') {
            p.negated = true;
            item.remove_prefix(1);
            item = detail::trim(item);
        }
        if (item.empty()) {
            why = "empty_domain_pattern";
            return false;
        }
        if (item.find('*') != std::string_view::npos) {
            why = "entity_wildcard_domain";
            return false;
        }
        p.domain = detail::to_lower_ascii(item);
        out.push_back(std::move(p));
    }
    if (out.empty()) {
        why = "empty_domain_list";
        return false;
    }
    return true;
}

}  // namespace impl

// Classifies a single line (no trailing newline). Never throws: anything
// outside the supported cosmetic subset becomes Skipped or Malformed.
inline ParsedLine parse_rule(std::string_view line) {
    std::string_view s = detail::trim(line);
    if (s.empty() || s.front() == '!')
        return {ParsedLine::Type::Comment, std::nullopt, {}};
    // "[Adblock Plus 2.0]"-style header lines.
    if (s.front() == '[' && s.back() == ']')
        return {ParsedLine::Type::Comment, std::nullopt, {}};

    // Locate the earliest cosmetic separator. "#@#" must win over the "##"
    // hiding inside it, so compare start positions of all candidates.
    struct Sep { std::string_view text; const char* klass; };
    static constexpr Sep kSeps[] = {
        {"#@#", "exception"}, {"#?#", "extended_css"}, {"#$#", "snippet_or_style"},
        {"#%#", "javascript_rule"}, {"##", "hide"},
    };
    size_t best_pos = std::string_view::npos;
    const Sep* best = nullptr;
    for (const auto& sep : kSeps) {
        size_t pos = s.find(sep.text);
        if (pos < best_pos) {
            best_pos = pos;
            best = &sep;
        }
    }
    if (!best) return impl::skip("network_or_other_rule");

    std::string_view klass = best->klass;
    if (klass == "extended_css" || klass == "snippet_or_style" || klass == "javascript_rule")
        return impl::skip(std::string(klass));

    std::string_view domain_part = s.substr(0, best_pos);
    std::string_view selector = s.substr(best_pos + best->text.size());
    if (selector.empty()) return impl::malformed("empty_selector");
    if (selector.starts_with("+js(")) return impl::skip("scriptlet_injection");
    if (selector.starts_with("^")) return impl::skip("html_filter");

    FilterRule rule;
    rule.kind = klass == "exception" ? RuleKind::Exception : RuleKind::Hide;
    rule.selector_text = std::string(selector);
    if (!domain_part.empty()) {
        std::string why;
        if (!impl::parse_domains(domain_part, rule.domains, why))
            return impl::malformed(why);
    }
    return {ParsedLine::Type::Rule, std::move(rule), {}};
}

// Parses a whole list. Rule order equals input order; stats partition the
// input lines exactly (parsed + skipped + malformed + comments == lines).
inline RuleSet load_list(std::string_view text) {
    RuleSet set;
    for (auto line : detail::split_lines(text)) {
        ParsedLine parsed = parse_rule(line);
        switch (parsed.type) {
            case ParsedLine::Type::Rule:
                set.stats.parsed++;
                set.rules.push_back(std::move(*parsed.rule));
                break;
            case ParsedLine::Type::Comment: {
                set.stats.comments++;
                auto t = detail::trim(line);
                constexpr std::string_view kVersion = "! Version:";
                if (set.source_version.empty() && t.size() > kVersion.size() &&
                    detail::ieq_ascii(t.substr(0, kVersion.size()), kVersion)) {
                    set.source_version = std::string(detail::trim(t.substr(kVersion.size())));
                }
                break;
            }
            case ParsedLine::Type::Skipped:
                set.stats.skipped++;
                set.skip_reasons[parsed.reason]++;
                break;
            case ParsedLine::Type::Malformed:
                set.stats.malformed++;
                set.skip_reasons[parsed.reason]++;
                break;
        }
    }
    return set;
}

// Selectors that should be hidden on `domain` (lowercase hostname, no
// scheme or port): generic plus matching domain-scoped hide selectors, in
// rule order, minus those cancelled by a matching exception with identical
// selector text. Duplicates keep their first occurrence.
inline std::vector<std::string> rules_for_domain(const RuleSet& set,
                                                 std::string_view domain) {
    std::unordered_set<std::string_view> cancelled;
    for (const auto& rule : set.rules)
        if (rule.kind == RuleKind::Exception && rule.applies_to(domain))
            cancelled.insert(rule.selector_text);

    std::vector<std::string> out;
    std::unordered_set<std::string_view> seen;
    for (const auto& rule : set.rules) {
        if (rule.kind != RuleKind::Hide) continue;
        if (cancelled.contains(rule.selector_text)) continue;
        if (!rule.applies_to(domain)) continue;
        if (seen.insert(rule.selector_text).second)
            out.push_back(rule.selector_text);
    }
    return out;
}

}  // namespace noticescope::filterlist
