#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace noticescope::detail {

inline char lower_ascii(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

inline std::string to_lower_ascii(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) out.push_back(lower_ascii(c));
    return out;
}

inline bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

// Splits on LF, tolerating CRLF. A trailing newline does not produce an
// extra empty line.
inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t start = 0;
    while (start <= text.size()) {
        size_t pos = text.find('\n', start);
        std::string_view line;
        if (pos == std::string_view::npos) {
            if (start == text.size()) break;
            line = text.substr(start);
            start = text.size() + 1;
        } else {
            line = text.substr(start, pos - start);
            start = pos + 1;
        }
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
    }
    return lines;
}

inline std::optional<int64_t> parse_int(std::string_view s) {
    s = trim(s);
    int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

inline bool ieq_ascii(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (lower_ascii(a[i]) != lower_ascii(b[i])) return false;
    return true;
}

// True when `host` equals `pattern` or ends with ".pattern" (label-suffix
// match, so "www.nu.nl" matches "nu.nl" but "menu.nl" does not).
inline bool domain_suffix_match(std::string_view host, std::string_view pattern) {
    if (pattern.empty() || host.size() < pattern.size()) return false;
    if (host == pattern) return true;
    if (!host.ends_with(pattern)) return false;
    return host[host.size() - pattern.size() - 1] == '.';
}

}  // namespace noticescope::detail
