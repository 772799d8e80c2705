#pragma once

#include <cstdint>
#include <cstdio>
#include <ctime>
#include <optional>
#include <string>
#include <string_view>

namespace noticescope::detail {

// "2019-01-07T12:34:56Z" from unix seconds.
inline std::string format_rfc3339(int64_t unix_seconds) {
    std::time_t t = static_cast<std::time_t>(unix_seconds);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buf;
}

inline std::optional<int64_t> parse_rfc3339(std::string_view s) {
    std::tm tm{};
    int n = 0;
    std::string str(s);
    if (std::sscanf(str.c_str(), "%4d-%2d-%2dT%2d:%2d:%2d%n", &tm.tm_year, &tm.tm_mon,
                    &tm.tm_mday, &tm.tm_hour, &tm.tm_min, &tm.tm_sec, &n) != 6)
        return std::nullopt;
    std::string_view rest = s.substr(static_cast<size_t>(n));
    if (rest != "Z" && rest != "z" && rest != "+00:00") return std::nullopt;
    tm.tm_year -= 1900;
    tm.tm_mon -= 1;
    return static_cast<int64_t>(timegm(&tm));
}

// Cookie Expires dates: RFC 1123, the legacy RFC 850 form, and asctime.
inline std::optional<int64_t> parse_http_date(std::string_view s) {
    static const char* kFormats[] = {
        "%a, %d %b %Y %H:%M:%S",  // Sun, 06 Nov 1994 08:49:37 GMT
        "%A, %d-%b-%y %H:%M:%S",  // Sunday, 06-Nov-94 08:49:37 GMT
        "%a, %d-%b-%Y %H:%M:%S",  // Sun, 06-Nov-1994 08:49:37 GMT
        "%a %b %d %H:%M:%S %Y",   // Sun Nov  6 08:49:37 1994
    };
    std::string str(s);
    for (const char* fmt : kFormats) {
        std::tm tm{};
        if (strptime(str.c_str(), fmt, &tm) != nullptr)
            return static_cast<int64_t>(timegm(&tm));
    }
    return std::nullopt;
}

}  // namespace noticescope::detail
