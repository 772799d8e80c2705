#pragma once

// Codepoint-level helpers for banner text: UTF-8 iteration, lowercasing
// for the Latin and Greek ranges the measured languages use, whitespace
// and token handling. Invalid UTF-8 bytes are treated as Latin-1.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace noticescope::detail {

struct Codepoint {
    uint32_t value;
    uint8_t length;  // bytes consumed
};

inline Codepoint decode_utf8(std::string_view s, size_t i) {
    unsigned char c0 = static_cast<unsigned char>(s[i]);
    if (c0 < 0x80) return {c0, 1};
    auto cont = [&](size_t k) {
        return i + k < s.size() &&
               (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
    };
    auto byte = [&](size_t k) { return static_cast<uint32_t>(static_cast<unsigned char>(s[i + k]) & 0x3F); };
    if ((c0 & 0xE0) == 0xC0 && cont(1)) return {((c0 & 0x1Fu) << 6) | byte(1), 2};
    if ((c0 & 0xF0) == 0xE0 && cont(1) && cont(2))
        return {((c0 & 0x0Fu) << 12) | (byte(1) << 6) | byte(2), 3};
    if ((c0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3))
        return {((c0 & 0x07u) << 18) | (byte(1) << 12) | (byte(2) << 6) | byte(3), 4};
    return {c0, 1};  // stray byte: Latin-1 fallback
}

inline void encode_utf8(uint32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// ASCII whitespace plus NBSP; NBSP shows up constantly in banner markup.
inline bool is_word_space(uint32_t cp) {
    return cp == ' ' || cp == '\t' || cp == '\n' || cp == '\r' || cp == '\f' ||
           cp == '\v' || cp == 0xA0;
}

// Lowercase for ASCII, Latin-1 Supplement, Latin Extended-A and Greek.
inline uint32_t lower_codepoint(uint32_t cp) {
    if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
    if (cp >= 0x100 && cp <= 0x177 && (cp & 1) == 0) return cp + 1;
    if (cp == 0x178) return 0xFF;
    if (cp == 0x179 || cp == 0x17B || cp == 0x17D) return cp + 1;
    switch (cp) {  // accented Greek capitals
        case 0x386: return 0x3AC;
        case 0x388: return 0x3AD;
        case 0x389: return 0x3AE;
        case 0x38A: return 0x3AF;
        case 0x38C: return 0x3CC;
        case 0x38E: return 0x3CD;
        case 0x38F: return 0x3CE;
        case 0x3AA: return 0x3CA;
        case 0x3AB: return 0x3CB;
        default: break;
    }
    if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;
    return cp;
}

inline std::string lower_utf8(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (size_t i = 0; i < s.size();) {
        Codepoint cp = decode_utf8(s, i);
        encode_utf8(lower_codepoint(cp.value), out);
        i += cp.length;
    }
    return out;
}

inline bool is_token_punct(uint32_t cp) {
    if (cp < 0x80) {
        return (cp >= '!' && cp <= '/') || (cp >= ':' && cp <= '@') ||
               (cp >= '[' && cp <= '`') || (cp >= '{' && cp <= '~');
    }
    switch (cp) {
        case 0xA1: case 0xAB: case 0xB7: case 0xBB: case 0xBF:     // ¡ « · » ¿
        case 0x2013: case 0x2014: case 0x2018: case 0x2019:        // – — ‘ ’
        case 0x201C: case 0x201D: case 0x201E: case 0x2026:        // “ ” „ …
        case 0x384: case 0x387:                                    // ΄ ·
            return true;
        default: return false;
    }
}

// Maximal non-whitespace runs.
inline int count_word_runs(std::string_view text) {
    int words = 0;
    bool in_word = false;
    for (size_t i = 0; i < text.size();) {
        Codepoint cp = decode_utf8(text, i);
        bool space = is_word_space(cp.value);
        if (!space && !in_word) ++words;
        in_word = !space;
        i += cp.length;
    }
    return words;
}

// Whitespace-split tokens, lowercased, with leading/trailing punctuation
// stripped. Tokens that were pure punctuation disappear.
inline std::vector<std::string> word_tokens(std::string_view text) {
    std::vector<std::string> out;
    std::vector<uint32_t> current;
    auto flush = [&] {
        size_t a = 0;
        size_t b = current.size();
        while (a < b && is_token_punct(current[a])) ++a;
        while (b > a && is_token_punct(current[b - 1])) --b;
        if (a < b) {
            std::string token;
            for (size_t k = a; k < b; ++k) encode_utf8(lower_codepoint(current[k]), token);
            out.push_back(std::move(token));
        }
        current.clear();
    };
    for (size_t i = 0; i < text.size();) {
        Codepoint cp = decode_utf8(text, i);
        if (is_word_space(cp.value)) {
            if (!current.empty()) flush();
        } else {
            current.push_back(cp.value);
        }
        i += cp.length;
    }
    if (!current.empty()) flush();
    return out;
}

}  // namespace noticescope::detail
