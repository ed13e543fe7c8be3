// Copyright 2026 the phonkit authors
// SPDX-License-Identifier: Apache-2.0

#include "text_util.hpp"

#include <cctype>

namespace phonkit::detail {

bool is_vowel(char c) {
    switch (c) {
        case 'a': case 'e': case 'i': case 'o': case 'u':
        case 'A': case 'E': case 'I': case 'O': case 'U':
            return true;
        default:
            return false;
    }
}

bool is_ascii_letter(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

std::string to_upper(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return out;
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string squeeze(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (out.empty() || out.back() != c) out += c;
    }
    return out;
}

std::string replace_all(std::string_view s, std::string_view from, std::string_view to) {
    if (from.empty()) return std::string(s);
    std::string out;
    out.reserve(s.size());
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s.compare(pos, from.size(), from) == 0) {
            out += to;
            pos += from.size();
        } else {
            out += s[pos++];
        }
    }
    return out;
}

std::string replace_prefix(std::string_view s, std::string_view from, std::string_view to) {
    if (s.substr(0, from.size()) == from) {
        std::string out(to);
        out += s.substr(from.size());
        return out;
    }
    return std::string(s);
}

std::string replace_suffix(std::string_view s, std::string_view from, std::string_view to) {
    if (s.size() >= from.size() && s.substr(s.size() - from.size()) == from) {
        std::string out(s.substr(0, s.size() - from.size()));
        out += to;
        return out;
    }
    return std::string(s);
}

}  // namespace phonkit::detail
