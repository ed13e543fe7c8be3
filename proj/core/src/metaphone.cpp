// Copyright 2026 the phonkit authors
// SPDX-License-Identifier: Apache-2.0

// Metaphone (Philips 1990) as the ordered rule pipeline used by the
// talisman reference implementation. Rules run on a lowercase word;
// emitted code symbols are uppercase (or '0' for the th sound), which
// keeps later rules from re-matching earlier output.

#include "phonkit/encoders.hpp"

#include "text_util.hpp"

namespace phonkit::enc {

namespace {

bool lv(char c) {  // lowercase vowel
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool in(char c, std::string_view set) { return set.find(c) != std::string_view::npos; }

// ([bcdfhjklmnpqrstvwxyz])\1+ -> $1
std::string collapse_consonant_runs(const std::string& s) {
    static constexpr std::string_view kSet = "bcdfhjklmnpqrstvwxyz";
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += s[i];
        if (in(s[i], kSet)) {
            while (i + 1 < s.size() && s[i + 1] == s[i]) ++i;
        }
    }
    return out;
}

// t?ch|sh -> X
std::string rule_ch_sh(const std::string& s) {
    std::string out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s.compare(i, 3, "tch") == 0) {
            out += 'X';
            i += 3;
        } else if (s.compare(i, 2, "ch") == 0 || s.compare(i, 2, "sh") == 0) {
            out += 'X';
            i += 2;
        } else {
            out += s[i++];
        }
    }
    return out;
}

// s?c(?=[iey]) -> S
std::string rule_soft_c(const std::string& s) {
    std::string out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s.compare(i, 2, "sc") == 0 && i + 2 < s.size() && in(s[i + 2], "iey")) {
            out += 'S';
            i += 2;
        } else if (s[i] == 'c' && i + 1 < s.size() && in(s[i + 1], "iey")) {
            out += 'S';
            i += 1;
        } else {
            out += s[i++];
        }
    }
    return out;
}

// gn(ed)? -> N
std::string rule_gn(const std::string& s) {
    std::string out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s.compare(i, 2, "gn") == 0) {
            out += 'N';
            i += (s.compare(i + 2, 2, "ed") == 0) ? 4 : 2;
        } else {
            out += s[i++];
        }
    }
    return out;
}

// ([^g]|^)g(?=[iey]) -> $1J
std::string rule_soft_g(const std::string& s) {
    std::string out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (i == 0 && s[i] == 'g' && i + 1 < s.size() && in(s[i + 1], "iey")) {
            out += 'J';
            i += 1;
        } else if (s[i] != 'g' && i + 2 < s.size() && s[i + 1] == 'g' && in(s[i + 2], "iey")) {
            out += s[i];
            out += 'J';
            i += 2;
        } else {
            out += s[i++];
        }
    }
    return out;
}

}  // namespace

std::string metaphone(std::string_view word) {
    std::string s = detail::to_lower(word);

    s = collapse_consonant_runs(s);
    s = detail::replace_prefix(s, "ae", "E");
    if (s.size() >= 2 && in(s[0], "gkp") && s[1] == 'n') s.replace(0, 2, "N");
    s = detail::replace_prefix(s, "wr", "R");
    s = detail::replace_prefix(s, "x", "S");
    s = detail::replace_prefix(s, "wh", "W");
    s = detail::replace_suffix(s, "mb", "M");

    // (?!^)sch -> SK
    if (!s.empty()) s = s.substr(0, 1) + detail::replace_all(s.substr(1), "sch", "SK");

    s = detail::replace_all(s, "th", "0");
    s = rule_ch_sh(s);

    {  // c(?=ia) -> X
        std::string out;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == 'c' && s.compare(i + 1, 2, "ia") == 0) out += 'X';
            else out += s[i];
        }
        s = std::move(out);
    }
    {  // [st](?=i[ao]) -> X
        std::string out;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if ((s[i] == 's' || s[i] == 't') && i + 2 < s.size() && s[i + 1] == 'i' &&
                (s[i + 2] == 'a' || s[i + 2] == 'o')) {
                out += 'X';
            } else {
                out += s[i];
            }
        }
        s = std::move(out);
    }

    s = rule_soft_c(s);
    for (char& c : s) {
        if (c == 'c' || c == 'q') c = 'K';
    }
    {  // dg(?=[iey]) -> J, then d -> T
        std::string out;
        std::size_t i = 0;
        while (i < s.size()) {
            if (s.compare(i, 2, "dg") == 0 && i + 2 < s.size() && in(s[i + 2], "iey")) {
                out += 'J';
                i += 2;
            } else {
                out += s[i++];
            }
        }
        s = std::move(out);
        for (char& c : s) {
            if (c == 'd') c = 'T';
        }
    }
    {  // g(?=h[^aeiou]) -> removed
        std::string out;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == 'g' && i + 2 < s.size() && s[i + 1] == 'h' && !lv(s[i + 2])) continue;
            out += s[i];
        }
        s = std::move(out);
    }
    s = rule_gn(s);
    s = rule_soft_g(s);
    {  // g+ -> K
        std::string out;
        std::size_t i = 0;
        while (i < s.size()) {
            if (s[i] == 'g') {
                out += 'K';
                while (i < s.size() && s[i] == 'g') ++i;
            } else {
                out += s[i++];
            }
        }
        s = std::move(out);
    }
    s = detail::replace_all(s, "ph", "F");
    {  // ([aeiou])h(?=\b|[^aeiou]) -> $1
        std::string out;
        std::size_t i = 0;
        while (i < s.size()) {
            if (lv(s[i]) && i + 1 < s.size() && s[i + 1] == 'h' &&
                (i + 2 == s.size() || !lv(s[i + 2]))) {
                out += s[i];
                i += 2;
            } else {
                out += s[i++];
            }
        }
        s = std::move(out);
    }
    {  // [wy](?![aeiou]) -> removed
        std::string out;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if ((s[i] == 'w' || s[i] == 'y') && (i + 1 == s.size() || !lv(s[i + 1]))) continue;
            out += s[i];
        }
        s = std::move(out);
    }
    for (char& c : s) {
        if (c == 'z') c = 'S';
        if (c == 'v') c = 'F';
    }
    {  // (?!^)[aeiou]+ -> removed
        std::string out;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i > 0 && lv(s[i])) continue;
            out += s[i];
        }
        s = std::move(out);
    }
    return detail::to_upper(s);
}

}  // namespace phonkit::enc
