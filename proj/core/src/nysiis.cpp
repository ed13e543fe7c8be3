// Copyright 2026 the phonkit authors
// SPDX-License-Identifier: Apache-2.0

// NYSIIS in two flavors. The original follows the talisman reference
// pipeline (with the published 6-character truncation applied on top);
// the revised variant extends it with the refinement rules commonly
// attributed to the USDA report (trailing S/Z removal, EX/IX endings,
// cross-boundary H handling) without any length cap.

#include "phonkit/encoders.hpp"

#include <cstddef>

#include "text_util.hpp"

namespace phonkit::enc {

namespace {

using detail::squeeze;

bool is_upper_vowel(char c) {
    return c == 'A' || c == 'E' || c == 'I' || c == 'O' || c == 'U';
}

// (DT|RT|R+D|N+T|N+D)$ -> D
std::string collapse_dental_suffix(std::string s) {
    auto ends = [&](std::string_view suf) { return s.ends_with(suf); };
    if (ends("DT") || ends("RT")) {
        s.replace(s.size() - 2, 2, "D");
        return s;
    }
    if (s.size() >= 2 && (s.back() == 'D' || s.back() == 'T')) {
        char run = (s.back() == 'D' || s.back() == 'T') ? s[s.size() - 2] : 0;
        if (run == 'R' || run == 'N') {
            char final_char = s.back();
            std::size_t i = s.size() - 2;
            while (i > 0 && s[i - 1] == run) --i;
            if (final_char == 'T' && run == 'R') return s;  // RT handled above, R+T is not a rule
            s.erase(i);
            s += 'D';
        }
    }
    return s;
}

// ([^A])H -> $1
std::string drop_h_after_consonant(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != 'A' && i + 1 < s.size() && s[i + 1] == 'H') {
            out += s[i];
            i += 2;
        } else {
            out += s[i++];
        }
    }
    return out;
}

// (.)H[^A] -> $1
std::string drop_h_before_consonant(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        if (i + 2 < s.size() && s[i + 1] == 'H' && s[i + 2] != 'A') {
            out += s[i];
            i += 3;
        } else {
            out += s[i++];
        }
    }
    return out;
}

std::string nysiis_stage2(std::string code) {
    using detail::replace_all;
    code = replace_all(code, "EV", "AF");
    for (char& c : code) {
        if (c == 'E' || c == 'I' || c == 'O' || c == 'U') c = 'A';
    }
    code = replace_all(code, "Q", "G");
    code = replace_all(code, "Z", "S");
    code = replace_all(code, "KN", "N");
    code = replace_all(code, "M", "N");
    code = replace_all(code, "K", "C");
    code = replace_all(code, "SCH", "SSS");
    code = replace_all(code, "PH", "FF");
    code = drop_h_after_consonant(code);
    code = drop_h_before_consonant(code);
    code = replace_all(code, "AW", "A");
    if (code.ends_with('S')) code.pop_back();
    if (code.ends_with("AY")) code.replace(code.size() - 2, 2, "Y");
    if (code.ends_with('A')) code.pop_back();
    return code;
}

}  // namespace

std::string nysiis_untruncated(std::string_view word) {
    std::string name = detail::to_upper(word);
    if (name.empty()) return name;

    name = detail::replace_suffix(name, "JR", "");
    name = detail::replace_suffix(name, "SR", "");
    name = detail::replace_prefix(name, "MAC", "MCC");
    name = detail::replace_prefix(name, "KN", "NN");
    if (name.starts_with('K')) name[0] = 'C';
    name = detail::replace_prefix(name, "PH", "FF");
    name = detail::replace_prefix(name, "PF", "FF");
    name = detail::replace_prefix(name, "SCH", "SSS");
    name = detail::replace_suffix(name, "EE", "Y");
    name = detail::replace_suffix(name, "IE", "Y");
    name = collapse_dental_suffix(std::move(name));

    if (name.empty()) return name;
    char first = name[0];
    return first + squeeze(nysiis_stage2(name.substr(1)));
}

std::string nysiis(std::string_view word) {
    std::string code = nysiis_untruncated(word);
    if (code.size() > 6) code.resize(6);
    return code;
}

std::string revised_nysiis(std::string_view word) {
    std::string s = detail::to_upper(word);
    if (s.empty()) return s;

    while (s.size() > 1 && (s.back() == 'S' || s.back() == 'Z')) s.pop_back();

    s = detail::replace_prefix(s, "MAC", "MC");
    s = detail::replace_prefix(s, "PF", "F");
    s = detail::replace_suffix(s, "IX", "IC");
    s = detail::replace_suffix(s, "EX", "EC");
    for (std::string_view suf : {"YE", "EE", "IE"}) {
        if (s.ends_with(suf)) {
            s.replace(s.size() - 2, 2, "Y");
            break;
        }
    }
    for (std::string_view suf : {"DT", "RT", "RD", "NT", "ND"}) {
        if (s.ends_with(suf)) {
            s.replace(s.size() - 2, 2, "D");
            break;
        }
    }

    std::string key(1, s[0]);
    auto append = [&key](char c) {
        if (key.back() != c) key += c;
    };
    auto append_str = [&](std::string_view piece) {
        for (char c : piece) append(c);
    };

    std::size_t i = 1;
    while (i < s.size()) {
        char c = s[i];
        char prev = s[i - 1];
        char next = i + 1 < s.size() ? s[i + 1] : '\0';
        if (c == 'E' && next == 'V') {
            append_str("AF");
            i += 2;
            continue;
        }
        if (is_upper_vowel(c)) {
            append('A');
        } else if (c == 'Q') {
            append('G');
        } else if (c == 'Z') {
            append('S');
        } else if (c == 'M') {
            append('N');
        } else if (c == 'K') {
            if (next == 'N') {
                append('N');
                i += 2;
                continue;
            }
            append('C');
        } else if (c == 'S' && s.compare(i, 3, "SCH") == 0) {
            append_str("SSS");
            i += 3;
            continue;
        } else if (c == 'P' && next == 'H') {
            append_str("FF");
            i += 2;
            continue;
        } else if (c == 'H') {
            // Dropped next to a consonant, on either side of the first letter.
            if (!is_upper_vowel(prev) || (next != '\0' && !is_upper_vowel(next))) {
                ++i;
                continue;
            }
            append(c);
        } else if (c == 'W') {
            if (is_upper_vowel(prev)) {
                ++i;
                continue;
            }
            append(c);
        } else {
            append(c);
        }
        ++i;
    }

    if (key.ends_with("AY")) key.replace(key.size() - 2, 2, "Y");
    while (key.size() > 1 && key.back() == 'A') key.pop_back();
    return key;
}

std::string onca(std::string_view word) {
    return soundex(nysiis_untruncated(word));
}

}  // namespace phonkit::enc
