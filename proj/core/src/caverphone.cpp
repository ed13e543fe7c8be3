// Copyright 2026 the phonkit authors
// SPDX-License-Identifier: Apache-2.0

// Caverphone 1.0 and 2.0 (David Hood, Caversham project), as ordered
// rewrite pipelines over lowercase words. '2' marks a consumed consonant,
// '3' a consumed vowel; both are stripped at the end. Mirrors the Apache
// Commons Codec rule order.

#include "phonkit/encoders.hpp"

#include "text_util.hpp"

namespace phonkit::enc {

namespace {

using detail::replace_all;
using detail::replace_prefix;
using detail::replace_suffix;

std::string collapse_run(const std::string& s, char from, char to) {
    std::string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == from) {
            out += to;
            while (i < s.size() && s[i] == from) ++i;
        } else {
            out += s[i++];
        }
    }
    return out;
}

std::string map_vowels(std::string s) {
    if (!s.empty() && detail::is_vowel(s[0])) s[0] = 'A';
    for (char& c : s) {
        if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') c = '3';
    }
    return s;
}

std::string shared_head(std::string t, bool revisited) {
    if (revisited) t = replace_suffix(t, "e", "");
    t = replace_prefix(t, "cough", "cou2f");
    t = replace_prefix(t, "rough", "rou2f");
    t = replace_prefix(t, "tough", "tou2f");
    t = replace_prefix(t, "enough", "enou2f");
    t = replace_prefix(t, "trough", "trou2f");
    t = replace_prefix(t, "gn", "2n");
    t = replace_suffix(t, "mb", "m2");
    t = replace_all(t, "cq", "2q");
    t = replace_all(t, "ci", "si");
    t = replace_all(t, "ce", "se");
    t = replace_all(t, "cy", "sy");
    t = replace_all(t, "tch", "2ch");
    t = replace_all(t, "c", "k");
    t = replace_all(t, "q", "k");
    t = replace_all(t, "x", "k");
    t = replace_all(t, "v", "f");
    t = replace_all(t, "dg", "2g");
    t = replace_all(t, "tio", "sio");
    t = replace_all(t, "tia", "sia");
    t = replace_all(t, "d", "t");
    t = replace_all(t, "ph", "fh");
    t = replace_all(t, "b", "p");
    t = replace_all(t, "sh", "s2");
    t = replace_all(t, "z", "s");
    t = map_vowels(std::move(t));
    return t;
}

std::string shared_consonant_runs(std::string t) {
    t = replace_all(t, "3gh3", "3kh3");
    t = replace_all(t, "gh", "22");
    t = replace_all(t, "g", "k");
    t = collapse_run(t, 's', 'S');
    t = collapse_run(t, 't', 'T');
    t = collapse_run(t, 'p', 'P');
    t = collapse_run(t, 'k', 'K');
    t = collapse_run(t, 'f', 'F');
    t = collapse_run(t, 'm', 'M');
    t = collapse_run(t, 'n', 'N');
    return t;
}

}  // namespace

std::string caverphone1(std::string_view word) {
    std::string t = detail::to_lower(word);
    t = shared_head(std::move(t), false);
    t = shared_consonant_runs(std::move(t));
    t = replace_all(t, "w3", "W3");
    t = replace_all(t, "wy", "Wy");
    t = replace_all(t, "wh3", "Wh3");
    t = replace_all(t, "why", "Why");
    t = replace_all(t, "w", "2");
    t = replace_prefix(t, "h", "A");
    t = replace_all(t, "h", "2");
    t = replace_all(t, "r3", "R3");
    t = replace_all(t, "ry", "Ry");
    t = replace_all(t, "r", "2");
    t = replace_all(t, "l3", "L3");
    t = replace_all(t, "ly", "Ly");
    t = replace_all(t, "l", "2");
    t = replace_all(t, "j", "y");
    t = replace_all(t, "y3", "Y3");
    t = replace_all(t, "y", "2");
    std::erase(t, '2');
    std::erase(t, '3');
    t += "111111";
    return t.substr(0, 6);
}

std::string caverphone2(std::string_view word) {
    std::string t = detail::to_lower(word);
    t = shared_head(std::move(t), true);
    t = replace_all(t, "j", "y");
    t = replace_prefix(t, "y3", "Y3");
    t = replace_prefix(t, "y", "A");
    t = replace_all(t, "y", "3");
    t = shared_consonant_runs(std::move(t));
    t = replace_all(t, "w3", "W3");
    t = replace_all(t, "wh3", "Wh3");
    t = replace_suffix(t, "w", "3");
    t = replace_all(t, "w", "2");
    t = replace_prefix(t, "h", "A");
    t = replace_all(t, "h", "2");
    t = replace_all(t, "r3", "R3");
    t = replace_suffix(t, "r", "3");
    t = replace_all(t, "r", "2");
    t = replace_all(t, "l3", "L3");
    t = replace_suffix(t, "l", "3");
    t = replace_all(t, "l", "2");
    std::erase(t, '2');
    t = replace_suffix(t, "3", "A");
    std::erase(t, '3');
    t += "1111111111";
    return t.substr(0, 10);
}

}  // namespace phonkit::enc
