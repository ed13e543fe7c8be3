// Copyright 2026 the phonkit authors
// SPDX-License-Identifier: Apache-2.0

// American Soundex and the refined variant, matching the behavior of the
// Apache Commons Codec implementations (including the H/W rule of the
// original: consonants of the same class separated by H or W code once).

#include "phonkit/encoders.hpp"

#include <cctype>

#include "text_util.hpp"

namespace phonkit::enc {

namespace {

// a..z -> soundex digit, '0' for vowels and h/w/y
constexpr char kSoundexMap[27] = "01230120022455012623010202";
// a..z -> refined soundex digit, vowels keep an explicit '0'
constexpr char kRefinedMap[27] = "01360240043788015936020505";

char soundex_digit(char upper) { return kSoundexMap[upper - 'A']; }

// The H/W rule: a consonant following H or W codes as silent when the
// letter before the H/W has the same class (or is itself H/W).
char mapping_code(const std::string& word, std::size_t index) {
    char mapped = soundex_digit(word[index]);
    if (index > 1 && mapped != '0') {
        char hw = word[index - 1];
        if (hw == 'H' || hw == 'W') {
            char pre = word[index - 2];
            if (soundex_digit(pre) == mapped || pre == 'H' || pre == 'W') return 0;
        }
    }
    return mapped;
}

}  // namespace

std::string soundex(std::string_view word) {
    std::string clean = detail::to_upper(word);
    if (clean.empty()) return clean;

    std::string out = "0000";
    out[0] = clean[0];
    char last = mapping_code(clean, 0);
    std::size_t in = 1, count = 1;
    while (in < clean.size() && count < 4) {
        char mapped = mapping_code(clean, in++);
        if (mapped == 0) continue;  // silent under the H/W rule, keep `last`
        if (mapped != '0' && mapped != last) out[count++] = mapped;
        last = mapped;
    }
    return out;
}

std::string refined_soundex(std::string_view word) {
    std::string clean = detail::to_upper(word);
    if (clean.empty()) return clean;

    std::string out;
    out += clean[0];
    char last = '*';
    for (char c : clean) {
        char current = kRefinedMap[c - 'A'];
        if (current == last) continue;
        out += current;
        last = current;
    }
    return out;
}

}  // namespace phonkit::enc
