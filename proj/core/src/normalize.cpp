// Copyright 2026 the phonkit authors
// SPDX-License-Identifier: Apache-2.0

#include "phonkit/normalize.hpp"

#include <array>
#include <cctype>

namespace phonkit {

namespace {

constexpr std::array<std::string_view, 10> kDigitNames = {
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine"};

}  // namespace

std::string normalize_word(std::string_view word, const NormalizeOptions& options) {
    std::string out;
    out.reserve(word.size());
    for (unsigned char c : word) {
        unsigned char lower = static_cast<unsigned char>(std::tolower(c));
        if (options.spell_digits && lower >= '0' && lower <= '9') {
            out += kDigitNames[lower - '0'];
        } else if ((lower >= 'a' && lower <= 'z') || lower == '\'') {
            out += static_cast<char>(lower);
        }
    }
    std::erase(out, '\'');
    return out;
}

}  // namespace phonkit
