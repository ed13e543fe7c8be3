// Copyright 2026 the phonkit authors
// SPDX-License-Identifier: Apache-2.0

// IBM Alpha Search Inquiry System. One table for the word-initial
// substring, one for the rest; ambiguous groups (C, K, CH, CZ, CK,
// DS/DZ/TS/TZ) branch into alternative codes. Tables follow the talisman
// reference implementation.

#include "phonkit/encoders.hpp"

#include <array>
#include <utility>

#include "text_util.hpp"

namespace phonkit::enc {

namespace {

struct InitialRule {
    std::string_view pattern;
    std::string_view code;
};

constexpr std::array<InitialRule, 17> kInitials = {{
    {"GF", "08"}, {"GM", "03"}, {"GN", "02"}, {"KN", "02"}, {"PF", "08"},
    {"PN", "02"}, {"PS", "00"}, {"WR", "04"}, {"A", "1"}, {"E", "1"},
    {"H", "2"}, {"I", "1"}, {"J", "3"}, {"O", "1"}, {"U", "1"},
    {"W", "4"}, {"Y", "5"},
}};

struct BasicRule {
    std::string_view pattern;
    std::array<std::string_view, 3> codes;  // empty entries unused
    int arity;
};

constexpr std::array<BasicRule, 32> kBasics = {{
    {"SCH", {"6"}, 1},
    {"CZ", {"70", "6", "0"}, 3},
    {"CH", {"6", "70", "0"}, 3},
    {"CK", {"7", "6"}, 2},
    {"DS", {"0", "10"}, 2},
    {"DZ", {"0", "10"}, 2},
    {"TS", {"0", "10"}, 2},
    {"TZ", {"0", "10"}, 2},
    {"CI", {"0"}, 1},
    {"CY", {"0"}, 1},
    {"CE", {"0"}, 1},
    {"SH", {"6"}, 1},
    {"DG", {"7"}, 1},
    {"PH", {"8"}, 1},
    {"C", {"7", "6"}, 2},
    {"K", {"7", "6"}, 2},
    {"Z", {"0"}, 1},
    {"S", {"0"}, 1},
    {"D", {"1"}, 1},
    {"T", {"1"}, 1},
    {"N", {"2"}, 1},
    {"M", {"3"}, 1},
    {"R", {"4"}, 1},
    {"L", {"5"}, 1},
    {"J", {"6"}, 1},
    {"G", {"7"}, 1},
    {"Q", {"7"}, 1},
    {"X", {"7"}, 1},
    {"F", {"8"}, 1},
    {"V", {"8"}, 1},
    {"B", {"9"}, 1},
    {"P", {"9"}, 1},
}};

std::string pad14(std::string code) {
    code.resize(14, '0');
    return code;
}

}  // namespace

std::vector<std::string> alpha_sis(std::string_view word) {
    std::string name = detail::to_upper(word);

    // Token stream: single-code strings plus branching alternatives.
    std::vector<std::string> codes{""};
    std::size_t position = 0;

    for (const auto& rule : kInitials) {
        if (name.starts_with(rule.pattern)) {
            codes[0] += rule.code;
            position += rule.pattern.size();
            break;
        }
    }
    if (codes[0].empty()) codes[0] = "0";

    while (position < name.size()) {
        bool matched = false;
        for (const auto& rule : kBasics) {
            if (name.compare(position, rule.pattern.size(), rule.pattern) == 0) {
                if (rule.arity == 1) {
                    for (auto& c : codes) c += rule.codes[0];
                } else {
                    // Earlier alternatives vary fastest, matching the
                    // reference ordering of the emitted code list.
                    std::vector<std::string> next;
                    next.reserve(codes.size() * rule.arity);
                    for (int a = 0; a < rule.arity; ++a) {
                        for (const auto& c : codes) next.push_back(c + std::string(rule.codes[a]));
                    }
                    codes = std::move(next);
                }
                position += rule.pattern.size();
                matched = true;
                break;
            }
        }
        if (!matched) {
            for (auto& c : codes) c += '_';
            ++position;
        }
    }

    std::vector<std::string> out;
    out.reserve(codes.size());
    for (const auto& c : codes) {
        std::string cleaned = detail::squeeze(c);
        std::erase(cleaned, '_');
        cleaned = pad14(std::move(cleaned));
        bool seen = false;
        for (const auto& existing : out) {
            if (existing == cleaned) { seen = true; break; }
        }
        if (!seen) out.push_back(std::move(cleaned));
    }
    return out;
}

}  // namespace phonkit::enc
