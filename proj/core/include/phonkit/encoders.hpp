// Copyright 2026 the phonkit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "phonkit/algorithm_id.hpp"
#include "phonkit/beider_morse.hpp"
#include "phonkit/normalize.hpp"

namespace phonkit {

/// The one-or-more code tokens an algorithm emits for a word, in the
/// algorithm-defined order with first-occurrence de-duplication.
struct PhoneticKeySet {
    std::vector<std::string> codes;

    bool operator==(const PhoneticKeySet&) const = default;
};

/// Phonix under its original interpretation produces a word code plus an
/// auxiliary ending-sound token used by the tiered matching rules.
struct PhonixEncoding {
    std::string code;
    std::string ending_sound;

    bool operator==(const PhonixEncoding&) const = default;
};

/// Encodes a word with the selected algorithm. The word is normalized
/// first; an EmptyInputError is thrown when nothing survives
/// normalization. `phonix` yields both the code and the ending-sound
/// token; `beider_morse` runs the bundled generic ruleset.
PhoneticKeySet encode(AlgorithmId algo, std::string_view word,
                      const NormalizeOptions& options = {});

/// Same, with a caller-supplied Beider-Morse ruleset.
PhoneticKeySet encode(AlgorithmId algo, std::string_view word, const RuleSet& bm_rules,
                      const NormalizeOptions& options = {});

/// Both Phonix tokens at once.
PhonixEncoding encode_phonix_full(std::string_view word,
                                  const NormalizeOptions& options = {});

// Raw per-algorithm encoders. They expect a normalized word (lowercase
// a-z, non-empty) and skip the dispatch overhead; encode() is the
// checked front door.
namespace enc {

std::string soundex(std::string_view word);
std::string refined_soundex(std::string_view word);
std::vector<std::string> alpha_sis(std::string_view word);
std::string nysiis(std::string_view word);           // truncated to 6
std::string nysiis_untruncated(std::string_view word);
std::string revised_nysiis(std::string_view word);
std::string mra(std::string_view word);
std::string metaphone(std::string_view word);
std::vector<std::string> double_metaphone(std::string_view word);  // primary, alternate
std::string dm_soundex(std::string_view word);
std::string caverphone1(std::string_view word);
std::string caverphone2(std::string_view word);
std::string fuzzy_soundex(std::string_view word);
std::string lein(std::string_view word);
std::string onca(std::string_view word);
std::string phonex(std::string_view word);
std::string phonix_comm(std::string_view word);
std::string roger_root(std::string_view word);
std::string statcan(std::string_view word);
std::uint64_t eudex(std::string_view word);

}  // namespace enc

}  // namespace phonkit
