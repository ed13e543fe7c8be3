// Copyright 2026 the phonkit authors
// SPDX-License-Identifier: Apache-2.0

// Small string helpers shared by the encoder implementations. Internal.

#pragma once

#include <string>
#include <string_view>

namespace phonkit::detail {

bool is_vowel(char c);        // aeiou / AEIOU
bool is_ascii_letter(char c);

std::string to_upper(std::string_view s);
std::string to_lower(std::string_view s);

/// Collapses runs of the same character to a single occurrence.
std::string squeeze(std::string_view s);

/// Replaces every occurrence of `from`, scanning left to right and never
/// rescanning replaced text (the semantics of a global regex replace on a
/// literal pattern).
std::string replace_all(std::string_view s, std::string_view from, std::string_view to);

/// Replaces `from` only when it is a prefix / suffix.
std::string replace_prefix(std::string_view s, std::string_view from, std::string_view to);
std::string replace_suffix(std::string_view s, std::string_view from, std::string_view to);

}  // namespace phonkit::detail
