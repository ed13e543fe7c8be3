// Copyright 2026 the phonkit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

namespace phonkit {

/// Input normalization applied before any encoder runs.
struct NormalizeOptions {
    /// Expand digits to their spelled-out form ("2" -> "two") before
    /// stripping, so number homophones like "4got" survive encoding.
    /// Off by default.
    bool spell_digits = false;

    bool operator==(const NormalizeOptions&) const = default;
};

/// Lowercases, optionally spells digits, strips everything outside [a-z']
/// and finally drops apostrophes ("o'clock" -> "oclock"). May return an
/// empty string; callers that need a non-empty word must check.
std::string normalize_word(std::string_view word, const NormalizeOptions& options = {});

}  // namespace phonkit
