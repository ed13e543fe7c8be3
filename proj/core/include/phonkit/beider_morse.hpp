// Copyright 2026 the phonkit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace phonkit {

/// One rewrite rule: `pattern` rewrites to one of `alternatives` when the
/// text before/after the match satisfies the anchored context patterns.
/// Contexts are limited regular patterns over lowercase letters:
/// literals, [abc] classes, and the ^ / $ anchors.
struct RewriteRule {
    std::string pattern;
    std::string left_context;   // matched against the text before the pattern
    std::string right_context;  // matched against the text after the pattern
    std::vector<std::string> alternatives;
};

/// Rules split into the language-generic stage and the common stage
/// (final devoicing, regressive assimilation). Application order within a
/// stage is file order, first match wins at each position. Immutable
/// after load; safe to share across threads.
struct RuleSet {
    std::vector<RewriteRule> generic;
    std::vector<RewriteRule> common;

    bool empty() const { return generic.empty() && common.empty(); }
};

/// Parses the tab-separated rule-file grammar:
///   pattern <TAB> left-context <TAB> right-context <TAB> alt1|alt2|...
/// `#` starts a comment, a line `== common ==` switches to the common
/// stage. Throws RuleParseError with the offending line number.
RuleSet load_beider_morse_rules(std::istream& source);
RuleSet load_beider_morse_rules(std::string_view source);
RuleSet load_beider_morse_rules_file(const std::string& path);

/// The reduced generic + common ruleset the library ships with.
const RuleSet& bundled_beider_morse_rules();

/// Runs both stages over a normalized word and returns the de-duplicated
/// code alternatives in generation order.
std::vector<std::string> beider_morse_encode(const RuleSet& rules, std::string_view word);

}  // namespace phonkit
