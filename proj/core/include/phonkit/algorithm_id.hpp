// Copyright 2026 the phonkit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <string_view>

namespace phonkit {

/// Every phonetic algorithm (or interpretation of one) shipped by the
/// library. The identifiers are stable: they appear in index files and
/// evaluation reports.
enum class AlgorithmId {
    soundex,
    refined_soundex,
    alpha_sis,
    nysiis,
    revised_nysiis,
    mra,
    metaphone,
    double_metaphone,
    dm_soundex,
    caverphone1,
    caverphone2,
    beider_morse,
    fuzzy_soundex,
    lein,
    onca,
    phonex,
    phonix,
    phonix_comm,
    roger_root,
    statcan,
    eudex,
};

inline constexpr int kAlgorithmCount = 21;

struct AlgorithmInfo {
    AlgorithmId id;
    std::string_view name;
    /// May emit more than one code token per word.
    bool multi_code;
    /// Exact emitted code length, 0 when variable.
    int fixed_length;
    /// Exact-code lookup alone does not exhaust the algorithm: a dedicated
    /// comparison scheme exists (MRA rating, Phonix tiers, Eudex Hamming).
    bool matcher_required;
};

/// Complete roster in stable order.
std::span<const AlgorithmInfo> supported_algorithms();

const AlgorithmInfo& algorithm_info(AlgorithmId id);
std::string_view to_string(AlgorithmId id);
std::optional<AlgorithmId> algorithm_from_name(std::string_view name);

/// Evaluation variants: the lookup procedures compared by the harness.
/// Exact-code algorithms appear once; MRA adds its rating-scan procedure,
/// Phonix contributes its three likelihood tiers, Eudex its four Hamming
/// thresholds.
enum class VariantId {
    soundex,
    refined_soundex,
    alpha_sis,
    nysiis,
    revised_nysiis,
    mra,
    mra_custom,
    metaphone,
    double_metaphone,
    dm_soundex,
    caverphone1,
    caverphone2,
    beider_morse,
    fuzzy_soundex,
    lein,
    onca,
    phonex,
    phonix_most,
    phonix_less,
    phonix_least,
    phonix_comm,
    roger_root,
    statcan,
    eudex_0,
    eudex_5,
    eudex_10,
    eudex_15,
};

inline constexpr int kVariantCount = 27;

/// All 27 variants in stable order.
std::span<const VariantId> all_variants();

std::string_view to_string(VariantId id);
std::optional<VariantId> variant_from_name(std::string_view name);

/// True when candidate sets for the variant can only be produced by a
/// linear scan over the lexicon (no exact index key exists).
bool variant_requires_scan(VariantId id);

/// Eudex variants carry their Hamming threshold; -1 for the others.
int variant_eudex_threshold(VariantId id);

}  // namespace phonkit
