// Copyright 2026 the phonkit authors
// SPDX-License-Identifier: Apache-2.0

#include "phonkit/algorithm_id.hpp"

#include <array>

namespace phonkit {

namespace {

constexpr std::array<AlgorithmInfo, kAlgorithmCount> kAlgorithms = {{
    {AlgorithmId::soundex, "soundex", false, 4, false},
    {AlgorithmId::refined_soundex, "refined_soundex", false, 0, false},
    {AlgorithmId::alpha_sis, "alpha_sis", true, 14, false},
    {AlgorithmId::nysiis, "nysiis", false, 0, false},
    {AlgorithmId::revised_nysiis, "revised_nysiis", false, 0, false},
    {AlgorithmId::mra, "mra", false, 0, true},
    {AlgorithmId::metaphone, "metaphone", false, 0, false},
    {AlgorithmId::double_metaphone, "double_metaphone", true, 0, false},
    {AlgorithmId::dm_soundex, "dm_soundex", false, 6, false},
    {AlgorithmId::caverphone1, "caverphone1", false, 6, false},
    {AlgorithmId::caverphone2, "caverphone2", false, 10, false},
    {AlgorithmId::beider_morse, "beider_morse", true, 0, false},
    {AlgorithmId::fuzzy_soundex, "fuzzy_soundex", false, 0, false},
    {AlgorithmId::lein, "lein", false, 4, false},
    {AlgorithmId::onca, "onca", false, 4, false},
    {AlgorithmId::phonex, "phonex", false, 0, false},
    {AlgorithmId::phonix, "phonix", true, 0, true},
    {AlgorithmId::phonix_comm, "phonix_comm", false, 4, false},
    {AlgorithmId::roger_root, "roger_root", false, 5, false},
    {AlgorithmId::statcan, "statcan", false, 0, false},
    {AlgorithmId::eudex, "eudex", false, 0, true},
}};

constexpr std::array<VariantId, kVariantCount> kVariants = {{
    VariantId::soundex,
    VariantId::refined_soundex,
    VariantId::alpha_sis,
    VariantId::nysiis,
    VariantId::revised_nysiis,
    VariantId::mra,
    VariantId::mra_custom,
    VariantId::metaphone,
    VariantId::double_metaphone,
    VariantId::dm_soundex,
    VariantId::caverphone1,
    VariantId::caverphone2,
    VariantId::beider_morse,
    VariantId::fuzzy_soundex,
    VariantId::lein,
    VariantId::onca,
    VariantId::phonex,
    VariantId::phonix_most,
    VariantId::phonix_less,
    VariantId::phonix_least,
    VariantId::phonix_comm,
    VariantId::roger_root,
    VariantId::statcan,
    VariantId::eudex_0,
    VariantId::eudex_5,
    VariantId::eudex_10,
    VariantId::eudex_15,
}};

constexpr std::array<std::string_view, kVariantCount> kVariantNames = {{
    "soundex",
    "refined_soundex",
    "alpha_sis",
    "nysiis",
    "revised_nysiis",
    "mra",
    "mra_custom",
    "metaphone",
    "double_metaphone",
    "dm_soundex",
    "caverphone1",
    "caverphone2",
    "beider_morse",
    "fuzzy_soundex",
    "lein",
    "onca",
    "phonex",
    "phonix_most",
    "phonix_less",
    "phonix_least",
    "phonix_comm",
    "roger_root",
    "statcan",
    "eudex_0",
    "eudex_5",
    "eudex_10",
    "eudex_15",
}};

}  // namespace

std::span<const AlgorithmInfo> supported_algorithms() { return kAlgorithms; }

const AlgorithmInfo& algorithm_info(AlgorithmId id) {
    return kAlgorithms[static_cast<std::size_t>(id)];
}

std::string_view to_string(AlgorithmId id) { return algorithm_info(id).name; }

std::optional<AlgorithmId> algorithm_from_name(std::string_view name) {
    for (const auto& info : kAlgorithms) {
        if (info.name == name) return info.id;
    }
    return std::nullopt;
}

std::span<const VariantId> all_variants() { return kVariants; }

std::string_view to_string(VariantId id) {
    return kVariantNames[static_cast<std::size_t>(id)];
}

std::optional<VariantId> variant_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kVariantNames.size(); ++i) {
        if (kVariantNames[i] == name) return kVariants[i];
    }
    if (name == "eudex") return VariantId::eudex_0;  // the paper's plain Eudex row
    return std::nullopt;
}

bool variant_requires_scan(VariantId id) {
    switch (id) {
        case VariantId::mra_custom:
        case VariantId::eudex_5:
        case VariantId::eudex_10:
        case VariantId::eudex_15:
            return true;
        default:
            return false;
    }
}

int variant_eudex_threshold(VariantId id) {
    switch (id) {
        case VariantId::eudex_0: return 0;
        case VariantId::eudex_5: return 5;
        case VariantId::eudex_10: return 10;
        case VariantId::eudex_15: return 15;
        default: return -1;
    }
}

}  // namespace phonkit
