// Copyright the surzhyk-tools authors. SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace surzhyk {

enum class AnchorMode { exact_word, ends_with, starts_with };

/// A literal word-edge pattern. text is normalized (lowercase, NFC).
struct PatternAnchor {
    AnchorMode mode = AnchorMode::exact_word;
    std::string text;

    bool operator==(const PatternAnchor&) const = default;
};

enum class ConstraintTarget { first, second };
enum class ConstraintKind { exact_equals, char_len_greater_than };

/// Post-filter on one of the two matched tokens. Exactly one payload field
/// is meaningful, selected by kind; the other stays at its default so that
/// equality comparison behaves.
struct Constraint {
    ConstraintTarget target = ConstraintTarget::first;
    ConstraintKind kind = ConstraintKind::exact_equals;
    std::string text;     // exact_equals: required surface
    int min_char_len = 0; // char_len_greater_than: strict lower bound

    static Constraint equals(ConstraintTarget t, std::string word);
    static Constraint longer_than(ConstraintTarget t, int n);

    bool operator==(const Constraint&) const = default;
};

enum class RuleGroup { general, specific, user };

/// Anchor token followed by a word-final pattern within max_distance
/// token positions, subject to post-filters.
struct PairRule {
    std::string id;
    RuleGroup group = RuleGroup::user;
    PatternAnchor first;
    PatternAnchor second; // mode must be ends_with
    int max_distance = 1;
    std::vector<Constraint> constraints;

    bool operator==(const PairRule&) const = default;
};

/// Single-token rule: surface starts with prefix and has strictly more than
/// min_char_len_exclusive characters.
struct PrefixRule {
    std::string id;
    std::string prefix;
    int min_char_len_exclusive = 1;

    bool operator==(const PrefixRule&) const = default;
};

struct RuleSet {
    std::string name;
    std::vector<PairRule> pair_rules;
    std::vector<PrefixRule> prefix_rules;

    bool operator==(const RuleSet&) const = default;
};

enum class BuiltinSet { general, specific, prefix, all };

/// How the built-in "ми"/"самі" anchors are encoded. exact_word is the
/// default; suffix_only (the --strict-paper mode) downgrades them to
/// ends_with anchors, keeping an exact_equals post-filter only on G1.
/// Every match found under exact_word is also found under suffix_only.
enum class AnchorEncoding { exact_word, suffix_only };

RuleSet builtin_ruleset(BuiltinSet which,
                        AnchorEncoding encoding = AnchorEncoding::exact_word);

/// "general" | "specific" | "prefix" | "all" -> BuiltinSet.
std::optional<BuiltinSet> parse_builtin_name(std::string_view name);

/// Every violated invariant, empty when valid.
std::vector<std::string> validate_rule(const PairRule& rule);
std::vector<std::string> validate_rule(const PrefixRule& rule);
/// Per-rule violations plus cross-rule id uniqueness.
std::vector<std::string> validate_ruleset(const RuleSet& rs);

/// Parses the JSON rule-file format (see README). Unknown keys are errors.
/// Throws RuleFileError.
RuleSet parse_ruleset(std::string_view json_text);

/// JSON serialization; parse_ruleset(render_ruleset(rs)) == rs.
std::string render_ruleset(const RuleSet& rs);

std::string_view to_string(AnchorMode mode);
std::string_view to_string(RuleGroup group);
std::string_view to_string(ConstraintTarget target);
std::string_view to_string(ConstraintKind kind);

} // namespace surzhyk
