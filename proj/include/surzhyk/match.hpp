// Copyright the surzhyk-tools authors. SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "surzhyk/rules.hpp"
#include "surzhyk/text.hpp"

namespace surzhyk {

/// One rule firing. Pair matches carry both tokens and their positional
/// distance; prefix matches record the single token in first_* and leave
/// the second_* fields and distance absent. context is the full normalized
/// line the match was found on.
struct Match {
    std::string rule_id;
    std::string file_id;
    int line = 0;
    int first_pos = 0;
    std::string first_word;
    std::optional<int> second_pos;
    std::optional<std::string> second_word;
    std::optional<int> distance; // second_pos - first_pos
    std::string context;

    bool operator==(const Match&) const = default;
};

bool anchor_matches(const PatternAnchor& anchor, const Token& token);

/// All qualifying ordered pairs on one line: 0 < distance <= max_distance
/// and every constraint satisfied. A token may participate in several pairs.
std::vector<Match> match_pair_rule(const PairRule& rule, std::span<const Token> line_tokens,
                                   std::string_view context);

std::vector<Match> match_prefix_rule(const PrefixRule& rule, std::span<const Token> line_tokens,
                                     std::string_view context);

/// Output ordering: (file_id, line, first_pos, second_pos [absent -> 0],
/// rule_id).
bool match_less(const Match& a, const Match& b);

struct RunOptions {
    int workers = 1; // line groups are split across this many threads
};

/// Applies every rule to every (file, line) group. Output is sorted as per
/// match_less and is identical for any worker count.
std::vector<Match> run(const RuleSet& rs, const CorpusIndex& idx, const RunOptions& opts = {});

/// Match stream serialization. TSV columns:
/// rule_id  file  line  first_pos  first_word  second_pos  second_word
/// distance  context  (second_*/distance empty for prefix matches).
std::string render_matches_tsv(std::span<const Match> matches);
std::string render_matches_json(std::span<const Match> matches);

/// Reads back either serialization (JSON detected by a leading '[').
/// Throws std::runtime_error on malformed input.
std::vector<Match> parse_matches(std::string_view text);

/// Context widened to n neighboring lines on each side (same file only),
/// joined with " | ".
std::string widen_context(const CorpusIndex& idx, const Match& m, int neighbor_lines);

} // namespace surzhyk
