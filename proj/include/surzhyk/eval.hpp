// Copyright the surzhyk-tools authors. SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "surzhyk/match.hpp"

namespace surzhyk {

enum class GoldJudgment { tp, fp };

/// Human judgment of one match, keyed by its coordinates. second_pos is 0
/// for prefix matches.
struct GoldLabel {
    std::string rule_id;
    std::string file_id;
    int line = 0;
    int first_pos = 0;
    int second_pos = 0;
    GoldJudgment label = GoldJudgment::tp;

    bool operator==(const GoldLabel&) const = default;
};

/// Per-rule tallies: results = tp + fp + unlabeled. precision is
/// tp / (tp + fp), absent when tp + fp = 0.
struct RuleReport {
    std::string rule_id;
    long results = 0;
    long tp = 0;
    long fp = 0;
    long unlabeled = 0;
    std::optional<double> precision;

    bool operator==(const RuleReport&) const = default;
};

struct ScoreResult {
    std::vector<RuleReport> reports;  // sorted by rule_id
    std::vector<GoldLabel> orphans;   // gold keys with no emitted match
};

/// Parses the gold TSV (header: rule_id file line first_pos second_pos
/// label; label TP|FP). Throws GoldFileError with the offending row number.
std::vector<GoldLabel> parse_gold(std::string_view tsv);

/// Joins matches to labels by key. Rules seen in matches or gold each get a
/// report; a rule present only in gold reports zero results.
ScoreResult score(std::span<const Match> matches, std::span<const GoldLabel> gold);

enum class ReportFormat { tsv, json };

/// Deterministic serialization, rules sorted by rule_id, plus an appended
/// "ALL" aggregate row. TSV prints precision with 4 decimals ("null" when
/// undefined); JSON keeps full precision.
std::string render_report(std::span<const RuleReport> reports, ReportFormat format);

} // namespace surzhyk
