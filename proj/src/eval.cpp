// Copyright the surzhyk-tools authors. SPDX-License-Identifier: Apache-2.0
#include "surzhyk/eval.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <tuple>

#include <json.hpp>

#include "surzhyk/errors.hpp"

namespace surzhyk {

using ordered_json = nlohmann::ordered_json;

namespace {

using Key = std::tuple<std::string, std::string, int, int, int>;

Key key_of(const GoldLabel& g) {
    return {g.rule_id, g.file_id, g.line, g.first_pos, g.second_pos};
}

Key key_of(const Match& m) {
    return {m.rule_id, m.file_id, m.line, m.first_pos, m.second_pos.value_or(0)};
}

int parse_gold_int(std::string_view field, std::size_t row, const char* what, int min_value) {
    int value = 0;
    const auto* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc() || ptr != end || value < min_value) {
        throw GoldFileError(row, std::string("bad ") + what + " '" + std::string(field) + "'");
    }
    return value;
}

constexpr std::string_view kGoldHeader = "rule_id\tfile\tline\tfirst_pos\tsecond_pos\tlabel";
constexpr std::string_view kReportHeader = "rule_id\tresults\ttp\tfp\tunlabeled\tprecision";

std::string format_precision(const std::optional<double>& p) {
    if (!p) return "null";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", *p);
    return buf;
}

} // namespace

std::vector<GoldLabel> parse_gold(std::string_view tsv) {
    std::vector<GoldLabel> out;
    std::map<Key, std::size_t> seen;
    std::size_t row = 0;
    for (const auto& line : split_lines(tsv)) {
        ++row;
        if (row == 1) {
            if (line != kGoldHeader) throw GoldFileError(row, "unexpected header");
            continue;
        }
        if (line.empty()) continue;

        std::vector<std::string> fields;
        std::size_t pos = 0;
        while (true) {
            const std::size_t tab = line.find('\t', pos);
            if (tab == std::string::npos) {
                fields.push_back(line.substr(pos));
                break;
            }
            fields.push_back(line.substr(pos, tab - pos));
            pos = tab + 1;
        }
        if (fields.size() != 6) {
            throw GoldFileError(row, "expected 6 fields, got " + std::to_string(fields.size()));
        }

        GoldLabel g;
        g.rule_id = fields[0];
        g.file_id = fields[1];
        if (g.rule_id.empty()) throw GoldFileError(row, "empty rule_id");
        g.line = parse_gold_int(fields[2], row, "line", 1);
        g.first_pos = parse_gold_int(fields[3], row, "first_pos", 1);
        g.second_pos = parse_gold_int(fields[4], row, "second_pos", 0);
        if (fields[5] == "TP") {
            g.label = GoldJudgment::tp;
        } else if (fields[5] == "FP") {
            g.label = GoldJudgment::fp;
        } else {
            throw GoldFileError(row, "label must be TP or FP, got '" + fields[5] + "'");
        }

        auto [it, inserted] = seen.emplace(key_of(g), row);
        if (!inserted) {
            throw GoldFileError(row, "duplicate key (first declared at row " +
                                         std::to_string(it->second) + ")");
        }
        out.push_back(std::move(g));
    }
    return out;
}

ScoreResult score(std::span<const Match> matches, std::span<const GoldLabel> gold) {
    struct GoldEntry {
        const GoldLabel* label;
        bool used = false;
    };
    std::map<Key, GoldEntry> gold_by_key;
    for (const GoldLabel& g : gold) gold_by_key.emplace(key_of(g), GoldEntry{&g});

    std::map<std::string, RuleReport> by_rule;
    auto report_for = [&](const std::string& rule_id) -> RuleReport& {
        auto [it, inserted] = by_rule.try_emplace(rule_id);
        if (inserted) it->second.rule_id = rule_id;
        return it->second;
    };

    for (const Match& m : matches) {
        RuleReport& r = report_for(m.rule_id);
        ++r.results;
        const auto it = gold_by_key.find(key_of(m));
        if (it == gold_by_key.end()) {
            ++r.unlabeled;
        } else {
            it->second.used = true;
            if (it->second.label->label == GoldJudgment::tp) {
                ++r.tp;
            } else {
                ++r.fp;
            }
        }
    }

    ScoreResult result;
    for (const auto& [key, entry] : gold_by_key) {
        report_for(entry.label->rule_id); // a rule seen only in gold still reports
        if (!entry.used) result.orphans.push_back(*entry.label);
    }
    for (auto& [rule_id, report] : by_rule) {
        if (report.tp + report.fp > 0) {
            report.precision = static_cast<double>(report.tp) /
                               static_cast<double>(report.tp + report.fp);
        }
        result.reports.push_back(std::move(report));
    }
    // std::map iteration already sorted both reports and orphans by key.
    return result;
}

std::string render_report(std::span<const RuleReport> reports, ReportFormat format) {
    std::vector<const RuleReport*> sorted;
    sorted.reserve(reports.size());
    for (const auto& r : reports) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(),
              [](const RuleReport* a, const RuleReport* b) { return a->rule_id < b->rule_id; });

    RuleReport all;
    all.rule_id = "ALL";
    for (const auto* r : sorted) {
        all.results += r->results;
        all.tp += r->tp;
        all.fp += r->fp;
        all.unlabeled += r->unlabeled;
    }
    if (all.tp + all.fp > 0) {
        all.precision = static_cast<double>(all.tp) / static_cast<double>(all.tp + all.fp);
    }

    if (format == ReportFormat::tsv) {
        std::string out(kReportHeader);
        out.push_back('\n');
        auto emit = [&out](const RuleReport& r) {
            out += r.rule_id;
            out.push_back('\t');
            out += std::to_string(r.results);
            out.push_back('\t');
            out += std::to_string(r.tp);
            out.push_back('\t');
            out += std::to_string(r.fp);
            out.push_back('\t');
            out += std::to_string(r.unlabeled);
            out.push_back('\t');
            out += format_precision(r.precision);
            out.push_back('\n');
        };
        for (const auto* r : sorted) emit(*r);
        emit(all);
        return out;
    }

    ordered_json doc = ordered_json::array();
    auto emit = [&doc](const RuleReport& r) {
        ordered_json jr;
        jr["rule_id"] = r.rule_id;
        jr["results"] = r.results;
        jr["tp"] = r.tp;
        jr["fp"] = r.fp;
        jr["unlabeled"] = r.unlabeled;
        jr["precision"] = r.precision ? ordered_json(*r.precision) : ordered_json(nullptr);
        doc.push_back(std::move(jr));
    };
    for (const auto* r : sorted) emit(*r);
    emit(all);
    return doc.dump(2) + "\n";
}

} // namespace surzhyk
