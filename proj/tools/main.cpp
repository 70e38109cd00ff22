// Copyright the surzhyk-tools authors. SPDX-License-Identifier: Apache-2.0
//
// surzhyk — rule-based detector for Ukrainian-Russian hybrid (Surzhyk)
// verb patterns in tokenized text corpora.
//
// Subcommands: match, evaluate, rules, tokenize. Data goes to stdout,
// diagnostics to stderr. Exit codes: 0 ok, 2 usage, 3 I/O or decode,
// 4 rule file, 5 gold file.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "surzhyk/errors.hpp"
#include "surzhyk/eval.hpp"
#include "surzhyk/match.hpp"
#include "surzhyk/rules.hpp"
#include "surzhyk/text.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitRuleFile = 4;
constexpr int kExitGoldFile = 5;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void diag(const std::string& message) { std::cerr << "surzhyk: " << message << "\n"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw surzhyk::IoError(path, "no such file or not readable");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw surzhyk::IoError(path, "read failure");
    return buf.str();
}

// Directories are walked recursively for *.txt; explicit files are taken
// as-is. The resulting file ids are sorted and deduplicated.
std::vector<std::string> expand_corpus_paths(const std::vector<std::string>& args) {
    namespace fs = std::filesystem;
    std::vector<std::string> paths;
    for (const auto& arg : args) {
        std::error_code ec;
        if (fs::is_directory(arg, ec)) {
            for (const auto& entry : fs::recursive_directory_iterator(arg)) {
                if (entry.is_regular_file() && entry.path().extension() == ".txt") {
                    paths.push_back(entry.path().string());
                }
            }
        } else {
            paths.push_back(arg);
        }
    }
    std::sort(paths.begin(), paths.end());
    paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
    return paths;
}

surzhyk::RuleSet resolve_rules(const std::string& spec, bool strict_paper) {
    constexpr std::string_view kBuiltinPrefix = "builtin:";
    if (spec.starts_with(kBuiltinPrefix)) {
        const auto name = spec.substr(kBuiltinPrefix.size());
        const auto which = surzhyk::parse_builtin_name(name);
        if (!which) {
            throw UsageError("unknown builtin rule set '" + name +
                             "' (expected general, specific, prefix or all)");
        }
        const auto encoding = strict_paper ? surzhyk::AnchorEncoding::suffix_only
                                           : surzhyk::AnchorEncoding::exact_word;
        return surzhyk::builtin_ruleset(*which, encoding);
    }
    if (strict_paper) {
        throw UsageError("--strict-paper applies only to builtin rule sets");
    }
    std::string content;
    try {
        content = read_file(spec);
    } catch (const surzhyk::IoError& e) {
        throw surzhyk::RuleFileError(e.what());
    }
    return surzhyk::parse_ruleset(content);
}

void write_stdout(const std::string& data) {
    std::fwrite(data.data(), 1, data.size(), stdout);
    std::fflush(stdout);
}

int cmd_match(const std::vector<std::string>& paths, const std::string& rules_spec,
              bool strict_paper, const std::string& format, int context_lines, int jobs) {
    const auto rs = resolve_rules(rules_spec, strict_paper);
    const auto idx = surzhyk::index_corpus(expand_corpus_paths(paths));
    auto matches = surzhyk::run(rs, idx, {jobs});
    if (context_lines > 0) {
        for (auto& m : matches) m.context = surzhyk::widen_context(idx, m, context_lines);
    }
    write_stdout(format == "json" ? surzhyk::render_matches_json(matches)
                                  : surzhyk::render_matches_tsv(matches));
    return kExitOk;
}

int cmd_evaluate(const std::string& matches_path, const std::string& gold_path,
                 const std::string& format) {
    const auto matches = surzhyk::parse_matches(read_file(matches_path));
    std::string gold_content;
    try {
        gold_content = read_file(gold_path);
    } catch (const surzhyk::IoError& e) {
        throw surzhyk::GoldFileError(0, e.what());
    }
    const auto gold = surzhyk::parse_gold(gold_content);
    const auto result = surzhyk::score(matches, gold);
    write_stdout(surzhyk::render_report(
        result.reports, format == "json" ? surzhyk::ReportFormat::json
                                         : surzhyk::ReportFormat::tsv));
    for (const auto& orphan : result.orphans) {
        diag("orphan gold key (no matching output): " + orphan.rule_id + "\t" + orphan.file_id +
             "\t" + std::to_string(orphan.line) + "\t" + std::to_string(orphan.first_pos) + "\t" +
             std::to_string(orphan.second_pos));
    }
    return kExitOk;
}

std::string describe(const surzhyk::PairRule& r) {
    std::string out = r.id;
    out += "  [";
    out += surzhyk::to_string(r.group);
    out += "]  first ";
    out += surzhyk::to_string(r.first.mode);
    out += " \"" + r.first.text + "\"  ->  second ";
    out += surzhyk::to_string(r.second.mode);
    out += " \"" + r.second.text + "\"  within " + std::to_string(r.max_distance);
    for (const auto& c : r.constraints) {
        out += "  [";
        out += surzhyk::to_string(c.target);
        if (c.kind == surzhyk::ConstraintKind::exact_equals) {
            out += " = \"" + c.text + "\"]";
        } else {
            out += " char_len > " + std::to_string(c.min_char_len) + "]";
        }
    }
    return out;
}

std::string describe(const surzhyk::PrefixRule& r) {
    return r.id + "  [prefix]  starts_with \"" + r.prefix + "\"  char_len > " +
           std::to_string(r.min_char_len_exclusive);
}

int cmd_rules(const std::string& rules_spec, bool strict_paper, const std::string& format) {
    const auto rs = resolve_rules(rules_spec, strict_paper);
    if (format == "json") {
        write_stdout(surzhyk::render_ruleset(rs));
        return kExitOk;
    }
    std::string out = "ruleset \"" + rs.name + "\": " + std::to_string(rs.pair_rules.size()) +
                      " pair rule(s), " + std::to_string(rs.prefix_rules.size()) +
                      " prefix rule(s)\n";
    for (const auto& r : rs.pair_rules) out += "  " + describe(r) + "\n";
    for (const auto& r : rs.prefix_rules) out += "  " + describe(r) + "\n";
    write_stdout(out);
    return kExitOk;
}

int cmd_tokenize(const std::vector<std::string>& paths) {
    const auto idx = surzhyk::index_corpus(expand_corpus_paths(paths));
    std::string out = "file\tline\tposition\tword\n";
    for (const auto& token : idx.flatten()) {
        out += token.file_id + "\t" + std::to_string(token.line) + "\t" +
               std::to_string(token.position) + "\t" + token.surface + "\n";
    }
    write_stdout(out);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Detects Surzhyk (Ukrainian-Russian hybrid) verb patterns in text corpora"};
    app.require_subcommand(1);

    std::vector<std::string> paths;
    std::string rules_spec;
    std::string format = "tsv";
    bool strict_paper = false;
    int context_lines = 0;
    int jobs = 1;
    std::string matches_path;
    std::string gold_path;
    std::string rules_format = "text";

    auto* match_cmd = app.add_subcommand("match", "Run rules over a corpus and print matches");
    match_cmd->add_option("paths", paths, "Corpus files or directories (walked for *.txt)")
        ->required();
    match_cmd->add_option("--rules", rules_spec, "builtin:NAME or a JSON rule file")->required();
    match_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"tsv", "json"}));
    match_cmd->add_flag("--strict-paper", strict_paper,
                        "Encode builtin \"ми\"/\"самі\" anchors as word-final patterns");
    match_cmd->add_option("--context", context_lines, "Widen context to N neighboring lines")
        ->check(CLI::NonNegativeNumber);
    match_cmd->add_option("--jobs", jobs, "Worker threads (output is identical for any value)")
        ->check(CLI::PositiveNumber);

    auto* eval_cmd =
        app.add_subcommand("evaluate", "Score a match file against gold TP/FP labels");
    eval_cmd->add_option("matches", matches_path, "Match file (TSV or JSON, as printed by match)")
        ->required();
    eval_cmd->add_option("gold", gold_path, "Gold label TSV")->required();
    eval_cmd->add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"tsv", "json"}));

    auto* rules_cmd = app.add_subcommand("rules", "List and validate a rule set");
    rules_cmd->add_option("--rules", rules_spec, "builtin:NAME or a JSON rule file")->required();
    rules_cmd->add_flag("--strict-paper", strict_paper,
                        "Encode builtin \"ми\"/\"самі\" anchors as word-final patterns");
    rules_cmd->add_option("--format", rules_format, "Listing format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* tokenize_cmd =
        app.add_subcommand("tokenize", "Print the normalized token stream of a corpus");
    tokenize_cmd->add_option("paths", paths, "Corpus files or directories (walked for *.txt)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*match_cmd) {
            return cmd_match(paths, rules_spec, strict_paper, format, context_lines, jobs);
        }
        if (*eval_cmd) return cmd_evaluate(matches_path, gold_path, format);
        if (*rules_cmd) return cmd_rules(rules_spec, strict_paper, rules_format);
        if (*tokenize_cmd) return cmd_tokenize(paths);
    } catch (const UsageError& e) {
        diag(e.what());
        return kExitUsage;
    } catch (const surzhyk::RuleFileError& e) {
        diag(e.what());
        return kExitRuleFile;
    } catch (const surzhyk::GoldFileError& e) {
        diag(e.what());
        return kExitGoldFile;
    } catch (const surzhyk::DecodeError& e) {
        diag(e.what());
        return kExitIo;
    } catch (const surzhyk::IoError& e) {
        diag(e.what());
        return kExitIo;
    } catch (const std::filesystem::filesystem_error& e) {
        diag(e.what());
        return kExitIo;
    } catch (const std::exception& e) {
        diag(e.what());
        return kExitIo;
    }
    return kExitOk;
}
