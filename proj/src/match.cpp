// Copyright the surzhyk-tools authors. SPDX-License-Identifier: Apache-2.0
#include "surzhyk/match.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <json.hpp>

namespace surzhyk {

using ordered_json = nlohmann::ordered_json;

bool anchor_matches(const PatternAnchor& anchor, const Token& token) {
    // Pattern and surface are both normalized UTF-8, so byte-wise prefix and
    // suffix checks coincide with character-wise ones.
    const std::string_view surface = token.surface;
    switch (anchor.mode) {
        case AnchorMode::exact_word: return surface == anchor.text;
        case AnchorMode::ends_with: return surface.ends_with(anchor.text);
        case AnchorMode::starts_with: return surface.starts_with(anchor.text);
    }
    return false;
}

namespace {

bool constraint_holds(const Constraint& c, const Token& token) {
    if (c.kind == ConstraintKind::exact_equals) return token.surface == c.text;
    return token.char_len > c.min_char_len;
}

bool constraints_hold(const PairRule& rule, ConstraintTarget target, const Token& token) {
    for (const auto& c : rule.constraints) {
        if (c.target == target && !constraint_holds(c, token)) return false;
    }
    return true;
}

} // namespace

std::vector<Match> match_pair_rule(const PairRule& rule, std::span<const Token> line_tokens,
                                   std::string_view context) {
    std::vector<const Token*> firsts;
    std::vector<const Token*> seconds;
    for (const Token& t : line_tokens) {
        if (anchor_matches(rule.first, t) && constraints_hold(rule, ConstraintTarget::first, t)) {
            firsts.push_back(&t);
        }
        if (anchor_matches(rule.second, t) && constraints_hold(rule, ConstraintTarget::second, t)) {
            seconds.push_back(&t);
        }
    }

    std::vector<Match> out;
    for (const Token* f : firsts) {
        for (const Token* s : seconds) {
            const int distance = s->position - f->position;
            if (distance <= 0) continue;
            if (distance > rule.max_distance) break; // seconds are position-ascending
            Match m;
            m.rule_id = rule.id;
            m.file_id = f->file_id;
            m.line = f->line;
            m.first_pos = f->position;
            m.first_word = f->surface;
            m.second_pos = s->position;
            m.second_word = s->surface;
            m.distance = distance;
            m.context = std::string(context);
            out.push_back(std::move(m));
        }
    }
    return out;
}

std::vector<Match> match_prefix_rule(const PrefixRule& rule, std::span<const Token> line_tokens,
                                     std::string_view context) {
    std::vector<Match> out;
    for (const Token& t : line_tokens) {
        if (!std::string_view(t.surface).starts_with(rule.prefix)) continue;
        if (t.char_len <= rule.min_char_len_exclusive) continue;
        Match m;
        m.rule_id = rule.id;
        m.file_id = t.file_id;
        m.line = t.line;
        m.first_pos = t.position;
        m.first_word = t.surface;
        m.context = std::string(context);
        out.push_back(std::move(m));
    }
    return out;
}

bool match_less(const Match& a, const Match& b) {
    const int a_second = a.second_pos.value_or(0);
    const int b_second = b.second_pos.value_or(0);
    return std::tie(a.file_id, a.line, a.first_pos, a_second, a.rule_id) <
           std::tie(b.file_id, b.line, b.first_pos, b_second, b.rule_id);
}

namespace {

struct LineRef {
    const std::string* file_id;
    const IndexedLine* line;
};

std::vector<Match> run_on_lines(const RuleSet& rs, std::span<const LineRef> lines) {
    std::vector<Match> out;
    for (const LineRef& ref : lines) {
        const std::span<const Token> tokens(ref.line->tokens);
        for (const auto& rule : rs.pair_rules) {
            auto ms = match_pair_rule(rule, tokens, ref.line->text);
            out.insert(out.end(), std::make_move_iterator(ms.begin()),
                       std::make_move_iterator(ms.end()));
        }
        for (const auto& rule : rs.prefix_rules) {
            auto ms = match_prefix_rule(rule, tokens, ref.line->text);
            out.insert(out.end(), std::make_move_iterator(ms.begin()),
                       std::make_move_iterator(ms.end()));
        }
    }
    return out;
}

} // namespace

std::vector<Match> run(const RuleSet& rs, const CorpusIndex& idx, const RunOptions& opts) {
    std::vector<LineRef> lines;
    for (const auto& doc : idx.docs) {
        for (const auto& line : doc.lines) {
            lines.push_back({&doc.file_id, &line});
        }
    }

    std::vector<Match> all;
    const int workers = std::max(1, opts.workers);
    if (workers == 1 || lines.size() < 2) {
        all = run_on_lines(rs, lines);
    } else {
        const std::size_t chunks = std::min<std::size_t>(workers, lines.size());
        std::vector<std::vector<Match>> results(chunks);
        std::vector<std::thread> threads;
        threads.reserve(chunks);
        const std::size_t per_chunk = (lines.size() + chunks - 1) / chunks;
        for (std::size_t c = 0; c < chunks; ++c) {
            const std::size_t begin = c * per_chunk;
            const std::size_t end = std::min(lines.size(), begin + per_chunk);
            threads.emplace_back([&, c, begin, end] {
                results[c] = run_on_lines(
                    rs, std::span<const LineRef>(lines.data() + begin, end - begin));
            });
        }
        for (auto& t : threads) t.join();
        for (auto& chunk : results) {
            all.insert(all.end(), std::make_move_iterator(chunk.begin()),
                       std::make_move_iterator(chunk.end()));
        }
    }

    std::sort(all.begin(), all.end(), match_less);
    return all;
}

namespace {

constexpr std::string_view kMatchHeader =
    "rule_id\tfile\tline\tfirst_pos\tfirst_word\tsecond_pos\tsecond_word\tdistance\tcontext";

// TSV cannot carry tabs or newlines inside a field.
std::string tsv_safe(std::string_view s) {
    std::string out(s);
    for (char& c : out) {
        if (c == '\t' || c == '\n' || c == '\r') c = ' ';
    }
    return out;
}

int parse_int_field(std::string_view field, const std::string& what) {
    int value = 0;
    const auto* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw std::runtime_error("matches file: bad " + what + " '" + std::string(field) + "'");
    }
    return value;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        const std::size_t tab = line.find('\t', pos);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(pos));
            return fields;
        }
        fields.push_back(line.substr(pos, tab - pos));
        pos = tab + 1;
    }
}

std::vector<Match> parse_matches_tsv(std::string_view text) {
    std::vector<Match> out;
    std::size_t row = 0;
    for (const auto& line : split_lines(text)) {
        ++row;
        if (row == 1) {
            if (line != kMatchHeader) {
                throw std::runtime_error("matches file: unexpected TSV header");
            }
            continue;
        }
        if (line.empty()) continue;
        const auto fields = split_tabs(line);
        if (fields.size() != 9) {
            throw std::runtime_error("matches file row " + std::to_string(row) +
                                     ": expected 9 fields, got " + std::to_string(fields.size()));
        }
        Match m;
        m.rule_id = std::string(fields[0]);
        m.file_id = std::string(fields[1]);
        m.line = parse_int_field(fields[2], "line");
        m.first_pos = parse_int_field(fields[3], "first_pos");
        m.first_word = std::string(fields[4]);
        if (!fields[5].empty()) {
            m.second_pos = parse_int_field(fields[5], "second_pos");
            m.second_word = std::string(fields[6]);
            m.distance = parse_int_field(fields[7], "distance");
        } else if (!fields[6].empty() || !fields[7].empty()) {
            throw std::runtime_error("matches file row " + std::to_string(row) +
                                     ": second_word/distance without second_pos");
        }
        m.context = std::string(fields[8]);
        out.push_back(std::move(m));
    }
    return out;
}

std::vector<Match> parse_matches_json(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("matches file: ") + e.what());
    }
    if (!doc.is_array()) throw std::runtime_error("matches file: expected a JSON array");
    std::vector<Match> out;
    for (const auto& jm : doc) {
        Match m;
        m.rule_id = jm.at("rule_id").get<std::string>();
        m.file_id = jm.at("file").get<std::string>();
        m.line = jm.at("line").get<int>();
        m.first_pos = jm.at("first_pos").get<int>();
        m.first_word = jm.at("first_word").get<std::string>();
        if (jm.contains("second_pos") && !jm["second_pos"].is_null()) {
            m.second_pos = jm["second_pos"].get<int>();
            m.second_word = jm.at("second_word").get<std::string>();
            m.distance = jm.at("distance").get<int>();
        }
        m.context = jm.value("context", std::string());
        out.push_back(std::move(m));
    }
    return out;
}

} // namespace

std::string render_matches_tsv(std::span<const Match> matches) {
    std::string out(kMatchHeader);
    out.push_back('\n');
    for (const Match& m : matches) {
        out += tsv_safe(m.rule_id);
        out.push_back('\t');
        out += tsv_safe(m.file_id);
        out.push_back('\t');
        out += std::to_string(m.line);
        out.push_back('\t');
        out += std::to_string(m.first_pos);
        out.push_back('\t');
        out += tsv_safe(m.first_word);
        out.push_back('\t');
        if (m.second_pos) out += std::to_string(*m.second_pos);
        out.push_back('\t');
        if (m.second_word) out += tsv_safe(*m.second_word);
        out.push_back('\t');
        if (m.distance) out += std::to_string(*m.distance);
        out.push_back('\t');
        out += tsv_safe(m.context);
        out.push_back('\n');
    }
    return out;
}

std::string render_matches_json(std::span<const Match> matches) {
    ordered_json doc = ordered_json::array();
    for (const Match& m : matches) {
        ordered_json jm;
        jm["rule_id"] = m.rule_id;
        jm["file"] = m.file_id;
        jm["line"] = m.line;
        jm["first_pos"] = m.first_pos;
        jm["first_word"] = m.first_word;
        jm["second_pos"] = m.second_pos ? ordered_json(*m.second_pos) : ordered_json(nullptr);
        jm["second_word"] = m.second_word ? ordered_json(*m.second_word) : ordered_json(nullptr);
        jm["distance"] = m.distance ? ordered_json(*m.distance) : ordered_json(nullptr);
        jm["context"] = m.context;
        doc.push_back(std::move(jm));
    }
    return doc.dump(2) + "\n";
}

std::vector<Match> parse_matches(std::string_view text) {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '[') return parse_matches_json(text);
    return parse_matches_tsv(text);
}

std::string widen_context(const CorpusIndex& idx, const Match& m, int neighbor_lines) {
    const auto doc = std::find_if(idx.docs.begin(), idx.docs.end(),
                                  [&](const DocumentIndex& d) { return d.file_id == m.file_id; });
    if (doc == idx.docs.end() || m.line < 1 ||
        static_cast<std::size_t>(m.line) > doc->lines.size()) {
        return m.context;
    }
    const int last = static_cast<int>(doc->lines.size());
    const int from = std::max(1, m.line - neighbor_lines);
    const int to = std::min(last, m.line + neighbor_lines);
    std::string out;
    for (int ln = from; ln <= to; ++ln) {
        if (!out.empty()) out += " | ";
        out += doc->lines[static_cast<std::size_t>(ln - 1)].text; // lines are contiguous from 1
    }
    return out;
}

} // namespace surzhyk
