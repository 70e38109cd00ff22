// Copyright the surzhyk-tools authors. SPDX-License-Identifier: Apache-2.0
#include "surzhyk/rules.hpp"

#include <set>
#include <utility>

#include <json.hpp>

#include "surzhyk/errors.hpp"
#include "surzhyk/text.hpp"
#include "surzhyk/unicode.hpp"

namespace surzhyk {

using ordered_json = nlohmann::ordered_json;

Constraint Constraint::equals(ConstraintTarget t, std::string word) {
    Constraint c;
    c.target = t;
    c.kind = ConstraintKind::exact_equals;
    c.text = std::move(word);
    return c;
}

Constraint Constraint::longer_than(ConstraintTarget t, int n) {
    Constraint c;
    c.target = t;
    c.kind = ConstraintKind::char_len_greater_than;
    c.min_char_len = n;
    return c;
}

namespace {

PatternAnchor word(std::string text) { return {AnchorMode::exact_word, std::move(text)}; }
PatternAnchor ends(std::string text) { return {AnchorMode::ends_with, std::move(text)}; }

PairRule pair_rule(std::string id, RuleGroup group, PatternAnchor first, PatternAnchor second,
                   std::vector<Constraint> constraints = {}) {
    PairRule r;
    r.id = std::move(id);
    r.group = group;
    r.first = std::move(first);
    r.second = std::move(second);
    r.max_distance = 3;
    r.constraints = std::move(constraints);
    return r;
}

// The four hybrid first-person-plural endings the specific rules cycle over.
const char* const kPluralEndings[4] = {"ем", "єм", "им", "їм"};

RuleSet general_rules(AnchorEncoding enc) {
    RuleSet rs;
    rs.name = "general";
    const bool suffix_only = enc == AnchorEncoding::suffix_only;
    // G1's table row explicitly demands the whole word; under suffix_only the
    // demand moves from the anchor into a post-filter.
    if (suffix_only) {
        rs.pair_rules.push_back(pair_rule(
            "G1", RuleGroup::general, ends("ми"), ends("м"),
            {Constraint::equals(ConstraintTarget::first, "ми")}));
        rs.pair_rules.push_back(pair_rule("G2", RuleGroup::general, ends("самі"), ends("м")));
    } else {
        rs.pair_rules.push_back(pair_rule("G1", RuleGroup::general, word("ми"), ends("м")));
        rs.pair_rules.push_back(pair_rule("G2", RuleGroup::general, word("самі"), ends("м")));
    }
    rs.pair_rules.push_back(pair_rule("G3", RuleGroup::general, ends("м"), ends("ти"),
                                      {Constraint::longer_than(ConstraintTarget::second, 2)}));
    rs.pair_rules.push_back(pair_rule("G4", RuleGroup::general, ends("м"), ends("ть")));
    return rs;
}

RuleSet specific_rules(AnchorEncoding enc) {
    RuleSet rs;
    rs.name = "specific";
    const bool suffix_only = enc == AnchorEncoding::suffix_only;
    auto anchor = [&](const char* text) { return suffix_only ? ends(text) : word(text); };

    int num = 1;
    for (const char* ending : kPluralEndings) { // S1..S4: ми + ending
        std::vector<Constraint> cs;
        if (num == 4) cs.push_back(Constraint::longer_than(ConstraintTarget::second, 2));
        rs.pair_rules.push_back(pair_rule("S" + std::to_string(num), RuleGroup::specific,
                                          anchor("ми"), ends(ending), std::move(cs)));
        ++num;
    }
    for (const char* ending : kPluralEndings) { // S5..S8: самі + ending
        std::vector<Constraint> cs;
        if (num == 8) cs.push_back(Constraint::longer_than(ConstraintTarget::second, 2));
        rs.pair_rules.push_back(pair_rule("S" + std::to_string(num), RuleGroup::specific,
                                          anchor("самі"), ends(ending), std::move(cs)));
        ++num;
    }
    for (const char* ending : kPluralEndings) { // S9..S12: ending + -ти
        std::vector<Constraint> cs{Constraint::longer_than(ConstraintTarget::second, 2)};
        if (num == 12) cs.push_back(Constraint::longer_than(ConstraintTarget::first, 2));
        rs.pair_rules.push_back(pair_rule("S" + std::to_string(num), RuleGroup::specific,
                                          ends(ending), ends("ти"), std::move(cs)));
        ++num;
    }
    for (const char* ending : kPluralEndings) { // S13..S16: ending + -ть
        std::vector<Constraint> cs;
        if (num == 16) cs.push_back(Constraint::longer_than(ConstraintTarget::first, 2));
        rs.pair_rules.push_back(pair_rule("S" + std::to_string(num), RuleGroup::specific,
                                          ends(ending), ends("ть"), std::move(cs)));
        ++num;
    }
    return rs;
}

RuleSet prefix_rules() {
    RuleSet rs;
    rs.name = "prefix";
    PrefixRule p;
    p.id = "P1";
    p.prefix = "под";
    p.min_char_len_exclusive = 3;
    rs.prefix_rules.push_back(std::move(p));
    return rs;
}

bool is_normalized_pattern_text(const std::string& text) {
    if (text.empty()) return false;
    try {
        for (char32_t cp : uni::decode_utf8(text)) {
            if (uni::is_white_space(cp)) return false;
        }
        return normalize(text) == text;
    } catch (const uni::Utf8Error&) {
        return false;
    }
}

void validate_anchor(const std::string& rule_id, const char* which, const PatternAnchor& a,
                     std::vector<std::string>& out) {
    if (!is_normalized_pattern_text(a.text)) {
        out.push_back(rule_id + ": " + which +
                      " pattern text must be non-empty, normalized and without whitespace");
    }
}

} // namespace

RuleSet builtin_ruleset(BuiltinSet which, AnchorEncoding encoding) {
    switch (which) {
        case BuiltinSet::general: return general_rules(encoding);
        case BuiltinSet::specific: return specific_rules(encoding);
        case BuiltinSet::prefix: return prefix_rules();
        case BuiltinSet::all: break;
    }
    RuleSet all = general_rules(encoding);
    all.name = "all";
    RuleSet specific = specific_rules(encoding);
    for (auto& r : specific.pair_rules) all.pair_rules.push_back(std::move(r));
    RuleSet prefix = prefix_rules();
    for (auto& r : prefix.prefix_rules) all.prefix_rules.push_back(std::move(r));
    return all;
}

std::optional<BuiltinSet> parse_builtin_name(std::string_view name) {
    if (name == "general") return BuiltinSet::general;
    if (name == "specific") return BuiltinSet::specific;
    if (name == "prefix") return BuiltinSet::prefix;
    if (name == "all") return BuiltinSet::all;
    return std::nullopt;
}

std::vector<std::string> validate_rule(const PairRule& rule) {
    std::vector<std::string> out;
    const std::string id = rule.id.empty() ? "<unnamed>" : rule.id;
    if (rule.id.empty()) out.push_back("<unnamed>: rule id must be non-empty");
    if (rule.max_distance < 1) out.push_back(id + ": max_distance must be >= 1");
    validate_anchor(id, "first", rule.first, out);
    validate_anchor(id, "second", rule.second, out);
    if (rule.second.mode != AnchorMode::ends_with) {
        out.push_back(id + ": second pattern must be ends_with");
    }
    for (const auto& c : rule.constraints) {
        if (c.kind == ConstraintKind::exact_equals) {
            if (!is_normalized_pattern_text(c.text)) {
                out.push_back(id +
                              ": exact_equals constraint value must be non-empty, normalized and "
                              "without whitespace");
            }
        } else if (c.min_char_len < 1) {
            out.push_back(id + ": char_len_greater_than constraint value must be >= 1");
        }
    }
    return out;
}

std::vector<std::string> validate_rule(const PrefixRule& rule) {
    std::vector<std::string> out;
    const std::string id = rule.id.empty() ? "<unnamed>" : rule.id;
    if (rule.id.empty()) out.push_back("<unnamed>: rule id must be non-empty");
    if (!is_normalized_pattern_text(rule.prefix)) {
        out.push_back(id + ": prefix must be non-empty, normalized and without whitespace");
    } else {
        const auto prefix_len = static_cast<int>(uni::count_codepoints(rule.prefix));
        if (rule.min_char_len_exclusive < prefix_len) {
            out.push_back(id + ": min_char_len_exclusive must be >= length(prefix)");
        }
    }
    if (rule.min_char_len_exclusive < 1) {
        out.push_back(id + ": min_char_len_exclusive must be >= 1");
    }
    return out;
}

std::vector<std::string> validate_ruleset(const RuleSet& rs) {
    std::vector<std::string> out;
    std::set<std::string> ids;
    auto check_id = [&](const std::string& id) {
        if (!id.empty() && !ids.insert(id).second) {
            out.push_back("duplicate rule id '" + id + "'");
        }
    };
    for (const auto& r : rs.pair_rules) {
        auto v = validate_rule(r);
        out.insert(out.end(), v.begin(), v.end());
        check_id(r.id);
    }
    for (const auto& r : rs.prefix_rules) {
        auto v = validate_rule(r);
        out.insert(out.end(), v.begin(), v.end());
        check_id(r.id);
    }
    return out;
}

std::string_view to_string(AnchorMode mode) {
    switch (mode) {
        case AnchorMode::exact_word: return "exact_word";
        case AnchorMode::ends_with: return "ends_with";
        case AnchorMode::starts_with: return "starts_with";
    }
    return "?";
}

std::string_view to_string(RuleGroup group) {
    switch (group) {
        case RuleGroup::general: return "general";
        case RuleGroup::specific: return "specific";
        case RuleGroup::user: return "user";
    }
    return "?";
}

std::string_view to_string(ConstraintTarget target) {
    return target == ConstraintTarget::first ? "first" : "second";
}

std::string_view to_string(ConstraintKind kind) {
    return kind == ConstraintKind::exact_equals ? "exact_equals" : "char_len_greater_than";
}

namespace {

void reject_unknown_keys(const ordered_json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) throw RuleFileError(where + ": unknown key '" + item.key() + "'");
    }
}

std::string require_string(const ordered_json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) throw RuleFileError(where + ": missing key '" + key + "'");
    if (!obj[key].is_string()) throw RuleFileError(where + ": '" + key + "' must be a string");
    return obj[key].get<std::string>();
}

int require_positive_int(const ordered_json& obj, const char* key, const std::string& where) {
    if (!obj.contains(key)) throw RuleFileError(where + ": missing key '" + key + "'");
    if (!obj[key].is_number_integer()) {
        throw RuleFileError(where + ": '" + key + "' must be an integer");
    }
    const auto v = obj[key].get<std::int64_t>();
    if (v < 1 || v > 1'000'000) {
        throw RuleFileError(where + ": '" + key + "' must be a positive integer");
    }
    return static_cast<int>(v);
}

AnchorMode parse_mode(const std::string& text, const std::string& where) {
    if (text == "exact_word") return AnchorMode::exact_word;
    if (text == "ends_with") return AnchorMode::ends_with;
    if (text == "starts_with") return AnchorMode::starts_with;
    throw RuleFileError(where + ": unknown mode '" + text + "'");
}

PatternAnchor parse_anchor(const ordered_json& obj, const std::string& where) {
    if (!obj.is_object()) throw RuleFileError(where + ": pattern must be an object");
    reject_unknown_keys(obj, {"mode", "text"}, where);
    PatternAnchor a;
    a.mode = parse_mode(require_string(obj, "mode", where), where);
    a.text = require_string(obj, "text", where);
    return a;
}

Constraint parse_constraint(const ordered_json& obj, const std::string& where) {
    if (!obj.is_object()) throw RuleFileError(where + ": constraint must be an object");
    reject_unknown_keys(obj, {"target", "kind", "value"}, where);
    const std::string target = require_string(obj, "target", where);
    const std::string kind = require_string(obj, "kind", where);
    ConstraintTarget t;
    if (target == "first") {
        t = ConstraintTarget::first;
    } else if (target == "second") {
        t = ConstraintTarget::second;
    } else {
        throw RuleFileError(where + ": unknown constraint target '" + target + "'");
    }
    if (kind == "exact_equals") {
        return Constraint::equals(t, require_string(obj, "value", where));
    }
    if (kind == "char_len_greater_than") {
        return Constraint::longer_than(t, require_positive_int(obj, "value", where));
    }
    throw RuleFileError(where + ": unknown constraint kind '" + kind + "'");
}

PairRule parse_pair_rule(const ordered_json& obj) {
    if (!obj.is_object()) throw RuleFileError("pair rule must be an object");
    const std::string id =
        obj.contains("id") && obj["id"].is_string() ? obj["id"].get<std::string>() : "";
    const std::string where = "pair rule '" + (id.empty() ? "<unnamed>" : id) + "'";
    reject_unknown_keys(obj, {"id", "group", "first", "second", "max_distance", "constraints"},
                        where);
    PairRule r;
    r.id = require_string(obj, "id", where);
    if (obj.contains("group")) {
        const std::string group = require_string(obj, "group", where);
        if (group == "general") {
            r.group = RuleGroup::general;
        } else if (group == "specific") {
            r.group = RuleGroup::specific;
        } else if (group == "user") {
            r.group = RuleGroup::user;
        } else {
            throw RuleFileError(where + ": unknown group '" + group + "'");
        }
    }
    if (!obj.contains("first")) throw RuleFileError(where + ": missing key 'first'");
    if (!obj.contains("second")) throw RuleFileError(where + ": missing key 'second'");
    r.first = parse_anchor(obj["first"], where + " first");
    r.second = parse_anchor(obj["second"], where + " second");
    r.max_distance = require_positive_int(obj, "max_distance", where);
    if (obj.contains("constraints")) {
        if (!obj["constraints"].is_array()) {
            throw RuleFileError(where + ": 'constraints' must be an array");
        }
        for (const auto& c : obj["constraints"]) {
            r.constraints.push_back(parse_constraint(c, where + " constraint"));
        }
    }
    return r;
}

PrefixRule parse_prefix_rule(const ordered_json& obj) {
    if (!obj.is_object()) throw RuleFileError("prefix rule must be an object");
    const std::string id =
        obj.contains("id") && obj["id"].is_string() ? obj["id"].get<std::string>() : "";
    const std::string where = "prefix rule '" + (id.empty() ? "<unnamed>" : id) + "'";
    reject_unknown_keys(obj, {"id", "prefix", "min_char_len_exclusive"}, where);
    PrefixRule r;
    r.id = require_string(obj, "id", where);
    r.prefix = require_string(obj, "prefix", where);
    r.min_char_len_exclusive = require_positive_int(obj, "min_char_len_exclusive", where);
    return r;
}

} // namespace

RuleSet parse_ruleset(std::string_view json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw RuleFileError(std::string("rule file syntax error: ") + e.what());
    }
    if (!doc.is_object()) throw RuleFileError("rule file must be a JSON object");
    reject_unknown_keys(doc, {"name", "pair_rules", "prefix_rules"}, "rule file");

    RuleSet rs;
    rs.name = doc.contains("name") ? require_string(doc, "name", "rule file") : "user";
    if (doc.contains("pair_rules")) {
        if (!doc["pair_rules"].is_array()) throw RuleFileError("'pair_rules' must be an array");
        for (const auto& r : doc["pair_rules"]) rs.pair_rules.push_back(parse_pair_rule(r));
    }
    if (doc.contains("prefix_rules")) {
        if (!doc["prefix_rules"].is_array()) throw RuleFileError("'prefix_rules' must be an array");
        for (const auto& r : doc["prefix_rules"]) rs.prefix_rules.push_back(parse_prefix_rule(r));
    }

    auto violations = validate_ruleset(rs);
    if (!violations.empty()) {
        std::string message = "invalid rule set";
        for (const auto& v : violations) message += "\n  " + v;
        throw RuleFileError(message, std::move(violations));
    }
    return rs;
}

std::string render_ruleset(const RuleSet& rs) {
    ordered_json doc;
    doc["name"] = rs.name;
    doc["pair_rules"] = ordered_json::array();
    for (const auto& r : rs.pair_rules) {
        ordered_json jr;
        jr["id"] = r.id;
        jr["group"] = to_string(r.group);
        jr["first"] = {{"mode", to_string(r.first.mode)}, {"text", r.first.text}};
        jr["second"] = {{"mode", to_string(r.second.mode)}, {"text", r.second.text}};
        jr["max_distance"] = r.max_distance;
        jr["constraints"] = ordered_json::array();
        for (const auto& c : r.constraints) {
            ordered_json jc;
            jc["target"] = to_string(c.target);
            jc["kind"] = to_string(c.kind);
            if (c.kind == ConstraintKind::exact_equals) {
                jc["value"] = c.text;
            } else {
                jc["value"] = c.min_char_len;
            }
            jr["constraints"].push_back(std::move(jc));
        }
        doc["pair_rules"].push_back(std::move(jr));
    }
    doc["prefix_rules"] = ordered_json::array();
    for (const auto& r : rs.prefix_rules) {
        ordered_json jr;
        jr["id"] = r.id;
        jr["prefix"] = r.prefix;
        jr["min_char_len_exclusive"] = r.min_char_len_exclusive;
        doc["prefix_rules"].push_back(std::move(jr));
    }
    return doc.dump(2) + "\n";
}

} // namespace surzhyk
