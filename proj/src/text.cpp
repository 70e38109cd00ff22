// Copyright the surzhyk-tools authors. SPDX-License-Identifier: Apache-2.0
#include "surzhyk/text.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "surzhyk/errors.hpp"
#include "surzhyk/unicode.hpp"

namespace surzhyk {

namespace {

std::u32string normalize_cps(std::u32string_view cps) {
    std::u32string lowered;
    lowered.reserve(cps.size());
    for (char32_t cp : cps) lowered.push_back(uni::to_lower(cp));
    return uni::compose_nfc(lowered);
}

bool keep_in_token(char32_t cp) {
    return uni::is_word_char(cp) || uni::is_apostrophe(cp) || uni::is_hyphen(cp);
}

bool edge_trimmable(char32_t cp) {
    return uni::is_apostrophe(cp) || uni::is_hyphen(cp);
}

void tokenize_line(std::u32string_view line_cps, const std::string& file_id, int line_no,
                   std::vector<Token>& out) {
    int position = 0;
    std::size_t i = 0;
    const std::size_t n = line_cps.size();
    while (i < n) {
        while (i < n && uni::is_white_space(line_cps[i])) ++i;
        const std::size_t start = i;
        while (i < n && !uni::is_white_space(line_cps[i])) ++i;
        if (start == i) break;

        std::u32string kept;
        for (char32_t cp : line_cps.substr(start, i - start)) {
            if (keep_in_token(cp)) kept.push_back(cp);
        }
        std::size_t lo = 0;
        std::size_t hi = kept.size();
        while (lo < hi && edge_trimmable(kept[lo])) ++lo;
        while (hi > lo && edge_trimmable(kept[hi - 1])) --hi;
        if (lo == hi) continue; // stripped to nothing: no position consumed

        ++position;
        const std::u32string word = kept.substr(lo, hi - lo);
        out.push_back(Token{file_id, line_no, position, uni::encode_utf8(word),
                            static_cast<int>(word.size())});
    }
}

// Lines are already decoded; only normalization and tokenization remain.
DocumentIndex build_document(const std::string& file_id,
                             const std::vector<std::u32string>& raw_cp_lines) {
    DocumentIndex doc;
    doc.file_id = file_id;
    doc.lines.reserve(raw_cp_lines.size());
    int line_no = 0;
    for (const auto& raw : raw_cp_lines) {
        ++line_no;
        const std::u32string norm = normalize_cps(raw);
        IndexedLine il;
        il.line = line_no;
        il.text = uni::encode_utf8(norm);
        tokenize_line(norm, file_id, line_no, il.tokens);
        doc.lines.push_back(std::move(il));
    }
    return doc;
}

std::vector<std::u32string> split_cp_lines(std::u32string_view cps) {
    std::vector<std::u32string> lines;
    std::u32string current;
    for (char32_t cp : cps) {
        if (cp == U'\n') {
            if (!current.empty() && current.back() == U'\r') current.pop_back();
            lines.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(cp);
        }
    }
    if (!current.empty()) {
        if (current.back() == U'\r') current.pop_back();
        lines.push_back(std::move(current));
    }
    return lines;
}

} // namespace

std::vector<Token> CorpusIndex::flatten() const {
    std::vector<Token> out;
    for (const auto& doc : docs) {
        for (const auto& line : doc.lines) {
            out.insert(out.end(), line.tokens.begin(), line.tokens.end());
        }
    }
    return out;
}

std::string normalize(std::string_view raw) {
    return uni::encode_utf8(normalize_cps(uni::decode_utf8(raw)));
}

std::vector<Token> tokenize(const Document& doc) {
    std::vector<Token> out;
    int line_no = 0;
    for (const auto& line : doc.lines) {
        ++line_no;
        tokenize_line(uni::decode_utf8(line), doc.file_id, line_no, out);
    }
    return out;
}

std::vector<std::string> split_lines(std::string_view raw) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < raw.size()) {
        std::size_t nl = raw.find('\n', pos);
        std::string_view line =
            raw.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.emplace_back(line);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return lines;
}

CorpusIndex index_documents(const std::vector<Document>& docs) {
    std::set<std::string> seen;
    for (const auto& doc : docs) {
        if (!seen.insert(doc.file_id).second) {
            throw std::invalid_argument("duplicate file_id '" + doc.file_id + "'");
        }
    }

    CorpusIndex index;
    index.docs.reserve(docs.size());
    for (const auto& doc : docs) {
        std::vector<std::u32string> cp_lines;
        cp_lines.reserve(doc.lines.size());
        std::size_t base_offset = 0; // offset into lines joined with '\n'
        for (const auto& raw : doc.lines) {
            try {
                cp_lines.push_back(uni::decode_utf8(raw));
            } catch (const uni::Utf8Error& e) {
                throw DecodeError(doc.file_id, base_offset + e.byte_offset());
            }
            base_offset += raw.size() + 1;
        }
        index.docs.push_back(build_document(doc.file_id, cp_lines));
    }
    std::sort(index.docs.begin(), index.docs.end(),
              [](const DocumentIndex& a, const DocumentIndex& b) { return a.file_id < b.file_id; });
    return index;
}

CorpusIndex index_corpus(const std::vector<std::string>& paths) {
    std::set<std::string> seen;
    for (const auto& path : paths) {
        if (!seen.insert(path).second) {
            throw std::invalid_argument("duplicate file_id '" + path + "'");
        }
    }

    CorpusIndex index;
    index.docs.reserve(paths.size());
    for (const auto& path : paths) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw IoError(path, "no such file or not readable");
        std::ostringstream buf;
        buf << in.rdbuf();
        if (in.bad()) throw IoError(path, "read failure");
        const std::string bytes = buf.str();

        std::u32string cps;
        try {
            cps = uni::decode_utf8(bytes);
        } catch (const uni::Utf8Error& e) {
            throw DecodeError(path, e.byte_offset());
        }
        index.docs.push_back(build_document(path, split_cp_lines(cps)));
    }
    std::sort(index.docs.begin(), index.docs.end(),
              [](const DocumentIndex& a, const DocumentIndex& b) { return a.file_id < b.file_id; });
    return index;
}

} // namespace surzhyk
