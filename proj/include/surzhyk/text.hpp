// Copyright the surzhyk-tools authors. SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace surzhyk {

/// One word of a corpus line. surface is normalized (lowercase, NFC);
/// line and position are 1-based; char_len counts Unicode scalar values,
/// not bytes.
struct Token {
    std::string file_id;
    int line = 0;
    int position = 0;
    std::string surface;
    int char_len = 0;

    bool operator==(const Token&) const = default;
};

/// Raw text of one corpus file, split into lines (1-based numbering,
/// empty lines kept).
struct Document {
    std::string file_id;
    std::vector<std::string> lines;
};

/// One (file, line) group of the index. text is the full normalized line,
/// kept for match context; tokens are ordered by position.
struct IndexedLine {
    int line = 0;
    std::string text;
    std::vector<Token> tokens;
};

struct DocumentIndex {
    std::string file_id;
    std::vector<IndexedLine> lines; // ascending line numbers, no gaps
};

/// Tokenized corpus. Documents are ordered by file_id (lexicographic),
/// lines ascending within each document.
struct CorpusIndex {
    std::vector<DocumentIndex> docs;

    /// All tokens in index order.
    std::vector<Token> flatten() const;
};

/// Lowercases (simple per-codepoint mapping) and canonically composes (NFC).
/// Idempotent. Throws uni::Utf8Error on malformed input.
std::string normalize(std::string_view raw);

/// Splits normalized lines into position-indexed tokens. Candidates come
/// from whitespace splitting; non-word characters are dropped except
/// word-internal apostrophes and hyphens; candidates that strip to nothing
/// do not consume a position.
std::vector<Token> tokenize(const Document& doc);

/// Splits raw file content into lines (\n or \r\n, both accepted).
std::vector<std::string> split_lines(std::string_view raw);

/// Builds the index for already-loaded documents (raw, un-normalized lines).
/// Throws DecodeError (with file_id and byte offset into the document's
/// joined content) and std::invalid_argument on duplicate file_id.
CorpusIndex index_documents(const std::vector<Document>& docs);

/// Reads, normalizes and tokenizes the given files. file_id is the path as
/// given. Throws IoError / DecodeError.
CorpusIndex index_corpus(const std::vector<std::string>& paths);

} // namespace surzhyk
