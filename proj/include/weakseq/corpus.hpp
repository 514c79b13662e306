#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weakseq/scheme.hpp"

namespace weakseq {

struct Dep {
  std::string rel;
  int head = -1;  // token index within the document

  bool operator==(const Dep&) const = default;
};

struct Token {
  std::string text;
  int start = 0;  // character offsets into Document::text
  int end = 0;
  std::string pos;  // empty = not annotated
  std::optional<Dep> dep;

  bool operator==(const Token&) const = default;
};

// Immutable after construction; sentence ranges partition the token span.
struct Document {
  std::string id;
  std::string text;
  std::vector<Token> tokens;
  std::vector<std::pair<int, int>> sentences;  // [first,last) token ranges
  std::vector<int> gold;                       // gold tag ids; empty when unlabelled

  int size() const { return static_cast<int>(tokens.size()); }
  int sentence_of(int token) const;  // -1 when out of range
  bool has_pos() const;
  bool has_dep() const;
};

void validate_document(const Document& doc);

struct Corpus {
  std::vector<Document> docs;
};

struct Span {
  std::string doc_id;
  int first = 0;
  int last = 0;   // exclusive
  int label = 0;  // index into LabelScheme::labels()
  double score = 1.0;

  bool same_place(const Span& o) const {
    return first == o.first && last == o.last && label == o.label;
  }
};

// BIO tags for a span set; tokens outside every span get O. Overlapping
// spans are a DataError naming the conflicting pair.
std::vector<int> spans_to_tags(const Document& doc, const std::vector<Span>& spans,
                               const LabelScheme& scheme);

// Inverse of spans_to_tags on valid BIO. An I-X that does not continue an
// X span is read as B-X, so every tag sequence decodes.
std::vector<Span> tags_to_spans(const std::vector<int>& tags, const LabelScheme& scheme,
                                const std::string& doc_id = "");

// Canonicalise a tag sequence through the span round trip.
std::vector<int> bio_repair(const std::vector<int>& tags, const LabelScheme& scheme);

}  // namespace weakseq
