#pragma once

#include <iosfwd>
#include <string>

#include "weakseq/corpus.hpp"

namespace weakseq {

// Whitespace-column token-per-line format: token in column 0, tag in the
// last column, POS in column 1 when a line has three or more columns.
// Blank lines break sentences, "-DOCSTART-" in column 0 breaks documents.
// IOB tag chains are normalised to BIO on read.
Corpus parse_conll(std::istream& in, const LabelScheme& scheme);
Corpus parse_conll_file(const std::string& path, const LabelScheme& scheme);

void write_conll(std::ostream& out, const Corpus& corpus, const LabelScheme& scheme);
void write_conll_file(const std::string& path, const Corpus& corpus, const LabelScheme& scheme);

// Same layout with `tags` (one sequence per document) in the tag column.
void write_conll_tags(std::ostream& out, const Corpus& corpus,
                      const std::vector<std::vector<int>>& tags, const LabelScheme& scheme);

}  // namespace weakseq
