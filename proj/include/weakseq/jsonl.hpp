#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "weakseq/annotation.hpp"
#include "weakseq/corpus.hpp"

namespace weakseq {

// One document per line:
//   {"id","text","tokens":[{"text","start","end","pos"?,"dep":{"rel","head"}?}],
//    "sentences":[[i,j],...],"gold":["B-PER",...]?}
Corpus read_documents_jsonl(std::istream& in, const LabelScheme& scheme);
Corpus read_documents_jsonl_file(const std::string& path, const LabelScheme& scheme);
void write_documents_jsonl(std::ostream& out, const Corpus& corpus, const LabelScheme& scheme);
void write_documents_jsonl_file(const std::string& path, const Corpus& corpus,
                                const LabelScheme& scheme);

// Reads either format by extension: .jsonl/.json -> JSONL, otherwise CoNLL.
Corpus read_corpus_auto(const std::string& path, const LabelScheme& scheme);

// One document per line: {"doc_id","functions":{name:{token_index:[p...]}}}
void write_annotations_jsonl(std::ostream& out, const AnnotatedCorpus& anns);
void write_annotations_jsonl_file(const std::string& path, const AnnotatedCorpus& anns);
AnnotatedCorpus read_annotations_jsonl(std::istream& in, int num_tags);
AnnotatedCorpus read_annotations_jsonl_file(const std::string& path, int num_tags);

// One document per line: {"doc_id","marginals":[[p...],...]}
using DocMarginals = std::pair<std::string, std::vector<std::vector<double>>>;
void write_marginals_jsonl(std::ostream& out, const std::vector<DocMarginals>& marginals);
void write_marginals_jsonl_file(const std::string& path,
                                const std::vector<DocMarginals>& marginals);
std::vector<DocMarginals> read_marginals_jsonl(std::istream& in, int num_tags);
std::vector<DocMarginals> read_marginals_jsonl_file(const std::string& path, int num_tags);

}  // namespace weakseq
