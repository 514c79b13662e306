#pragma once

#include <map>
#include <string>
#include <vector>

#include "weakseq/corpus.hpp"

namespace weakseq {

// Sparse probabilistic token predictions of one labelling function. An
// absent token index means the function abstains there, which is not the
// same as predicting O with probability 1.
struct ProbAnnotation {
  std::string function;
  std::map<int, std::vector<double>> entries;  // token -> simplex vector over tags

  bool empty() const { return entries.empty(); }
};

// Checks indices in [0,n), vector length T, components >= 0, sum within
// 1e-9 of 1.
void validate_annotation(const ProbAnnotation& ann, int n_tokens, int num_tags);

std::vector<double> one_hot(int tag, int num_tags);

struct AnnotatedDoc {
  std::string doc_id;
  int n_tokens = 0;
  std::map<std::string, ProbAnnotation> functions;
};

struct AnnotatedCorpus {
  std::vector<AnnotatedDoc> docs;

  std::vector<std::string> function_names() const;  // sorted union
  const AnnotatedDoc* find(const std::string& doc_id) const;
  // Copy token counts from the corpus (matched by id); DataError when an
  // annotated id has no corpus document.
  void align_with(const Corpus& corpus);
};

}  // namespace weakseq
