#pragma once

#include <map>
#include <string>
#include <vector>

#include "weakseq/errors.hpp"

namespace weakseq {

// Ordered entity label set with a BIO tag encoding. Tag 0 is always O;
// label k owns tags 2k+1 (B-) and 2k+2 (I-), so there are 2*L+1 tags.
// The optional mapping renames foreign labels into this scheme (every
// mapping target must be a label of this scheme).
class LabelScheme {
 public:
  static constexpr int kOutside = 0;

  LabelScheme() = default;

  static LabelScheme make(std::vector<std::string> labels,
                          std::map<std::string, std::string> mapping = {});

  int num_labels() const { return static_cast<int>(labels_.size()); }
  int num_tags() const { return 2 * static_cast<int>(labels_.size()) + 1; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::map<std::string, std::string>& mapping() const { return mapping_; }

  bool has_label(const std::string& label) const;
  int label_index(const std::string& label) const;  // -1 when absent

  int begin_tag(int label) const { return 2 * label + 1; }
  int inside_tag(int label) const { return 2 * label + 2; }
  int tag_label(int tag) const { return tag == 0 ? -1 : (tag - 1) / 2; }
  bool is_begin(int tag) const { return tag > 0 && (tag - 1) % 2 == 0; }

  std::string tag_name(int tag) const;
  // "O" / "B-X" / "I-X" -> tag index; -1 when malformed or X unknown.
  int tag_index(const std::string& tag) const;

  bool operator==(const LabelScheme& other) const {
    return labels_ == other.labels_ && mapping_ == other.mapping_;
  }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::string> mapping_;
  std::map<std::string, int> label_index_;
};

}  // namespace weakseq
