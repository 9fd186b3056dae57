// include/eld/corpus.h

// Copyright 2026  eldkit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef ELD_CORPUS_H_
#define ELD_CORPUS_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eld/confnet.h"

namespace eld {

// Token <-> column map with training totals.  Tokens are ordered
// lexicographically so that the same input always yields byte-identical
// vocabulary files, on every platform.
struct Vocabulary {
  std::vector<std::string> tokens;                  // column order
  std::unordered_map<std::string, int32_t> index;   // token -> column
  std::vector<double> total_count;                  // training soft-count total
  std::vector<int64_t> doc_freq;                    // #docs with count > 0

  int32_t size() const { return static_cast<int32_t>(tokens.size()); }
};

// Sparse row: (column, value) pairs with strictly increasing columns and no
// explicit zeros.
using SparseRow = std::vector<std::pair<int32_t, double>>;

inline double row_sum(const SparseRow &row) {
  double s = 0.0;
  for (const auto &[c, v] : row) s += v;
  return s;
}

struct DocTermMatrix {
  std::vector<std::string> utt_ids;
  std::vector<SparseRow> rows;
  int32_t num_cols = 0;

  int32_t num_rows() const { return static_cast<int32_t>(rows.size()); }
};

enum class LanguageTag { kEnglish, kNonEnglish, kMixed, kUnknown };

const std::string &tag_to_string(LanguageTag tag);
LanguageTag tag_from_string(std::string_view s, const std::string &context);

// utt_id -> tag.  Mixed/unknown rows stay in the manifest but are excluded
// from classifier training and from EER scoring.
struct LabelManifest {
  std::vector<std::pair<std::string, LanguageTag>> entries;  // file order
  std::unordered_map<std::string, LanguageTag> by_utt;

  void add(const std::string &utt_id, LanguageTag tag);
};

// Keeps exactly the tokens whose soft-count total over all documents is
// >= min_total_count.  Throws EmptyVocabulary if nothing survives.
Vocabulary build_vocabulary(const std::vector<BagOfWords> &bows,
                            double min_total_count);

struct VectorizeResult {
  DocTermMatrix matrix;
  std::vector<std::string> empty_utt_ids;  // rows left all-zero (OOV only)
};

// Out-of-vocabulary tokens are silently dropped; all-zero rows are kept and
// flagged.
VectorizeResult vectorize(const std::vector<BagOfWords> &bows,
                          const Vocabulary &vocab);

// TF-IDF with smoothed idf: idf(v) = ln((1+D) / (1+df_v)) + 1, computed on
// the training matrix; rows are then L2-normalized (all-zero rows stay zero).
class TfidfTransform {
 public:
  void fit(const DocTermMatrix &train);
  DocTermMatrix transform(const DocTermMatrix &m) const;  // throws NotFitted
  bool fitted() const { return fitted_; }
  const std::vector<double> &idf() const { return idf_; }

  void save(std::ostream &out) const;
  static TfidfTransform load(std::istream &in, const std::string &filename);

 private:
  std::vector<double> idf_;
  bool fitted_ = false;
};

// Vocabulary file: `<token> <column-id> <total_count> <doc_freq>` per line.
void write_vocab_file(std::ostream &out, const Vocabulary &vocab);
Vocabulary read_vocab_file(std::istream &in,
                           const std::string &filename = "<stream>");

// Sparse matrix file: header `V=<int> D=<int>`, then `<utt-id> <col>:<val> ...`.
void write_matrix_file(std::ostream &out, const DocTermMatrix &m);
DocTermMatrix read_matrix_file(std::istream &in,
                               const std::string &filename = "<stream>");

// Manifest: TSV `<utt-id>\t<tag>`.
void write_manifest(std::ostream &out, const LabelManifest &manifest);
LabelManifest read_manifest(std::istream &in,
                            const std::string &filename = "<stream>");

}  // namespace eld

#endif  // ELD_CORPUS_H_
