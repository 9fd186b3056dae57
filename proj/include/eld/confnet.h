// include/eld/confnet.h

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

#ifndef ELD_CONFNET_H_
#define ELD_CONFNET_H_

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace eld {

// The null-arc token.  Preserved by the parser, dropped when accumulating
// bag-of-words statistics.
inline constexpr const char *kEpsToken = "<eps>";

// Posteriors may carry small rounding excess from upstream decoders.
inline constexpr double kPosteriorSlack = 1e-6;
inline constexpr double kBinMassSlack = 1e-4;

// One utterance's confusion network ("sausage"): an ordered sequence of bins,
// each holding candidate words with posterior probabilities.  Posterior mass
// missing from a bin belongs to the null arc.
struct ConfusionNetwork {
  using Candidate = std::pair<std::string, double>;
  using Bin = std::vector<Candidate>;

  std::string utt_id;
  std::vector<Bin> bins;

  bool operator==(const ConfusionNetwork &) const = default;
};

// Soft bag-of-words counts for one utterance.  No epsilon entries, every
// stored count is > 0.
struct BagOfWords {
  std::string utt_id;
  std::map<std::string, double> counts;  // ordered for deterministic output
};

// Line format, one utterance per line:
//   <utt-id> [ <token> <posterior> <token> <posterior> ... ] [ ... ] ...
// Throws MalformedLine (with line number) or DuplicateUttId.
std::vector<ConfusionNetwork> parse_confnet_file(
    std::istream &in, const std::string &filename = "<stream>");
void write_confnet_file(std::ostream &out,
                        const std::vector<ConfusionNetwork> &networks);

// Sums candidate posteriors over bins: counts[t] = sum over bins of the
// posterior of t in that bin.  Tokens are case-folded to ASCII lowercase and
// <eps> is dropped.  Bin posteriors are not renormalized after the drop.
BagOfWords accumulate_bow(const ConfusionNetwork &cn);

// Joins the statistics of the same utterance decoded by two ASR systems.
// Tokens are namespaced "<tag>:<token>" before the union, so identical
// surface words from different vocabularies never collide; counts are
// concatenated, never summed across systems.
BagOfWords pool_bows(const BagOfWords &bow_a, const BagOfWords &bow_b,
                     const std::string &tag_a, const std::string &tag_b);

// Bag-of-words file: `<utt-id> <token>:<count> ...` per line.
std::vector<BagOfWords> read_bow_file(std::istream &in,
                                      const std::string &filename = "<stream>");
void write_bow_file(std::ostream &out, const std::vector<BagOfWords> &bows);

}  // namespace eld

#endif  // ELD_CONFNET_H_
