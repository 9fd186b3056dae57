// src/confnet.cc

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

#include "eld/confnet.h"

#include <istream>
#include <ostream>
#include <unordered_set>

#include "eld/errors.h"
#include "eld/io.h"

namespace eld {

std::vector<ConfusionNetwork> parse_confnet_file(std::istream &in,
                                                 const std::string &filename) {
  std::vector<ConfusionNetwork> networks;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_ws(line);
    if (fields.empty()) continue;

    ConfusionNetwork cn;
    cn.utt_id = std::string(fields[0]);
    if (cn.utt_id == "[" || cn.utt_id == "]") {
      throw MalformedLine(filename, line_no, "missing utterance id");
    }
    if (!seen_ids.insert(cn.utt_id).second) {
      throw DuplicateUttId(filename + ":" + std::to_string(line_no) +
                           ": duplicate utterance id '" + cn.utt_id + "'");
    }

    size_t i = 1;
    while (i < fields.size()) {
      if (fields[i] != "[") {
        throw MalformedLine(filename, line_no,
                            "expected '[' to open a bin, got '" +
                                std::string(fields[i]) + "'");
      }
      ++i;
      ConfusionNetwork::Bin bin;
      double bin_mass = 0.0;
      while (i < fields.size() && fields[i] != "]") {
        std::string token(fields[i]);
        if (token == "[") {
          throw MalformedLine(filename, line_no, "nested '[' inside a bin");
        }
        ++i;
        if (i >= fields.size() || fields[i] == "]" || fields[i] == "[") {
          throw MalformedLine(filename, line_no,
                              "token '" + token + "' has no posterior");
        }
        double post = parse_double(
            fields[i], filename + ":" + std::to_string(line_no));
        ++i;
        if (post < 0.0 || post > 1.0 + kPosteriorSlack) {
          throw MalformedLine(filename, line_no,
                              "posterior " + fmt_double(post) +
                                  " outside [0, 1] for token '" + token + "'");
        }
        bin_mass += post;
        bin.emplace_back(std::move(token), post);
      }
      if (i >= fields.size()) {
        throw MalformedLine(filename, line_no, "unbalanced brackets: missing ']'");
      }
      ++i;  // consume ']'
      if (bin_mass > 1.0 + kBinMassSlack) {
        throw MalformedLine(filename, line_no,
                            "bin posterior mass " + fmt_double(bin_mass) +
                                " exceeds 1");
      }
      cn.bins.push_back(std::move(bin));
    }
    networks.push_back(std::move(cn));
  }
  return networks;
}

void write_confnet_file(std::ostream &out,
                        const std::vector<ConfusionNetwork> &networks) {
  for (const auto &cn : networks) {
    out << cn.utt_id;
    for (const auto &bin : cn.bins) {
      out << " [";
      for (const auto &[token, post] : bin) {
        out << ' ' << token << ' ' << fmt_double(post);
      }
      out << " ]";
    }
    out << '\n';
  }
}

BagOfWords accumulate_bow(const ConfusionNetwork &cn) {
  BagOfWords bow;
  bow.utt_id = cn.utt_id;
  for (const auto &bin : cn.bins) {
    for (const auto &[token, post] : bin) {
      if (token == kEpsToken) continue;
      bow.counts[to_lower_ascii(token)] += post;
    }
  }
  // Zero-posterior candidates must not leave explicit zero entries behind.
  for (auto it = bow.counts.begin(); it != bow.counts.end();) {
    if (it->second <= 0.0) {
      it = bow.counts.erase(it);
    } else {
      ++it;
    }
  }
  return bow;
}

BagOfWords pool_bows(const BagOfWords &bow_a, const BagOfWords &bow_b,
                     const std::string &tag_a, const std::string &tag_b) {
  if (bow_a.utt_id != bow_b.utt_id) {
    throw UttIdMismatch("cannot pool '" + bow_a.utt_id + "' with '" +
                        bow_b.utt_id + "'");
  }
  if (tag_a.empty() || tag_b.empty() || tag_a == tag_b) {
    throw ConfigError("pooling tags must be non-empty and distinct (got '" +
                      tag_a + "', '" + tag_b + "')");
  }
  BagOfWords pooled;
  pooled.utt_id = bow_a.utt_id;
  for (const auto &[token, count] : bow_a.counts) {
    pooled.counts.emplace(tag_a + ":" + token, count);
  }
  for (const auto &[token, count] : bow_b.counts) {
    pooled.counts.emplace(tag_b + ":" + token, count);
  }
  return pooled;
}

std::vector<BagOfWords> read_bow_file(std::istream &in,
                                      const std::string &filename) {
  std::vector<BagOfWords> bows;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  int64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto fields = split_ws(line);
    if (fields.empty()) continue;
    BagOfWords bow;
    bow.utt_id = std::string(fields[0]);
    if (!seen_ids.insert(bow.utt_id).second) {
      throw DuplicateUttId(filename + ":" + std::to_string(line_no) +
                           ": duplicate utterance id '" + bow.utt_id + "'");
    }
    for (size_t i = 1; i < fields.size(); ++i) {
      // Tokens may themselves contain ':' (pooled namespaces), so the count
      // starts after the last one.
      size_t colon = fields[i].rfind(':');
      if (colon == std::string_view::npos || colon == 0 ||
          colon + 1 == fields[i].size()) {
        throw MalformedLine(filename, line_no,
                            "expected <token>:<count>, got '" +
                                std::string(fields[i]) + "'");
      }
      std::string token(fields[i].substr(0, colon));
      double count = parse_double(fields[i].substr(colon + 1),
                                  filename + ":" + std::to_string(line_no));
      if (count <= 0.0) {
        throw MalformedLine(filename, line_no,
                            "count for '" + token + "' must be > 0");
      }
      bow.counts[token] += count;
    }
    bows.push_back(std::move(bow));
  }
  return bows;
}

void write_bow_file(std::ostream &out, const std::vector<BagOfWords> &bows) {
  for (const auto &bow : bows) {
    out << bow.utt_id;
    for (const auto &[token, count] : bow.counts) {
      out << ' ' << token << ':' << fmt_double(count);
    }
    out << '\n';
  }
}

}  // namespace eld
