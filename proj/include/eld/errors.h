// include/eld/errors.h

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

#ifndef ELD_ERRORS_H_
#define ELD_ERRORS_H_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eld {

// Errors caused by bad input data or files.  The CLI maps these to exit 2.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Errors caused by bad usage: invalid flags, invalid config keys, parameter
// preconditions.  The CLI maps these to exit 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedLine : public DataError {
 public:
  MalformedLine(const std::string &file, int64_t line, const std::string &msg)
      : DataError(file + ":" + std::to_string(line) + ": " + msg),
        file_(file), line_(line) {}
  const std::string &file() const { return file_; }
  int64_t line() const { return line_; }

 private:
  std::string file_;
  int64_t line_;
};

class DuplicateUttId : public DataError {
 public:
  using DataError::DataError;
};

class UttIdMismatch : public DataError {
 public:
  using DataError::DataError;
};

class EmptyVocabulary : public DataError {
 public:
  using DataError::DataError;
};

class NotFitted : public DataError {
 public:
  using DataError::DataError;
};

class DegenerateMatrix : public DataError {
 public:
  using DataError::DataError;
};

class VocabularyMismatch : public DataError {
 public:
  using DataError::DataError;
};

// Training objective became NaN/inf.  Carries the iteration and the document
// whose bound was worst when the blow-up was detected.
class NonFiniteObjective : public DataError {
 public:
  NonFiniteObjective(int64_t iteration, const std::string &worst_utt_id)
      : DataError("non-finite objective at iteration " +
                  std::to_string(iteration) + " (worst document: " +
                  worst_utt_id + ")"),
        iteration_(iteration), worst_utt_id_(worst_utt_id) {}
  int64_t iteration() const { return iteration_; }
  const std::string &worst_utt_id() const { return worst_utt_id_; }

 private:
  int64_t iteration_;
  std::string worst_utt_id_;
};

class ClassMissing : public DataError {
 public:
  using DataError::DataError;
};

class NonPsdCovariance : public DataError {
 public:
  using DataError::DataError;
};

class SingleClass : public DataError {
 public:
  using DataError::DataError;
};

class TooFewExamples : public DataError {
 public:
  using DataError::DataError;
};

}  // namespace eld

#endif  // ELD_ERRORS_H_
