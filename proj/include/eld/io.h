// include/eld/io.h

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

#ifndef ELD_IO_H_
#define ELD_IO_H_

#include <cstdint>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace eld {

// Shortest decimal form that round-trips the exact double.  All file formats
// in this toolkit go through these two helpers so that outputs are
// byte-identical across runs and independent of the global locale.
std::string fmt_double(double value);
double parse_double(std::string_view text, const std::string &context);
int64_t parse_int(std::string_view text, const std::string &context);

std::vector<std::string_view> split_ws(std::string_view line);
std::string to_lower_ascii(std::string_view s);

// Throwing open helpers; message carries the path.
std::ifstream open_in(const std::string &path);
std::ofstream open_out(const std::string &path);

// FNV-1a over the file bytes, hex-encoded.  Used in run manifests.
std::string hash_file_hex(const std::string &path);

}  // namespace eld

#endif  // ELD_IO_H_
