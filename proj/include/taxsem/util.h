// Copyright 2026 The Taxsem Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TAXSEM_UTIL_H_
#define TAXSEM_UTIL_H_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace taxsem {

// Error categories. The command line tool maps usage errors to exit code 1
// and everything else to exit code 2.
enum class ErrorKind {
  kUsage,
  kData,
  kNotFound,
  kBuild,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Reads a whole file. Throws a data error naming the file if it cannot be
// opened.
std::string ReadFile(const std::string &path);

// Writes a file through a temporary sibling and a rename, so readers never
// observe a partially written file.
void WriteFileAtomic(const std::string &path, std::string_view contents);

// Splits on runs of ASCII whitespace.
std::vector<std::string_view> SplitWhitespace(std::string_view text);

// Splits on a single separator character. Empty fields are kept.
std::vector<std::string_view> Split(std::string_view text, char sep);

// Splits text into lines, dropping a trailing '\r' on each line.
std::vector<std::string_view> SplitLines(std::string_view text);

std::string_view Trim(std::string_view text);

std::string ToLower(std::string_view text);

// Parses a non-negative decimal integer. Returns false on any non-digit.
bool ParseUint(std::string_view text, uint64_t *value);

// UTF-8 conversion. Invalid byte sequences decode to U+FFFD.
std::u32string DecodeUtf8(std::string_view text);
std::string EncodeUtf8(std::u32string_view text);
void AppendUtf8(char32_t c, std::string *out);

// Formats a value with a fixed number of fractional digits.
std::string FormatFixed(double value, int digits);

// Runs fn(i) for i in [0, n) on up to `jobs` threads. The order of calls is
// unspecified, so fn must write its result to a slot owned by index i.
void ParallelFor(int n, int jobs, const std::function<void(int)> &fn);

// Number of worker threads to use when the caller passes jobs <= 0.
int DefaultJobs();

}  // namespace taxsem

#endif  // TAXSEM_UTIL_H_
