// Copyright 2026 The qperc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPERC_TEXT_H
#define QPERC_TEXT_H

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qperc {

/// Thrown for unreadable or malformed input files.
class DataError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string_view trim(std::string_view s);

std::vector<std::string_view> split(std::string_view s, char sep);

/// Shortest round-trippable decimal, as produced by std::to_chars.
std::string format_double(double v);

/// Throws DataError when the file cannot be read.
std::string read_file(const std::string &path);

/// Throws DataError when the file cannot be written.
void write_file(const std::string &path, std::string_view contents);

}  // namespace qperc

#endif
