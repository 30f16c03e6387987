// Copyright 2026 The pnpseq Authors
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

#ifndef PNPSEQ_TEXT_HPP_
#define PNPSEQ_TEXT_HPP_

#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>

namespace pnpseq {

// Shortest decimal form that parses back to the same double; locale
// independent. NaN prints as "nan", infinities as "inf" / "-inf".
std::string format_double(double v);

// Inverse of format_double. Throws InputError on malformed text.
double parse_double(std::string_view text);

// Writes one CSV record. Fields are emitted verbatim; callers format numbers
// with format_double and avoid commas in free text.
void write_csv_row(std::ostream& out, std::initializer_list<std::string> fields);

}  // namespace pnpseq

#endif  // PNPSEQ_TEXT_HPP_
