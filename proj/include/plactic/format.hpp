/* Copyright 2026 The plactic Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Text forms of letter words, rows and row words.
//
//   letters  := "ε" | digits            (n <= 9, one letter per digit)
//             | int ("," int)+          (any n)
//             | int                     (n >= 10, a single letter)
//   row      := letters (nondecreasing) | "(" int ("," int)* ")"
//   rowword  := "ε" | "" | row (sep row)*      sep := "·" | "|"
//
// Printers always emit the first alternative that applies, the middle-dot
// separator and "ε" for empty words, so parse(print(x)) == x.

#ifndef PLACTIC_FORMAT_HPP
#define PLACTIC_FORMAT_HPP

#include <string>
#include <string_view>

#include "plactic/row.hpp"

namespace plactic {

inline constexpr std::string_view kRowSeparator = "\xC2\xB7";  // U+00B7
inline constexpr std::string_view kEmptyWord    = "\xCE\xB5";  // U+03B5

std::string format_letters(LetterWord const& word);
std::string format_row(Row const& row);
/// "(r_1,...,r_n)"
std::string format_row_counts(Row const& row);
std::string format_rowword(RowWord const& word);

LetterWord parse_letters(Alphabet alphabet, std::string_view text);
Row        parse_row(Alphabet alphabet, std::string_view text);
RowWord    parse_rowword(Alphabet alphabet, std::string_view text);

/// True if `text` contains a row separator.
bool has_row_separator(std::string_view text);

}  // namespace plactic

#endif  // PLACTIC_FORMAT_HPP
