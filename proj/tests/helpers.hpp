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


#ifndef PLACTIC_TESTS_HELPERS_HPP
#define PLACTIC_TESTS_HELPERS_HPP

#include <string>
#include <vector>

#include "oracle.hpp"
#include "plactic/format.hpp"
#include "plactic/row.hpp"
#include "plactic/tableau.hpp"

namespace plactic::test {

inline LetterWord word(Alphabet a, oracle::Word const& w) {
  return LetterWord(a, std::vector<Letter>(w.begin(), w.end()));
}

inline Row row(Alphabet a, oracle::Word const& w) {
  return row_from_letters(word(a, w));
}

inline oracle::Word letters_of(Row const& r) {
  auto const w = row_to_letters(r).letters();
  return {w.begin(), w.end()};
}

inline std::vector<oracle::Word> rows_of(Tableau const& t) {
  std::vector<oracle::Word> out;
  for (auto const& r : t.rows()) {
    out.push_back(letters_of(r));
  }
  return out;
}

inline Row R(std::size_t n, std::string const& text) {
  return parse_row(Alphabet(n), text);
}

inline RowWord RW(std::size_t n, std::string const& text) {
  return parse_rowword(Alphabet(n), text);
}

inline LetterWord W(std::size_t n, std::string const& text) {
  return parse_letters(Alphabet(n), text);
}

inline Tableau T(std::size_t n, std::string const& text) {
  return parse_tableau(Alphabet(n), text);
}

}  // namespace plactic::test

#endif  // PLACTIC_TESTS_HELPERS_HPP
