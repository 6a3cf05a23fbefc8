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
// Rows (nondecreasing words stored as letter-count vectors), words of rows,
// and words of letters, together with the orderings used for reduction.

#ifndef PLACTIC_ROW_HPP
#define PLACTIC_ROW_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "plactic/alphabet.hpp"

namespace plactic {

/// A word of letters over a fixed alphabet, not necessarily nondecreasing.
class LetterWord {
 public:
  explicit LetterWord(Alphabet alphabet) : alphabet_(alphabet) {}
  LetterWord(Alphabet alphabet, std::vector<Letter> letters);
  LetterWord(Alphabet alphabet, std::initializer_list<Letter> letters)
      : LetterWord(alphabet, std::vector<Letter>(letters)) {}

  Alphabet alphabet() const noexcept { return alphabet_; }
  std::vector<Letter> const& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  void push_back(Letter x);

  bool operator==(LetterWord const&) const = default;
  auto operator<=>(LetterWord const& other) const {
    return letters_ <=> other.letters_;
  }

 private:
  Alphabet            alphabet_;
  std::vector<Letter> letters_;
};

/// A nonempty nondecreasing word, stored as (r_1, ..., r_n) with r_i the
/// multiplicity of letter i. The empty row is not a Row; callers that can
/// produce one use std::optional<Row>.
class Row {
 public:
  /// Throws std::invalid_argument if every count is zero or counts is empty.
  explicit Row(std::vector<Count> counts);

  /// The single-letter row `x`.
  static Row letter(Alphabet alphabet, Letter x);

  Alphabet alphabet() const noexcept { return Alphabet(counts_.size()); }
  std::size_t n() const noexcept { return counts_.size(); }

  std::span<Count const> counts() const noexcept { return counts_; }

  /// Multiplicity of letter x (1-based).
  Count count(Letter x) const { return counts_.at(x - 1); }

  /// Number of letters.
  Count length() const noexcept { return length_; }

  /// Sum of the counts of letters 1..p; partial_sum(0) == 0.
  Count partial_sum(std::size_t p) const;

  /// The j-th letter (1-based) of the nondecreasing word, i.e. the least p
  /// with partial_sum(p) >= j.
  Letter letter_at(Count j) const;

  Letter min_letter() const noexcept;
  Letter max_letter() const noexcept;

  bool operator==(Row const&) const = default;

 private:
  std::vector<Count> counts_;
  Count              length_ = 0;
};

/// Element of U*: a finite sequence of rows (the empty sequence is the
/// identity).
class RowWord {
 public:
  explicit RowWord(Alphabet alphabet) : alphabet_(alphabet) {}
  RowWord(Alphabet alphabet, std::vector<Row> rows);

  Alphabet alphabet() const noexcept { return alphabet_; }
  std::vector<Row> const& rows() const noexcept { return rows_; }
  std::size_t degree() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }
  Row const& operator[](std::size_t i) const { return rows_[i]; }

  /// Total number of letters over all rows.
  std::size_t letter_count() const noexcept;

  void push_back(Row row);
  RowWord& append(RowWord const& other);

  bool operator==(RowWord const&) const = default;

 private:
  Alphabet         alphabet_;
  std::vector<Row> rows_;
};

RowWord operator*(RowWord lhs, RowWord const& rhs);

/// Throws ParseError (token = the word) if `word` is empty or decreasing
/// anywhere.
Row row_from_letters(LetterWord const& word);
LetterWord row_to_letters(Row const& row);

/// Each row written out left to right.
LetterWord rowword_to_letters(RowWord const& word);

/// Every letter as its own one-letter row.
RowWord letters_to_rowword(LetterWord const& word);

/// Order on U: shorter rows first; equal lengths compare at the first
/// differing count, the row with MORE copies of the smaller letter being
/// smaller.
std::strong_ordering row_compare(Row const& lhs, Row const& rhs);

/// Deg-lex on U*: number of rows first, then row_compare left to right.
std::strong_ordering rowword_compare(RowWord const& lhs, RowWord const& rhs);

/// True iff |lhs| <= |rhs| and each letter of lhs is strictly larger than
/// the letter in the same position of rhs.
bool dominates(Row const& lhs, Row const& rhs);

/// All rows over `alphabet` with 1..max_len letters, ascending under
/// row_compare.
std::vector<Row> all_rows(Alphabet alphabet, std::size_t max_len);

/// Number of rows with 1..max_len letters, sum of C(l+n-1, n-1).
std::size_t count_rows(Alphabet alphabet, std::size_t max_len);

struct RowLess {
  bool operator()(Row const& a, Row const& b) const {
    return row_compare(a, b) < 0;
  }
};

}  // namespace plactic

template <>
struct std::hash<plactic::Row> {
  std::size_t operator()(plactic::Row const& row) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto c : row.counts()) {
      h = (h ^ c) * 0x100000001b3ULL;
    }
    return h;
  }
};

#endif  // PLACTIC_ROW_HPP
