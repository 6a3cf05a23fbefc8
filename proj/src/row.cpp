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

#include "plactic/row.hpp"

#include <algorithm>
#include <string>

#include "plactic/format.hpp"

namespace plactic {

LetterWord::LetterWord(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
  for (auto x : letters_) {
    alphabet_.check(x);
  }
}

void LetterWord::push_back(Letter x) {
  alphabet_.check(x);
  letters_.push_back(x);
}

Row::Row(std::vector<Count> counts) : counts_(std::move(counts)) {
  if (counts_.empty()) {
    throw std::invalid_argument("row over an empty alphabet");
  }
  for (auto c : counts_) {
    length_ = detail::checked_add(length_, c);
  }
  if (length_ == 0) {
    throw std::invalid_argument("the empty row is not a row");
  }
}

Row Row::letter(Alphabet alphabet, Letter x) {
  alphabet.check(x);
  std::vector<Count> counts(alphabet.size(), 0);
  counts[x - 1] = 1;
  return Row(std::move(counts));
}

Count Row::partial_sum(std::size_t p) const {
  Count total = 0;
  p           = std::min(p, counts_.size());
  for (std::size_t i = 0; i < p; ++i) {
    total += counts_[i];
  }
  return total;
}

Letter Row::letter_at(Count j) const {
  if (j == 0 || j > length_) {
    throw std::out_of_range("row position " + std::to_string(j)
                            + " outside 1.." + std::to_string(length_));
  }
  Count seen = 0;
  for (std::size_t p = 0; p < counts_.size(); ++p) {
    seen += counts_[p];
    if (seen >= j) {
      return static_cast<Letter>(p + 1);
    }
  }
  return static_cast<Letter>(counts_.size());  // unreachable
}

Letter Row::min_letter() const noexcept {
  auto it = std::find_if(counts_.begin(), counts_.end(), [](Count c) {
    return c != 0;
  });
  return static_cast<Letter>(it - counts_.begin() + 1);
}

Letter Row::max_letter() const noexcept {
  auto it = std::find_if(counts_.rbegin(), counts_.rend(), [](Count c) {
    return c != 0;
  });
  return static_cast<Letter>(counts_.rend() - it);
}

RowWord::RowWord(Alphabet alphabet, std::vector<Row> rows)
    : alphabet_(alphabet), rows_(std::move(rows)) {
  for (auto const& row : rows_) {
    alphabet_.require_same(row.alphabet());
  }
}

std::size_t RowWord::letter_count() const noexcept {
  std::size_t total = 0;
  for (auto const& row : rows_) {
    total += row.length();
  }
  return total;
}

void RowWord::push_back(Row row) {
  alphabet_.require_same(row.alphabet());
  rows_.push_back(std::move(row));
}

RowWord& RowWord::append(RowWord const& other) {
  alphabet_.require_same(other.alphabet_);
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
  return *this;
}

RowWord operator*(RowWord lhs, RowWord const& rhs) {
  lhs.append(rhs);
  return lhs;
}

Row row_from_letters(LetterWord const& word) {
  if (word.empty()) {
    throw ParseError("not a row (empty)", format_letters(word));
  }
  std::vector<Count> counts(word.alphabet().size(), 0);
  Letter             prev = 0;
  for (auto x : word.letters()) {
    if (x < prev) {
      throw ParseError("not a row (decreasing)", format_letters(word));
    }
    counts[x - 1] = detail::checked_add(counts[x - 1], 1);
    prev          = x;
  }
  return Row(std::move(counts));
}

LetterWord row_to_letters(Row const& row) {
  std::vector<Letter> letters;
  letters.reserve(row.length());
  for (std::size_t p = 0; p < row.n(); ++p) {
    letters.insert(letters.end(), row.counts()[p], static_cast<Letter>(p + 1));
  }
  return LetterWord(row.alphabet(), std::move(letters));
}

LetterWord rowword_to_letters(RowWord const& word) {
  LetterWord out(word.alphabet());
  for (auto const& row : word.rows()) {
    for (std::size_t p = 0; p < row.n(); ++p) {
      for (Count k = 0; k < row.counts()[p]; ++k) {
        out.push_back(static_cast<Letter>(p + 1));
      }
    }
  }
  return out;
}

RowWord letters_to_rowword(LetterWord const& word) {
  RowWord out(word.alphabet());
  for (auto x : word.letters()) {
    out.push_back(Row::letter(word.alphabet(), x));
  }
  return out;
}

std::strong_ordering row_compare(Row const& lhs, Row const& rhs) {
  lhs.alphabet().require_same(rhs.alphabet());
  if (auto c = lhs.length() <=> rhs.length(); c != 0) {
    return c;
  }
  for (std::size_t i = 0; i < lhs.n(); ++i) {
    if (lhs.counts()[i] != rhs.counts()[i]) {
      // more copies of the smaller letter => smaller row
      return rhs.counts()[i] <=> lhs.counts()[i];
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering rowword_compare(RowWord const& lhs, RowWord const& rhs) {
  lhs.alphabet().require_same(rhs.alphabet());
  if (auto c = lhs.degree() <=> rhs.degree(); c != 0) {
    return c;
  }
  for (std::size_t i = 0; i < lhs.degree(); ++i) {
    if (auto c = row_compare(lhs[i], rhs[i]); c != 0) {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

bool dominates(Row const& lhs, Row const& rhs) {
  lhs.alphabet().require_same(rhs.alphabet());
  if (lhs.length() > rhs.length()) {
    return false;
  }
  // The j-th letter of lhs exceeds the j-th letter of rhs for every j iff,
  // for every p, lhs has no more letters <= p than rhs has letters < p.
  Count lhs_upto = 0;
  Count rhs_below = 0;
  for (std::size_t p = 0; p < lhs.n(); ++p) {
    lhs_upto += lhs.counts()[p];
    if (lhs_upto > rhs_below) {
      return false;
    }
    rhs_below += rhs.counts()[p];
  }
  return true;
}

namespace {

  // Count vectors of total `remaining` over positions [pos, n), largest
  // first count first.
  void compositions_descending(std::vector<Count>& current,
                               std::size_t         pos,
                               Count               remaining,
                               std::vector<Row>&   out) {
    auto const n = current.size();
    if (pos + 1 == n) {
      current[pos] = remaining;
      out.emplace_back(current);
      return;
    }
    for (Count c = remaining + 1; c-- > 0;) {
      current[pos] = c;
      compositions_descending(current, pos + 1, remaining - c, out);
    }
    current[pos] = 0;
  }

  std::size_t binomial(std::size_t n, std::size_t k) {
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }

}  // namespace

std::vector<Row> all_rows(Alphabet alphabet, std::size_t max_len) {
  std::vector<Row> out;
  out.reserve(count_rows(alphabet, max_len));
  std::vector<Count> current(alphabet.size(), 0);
  for (std::size_t len = 1; len <= max_len; ++len) {
    compositions_descending(current, 0, static_cast<Count>(len), out);
  }
  return out;
}

std::size_t count_rows(Alphabet alphabet, std::size_t max_len) {
  std::size_t total = 0;
  auto const  n     = alphabet.size();
  for (std::size_t len = 1; len <= max_len; ++len) {
    total += binomial(len + n - 1, n - 1);
  }
  return total;
}

}  // namespace plactic
