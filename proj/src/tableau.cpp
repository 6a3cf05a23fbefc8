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

#include "plactic/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

#include "plactic/format.hpp"
#include "plactic/schensted.hpp"

namespace plactic {

Tableau::Tableau(Alphabet alphabet, std::vector<Row> rows)
    : alphabet_(alphabet), rows_(std::move(rows)) {
  for (auto const& row : rows_) {
    alphabet_.require_same(row.alphabet());
  }
  for (std::size_t i = 0; i + 1 < rows_.size(); ++i) {
    if (!dominates(rows_[i], rows_[i + 1])) {
      throw std::invalid_argument("not a tableau: row " + std::to_string(i + 1)
                                  + " does not dominate row "
                                  + std::to_string(i + 2));
    }
  }
}

bool Tableau::is_tableau(RowWord const& word) {
  for (std::size_t i = 0; i + 1 < word.degree(); ++i) {
    if (!dominates(word[i], word[i + 1])) {
      return false;
    }
  }
  return true;
}

std::size_t Tableau::letter_count() const noexcept {
  std::size_t total = 0;
  for (auto const& row : rows_) {
    total += row.length();
  }
  return total;
}

Tableau normal_form_letters(LetterWord const& word) {
  auto const       alphabet = word.alphabet();
  std::vector<Row> rows;  // first row = shortest
  for (auto x : word.letters()) {
    std::optional<Letter> carry = x;
    for (std::size_t i = rows.size(); i-- > 0 && carry;) {
      auto result = insert_letter(rows[i], *carry);
      rows[i]     = std::move(result.row);
      carry       = result.bumped;
    }
    if (carry) {
      rows.insert(rows.begin(), Row::letter(alphabet, *carry));
    }
  }
  return Tableau(alphabet, std::move(rows));
}

namespace {

  // Index i of a pair (rows[i], rows[i+1]) that is not dominating, searching
  // downwards from `from`; npos if there is none.
  std::size_t rightmost_reducible(std::vector<Row> const& rows,
                                  std::size_t             from) {
    for (std::size_t i = from + 1; i-- > 0;) {
      if (!dominates(rows[i], rows[i + 1])) {
        return i;
      }
    }
    return std::string::npos;
  }

  std::size_t leftmost_reducible(std::vector<Row> const& rows) {
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
      if (!dominates(rows[i], rows[i + 1])) {
        return i;
      }
    }
    return std::string::npos;
  }

}  // namespace

Tableau normal_form_rowword(RowWord const& word, Strategy strategy) {
  std::vector<Row> rows = word.rows();
  // Pairs strictly to the right of `hint` are known to be dominating.
  std::size_t hint = rows.size() < 2 ? 0 : rows.size() - 2;
  while (rows.size() >= 2) {
    std::size_t i = strategy == Strategy::rightmost_first
                        ? rightmost_reducible(rows, hint)
                        : leftmost_reducible(rows);
    if (i == std::string::npos) {
      break;
    }
#ifndef NDEBUG
    RowWord const before(word.alphabet(), rows);
#endif
    auto product = multiply_rows(rows[i], rows[i + 1]);
    if (product.x) {
      rows[i]     = std::move(*product.x);
      rows[i + 1] = std::move(product.y);
      hint        = i + 1;
    } else {
      rows[i] = std::move(product.y);
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      hint = i;
    }
    hint = std::min(hint, rows.size() < 2 ? std::size_t{0} : rows.size() - 2);
#ifndef NDEBUG
    assert(rowword_compare(RowWord(word.alphabet(), rows), before) < 0);
#endif
  }
  return Tableau(word.alphabet(), std::move(rows));
}

Tableau tableau_multiply(Tableau const& lhs, Tableau const& rhs) {
  return normal_form_rowword(lhs.to_rowword() * rhs.to_rowword());
}

bool plactic_equivalent(LetterWord const& u, LetterWord const& v) {
  u.alphabet().require_same(v.alphabet());
  return normal_form_letters(u) == normal_form_letters(v);
}

namespace {

  // Count vectors with total in [1, max_total], lexicographically ascending.
  void vectors_ascending(std::vector<Count>&                            current,
                         std::size_t                                    pos,
                         std::size_t                                    left,
                         std::function<void(std::vector<Count> const&)> const& f) {
    if (pos == current.size()) {
      if (std::any_of(current.begin(), current.end(), [](Count c) {
            return c != 0;
          })) {
        f(current);
      }
      return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
      current[pos] = static_cast<Count>(c);
      vectors_ascending(current, pos + 1, left - c, f);
    }
    current[pos] = 0;
  }

  // rows_rev holds the rows chosen so far, last row first.
  void extend(Alphabet                                   alphabet,
              std::vector<Row>&                          rows_rev,
              std::size_t                                left,
              std::function<void(Tableau const&)> const& visit) {
    if (left == 0) {
      visit(Tableau(alphabet,
                    std::vector<Row>(rows_rev.rbegin(), rows_rev.rend())));
      return;
    }
    std::size_t bound = left;
    if (!rows_rev.empty()) {
      bound = std::min<std::size_t>(bound, rows_rev.back().length());
    }
    std::vector<Count> current(alphabet.size(), 0);
    vectors_ascending(current, 0, bound, [&](std::vector<Count> const& v) {
      Row candidate(v);
      if (!rows_rev.empty() && !dominates(candidate, rows_rev.back())) {
        return;
      }
      rows_rev.push_back(std::move(candidate));
      extend(alphabet, rows_rev, left - rows_rev.back().length(), visit);
      rows_rev.pop_back();
    });
  }

}  // namespace

void for_each_tableau(Alphabet                                   alphabet,
                      std::size_t                                letters,
                      std::function<void(Tableau const&)> const& visit) {
  std::vector<Row> rows_rev;
  extend(alphabet, rows_rev, letters, visit);
}

std::vector<Tableau> enumerate_tableaux(Alphabet alphabet, std::size_t letters) {
  std::vector<Tableau> out;
  for_each_tableau(alphabet, letters, [&out](Tableau const& t) {
    out.push_back(t);
  });
  return out;
}

bool TableauLess::operator()(Tableau const& a, Tableau const& b) const {
  if (a.letter_count() != b.letter_count()) {
    return a.letter_count() < b.letter_count();
  }
  auto const& ra = a.rows();
  auto const& rb = b.rows();
  return std::lexicographical_compare(
      ra.rbegin(), ra.rend(), rb.rbegin(), rb.rend(),
      [](Row const& x, Row const& y) {
        return std::lexicographical_compare(x.counts().begin(),
                                            x.counts().end(),
                                            y.counts().begin(),
                                            y.counts().end());
      });
}

std::string format_tableau(Tableau const& t) {
  return format_rowword(t.to_rowword());
}

Tableau parse_tableau(Alphabet alphabet, std::string_view text) {
  auto word = parse_rowword(alphabet, text);
  if (!Tableau::is_tableau(word)) {
    throw ParseError("not a tableau", std::string(text));
  }
  return Tableau(alphabet, word.rows());
}

}  // namespace plactic
