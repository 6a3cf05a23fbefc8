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
// Young tableaux as normal forms.
//
// Rows are stored the way they are read: R_1 · R_2 · ... · R_t with each
// R_i dominating R_{i+1}. So the first row is the shortest one, holding the
// largest letters, and the last row is the longest. "4556·223357·1112444"
// is a tableau in this convention.

#ifndef PLACTIC_TABLEAU_HPP
#define PLACTIC_TABLEAU_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "plactic/row.hpp"

namespace plactic {

/// Which non-dominating adjacent pair normal_form_rowword reduces next.
enum class Strategy { rightmost_first, leftmost_first };

class Tableau {
 public:
  /// The empty tableau, identity of the monoid.
  explicit Tableau(Alphabet alphabet) : alphabet_(alphabet) {}

  /// Throws std::invalid_argument unless each row dominates the next.
  Tableau(Alphabet alphabet, std::vector<Row> rows);

  static bool is_tableau(RowWord const& word);

  Alphabet alphabet() const noexcept { return alphabet_; }
  std::vector<Row> const& rows() const noexcept { return rows_; }
  std::size_t number_of_rows() const noexcept { return rows_.size(); }
  bool is_identity() const noexcept { return rows_.empty(); }
  std::size_t letter_count() const noexcept;

  RowWord    to_rowword() const { return RowWord(alphabet_, rows_); }
  LetterWord to_letters() const { return rowword_to_letters(to_rowword()); }

  bool operator==(Tableau const&) const = default;

 private:
  Alphabet         alphabet_;
  std::vector<Row> rows_;
};

/// Letter-by-letter insertion: each letter enters the last row and bumped
/// letters cascade towards the first row.
Tableau normal_form_letters(LetterWord const& word);

/// Rewrites adjacent non-dominating pairs R·S to their product until none
/// remain. Every step strictly decreases the word under rowword_compare, so
/// this terminates; the result does not depend on the strategy.
Tableau normal_form_rowword(RowWord const& word,
                            Strategy strategy = Strategy::rightmost_first);

Tableau tableau_multiply(Tableau const& lhs, Tableau const& rhs);

bool plactic_equivalent(LetterWord const& u, LetterWord const& v);

/// Calls `visit` once for every tableau over `alphabet` with exactly
/// `letters` letters, without materialising the list. Order: the tuple of
/// row count vectors read from the last (longest) row to the first,
/// compared lexicographically.
void for_each_tableau(Alphabet                                   alphabet,
                      std::size_t                                letters,
                      std::function<void(Tableau const&)> const& visit);

std::vector<Tableau> enumerate_tableaux(Alphabet alphabet, std::size_t letters);

/// Strict weak order: letter count, then enumeration order.
struct TableauLess {
  bool operator()(Tableau const& a, Tableau const& b) const;
};

/// Rows joined by "·", "ε" for the identity.
std::string format_tableau(Tableau const& t);
/// Throws ParseError if the rows do not form a tableau.
Tableau parse_tableau(Alphabet alphabet, std::string_view text);

}  // namespace plactic

#endif  // PLACTIC_TABLEAU_HPP
