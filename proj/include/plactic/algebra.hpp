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
// The plactic algebra over Q: finite linear combinations of tableaux.
//
// Text form:  "0" | term ((" + " | " - ") term)*
//             term := [rational "*"] monomial
// where a monomial is a tableau, or any row word / letter word, which is
// reduced to its tableau when parsed.

#ifndef PLACTIC_ALGEBRA_HPP
#define PLACTIC_ALGEBRA_HPP

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "plactic/tableau.hpp"

namespace plactic {

using Rational = mpq_class;

class AlgebraElement {
 public:
  using Terms = std::map<Tableau, Rational, TableauLess>;

  /// Zero.
  explicit AlgebraElement(Alphabet alphabet) : alphabet_(alphabet) {}

  static AlgebraElement monomial(Tableau const& t, Rational coeff = 1);
  /// The empty tableau with coefficient 1.
  static AlgebraElement one(Alphabet alphabet);

  Alphabet alphabet() const noexcept { return alphabet_; }
  Terms const& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Zero for tableaux outside the support.
  Rational coefficient(Tableau const& t) const;

  void add_term(Tableau const& t, Rational const& coeff);

  AlgebraElement& operator+=(AlgebraElement const& other);
  AlgebraElement& operator*=(Rational const& scalar);

  bool operator==(AlgebraElement const& other) const;

 private:
  Alphabet alphabet_;
  Terms    terms_;
};

AlgebraElement element_add(AlgebraElement const& a, AlgebraElement const& b);
AlgebraElement element_multiply(AlgebraElement const& a,
                                AlgebraElement const& b);

inline AlgebraElement operator+(AlgebraElement const& a,
                                AlgebraElement const& b) {
  return element_add(a, b);
}
inline AlgebraElement operator*(AlgebraElement const& a,
                                AlgebraElement const& b) {
  return element_multiply(a, b);
}
AlgebraElement operator*(Rational const& scalar, AlgebraElement a);
AlgebraElement operator-(AlgebraElement const& a, AlgebraElement const& b);

/// coeff times the normal form of `word`.
AlgebraElement reduce_free_word(RowWord const& word, Rational const& coeff);

using FreeExpression = std::vector<std::pair<RowWord, Rational>>;

AlgebraElement reduce_expression(Alphabet alphabet, FreeExpression const& expr);

/// True iff the expression vanishes in the plactic algebra; the empty
/// expression is zero.
bool is_zero_mod_ideal(FreeExpression const& expr);

std::string format_element(AlgebraElement const& a);
FreeExpression parse_expression(Alphabet alphabet, std::string_view text);
AlgebraElement parse_element(Alphabet alphabet, std::string_view text);

}  // namespace plactic

#endif  // PLACTIC_ALGEBRA_HPP
