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

#include "plactic/algebra.hpp"

#include <cctype>

#include "plactic/format.hpp"

namespace plactic {

AlgebraElement AlgebraElement::monomial(Tableau const& t, Rational coeff) {
  AlgebraElement out(t.alphabet());
  out.add_term(t, coeff);
  return out;
}

AlgebraElement AlgebraElement::one(Alphabet alphabet) {
  return monomial(Tableau(alphabet), 1);
}

Rational AlgebraElement::coefficient(Tableau const& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(Tableau const& t, Rational const& coeff) {
  alphabet_.require_same(t.alphabet());
  if (coeff == 0) {
    return;
  }
  Rational c = coeff;
  c.canonicalize();
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

AlgebraElement& AlgebraElement::operator+=(AlgebraElement const& other) {
  alphabet_.require_same(other.alphabet_);
  for (auto const& [t, c] : other.terms_) {
    add_term(t, c);
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(Rational const& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_) {
    c *= scalar;
    c.canonicalize();
  }
  return *this;
}

bool AlgebraElement::operator==(AlgebraElement const& other) const {
  return alphabet_ == other.alphabet_ && terms_ == other.terms_;
}

AlgebraElement element_add(AlgebraElement const& a, AlgebraElement const& b) {
  AlgebraElement out = a;
  out += b;
  return out;
}

AlgebraElement element_multiply(AlgebraElement const& a,
                                AlgebraElement const& b) {
  a.alphabet().require_same(b.alphabet());
  AlgebraElement out(a.alphabet());
  for (auto const& [ta, ca] : a.terms()) {
    for (auto const& [tb, cb] : b.terms()) {
      out.add_term(tableau_multiply(ta, tb), ca * cb);
    }
  }
  return out;
}

AlgebraElement operator*(Rational const& scalar, AlgebraElement a) {
  a *= scalar;
  return a;
}

AlgebraElement operator-(AlgebraElement const& a, AlgebraElement const& b) {
  return a + Rational(-1) * b;
}

AlgebraElement reduce_free_word(RowWord const& word, Rational const& coeff) {
  return AlgebraElement::monomial(normal_form_rowword(word), coeff);
}

AlgebraElement reduce_expression(Alphabet alphabet, FreeExpression const& expr) {
  AlgebraElement out(alphabet);
  for (auto const& [word, coeff] : expr) {
    out += reduce_free_word(word, coeff);
  }
  return out;
}

bool is_zero_mod_ideal(FreeExpression const& expr) {
  if (expr.empty()) {
    return true;
  }
  return reduce_expression(expr.front().first.alphabet(), expr).is_zero();
}

std::string format_element(AlgebraElement const& a) {
  if (a.is_zero()) {
    return "0";
  }
  std::string out;
  bool        first = true;
  for (auto const& [t, c] : a.terms()) {
    if (first) {
      if (c < 0) {
        out += "-";
      }
    } else {
      out += c < 0 ? " - " : " + ";
    }
    Rational const magnitude = abs(c);
    out += magnitude.get_str();
    out += '*';
    out += format_tableau(t);
    first = false;
  }
  return out;
}

namespace {

  Rational parse_rational(std::string_view token) {
    Rational q;
    if (token.empty() || q.set_str(std::string(token), 10) != 0) {
      throw ParseError("bad coefficient", std::string(token));
    }
    if (q.get_den() == 0) {
      throw ParseError("zero denominator", std::string(token));
    }
    q.canonicalize();
    return q;
  }

  RowWord parse_monomial(Alphabet alphabet, std::string_view text) {
    if (has_row_separator(text) || text.find('(') != std::string_view::npos) {
      return parse_rowword(alphabet, text);
    }
    // a bare word: one row per letter
    return letters_to_rowword(parse_letters(alphabet, text));
  }

}  // namespace

FreeExpression parse_expression(Alphabet alphabet, std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      compact += c;
    }
  }
  FreeExpression out;
  if (compact.empty() || compact == "0") {
    return out;
  }
  std::size_t pos = 0;
  while (pos < compact.size()) {
    bool negative = false;
    if (compact[pos] == '+' || compact[pos] == '-') {
      negative = compact[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw ParseError("expected '+' or '-'", compact.substr(pos));
    }
    auto end = compact.find_first_of("+-", pos);
    if (end == std::string::npos) {
      end = compact.size();
    }
    std::string_view term(compact.data() + pos, end - pos);
    if (term.empty()) {
      throw ParseError("empty term", compact);
    }
    Rational coeff = 1;
    if (auto star = term.find('*'); star != std::string_view::npos) {
      coeff = parse_rational(term.substr(0, star));
      term  = term.substr(star + 1);
    }
    if (negative) {
      coeff = -coeff;
    }
    out.emplace_back(parse_monomial(alphabet, term), coeff);
    pos = end;
  }
  return out;
}

AlgebraElement parse_element(Alphabet alphabet, std::string_view text) {
  return reduce_expression(alphabet, parse_expression(alphabet, text));
}

}  // namespace plactic
