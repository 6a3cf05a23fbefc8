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

#include "plactic/format.hpp"

#include <charconv>
#include <limits>
#include <vector>

namespace plactic {

namespace {

  std::string_view trim(std::string_view s) {
    auto const ws = " \t\r\n";
    auto       b  = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
      return {};
    }
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
  }

  std::uint64_t parse_uint(std::string_view token, std::string_view context) {
    auto          t     = trim(token);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
      throw ParseError("expected a non-negative integer", std::string(context));
    }
    return value;
  }

  Letter parse_letter(Alphabet alphabet, std::string_view token) {
    auto v = parse_uint(token, token);
    if (v < 1 || v > alphabet.size()) {
      throw ParseError("letter outside alphabet 1.."
                           + std::to_string(alphabet.size()),
                       std::string(trim(token)));
    }
    return static_cast<Letter>(v);
  }

  std::vector<std::string_view> split(std::string_view s,
                                      std::string_view sep) {
    std::vector<std::string_view> out;
    std::size_t                   start = 0;
    while (true) {
      auto pos = s.find(sep, start);
      if (pos == std::string_view::npos) {
        out.push_back(s.substr(start));
        return out;
      }
      out.push_back(s.substr(start, pos - start));
      start = pos + sep.size();
    }
  }

}  // namespace

std::string format_letters(LetterWord const& word) {
  if (word.empty()) {
    return std::string(kEmptyWord);
  }
  std::string out;
  bool const  compact = word.alphabet().size() <= 9;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!compact && i != 0) {
      out += ',';
    }
    out += std::to_string(word[i]);
  }
  return out;
}

std::string format_row(Row const& row) {
  return format_letters(row_to_letters(row));
}

std::string format_row_counts(Row const& row) {
  std::string out = "(";
  for (std::size_t i = 0; i < row.n(); ++i) {
    if (i != 0) {
      out += ',';
    }
    out += std::to_string(row.counts()[i]);
  }
  out += ')';
  return out;
}

std::string format_rowword(RowWord const& word) {
  if (word.empty()) {
    return std::string(kEmptyWord);
  }
  std::string out;
  for (std::size_t i = 0; i < word.degree(); ++i) {
    if (i != 0) {
      out += kRowSeparator;
    }
    out += format_row(word[i]);
  }
  return out;
}

LetterWord parse_letters(Alphabet alphabet, std::string_view text) {
  auto       t = trim(text);
  LetterWord out(alphabet);
  if (t.empty() || t == kEmptyWord) {
    return out;
  }
  if (t.find(',') != std::string_view::npos) {
    for (auto token : split(t, ",")) {
      out.push_back(parse_letter(alphabet, token));
    }
  } else if (alphabet.size() <= 9) {
    for (char c : t) {
      if (c < '0' || c > '9') {
        throw ParseError("unexpected character in word", std::string(t));
      }
      out.push_back(parse_letter(alphabet, std::string_view(&c, 1)));
    }
  } else {
    out.push_back(parse_letter(alphabet, t));
  }
  return out;
}

Row parse_row(Alphabet alphabet, std::string_view text) {
  auto t = trim(text);
  if (!t.empty() && t.front() == '(') {
    if (t.back() != ')') {
      throw ParseError("unterminated count vector", std::string(t));
    }
    auto parts = split(t.substr(1, t.size() - 2), ",");
    if (parts.size() > alphabet.size()) {
      throw ParseError("count vector longer than alphabet", std::string(t));
    }
    std::vector<Count> counts(alphabet.size(), 0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      auto v = parse_uint(parts[i], t);
      if (v > std::numeric_limits<Count>::max()) {
        throw ParseError("count too large", std::string(t));
      }
      counts[i] = static_cast<Count>(v);
    }
    bool any = false;
    for (auto c : counts) {
      any = any || c != 0;
    }
    if (!any) {
      throw ParseError("not a row (empty)", std::string(t));
    }
    return Row(std::move(counts));
  }
  auto word = parse_letters(alphabet, t);
  if (word.empty()) {
    throw ParseError("not a row (empty)", std::string(t));
  }
  return row_from_letters(word);
}

bool has_row_separator(std::string_view text) {
  return text.find(kRowSeparator) != std::string_view::npos
         || text.find('|') != std::string_view::npos;
}

RowWord parse_rowword(Alphabet alphabet, std::string_view text) {
  auto    t = trim(text);
  RowWord out(alphabet);
  if (t.empty() || t == kEmptyWord) {
    return out;
  }
  for (auto piece : split(t, "|")) {
    for (auto token : split(piece, kRowSeparator)) {
      out.push_back(parse_row(alphabet, token));
    }
  }
  return out;
}

}  // namespace plactic
