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

// Naive letter-level reference code for the tests. Nothing here uses the
// count-vector machinery of the library: words are plain vectors of ints.

#ifndef PLACTIC_TESTS_ORACLE_HPP
#define PLACTIC_TESTS_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Word = std::vector<int>;

// All words of length `len` over 1..n in lexicographic order.
inline std::vector<Word> all_words(int n, std::size_t len) {
  std::vector<Word> out;
  Word              w(len, 1);
  while (true) {
    out.push_back(w);
    std::size_t i = len;
    while (i > 0 && w[i - 1] == n) {
      w[i - 1] = 1;
      --i;
    }
    if (i == 0) {
      break;
    }
    ++w[i - 1];
  }
  return out;
}

// Nonempty nondecreasing words over 1..n of length at most max_len.
inline std::vector<Word> all_row_words(int n, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (auto const& w : all_words(n, len)) {
      if (std::is_sorted(w.begin(), w.end())) {
        out.push_back(w);
      }
    }
  }
  return out;
}

// Shortlex on nondecreasing words. Two rows of equal length first differ
// where one has a smaller letter, i.e. more copies of the smaller letter.
inline bool row_less(Word const& a, Word const& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return a < b;
}

inline bool rowword_less(std::vector<Word> const& u,
                         std::vector<Word> const& v) {
  if (u.size() != v.size()) {
    return u.size() < v.size();
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (row_less(u[i], v[i])) {
      return true;
    }
    if (row_less(v[i], u[i])) {
      return false;
    }
  }
  return false;
}

inline bool dominates(Word const& r, Word const& s) {
  if (r.size() > s.size()) {
    return false;
  }
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r[j] <= s[j]) {
      return false;
    }
  }
  return true;
}

// Textbook row insertion on a letter vector. Returns the bumped letter or 0.
inline int insert(Word& row, int x) {
  for (auto& y : row) {
    if (y > x) {
      int const bumped = y;
      y                = x;
      return bumped;
    }
  }
  row.push_back(x);
  return 0;
}

// P-symbol with rows listed top (shortest) to bottom (longest).
inline std::vector<Word> p_symbol(Word const& w) {
  std::vector<Word> bottom_up;
  for (int x : w) {
    for (std::size_t i = 0; x != 0; ++i) {
      if (i == bottom_up.size()) {
        bottom_up.push_back({x});
        break;
      }
      x = insert(bottom_up[i], x);
    }
  }
  return {bottom_up.rbegin(), bottom_up.rend()};
}

inline Word reading_word(std::vector<Word> const& rows) {
  Word out;
  for (auto const& r : rows) {
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

// Knuth classes by union-find over single relation applications, each
// relation checked on its literal window pattern.
inline std::vector<std::set<Word>> knuth_classes(int n, std::size_t len) {
  auto const        words = all_words(n, len);
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) {
    index[words[i]] = i;
  }
  std::vector<std::size_t> parent(words.size());
  for (std::size_t i = 0; i < parent.size(); ++i) {
    parent[i] = i;
  }
  auto find = [&](std::size_t i) {
    while (parent[i] != i) {
      i = parent[i] = parent[parent[i]];
    }
    return i;
  };
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto const& w = words[i];
    for (std::size_t p = 0; p + 3 <= w.size(); ++p) {
      int const a = w[p], b = w[p + 1], c = w[p + 2];
      Word      v = w;
      // a c b with a <= b < c: x z y -> z x y
      if (a <= c && c < b) {
        v[p] = b;
        v[p + 1] = a;
        v[p + 2] = c;
        parent[find(i)] = find(index.at(v));
      }
      v = w;
      // b a c with a < b <= c: y x z -> y z x
      if (b < a && a <= c) {
        v[p + 1] = c;
        v[p + 2] = b;
        parent[find(i)] = find(index.at(v));
      }
    }
  }
  std::map<std::size_t, std::set<Word>> by_root;
  for (std::size_t i = 0; i < words.size(); ++i) {
    by_root[find(i)].insert(words[i]);
  }
  std::vector<std::set<Word>> out;
  for (auto& [root, cls] : by_root) {
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace oracle

#endif  // PLACTIC_TESTS_ORACLE_HPP
