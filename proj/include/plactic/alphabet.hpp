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
// Alphabet {1 < 2 < ... < n}, letters, multiplicities and the exceptions
// thrown across the library.

#ifndef PLACTIC_ALPHABET_HPP
#define PLACTIC_ALPHABET_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace plactic {

/// A letter of the alphabet; valid letters are 1..n.
using Letter = std::uint32_t;

/// Multiplicity of a letter inside a row.
using Count = std::uint32_t;

/// Raised when text input cannot be parsed. `token()` names the offending
/// piece of input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::string const& message, std::string token)
      : std::invalid_argument(message + ": '" + token + "'"),
        token_(std::move(token)) {}

  std::string const& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// Raised when two objects over different alphabets are combined.
class AlphabetMismatch : public std::invalid_argument {
 public:
  AlphabetMismatch(std::size_t lhs, std::size_t rhs)
      : std::invalid_argument("alphabet mismatch: n=" + std::to_string(lhs)
                              + " vs n=" + std::to_string(rhs)) {}
};

class Alphabet {
 public:
  explicit Alphabet(std::size_t n) : size_(n) {
    if (n == 0) {
      throw std::invalid_argument("alphabet size must be at least 1");
    }
  }

  std::size_t size() const noexcept { return size_; }

  bool contains(Letter x) const noexcept { return x >= 1 && x <= size_; }

  void check(Letter x) const {
    if (!contains(x)) {
      throw std::out_of_range("letter " + std::to_string(x)
                              + " outside alphabet 1.."
                              + std::to_string(size_));
    }
  }

  void require_same(Alphabet other) const {
    if (other.size_ != size_) {
      throw AlphabetMismatch(size_, other.size_);
    }
  }

  auto operator<=>(Alphabet const&) const = default;

 private:
  std::size_t size_;
};

namespace detail {

  inline Count checked_add(Count a, Count b) {
    Count out;
    if (__builtin_add_overflow(a, b, &out)) {
      throw std::overflow_error("letter count overflow");
    }
    return out;
  }

  inline Count checked_sub(Count a, Count b) {
    if (b > a) {
      throw std::overflow_error("letter count underflow");
    }
    return a - b;
  }

}  // namespace detail

}  // namespace plactic

#endif  // PLACTIC_ALPHABET_HPP
