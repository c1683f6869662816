// Copyright 2026 The cayley-steiner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cayley {

/**
 * A signed permutation x_1 x_2 ... x_n of {+-1, ..., +-n}: the absolute
 * values form a permutation of [n]. Entries are stored in one-line form,
 * negative values standing for barred symbols.
 */
class SignedPermutation {
 public:
  explicit SignedPermutation(std::vector<int> entries);

  static SignedPermutation identity(int n);
  /// Parses the comma separated form, e.g. "1,-2,3".
  static SignedPermutation parse(std::string_view text);

  int size() const { return static_cast<int>(entries_.size()); }
  /// 1-based access, matching the usual x_i notation.
  int at(int position) const { return entries_[position - 1]; }
  int last() const { return entries_.back(); }
  std::span<const int> entries() const { return entries_; }

  /// The i-th signed prefix reversal: reverse and negate x_1..x_i.
  SignedPermutation prefix_reversal(int i) const;

  std::string to_string() const;

  auto operator<=>(const SignedPermutation&) const = default;

 private:
  std::vector<int> entries_;
};

inline SignedPermutation signed_prefix_reversal(const SignedPermutation& x,
                                                int i) {
  return x.prefix_reversal(i);
}

enum class Parity { even, odd };

/// A permutation of [n] in one-line form p_1 p_2 ... p_n.
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  static Permutation parse(std::string_view text);
  /// Builds a permutation of [n] from cycle notation, e.g. "(1 2)(3 4)".
  /// The empty string and "()" give the identity.
  static Permutation from_cycles(int n, std::string_view cycles);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i - 1]; }
  std::span<const int> image() const { return image_; }

  Permutation inverse() const;
  bool is_identity() const;
  std::string to_string() const;
  /// Cycle notation with fixed points omitted; "()" for the identity.
  std::string to_cycle_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

/// sigma tau: i -> sigma(tau(i)).
Permutation compose(const Permutation& sigma, const Permutation& tau);

Parity parity(const Permutation& p);

/// A generator set closed under inverses and not containing the identity,
/// kept sorted by one-line form.
class GeneratorSet {
 public:
  explicit GeneratorSet(std::vector<Permutation> elements);

  std::span<const Permutation> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(const Permutation& p) const;

 private:
  std::vector<Permutation> elements_;
};

/// {(123), (132)} u {(12)(3i) | 4 <= i <= n}; generates the alternating group.
GeneratorSet an_generators(int n);
/// an_generators(n) plus the transposition (12).
GeneratorSet ea_generators(int n);

// Ranking. Plain permutations are ranked by their Lehmer code (lexicographic
// rank, identity = 0). Signed permutations are ranked as
//   lehmer_rank(|x_1| ... |x_n|) * 2^n + sign_mask,
// where bit i-1 of sign_mask is set iff x_i < 0.

std::uint64_t factorial(int n);

std::uint64_t rank(const Permutation& p);
std::uint64_t rank(const SignedPermutation& x);
Permutation unrank_permutation(int n, std::uint64_t r);
SignedPermutation unrank_signed(int n, std::uint64_t r);

}  // namespace cayley
