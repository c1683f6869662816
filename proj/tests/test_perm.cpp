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

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include <catch_amalgamated.hpp>

#include "cayley_steiner/perm.hpp"

using namespace cayley;

namespace {

// Parity by counting inversions, independent of the cycle-based version.
Parity inversion_parity(const Permutation& p) {
  int inversions = 0;
  for (int i = 1; i <= p.size(); ++i) {
    for (int j = i + 1; j <= p.size(); ++j) inversions += p(i) > p(j);
  }
  return inversions % 2 ? Parity::odd : Parity::even;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

std::vector<SignedPermutation> all_signed(int n) {
  std::vector<SignedPermutation> out;
  for (const Permutation& p : all_permutations(n)) {
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> entries(p.image().begin(), p.image().end());
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1) entries[i] = -entries[i];
      }
      out.emplace_back(entries);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("signed prefix reversal examples") {
  CHECK(SignedPermutation::parse("1,2,3").prefix_reversal(1) ==
        SignedPermutation::parse("-1,2,3"));
  CHECK(signed_prefix_reversal(SignedPermutation::parse("1,-2,3"), 2) ==
        SignedPermutation::parse("2,-1,3"));
  CHECK(SignedPermutation::parse("1,2,3").prefix_reversal(3) ==
        SignedPermutation::parse("-3,-2,-1"));
}

TEST_CASE("signed prefix reversal rejects out-of-range index") {
  const auto x = SignedPermutation::identity(3);
  CHECK_THROWS_AS(x.prefix_reversal(0), std::domain_error);
  CHECK_THROWS_AS(x.prefix_reversal(4), std::domain_error);
}

TEST_CASE("signed prefix reversal is an involution and keeps the suffix") {
  for (int n = 2; n <= 5; ++n) {
    for (const SignedPermutation& x : all_signed(n)) {
      for (int i = 1; i <= n; ++i) {
        const SignedPermutation y = x.prefix_reversal(i);
        REQUIRE(y.prefix_reversal(i) == x);
        for (int j = 1; j <= i; ++j) REQUIRE(y.at(j) == -x.at(i + 1 - j));
        for (int j = i + 1; j <= n; ++j) REQUIRE(y.at(j) == x.at(j));
      }
    }
  }
}

TEST_CASE("signed permutation validation and parsing") {
  CHECK_THROWS_AS(SignedPermutation({1, 1}), std::domain_error);
  CHECK_THROWS_AS(SignedPermutation({1}), std::domain_error);
  CHECK_THROWS_AS(SignedPermutation({1, -3}), std::domain_error);
  CHECK_THROWS_AS(SignedPermutation::parse("1,x"), std::invalid_argument);
  CHECK(SignedPermutation::parse(" -2 , 1 ").to_string() == "-2,1");
}

TEST_CASE("compose examples") {
  const Permutation t12 = Permutation::from_cycles(3, "(1 2)");
  const Permutation c123 = Permutation::from_cycles(3, "(1 2 3)");
  CHECK(compose(t12, t12).is_identity());
  CHECK(compose(Permutation::identity(3), c123) == c123);
  CHECK(compose(c123, t12) == Permutation::parse("3,2,1"));
  CHECK(compose(c123, t12).to_cycle_string() == "(1 3)");
  CHECK_THROWS_AS(compose(t12, Permutation::identity(4)), std::domain_error);
}

TEST_CASE("compose matches the function table i -> sigma(tau(i))") {
  for (int n = 1; n <= 4; ++n) {
    const auto perms = all_permutations(n);
    for (const Permutation& sigma : perms) {
      for (const Permutation& tau : perms) {
        const Permutation st = compose(sigma, tau);
        for (int i = 1; i <= n; ++i) REQUIRE(st(i) == sigma(tau(i)));
      }
    }
  }
}

TEST_CASE("parity examples and homomorphism") {
  CHECK(parity(Permutation::identity(4)) == Parity::even);
  CHECK(parity(Permutation::from_cycles(4, "(1 2)")) == Parity::odd);
  CHECK(parity(Permutation::from_cycles(4, "(1 2)(3 4)")) == Parity::even);
  for (int n = 1; n <= 4; ++n) {
    const auto perms = all_permutations(n);
    for (const Permutation& sigma : perms) {
      REQUIRE(parity(sigma) == inversion_parity(sigma));
      for (const Permutation& tau : perms) {
        const bool odd = (parity(sigma) == Parity::odd) != (parity(tau) == Parity::odd);
        REQUIRE(parity(compose(sigma, tau)) == (odd ? Parity::odd : Parity::even));
      }
    }
  }
}

TEST_CASE("cycle notation") {
  CHECK(Permutation::from_cycles(3, "()").is_identity());
  CHECK(Permutation::from_cycles(4, "(1 2)(3 4)").to_string() == "2,1,4,3");
  CHECK(Permutation::from_cycles(4, "(1 2 3)").inverse() ==
        Permutation::from_cycles(4, "(1 3 2)"));
  CHECK_THROWS_AS(Permutation::from_cycles(3, "(1 2"), std::invalid_argument);
  CHECK_THROWS(Permutation::from_cycles(3, "(1 4)"));
}

TEST_CASE("generator sets") {
  const GeneratorSet an3 = an_generators(3);
  CHECK(an3.size() == 2);
  CHECK(an3.contains(Permutation::from_cycles(3, "(1 2 3)")));
  CHECK(an3.contains(Permutation::from_cycles(3, "(1 3 2)")));
  const GeneratorSet ea3 = ea_generators(3);
  CHECK(ea3.size() == 3);
  CHECK(ea3.contains(Permutation::from_cycles(3, "(1 2)")));
  CHECK(ea_generators(5).size() == 5);
  CHECK_THROWS_AS(an_generators(2), std::domain_error);
  CHECK_THROWS_AS(ea_generators(2), std::domain_error);

  for (int n = 3; n <= 7; ++n) {
    const GeneratorSet an = an_generators(n);
    const GeneratorSet ea = ea_generators(n);
    REQUIRE(an.size() == static_cast<std::size_t>(n - 1));
    REQUIRE(ea.size() == static_cast<std::size_t>(n));
    for (const Permutation& s : an.elements()) {
      REQUIRE(parity(s) == Parity::even);
      REQUIRE(an.contains(s.inverse()));
      REQUIRE(ea.contains(s));
    }
    int odd = 0;
    for (const Permutation& s : ea.elements()) {
      if (parity(s) == Parity::odd) {
        ++odd;
        REQUIRE(s == Permutation::from_cycles(n, "(1 2)"));
      }
    }
    REQUIRE(odd == 1);
  }
}

TEST_CASE("generator set validation") {
  CHECK_THROWS_AS(GeneratorSet({Permutation::identity(3)}), std::domain_error);
  CHECK_THROWS_AS(GeneratorSet({Permutation::from_cycles(3, "(1 2 3)")}),
                  std::domain_error);
}

TEST_CASE("plain ranking is lexicographic and bijective") {
  for (int n = 1; n <= 5; ++n) {
    const auto perms = all_permutations(n);  // lexicographic order
    REQUIRE(perms.size() == factorial(n));
    for (std::uint64_t r = 0; r < perms.size(); ++r) {
      REQUIRE(rank(perms[r]) == r);
      REQUIRE(unrank_permutation(n, r) == perms[r]);
    }
  }
  CHECK_THROWS_AS(unrank_permutation(3, 6), std::domain_error);
}

TEST_CASE("signed ranking round-trips and is dense") {
  for (int n = 2; n <= 4; ++n) {
    std::set<std::uint64_t> seen;
    for (const SignedPermutation& x : all_signed(n)) {
      const std::uint64_t r = rank(x);
      REQUIRE(r < (factorial(n) << n));
      REQUIRE(unrank_signed(n, r) == x);
      seen.insert(r);
    }
    REQUIRE(seen.size() == (factorial(n) << n));
  }
  std::set<std::uint64_t> bp2;
  for (const SignedPermutation& x : all_signed(2)) bp2.insert(rank(x));
  CHECK(*bp2.begin() == 0);
  CHECK(*bp2.rbegin() == 7);
  CHECK(rank(SignedPermutation::parse("-1,2,3")) == 1);
  CHECK_THROWS_AS(unrank_signed(2, 8), std::domain_error);
}
