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

#include "cayley_steiner/perm.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace cayley {

namespace {

// Ranks are 64-bit: 20! and 2^16 * 16! are the largest that fit.
constexpr int kMaxSymbols = 20;
constexpr int kMaxSignedSymbols = 16;

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    int value = 0;
    auto [end, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        end != token.data() + token.size()) {
      throw std::invalid_argument("malformed permutation text: '" +
                                  std::string(text) + "'");
    }
    values.push_back(value);
    pos = comma + 1;
  }
  return values;
}

bool is_bijection(std::span<const int> values) {
  const int n = static_cast<int>(values.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : values) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::uint64_t lehmer_rank(std::span<const int> image) {
  const int n = static_cast<int>(image.size());
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < n; ++j) {
      if (image[j] < image[i]) ++smaller_after;
    }
    r = r * static_cast<std::uint64_t>(n - i) + smaller_after;
  }
  return r;
}

std::vector<int> lehmer_unrank(int n, std::uint64_t r) {
  std::vector<int> digits(n);
  for (int i = n - 1; i >= 0; --i) {
    const auto radix = static_cast<std::uint64_t>(n - i);
    digits[i] = static_cast<int>(r % radix);
    r /= radix;
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) {
    image[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return image;
}

}  // namespace

SignedPermutation::SignedPermutation(std::vector<int> entries)
    : entries_(std::move(entries)) {
  if (entries_.size() < 2 || entries_.size() > kMaxSignedSymbols) {
    throw std::domain_error("signed permutation length must be in [2, 16]");
  }
  std::vector<int> absolute(entries_.size());
  std::transform(entries_.begin(), entries_.end(), absolute.begin(),
                 [](int v) { return std::abs(v); });
  if (!is_bijection(absolute)) {
    throw std::domain_error("absolute values do not permute [n]: " +
                            to_string());
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> entries(n);
  std::iota(entries.begin(), entries.end(), 1);
  return SignedPermutation(std::move(entries));
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
  return SignedPermutation(parse_int_list(text));
}

SignedPermutation SignedPermutation::prefix_reversal(int i) const {
  if (i < 1 || i > size()) {
    throw std::domain_error("prefix reversal index out of range");
  }
  std::vector<int> out = entries_;
  std::reverse(out.begin(), out.begin() + i);
  std::transform(out.begin(), out.begin() + i, out.begin(),
                 [](int v) { return -v; });
  return SignedPermutation(std::move(out));
}

std::string SignedPermutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  if (image_.empty() || image_.size() > kMaxSymbols) {
    throw std::domain_error("permutation length must be in [1, 20]");
  }
  if (!is_bijection(image_)) {
    throw std::domain_error("not a bijection of [n]: " + to_string());
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

Permutation Permutation::parse(std::string_view text) {
  return Permutation(parse_int_list(text));
}

Permutation Permutation::from_cycles(int n, std::string_view cycles) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  std::vector<char> touched(n + 1, 0);
  std::size_t pos = 0;
  auto fail = [&] {
    throw std::invalid_argument("malformed cycle notation: '" +
                                std::string(cycles) + "'");
  };
  while (pos < cycles.size()) {
    if (cycles[pos] == ' ') {
      ++pos;
      continue;
    }
    if (cycles[pos] != '(') fail();
    std::size_t close = cycles.find(')', pos);
    if (close == std::string_view::npos) fail();
    std::string_view body = cycles.substr(pos + 1, close - pos - 1);
    std::vector<int> cycle;
    std::size_t p = 0;
    while (p < body.size()) {
      if (body[p] == ' ' || body[p] == ',') {
        ++p;
        continue;
      }
      int value = 0;
      auto [end, ec] = std::from_chars(body.data() + p,
                                       body.data() + body.size(), value);
      if (ec != std::errc()) fail();
      p = static_cast<std::size_t>(end - body.data());
      cycle.push_back(value);
    }
    for (int v : cycle) {
      if (v < 1 || v > n || touched[v]) fail();
      touched[v] = 1;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      image[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
    }
    pos = close + 1;
  }
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    inv[image_[i] - 1] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (image_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(image_[i]);
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<char> seen(image_.size() + 1, 0);
  for (int start = 1; start <= size(); ++start) {
    if (seen[start] || (*this)(start) == start) continue;
    out += '(';
    int v = start;
    bool first = true;
    while (!seen[v]) {
      seen[v] = 1;
      if (!first) out += ' ';
      out += std::to_string(v);
      first = false;
      v = (*this)(v);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) {
    throw std::domain_error("compose: permutation lengths differ");
  }
  std::vector<int> image(sigma.size());
  for (int i = 1; i <= sigma.size(); ++i) image[i - 1] = sigma(tau(i));
  return Permutation(std::move(image));
}

Parity parity(const Permutation& p) {
  // n minus the number of cycles has the parity of the permutation.
  std::vector<char> seen(p.size() + 1, 0);
  int cycles = 0;
  for (int start = 1; start <= p.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (int v = start; !seen[v]; v = p(v)) seen[v] = 1;
  }
  return (p.size() - cycles) % 2 == 0 ? Parity::even : Parity::odd;
}

GeneratorSet::GeneratorSet(std::vector<Permutation> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  for (const auto& g : elements_) {
    if (g.is_identity()) {
      throw std::domain_error("generator set contains the identity");
    }
    if (!contains(g.inverse())) {
      throw std::domain_error("generator set not closed under inverse: " +
                              g.to_cycle_string());
    }
  }
}

bool GeneratorSet::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

GeneratorSet an_generators(int n) {
  if (n < 3) throw std::domain_error("alternating group network needs n >= 3");
  std::vector<Permutation> gens;
  gens.push_back(Permutation::from_cycles(n, "(1 2 3)"));
  gens.push_back(Permutation::from_cycles(n, "(1 3 2)"));
  for (int i = 4; i <= n; ++i) {
    gens.push_back(Permutation::from_cycles(
        n, "(1 2)(3 " + std::to_string(i) + ")"));
  }
  return GeneratorSet(std::move(gens));
}

GeneratorSet ea_generators(int n) {
  if (n < 3) throw std::domain_error("godan graph needs n >= 3");
  const GeneratorSet base = an_generators(n);
  std::vector<Permutation> gens(base.elements().begin(), base.elements().end());
  gens.push_back(Permutation::from_cycles(n, "(1 2)"));
  return GeneratorSet(std::move(gens));
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t rank(const Permutation& p) { return lehmer_rank(p.image()); }

std::uint64_t rank(const SignedPermutation& x) {
  const int n = x.size();
  std::vector<int> absolute(n);
  std::uint64_t mask = 0;
  for (int i = 0; i < n; ++i) {
    const int v = x.entries()[i];
    absolute[i] = std::abs(v);
    if (v < 0) mask |= std::uint64_t{1} << i;
  }
  return (lehmer_rank(absolute) << n) | mask;
}

Permutation unrank_permutation(int n, std::uint64_t r) {
  if (n < 1 || n > kMaxSymbols || r >= factorial(n)) {
    throw std::domain_error("permutation rank out of range");
  }
  return Permutation(lehmer_unrank(n, r));
}

SignedPermutation unrank_signed(int n, std::uint64_t r) {
  if (n < 2 || n > kMaxSignedSymbols || (r >> n) >= factorial(n)) {
    throw std::domain_error("signed permutation rank out of range");
  }
  std::vector<int> entries = lehmer_unrank(n, r >> n);
  for (int i = 0; i < n; ++i) {
    if ((r >> i) & 1U) entries[i] = -entries[i];
  }
  return SignedPermutation(std::move(entries));
}

}  // namespace cayley
