// Copyright 2026 The Authors.
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

#include "rsmax/subset.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace rsmax {

Subset::Subset(std::initializer_list<int> elements) {
  for (int e : elements) Insert(e);
}

Subset Subset::FromElements(std::span<const int> elements) {
  Subset s;
  for (int e : elements) s.Insert(e);
  return s;
}

Subset Subset::FromMask(std::uint64_t mask) {
  Subset s;
  s.inline_ = mask;
  return s;
}

Subset Subset::Range(int n) {
  Subset s;
  if (n <= 0) return s;
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  s.Grow(words);
  std::span<std::uint64_t> w = s.MutableWords();
  for (std::size_t i = 0; i < words; ++i) w[i] = ~std::uint64_t{0};
  const int rem = n % 64;
  if (rem != 0) w[words - 1] = (std::uint64_t{1} << rem) - 1;
  return s;
}

std::span<const std::uint64_t> Subset::Words() const {
  if (heap_.empty()) return {&inline_, 1};
  return heap_;
}

std::span<std::uint64_t> Subset::MutableWords() {
  if (heap_.empty()) return {&inline_, 1};
  return heap_;
}

std::uint64_t Subset::Word(std::size_t index) const {
  const auto w = Words();
  return index < w.size() ? w[index] : 0;
}

void Subset::Grow(std::size_t words) {
  if (words <= WordCount()) return;
  if (heap_.empty()) {
    heap_.assign(words, 0);
    heap_[0] = inline_;
    inline_ = 0;
  } else {
    heap_.resize(words, 0);
  }
}

bool Subset::Contains(int element) const {
  if (element < 0) return false;
  const std::size_t w = static_cast<std::size_t>(element) / 64;
  return (Word(w) >> (element % 64)) & 1u;
}

void Subset::Insert(int element) {
  if (element < 0) throw std::out_of_range("negative element id");
  const std::size_t w = static_cast<std::size_t>(element) / 64;
  Grow(w + 1);
  MutableWords()[w] |= std::uint64_t{1} << (element % 64);
}

void Subset::Erase(int element) {
  if (element < 0) return;
  const std::size_t w = static_cast<std::size_t>(element) / 64;
  if (w >= WordCount()) return;
  MutableWords()[w] &= ~(std::uint64_t{1} << (element % 64));
}

int Subset::Size() const {
  int count = 0;
  for (std::uint64_t w : Words()) count += std::popcount(w);
  return count;
}

bool Subset::Empty() const {
  for (std::uint64_t w : Words()) {
    if (w != 0) return false;
  }
  return true;
}

int Subset::Highest() const {
  const auto words = Words();
  for (std::size_t i = words.size(); i-- > 0;) {
    if (words[i] != 0) {
      return static_cast<int>(i * 64) + 63 - std::countl_zero(words[i]);
    }
  }
  return -1;
}

std::vector<int> Subset::Elements() const {
  std::vector<int> out;
  out.reserve(Size());
  ForEach([&](int e) { out.push_back(e); });
  return out;
}

Subset Subset::With(int element) const {
  Subset s = *this;
  s.Insert(element);
  return s;
}

Subset Subset::Without(int element) const {
  Subset s = *this;
  s.Erase(element);
  return s;
}

Subset& Subset::operator|=(const Subset& other) {
  Grow(other.WordCount());
  auto mine = MutableWords();
  const auto theirs = other.Words();
  for (std::size_t i = 0; i < theirs.size(); ++i) mine[i] |= theirs[i];
  return *this;
}

Subset& Subset::operator&=(const Subset& other) {
  auto mine = MutableWords();
  for (std::size_t i = 0; i < mine.size(); ++i) mine[i] &= other.Word(i);
  return *this;
}

Subset& Subset::operator-=(const Subset& other) {
  auto mine = MutableWords();
  for (std::size_t i = 0; i < mine.size(); ++i) mine[i] &= ~other.Word(i);
  return *this;
}

bool Subset::IsSubsetOf(const Subset& other) const {
  const auto mine = Words();
  for (std::size_t i = 0; i < mine.size(); ++i) {
    if ((mine[i] & ~other.Word(i)) != 0) return false;
  }
  return true;
}

bool Subset::Intersects(const Subset& other) const {
  const auto mine = Words();
  for (std::size_t i = 0; i < mine.size(); ++i) {
    if ((mine[i] & other.Word(i)) != 0) return true;
  }
  return false;
}

std::string Subset::ToString() const {
  std::string out = "{";
  bool first = true;
  ForEach([&](int e) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  });
  out += '}';
  return out;
}

bool operator==(const Subset& a, const Subset& b) {
  const std::size_t n = std::max(a.WordCount(), b.WordCount());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.Word(i) != b.Word(i)) return false;
  }
  return true;
}

bool operator<(const Subset& a, const Subset& b) {
  // The first differing element decides; a prefix sorts first.
  const std::size_t n = std::max(a.WordCount(), b.WordCount());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t x = a.Word(i);
    const std::uint64_t y = b.Word(i);
    if (x == y) continue;
    const std::uint64_t diff = x ^ y;
    const int bit = std::countr_zero(diff);
    // The set owning the lowest differing element has the smaller sequence
    // at that position, unless the other set has run out of elements.
    const std::uint64_t above = bit == 63 ? 0 : (~std::uint64_t{0} << (bit + 1));
    const bool a_has = (x >> bit) & 1u;
    if (a_has) {
      // b lacks this element: b either continues with something larger or ends.
      const bool b_continues = (y & above) != 0 || [&] {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (b.Word(j) != 0) return true;
        }
        return false;
      }();
      return b_continues;
    }
    const bool a_continues = (x & above) != 0 || [&] {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (a.Word(j) != 0) return true;
      }
      return false;
    }();
    return !a_continues;
  }
  return false;
}

Subset operator|(Subset a, const Subset& b) { return a |= b; }
Subset operator&(Subset a, const Subset& b) { return a &= b; }
Subset operator-(Subset a, const Subset& b) { return a -= b; }

std::size_t SubsetHash::operator()(const Subset& s) const {
  std::uint64_t h = 1469598103934665603ull;
  const auto words = s.Words();
  std::size_t last = words.size();
  while (last > 0 && words[last - 1] == 0) --last;
  for (std::size_t i = 0; i < last; ++i) {
    h ^= words[i];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > std::numeric_limits<std::uint64_t>::max() / b) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t Binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 result = 1;
  for (int i = 1; i <= r; ++i) {
    // result * (n - r + i) / i stays integral at every step.
    result = result * static_cast<unsigned>(n - r + i) / static_cast<unsigned>(i);
    if (result > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace rsmax
