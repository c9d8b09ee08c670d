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

#ifndef RSMAX_SUBSET_H_
#define RSMAX_SUBSET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rsmax {

// A set of element ids, stored as a bit-set. Sets whose ids all fit in one
// machine word never touch the heap; wider sets spill every word into a
// vector. Subsets are ordinary values: copyable, comparable, hashable by
// content.
class Subset {
 public:
  Subset() = default;
  Subset(std::initializer_list<int> elements);

  static Subset FromElements(std::span<const int> elements);
  static Subset FromMask(std::uint64_t mask);
  // {0, 1, ..., n-1}.
  static Subset Range(int n);

  bool Contains(int element) const;
  void Insert(int element);
  void Erase(int element);

  int Size() const;
  bool Empty() const;
  // Largest element id, or -1 for the empty set.
  int Highest() const;

  std::vector<int> Elements() const;

  // Visits elements in increasing id order.
  template <typename Fn>
  void ForEach(Fn&& fn) const {
    const std::span<const std::uint64_t> words = Words();
    for (std::size_t w = 0; w < words.size(); ++w) {
      std::uint64_t bits = words[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        fn(static_cast<int>(w * 64) + bit);
        bits &= bits - 1;
      }
    }
  }

  Subset With(int element) const;
  Subset Without(int element) const;

  Subset& operator|=(const Subset& other);
  Subset& operator&=(const Subset& other);
  Subset& operator-=(const Subset& other);

  bool IsSubsetOf(const Subset& other) const;
  bool Intersects(const Subset& other) const;

  // Backing words, least significant first. Trailing words may be zero.
  std::span<const std::uint64_t> Words() const;
  std::size_t WordCount() const { return Words().size(); }
  std::uint64_t Word(std::size_t index) const;

  // "{0,3,7}".
  std::string ToString() const;

  friend bool operator==(const Subset& a, const Subset& b);
  // Lexicographic on the increasing element sequence: {0,1} < {0,2} < {1}.
  // Matches the order in which ForEachCombination visits equal-size sets.
  friend bool operator<(const Subset& a, const Subset& b);

 private:
  void Grow(std::size_t words);
  std::span<std::uint64_t> MutableWords();

  // Invariant: heap_ empty => inline mode (word 0 is inline_); otherwise heap_
  // holds every word and inline_ is zero.
  std::uint64_t inline_ = 0;
  std::vector<std::uint64_t> heap_;
};

Subset operator|(Subset a, const Subset& b);
Subset operator&(Subset a, const Subset& b);
Subset operator-(Subset a, const Subset& b);

struct SubsetHash {
  std::size_t operator()(const Subset& s) const;
};

// Calls fn(subset) for every r-element subset of `items` in lexicographic
// order of positions in `items`. When `items` is increasing this is the
// lexicographic order of element sequences. fn returns false to stop early;
// the function returns false iff it was stopped.
template <typename Fn>
bool ForEachCombination(std::span<const int> items, int r, Fn&& fn) {
  const int n = static_cast<int>(items.size());
  if (r < 0 || r > n) return true;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    Subset s;
    for (int i : idx) s.Insert(items[i]);
    if (!fn(s)) return false;
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

template <typename Fn>
bool ForEachCombination(const Subset& items, int r, Fn&& fn) {
  const std::vector<int> elements = items.Elements();
  return ForEachCombination(std::span<const int>(elements), r,
                            std::forward<Fn>(fn));
}

// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t Binomial(int n, int r);

// Saturating product.
std::uint64_t SaturatingMul(std::uint64_t a, std::uint64_t b);

}  // namespace rsmax

#endif  // RSMAX_SUBSET_H_
