#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace posetkit {

using ElementId = std::size_t;

/// Dense subset of a carrier {0, ..., universe-1}, packed 64 ids per word.
///
/// All binary operations require both operands to share the same universe.
/// Bits at positions >= universe are kept zero so word-wise comparison and
/// hashing are exact.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static ElementSet of(std::size_t universe, std::initializer_list<ElementId> ids) {
    ElementSet s(universe);
    for (auto id : ids) s.insert(id);
    return s;
  }

  static ElementSet of(std::size_t universe, std::span<const ElementId> ids) {
    ElementSet s(universe);
    for (auto id : ids) s.insert(id);
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(ElementId id) const {
    return (words_[id >> 6] >> (id & 63)) & 1u;
  }
  void insert(ElementId id) { words_[id >> 6] |= std::uint64_t{1} << (id & 63); }
  void erase(ElementId id) { words_[id >> 6] &= ~(std::uint64_t{1} << (id & 63)); }
  void set(ElementId id, bool value) {
    if (value) insert(id); else erase(id);
  }
  void clear() {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_full() const { return count() == universe_; }

  bool is_subset_of(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  bool intersects(const ElementSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  ElementSet& operator&=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  /// Complement relative to the universe.
  ElementSet operator~() const {
    ElementSet s(*this);
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) = default;

  /// Members with id < bound.
  ElementSet prefix(std::size_t bound) const {
    ElementSet s(universe_);
    const std::size_t full_words = bound >> 6;
    for (std::size_t i = 0; i < full_words && i < words_.size(); ++i) s.words_[i] = words_[i];
    if (full_words < words_.size() && (bound & 63))
      s.words_[full_words] = words_[full_words] & ((std::uint64_t{1} << (bound & 63)) - 1);
    return s;
  }

  /// True when both sets agree on every id < bound.
  bool agrees_below(const ElementSet& other, std::size_t bound) const {
    const std::size_t full_words = bound >> 6;
    for (std::size_t i = 0; i < full_words && i < words_.size(); ++i)
      if (words_[i] != other.words_[i]) return false;
    if (full_words < words_.size() && (bound & 63)) {
      const auto mask = (std::uint64_t{1} << (bound & 63)) - 1;
      if ((words_[full_words] ^ other.words_[full_words]) & mask) return false;
    }
    return true;
  }

  std::optional<ElementId> first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return std::nullopt;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(i * 64 + bit);
        w &= w - 1;
      }
    }
  }

  std::vector<ElementId> members() const {
    std::vector<ElementId> out;
    out.reserve(count());
    for_each([&](ElementId id) { out.push_back(id); });
    return out;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  std::size_t hash() const {
    std::size_t h = universe_ * 0x9e3779b97f4a7c15ull;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }

private:
  void trim() {
    if (universe_ & 63) words_.back() &= (std::uint64_t{1} << (universe_ & 63)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace posetkit
