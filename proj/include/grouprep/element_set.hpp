#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace grouprep {

using Element = std::uint32_t;

/// Fixed-universe bitset over element indices 0..N-1. Subgroups, cosets and
/// images under bijections are all stored this way.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Element>(i));
    return s;
  }

  template <typename Range>
  static ElementSet from(std::size_t universe, const Range& elements) {
    ElementSet s(universe);
    for (auto e : elements) s.insert(static_cast<Element>(e));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Element e) const noexcept {
    return e < universe_ && ((words_[e >> 6] >> (e & 63)) & 1U) != 0;
  }
  void insert(Element e) noexcept { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Element e) noexcept { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  ElementSet& operator&=(const ElementSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) noexcept { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) noexcept { return a |= b; }

  std::size_t intersection_size(const ElementSet& o) const noexcept {
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      n += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return n;
  }

  bool is_subset_of(const ElementSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

  /// Members in ascending order.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits != 0) {
        auto tz = std::countr_zero(bits);
        out.push_back(static_cast<Element>(w * 64 + static_cast<std::size_t>(tz)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits != 0) {
        auto tz = std::countr_zero(bits);
        f(static_cast<Element>(w * 64 + static_cast<std::size_t>(tz)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  std::size_t hash() const noexcept {
    std::size_t h = universe_;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace grouprep
