#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace positroid {

/// Subset of the ground set {1, ..., n}, n <= 64, stored as one machine
/// word: label i occupies bit i-1. Comparisons order by mask value.
class ground_subset {
 public:
  constexpr ground_subset() = default;

  ground_subset(std::initializer_list<int> labels) {
    for (int e : labels) insert(e);
  }

  [[nodiscard]] static constexpr ground_subset from_mask(std::uint64_t m) {
    ground_subset s;
    s.mask_ = m;
    return s;
  }

  /// {1, ..., n}.
  [[nodiscard]] static constexpr ground_subset full(int n) {
    return from_mask(n >= 64 ? ~0ull : (1ull << n) - 1);
  }

  [[nodiscard]] static constexpr ground_subset single(int label) {
    ground_subset s;
    s.insert(label);
    return s;
  }

  [[nodiscard]] constexpr std::uint64_t mask() const { return mask_; }
  [[nodiscard]] constexpr int size() const { return std::popcount(mask_); }
  [[nodiscard]] constexpr bool empty() const { return mask_ == 0; }

  [[nodiscard]] constexpr bool contains(int label) const {
    return label >= 1 && label <= 64 && ((mask_ >> (label - 1)) & 1u) != 0;
  }

  constexpr void insert(int label) { mask_ |= bit(label); }
  constexpr void erase(int label) { mask_ &= ~bit(label); }

  /// Smallest label, or 0 when empty.
  [[nodiscard]] constexpr int lowest() const {
    return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1;
  }

  [[nodiscard]] constexpr bool subset_of(ground_subset o) const {
    return (mask_ & ~o.mask_) == 0;
  }

  [[nodiscard]] constexpr ground_subset operator|(ground_subset o) const {
    return from_mask(mask_ | o.mask_);
  }
  [[nodiscard]] constexpr ground_subset operator&(ground_subset o) const {
    return from_mask(mask_ & o.mask_);
  }
  [[nodiscard]] constexpr ground_subset operator^(ground_subset o) const {
    return from_mask(mask_ ^ o.mask_);
  }
  /// Set difference.
  [[nodiscard]] constexpr ground_subset operator-(ground_subset o) const {
    return from_mask(mask_ & ~o.mask_);
  }
  [[nodiscard]] constexpr ground_subset complement_in(int n) const {
    return from_mask(full(n).mask_ & ~mask_);
  }

  constexpr ground_subset& operator|=(ground_subset o) {
    mask_ |= o.mask_;
    return *this;
  }
  constexpr ground_subset& operator-=(ground_subset o) {
    mask_ &= ~o.mask_;
    return *this;
  }

  [[nodiscard]] constexpr auto operator<=>(const ground_subset&) const =
      default;

  /// Labels in ascending order.
  [[nodiscard]] std::vector<int> labels() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t m = mask_; m != 0; m &= m - 1)
      out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  /// "2,3,5" (empty string for the empty set).
  [[nodiscard]] std::string to_string() const {
    std::string out;
    for (int e : labels()) {
      if (!out.empty()) out += ',';
      out += std::to_string(e);
    }
    return out;
  }

  /// Parses "2,3,5" (or ""); every label must lie in {1, ..., n}.
  [[nodiscard]] static ground_subset parse(std::string_view text, int n) {
    ground_subset s;
    std::size_t i = 0;
    while (i < text.size()) {
      std::size_t j = text.find(',', i);
      if (j == std::string_view::npos) j = text.size();
      std::string_view item = text.substr(i, j - i);
      if (item.empty()) throw parse_error("empty label in set literal");
      int v = 0;
      for (char c : item) {
        if (c < '0' || c > '9')
          throw parse_error("bad label '" + std::string(item) + "' in set literal");
        v = v * 10 + (c - '0');
        if (v > 64) break;
      }
      if (v < 1 || v > n)
        throw parse_error("label " + std::string(item) + " out of range 1.." +
                          std::to_string(n));
      s.insert(v);
      i = j + 1;
    }
    return s;
  }

 private:
  static constexpr std::uint64_t bit(int label) {
    return (label >= 1 && label <= 64) ? 1ull << (label - 1) : 0;
  }

  std::uint64_t mask_ = 0;
};

}  // namespace positroid
