#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace wvg {

/// Hard ceiling on players for anything that enumerates all 2^n coalitions.
inline constexpr int kMaxPlayers = 24;
/// Widest player set a Coalition can address.
inline constexpr int kCoalitionBits = 32;

/// Subset of the player set {0, ..., n-1}, stored as a bit mask (bit i = player i).
///
/// Player indices are 0-based in the C++ API; JSON and CLI output use the
/// 1-based numbering customary for voting games.
class Coalition {
 public:
  using Mask = std::uint32_t;

  Coalition() = default;
  /// Throws InvalidGame if mask has bits at or above n, or n is out of range.
  Coalition(int n, Mask mask);

  static Coalition empty(int n) { return Coalition(n, 0); }
  static Coalition grand(int n);
  /// Builds a coalition from 0-based player indices.
  static Coalition of(int n, const std::vector<int>& players);

  int n() const noexcept { return n_; }
  Mask mask() const noexcept { return mask_; }

  bool contains(int player) const noexcept { return (mask_ >> player) & 1U; }
  int size() const noexcept { return std::popcount(mask_); }
  bool is_empty() const noexcept { return mask_ == 0; }

  bool is_subset_of(const Coalition& other) const noexcept { return (mask_ & ~other.mask_) == 0; }
  Coalition united(const Coalition& other) const { return Coalition(n_, mask_ | other.mask_); }
  Coalition with(int player) const { return Coalition(n_, mask_ | (Mask{1} << player)); }
  Coalition without(int player) const { return Coalition(n_, mask_ & ~(Mask{1} << player)); }
  /// N \ S.
  Coalition complement() const;

  /// 0-based member list in increasing order.
  std::vector<int> members() const;
  /// Renders as "{1,2}" using 1-based player numbers.
  std::string str() const;

  friend bool operator==(const Coalition&, const Coalition&) = default;
  friend auto operator<=>(const Coalition& a, const Coalition& b) { return a.mask_ <=> b.mask_; }

 private:
  int n_ = 0;
  Mask mask_ = 0;
};

inline Coalition::Mask full_mask(int n) {
  return n >= kCoalitionBits ? ~Coalition::Mask{0} : ((Coalition::Mask{1} << n) - 1);
}

}  // namespace wvg
