#include "wvg/coalition.hpp"

#include "wvg/error.hpp"

namespace wvg {

Coalition::Coalition(int n, Mask mask) : n_(n), mask_(mask) {
  if (n < 0 || n > kCoalitionBits) throw Error(Errc::InvalidGame, "player count out of range");
  if ((mask & ~full_mask(n)) != 0) throw Error(Errc::InvalidGame, "coalition names a player beyond n");
}

Coalition Coalition::grand(int n) { return Coalition(n, full_mask(n)); }

Coalition Coalition::of(int n, const std::vector<int>& players) {
  Mask m = 0;
  for (int p : players) {
    if (p < 0 || p >= n) throw Error(Errc::InvalidGame, "player index out of range");
    m |= Mask{1} << p;
  }
  return Coalition(n, m);
}

Coalition Coalition::complement() const { return Coalition(n_, ~mask_ & full_mask(n_)); }

std::vector<int> Coalition::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Mask m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string Coalition::str() const {
  std::string s = "{";
  bool first = true;
  for (int p : members()) {
    if (!first) s += ",";
    s += std::to_string(p + 1);
    first = false;
  }
  return s + "}";
}

}  // namespace wvg
