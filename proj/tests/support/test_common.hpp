#pragma once

#include <gtest/gtest.h>

#include <initializer_list>
#include <string>

#include "wvg/error.hpp"
#include "wvg/rational.hpp"

namespace testutil {

using wvg::Rational;
using wvg::RationalVector;

inline Rational R(long p, long q = 1) { return Rational(p, q); }

/// Parses each "p/q" entry.
inline RationalVector V(std::initializer_list<const char*> entries) {
  RationalVector out;
  for (const char* e : entries) out.push_back(Rational::parse(e));
  return out;
}

template <class F>
::testing::AssertionResult throws_errc(F&& f, wvg::Errc expected) {
  try {
    f();
  } catch (const wvg::Error& e) {
    if (e.code() == expected) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << "threw " << e.what() << ", expected " << wvg::errc_name(expected);
  }
  return ::testing::AssertionFailure() << "did not throw " << wvg::errc_name(expected);
}

}  // namespace testutil
