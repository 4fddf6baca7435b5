#pragma once

#include "bicol/foundation.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>

namespace testing {

inline bicol::Rat q(long n, long d = 1) { return bicol::makeRat(n, d); }

inline bicol::RatVec rv(std::initializer_list<bicol::Rat> xs) { return bicol::RatVec(xs); }

inline bicol::IntVec iv(std::initializer_list<long> xs) {
  bicol::IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline bicol::IntMatrix im(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<bicol::IntVec> r;
  for (auto row : rows) {
    bicol::IntVec v;
    for (long x : row) v.emplace_back(x);
    r.push_back(v);
  }
  return bicol::IntMatrix::fromRows(r);
}

template <class F>
std::optional<bicol::Errc> errorOf(F&& f) {
  try {
    f();
  } catch (const bicol::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Coloured partitions by listing them: nonincreasing sequences of (size, colour) parts.
inline void listPartitions(int remaining, int maxSize, int maxColour, int d, long& count) {
  if (remaining == 0) {
    ++count;
    return;
  }
  for (int s = std::min(remaining, maxSize); s >= 1; --s)
    for (int c = (s == maxSize ? maxColour : d - 1); c >= 0; --c) listPartitions(remaining - s, s, c, d, count);
}

inline std::vector<bicol::Int> colouredPartitions(int d, int maxN) {
  std::vector<bicol::Int> out;
  for (int n = 0; n <= maxN; ++n) {
    long count = 0;
    listPartitions(n, n, d - 1, d, count);
    out.emplace_back(count);
  }
  return out;
}

} // namespace testing
