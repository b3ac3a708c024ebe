// Copyright 2026 The ftopo Authors
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

// Overflow-checked signed 64-bit arithmetic.
//
// Every index, coindex and closed-form value in this library is accumulated
// through these helpers. The headroom is therefore exactly the int64 range:
// any result with |value| < 2^63 is exact, anything larger raises
// OverflowError instead of wrapping. For reference, a graph with maximum
// degree 1e5 contributes at most 1e15 per vertex to F, so F stays exact up to
// roughly 9e3 such vertices; pairwise coindices are bounded by
// (|V|-1) * M1 and hit the limit earlier on dense graphs.

#ifndef FTOPO_CORE_CHECKED_HPP
#define FTOPO_CORE_CHECKED_HPP

#include <cstdint>
#include <limits>

#include "errors.hpp"

namespace ftopo {

using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int mul(Int a, Int b, Int c) { return mul(mul(a, b), c); }

inline Int square(Int a) { return mul(a, a); }

inline Int cube(Int a) { return mul(a, a, a); }

// Narrowing from an unsigned count.
inline Int from(std::uint64_t v) {
  if (v > static_cast<std::uint64_t>(std::numeric_limits<Int>::max())) {
    throw OverflowError("count exceeds int64 range");
  }
  return static_cast<Int>(v);
}

}  // namespace checked

// Integer with overflow-checked operators, so closed forms read as written.
class Exact {
 public:
  constexpr Exact(Int v = 0) : value_(v) {}  // NOLINT(google-explicit-constructor)
  constexpr Int value() const { return value_; }

  friend Exact operator+(Exact a, Exact b) { return checked::add(a.value_, b.value_); }
  friend Exact operator-(Exact a, Exact b) { return checked::sub(a.value_, b.value_); }
  friend Exact operator*(Exact a, Exact b) { return checked::mul(a.value_, b.value_); }

 private:
  Int value_;
};

}  // namespace ftopo

#endif  // FTOPO_CORE_CHECKED_HPP
