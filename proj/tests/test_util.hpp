#pragma once

#include <gtest/gtest.h>

#include "conekit/error.hpp"
#include "conekit/linalg.hpp"

namespace conekit::test {

inline Scalar q(long num, long den = 1) { return Scalar::exact(num, den); }

inline Vector vd(std::initializer_list<double> xs) { return Vector::from_doubles(std::vector<double>(xs)); }

}  // namespace conekit::test

// Asserts that `stmt` throws conekit::Error with the given code.
#define EXPECT_ERRC(stmt, errc)                                         \
  do {                                                                  \
    try {                                                               \
      stmt;                                                             \
      ADD_FAILURE() << #stmt " did not throw";                          \
    } catch (const ::conekit::Error& e_) {                              \
      EXPECT_EQ(e_.code(), errc) << e_.what();                          \
    }                                                                   \
  } while (0)
