#pragma once

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "wittcv/error.hpp"
#include "wittcv/witt.hpp"

#define EXPECT_ERROR_CODE(stmt, expected)                      \
  do {                                                         \
    try {                                                      \
      stmt;                                                    \
      ADD_FAILURE() << "expected " << #expected;               \
    } catch (const wittcv::Error& e) {                         \
      EXPECT_EQ(e.code(), wittcv::ErrorCode::expected) << e.what(); \
    }                                                          \
  } while (0)

namespace support {

inline oracle::Poly poly_of(const wittcv::witt::WittElement& x) {
  oracle::Poly out;
  for (auto c : x.coeffs) out.push_back(c.code);
  return out;
}

inline wittcv::witt::WittElement elem_of(const wittcv::ffield::FieldCtx& f, const oracle::Poly& u) {
  std::vector<wittcv::ffield::Elem> c;
  for (auto v : u) c.push_back(f.from_int(v));
  return wittcv::witt::make_element(f, c);
}

}  // namespace support
