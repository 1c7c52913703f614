// Copyright 2026 The RamseyKit Authors
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


#ifndef RAMSEYKIT_TESTS_TEST_UTIL_H_
#define RAMSEYKIT_TESTS_TEST_UTIL_H_

#include <string>

#include "absl/status/status.h"
#include "gtest/gtest.h"

#define RK_TEST_CONCAT_INNER(a, b) a##b
#define RK_TEST_CONCAT(a, b) RK_TEST_CONCAT_INNER(a, b)
#define RK_ASSERT_OK_AND_ASSIGN_IMPL(tmp, lhs, expr)      \
  auto tmp = (expr);                                      \
  ASSERT_TRUE(tmp.ok()) << std::string(tmp.status().message()); \
  lhs = *std::move(tmp)
#define ASSERT_OK_AND_ASSIGN(lhs, expr) \
  RK_ASSERT_OK_AND_ASSIGN_IMPL(RK_TEST_CONCAT(status_or_, __LINE__), lhs, expr)
#define ASSERT_OK(expr)                                          \
  do {                                                           \
    const absl::Status rk_status = (expr);                       \
    ASSERT_TRUE(rk_status.ok()) << std::string(rk_status.message()); \
  } while (0)
#define EXPECT_OK(expr)                                          \
  do {                                                           \
    const absl::Status rk_status = (expr);                       \
    EXPECT_TRUE(rk_status.ok()) << std::string(rk_status.message()); \
  } while (0)

#endif  // RAMSEYKIT_TESTS_TEST_UTIL_H_
