// Copyright 2026 The qbandit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QBANDIT_TESTS_TEST_UTIL_H
#define QBANDIT_TESTS_TEST_UTIL_H

#include <stdexcept>
#include <string>

#include "gtest/gtest.h"

// Expects `stmt` to throw a std::exception whose message contains `text`.
#define EXPECT_THROW_MSG(stmt, text)                                                   \
    do {                                                                               \
        bool thrown_ = false;                                                          \
        try {                                                                          \
            stmt;                                                                      \
        } catch (const std::exception &e_) {                                           \
            thrown_ = true;                                                            \
            EXPECT_NE(std::string(e_.what()).find(text), std::string::npos)            \
                << "message was: " << e_.what();                                       \
        }                                                                              \
        EXPECT_TRUE(thrown_) << "expected exception containing: " << text;             \
    } while (0)

#endif  // QBANDIT_TESTS_TEST_UTIL_H
