// Copyright 2026 The Singleshot Authors
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


#include "singleshot/harness/oracle_suite.h"

#include "gtest/gtest.h"

using namespace singleshot;

TEST(oracle_suite, every_check_passes_on_a_small_sample) {
    auto checks = run_oracle_suite(4, 60);
    ASSERT_EQ(checks.size(), 12u);
    for (const auto &c : checks) {
        EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
        EXPECT_GT(c.cases, 0u) << c.name;
    }
}
