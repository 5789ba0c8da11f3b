// Copyright 2026 The Authors.
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

#include <gtest/gtest.h>

#include "votectl/errors.hpp"
#include "votectl/sources.hpp"

namespace votectl {
namespace {

TEST(SourcesTest, SetCover) {
  const SetSystem s{3, {{1, 2}, {2, 3}, {1, 3}}, 2};
  EXPECT_EQ(min_set_cover(s), 2);
  EXPECT_TRUE(set_cover_satisfiable(s));
  const auto cover = find_set_cover(s);
  ASSERT_TRUE(cover);
  EXPECT_EQ(cover->size(), 2u);
  EXPECT_FALSE(set_cover_satisfiable({3, {{1, 2}, {2, 3}, {1, 3}}, 1}));
  EXPECT_FALSE(min_set_cover({3, {{1, 2}}, 1}));
}

TEST(SourcesTest, IndependentSet) {
  EXPECT_EQ(max_independent_set({4, {{0, 1}, {1, 2}, {2, 3}}}), 2);
  EXPECT_EQ(max_independent_set({3, {{0, 1}, {0, 2}, {1, 2}}}), 1);
  EXPECT_EQ(max_independent_set({5, {}}), 5);
  EXPECT_EQ(find_max_independent_set({3, {{0, 1}, {1, 2}}}), (std::vector<int32_t>{0, 2}));
}

TEST(SourcesTest, MaxSetIntersection) {
  const SetSystem m{4, {{1, 2, 3}, {2, 3, 4}, {1, 4}, {2, 3}}, 2};
  EXPECT_EQ(msi_opt(m), 2);
  EXPECT_EQ(find_msi(m).size(), 2u);
  EXPECT_EQ(msi_opt({3, {{1, 2}, {2, 3}, {1, 3}}, 3}), 0);
}

TEST(SourcesTest, MaxCoverAndDensest) {
  EXPECT_EQ(max_cover_opt({3, {{1, 2, 3}, {1}, {2}}, 1}), 3);
  EXPECT_EQ(max_cover_opt({4, {{1}, {2}, {3, 4}}, 2}), 3);
  const SimpleGraph paw{4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}};
  EXPECT_EQ(internal_edges(paw, {0, 1, 2}), 3);
  EXPECT_EQ(densest_k_subgraph(paw, 3), 3);
  EXPECT_EQ(densest_k_subgraph(paw, 2), 1);
}

TEST(SourcesTest, Parsers) {
  EXPECT_EQ(parse_sets("1,2;2,3"), (std::vector<std::vector<int32_t>>{{1, 2}, {2, 3}}));
  EXPECT_EQ(parse_edges("0-1,1-2"),
            (std::vector<std::pair<int32_t, int32_t>>{{0, 1}, {1, 2}}));
  EXPECT_EQ(parse_integers("1,1,2"), (std::vector<int64_t>{1, 1, 2}));
  EXPECT_THROW(parse_edges("0-"), InvalidInput);
  EXPECT_THROW(check_set_system({2, {{1, 3}}, 1}), InvalidInput);
  EXPECT_THROW(check_graph({2, {{0, 0}}}), InvalidInput);
}

}  // namespace
}  // namespace votectl
