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

#include "votectl/edgectl.hpp"
#include "votectl/errors.hpp"
#include "votectl/gadgets.hpp"
#include "votectl/results.hpp"
#include "votectl/seedctl.hpp"
#include "votectl/solve.hpp"

namespace votectl {
namespace {

TEST(CsvTest, HeaderIsVersioned) {
  EXPECT_EQ(csv_header(),
            "# votectl-results v1\n"
            "instance_id,manipulation,mode,value,samples,std_error,wall_time_ms\n");
}

TEST(CsvTest, RowsRoundTrip) {
  ResultRow exact{"ex2", "seeding", Evaluation::of_exact(Rational(7, 3)), 12.5};
  Evaluation mc;
  mc.mode = Mode::kMonteCarlo;
  mc.estimate = 0.125;
  mc.samples = 1000;
  mc.std_error = 0.01;
  ResultRow sampled{"ex2", "edge_removal", mc, 3.0};
  const std::string text = csv_header() + csv_row(exact) + csv_row(sampled, false);
  const auto rows = parse_csv(text);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].value.exact, Rational(7, 3));
  EXPECT_EQ(rows[0].wall_time_ms, 12.5);
  EXPECT_EQ(rows[1].value.estimate, 0.125);
  EXPECT_EQ(rows[1].value.samples, 1000);
  EXPECT_EQ(rows[1].value.std_error, 0.01);
  EXPECT_EQ(csv_row(sampled, false), "ex2,edge_removal,mc,0.125,1000,0.01,\n");
  EXPECT_THROW(parse_csv("a,b\n"), InvalidInput);
}

TEST(PlanJsonTest, SeedingRoundTrip) {
  const SeedingPlan plan = brute_force_ecs(prop1_greedy_trap(), 2);
  const std::string text = seeding_plan_to_json(plan, "p1");
  EXPECT_EQ(plan_kind(text), "seeding");
  const SeedingPlan back = seeding_plan_from_json(text);
  EXPECT_EQ(back.assignment, plan.assignment);
  EXPECT_EQ(back.value.exact, plan.value.exact);
  EXPECT_EQ(back.budget, plan.budget);
  EXPECT_EQ(seeding_plan_to_json(back, "p1"), text);
}

TEST(PlanJsonTest, EdgeRoundTrip) {
  const Instance in = msi_imer({3, {{1, 2}, {2, 3}, {1, 3}}, 2}, 2, true);
  for (const EdgePlan& plan : {unlimited_ecer_single(in), unlimited_imer(in)}) {
    const std::string text = edge_plan_to_json(plan);
    const EdgePlan back = edge_plan_from_json(text);
    EXPECT_EQ(back.edges, plan.edges);
    EXPECT_EQ(back.kind, plan.kind);
    EXPECT_EQ(back.objective, plan.objective);
    EXPECT_EQ(edge_plan_to_json(back), text);
  }
  EXPECT_EQ(plan_kind(edge_plan_to_json(unlimited_imer(in))), "influence_removal");
}

TEST(SolveTest, DispatchAndRefusals) {
  const Instance p1 = prop1_greedy_trap();
  EXPECT_EQ(solve(p1, "brute-ecs", Budget::of(2), {}).value().exact, 1);
  EXPECT_THROW(solve(p1, "brute-ecs", Budget::unlimited(), {}), PreconditionFailed);
  EXPECT_THROW(solve(example1_clique(), "theorem4", Budget::of(3), {}), HardToManipulate);
  EXPECT_THROW(solve(p1, "no-such-solver", Budget::of(2), {}), InvalidInput);
  const Instance comp = msi_imer({3, {{1, 2}, {2, 3}, {1, 3}}, 2}, 2, true);
  const SolveResult r = solve(comp, "obs1", Budget::unlimited(), {});
  EXPECT_EQ(r.manipulation, "edge_removal");
  EXPECT_EQ(r.edges->edges.size(), comp.graph.edges.size());
  EXPECT_THROW(solve(comp, "obs1", Budget::of(3), {}), PreconditionFailed);
}

}  // namespace
}  // namespace votectl
