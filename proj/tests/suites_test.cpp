// Copyright 2026 The ortholat Authors
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
#include <gtest/gtest.h>

#include "ortholat/suites.hpp"

namespace ortholat {
namespace {

SuiteConfig small_config(std::uint64_t seed = 42) {
  SuiteConfig c;
  c.dim = 4;
  c.lattice_dim = 16;
  c.trials = 20;
  c.seed = seed;
  c.inner_samples = 8;
  return c;
}

TEST(Suites, NamesAreFixed) {
  const std::vector<std::string> expected{"lemma1", "prop2",    "prop3",  "theorem4", "corollary5",
                                          "prop6",  "theorem7", "axioms", "bridge"};
  EXPECT_EQ(suite_names(), expected);
  EXPECT_TRUE(is_suite_name("bridge"));
  EXPECT_FALSE(is_suite_name("all"));
  EXPECT_FALSE(is_suite_name("nosuch"));
  EXPECT_THROW(run_suite("nosuch", small_config()), InvalidInput);
}

TEST(Suites, AllPassOnSmallRuns) {
  for (std::uint64_t seed : {1u, 42u}) {
    for (const std::string& name : suite_names()) {
      const SuiteResult r = run_suite(name, small_config(seed));
      EXPECT_TRUE(r.passed) << name << " seed " << seed << ": " << r.report.max_violation << " " << r.error;
      EXPECT_EQ(r.trials, 20u);
      EXPECT_TRUE(r.error.empty());
    }
  }
}

TEST(Suites, EdgeDimensions) {
  for (std::size_t dim : {1u, 2u, 8u}) {
    SuiteConfig c = small_config();
    c.dim = dim;
    c.lattice_dim = std::max<std::size_t>(dim, 16);
    c.trials = 8;
    for (const std::string& name : suite_names()) {
      const SuiteResult r = run_suite(name, c);
      EXPECT_TRUE(r.passed) << name << " dim " << dim << ": " << r.error;
    }
  }
}

TEST(Suites, SingleTrial) {
  SuiteConfig c = small_config();
  c.trials = 1;
  const SuiteResult r = run_suite("prop2", c);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(suite_result_to_json(r).at("trials").get<int>(), 1);
}

TEST(Suites, DeterministicPerSeed) {
  for (const char* name : {"theorem4", "prop3", "axioms"}) {
    const std::string a = dump_json(suite_result_to_json(run_suite(name, small_config(9))));
    const std::string b = dump_json(suite_result_to_json(run_suite(name, small_config(9))));
    EXPECT_EQ(a, b) << name;
  }
  EXPECT_NE(dump_json(suite_result_to_json(run_suite("theorem4", small_config(9)))),
            dump_json(suite_result_to_json(run_suite("theorem4", small_config(10)))));
}

TEST(Suites, TighterToleranceStillPassesWithHeadroom) {
  SuiteConfig c = small_config();
  c.tol.tol_eq = 1e-11;
  c.tol.tol_zero = 1e-11;
  c.tol.tol_psd = 1e-11;
  for (const char* name : {"prop2", "theorem4", "bridge"}) EXPECT_TRUE(run_suite(name, c).passed) << name;
}

TEST(Suites, ResultJsonShape) {
  const Json j = suite_result_to_json(run_suite("bridge", small_config()));
  EXPECT_EQ(j.at("name").get<std::string>(), "bridge");
  EXPECT_TRUE(j.at("passed").get<bool>());
  EXPECT_TRUE(j.contains("max_violation"));
  EXPECT_EQ(j.at("report").size(), 4u);
  EXPECT_FALSE(j.contains("error"));
}

}  // namespace
}  // namespace ortholat
