/*
 *   Copyright 2026 the lat authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "lat/laws.hpp"

using namespace lat;

TEST_CASE("law names are unique and the registry is substantial") {
  const auto laws = law_suite<Rational>();
  std::set<std::string> names;
  for (const auto& l : laws) names.insert(l.name);
  CHECK(names.size() == laws.size());
  CHECK(laws.size() >= 30);
}

TEST_CASE("every law passes over exact rationals") {
  for (const auto& rep : run_law_suite<Rational>(40, 20260810)) {
    INFO(rep.name);
    CHECK(rep.passed());
  }
}

TEST_CASE("every law passes over doubles at the default tolerance") {
  for (const auto& rep : run_law_suite<double>(10, 99)) {
    INFO(rep.name);
    CHECK(rep.passed());
  }
}

TEST_CASE("law runs are deterministic in the seed") {
  const auto laws = law_suite<Rational>();
  const auto& law = laws.front();
  const LawReport a = run_law(law, 25, 7);
  const LawReport b = run_law(law, 25, 7);
  CHECK(a.failures.size() == b.failures.size());
  for (std::size_t i = 0; i < a.failures.size(); ++i)
    CHECK(a.failures[i].seed == b.failures[i].seed);
}
