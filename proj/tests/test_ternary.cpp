// Copyright 2026 The Inertia Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "inertia/ternary_svg.hpp"

using namespace inertia;

namespace {
size_t count_of(const std::string& hay, const std::string& needle) {
  size_t count = 0, pos = 0;
  while ((pos = hay.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}
}  // namespace

TEST_CASE("two alpha events render as two chords") {
  const InfoSet I =
      union_of({alpha_event(3, {1, 2}, 0.8), alpha_event(3, {1, 2}, 1.0)});
  TernaryDiagram d;
  d.corner_labels = {"n", "p", "c"};
  d.prior = validate({0.25, 0.45, 0.30});
  d.info = &I;
  d.points.emplace_back("posterior", validate({0.2, 0.48, 0.32}));
  const std::string svg = render_ternary_svg(d);
  CHECK(count_of(svg, "<line") == 2);
  CHECK(svg.find("prior") != std::string::npos);
  CHECK(svg.find("posterior") != std::string::npos);
  CHECK(svg.find("nan") == std::string::npos);
}

TEST_CASE("a qualitative statement renders as a filled half-region") {
  const InfoSet I = qualitative(3, {2}, {1}, 2.0);
  TernaryDiagram d;
  d.info = &I;
  const std::string svg = render_ternary_svg(d);
  CHECK(count_of(svg, "fill-opacity") == 1);
}

TEST_CASE("point pieces render as markers") {
  const InfoSet I =
      finite_set({validate({0.3, 0.375, 0.325}), validate({0.335, 0.405, 0.26})});
  TernaryDiagram d;
  d.info = &I;
  const std::string svg = render_ternary_svg(d);
  CHECK(count_of(svg, "<circle") == 2);
}

TEST_CASE("rendering is byte-deterministic") {
  const InfoSet I = interval(3, {0}, 0.2, 0.5);
  TernaryDiagram d;
  d.prior = validate({0.5, 0.3, 0.2});
  d.info = &I;
  CHECK(render_ternary_svg(d) == render_ternary_svg(d));
}

TEST_CASE("non-ternary inputs are rejected, empty paths are ignored") {
  TernaryDiagram d;
  d.prior = validate({0.5, 0.5});
  CHECK_THROWS_AS(render_ternary_svg(d), Error);
  render_ternary(TernaryDiagram{}, "");  // no file, no error
}
