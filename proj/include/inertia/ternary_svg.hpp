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

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inertia/infoset.hpp"
#include "inertia/simplex.hpp"

namespace inertia {

// Barycentric diagram for 3-state problems: the info set's pieces are drawn
// as shaded regions, chords, or dots; beliefs as labeled markers. Output
// bytes are deterministic for fixed inputs.
struct TernaryDiagram {
  std::vector<std::string> corner_labels = {"s1", "s2", "s3"};
  std::optional<Belief> prior;
  const InfoSet* info = nullptr;
  std::vector<std::pair<std::string, Belief>> points;
};

std::string render_ternary_svg(const TernaryDiagram& diagram);

// Writes the SVG to a file; throws NotThreeStates for non-3-state inputs.
void render_ternary(const TernaryDiagram& diagram, const std::string& path);

}  // namespace inertia
