// Copyright 2026 The wks Authors
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

#ifndef WKS_OFFLINE_ASSEMBLE_HPP_
#define WKS_OFFLINE_ASSEMBLE_HPP_

#include <vector>

#include "wks/instance.hpp"
#include "wks/offline/cover.hpp"
#include "wks/rational.hpp"
#include "wks/schedule.hpp"

namespace wks::offline {

// floor((2 + eps) l k_j), the per-class server budget of the rounding.
int augmentation_cap(const Instance& inst, int j, const Rational& eps);

// Turns chosen (v, j, I) intervals into server trajectories. Per class,
// intervals clipped to [1, T] are swept by left endpoint; each goes to a
// free server already at v if there is one, else to the lowest-index free
// server. Class j uses max(k_j, peak overlap) servers; more than
// augmentation_cap throws InfeasibilityError naming (j, t). Idle servers
// stay where they are.
Schedule assemble_schedule(const Instance& inst, const std::vector<VertexCover>& covers,
                           const Rational& eps);

}  // namespace wks::offline

#endif  // WKS_OFFLINE_ASSEMBLE_HPP_
