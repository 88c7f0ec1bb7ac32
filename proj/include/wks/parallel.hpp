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

#ifndef WKS_PARALLEL_HPP_
#define WKS_PARALLEL_HPP_

namespace wks {

// Kernels that have an OpenMP path keep the serial loop as the reference;
// both must produce identical results.
enum class Execution { kSerial, kParallel };

int available_threads();

}  // namespace wks

#endif  // WKS_PARALLEL_HPP_
