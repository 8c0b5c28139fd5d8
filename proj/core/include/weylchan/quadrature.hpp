// Copyright 2026 The weylchan Authors
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

#ifndef WEYLCHAN_QUADRATURE_HPP
#define WEYLCHAN_QUADRATURE_HPP

#include <functional>

namespace weylchan {

/// Adaptive Simpson quadrature with absolute tolerance. Depth 20 caps the
/// subdivision at 2^20 intervals.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol = 1e-9, int max_depth = 20);

}  // namespace weylchan

#endif  // WEYLCHAN_QUADRATURE_HPP
