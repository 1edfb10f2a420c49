// Copyright 2026 The kakcell Authors
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

#include <Eigen/Core>

namespace kakcell::detail {

/// Simultaneous diagonalization of two commuting real symmetric 4x4 matrices
/// by cyclic Jacobi sweeps with joint rotation angles. Overwrites a and b
/// with O^T a O and O^T b O and returns the accumulated orthogonal O.
/// Converges to machine precision for commuting inputs; max_sweeps caps the
/// sweep count.
Eigen::Matrix4d joint_diagonalize(Eigen::Matrix4d& a, Eigen::Matrix4d& b,
                                  int max_sweeps = 30);

/// Sum of squared off-diagonal entries of both matrices.
double joint_offdiagonal(const Eigen::Matrix4d& a, const Eigen::Matrix4d& b);

}  // namespace kakcell::detail
