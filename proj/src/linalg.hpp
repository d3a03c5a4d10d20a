// Copyright 2026 The exflow Authors
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

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

namespace exflow {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// max |A - A^dagger|.
double hermiticity_residual(const CMatrix& a);

double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// Ascending eigenvalues of the Hermitian part of `a`.
Eigen::VectorXd hermitian_eigenvalues(const CMatrix& a);

/// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const CMatrix& a);

/// Moore-Penrose pseudo-inverse; singular values <= cutoff are dropped.
CMatrix pseudo_inverse(const CMatrix& a, double cutoff);

/// Matrix of a linear map on d x d operators acting on column-major vec().
CMatrix superoperator_matrix(int dim,
                             const std::function<CMatrix(const CMatrix&)>& map);

CMatrix unvec(const CVector& v, int dim);
CVector vec(const CMatrix& m);

}  // namespace exflow
