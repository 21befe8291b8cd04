#pragma once

#include <vector>

#include "jacklab/symfunc.hpp"

namespace jacklab {

// Eigenvalue of the Laplace-Beltrami operator on J_lambda restricted to
// `nvars` variables: alpha*b(lambda) - b(lambda^t) + (nvars-1)*|lambda|.
Poly dalpha_eigenvalue(const Partition& lambda, int nvars);

// The two operators and their alpha-combination, realized on the restriction
// to `nvars` variables. The argument must be homogeneous of degree <= nvars
// (so the restriction is faithful) and in the m basis.
SymFunc apply_D1(const SymFunc& f, int nvars);
SymFunc apply_D2(const SymFunc& f, int nvars);
SymFunc apply_Dalpha(const SymFunc& f, int nvars);

// Mixed derivation: sum over variables m and argument pairs i < j of
// f_1 ... (x_m d_m f_i) ... (x_m d_m f_j) ... f_k. A single argument gives 0.
// Arguments may be in any basis; the result is returned in the m basis.
SymFunc apply_D12(const std::vector<SymFunc>& fs, int nvars);

// Per-(degree, nvars) matrices of D1 and D2 in the m basis, built once by
// brute-force expansion and cached for concurrent readers. Entry [i][j] is
// the m_{basis[i]} coefficient of the operator applied to m_{basis[j]}.
struct DMatrices {
    std::vector<Partition> basis;  // canonical order
    std::vector<std::vector<Rat>> d1;
    std::vector<std::vector<Rat>> d2;
};

const DMatrices& dalpha_matrices(int degree, int nvars);

}  // namespace jacklab
