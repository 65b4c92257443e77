#pragma once

#include <complex>
#include <vector>

namespace mccdma {

using cplx = std::complex<double>;

/// Entry (k, l) of the normalized 2^m x 2^m Walsh-Hadamard matrix:
/// (-1)^{sum_i k_i l_i} / sqrt(2^m).
double hadamard_entry(int m, int k, int l);

/// In-place fast Walsh-Hadamard transform, 1/sqrt(2) per stage so the
/// transform is orthonormal (an involution). Length must be a power of two.
void fwht_inplace(std::vector<double>& v);
void fwht_inplace(std::vector<cplx>& v);

std::vector<double> fwht(std::vector<double> v);
std::vector<cplx> fwht(std::vector<cplx> v);

/// Point on the complex unit circle; | |z| - 1 | must be <= 1e-12.
struct UnitCirclePoint {
    cplx z;
    explicit UnitCirclePoint(cplx value);
};

/// H_{2^m} * (1, z, ..., z^{2^m-1})^T via the tensor factorization:
/// entry i = prod_t phi_t^{1-i_t} theta_t^{i_t} with
/// phi_t = (1 + z^{2^t})/sqrt(2), theta_t = (1 - z^{2^t})/sqrt(2).
std::vector<cplx> tensor_profile(int m, const UnitCirclePoint& z);

}  // namespace mccdma
