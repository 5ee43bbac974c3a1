#pragma once

#include <complex>

namespace muskat::detail {

// In-place complex transforms on a d-dimensional n^d array.
// Forward maps physical samples to coefficients of exp(i k.x), including the
// 1/size normalization; inverse is the plain unnormalized synthesis sum.
// Plan creation is serialized internally; execution is safe from any thread.
void fft_forward(int dim, int n, std::complex<double>* data);
void fft_inverse(int dim, int n, std::complex<double>* data);

}  // namespace muskat::detail
