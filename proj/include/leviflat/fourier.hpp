#ifndef LEVIFLAT_FOURIER_HPP
#define LEVIFLAT_FOURIER_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "leviflat/log_complex.hpp"

namespace leviflat {

bool is_power_of_two(std::size_t n);

/// In-place radix-2 FFT; size must be a power of two.  Forward kernel
/// e^{-2 pi i jk/N}, no normalization.  The inverse applies 1/N.
void fft_radix2(std::vector<Complex>& a, bool inverse);

/// Discrete Fourier coefficients c[m] = (1/N) sum_j x_j e^{-2 pi i jm/N}.
/// Index m in [0, N/2) carries frequency m, index m in [N/2, N) carries
/// frequency m - N.
std::vector<Complex> fourier_coefficients(std::span<const Complex> samples);

/// Values of the trigonometric interpolant of periodic samples at the
/// half-shifted grid j + 1/2.  Modes at and above Nyquist are treated as
/// negative frequencies.
std::vector<Complex> resample_half_step(std::span<const Complex> samples);

} // namespace leviflat

#endif
