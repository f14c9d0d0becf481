#include "leviflat/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace leviflat {

namespace {
constexpr double kPi = std::numbers::pi;
} // namespace

bool is_power_of_two(std::size_t n)
{
    return n > 0 && (n & (n - 1)) == 0;
}

void fft_radix2(std::vector<Complex>& a, bool inverse)
{
    const std::size_t n = a.size();
    if (!is_power_of_two(n))
        throw std::invalid_argument("fft size must be a power of two");

    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1)
            j ^= bit;
        j ^= bit;
        if (i < j)
            std::swap(a[i], a[j]);
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = (inverse ? 2.0 : -2.0) * kPi / static_cast<double>(len);
        const Complex wlen = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            Complex w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const Complex u = a[i + j];
                const Complex v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }

    if (inverse) {
        const double inv_n = 1.0 / static_cast<double>(n);
        for (Complex& x : a)
            x *= inv_n;
    }
}

std::vector<Complex> fourier_coefficients(std::span<const Complex> samples)
{
    std::vector<Complex> c(samples.begin(), samples.end());
    fft_radix2(c, false);
    const double inv_n = 1.0 / static_cast<double>(c.size());
    for (Complex& x : c)
        x *= inv_n;
    return c;
}

std::vector<Complex> resample_half_step(std::span<const Complex> samples)
{
    const std::size_t n = samples.size();
    std::vector<Complex> c(samples.begin(), samples.end());
    fft_radix2(c, false);
    for (std::size_t m = 0; m < n; ++m) {
        const double freq = (m < n / 2) ? static_cast<double>(m)
                                        : static_cast<double>(m) - static_cast<double>(n);
        c[m] *= std::polar(1.0, kPi * freq / static_cast<double>(n));
    }
    fft_radix2(c, true);
    return c;
}

} // namespace leviflat
