#pragma once

#include <complex>
#include <vector>

namespace eegnlp::fft {

// Complex DFT/IDFT of arbitrary length (FFTW backend, plans cached per size,
// thread-safe). The inverse is normalized by 1/N so that ifft(fft(x)) == x.
std::vector<std::complex<double>> fft(const std::vector<std::complex<double>>& x);
std::vector<std::complex<double>> ifft(const std::vector<std::complex<double>>& x);

// Forward DFT of a real signal.
std::vector<std::complex<double>> fft_real(const std::vector<double>& x);

}  // namespace eegnlp::fft
