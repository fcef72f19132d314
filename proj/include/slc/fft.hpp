#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <slc/image.hpp>

namespace slc {

/// 2-D frequency-domain representation. Layout matches the source raster:
/// row major, bin (0,0) is DC, no fftshift applied.
struct ComplexSpectrum {
    int width = 0;
    int height = 0;
    std::vector<std::complex<double>> data;

    ComplexSpectrum() = default;
    ComplexSpectrum(int w, int h)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h) {}

    std::complex<double>& at(int x, int y) {
        return data[static_cast<std::size_t>(y) * width + x];
    }
    std::complex<double> at(int x, int y) const {
        return data[static_cast<std::size_t>(y) * width + x];
    }
    std::size_t bin_count() const { return static_cast<std::size_t>(width) * height; }
};

/// Unnormalized forward 2-D DFT. Any dimensions >= 1 are supported; power-of-
/// two sizes run on a radix-2 kernel, everything else through Bluestein's
/// chirp-z reduction. With this convention Parseval reads
/// sum |x|^2 * (m*n) == sum |X|^2.
ComplexSpectrum dft2d(const GrayImage& img);

/// Inverse 2-D DFT scaled by 1/(m*n). Returns the real part; for spectra of
/// real data the imaginary residue is at rounding level and is discarded.
RealField idft2d(const ComplexSpectrum& spec);

/// Per-element magnitude and phase. Phase lies in (-pi, pi]; zero bins map to
/// magnitude 0, phase 0.
std::pair<RealField, RealField> magnitude_phase(const ComplexSpectrum& spec);

namespace fft {

/// In-place unnormalized transform of a row-major w x h complex buffer.
/// The inverse applies no 1/N scaling. Thread-safe; plans are cached per size.
void transform_2d(std::complex<double>* data, int width, int height, bool inverse);

} // namespace fft

} // namespace slc
