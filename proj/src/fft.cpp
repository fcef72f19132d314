#include <slc/fft.hpp>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace slc {
namespace {

using cplx = std::complex<double>;

constexpr bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

// One cached plan per line length. Power-of-two lengths carry a bit-reversal
// table and a shared twiddle table; other lengths carry the Bluestein chirp
// and the spectrum of its convolution filter, evaluated on a pow2 sub-plan.
struct Plan {
    std::size_t n = 0;
    bool pow2 = false;

    // radix-2
    std::vector<std::size_t> rev;
    std::vector<cplx> tw; // tw[j] = exp(-2*pi*i*j/n), j < n/2

    // bluestein
    std::size_t m = 0;
    std::shared_ptr<const Plan> sub;
    std::vector<cplx> chirp;      // exp(-i*pi*j^2/n), j < n
    std::vector<cplx> filter_fft; // forward FFT of the chirp filter, length m
};

void radix2_inplace(const Plan& p, cplx* a, bool inverse) {
    const std::size_t n = p.n;
    if (n == 1) return;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = p.rev[i];
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len >> 1;
        const std::size_t step = n / len;
        for (std::size_t base = 0; base < n; base += len) {
            for (std::size_t j = 0; j < half; ++j) {
                cplx w = p.tw[j * step];
                if (inverse) w = std::conj(w);
                const cplx u = a[base + j];
                const cplx v = a[base + j + half] * w;
                a[base + j] = u + v;
                a[base + j + half] = u - v;
            }
        }
    }
}

std::shared_ptr<const Plan> make_plan(std::size_t n);

std::shared_ptr<const Plan> get_plan(std::size_t n) {
    static std::mutex mu;
    static std::map<std::size_t, std::shared_ptr<const Plan>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto plan = make_plan(n);
    cache.emplace(n, plan);
    return plan;
}

std::shared_ptr<const Plan> make_plan(std::size_t n) {
    auto plan = std::make_shared<Plan>();
    plan->n = n;
    plan->pow2 = is_pow2(n);
    constexpr double two_pi = 2.0 * std::numbers::pi;

    if (plan->pow2) {
        plan->rev.resize(n);
        std::size_t bits = 0;
        while ((std::size_t{1} << bits) < n) ++bits;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t r = 0;
            for (std::size_t b = 0; b < bits; ++b) {
                if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
            }
            plan->rev[i] = r;
        }
        plan->tw.resize(std::max<std::size_t>(n / 2, 1));
        for (std::size_t j = 0; j < plan->tw.size(); ++j) {
            const double ang = -two_pi * static_cast<double>(j) / static_cast<double>(n);
            plan->tw[j] = {std::cos(ang), std::sin(ang)};
        }
        return plan;
    }

    plan->m = next_pow2(2 * n - 1);
    plan->sub = get_plan(plan->m);
    plan->chirp.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        // j^2 mod 2n keeps the angle in [0, 2*pi) so large j stays accurate
        const std::size_t q = (j * j) % (2 * n);
        const double ang = -std::numbers::pi * static_cast<double>(q) / static_cast<double>(n);
        plan->chirp[j] = {std::cos(ang), std::sin(ang)};
    }
    std::vector<cplx> filter(plan->m, cplx{0.0, 0.0});
    filter[0] = std::conj(plan->chirp[0]);
    for (std::size_t j = 1; j < n; ++j) {
        filter[j] = std::conj(plan->chirp[j]);
        filter[plan->m - j] = std::conj(plan->chirp[j]);
    }
    radix2_inplace(*plan->sub, filter.data(), false);
    plan->filter_fft = std::move(filter);
    return plan;
}

void bluestein_forward(const Plan& p, cplx* a, std::vector<cplx>& work) {
    const std::size_t n = p.n;
    const std::size_t m = p.m;
    work.assign(m, cplx{0.0, 0.0});
    for (std::size_t j = 0; j < n; ++j) work[j] = a[j] * p.chirp[j];
    radix2_inplace(*p.sub, work.data(), false);
    for (std::size_t j = 0; j < m; ++j) work[j] *= p.filter_fft[j];
    radix2_inplace(*p.sub, work.data(), true);
    const double inv_m = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k) a[k] = work[k] * inv_m * p.chirp[k];
}

// Unnormalized 1-D transform of a contiguous line.
void transform_line(const Plan& p, cplx* a, bool inverse, std::vector<cplx>& work) {
    if (p.n == 1) return;
    if (p.pow2) {
        radix2_inplace(p, a, inverse);
        return;
    }
    if (!inverse) {
        bluestein_forward(p, a, work);
        return;
    }
    // unnormalized inverse via conjugation
    for (std::size_t j = 0; j < p.n; ++j) a[j] = std::conj(a[j]);
    bluestein_forward(p, a, work);
    for (std::size_t j = 0; j < p.n; ++j) a[j] = std::conj(a[j]);
}

} // namespace

namespace fft {

void transform_2d(cplx* data, int width, int height, bool inverse) {
    if (width < 1 || height < 1) {
        throw std::invalid_argument("fft: dimensions must be >= 1");
    }
    const auto row_plan = get_plan(static_cast<std::size_t>(width));
    const auto col_plan = get_plan(static_cast<std::size_t>(height));
    std::vector<cplx> work;

    for (int y = 0; y < height; ++y) {
        transform_line(*row_plan, data + static_cast<std::size_t>(y) * width, inverse, work);
    }
    if (height == 1) return;

    std::vector<cplx> col(static_cast<std::size_t>(height));
    for (int x = 0; x < width; ++x) {
        for (int y = 0; y < height; ++y) col[y] = data[static_cast<std::size_t>(y) * width + x];
        transform_line(*col_plan, col.data(), inverse, work);
        for (int y = 0; y < height; ++y) data[static_cast<std::size_t>(y) * width + x] = col[y];
    }
}

} // namespace fft

ComplexSpectrum dft2d(const GrayImage& img) {
    require_valid(img, "dft2d");
    ComplexSpectrum spec(img.width, img.height);
    for (std::size_t i = 0; i < img.data.size(); ++i) spec.data[i] = {img.data[i], 0.0};
    fft::transform_2d(spec.data.data(), spec.width, spec.height, false);
    return spec;
}

RealField idft2d(const ComplexSpectrum& spec) {
    if (spec.width < 1 || spec.height < 1 || spec.data.size() != spec.bin_count()) {
        throw std::invalid_argument("idft2d: invalid spectrum");
    }
    std::vector<std::complex<double>> buf = spec.data;
    fft::transform_2d(buf.data(), spec.width, spec.height, true);
    RealField out(spec.width, spec.height);
    const double scale = 1.0 / static_cast<double>(spec.bin_count());
    for (std::size_t i = 0; i < buf.size(); ++i) out.data[i] = buf[i].real() * scale;
    return out;
}

std::pair<RealField, RealField> magnitude_phase(const ComplexSpectrum& spec) {
    if (spec.width < 1 || spec.height < 1 || spec.data.size() != spec.bin_count()) {
        throw std::invalid_argument("magnitude_phase: invalid spectrum");
    }
    RealField mag(spec.width, spec.height);
    RealField phase(spec.width, spec.height);
    for (std::size_t i = 0; i < spec.data.size(); ++i) {
        const auto& c = spec.data[i];
        mag.data[i] = std::hypot(c.real(), c.imag());
        double p = std::atan2(c.imag(), c.real());
        if (p <= -std::numbers::pi) p += 2.0 * std::numbers::pi;
        phase.data[i] = p;
    }
    return {std::move(mag), std::move(phase)};
}

} // namespace slc
