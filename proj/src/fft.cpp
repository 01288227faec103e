#include "eegnlp/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace eegnlp::fft {

namespace {

// One cached plan per (size, direction). Plans are created with
// FFTW_ESTIMATE | FFTW_UNALIGNED so fftw_execute_dft can run them on any
// caller-provided buffers; execution on distinct buffers is thread-safe,
// plan creation is not and is serialized here.
class PlanCache {
public:
    fftw_plan get(std::size_t n, int sign) {
        std::lock_guard<std::mutex> lock(mu_);
        auto& table = sign == FFTW_FORWARD ? fwd_ : bwd_;
        auto it = table.find(n);
        if (it != table.end()) return it->second;
        std::vector<std::complex<double>> a(n), b(n);
        fftw_plan p = fftw_plan_dft_1d(
            static_cast<int>(n), reinterpret_cast<fftw_complex*>(a.data()),
            reinterpret_cast<fftw_complex*>(b.data()), sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        if (!p) throw std::runtime_error("fftw_plan_dft_1d failed");
        table.emplace(n, p);
        return p;
    }

private:
    std::mutex mu_;
    std::unordered_map<std::size_t, fftw_plan> fwd_, bwd_;
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

std::vector<std::complex<double>> run(const std::vector<std::complex<double>>& x, int sign) {
    if (x.empty()) return {};
    std::vector<std::complex<double>> in(x), out(x.size());
    fftw_plan p = cache().get(x.size(), sign);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.data()));
    return out;
}

}  // namespace

std::vector<std::complex<double>> fft(const std::vector<std::complex<double>>& x) {
    return run(x, FFTW_FORWARD);
}

std::vector<std::complex<double>> ifft(const std::vector<std::complex<double>>& x) {
    auto out = run(x, FFTW_BACKWARD);
    const double inv = 1.0 / static_cast<double>(x.size());
    for (auto& v : out) v *= inv;
    return out;
}

std::vector<std::complex<double>> fft_real(const std::vector<double>& x) {
    std::vector<std::complex<double>> cx(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) cx[i] = std::complex<double>(x[i], 0.0);
    return fft(cx);
}

}  // namespace eegnlp::fft
