#include "muskat/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

namespace muskat::detail {

namespace {

struct PlanEntry {
    fftw_plan plan = nullptr;
    fftw_complex* scratch = nullptr;  // keeps the planning buffer alive
    ~PlanEntry() {
        if (plan) fftw_destroy_plan(plan);
        if (scratch) fftw_free(scratch);
    }
};

// FFTW plan creation is not thread-safe; execution via fftw_execute_dft on
// caller buffers is. Plans are made FFTW_UNALIGNED so any buffer qualifies.
fftw_plan get_plan(int dim, int n, int sign) {
    static std::map<std::tuple<int, int, int>, std::unique_ptr<PlanEntry>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(dim, n, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second->plan;

    auto entry = std::make_unique<PlanEntry>();
    std::size_t total = dim == 1 ? std::size_t(n) : std::size_t(n) * n;
    entry->scratch = fftw_alloc_complex(total);
    unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    entry->plan = dim == 1
                      ? fftw_plan_dft_1d(n, entry->scratch, entry->scratch, sign, flags)
                      : fftw_plan_dft_2d(n, n, entry->scratch, entry->scratch, sign, flags);
    fftw_plan plan = entry->plan;
    cache.emplace(key, std::move(entry));
    return plan;
}

}  // namespace

void fft_forward(int dim, int n, std::complex<double>* data) {
    fftw_plan plan = get_plan(dim, n, FFTW_FORWARD);
    auto* p = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plan, p, p);
    std::size_t total = dim == 1 ? std::size_t(n) : std::size_t(n) * n;
    double scale = 1.0 / double(total);
    for (std::size_t i = 0; i < total; ++i) data[i] *= scale;
}

void fft_inverse(int dim, int n, std::complex<double>* data) {
    fftw_plan plan = get_plan(dim, n, FFTW_BACKWARD);
    auto* p = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plan, p, p);
}

}  // namespace muskat::detail
