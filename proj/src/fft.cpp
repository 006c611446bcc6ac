#include "qgsw/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qgsw::fft {

namespace {

std::mutex planner_mutex;

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
    fftw_complex* buf = nullptr;
    std::size_t n = 0;
};

// One plan set per (thread, n); FFTW plan execution on the buffers the plan
// was created for is thread-safe, plan creation is not.
struct PlanCache {
    std::map<std::size_t, PlanPair> plans;

    ~PlanCache() {
        std::lock_guard<std::mutex> lock(planner_mutex);
        for (auto& [n, p] : plans) {
            fftw_destroy_plan(p.fwd);
            fftw_destroy_plan(p.bwd);
            fftw_free(p.buf);
        }
    }

    PlanPair& get(std::size_t n) {
        auto it = plans.find(n);
        if (it != plans.end()) return it->second;
        PlanPair p;
        p.n = n;
        {
            std::lock_guard<std::mutex> lock(planner_mutex);
            p.buf = fftw_alloc_complex(n * n);
            const int ni = static_cast<int>(n);
            p.fwd = fftw_plan_dft_2d(ni, ni, p.buf, p.buf, FFTW_FORWARD, FFTW_ESTIMATE);
            p.bwd = fftw_plan_dft_2d(ni, ni, p.buf, p.buf, FFTW_BACKWARD, FFTW_ESTIMATE);
        }
        if (!p.fwd || !p.bwd) throw std::runtime_error("fft: plan creation failed");
        return plans.emplace(n, p).first->second;
    }
};

thread_local PlanCache cache;

void execute(std::vector<std::complex<double>>& data, std::size_t n, bool forward_dir) {
    if (data.size() != n * n) throw std::invalid_argument("fft: size mismatch");
    PlanPair& p = cache.get(n);
    // std::complex<double> is layout-compatible with fftw_complex (double[2]).
    std::memcpy(p.buf, reinterpret_cast<const double*>(data.data()),
                sizeof(fftw_complex) * n * n);
    fftw_execute(forward_dir ? p.fwd : p.bwd);
    std::memcpy(reinterpret_cast<double*>(data.data()), p.buf, sizeof(fftw_complex) * n * n);
}

}  // namespace

void forward(std::vector<std::complex<double>>& data, std::size_t n) {
    execute(data, n, true);
    const double scale = 1.0 / static_cast<double>(n * n);
    for (auto& c : data) c *= scale;
}

void inverse(std::vector<std::complex<double>>& data, std::size_t n) {
    execute(data, n, false);
}

}  // namespace qgsw::fft
