#include "nlfm/dft.hpp"

#include <cmath>
#include <cstring>
#include <mutex>

#include <fftw3.h>

namespace nlfm {

double phase(std::complex<double> v) {
    if (v.real() == 0.0 && v.imag() == 0.0) return 0.0;
    return std::atan2(v.imag(), v.real());
}

cvec constant_modulus_projection(const cvec& v) {
    cvec out(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        out[i] = std::polar(1.0, phase(v[i]));
    return out;
}

namespace {
// The FFTW planner mutates global state; executing existing plans is safe.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

DftOperator::DftOperator(int K, int N) : K_(K), N_(N) {
    if (N < 1) throw invalid_parameter("sample count must be positive");
    if (K < N)
        throw invalid_parameter("grid size K must be at least the sample count N");
    buf_in_ = reinterpret_cast<std::complex<double>*>(fftw_alloc_complex(K));
    buf_out_ = reinterpret_cast<std::complex<double>*>(fftw_alloc_complex(K));
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan_fwd_ = fftw_plan_dft_1d(K, reinterpret_cast<fftw_complex*>(buf_in_),
                                 reinterpret_cast<fftw_complex*>(buf_out_),
                                 FFTW_FORWARD, FFTW_ESTIMATE);
    plan_bwd_ = fftw_plan_dft_1d(K, reinterpret_cast<fftw_complex*>(buf_in_),
                                 reinterpret_cast<fftw_complex*>(buf_out_),
                                 FFTW_BACKWARD, FFTW_ESTIMATE);
}

DftOperator::~DftOperator() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan_fwd_);
    fftw_destroy_plan(plan_bwd_);
    fftw_free(buf_in_);
    fftw_free(buf_out_);
}

cvec DftOperator::forward(const cvec& x) {
    if (static_cast<int>(x.size()) != N_)
        throw invalid_parameter("forward transform input must have length N");
    std::memcpy(buf_in_, x.data(), N_ * sizeof(std::complex<double>));
    std::memset(buf_in_ + N_, 0, (K_ - N_) * sizeof(std::complex<double>));
    fftw_execute(plan_fwd_);
    return cvec(buf_out_, buf_out_ + K_);
}

cvec DftOperator::adjoint(const cvec& y) {
    if (static_cast<int>(y.size()) != K_)
        throw invalid_parameter("adjoint transform input must have length K");
    std::memcpy(buf_in_, y.data(), K_ * sizeof(std::complex<double>));
    fftw_execute(plan_bwd_);
    // The unnormalized backward transform is exactly the conjugate-transpose
    // sum; only the first N outputs belong to the operator.
    return cvec(buf_out_, buf_out_ + N_);
}

cvec DftOperator::ls_estimate(const cvec& y) {
    cvec x = adjoint(y);
    for (auto& v : x) v /= static_cast<double>(K_);
    return x;
}

} // namespace nlfm
