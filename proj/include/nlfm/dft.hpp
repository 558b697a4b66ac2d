#pragma once

#include <complex>
#include <vector>

#include "nlfm/errors.hpp"

// Forward declarations of the FFTW plan handles so the header does not leak
// fftw3.h into every translation unit.
struct fftw_plan_s;

namespace nlfm {

using cvec = std::vector<std::complex<double>>;

// Phase of a complex value with the artifact-wide tie-break phase(0) = 0.
double phase(std::complex<double> v);

// Maps every entry to exp(j*phase(v)); zeros map to 1+0j.
cvec constant_modulus_projection(const cvec& v);

// The K x N transform pair used throughout: forward applies the DFT matrix
// with entries exp(-j*2*pi*k*n/K) to a length-N vector (realized as a
// zero-padded length-K FFT); adjoint applies the conjugate transpose to a
// length-K vector and keeps the first N outputs. Each instance owns its own
// FFTW plans and buffers, so distinct instances can run concurrently.
class DftOperator {
  public:
    DftOperator(int K, int N);
    ~DftOperator();
    DftOperator(const DftOperator&) = delete;
    DftOperator& operator=(const DftOperator&) = delete;

    cvec forward(const cvec& x);   // length N -> length K
    cvec adjoint(const cvec& y);   // length K -> length N
    cvec ls_estimate(const cvec& y);  // (1/K) * adjoint(y)

    int grid_size() const { return K_; }
    int num_samples() const { return N_; }

  private:
    int K_;
    int N_;
    std::complex<double>* buf_in_;
    std::complex<double>* buf_out_;
    fftw_plan_s* plan_fwd_;
    fftw_plan_s* plan_bwd_;
};

} // namespace nlfm
