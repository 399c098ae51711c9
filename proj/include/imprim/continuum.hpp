#pragma once

#include <functional>
#include <string>
#include <vector>

#include "imprim/matrix.hpp"

namespace imprim {

// Uniform sampling grid for the numeric demos.
struct TimeGrid {
  int n = 0;
  double dt = 0.0;
  double t0 = 0.0;

  double time(int i) const { return t0 + dt * i; }
};

struct SampledSignal {
  Vector samples;
  double dt = 0.0;
  double t0 = 0.0;
};

double signal_energy(const SampledSignal& s);  // sum |s|^2 dt

// Mother wavelet: grid samples plus a pointwise evaluator, which the
// transform uses to build kernels at off-grid arguments (t-b)/a.
struct WaveletSpec {
  Vector samples;
  double dt = 0.0;
  double t0 = 0.0;
  std::function<Complex(double)> evaluate;
};

WaveletSpec sample_wavelet(const std::function<Complex(double)>& psi,
                           const TimeGrid& grid);

// Scale/translation grid of the wavelet demo. Scales are geometric with
// `voices` points per octave; the cell weight is the left Haar measure
// da db / a^2 of the affine group, i.e. (ln 2 / voices) * db / a in
// log-scale midpoint form.
struct CwtGrid {
  std::vector<double> scales;
  std::vector<double> translations;
  double dt = 0.0;
  double t0 = 0.0;
  double log_step = 0.0;
  std::string version;

  double haar_weight(int scale_index) const {
    return log_step * dt / scales[scale_index];
  }
};

// Pinned reference discretization: 1024 samples, dt = 1/64, t0 = -8,
// scales 2^{j/8} for j = -16..32, translations on the full grid.
TimeGrid reference_time_grid();
CwtGrid reference_cwt_grid();
constexpr const char* kCwtGridVersion = "cwt-ref-1024x49-v1";

// Built-in analytic Morlet wavelet (center frequency 5, unit width) with the
// zero-mean correction term, and the band-limited chirp used by the demos.
WaveletSpec reference_wavelet(const TimeGrid& grid);
SampledSignal reference_chirp(const TimeGrid& grid);

// C_psi = sum_{xi != 0} |psi_hat(xi)|^2 / |xi| dxi over the DFT frequencies
// of the sample grid. Throws NotZeroMean when sum psi dt is not ~0, the
// necessary condition for the constant to be finite in the continuum.
double admissibility_constant(const WaveletSpec& psi, double tol = kDefaultTol);

// coeff(a, b) = sum_t u(t) conj(a^{-1/2} psi((t-b)/a)) dt, scales by rows.
Matrix cwt_forward(const SampledSignal& u, const WaveletSpec& psi,
                   const CwtGrid& grid);

// u(t) ~= (1/C_psi) sum_{a,b} coeff(a,b) a^{-1/2} psi((t-b)/a) haar_weight.
SampledSignal cwt_inverse(const Matrix& coeffs, const WaveletSpec& psi,
                          const CwtGrid& grid, double c_psi);

struct EnergyReport {
  double constant = 0.0;  // C_psi
  double lhs = 0.0;       // sum |coeff|^2 haar / C_psi
  double rhs = 0.0;       // ||u||^2
  double rel_err = 0.0;
  std::string grid_version;
};
EnergyReport cwt_energy_report(const SampledSignal& u, const WaveletSpec& psi,
                               const CwtGrid& grid);

// Phase-space grid for the short-time Fourier demo; midpoint nodes on
// [x0,x1] x [w0,w1].
struct StftGrid {
  int nx = 0, nw = 0;
  double x0 = 0, x1 = 0, w0 = 0, w1 = 0;
  std::string version;
};
StftGrid reference_stft_grid();
constexpr const char* kStftGridVersion = "stft-ref-128x128-v1";

SampledSignal gaussian_window(const TimeGrid& grid);  // pi^{-1/4} e^{-t^2/2}

struct IsometryReport {
  double lhs = 0.0;  // sum |<u, g shifted/modulated>|^2 dx dw / (2 pi)
  double rhs = 0.0;  // ||u||^2 ||g||^2
  double rel_err = 0.0;
  std::string grid_version;
};
IsometryReport stft_isometry_check(const SampledSignal& u, const SampledSignal& g,
                                   const StftGrid& grid);

// Discrete Fourier transform, radix-2 when the length is a power of two and
// direct summation otherwise; sign -1 is the forward transform.
std::vector<Complex> dft(const std::vector<Complex>& in, int sign);

}  // namespace imprim
