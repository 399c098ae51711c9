#include "imprim/continuum.hpp"

#include <cmath>

namespace imprim {

namespace {

constexpr double kPi = 3.14159265358979323846;

bool near(double a, double b) { return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a) + std::abs(b)); }

void check_grid_match(const SampledSignal& u, const CwtGrid& grid) {
  if (static_cast<int>(grid.translations.size()) != u.samples.size() ||
      !near(u.dt, grid.dt) || !near(u.t0, grid.t0))
    fail("GridMismatch", "signal grid does not match the transform grid");
}

}  // namespace

double signal_energy(const SampledSignal& s) {
  return s.samples.squaredNorm() * s.dt;
}

WaveletSpec sample_wavelet(const std::function<Complex(double)>& psi,
                           const TimeGrid& grid) {
  WaveletSpec spec;
  spec.dt = grid.dt;
  spec.t0 = grid.t0;
  spec.evaluate = psi;
  spec.samples.resize(grid.n);
  for (int i = 0; i < grid.n; ++i) spec.samples(i) = psi(grid.time(i));
  return spec;
}

TimeGrid reference_time_grid() { return {1024, 1.0 / 64.0, -8.0}; }

CwtGrid reference_cwt_grid() {
  const TimeGrid t = reference_time_grid();
  CwtGrid grid;
  grid.dt = t.dt;
  grid.t0 = t.t0;
  grid.log_step = std::log(2.0) / 8.0;
  grid.version = kCwtGridVersion;
  for (int j = -16; j <= 32; ++j) grid.scales.push_back(std::pow(2.0, j / 8.0));
  for (int i = 0; i < t.n; ++i) grid.translations.push_back(t.time(i));
  return grid;
}

WaveletSpec reference_wavelet(const TimeGrid& grid) {
  // Morlet at center frequency 5 with the zero-mean correction; the
  // correction makes psi_hat(0) vanish exactly.
  const double xi0 = 5.0;
  const double kappa = std::exp(-xi0 * xi0 / 2.0);
  auto psi = [xi0, kappa](double t) -> Complex {
    const double envelope = std::exp(-t * t / 2.0);
    return envelope * (Complex(std::cos(xi0 * t), std::sin(xi0 * t)) - kappa);
  };
  return sample_wavelet(psi, grid);
}

SampledSignal reference_chirp(const TimeGrid& grid) {
  SampledSignal u;
  u.dt = grid.dt;
  u.t0 = grid.t0;
  u.samples.resize(grid.n);
  // Linear chirp sweeping 4.5 .. 6.5 rad/s. The band sits inside the covered
  // octaves and high enough that the significant scales stay below ~2, which
  // keeps the translation sum clear of the grid boundary.
  for (int i = 0; i < grid.n; ++i) {
    const double t = grid.time(i);
    const double envelope = std::exp(-std::pow(t / 2.8, 2.0));
    const double phase = 5.5 * t + 0.0625 * t * t;
    u.samples(i) = envelope * Complex(std::cos(phase), std::sin(phase));
  }
  return u;
}

std::vector<Complex> dft(const std::vector<Complex>& in, int sign) {
  const size_t n = in.size();
  const bool pow2 = n > 0 && (n & (n - 1)) == 0;
  if (!pow2) {
    std::vector<Complex> out(n);
    for (size_t k = 0; k < n; ++k) {
      Complex acc(0, 0);
      for (size_t m = 0; m < n; ++m)
        acc += in[m] * std::polar(1.0, sign * 2.0 * kPi * double(k) * double(m) / double(n));
      out[k] = acc;
    }
    return out;
  }

  // Iterative radix-2 with bit-reversal permutation.
  std::vector<Complex> a = in;
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double angle = sign * 2.0 * kPi / double(len);
    const Complex wl = std::polar(1.0, angle);
    for (size_t i = 0; i < n; i += len) {
      Complex w(1, 0);
      for (size_t k = 0; k < len / 2; ++k) {
        const Complex p = a[i + k];
        const Complex q = a[i + k + len / 2] * w;
        a[i + k] = p + q;
        a[i + k + len / 2] = p - q;
        w *= wl;
      }
    }
  }
  return a;
}

double admissibility_constant(const WaveletSpec& psi, double tol) {
  const int n = static_cast<int>(psi.samples.size());
  if (n < 16) fail("ValidationError", "wavelet grid too short");

  Complex mean(0, 0);
  double abs_mass = 0.0;
  for (int i = 0; i < n; ++i) {
    mean += psi.samples(i) * psi.dt;
    abs_mass += std::abs(psi.samples(i)) * psi.dt;
  }
  if (std::abs(mean) > std::max(tol, 1e-9) * (1.0 + abs_mass))
    fail("NotZeroMean", "wavelet mean is " + std::to_string(std::abs(mean)));

  std::vector<Complex> in(psi.samples.data(), psi.samples.data() + n);
  const std::vector<Complex> hat = dft(in, -1);

  const double period = n * psi.dt;
  const double dxi = 2.0 * kPi / period;
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    const int signed_k = k <= n / 2 ? k : k - n;
    if (signed_k == 0) continue;
    const double xi = dxi * signed_k;
    const double mag = std::abs(hat[k]) * psi.dt;  // psi_hat(xi) up to a phase
    acc += mag * mag / std::abs(xi) * dxi;
  }
  return acc;
}

Matrix cwt_forward(const SampledSignal& u, const WaveletSpec& psi,
                   const CwtGrid& grid) {
  check_grid_match(u, grid);
  if (!psi.evaluate) fail("ValidationError", "wavelet has no evaluator");
  const int n = static_cast<int>(u.samples.size());
  const int ns = static_cast<int>(grid.scales.size());

  Matrix coeffs(ns, n);
  Vector kernel(2 * n - 1);  // kernel[d + n-1] = conj(a^{-1/2} psi(d dt / a))
  for (int s = 0; s < ns; ++s) {
    const double a = grid.scales[s];
    const double root = 1.0 / std::sqrt(a);
    for (int d = -(n - 1); d <= n - 1; ++d)
      kernel(d + n - 1) = std::conj(root * psi.evaluate(d * grid.dt / a));
    for (int b = 0; b < n; ++b) {
      // sum_i u[i] * kernel[i - b]; the window is contiguous in the kernel.
      const Complex acc =
          (u.samples.array() * kernel.segment(n - 1 - b, n).array()).sum();
      coeffs(s, b) = acc * grid.dt;
    }
  }
  return coeffs;
}

SampledSignal cwt_inverse(const Matrix& coeffs, const WaveletSpec& psi,
                          const CwtGrid& grid, double c_psi) {
  if (!psi.evaluate) fail("ValidationError", "wavelet has no evaluator");
  const int n = static_cast<int>(grid.translations.size());
  const int ns = static_cast<int>(grid.scales.size());
  if (coeffs.rows() != ns || coeffs.cols() != n)
    fail("GridMismatch", "coefficient array does not match the grid");

  SampledSignal out;
  out.dt = grid.dt;
  out.t0 = grid.t0;
  out.samples = Vector::Zero(n);

  Vector kernel(2 * n - 1);
  for (int s = 0; s < ns; ++s) {
    const double a = grid.scales[s];
    const double root = 1.0 / std::sqrt(a);
    for (int d = -(n - 1); d <= n - 1; ++d)
      kernel(d + n - 1) = root * psi.evaluate(d * grid.dt / a);
    const double w = grid.haar_weight(s);
    for (int i = 0; i < n; ++i) {
      // sum_b coeff(s,b) * psi_a(i - b): reversed contiguous kernel window.
      const Complex acc = (coeffs.row(s).transpose().array() *
                           kernel.segment(i, n).reverse().array())
                              .sum();
      out.samples(i) += acc * w;
    }
  }
  out.samples /= c_psi;
  return out;
}

EnergyReport cwt_energy_report(const SampledSignal& u, const WaveletSpec& psi,
                               const CwtGrid& grid) {
  EnergyReport report;
  report.grid_version = grid.version;
  report.constant = admissibility_constant(psi);
  const Matrix coeffs = cwt_forward(u, psi, grid);
  double acc = 0.0;
  for (int s = 0; s < coeffs.rows(); ++s)
    acc += coeffs.row(s).squaredNorm() * grid.haar_weight(s);
  report.lhs = acc / report.constant;
  report.rhs = signal_energy(u);
  report.rel_err = std::abs(report.lhs - report.rhs) / report.rhs;
  return report;
}

StftGrid reference_stft_grid() {
  return {128, 128, -8.0, 8.0, -8.0, 8.0, kStftGridVersion};
}

SampledSignal gaussian_window(const TimeGrid& grid) {
  SampledSignal g;
  g.dt = grid.dt;
  g.t0 = grid.t0;
  g.samples.resize(grid.n);
  const double norm = std::pow(kPi, -0.25);
  for (int i = 0; i < grid.n; ++i) {
    const double t = grid.time(i);
    g.samples(i) = norm * std::exp(-t * t / 2.0);
  }
  return g;
}

IsometryReport stft_isometry_check(const SampledSignal& u, const SampledSignal& g,
                                   const StftGrid& grid) {
  if (u.samples.size() != g.samples.size() || !near(u.dt, g.dt))
    fail("GridMismatch", "signal and window grids differ");
  const int n = static_cast<int>(u.samples.size());
  const double g_norm2 = signal_energy(g);
  if (g_norm2 <= 0) fail("ValidationError", "window has no energy");

  const double dx = (grid.x1 - grid.x0) / grid.nx;
  const double dw = (grid.w1 - grid.w0) / grid.nw;

  // Modulation vectors at the midpoint frequencies.
  std::vector<Vector> phases(grid.nw, Vector(n));
  for (int j = 0; j < grid.nw; ++j) {
    const double w = grid.w0 + (j + 0.5) * dw;
    for (int i = 0; i < n; ++i)
      phases[j](i) = std::polar(1.0, -w * (u.t0 + i * u.dt));
  }

  double acc = 0.0;
  Vector windowed(n);
  for (int ix = 0; ix < grid.nx; ++ix) {
    const double x = grid.x0 + (ix + 0.5) * dx;
    const long shift = std::lround(x / u.dt);
    // u(t) * conj(g(t - x)) with the window shifted by whole samples.
    windowed.setZero();
    for (int i = 0; i < n; ++i) {
      const long src = i - shift;
      if (src >= 0 && src < n)
        windowed(i) = u.samples(i) * std::conj(g.samples(src));
    }
    for (int j = 0; j < grid.nw; ++j) {
      const Complex v = (windowed.array() * phases[j].array()).sum() * u.dt;
      acc += std::norm(v);
    }
  }

  IsometryReport report;
  report.grid_version = grid.version;
  report.lhs = acc * dx * dw / (2.0 * kPi);
  report.rhs = signal_energy(u) * g_norm2;
  report.rel_err = report.rhs > 0 ? std::abs(report.lhs - report.rhs) / report.rhs
                                  : report.lhs;
  return report;
}

}  // namespace imprim
