#include "chmsav/spline.hpp"

#include <algorithm>
#include <stdexcept>

namespace chmsav {

CubicSpline::CubicSpline(std::vector<double> xs, std::vector<double> ys)
    : x_(std::move(xs)), y_(std::move(ys)) {
  const std::size_t np = x_.size();
  if (np != y_.size() || np < 4) {
    throw std::invalid_argument("CubicSpline: needs >= 4 matching points");
  }
  for (std::size_t i = 0; i + 1 < np; ++i) {
    if (!(x_[i] < x_[i + 1])) {
      throw std::invalid_argument("CubicSpline: abscissae must increase");
    }
  }

  const std::size_t n = np - 1;  // interval count
  std::vector<double> h(n);
  for (std::size_t i = 0; i < n; ++i) h[i] = x_[i + 1] - x_[i];

  // Tridiagonal system for the interior second derivatives M_1..M_{n-1};
  // the not-a-knot conditions are eliminated into the first and last rows.
  const std::size_t k = n - 1;
  std::vector<double> sub(k, 0.0), diag(k, 0.0), sup(k, 0.0), rhs(k, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    rhs[i - 1] = 6.0 * ((y_[i + 1] - y_[i]) / h[i] -
                        (y_[i] - y_[i - 1]) / h[i - 1]);
    diag[i - 1] = 2.0 * (h[i - 1] + h[i]);
    if (i > 1) sub[i - 1] = h[i - 1];
    if (i < n - 1) sup[i - 1] = h[i];
  }
  diag[0] = (h[0] + h[1]) * (h[0] + 2.0 * h[1]) / h[1];
  sup[0] = (h[1] * h[1] - h[0] * h[0]) / h[1];
  const double ha = h[n - 2], hb = h[n - 1];
  diag[k - 1] = (ha + hb) * (2.0 * ha + hb) / ha;
  sub[k - 1] = (ha * ha - hb * hb) / ha;

  // Thomas sweep.
  for (std::size_t i = 1; i < k; ++i) {
    const double w = sub[i] / diag[i - 1];
    diag[i] -= w * sup[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  m_.assign(np, 0.0);
  m_[n - 1] = rhs[k - 1] / diag[k - 1];
  for (std::size_t i = k - 1; i-- > 0;) {
    m_[i + 1] = (rhs[i] - sup[i] * m_[i + 2]) / diag[i];
  }
  m_[0] = ((h[0] + h[1]) * m_[1] - h[0] * m_[2]) / h[1];
  m_[n] = ((ha + hb) * m_[n - 1] - hb * m_[n - 2]) / ha;

  b_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    b_[i] = (y_[i + 1] - y_[i]) / h[i] - h[i] * (2.0 * m_[i] + m_[i + 1]) / 6.0;
  }
}

double CubicSpline::operator()(double x) const {
  if (x_.empty()) {
    throw std::logic_error("CubicSpline: evaluating an empty spline");
  }
  // Locate the interval, clamping so out-of-range arguments extrapolate.
  std::size_t i =
      std::upper_bound(x_.begin(), x_.end(), x) - x_.begin();
  if (i > 0) --i;
  if (i >= x_.size() - 1) i = x_.size() - 2;

  const double t = x - x_[i];
  const double hi = x_[i + 1] - x_[i];
  return y_[i] +
         t * (b_[i] + t * (0.5 * m_[i] + t * (m_[i + 1] - m_[i]) / (6.0 * hi)));
}

}  // namespace chmsav
