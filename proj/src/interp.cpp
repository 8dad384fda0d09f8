#include "fracml/interp.hpp"

#include <algorithm>
#include <cmath>

#include "fracml/errors.hpp"

namespace fracml {

PchipInterpolant::PchipInterpolant(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const int n = (int)x_.size();
  if (n < 2 || y_.size() != x_.size()) {
    throw DataError("interpolant needs >= 2 nodes and matching arrays");
  }
  for (int i = 0; i + 1 < n; ++i) {
    if (!(x_[i + 1] > x_[i])) {
      throw DataError("interpolant abscissae must be strictly increasing");
    }
  }
  slope_.resize(n);
  std::vector<double> d(n - 1);  // secants
  for (int i = 0; i + 1 < n; ++i) d[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
  if (n == 2) {
    slope_[0] = slope_[1] = d[0];
    return;
  }
  for (int i = 1; i + 1 < n; ++i) {
    if (d[i - 1] * d[i] <= 0.0) {
      slope_[i] = 0.0;
    } else {
      const double h0 = x_[i] - x_[i - 1];
      const double h1 = x_[i + 1] - x_[i];
      const double w1 = 2.0 * h1 + h0;
      const double w2 = h1 + 2.0 * h0;
      slope_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
    }
  }
  auto endpoint = [](double h0, double h1, double d0, double d1) {
    double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (m * d0 <= 0.0) {
      m = 0.0;
    } else if (d0 * d1 < 0.0 && std::abs(m) > 3.0 * std::abs(d0)) {
      m = 3.0 * d0;
    }
    return m;
  };
  slope_[0] = endpoint(x_[1] - x_[0], x_[2] - x_[1], d[0], d[1]);
  slope_[n - 1] =
      endpoint(x_[n - 1] - x_[n - 2], x_[n - 2] - x_[n - 3], d[n - 2], d[n - 3]);
}

int PchipInterpolant::find_interval(double t) const {
  const auto it = std::upper_bound(x_.begin(), x_.end(), t);
  int i = (int)(it - x_.begin()) - 1;
  return std::clamp(i, 0, (int)x_.size() - 2);
}

double PchipInterpolant::operator()(double t) const {
  if (t <= x_.front()) return y_.front();
  if (t >= x_.back()) return y_.back();
  const int i = find_interval(t);
  const double h = x_[i + 1] - x_[i];
  const double s = (t - x_[i]) / h;
  const double s2 = s * s;
  const double s3 = s2 * s;
  const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
  const double h10 = s3 - 2.0 * s2 + s;
  const double h01 = -2.0 * s3 + 3.0 * s2;
  const double h11 = s3 - s2;
  return h00 * y_[i] + h10 * h * slope_[i] + h01 * y_[i + 1] +
         h11 * h * slope_[i + 1];
}

double PchipInterpolant::derivative(double t) const {
  if (t <= x_.front() || t >= x_.back()) return 0.0;
  const int i = find_interval(t);
  const double h = x_[i + 1] - x_[i];
  const double s = (t - x_[i]) / h;
  const double s2 = s * s;
  const double dh00 = (6.0 * s2 - 6.0 * s) / h;
  const double dh10 = 3.0 * s2 - 4.0 * s + 1.0;
  const double dh01 = (-6.0 * s2 + 6.0 * s) / h;
  const double dh11 = 3.0 * s2 - 2.0 * s;
  return dh00 * y_[i] + dh10 * slope_[i] + dh01 * y_[i + 1] +
         dh11 * slope_[i + 1];
}

}  // namespace fracml
