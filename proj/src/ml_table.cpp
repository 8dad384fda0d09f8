#include "fracml/ml_table.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "fracml/mittag_leffler.hpp"

namespace fracml {

namespace {
constexpr int kDegree = 40;
}

MLNegTable::MLNegTable(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  double hi = ml_asymptotic_radius(alpha);
  // dyadic segments [0, 0.5], [0.5, 1], [1, 2], ... covering [0, hi]
  std::vector<std::pair<double, double>> bounds;
  bounds.emplace_back(0.0, 0.5);
  double lo = 0.5;
  while (lo < hi) {
    bounds.emplace_back(lo, 2.0 * lo);
    lo *= 2.0;
  }
  asym_from_ = bounds.back().second;
  const MLParams p{alpha, beta};
  for (auto [a, b] : bounds) {
    Segment seg;
    seg.lo = a;
    seg.hi = b;
    const int n = kDegree;
    std::vector<double> fv(n + 1);
    for (int j = 0; j <= n; ++j) {
      const double xj = std::cos(M_PI * j / n);  // Chebyshev-Lobatto
      const double y = 0.5 * (a + b) + 0.5 * (b - a) * xj;
      fv[j] = mittag_leffler(p, -y);
    }
    seg.coeff.assign(n + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
      double acc = 0.0;
      for (int j = 0; j <= n; ++j) {
        const double w = (j == 0 || j == n) ? 0.5 : 1.0;
        acc += w * fv[j] * std::cos(M_PI * k * j / n);
      }
      seg.coeff[k] = 2.0 * acc / n;
    }
    seg.coeff[0] *= 0.5;
    seg.coeff[n] *= 0.5;
    segments_.push_back(std::move(seg));
  }
}

double MLNegTable::eval_segment(const Segment& s, double y) const {
  const double x = (2.0 * y - (s.lo + s.hi)) / (s.hi - s.lo);
  // Clenshaw
  double b1 = 0.0, b2 = 0.0;
  for (int k = (int)s.coeff.size() - 1; k >= 1; --k) {
    const double b0 = 2.0 * x * b1 - b2 + s.coeff[k];
    b2 = b1;
    b1 = b0;
  }
  return x * b1 - b2 + s.coeff[0];
}

double MLNegTable::operator()(double y) const {
  if (y >= asym_from_) {
    return ml_internal::eval_asymptotic(alpha_, beta_, -y).value;
  }
  // locate dyadic segment: index 0 covers [0, 0.5]
  int idx = 0;
  if (y >= 0.5) {
    idx = 1 + (int)std::floor(std::log2(y / 0.5));
    idx = std::min(idx, (int)segments_.size() - 1);
    if (y < segments_[idx].lo) --idx;
    if (y > segments_[idx].hi) ++idx;
  }
  return eval_segment(segments_[idx], y);
}

const MLNegTable& MLNegTable::get(double alpha, double beta) {
  static std::mutex mu;
  static std::map<std::pair<double, double>, std::unique_ptr<MLNegTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(alpha, beta);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::make_unique<MLNegTable>(alpha, beta)).first;
  }
  return *it->second;
}

}  // namespace fracml
