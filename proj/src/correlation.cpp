#include "timt/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "timt/error.hpp"

namespace timt {

std::vector<double> fractional_ranks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[idx[j + 1]] == values[idx[i]]) ++j;
    double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

double rank_correlation(const std::vector<double>& xs, const std::vector<double>& ys,
                        CorrelationKind kind) {
  if (xs.size() != ys.size())
    throw Error::invalid_arg("rank_correlation: length mismatch");
  const std::size_t n = xs.size();
  if (n < 2) throw Error::invalid_arg("rank_correlation: need at least two samples");

  if (kind == CorrelationKind::Spearman) {
    auto rx = fractional_ranks(xs);
    auto ry = fractional_ranks(ys);
    double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
    double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double dx = rx[i] - mx, dy = ry[i] - my;
      sxy += dx * dy;
      sxx += dx * dx;
      syy += dy * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
      throw Error::invalid_arg("rank_correlation: zero rank variance");
    return sxy / std::sqrt(sxx * syy);
  }

  // Kendall tau-b: pairwise concordance with tie-corrected denominator
  double concordant = 0.0, discordant = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double dx = xs[i] - xs[j], dy = ys[i] - ys[j];
      if (dx == 0.0 || dy == 0.0) continue;  // tied pairs sit outside C and D
      if ((dx > 0.0) == (dy > 0.0))
        concordant += 1.0;
      else
        discordant += 1.0;
    }
  }
  const double n0 = static_cast<double>(n) * (n - 1) / 2.0;
  // group-count form of the tie terms
  auto tie_term = [n](const std::vector<double>& values) {
    std::vector<double> sorted(values);
    std::sort(sorted.begin(), sorted.end());
    double t = 0.0;
    std::size_t i = 0;
    while (i < sorted.size()) {
      std::size_t j = i;
      while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
      double g = static_cast<double>(j - i + 1);
      t += g * (g - 1) / 2.0;
      i = j + 1;
    }
    return t;
  };
  double n1 = tie_term(xs), n2 = tie_term(ys);
  double denom = std::sqrt((n0 - n1) * (n0 - n2));
  if (denom == 0.0) throw Error::invalid_arg("rank_correlation: zero rank variance");
  return (concordant - discordant) / denom;
}

}  // namespace timt
