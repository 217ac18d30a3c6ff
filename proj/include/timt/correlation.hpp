#pragma once

#include <vector>

namespace timt {

enum class CorrelationKind { Spearman, Kendall };

// Spearman: Pearson correlation of fractional (average) ranks.
// Kendall: tau-b with tie correction.
// Throws InvalidArg on length mismatch, fewer than two samples, or zero rank
// variance on either side.
double rank_correlation(const std::vector<double>& xs, const std::vector<double>& ys,
                        CorrelationKind kind);

// Fractional ranks, ties averaged; 1-based.
std::vector<double> fractional_ranks(const std::vector<double>& values);

}  // namespace timt
