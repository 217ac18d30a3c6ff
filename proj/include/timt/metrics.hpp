#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace timt {

enum class Metric { Bleu, ChrFpp, Meteor, TokenF1, EditDistanceNorm, Cer };

struct MetricScore {
  Metric metric;
  double value;  // [0,1] for Bleu/ChrFpp/Meteor/TokenF1; raw ratio >= 0 for the distances
};

const char* metric_name(Metric m);

// Sentence-level BLEU, n-gram orders 1..4, geometric mean of modified
// precisions with add-one smoothing on orders >= 2, brevity penalty
// exp(1 - |ref|/|hyp|) when the hypothesis is shorter. Empty hypothesis or
// zero unigram overlap scores 0.
double bleu(std::string_view hypothesis, std::string_view reference, std::string_view language);

// chrF++: character n-grams 1..6 over the whitespace-stripped strings plus
// word n-grams 1..2, beta=2 F-scores averaged over the orders present on at
// least one side.
double chrf_pp(std::string_view hypothesis, std::string_view reference);

// Exact-match METEOR: unigram alignment maximizing matches and, among those,
// minimizing chunk count; Fmean = 10PR/(R+9P), fragmentation penalty
// 0.5*(chunks/matches)^3. No stemming or synonym matching.
double meteor(std::string_view hypothesis, std::string_view reference, std::string_view language);

// Bag-of-tokens F1 over clipped counts.
double token_f1(std::string_view hypothesis, std::string_view reference, std::string_view language);

// Token-level Levenshtein distance / reference token count. May exceed 1;
// clamping is the caller's concern. Throws InvalidArg on an empty reference.
double edit_distance_norm(std::string_view hypothesis, std::string_view reference,
                          std::string_view language);

// Codepoint-level Levenshtein distance / reference length, whitespace kept.
// Throws InvalidArg on an empty reference.
double cer(std::string_view hypothesis, std::string_view reference);

// Unit-cost Levenshtein over arbitrary token sequences.
std::size_t levenshtein(const std::vector<std::string>& a, const std::vector<std::string>& b);

}  // namespace timt
