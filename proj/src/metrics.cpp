#include "timt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "timt/error.hpp"
#include "timt/text.hpp"

namespace timt {

namespace {

using Counts = std::unordered_map<std::string, int>;

// n-grams keyed by tokens joined with an unprintable separator
Counts ngram_counts(const std::vector<std::string>& tokens, std::size_t n) {
  Counts counts;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key;
    for (std::size_t k = 0; k < n; ++k) {
      if (k) key.push_back('\x1f');
      key += tokens[i + k];
    }
    ++counts[key];
  }
  return counts;
}

int clipped_overlap(const Counts& hyp, const Counts& ref) {
  int total = 0;
  for (const auto& [key, count] : hyp) {
    auto it = ref.find(key);
    if (it != ref.end()) total += std::min(count, it->second);
  }
  return total;
}

std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) words.emplace_back(text.substr(start, i - start));
  }
  return words;
}

double fbeta2(int matches, std::size_t hyp_total, std::size_t ref_total) {
  if (matches == 0 || hyp_total == 0 || ref_total == 0) return 0.0;
  double p = static_cast<double>(matches) / static_cast<double>(hyp_total);
  double r = static_cast<double>(matches) / static_cast<double>(ref_total);
  return 5.0 * p * r / (4.0 * p + r);
}

// --- METEOR alignment -------------------------------------------------------
//
// Equal tokens are interchangeable, so the maximum number of matches is the
// clipped unigram overlap. What varies between maximum matchings is the chunk
// count; chunks = matches - links, where a link is a pair of matches at
// adjacent positions on both sides. The exact search below maximizes links
// with a bitmask over the shorter side; inputs too long for that fall back to
// a greedy pass run in both directions.

struct Alignment {
  int matches = 0;
  int chunks = 0;
};

constexpr std::size_t kExactAlignLimit = 14;

int exact_max_links(const std::vector<std::string>& iter_side,
                    const std::vector<std::string>& mask_side, int target_matches) {
  const std::size_t n = iter_side.size();
  const std::size_t m = mask_side.size();
  // state: (used-mask of mask_side, mask index matched by the previous
  // iter position + 1, or 0) -> best (matches, links), packed
  using Layer = std::unordered_map<std::uint64_t, std::pair<int, int>>;
  Layer layer;
  layer.emplace(0, std::make_pair(0, 0));
  for (std::size_t i = 0; i < n; ++i) {
    Layer next;
    auto relax = [&](std::uint64_t key, std::pair<int, int> value) {
      auto [it, inserted] = next.emplace(key, value);
      if (!inserted && value > it->second) it->second = value;
    };
    for (const auto& [key, best] : layer) {
      std::uint64_t mask = key >> 6;
      // leaving iter_side[i] unmatched clears the adjacency carry
      relax(mask << 6, best);
      for (std::size_t j = 0; j < m; ++j) {
        if (mask & (1ull << j)) continue;
        if (iter_side[i] != mask_side[j]) continue;
        std::uint64_t prev = key & 0x3f;
        int link = (prev != 0 && prev == j) ? 1 : 0;  // prev holds j_prev + 1
        std::uint64_t nkey = ((mask | (1ull << j)) << 6) | (j + 1);
        relax(nkey, {best.first + 1, best.second + link});
      }
    }
    layer = std::move(next);
  }
  int links = 0;
  for (const auto& [key, best] : layer) {
    if (best.first == target_matches) links = std::max(links, best.second);
  }
  return links;
}

Alignment greedy_align(const std::vector<std::string>& hyp, const std::vector<std::string>& ref) {
  std::vector<bool> used(ref.size(), false);
  Alignment out;
  long prev = -2;
  for (std::size_t i = 0; i < hyp.size(); ++i) {
    long picked = -1;
    // prefer the ref position continuing the current chunk
    if (prev >= 0 && static_cast<std::size_t>(prev + 1) < ref.size() && !used[prev + 1] &&
        ref[prev + 1] == hyp[i]) {
      picked = prev + 1;
    } else {
      for (std::size_t j = 0; j < ref.size(); ++j) {
        if (!used[j] && ref[j] == hyp[i]) {
          picked = static_cast<long>(j);
          break;
        }
      }
    }
    if (picked >= 0) {
      used[picked] = true;
      ++out.matches;
      // a chunk continues only when both sides advance by one
      if (prev < 0 || picked != prev + 1) ++out.chunks;
      prev = picked;
    } else {
      prev = -2;
    }
  }
  return out;
}

Alignment align_unigrams(const std::vector<std::string>& hyp, const std::vector<std::string>& ref) {
  Counts hc = ngram_counts(hyp, 1), rc = ngram_counts(ref, 1);
  int matches = clipped_overlap(hc, rc);
  Alignment out;
  out.matches = matches;
  if (matches == 0) return out;

  if (std::min(hyp.size(), ref.size()) <= kExactAlignLimit) {
    int links = hyp.size() <= ref.size() ? exact_max_links(ref, hyp, matches)
                                         : exact_max_links(hyp, ref, matches);
    out.chunks = matches - links;
    return out;
  }

  Alignment fwd = greedy_align(hyp, ref);
  // reversed inputs preserve adjacency, so the reverse pass explores the
  // other greedy tie-breaking order
  std::vector<std::string> hyp_rev(hyp.rbegin(), hyp.rend());
  std::vector<std::string> ref_rev(ref.rbegin(), ref.rend());
  Alignment bwd = greedy_align(hyp_rev, ref_rev);
  out.chunks = std::min(fwd.chunks, bwd.chunks);
  return out;
}

}  // namespace

const char* metric_name(Metric m) {
  switch (m) {
    case Metric::Bleu: return "bleu";
    case Metric::ChrFpp: return "chrf_pp";
    case Metric::Meteor: return "meteor";
    case Metric::TokenF1: return "token_f1";
    case Metric::EditDistanceNorm: return "edit_distance_norm";
    case Metric::Cer: return "cer";
  }
  return "?";
}

double bleu(std::string_view hypothesis, std::string_view reference, std::string_view language) {
  const auto hyp = tokenize(hypothesis, language).tokens;
  const auto ref = tokenize(reference, language).tokens;
  if (hyp.empty()) return 0.0;

  double log_sum = 0.0;
  for (std::size_t n = 1; n <= 4; ++n) {
    Counts hc = ngram_counts(hyp, n), rc = ngram_counts(ref, n);
    std::size_t total = hyp.size() >= n ? hyp.size() - n + 1 : 0;
    int matched = clipped_overlap(hc, rc);
    double p;
    if (n == 1) {
      if (matched == 0) return 0.0;
      p = static_cast<double>(matched) / static_cast<double>(total);
    } else {
      p = (matched + 1.0) / (total + 1.0);
    }
    log_sum += std::log(p);
  }
  double bp = 1.0;
  if (hyp.size() < ref.size())
    bp = std::exp(1.0 - static_cast<double>(ref.size()) / static_cast<double>(hyp.size()));
  return bp * std::exp(log_sum / 4.0);
}

double chrf_pp(std::string_view hypothesis, std::string_view reference) {
  // character stream with whitespace removed
  auto strip = [](std::string_view text) {
    std::vector<std::string> chars;
    for (auto& cp : utf8_codepoints(text)) {
      bool space = cp.size() == 1 ? std::isspace(static_cast<unsigned char>(cp[0])) != 0
                                  : cp == "\xE3\x80\x80";
      if (!space) chars.push_back(std::move(cp));
    }
    return chars;
  };
  const auto hyp_chars = strip(hypothesis);
  const auto ref_chars = strip(reference);
  const auto hyp_words = split_whitespace(hypothesis);
  const auto ref_words = split_whitespace(reference);

  double sum = 0.0;
  int orders = 0;
  auto add_order = [&](const std::vector<std::string>& h, const std::vector<std::string>& r,
                       std::size_t n) {
    std::size_t ht = h.size() >= n ? h.size() - n + 1 : 0;
    std::size_t rt = r.size() >= n ? r.size() - n + 1 : 0;
    if (ht == 0 && rt == 0) return;  // order absent on both sides
    int matched = clipped_overlap(ngram_counts(h, n), ngram_counts(r, n));
    sum += fbeta2(matched, ht, rt);
    ++orders;
  };
  for (std::size_t n = 1; n <= 6; ++n) add_order(hyp_chars, ref_chars, n);
  for (std::size_t n = 1; n <= 2; ++n) add_order(hyp_words, ref_words, n);
  return orders == 0 ? 0.0 : sum / orders;
}

double meteor(std::string_view hypothesis, std::string_view reference, std::string_view language) {
  const auto hyp = tokenize(hypothesis, language).tokens;
  const auto ref = tokenize(reference, language).tokens;
  if (hyp.empty() || ref.empty()) return 0.0;

  Alignment a = align_unigrams(hyp, ref);
  if (a.matches == 0) return 0.0;
  double p = static_cast<double>(a.matches) / static_cast<double>(hyp.size());
  double r = static_cast<double>(a.matches) / static_cast<double>(ref.size());
  double fmean = 10.0 * p * r / (r + 9.0 * p);
  double frag = static_cast<double>(a.chunks) / static_cast<double>(a.matches);
  double penalty = 0.5 * frag * frag * frag;
  return fmean * (1.0 - penalty);
}

double token_f1(std::string_view hypothesis, std::string_view reference,
                std::string_view language) {
  const auto hyp = tokenize(hypothesis, language).tokens;
  const auto ref = tokenize(reference, language).tokens;
  if (hyp.empty() || ref.empty()) return 0.0;
  int overlap = clipped_overlap(ngram_counts(hyp, 1), ngram_counts(ref, 1));
  if (overlap == 0) return 0.0;
  double p = static_cast<double>(overlap) / static_cast<double>(hyp.size());
  double r = static_cast<double>(overlap) / static_cast<double>(ref.size());
  return 2.0 * p * r / (p + r);
}

std::size_t levenshtein(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::size_t> prev(m + 1), curr(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    curr[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      curr[j] = std::min({prev[j] + 1, curr[j - 1] + 1, sub});
    }
    std::swap(prev, curr);
  }
  return prev[m];
}

double edit_distance_norm(std::string_view hypothesis, std::string_view reference,
                          std::string_view language) {
  const auto hyp = tokenize(hypothesis, language).tokens;
  const auto ref = tokenize(reference, language).tokens;
  if (ref.empty())
    throw Error::invalid_arg("edit_distance_norm: empty reference has no normalization");
  return static_cast<double>(levenshtein(hyp, ref)) / static_cast<double>(ref.size());
}

double cer(std::string_view hypothesis, std::string_view reference) {
  const auto hyp = utf8_codepoints(hypothesis);
  const auto ref = utf8_codepoints(reference);
  if (ref.empty()) throw Error::invalid_arg("cer: empty reference has no normalization");
  return static_cast<double>(levenshtein(hyp, ref)) / static_cast<double>(ref.size());
}

}  // namespace timt
