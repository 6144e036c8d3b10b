#include "dilemma/scoring.hpp"

#include <cmath>

#include "dilemma/errors.hpp"

namespace dilemma {

double selection_score(double f_best, double f_second, int depth, const SearchConfig& config) {
  return (f_best - f_second) - static_cast<double>(depth) * config.depth_const;
}

double dilemma_estimator(double f_best, double f_second, double epsilon) {
  return 1.0 / (f_best - f_second + epsilon);
}

double candidate_log_prob(std::span<const double> explored_probs, int d, int b) {
  if (b < 2) throw DomainError("branching factor must be >= 2");
  if (d < static_cast<int>(explored_probs.size()))
    throw DomainError("assumed depth smaller than the explored prefix");
  double sum = 0.0;
  for (double p : explored_probs) {
    if (!(p > 0.0) || p > 1.0) throw DomainError("probabilities must lie in (0, 1]");
    sum += std::log(p);
  }
  const double remaining = static_cast<double>(d) - static_cast<double>(explored_probs.size());
  return sum + remaining * std::log(1.0 / static_cast<double>(b));
}

std::vector<double> normalized_scores(std::span<const double> scores) {
  std::vector<double> probs(scores.size());
  double sum = 0.0;
  for (double s : scores) sum += s;
  if (sum <= 0.0) {
    if (!scores.empty()) {
      const double uniform = 1.0 / static_cast<double>(scores.size());
      for (auto& p : probs) p = uniform;
    }
    return probs;
  }
  for (std::size_t i = 0; i < probs.size(); ++i) probs[i] = scores[i] / sum;
  return probs;
}

}  // namespace dilemma
