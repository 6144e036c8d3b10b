#pragma once

#include <span>
#include <vector>

#include "dilemma/types.hpp"

namespace dilemma {

/// Selection score of a queued state: (f_best - f_second) - depth * depth_const.
/// The queue pops the minimum, which with depth_const = 0 induces the same
/// order as maximizing the dilemma estimator. Requires f_best >= f_second >= 0.
double selection_score(double f_best, double f_second, int depth, const SearchConfig& config);

/// Dilemma estimator 1 / (f_best - f_second + epsilon). Reported as a
/// diagnostic; ordering duty lives in selection_score.
double dilemma_estimator(double f_best, double f_second, double epsilon);

/// Expected log probability of a partially explored candidate under the
/// uniform-tail model: sum of ln(p) over explored decisions plus
/// (d - explored) * ln(1/b). Diagnostic only.
///
/// Throws DomainError unless every p is in (0, 1], d >= explored count and
/// b >= 2.
double candidate_log_prob(std::span<const double> explored_probs, int d, int b);

/// Normalizes raw heuristic scores into a probability vector (divide by the
/// sum; uniform when the sum is 0). Feeds candidate_log_prob.
std::vector<double> normalized_scores(std::span<const double> scores);

}  // namespace dilemma
