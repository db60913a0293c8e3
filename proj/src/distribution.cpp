#include "tazrp/distribution.hpp"

#include <stdexcept>

namespace tazrp {

void Distribution::validate() const {
  Rat sum = 0;
  for (const Rat& w : weights) {
    if (w < 0) throw std::runtime_error("distribution: negative weight");
    sum += w;
  }
  if (sum != Rat(normalization))
    throw std::runtime_error("distribution: weights do not sum to normalization");
}

Rat tv_distance(const Distribution& a, const Distribution& b) {
  if (a.weights.size() != b.weights.size())
    throw std::invalid_argument("tv_distance: state space mismatch");
  Rat sa = 0, sb = 0;
  for (const Rat& w : a.weights) sa += w;
  for (const Rat& w : b.weights) sb += w;
  if (sa == 0 || sb == 0)
    throw std::invalid_argument("tv_distance: empty distribution");
  Rat d = 0;
  for (size_t i = 0; i < a.weights.size(); ++i) {
    Rat diff = a.weights[i] / sa - b.weights[i] / sb;
    d += diff < 0 ? -diff : diff;
  }
  return d / 2;
}

}  // namespace tazrp
