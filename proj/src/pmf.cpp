#include "urnsect/pmf.hpp"

#include <algorithm>
#include <numeric>

namespace urnsect {

Pmf::Pmf(std::int64_t support_min, std::vector<double> probabilities)
    : support_min_(support_min), probabilities_(std::move(probabilities)) {
  auto keep = [](double p) { return p >= kTrimThreshold; };
  auto first = std::find_if(probabilities_.begin(), probabilities_.end(), keep);
  if (first == probabilities_.end()) {
    probabilities_.clear();
    return;
  }
  auto last = std::find_if(probabilities_.rbegin(), probabilities_.rend(), keep).base();
  support_min_ += first - probabilities_.begin();
  probabilities_ = std::vector<double>(first, last);
}

Pmf Pmf::point_mass(std::int64_t outcome) { return Pmf(outcome, {1.0}); }

double Pmf::operator()(std::int64_t x) const {
  return in_support(x) ? probabilities_[x - support_min_] : 0.0;
}

double Pmf::total() const {
  return std::accumulate(probabilities_.begin(), probabilities_.end(), 0.0);
}

double Pmf::mean() const {
  double m = 0.0;
  for (std::size_t i = 0; i < probabilities_.size(); ++i) {
    m += static_cast<double>(support_min_ + static_cast<std::int64_t>(i)) * probabilities_[i];
  }
  return m;
}

double Pmf::variance() const {
  double m = mean();
  double v = 0.0;
  for (std::size_t i = 0; i < probabilities_.size(); ++i) {
    double d = static_cast<double>(support_min_ + static_cast<std::int64_t>(i)) - m;
    v += d * d * probabilities_[i];
  }
  return v;
}

double Pmf::cdf(std::int64_t x) const {
  if (empty() || x < support_min_) return 0.0;
  double s = 0.0;
  for (std::int64_t y = support_min_; y <= std::min(x, support_max()); ++y) s += (*this)(y);
  return s;
}

double Pmf::sf(std::int64_t x) const {
  if (empty() || x > support_max()) return 0.0;
  double s = 0.0;
  for (std::int64_t y = support_max(); y >= std::max(x, support_min_); --y) s += (*this)(y);
  return s;
}

ExactPmf::ExactPmf(std::int64_t support_min, std::vector<ExactRational> probabilities)
    : support_min_(support_min), probabilities_(std::move(probabilities)) {
  auto nonzero = [](const ExactRational& p) { return p != 0; };
  auto first = std::find_if(probabilities_.begin(), probabilities_.end(), nonzero);
  if (first == probabilities_.end()) {
    probabilities_.clear();
    return;
  }
  auto last = std::find_if(probabilities_.rbegin(), probabilities_.rend(), nonzero).base();
  support_min_ += first - probabilities_.begin();
  probabilities_ = std::vector<ExactRational>(first, last);
}

ExactRational ExactPmf::operator()(std::int64_t x) const {
  if (x < support_min_ || x > support_max()) return 0;
  return probabilities_[x - support_min_];
}

ExactRational ExactPmf::total() const {
  ExactRational s = 0;
  for (const auto& p : probabilities_) s += p;
  return s;
}

Pmf ExactPmf::to_pmf() const {
  std::vector<double> p;
  p.reserve(probabilities_.size());
  for (const auto& x : probabilities_) p.push_back(to_double(x));
  return Pmf(support_min_, std::move(p));
}

}  // namespace urnsect
