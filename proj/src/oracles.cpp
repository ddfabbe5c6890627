#include "urnsect/oracles.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <thread>
#include <unordered_map>

#include "urnsect/errors.hpp"

namespace urnsect {
namespace {

using Int = std::int64_t;

// One urn as a list of balls, each tagged with its category.
struct Urn {
  std::vector<Int> category_of_ball;
  Int draws;
};

Urn singleton_urn(Int n, Int draws) {
  Urn u{{}, draws};
  for (Int c = 0; c < n; ++c) u.category_of_ball.push_back(c);
  return u;
}

// Categories 0..q-1 get a second ball.
Urn duplicate_urn(Int n, Int q, Int draws) {
  Urn u = singleton_urn(n, draws);
  for (Int c = 0; c < q; ++c) u.category_of_ball.push_back(c);
  return u;
}

enum class Statistic { intersection, distinct };

struct Model {
  Int categories;
  std::vector<Urn> urns;
  Statistic statistic;
};

Model model_of(const DistributionSpec& spec) {
  if (auto* e = std::get_if<UrnEnsemble>(&spec)) {
    Model m{e->n(), {}, Statistic::intersection};
    for (Int a : e->samples()) m.urns.push_back(singleton_urn(e->n(), a));
    return m;
  }
  if (auto* d = std::get_if<DuplicateUrnPair>(&spec)) {
    return {d->n(),
            {singleton_urn(d->n(), d->a()), duplicate_urn(d->n(), d->q(), d->b())},
            Statistic::intersection};
  }
  const auto& s = std::get<SingleUrnSpec>(spec);
  return {s.n(), {duplicate_urn(s.n(), s.q(), s.a())}, Statistic::distinct};
}

// Multiplicity of each category mask over all draws from one urn.
std::unordered_map<std::uint64_t, std::uint64_t> mask_histogram(const Urn& urn) {
  std::unordered_map<std::uint64_t, std::uint64_t> hist;
  const Int balls = static_cast<Int>(urn.category_of_ball.size());
  const Int k = urn.draws;
  std::vector<Int> idx(k);
  for (Int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (Int i : idx) mask |= std::uint64_t{1} << urn.category_of_ball[i];
    ++hist[mask];
    // Advance to the next k-combination in lexicographic order.
    Int i = k - 1;
    while (i >= 0 && idx[i] == balls - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (Int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return hist;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t kShardSize = 1 << 16;

class Sampler {
 public:
  explicit Sampler(const Model& model) : model_(model) {
    for (const auto& u : model.urns) {
      std::vector<Int> labels(u.category_of_ball.size());
      for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<Int>(i);
      labels_.push_back(std::move(labels));
    }
    stamp_.assign(model.categories, 0);
    level_.assign(model.categories, 0);
  }

  // Identity labelling, so a shard's draws depend only on its own RNG stream.
  void reset() {
    for (auto& labels : labels_) {
      for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<Int>(i);
    }
  }

  Int replicate(std::mt19937_64& rng) {
    ++token_;
    Int result = 0;
    const std::size_t urns = model_.urns.size();
    for (std::size_t k = 0; k < urns; ++k) {
      const Urn& urn = model_.urns[k];
      auto& labels = labels_[k];
      const std::uint64_t balls = labels.size();
      for (Int i = 0; i < urn.draws; ++i) {
        std::uniform_int_distribution<std::uint64_t> pick(i, balls - 1);
        std::swap(labels[i], labels[pick(rng)]);
        const Int cat = urn.category_of_ball[labels[i]];
        if (model_.statistic == Statistic::distinct) {
          if (stamp_[cat] != token_) {
            stamp_[cat] = token_;
            ++result;
          }
          continue;
        }
        // level_[cat] counts the leading urns 0..k that contain cat.
        if (k == 0) {
          if (stamp_[cat] != token_) {
            stamp_[cat] = token_;
            level_[cat] = 1;
            if (urns == 1) ++result;
          }
        } else if (stamp_[cat] == token_ && level_[cat] == static_cast<Int>(k)) {
          level_[cat] = static_cast<Int>(k) + 1;
          if (k + 1 == urns) ++result;
        }
      }
    }
    return result;
  }

 private:
  const Model& model_;
  std::vector<std::vector<Int>> labels_;
  std::vector<std::uint64_t> stamp_;
  std::vector<Int> level_;
  std::uint64_t token_ = 0;
};

}  // namespace

std::uint64_t outcome_count(const DistributionSpec& spec) {
  Model model = model_of(spec);
  BigInt total = 1;
  for (const auto& u : model.urns) {
    total *= exact_binomial_count(static_cast<Int>(u.category_of_ball.size()), u.draws);
  }
  if (total > std::numeric_limits<std::uint64_t>::max()) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return total.convert_to<std::uint64_t>();
}

ExactPmf enumerate_exact(const DistributionSpec& spec, std::uint64_t budget) {
  const std::uint64_t outcomes = outcome_count(spec);
  if (outcomes > budget) throw BudgetExceeded(outcomes, budget);
  Model model = model_of(spec);
  if (model.categories > 64) {
    throw InvalidParameter("enumerate_exact supports at most 64 categories (got " +
                           std::to_string(model.categories) + ")");
  }

  std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> masks;
  for (const auto& u : model.urns) {
    auto hist = mask_histogram(u);
    masks.emplace_back(hist.begin(), hist.end());
  }

  std::vector<std::uint64_t> tally(model.categories + 1, 0);
  if (model.statistic == Statistic::distinct) {
    for (auto [mask, count] : masks[0]) tally[std::popcount(mask)] += count;
  } else {
    // Depth-first over urns carrying the running intersection mask.
    auto visit = [&](auto&& self, std::size_t urn, std::uint64_t common,
                     std::uint64_t weight) -> void {
      if (urn == masks.size()) {
        tally[std::popcount(common)] += weight;
        return;
      }
      for (auto [mask, count] : masks[urn]) self(self, urn + 1, common & mask, weight * count);
    };
    visit(visit, 0, ~std::uint64_t{0}, 1);
  }

  std::vector<ExactRational> p;
  for (std::uint64_t c : tally) p.emplace_back(BigInt(c), BigInt(outcomes));
  return ExactPmf(0, std::move(p));
}

SimulationReport simulate(const DistributionSpec& spec, std::uint64_t draws, std::uint64_t seed,
                          unsigned workers) {
  if (draws < 1) throw InvalidParameter("simulate requires draws >= 1");
  workers = std::max(1u, workers);
  const Model model = model_of(spec);
  const std::uint64_t shards = (draws + kShardSize - 1) / kShardSize;

  std::vector<std::vector<std::uint64_t>> partial(workers,
                                                  std::vector<std::uint64_t>(model.categories + 1));
  auto run = [&](unsigned w) {
    Sampler sampler(model);
    for (std::uint64_t s = w; s < shards; s += workers) {
      std::mt19937_64 rng(splitmix64(seed ^ splitmix64(s)));
      sampler.reset();
      const std::uint64_t begin = s * kShardSize;
      const std::uint64_t end = std::min(draws, begin + kShardSize);
      for (std::uint64_t r = begin; r < end; ++r) ++partial[w][sampler.replicate(rng)];
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }

  std::vector<std::uint64_t> counts(model.categories + 1, 0);
  for (const auto& part : partial) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += part[i];
  }
  auto first = std::find_if(counts.begin(), counts.end(), [](auto c) { return c > 0; });
  auto last = std::find_if(counts.rbegin(), counts.rend(), [](auto c) { return c > 0; }).base();

  SimulationReport report{draws, seed,
                          "mt19937_64, shards of 65536 replicates seeded by splitmix64(seed, shard)",
                          spec, first - counts.begin(), std::vector<std::uint64_t>(first, last),
                          Pmf()};
  std::vector<double> freq;
  for (auto c : report.counts) freq.push_back(static_cast<double>(c) / static_cast<double>(draws));
  report.empirical = Pmf(report.count_min, std::move(freq));
  return report;
}

double total_variation(const Pmf& p, const Pmf& q) {
  if (p.empty() && q.empty()) return 0.0;
  Int lo = std::min(p.empty() ? q.support_min() : p.support_min(),
                    q.empty() ? p.support_min() : q.support_min());
  Int hi = std::max(p.empty() ? q.support_max() : p.support_max(),
                    q.empty() ? p.support_max() : q.support_max());
  double sum = 0.0;
  for (Int x = lo; x <= hi; ++x) sum += std::abs(p(x) - q(x));
  return 0.5 * sum;
}

}  // namespace urnsect
