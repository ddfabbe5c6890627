#include "urnsect/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "urnsect/errors.hpp"

namespace urnsect {
namespace {

using Int = std::int64_t;

// Arithmetic backends for the counting kernels. Value is a nonnegative count:
// its logarithm (LogBackend) or the integer itself (ExactBackend).
struct LogBackend {
  using Value = LogWeight;
  using Result = Pmf;

  static Value binom(Int m, Int k) { return log_binomial(m, k); }
  static Value one() { return LogWeight::one(); }
  static Value zero() { return LogWeight::zero(); }
  static bool is_zero(const Value& v) { return v.is_zero(); }
  static Value pow2(Int e) { return LogWeight(static_cast<double>(e) * std::numbers::ln2); }

  class Sum {
   public:
    void add(Value v) {
      if (!v.is_zero()) terms_.push_back(v);
    }
    Value value() const { return log_sum_exp(terms_); }

   private:
    std::vector<LogWeight> terms_;
  };

  static Result finish(Int support_min, const std::vector<Value>& counts, Value total) {
    std::vector<double> p;
    p.reserve(counts.size());
    for (Value c : counts) p.push_back((c / total).linear());
    return Pmf(support_min, std::move(p));
  }
};

struct ExactBackend {
  using Value = BigInt;
  using Result = ExactPmf;

  static Value binom(Int m, Int k) { return exact_binomial_count(m, k); }
  static Value one() { return 1; }
  static Value zero() { return 0; }
  static bool is_zero(const Value& v) { return v == 0; }
  static Value pow2(Int e) { return BigInt(1) << e; }

  class Sum {
   public:
    void add(const Value& v) { acc_ += v; }
    const Value& value() const { return acc_; }

   private:
    BigInt acc_ = 0;
  };

  static Result finish(Int support_min, const std::vector<Value>& counts, const Value& total) {
    std::vector<ExactRational> p;
    p.reserve(counts.size());
    for (const auto& c : counts) p.emplace_back(c, total);
    return ExactPmf(support_min, std::move(p));
  }
};

template <class B>
typename B::Result tabulate(Int lo, Int hi, const std::function<typename B::Value(Int)>& count,
                            const typename B::Value& total) {
  std::vector<typename B::Value> counts;
  for (Int v = lo; v <= hi; ++v) counts.push_back(count(v));
  return B::finish(lo, counts, total);
}

void require_urns(const UrnEnsemble& e, std::size_t urns, const char* op) {
  if (e.urns() != urns) {
    throw InvalidParameter(std::string(op) + " requires N = " + std::to_string(urns) +
                           " urns (got " + std::to_string(e.urns()) + ")");
  }
}

// C(a,v) C(n-a,b-v) / C(n,b)
template <class B>
typename B::Result two_urns(const UrnEnsemble& e) {
  require_urns(e, 2, "pmf_two_urns");
  const Int n = e.n(), a = e.samples()[0], b = e.samples()[1];
  auto [lo, hi] = support_bounds(e);
  return tabulate<B>(
      lo, hi, [&](Int v) { return B::binom(a, v) * B::binom(n - a, b - v); }, B::binom(n, b));
}

// C(n,v) C(n-v,a-v) C(n-a,b-v) / (C(n,a) C(n,b))
template <class B>
typename B::Result two_urns_unreduced(const UrnEnsemble& e) {
  require_urns(e, 2, "pmf_two_urns_unreduced");
  const Int n = e.n(), a = e.samples()[0], b = e.samples()[1];
  auto [lo, hi] = support_bounds(e);
  return tabulate<B>(
      lo, hi,
      [&](Int v) { return B::binom(n, v) * B::binom(n - v, a - v) * B::binom(n - a, b - v); },
      B::binom(n, a) * B::binom(n, b));
}

// C(a,v) sum_i C(a-v,i) C(n-a,b-v-i) C(n-v-i,c-v) / (C(n,b) C(n,c)),
// i in [0, min(a-v, b-v)].
template <class B>
typename B::Result three_urns(const UrnEnsemble& e) {
  require_urns(e, 3, "pmf_three_urns");
  const Int n = e.n(), a = e.samples()[0], b = e.samples()[1], c = e.samples()[2];
  auto [lo, hi] = support_bounds(e);
  return tabulate<B>(
      lo, hi,
      [&](Int v) {
        typename B::Sum inner;
        const Int alpha = std::min(a - v, b - v);
        for (Int i = 0; i <= alpha; ++i) {
          inner.add(B::binom(a - v, i) * B::binom(n - a, b - v - i) * B::binom(n - v - i, c - v));
        }
        return B::binom(a, v) * inner.value();
      },
      B::binom(n, b) * B::binom(n, c));
}

// Inner sum of the three-urn count as a leading term times a terminating 3F2:
//   C(n-a,b-v) C(n-v,c-v) 3F2(c-n, v-a, v-b; v-n, 1+n+v-a-b; 1).
// For v < a+b-n that leading term is zero while later ones are not (and the
// lower parameter 1+n+v-a-b is nonpositive), so the same ratio is expanded
// from the first nonzero index i0 = a+b-n-v instead:
//   C(a-v,i0) C(2n-a-b,c-v) 3F2(b-n, a-n, a+b+c-2n-v; i0+1, a+b-2n; 1).
struct ThreeUrnSeries {
  BigInt lead;
  ExactRational series;
};

ThreeUrnSeries three_urn_3f2(Int n, Int a, Int b, Int c, Int v) {
  const Int width = std::min(a - v, b - v);
  if (v >= a + b - n) {
    BigInt lead = exact_binomial_count(n - a, b - v) * exact_binomial_count(n - v, c - v);
    if (lead == 0) return {0, 0};
    return {lead, hyp3f2_terminating_exact({c - n, v - a, v - b}, {v - n, 1 + n + v - a - b}, width)};
  }
  const Int i0 = a + b - n - v;
  BigInt lead = exact_binomial_count(a - v, i0) * exact_binomial_count(2 * n - a - b, c - v);
  if (lead == 0) return {0, 0};
  return {lead, hyp3f2_terminating_exact({b - n, a - n, a + b + c - 2 * n - v}, {i0 + 1, a + b - 2 * n},
                                         width - i0)};
}

// C(a,v) sum_{i,l} C(a-v,i) C(i,l) C(n-a,b-v-i) C(n-v-i,c-v-l) C(n-v-l,d-v)
//   / (C(n,b) C(n,c) C(n,d))
template <class B>
typename B::Result four_urns(const UrnEnsemble& e) {
  require_urns(e, 4, "pmf_four_urns");
  const auto& s = e.samples();
  const Int n = e.n(), a = s[0], b = s[1], c = s[2], d = s[3];
  auto [lo, hi] = support_bounds(e);
  return tabulate<B>(
      lo, hi,
      [&](Int v) {
        typename B::Sum inner;
        for (Int i = 0; i <= a - v; ++i) {
          auto outer = B::binom(a - v, i) * B::binom(n - a, b - v - i);
          if (B::is_zero(outer)) continue;
          for (Int l = 0; l <= i; ++l) {
            inner.add(outer * B::binom(i, l) * B::binom(n - v - i, c - v - l) *
                      B::binom(n - v - l, d - v));
          }
        }
        return B::binom(a, v) * inner.value();
      },
      B::binom(n, b) * B::binom(n, c) * B::binom(n, d));
}

// Nested sum over the N-2 cross-urn intersection sizes i_1 >= ... >= i_{N-2},
// with i_0 = a_1 - v and i_{N-1} = 0:
//   C(a_1,v) sum prod_{j=0}^{N-2} C(i_j, i_{j+1}) C(n-v-i_j, a_{j+2}-v-i_{j+1}).
// The product is a chain in consecutive indices, so the sum is evaluated by
// eliminating i_1, i_2, ... in turn.
template <class B>
typename B::Value n_urn_count(Int n, const std::vector<Int>& a, Int v) {
  using Value = typename B::Value;
  const Int width = a[0] - v;
  if (width < 0) return B::zero();
  const std::size_t urns = a.size();

  std::vector<Value> weight(width + 1, B::zero());
  weight[width] = B::one();
  std::vector<Value> next(width + 1, B::zero());
  // weight is zero outside [lo, hi].
  Int lo = width, hi = width;

  for (std::size_t j = 0; j + 2 < urns; ++j) {
    const Int draw = a[j + 1] - v;
    Int next_lo = width + 1, next_hi = -1;
    for (Int to = 0; to <= width; ++to) {
      next[to] = B::zero();
      if (to > draw || to > hi) continue;
      typename B::Sum sum;
      // C(n-v-from, draw-to) vanishes once from > n - a_{j+2} + to.
      const Int last = std::min(hi, n - a[j + 1] + to);
      for (Int from = std::max(to, lo); from <= last; ++from) {
        if (B::is_zero(weight[from])) continue;
        sum.add(weight[from] * B::binom(from, to) * B::binom(n - v - from, draw - to));
      }
      next[to] = sum.value();
      if (!B::is_zero(next[to])) {
        next_lo = std::min(next_lo, to);
        next_hi = to;
      }
    }
    std::swap(weight, next);
    if (next_hi < 0) return B::zero();
    lo = next_lo;
    hi = next_hi;
  }

  typename B::Sum total;
  const Int draw = a[urns - 1] - v;
  for (Int from = lo; from <= hi; ++from) {
    if (B::is_zero(weight[from])) continue;
    total.add(weight[from] * B::binom(n - v - from, draw));
  }
  return B::binom(a[0], v) * total.value();
}

template <class B>
typename B::Result n_urns(const UrnEnsemble& e) {
  if (e.urns() < 2) throw InvalidParameter("pmf_n_urns requires N >= 2");
  std::vector<Int> a = e.samples();
  std::sort(a.begin(), a.end(), std::greater<>());
  const Int n = e.n();
  typename B::Value total = B::one();
  for (std::size_t k = 1; k < a.size(); ++k) total = total * B::binom(n, a[k]);
  auto [lo, hi] = support_bounds(e);
  return tabulate<B>(lo, hi, [&](Int v) { return n_urn_count<B>(n, a, v); }, total);
}

// sum_{m=0}^{beta} sum_{l=0}^{gamma} sum_{j=0}^{l}
//   C(n-q,v-l) C(q,l) C(l,j) C(q-l,m) C(n-v-q+l,a-v-m) C(n+q-a-m-j,b-v)
//   / (C(n,a) C(n+q,b)),
// beta = min(a-v, q), gamma = min(v, q-m).
template <class B>
typename B::Result duplicates(const DuplicateUrnPair& p) {
  const Int n = p.n(), a = p.a(), b = p.b(), q = p.q();
  const Int lo = std::max<Int>(a + b - n - std::min(b / 2, q), 0);
  const Int hi = std::min(a, b);
  return tabulate<B>(
      lo, hi,
      [&](Int v) {
        typename B::Sum sum;
        const Int beta = std::min(a - v, q);
        for (Int m = 0; m <= beta; ++m) {
          const Int gamma = std::min(v, q - m);
          for (Int l = 0; l <= gamma; ++l) {
            auto first = B::binom(n - q, v - l) * B::binom(q, l) * B::binom(q - l, m) *
                         B::binom(n - v - q + l, a - v - m);
            if (B::is_zero(first)) continue;
            for (Int j = 0; j <= l; ++j) {
              sum.add(first * B::binom(l, j) * B::binom(n + q - a - m - j, b - v));
            }
          }
        }
        return sum.value();
      },
      B::binom(n, a) * B::binom(n + q, b));
}

// C(q,a-c) sum_{j=0}^{q} C(q-a+c,j) C(n-a+c-j,2c-a-j) / C(n+q,a)
template <class B>
typename B::Result single_urn(const SingleUrnSpec& s) {
  const Int n = s.n(), q = s.q(), a = s.a();
  const Int lo = a - std::min(a / 2, q);
  return tabulate<B>(
      lo, a,
      [&](Int c) {
        typename B::Sum sum;
        for (Int j = 0; j <= q; ++j) {
          sum.add(B::binom(q - a + c, j) * B::binom(n - a + c - j, 2 * c - a - j));
        }
        return B::binom(q, a - c) * sum.value();
      },
      B::binom(n + q, a));
}

// C(n,c) C(c,a-c) 2^(2c-a) / C(2n,a)
template <class B>
typename B::Result single_urn_full_dup(Int n, Int a) {
  if (n < 1 || a < 1 || a > 2 * n) {
    throw InvalidParameter("pmf_single_urn_full_dup requires 1 <= a <= 2n (got n=" +
                           std::to_string(n) + ", a=" + std::to_string(a) + ")");
  }
  return tabulate<B>(
      (a + 1) / 2, std::min(a, n),
      [&](Int c) { return B::binom(n, c) * B::binom(c, a - c) * B::pow2(2 * c - a); },
      B::binom(2 * n, a));
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

std::string join(const std::vector<Int>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  return out.str();
}

}  // namespace

UrnEnsemble::UrnEnsemble(std::int64_t n, std::vector<std::int64_t> samples)
    : n_(n), samples_(std::move(samples)) {
  if (n_ < 1) throw InvalidParameter("UrnEnsemble requires n >= 1 (got " + std::to_string(n_) + ")");
  if (samples_.size() < 2) {
    throw InvalidParameter("UrnEnsemble requires N >= 2 urns (got " +
                           std::to_string(samples_.size()) + ")");
  }
  for (Int a : samples_) {
    if (a < 0 || a > n_) {
      throw InvalidParameter("UrnEnsemble requires 0 <= a_k <= n (got a_k=" + std::to_string(a) +
                             ", n=" + std::to_string(n_) + ")");
    }
  }
}

DuplicateUrnPair::DuplicateUrnPair(std::int64_t n, std::int64_t a, std::int64_t b, std::int64_t q)
    : n_(n), a_(a), b_(b), q_(q) {
  if (n_ < 1) throw InvalidParameter("DuplicateUrnPair requires n >= 1");
  if (q_ < 0 || q_ > n_) {
    throw InvalidParameter("DuplicateUrnPair requires 0 <= q <= n (got q=" + std::to_string(q_) +
                           ", n=" + std::to_string(n_) + ")");
  }
  if (a_ < 0 || a_ > n_) {
    throw InvalidParameter("DuplicateUrnPair requires 0 <= a <= n (got a=" + std::to_string(a_) +
                           ")");
  }
  if (b_ < 0 || b_ > n_ + q_) {
    throw InvalidParameter("DuplicateUrnPair requires 0 <= b <= n + q (got b=" +
                           std::to_string(b_) + ")");
  }
}

SingleUrnSpec::SingleUrnSpec(std::int64_t n, std::int64_t q, std::int64_t a)
    : n_(n), q_(q), a_(a) {
  if (q_ <= 0 || q_ > n_) {
    throw InvalidParameter("SingleUrnSpec requires 0 < q <= n (got q=" + std::to_string(q_) +
                           ", n=" + std::to_string(n_) + ")");
  }
  if (a_ < 0 || a_ > n_ + q_) {
    throw InvalidParameter("SingleUrnSpec requires 0 <= a <= n + q (got a=" +
                           std::to_string(a_) + ")");
  }
}

std::string describe(const DistributionSpec& spec) {
  std::ostringstream out;
  if (auto* e = std::get_if<UrnEnsemble>(&spec)) {
    out << "nurn n=" << e->n() << " samples=" << join(e->samples());
  } else if (auto* d = std::get_if<DuplicateUrnPair>(&spec)) {
    out << "dup n=" << d->n() << " a=" << d->a() << " b=" << d->b() << " q=" << d->q();
  } else {
    const auto& s = std::get<SingleUrnSpec>(spec);
    out << "single n=" << s.n() << " q=" << s.q() << " a=" << s.a();
  }
  return out.str();
}

std::string_view to_string(Tail tail) {
  switch (tail) {
    case Tail::greater:
      return "greater";
    case Tail::less:
      return "less";
    case Tail::two_sided:
      return "two-sided";
  }
  return "?";
}

Tail parse_tail(std::string_view text) {
  if (text == "greater") return Tail::greater;
  if (text == "less") return Tail::less;
  if (text == "two-sided" || text == "two_sided") return Tail::two_sided;
  throw InvalidParameter("tail must be greater, less or two-sided (got '" + std::string(text) +
                         "')");
}

std::pair<std::int64_t, std::int64_t> support_bounds(const UrnEnsemble& e) {
  const auto& a = e.samples();
  Int total = 0;
  for (Int x : a) total += x;
  const Int lo = std::max<Int>(total - static_cast<Int>(a.size() - 1) * e.n(), 0);
  const Int hi = *std::min_element(a.begin(), a.end());
  return {lo, hi};
}

std::pair<std::int64_t, std::int64_t> support_bounds(const DistributionSpec& spec) {
  struct Bounds {
    std::pair<Int, Int> operator()(const UrnEnsemble& e) const { return support_bounds(e); }
    std::pair<Int, Int> operator()(const DuplicateUrnPair& p) const {
      return {std::max<Int>(p.a() + p.b() - p.n() - std::min(p.b() / 2, p.q()), 0), std::min(p.a(), p.b())};
    }
    std::pair<Int, Int> operator()(const SingleUrnSpec& s) const {
      return {s.a() - std::min(s.a() / 2, s.q()), std::min(s.a(), s.n())};
    }
  };
  return std::visit(Bounds{}, spec);
}

Pmf pmf_two_urns(const UrnEnsemble& e) { return two_urns<LogBackend>(e); }
Pmf pmf_two_urns_unreduced(const UrnEnsemble& e) { return two_urns_unreduced<LogBackend>(e); }
Pmf pmf_three_urns(const UrnEnsemble& e) { return three_urns<LogBackend>(e); }
Pmf pmf_four_urns(const UrnEnsemble& e) { return four_urns<LogBackend>(e); }
Pmf pmf_n_urns(const UrnEnsemble& e) { return n_urns<LogBackend>(e); }
Pmf pmf_duplicates(const DuplicateUrnPair& p) { return duplicates<LogBackend>(p); }
Pmf pmf_single_urn(const SingleUrnSpec& s) { return single_urn<LogBackend>(s); }
Pmf pmf_single_urn_full_dup(std::int64_t n, std::int64_t a) {
  return single_urn_full_dup<LogBackend>(n, a);
}

Pmf pmf_three_urns_via_3f2(const UrnEnsemble& e) {
  require_urns(e, 3, "pmf_three_urns_via_3f2");
  const Int n = e.n(), a = e.samples()[0], b = e.samples()[1], c = e.samples()[2];
  auto [lo, hi] = support_bounds(e);
  const LogWeight total = log_binomial(n, b) * log_binomial(n, c);
  std::vector<double> p;
  for (Int v = lo; v <= hi; ++v) {
    const auto [lead, series] = three_urn_3f2(n, a, b, c, v);
    const ExactRational inner = lead * series;
    if (a < v || inner == 0) {
      p.push_back(0.0);
      continue;
    }
    p.push_back((log_binomial(a, v) * LogWeight(log_of(inner)) / total).linear());
  }
  return Pmf(lo, std::move(p));
}

Moments moments_n_urns(const UrnEnsemble& e) {
  const double n = static_cast<double>(e.n());
  const auto& a = e.samples();
  // E(X) = prod a_k / n^(N-1)
  double mean = static_cast<double>(a[0]);
  for (std::size_t k = 1; k < a.size(); ++k) mean *= static_cast<double>(a[k]) / n;
  if (e.n() == 1) return {mean, 0.0, true};
  // E(X^2) = E(X) (1 + prod (a_k - 1) / (n-1)^(N-1)), which is the closed
  // variance numerator rearranged so that no factor overflows.
  double falling = static_cast<double>(a[0] - 1);
  for (std::size_t k = 1; k < a.size(); ++k) falling *= static_cast<double>(a[k] - 1) / (n - 1.0);
  const double second = mean * (1.0 + falling);
  return {mean, std::max(second - mean * mean, 0.0), false};
}

std::size_t default_small_urn(const UrnEnsemble& e) {
  const auto& a = e.samples();
  return static_cast<std::size_t>(std::min_element(a.begin(), a.end()) - a.begin());
}

namespace {

std::pair<Int, double> binomial_parameters(const UrnEnsemble& e, std::optional<std::size_t> small) {
  const std::size_t idx = small.value_or(default_small_urn(e));
  if (idx >= e.urns()) throw InvalidParameter("small-sample urn index out of range");
  double p = 1.0;
  for (std::size_t k = 0; k < e.urns(); ++k) {
    if (k != idx) p *= static_cast<double>(e.samples()[k]) / static_cast<double>(e.n());
  }
  return {e.samples()[idx], p};
}

}  // namespace

Pmf pmf_binomial_approx(const UrnEnsemble& e, std::optional<std::size_t> small_urn) {
  auto [b, p] = binomial_parameters(e, small_urn);
  if (p <= 0.0) return Pmf::point_mass(0);
  if (p >= 1.0) return Pmf::point_mass(b);
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  std::vector<double> probs;
  for (Int v = 0; v <= b; ++v) {
    double lw = log_binomial(b, v).value() + static_cast<double>(v) * log_p +
                static_cast<double>(b - v) * log_q;
    probs.push_back(std::exp(lw));
  }
  return Pmf(0, std::move(probs));
}

Moments binomial_approx_moments(const UrnEnsemble& e, std::optional<std::size_t> small_urn) {
  auto [b, p] = binomial_parameters(e, small_urn);
  const double mean = static_cast<double>(b) * p;
  return {mean, mean * (1.0 - p), false};
}

double normal_approx_pvalue(const UrnEnsemble& e, std::int64_t observed, Tail tail) {
  Moments m = moments_n_urns(e);
  if (m.degenerate || !(m.variance > 0.0)) {
    throw InvalidParameter("normal approximation needs positive variance");
  }
  const double sd = std::sqrt(m.variance);
  const double x = static_cast<double>(observed);
  const double upper = 1.0 - normal_cdf((x - 0.5 - m.mean) / sd);
  const double lower = normal_cdf((x + 0.5 - m.mean) / sd);
  switch (tail) {
    case Tail::greater:
      return upper;
    case Tail::less:
      return lower;
    case Tail::two_sided:
      return std::min(1.0, 2.0 * std::min(upper, lower));
  }
  return 1.0;
}

Pmf pmf_normal_approx(const UrnEnsemble& e) {
  Moments m = moments_n_urns(e);
  if (m.degenerate || !(m.variance > 0.0)) {
    throw InvalidParameter("normal approximation needs positive variance");
  }
  const double sd = std::sqrt(m.variance);
  auto [lo, hi] = support_bounds(e);
  std::vector<double> p;
  for (Int v = lo; v <= hi; ++v) {
    const double x = static_cast<double>(v);
    p.push_back(normal_cdf((x + 0.5 - m.mean) / sd) - normal_cdf((x - 0.5 - m.mean) / sd));
  }
  return Pmf(lo, std::move(p));
}

double mean_single_urn_full_dup(std::int64_t n, std::int64_t a) {
  if (a < 1) throw InvalidParameter("mean_single_urn_full_dup requires a >= 1");
  const double da = static_cast<double>(a);
  return da * (1.0 - (da - 1.0) / (4.0 * static_cast<double>(n) - 2.0));
}

Pmf pmf(const DistributionSpec& spec) {
  return std::visit(
      [](const auto& s) -> Pmf {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UrnEnsemble>) {
          return pmf_n_urns(s);
        } else if constexpr (std::is_same_v<T, DuplicateUrnPair>) {
          return pmf_duplicates(s);
        } else {
          return pmf_single_urn(s);
        }
      },
      spec);
}

namespace exact {

ExactPmf pmf_two_urns(const UrnEnsemble& e) { return two_urns<ExactBackend>(e); }
ExactPmf pmf_two_urns_unreduced(const UrnEnsemble& e) {
  return two_urns_unreduced<ExactBackend>(e);
}
ExactPmf pmf_three_urns(const UrnEnsemble& e) { return three_urns<ExactBackend>(e); }
ExactPmf pmf_four_urns(const UrnEnsemble& e) { return four_urns<ExactBackend>(e); }
ExactPmf pmf_n_urns(const UrnEnsemble& e) { return n_urns<ExactBackend>(e); }
ExactPmf pmf_duplicates(const DuplicateUrnPair& p) { return duplicates<ExactBackend>(p); }
ExactPmf pmf_single_urn(const SingleUrnSpec& s) { return single_urn<ExactBackend>(s); }
ExactPmf pmf_single_urn_full_dup(std::int64_t n, std::int64_t a) {
  return single_urn_full_dup<ExactBackend>(n, a);
}

ExactPmf pmf_three_urns_via_3f2(const UrnEnsemble& e) {
  require_urns(e, 3, "pmf_three_urns_via_3f2");
  const Int n = e.n(), a = e.samples()[0], b = e.samples()[1], c = e.samples()[2];
  auto [lo, hi] = support_bounds(e);
  const BigInt total = exact_binomial_count(n, b) * exact_binomial_count(n, c);
  std::vector<ExactRational> p;
  for (Int v = lo; v <= hi; ++v) {
    const auto [lead, series] = three_urn_3f2(n, a, b, c, v);
    p.push_back(ExactRational(exact_binomial_count(a, v) * lead, total) * series);
  }
  return ExactPmf(lo, std::move(p));
}

ExactPmf pmf(const DistributionSpec& spec) {
  return std::visit(
      [](const auto& s) -> ExactPmf {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UrnEnsemble>) {
          return exact::pmf_n_urns(s);
        } else if constexpr (std::is_same_v<T, DuplicateUrnPair>) {
          return exact::pmf_duplicates(s);
        } else {
          return exact::pmf_single_urn(s);
        }
      },
      spec);
}

}  // namespace exact
}  // namespace urnsect
