#include "urnsect/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "urnsect/distributions.hpp"
#include "urnsect/errors.hpp"
#include "urnsect/hypothesis.hpp"
#include "urnsect/kmeans.hpp"
#include "urnsect/matrix_io.hpp"
#include "urnsect/membership.hpp"
#include "urnsect/oracles.hpp"

namespace urnsect::cli {
namespace {

using Int = std::int64_t;

struct Options {
  Int n = 0;
  std::vector<Int> samples;
  std::optional<Int> q, a, b;
  std::optional<std::size_t> small_urn;
  std::vector<Int> first, second;
  std::optional<Int> first_q, second_q;
  Int observed = 0;
  Int distance = 0;
  std::string tail = "greater";
  bool exact = false;
  std::uint64_t draws = 500000;
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
  bool check = false;
  std::string out;
  std::string universe;
  std::vector<std::string> groups;
  bool bonferroni = false;
  std::string matrix;
  std::size_t k = 0;
  std::size_t restarts = 25;
};

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("URNSECT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidParameter(std::string("URNSECT_SEED is not an unsigned integer: '") + env + "'");
    }
  }
  return 0;
}

Int required(const std::optional<Int>& x, const char* flag) {
  if (!x) throw InvalidParameter(std::string(flag) + " is required");
  return *x;
}

// "n,a1,...,aN", or with a q for the second urn a duplicate pair "n,a,b".
DistributionSpec spec_from_list(const std::vector<Int>& list, const std::optional<Int>& q,
                                const char* flag) {
  if (list.size() < 3) {
    throw InvalidParameter(std::string(flag) + " expects n followed by at least two samples");
  }
  if (q) {
    if (list.size() != 3) throw InvalidParameter(std::string(flag) + " with q expects n,a,b");
    return DuplicateUrnPair(list[0], list[1], list[2], *q);
  }
  return UrnEnsemble(list[0], std::vector<Int>(list.begin() + 1, list.end()));
}

DistributionSpec spec_for_kind(const std::string& kind, const Options& o) {
  if (kind == "nurn") return UrnEnsemble(o.n, o.samples);
  if (kind == "dup") {
    return DuplicateUrnPair(o.n, required(o.a, "--a"), required(o.b, "--b"), required(o.q, "--q"));
  }
  if (kind == "single") return SingleUrnSpec(o.n, required(o.q, "--q"), required(o.a, "--a"));
  throw InvalidParameter("unknown distribution kind '" + kind + "'");
}

void print_pmf(std::ostream& out, const std::string& variable, const Pmf& p,
               const ExactPmf* exact = nullptr) {
  out << variable << "\tP\tcumulative" << (exact ? "\texact" : "") << '\n';
  double cumulative = 0.0;
  for (Int x = p.support_min(); x <= p.support_max(); ++x) {
    cumulative += p(x);
    out << x << '\t' << format_real(p(x)) << '\t' << format_real(cumulative);
    if (exact) out << '\t' << (*exact)(x);
    out << '\n';
  }
}

void print_result(std::ostream& out, const TestResult& r) {
  out << "statistic=" << r.statistic << '\n'
      << "tail=" << to_string(r.tail) << '\n'
      << "p_value=" << format_real(r.p_value) << '\n'
      << "parameters=" << r.parameters << '\n'
      << "out_of_support=" << (r.out_of_support ? "true" : "false") << '\n';
}

void cmd_pmf(const std::string& kind, const Options& o, std::ostream& out) {
  if (kind == "nurn" || kind == "dup" || kind == "single") {
    DistributionSpec spec = spec_for_kind(kind, o);
    Pmf p = pmf(spec);
    std::optional<ExactPmf> e;
    if (o.exact) e = exact::pmf(spec);
    print_pmf(out, kind == "single" ? "c" : "v", p, e ? &*e : nullptr);
  } else if (kind == "full-dup") {
    const Int a = required(o.a, "--a");
    Pmf p = pmf_single_urn_full_dup(o.n, a);
    std::optional<ExactPmf> e;
    if (o.exact) e = exact::pmf_single_urn_full_dup(o.n, a);
    print_pmf(out, "c", p, e ? &*e : nullptr);
  } else if (kind == "distance") {
    DistancePair pair{spec_from_list(o.first, o.first_q, "--first"),
                      spec_from_list(o.second, o.second_q, "--second")};
    print_pmf(out, "d", pmf_distance(pair));
  } else if (kind == "binom-approx") {
    print_pmf(out, "v", pmf_binomial_approx(UrnEnsemble(o.n, o.samples), o.small_urn));
  } else if (kind == "normal-approx") {
    print_pmf(out, "v", pmf_normal_approx(UrnEnsemble(o.n, o.samples)));
  } else {
    throw InvalidParameter("unknown distribution kind '" + kind + "'");
  }
}

void cmd_test(const std::string& kind, const Options& o, std::ostream& out) {
  const Tail tail = parse_tail(o.tail);
  if (kind == "intersect") {
    std::vector<Int> list{o.n};
    list.insert(list.end(), o.samples.begin(), o.samples.end());
    DistributionSpec spec = spec_from_list(list, o.q, "--samples");
    print_result(out, intersection_test(spec, o.observed, tail));
  } else if (kind == "single") {
    print_result(out, intersection_test(SingleUrnSpec(o.n, required(o.q, "--q"), required(o.a, "--a")),
                                        o.observed, tail));
  } else if (kind == "distance") {
    DistancePair pair{spec_from_list(o.first, o.first_q, "--first"),
                      spec_from_list(o.second, o.second_q, "--second")};
    print_result(out, distance_test(pair, o.distance, tail));
  } else if (kind == "normal") {
    UrnEnsemble e(o.n, o.samples);
    TestResult r{o.observed, tail, normal_approx_pvalue(e, o.observed, tail),
                 "normal-approx " + describe(e), false};
    print_result(out, r);
  } else {
    throw InvalidParameter("unknown test kind '" + kind + "'");
  }
}

void write_report(std::ostream& out, const SimulationReport& r) {
  out << "# parameters=" << describe(r.parameters) << '\n'
      << "# draws=" << r.draws << '\n'
      << "# seed=" << r.seed << '\n'
      << "# rng=" << r.rng_algorithm << '\n'
      << "x\tcount\tfrequency\n";
  for (std::size_t i = 0; i < r.counts.size(); ++i) {
    out << r.count_min + static_cast<Int>(i) << '\t' << r.counts[i] << '\t'
        << format_real(static_cast<double>(r.counts[i]) / static_cast<double>(r.draws)) << '\n';
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw DataError("cannot write " + path);
  return f;
}

void cmd_simulate(const std::string& kind, const Options& o, std::ostream& out) {
  DistributionSpec spec = spec_for_kind(kind, o);
  SimulationReport report = simulate(spec, o.draws, resolve_seed(o), o.workers);
  if (o.out.empty()) {
    write_report(out, report);
  } else {
    auto f = open_output(o.out);
    write_report(f, report);
  }
  if (o.check) out << "total_variation=" << format_real(total_variation(report.empirical, pmf(spec))) << '\n';
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

void cmd_enrich(const Options& o, std::ostream& out) {
  MembershipTable table = MembershipTable::read_universe(std::filesystem::path(o.universe));
  std::vector<std::vector<std::string>> groups;
  for (const auto& g : o.groups) {
    std::vector<std::string> names;
    for (const auto& file : split_commas(g)) names.push_back(table.read_set(std::filesystem::path(file)).name);
    groups.push_back(std::move(names));
  }
  EnrichmentMatrix m = enrichment_matrix(table, groups);

  LabeledMatrix sizes, pvalues, scores, adjusted;
  for (std::size_t r = 0; r < m.rows(); ++r) sizes.row_names.push_back(table.sets()[m.groups[0][r]].name);
  for (std::size_t c = 0; c < m.columns(); ++c) {
    std::string name;
    for (std::size_t g = 1; g < m.groups.size(); ++g) {
      name += (g > 1 ? "|" : "") + table.sets()[m.at(0, c).sets[g]].name;
    }
    sizes.column_names.push_back(name);
  }
  pvalues = scores = adjusted = sizes;
  const double cells = static_cast<double>(m.cells.size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<double> v, p, s, b;
    for (std::size_t c = 0; c < m.columns(); ++c) {
      const auto& cell = m.at(r, c);
      v.push_back(static_cast<double>(cell.intersection));
      p.push_back(cell.test.p_value);
      s.push_back(-std::log10(cell.test.p_value));
      b.push_back(std::min(1.0, cell.test.p_value * cells));
    }
    sizes.values.push_back(v);
    pvalues.values.push_back(p);
    scores.values.push_back(s);
    adjusted.values.push_back(b);
  }
  auto emit = [&](const std::string& suffix, const LabeledMatrix& lm) {
    const std::string path = o.out + suffix;
    auto f = open_output(path);
    write_tsv(f, lm);
    out << "wrote " << path << '\n';
  };
  emit(".intersections.tsv", sizes);
  emit(".pvalues.tsv", pvalues);
  emit(".neglog10p.tsv", scores);
  if (o.bonferroni) emit(".bonferroni.tsv", adjusted);
}

void cmd_cluster(const Options& o, std::ostream& out) {
  std::ifstream in(o.matrix);
  if (!in) throw DataError("cannot open " + o.matrix);
  LabeledMatrix m = read_tsv(in, o.matrix);
  ClusterAssignment a = kmeans(m.values, o.k, resolve_seed(o), o.restarts);
  std::ostringstream text;
  text << "# k=" << a.k << '\n'
       << "# inertia=" << format_real(a.inertia) << '\n'
       << "# seed=" << a.seed << '\n'
       << "# restarts=" << o.restarts << '\n'
       << m.corner << "\tcluster\n";
  for (std::size_t r = 0; r < m.row_names.size(); ++r) text << m.row_names[r] << '\t' << a.labels[r] << '\n';
  if (o.out.empty()) {
    out << text.str();
  } else {
    auto f = open_output(o.out);
    f << text.str();
  }
}

void add_ensemble_flags(CLI::App* app, Options& o) {
  app->add_option("--n", o.n, "number of categories");
  app->add_option("--samples", o.samples, "draws per urn, comma separated")->delimiter(',');
  app->add_option("--q", o.q, "duplicated categories");
  app->add_option("--a", o.a, "draws from the first (or only) urn");
  app->add_option("--b", o.b, "draws from the duplicated urn");
}

void add_pair_flags(CLI::App* app, Options& o) {
  app->add_option("--first", o.first, "n,a,b[,...] of the first distribution")->delimiter(',');
  app->add_option("--second", o.second, "n,a,b[,...] of the second distribution")->delimiter(',');
  app->add_option("--first-q", o.first_q, "duplicates in the first distribution's second urn");
  app->add_option("--second-q", o.second_q, "duplicates in the second distribution's second urn");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::string kind;
  CLI::App app{"Intersection distributions for draws from several urns", "urnsect"};
  app.require_subcommand(1);

  auto* pmf_cmd = app.add_subcommand("pmf", "print a probability mass function");
  pmf_cmd->add_option("kind", kind, "nurn | dup | single | full-dup | distance | binom-approx | normal-approx")
      ->required();
  add_ensemble_flags(pmf_cmd, o);
  add_pair_flags(pmf_cmd, o);
  pmf_cmd->add_option("--small", o.small_urn, "index of the small-sample urn (binom-approx)");
  pmf_cmd->add_flag("--exact", o.exact, "add an exact rational column");

  auto* test_cmd = app.add_subcommand("test", "exact tail test");
  test_cmd->add_option("kind", kind, "intersect | single | distance | normal")->required();
  add_ensemble_flags(test_cmd, o);
  add_pair_flags(test_cmd, o);
  test_cmd->add_option("--observed", o.observed, "observed statistic");
  test_cmd->add_option("--d", o.distance, "observed distance");
  test_cmd->add_option("--tail", o.tail, "greater | less | two-sided");

  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo draws");
  sim_cmd->add_option("kind", kind, "nurn | dup | single")->required();
  add_ensemble_flags(sim_cmd, o);
  sim_cmd->add_option("--draws", o.draws, "replicates");
  sim_cmd->add_option("--seed", o.seed, "RNG seed (default $URNSECT_SEED, else 0)");
  sim_cmd->add_option("--workers", o.workers, "worker threads");
  sim_cmd->add_option("--out", o.out, "report file (default stdout)");
  sim_cmd->add_flag("--check", o.check, "print total variation against the exact PMF");

  auto* enrich_cmd = app.add_subcommand("enrich", "enrichment matrices from membership lists");
  enrich_cmd->add_option("--universe", o.universe, "category universe file")->required();
  enrich_cmd->add_option("--group", o.groups, "comma-separated set files; repeat per urn")->required();
  enrich_cmd->add_option("--out", o.out, "output path prefix")->required();
  enrich_cmd->add_flag("--bonferroni", o.bonferroni, "also write Bonferroni-adjusted P-values");

  auto* cluster_cmd = app.add_subcommand("cluster", "K-means over matrix rows");
  cluster_cmd->add_option("--matrix", o.matrix, "TSV matrix")->required();
  cluster_cmd->add_option("--k", o.k, "clusters")->required();
  cluster_cmd->add_option("--seed", o.seed, "RNG seed (default $URNSECT_SEED, else 0)");
  cluster_cmd->add_option("--restarts", o.restarts, "random restarts");
  cluster_cmd->add_option("--out", o.out, "assignment file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (pmf_cmd->parsed()) {
      cmd_pmf(kind, o, out);
    } else if (test_cmd->parsed()) {
      cmd_test(kind, o, out);
    } else if (sim_cmd->parsed()) {
      cmd_simulate(kind, o, out);
    } else if (enrich_cmd->parsed()) {
      cmd_enrich(o, out);
    } else if (cluster_cmd->parsed()) {
      cmd_cluster(o, out);
    }
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace urnsect::cli
