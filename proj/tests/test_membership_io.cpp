#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "urnsect/errors.hpp"
#include "urnsect/kmeans.hpp"
#include "urnsect/matrix_io.hpp"
#include "urnsect/membership.hpp"

using namespace urnsect;

namespace {

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const DataError& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST(ReadIdentifiers, SkipsBlanksAndComments) {
  std::istringstream in("# header\nGO:1\n\n   GO:2  \n#GO:3\n\t\nGO:4\r\n");
  EXPECT_EQ(read_identifiers(in, "x"), (std::vector<std::string>{"GO:1", "GO:2", "GO:4"}));
}

TEST(ReadIdentifiers, RejectsInternalWhitespaceWithLineNumber) {
  std::istringstream in("a\nb\nc d\n");
  const std::string msg = message_of([&] { read_identifiers(in, "list.txt"); });
  EXPECT_TRUE(contains(msg, "list.txt:3")) << msg;
  EXPECT_TRUE(contains(msg, "c d")) << msg;
}

TEST(Membership, UniverseMarksDuplicates) {
  MembershipTable t({"a", "b", "a", "c"});
  EXPECT_EQ(t.size(), 3u);
  EXPECT_EQ(t.universe(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_TRUE(t.is_duplicated(0));
  EXPECT_FALSE(t.is_duplicated(1));
  EXPECT_EQ(t.duplicated_count(), 1);
  EXPECT_EQ(t.index_of("c"), 2u);
  EXPECT_THROW(t.index_of("zz"), DataError);

  const std::string msg = message_of([] { MembershipTable({"a", "a", "a"}); });
  EXPECT_TRUE(contains(msg, "'a'")) << msg;
}

TEST(Membership, AddSetCountsBalls) {
  MembershipTable t({"a", "b", "a", "c", "d"});
  const CategorySet& s = t.add_set("s", {"c", "a", "a", "b"});
  EXPECT_EQ(s.members, (std::vector<std::size_t>{2, 0, 1}));
  EXPECT_EQ(s.doubled, (std::vector<std::size_t>{0}));
  EXPECT_EQ(s.ball_count(), 4);
  EXPECT_EQ(t.set("s").ball_count(), 4);
  EXPECT_THROW(t.set("nope"), DataError);
}

TEST(Membership, AddSetErrors) {
  MembershipTable t({"a", "b", "a"});
  std::string msg = message_of([&] { t.add_set("s", {"a", "q"}, "s.txt"); });
  EXPECT_TRUE(contains(msg, "s.txt")) << msg;
  EXPECT_TRUE(contains(msg, "'q'")) << msg;
  msg = message_of([&] { t.add_set("s", {"b", "b"}); });
  EXPECT_TRUE(contains(msg, "one ball")) << msg;
  msg = message_of([&] { t.add_set("s", {"a", "a", "a"}); });
  EXPECT_TRUE(contains(msg, "two balls")) << msg;
  EXPECT_TRUE(t.sets().empty());
}

TEST(Membership, ReadFromFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "urnsect_membership_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  { std::ofstream(dir / "universe.txt") << "# all\ng1\ng2\ng3\ng4\n"; }
  { std::ofstream(dir / "liver.txt") << "g2\ng4\n"; }
  MembershipTable t = MembershipTable::read_universe(dir / "universe.txt");
  EXPECT_EQ(t.size(), 4u);
  const CategorySet& s = t.read_set(dir / "liver.txt");
  EXPECT_EQ(s.name, "liver");
  EXPECT_EQ(s.members, (std::vector<std::size_t>{1, 3}));
  EXPECT_THROW(MembershipTable::read_universe(dir / "missing.txt"), DataError);
  std::filesystem::remove_all(dir);
}

TEST(MatrixIo, RoundTripIsExact) {
  LabeledMatrix m;
  m.corner = "set";
  m.row_names = {"r1", "r2"};
  m.column_names = {"c1", "c2", "c3"};
  m.values = {{0.1, 1.0 / 3.0, 1e-300}, {-2.5, 307.25, std::numeric_limits<double>::min()}};
  std::ostringstream out;
  write_tsv(out, m);
  std::istringstream in(out.str());
  const LabeledMatrix back = read_tsv(in);
  EXPECT_EQ(back.corner, m.corner);
  EXPECT_EQ(back.row_names, m.row_names);
  EXPECT_EQ(back.column_names, m.column_names);
  EXPECT_EQ(back.values, m.values);
  EXPECT_EQ(format_real(0.1), "0.10000000000000001");
}

TEST(MatrixIo, ReadErrors) {
  std::istringstream empty("");
  EXPECT_TRUE(contains(message_of([&] { read_tsv(empty, "m.tsv"); }), "missing header"));
  std::istringstream narrow("set\n");
  EXPECT_TRUE(contains(message_of([&] { read_tsv(narrow, "m.tsv"); }), "m.tsv:1"));
  std::istringstream short_row("set\ta\tb\nx\t1\n");
  EXPECT_TRUE(contains(message_of([&] { read_tsv(short_row, "m.tsv"); }), "m.tsv:2: expected 3 fields"));
  std::istringstream bad("set\ta\n# note\nx\t1.5q\n");
  const std::string msg = message_of([&] { read_tsv(bad, "m.tsv"); });
  EXPECT_TRUE(contains(msg, "m.tsv:3")) << msg;
  EXPECT_TRUE(contains(msg, "1.5q")) << msg;
}

TEST(Kmeans, OneClusterPerRowHasZeroInertia) {
  const std::vector<std::vector<double>> rows{{0, 0}, {1, 5}, {3, 2}, {-4, 1}};
  const ClusterAssignment c = kmeans(rows, rows.size(), 7);
  EXPECT_EQ(c.k, 4u);
  EXPECT_DOUBLE_EQ(c.inertia, 0.0);
  std::vector<std::size_t> sorted = c.labels;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::vector<std::size_t>{0, 1, 2, 3}));
}

TEST(Kmeans, SeparatesTwoBlobs) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> noise(0.0, 0.3);
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> truth;
  for (int i = 0; i < 40; ++i) {
    const double cx = (i % 2) ? 10.0 : 0.0;
    rows.push_back({cx + noise(rng), cx + noise(rng), noise(rng)});
    truth.push_back(i % 2);
  }
  const ClusterAssignment c = kmeans(rows, 2, 11, 10);
  EXPECT_DOUBLE_EQ(adjusted_rand_index(c.labels, truth), 1.0);
  ASSERT_FALSE(c.inertia_history.empty());
  EXPECT_DOUBLE_EQ(c.inertia_history.back(), c.inertia);
  for (std::size_t i = 1; i < c.inertia_history.size(); ++i) {
    EXPECT_LE(c.inertia_history[i], c.inertia_history[i - 1] + 1e-9);
  }

  const ClusterAssignment again = kmeans(rows, 2, 11, 10);
  EXPECT_EQ(again.labels, c.labels);
  EXPECT_EQ(again.inertia, c.inertia);
  EXPECT_EQ(again.seed, 11u);
}

TEST(Kmeans, InvalidParameters) {
  const std::vector<std::vector<double>> rows{{0, 0}, {1, 1}};
  EXPECT_THROW(kmeans(rows, 3, 1), InvalidParameter);
  EXPECT_THROW(kmeans(rows, 0, 1), InvalidParameter);
  EXPECT_THROW(kmeans({{0, 0}, {1}}, 1, 1), InvalidParameter);
}

TEST(AdjustedRand, Examples) {
  EXPECT_DOUBLE_EQ(adjusted_rand_index({0, 0, 1, 1}, {1, 1, 0, 0}), 1.0);
  EXPECT_DOUBLE_EQ(adjusted_rand_index({0, 0, 1, 1}, {0, 1, 0, 1}), -0.5);
  // sklearn's documented example
  EXPECT_NEAR(adjusted_rand_index({0, 0, 1, 2}, {0, 0, 1, 1}), 0.5714285714285714, 1e-12);
  EXPECT_THROW(adjusted_rand_index({0, 1}, {0}), InvalidParameter);
}
