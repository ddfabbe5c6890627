#pragma once

// Named category sets over one shared universe, read from plain-text lists
// (one identifier per line; blank lines and lines starting with '#' are
// skipped).

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <unordered_map>
#include <vector>

namespace urnsect {

struct CategorySet {
  std::string name;
  /// Universe indices in first-seen order, without repeats.
  std::vector<std::size_t> members;
  /// Universe indices listed twice, i.e. both balls drawn. Only legal for
  /// categories the universe marks as duplicated.
  std::vector<std::size_t> doubled;

  std::int64_t ball_count() const {
    return static_cast<std::int64_t>(members.size() + doubled.size());
  }
};

class MembershipTable {
 public:
  /// `ids` in file order; an identifier listed twice marks a duplicated
  /// category (it holds two balls). Throws DataError on a third listing.
  explicit MembershipTable(const std::vector<std::string>& ids);

  static MembershipTable read_universe(std::istream& in, const std::string& source = "universe");
  static MembershipTable read_universe(const std::filesystem::path& path);

  std::size_t size() const { return universe_.size(); }
  const std::vector<std::string>& universe() const { return universe_; }
  bool is_duplicated(std::size_t index) const { return duplicated_[index]; }
  std::int64_t duplicated_count() const;

  /// Index of `id`, or throws DataError naming it.
  std::size_t index_of(const std::string& id) const;

  /// Builds and stores a set. `source` prefixes error messages.
  const CategorySet& add_set(const std::string& name, const std::vector<std::string>& ids,
                             const std::string& source = "");
  const CategorySet& read_set(std::istream& in, const std::string& name,
                              const std::string& source);
  /// Set name is the file stem.
  const CategorySet& read_set(const std::filesystem::path& path);

  const std::vector<CategorySet>& sets() const { return sets_; }
  const CategorySet& set(const std::string& name) const;

 private:
  std::vector<std::string> universe_;
  std::vector<bool> duplicated_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<CategorySet> sets_;
};

/// Identifier lines from a membership list. Throws DataError with the line
/// number for lines holding internal whitespace.
std::vector<std::string> read_identifiers(std::istream& in, const std::string& source);

}  // namespace urnsect
