#include "urnsect/membership.hpp"

#include <algorithm>
#include <fstream>

#include "urnsect/errors.hpp"

namespace urnsect {
namespace {

std::string trim(const std::string& s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  return in;
}

}  // namespace

std::vector<std::string> read_identifiers(std::istream& in, const std::string& source) {
  std::vector<std::string> ids;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    std::string id = trim(line);
    if (id.empty() || id.front() == '#') continue;
    if (id.find_first_of(" \t") != std::string::npos) {
      throw DataError(source + ":" + std::to_string(lineno) +
                      ": expected one identifier per line, got '" + id + "'");
    }
    ids.push_back(std::move(id));
  }
  return ids;
}

MembershipTable::MembershipTable(const std::vector<std::string>& ids) {
  for (const auto& id : ids) {
    auto [it, inserted] = index_.try_emplace(id, universe_.size());
    if (inserted) {
      universe_.push_back(id);
      duplicated_.push_back(false);
    } else if (!duplicated_[it->second]) {
      duplicated_[it->second] = true;
    } else {
      throw DataError("category '" + id + "' listed more than twice in the universe");
    }
  }
}

MembershipTable MembershipTable::read_universe(std::istream& in, const std::string& source) {
  return MembershipTable(read_identifiers(in, source));
}

MembershipTable MembershipTable::read_universe(const std::filesystem::path& path) {
  auto in = open(path);
  return read_universe(in, path.string());
}

std::int64_t MembershipTable::duplicated_count() const {
  return std::count(duplicated_.begin(), duplicated_.end(), true);
}

std::size_t MembershipTable::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw DataError("unknown category '" + id + "'");
  return it->second;
}

const CategorySet& MembershipTable::add_set(const std::string& name,
                                            const std::vector<std::string>& ids,
                                            const std::string& source) {
  const std::string where = source.empty() ? name : source;
  CategorySet set{name, {}, {}};
  std::vector<int> seen(universe_.size(), 0);
  for (const auto& id : ids) {
    auto it = index_.find(id);
    if (it == index_.end()) {
      throw DataError(where + ": unknown category '" + id + "'");
    }
    const std::size_t idx = it->second;
    const int times = ++seen[idx];
    if (times == 1) {
      set.members.push_back(idx);
    } else if (times == 2 && duplicated_[idx]) {
      set.doubled.push_back(idx);
    } else {
      throw DataError(where + ": category '" + id + "' listed " + std::to_string(times) +
                      " times but holds " + (duplicated_[idx] ? "two balls" : "one ball"));
    }
  }
  sets_.push_back(std::move(set));
  return sets_.back();
}

const CategorySet& MembershipTable::read_set(std::istream& in, const std::string& name,
                                             const std::string& source) {
  return add_set(name, read_identifiers(in, source), source);
}

const CategorySet& MembershipTable::read_set(const std::filesystem::path& path) {
  auto in = open(path);
  return read_set(in, path.stem().string(), path.string());
}

const CategorySet& MembershipTable::set(const std::string& name) const {
  for (const auto& s : sets_) {
    if (s.name == name) return s;
  }
  throw DataError("no set named '" + name + "'");
}

}  // namespace urnsect
