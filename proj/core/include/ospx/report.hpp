#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ospx {

struct Check {
  std::string name;
  bool pass = true;
  std::string witness;  // empty on pass
  std::vector<std::pair<std::string, long long>> dims;
  std::string note;
};

struct Report {
  std::vector<Check> checks;

  Check& add(std::string name, bool pass, std::string witness = {});
  void merge(const Report& other, const std::string& prefix = {});
  bool all_pass() const;
  const Check* find(const std::string& name) const;
  // Checks sorted by name; stable for equal names.
  std::vector<Check> sorted() const;
  std::string summary() const;
};

}  // namespace ospx
