#include "ospx/report.hpp"

#include <algorithm>
#include <sstream>

namespace ospx {

Check& Report::add(std::string name, bool pass, std::string witness) {
  checks.push_back(Check{std::move(name), pass, std::move(witness), {}, {}});
  return checks.back();
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto c : other.checks) {
    if (!prefix.empty()) c.name = prefix + "." + c.name;
    checks.push_back(std::move(c));
  }
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<Check> Report::sorted() const {
  auto out = checks;
  std::stable_sort(out.begin(), out.end(),
                   [](const Check& a, const Check& b) { return a.name < b.name; });
  return out;
}

std::string Report::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "pass " : "FAIL ") << c.name;
    if (!c.witness.empty()) os << "  [" << c.witness << "]";
    os << "\n";
  }
  return os.str();
}

}  // namespace ospx
