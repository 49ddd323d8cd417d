#ifndef CHEB_CERTIFICATE_HPP
#define CHEB_CERTIFICATE_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cheb {

// One hypothesis/conclusion comparison. Symbolic entries (hypotheses the
// paper states only as "sufficiently large" etc.) carry no numbers and never
// fail; they are recorded so reports stay honest about what was not checked.
struct Check {
  std::string name;
  double lhs = std::numeric_limits<double>::quiet_NaN();
  double rhs = std::numeric_limits<double>::quiet_NaN();
  std::string relation;  // "<", "<=", ">", ">=", "==", "symbolic"
  bool pass = true;
  std::string paper_anchor;
};

class ValidityCertificate {
 public:
  void add(std::string name, double lhs, std::string relation, double rhs,
           std::string anchor = "") {
    Check c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    c.relation = std::move(relation);
    c.paper_anchor = std::move(anchor);
    if (c.relation == "<")
      c.pass = lhs < rhs;
    else if (c.relation == "<=")
      c.pass = lhs <= rhs;
    else if (c.relation == ">")
      c.pass = lhs > rhs;
    else if (c.relation == ">=")
      c.pass = lhs >= rhs;
    else if (c.relation == "==")
      c.pass = lhs == rhs;
    else
      c.pass = false;
    if (std::isnan(lhs) || std::isnan(rhs)) c.pass = false;
    checks_.push_back(std::move(c));
  }

  void add_symbolic(std::string name, std::string anchor = "") {
    Check c;
    c.name = std::move(name);
    c.relation = "symbolic";
    c.pass = true;
    c.paper_anchor = std::move(anchor);
    checks_.push_back(std::move(c));
  }

  bool all_pass() const {
    for (const auto& c : checks_)
      if (!c.pass) return false;
    return true;
  }

  const std::vector<Check>& checks() const { return checks_; }

  std::vector<Check> failures() const {
    std::vector<Check> out;
    for (const auto& c : checks_)
      if (!c.pass) out.push_back(c);
    return out;
  }

  void merge(const ValidityCertificate& o) {
    checks_.insert(checks_.end(), o.checks_.begin(), o.checks_.end());
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks_) {
      nlohmann::json e;
      e["check"] = c.name;
      if (std::isnan(c.lhs))
        e["lhs"] = nullptr;
      else
        e["lhs"] = c.lhs;
      if (std::isnan(c.rhs))
        e["rhs"] = nullptr;
      else
        e["rhs"] = c.rhs;
      e["relation"] = c.relation;
      e["pass"] = c.pass;
      e["paper_anchor"] = c.paper_anchor;
      arr.push_back(std::move(e));
    }
    return arr;
  }

 private:
  std::vector<Check> checks_;
};

}  // namespace cheb

#endif
