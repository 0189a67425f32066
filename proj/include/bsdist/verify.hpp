#pragma once

#include <string>
#include <vector>

#include "bsdist/laurent.hpp"

namespace bsdist {

/// Result of the full sweep over Red(w0): the distribution/commutation-class
/// partition comparison, the Theta + T = 0 identity, and the per-braid-edge
/// laws (digit sum, T flip, D transport, cycle prediction, support interval).
struct SweepReport {
  int n = 0;
  long reduced_words = 0;
  long classes = 0;
  long braid_edges = 0;
  struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
  };
  std::vector<Check> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/// Runs every check exhaustively over Red(w0). Rejects n > 5 (enumeration
/// budget).
SweepReport verify_longest(int n);

/// Fixed-q collision search: groups Red(w0) by the vector of weight-table
/// numerators evaluated at q = q0 and reports any group meeting two or more
/// distinct commutation classes. Makes no claim beyond the searched range.
struct CollisionReport {
  int n = 0;
  std::string q0;
  long reduced_words = 0;
  long classes = 0;
  long value_groups = 0;
  /// Canonical words of the classes in each colliding value group.
  std::vector<std::vector<std::string>> collision_groups;
  bool collision_found() const { return !collision_groups.empty(); }
};
CollisionReport search_collisions(int n, const Rational& q0);

}  // namespace bsdist
