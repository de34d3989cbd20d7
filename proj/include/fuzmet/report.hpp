#pragma once

#include <optional>
#include <string>
#include <vector>

namespace fuzmet {

// Axioms and properties a check can report on. The D* entries are the plain
// metric axioms used when validating a crisp distance matrix.
enum class Axiom {
  KM1,        // M(x,y,t) = 0 for t <= 0
  KM2,        // M(x,y,.) == 1 on t > 0 exactly when x == y
  KM3,        // symmetry in x,y
  KM4,        // M(x,z,t+s) >= min(M(x,y,t), M(y,z,s))
  KM5,        // nondecreasing, left-continuous, -> 1 as t -> inf
  SDP,        // M(x,y,t) -> 0 as t -> 0+ for x != y
  FD,         // some finite t with M(x,y,t) = 1 for every pair
  DNonneg,    // d >= 0
  DIdentity,  // d(x,y) = 0 iff x == y
  DSymmetry,  // d(x,y) = d(y,x)
  DTriangle,  // d(x,z) <= d(x,y) + d(y,z)
};

const char* axiom_name(Axiom a);

struct AxiomCheck {
  Axiom axiom;
  bool passed = false;
  std::string witness;  // empty when passed; else the first offending site
  std::string detail;   // human-readable explanation / counts
};

struct AxiomReport {
  std::vector<AxiomCheck> entries;

  void add(AxiomCheck c) { entries.push_back(std::move(c)); }
  void merge(const AxiomReport& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  }

  // FD is a classification, not a requirement: axioms_hold() ignores it.
  bool axioms_hold() const;
  bool fd_holds() const;  // true iff an FD entry exists and passed
  bool all_passed() const;
  std::optional<AxiomCheck> first_failure() const;
};

}  // namespace fuzmet
