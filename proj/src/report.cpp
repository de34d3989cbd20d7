#include "fuzmet/report.hpp"

namespace fuzmet {

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::KM1: return "KM1";
    case Axiom::KM2: return "KM2";
    case Axiom::KM3: return "KM3";
    case Axiom::KM4: return "KM4";
    case Axiom::KM5: return "KM5";
    case Axiom::SDP: return "SDP";
    case Axiom::FD: return "FD";
    case Axiom::DNonneg: return "nonnegativity";
    case Axiom::DIdentity: return "identity";
    case Axiom::DSymmetry: return "symmetry";
    case Axiom::DTriangle: return "triangle";
  }
  return "?";
}

bool AxiomReport::axioms_hold() const {
  for (const auto& e : entries)
    if (e.axiom != Axiom::FD && !e.passed) return false;
  return true;
}

bool AxiomReport::fd_holds() const {
  for (const auto& e : entries)
    if (e.axiom == Axiom::FD) return e.passed;
  return false;
}

bool AxiomReport::all_passed() const {
  for (const auto& e : entries)
    if (!e.passed) return false;
  return true;
}

std::optional<AxiomCheck> AxiomReport::first_failure() const {
  for (const auto& e : entries)
    if (!e.passed) return e;
  return std::nullopt;
}

}  // namespace fuzmet
