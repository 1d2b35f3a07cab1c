#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace onebook {

using VertexId = int;
using EdgeId = int;
using FaceId = int;

enum class Errc {
  invalid_embedding,
  disconnected_planarization,
  not_two_connected,
  not_three_connected,
  not_normalizable,
  not_cactus,
  level_gap_violation,
  unclassifiable_pair,
  multiple_d4_edges,
  conflict_detected,
  not_hamiltonian_cycle,
  budget_exhausted,
  io_error,
  usage,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_embedding: return "InvalidEmbedding";
    case Errc::disconnected_planarization: return "DisconnectedPlanarization";
    case Errc::not_two_connected: return "NotTwoConnected";
    case Errc::not_three_connected: return "NotThreeConnected";
    case Errc::not_normalizable: return "NotNormalizable";
    case Errc::not_cactus: return "NotCactus";
    case Errc::level_gap_violation: return "LevelGapViolation";
    case Errc::unclassifiable_pair: return "UnclassifiablePair";
    case Errc::multiple_d4_edges: return "MultipleD4EdgesPerBlock";
    case Errc::conflict_detected: return "ConflictDetected";
    case Errc::not_hamiltonian_cycle: return "NotHamiltonianCycle";
    case Errc::budget_exhausted: return "BudgetExhausted";
    case Errc::io_error: return "IoError";
    case Errc::usage: return "Usage";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace onebook
