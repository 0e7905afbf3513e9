#pragma once

#include <string>
#include <utility>

#include "lni/transfer_matrix.hpp"

namespace lni {

// Real rational state-space quadruple with m inputs and m outputs.
struct StateSpace {
  MatQ A, B, C, D;

  Eigen::Index n() const { return A.rows(); }
  Eigen::Index m() const { return D.rows(); }
  void validate() const;
};

struct RealizationMeta {
  bool controllable = false;
  bool observable = false;
  Eigen::Index n = 0;
  std::string reduction_trace;
};

/// Minimal realization of a proper transfer matrix: per-column controllable
/// canonical blocks reduced by an exact two-stage Kalman restriction.
/// Non-proper inputs are rejected (route them through the spectral path).
std::pair<StateSpace, RealizationMeta> realize(const TransferMatrix& g);

/// Exact transfer matrix C (sI - A)^{-1} B + D via the Faddeev-LeVerrier
/// adjugate recursion (no eigenvalues, no inversion of A).
TransferMatrix transfer_of(const StateSpace& ss);

/// Exact ranks of the reachability and observability block matrices.
std::pair<int, int> ctrb_obsv_ranks(const StateSpace& ss);

/// Two-stage exact Kalman reduction of an arbitrary quadruple.
std::pair<StateSpace, RealizationMeta> minimal_realization(const StateSpace& ss);

StateSpace state_space_from_json(const nlohmann::json& j);
nlohmann::json state_space_to_json(const StateSpace& ss);

}  // namespace lni
