#pragma once

#include <cstdint>

#include "ecfp/congestion.hpp"
#include "ecfp/strategy.hpp"

namespace ecfp {

struct CneOptions {
  double tol = 1e-8;       // accepted deviation gain at the returned point
  int max_iters = 200000;
  double gamma0 = 0.1;     // initial damping
  double decay = 0.7;      // damping shrink on stalled progress
  int window = 50;         // iterations per progress check
};

struct CneResult {
  MixedStrategy strategy;
  double residual = 0.0;   // deviation gain certified by the verification pass
  int iters = 0;
  bool converged = false;
};

// Symmetric equilibrium of the congestion game: a channel distribution p such
// that no player gains more than tol by deviating when all n players play p.
// Damped best-response iteration; the damping shrinks geometrically whenever a
// window passes without progress. The returned residual comes from an
// independent evaluation path (per-opponent convolution rather than the
// binomial closed form used inside the iteration), so the result is certified
// rather than trusted.
CneResult solve_cne(const CongestionGame& game, const CneOptions& options = {});
CneResult solve_cne_from(const CongestionGame& game, const MixedStrategy& start,
                         const CneOptions& options = {});

// Deviation gain at p via the per-opponent convolution path.
double verified_consensus_gap(const CongestionGame& game, const MixedStrategy& p);

}  // namespace ecfp
