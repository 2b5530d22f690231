#pragma once

#include <vector>

#include "ecfp/strategy.hpp"
#include "ecfp/tabular_game.hpp"

namespace ecfp {

// Expected utility of one player under independent mixed strategies:
// sum over profiles y of u_player(y) * prod_i p_i(y_i). Brute force over the
// full profile space, so only viable under the enumeration cap.
double mixed_utility(const TabularGame& game, const JointStrategy& p, int player);

// U_player(a, p_{-player}) for every pure action a, from one enumeration pass.
std::vector<double> action_utilities(const TabularGame& game,
                                     const JointStrategy& p, int player);

// Max over players of the best pure deviation gain. Zero exactly at a Nash
// equilibrium; <= eps characterizes an eps-equilibrium.
double equilibrium_gap(const TabularGame& game, const JointStrategy& p);

// Deviation gain when everyone plays the common strategy f. Defined for
// identical-interest games; equals equilibrium_gap at the tuple (f,...,f).
double consensus_gap(const TabularGame& game, const MixedStrategy& f);

// True iff swapping any two players' actions permutes utilities with them:
// player i inherits j's payoff and vice versa while spectators are unchanged.
// For identical-interest games this collapses to invariance of the common
// utility under action swaps.
bool check_permutation_invariance(const TabularGame& game);

// True iff every unilateral deviation changes the potential by exactly the
// deviating player's utility change, within tol.
bool check_exact_potential(const TabularGame& game,
                           const std::vector<double>& potential,
                           double tol = 1e-9);

// ||f - target||_2. Equals the per-player-normalized distance between the
// consensus tuples: ||(f,...,f) - (target,...,target)||_2 / sqrt(n) for any n.
double normalized_consensus_distance(const MixedStrategy& f,
                                     const MixedStrategy& target);

}  // namespace ecfp
