import json
import math
import os
import sys

module_dir = os.environ.get("ECFP_MODULE_DIR")
if module_dir:
    sys.path.insert(0, module_dir)

import _ecfp as ecfp


def test_congestion_game_basics():
    g = ecfp.CongestionGame(players=3, channels=[[0.0, 2.0, 0.5], [0.0, 1.0]])
    assert g.num_players == 3
    assert g.num_channels == 2
    assert g.channel_cost(0, 2) == 2.0 * 2 + 0.5 * 4
    # two players on channel 0, one on channel 1
    assert g.pure_utility([0, 0, 1], 0) == -(2.0 * 2 + 0.5 * 4)
    assert g.pure_utility([0, 0, 1], 2) == -1.0
    pot = g.rosenthal_potential([0, 0, 1])
    assert math.isclose(pot, -((2.0 + 0.5) + (4.0 + 2.0)) - 1.0)


def test_count_distribution_and_channel_utilities():
    pmf = ecfp.count_distribution_iid(0.3, 5)
    assert len(pmf) == 6
    assert math.isclose(sum(pmf), 1.0, abs_tol=1e-12)
    het = ecfp.count_distribution_heterogeneous([0.2, 0.7])
    assert math.isclose(het[1], 0.2 * 0.3 + 0.8 * 0.7, abs_tol=1e-12)

    g = ecfp.CongestionGame(players=4, channels=[[0.0, 1.0], [0.0, 2.0]])
    utils = ecfp.channel_utilities(g, [0.5, 0.5])
    assert len(utils) == 2
    # linear costs: E[-c_r(1 + count)] = -a_r * (1 + 3 * p_r)
    assert math.isclose(utils[0], -(1.0 + 1.5), abs_tol=1e-12)
    assert math.isclose(utils[1], -2.0 * (1.0 + 1.5), abs_tol=1e-12)
    assert ecfp.best_response(g, [0.5, 0.5]) == 0


def test_solve_cne_symmetric_channels():
    g = ecfp.CongestionGame(players=6, channels=[[0.0, 1.0], [0.0, 1.0]])
    probs, residual, iters, converged = ecfp.solve_cne(g, tol=1e-9)
    assert converged
    assert residual <= 1e-9
    assert math.isclose(probs[0], 0.5, abs_tol=1e-6)
    # the uniform start already is the fixed point here, so 0 iterations is fine
    assert iters >= 0


def test_graph_and_weights():
    edges, avg_deg = ecfp.geometric_graph(30, 5.0, seed=4)
    assert abs(avg_deg - 5.0) <= 1.5
    w = ecfp.metropolis_hastings_weights(30, edges)
    lam = ecfp.spectral_contraction(w)
    assert 0.0 < lam < 1.0
    # rows and columns sum to one
    for i in range(30):
        assert math.isclose(sum(w[i, j] for j in range(30)), 1.0, abs_tol=1e-12)
    assert ecfp.tracking_error_bound(4, 0.5, 1) == 8.0


def test_tabular_game_metrics():
    g = ecfp.TabularGame.identical_interest(2, 2, [1.0, 0.0, 0.0, 2.0])
    assert g.utility(0, [1, 1]) == 2.0
    assert ecfp.equilibrium_gap(g, [[0.0, 1.0], [0.0, 1.0]]) == 0.0
    assert ecfp.consensus_gap(g, [0.0, 1.0]) == 0.0
    assert math.isclose(ecfp.mixed_utility(g, [[0.5, 0.5], [0.5, 0.5]], 0), 0.75)


def test_run_experiment_and_validation():
    config = {
        "game": {"type": "congestion-random", "players": 8, "num_channels": 3,
                 "degree": 2, "cost_seed": 11},
        "algorithm": "ecfp-distributed",
        "graph": {"type": "geometric", "target_degree": 4.0, "seed": 2},
        "horizon": 120,
        "seed": 5,
        "initial_action": {"type": "seeded-uniform"},
        "check_invariants": True,
    }
    out = ecfp.run_experiment(json.dumps(config))
    summary = out["summary"]
    assert summary["players"] == 8
    assert summary["distributed"]
    assert summary["cne_solved"]
    assert out["records"][0][0] == 1
    assert out["csv"].splitlines()[0] == "t,gap,dist_cne,centroid_utility,max_est_err,err_bound"
    # every recorded estimate error stays under the certified ceiling
    for t, _gap, _dist, _util, est_err, bound in out["records"]:
        assert est_err <= bound + 1e-9, f"t={t}"

    checks = ecfp.validate_config(json.dumps(config))
    assert [name for name, _, _ in checks] == [
        "weight-matrix", "partition", "count-distributions",
        "potential-identity", "tracking-bound",
    ]
    assert all(passed for _, passed, _ in checks)


def test_config_error():
    try:
        ecfp.run_experiment(json.dumps({"frobnicate": 1}))
    except ValueError as err:
        assert "frobnicate" in str(err)
    else:
        raise AssertionError("unknown key accepted")
