import math

import pytest

import paircover as pc

TRIANGLE = """p dpfl 3 6
a 0 1 1
a 1 0 1
a 1 2 1
a 2 1 1
a 0 2 1
a 2 0 1
c 0
f 0 1 2
"""


def test_network_round_trip():
    net = pc.Network.loads(TRIANGLE)
    assert net.vertex_count == 3
    assert net.customers == [0]
    assert net.facilities == [0, 1, 2]
    assert net.symmetric
    assert pc.Network.loads(net.saves()).saves() == net.saves()


def test_bad_instance_raises():
    with pytest.raises(pc.NetworkError):
        pc.Network.loads("p dpfl 2 0\nc 0\nf 0\n")  # not strongly connected


def test_generate_and_solve():
    net = pc.generate(seed=3)
    assert net.vertex_count == 50
    net = pc.sample_cf(net, 1, 1, seed=1)
    inst = pc.build_instance(net, "set")
    assert inst.triple_count > 0
    exact = pc.solve_exact(inst, network=net)
    assert exact["status"] == "optimal"
    opt = len(exact["cover"])
    assert opt >= exact["root_lower_bound"]
    for cover in (
        pc.solve_greedy(inst, iterations=100, seed=4),
        pc.solve_genetic(inst, seed=4),
        pc.solve_shs(net, inst, iterations=50, seed=4),
        pc.solve_dhs(net, inst, iterations=50, seed=4),
    ):
        assert inst.validate_cover(cover)
        assert len(cover) >= opt


def test_greedy_is_deterministic():
    net = pc.sample_cf(pc.generate(seed=5), 2, 1, seed=2)
    inst = pc.build_instance(net, "path-vertex")
    one = pc.solve_greedy(inst, iterations=60, seed=9, jobs=1)
    eight = pc.solve_greedy(inst, iterations=60, seed=9, jobs=8)
    assert one == eight


def test_bounds():
    net = pc.sample_cf(pc.generate(seed=7), 1, 1, seed=3)
    inst = pc.build_instance(net, "set")
    opt = len(pc.solve_exact(inst, network=net)["cover"])
    bound = pc.hslb(net)
    assert bound["value"] <= opt
    if bound["feasible"]:
        assert bound["value"] == opt
    value, witness = pc.updfl(net)
    assert 1 <= value <= opt
    assert len(witness) == value


def test_tree_optimum():
    # Path 0-1-2, all vertices customers: both endpoints.
    arcs = [(0, 1, 1), (1, 0, 1), (1, 2, 1), (2, 1, 1)]
    net = pc.make_network(3, arcs, [0, 1, 2], [0, 1, 2])
    assert pc.tree_optimum(net) == [0, 2]


def test_failure_probability():
    assert f"{pc.failure_probability(1, 400, 100):.8f}" == "0.77855704"
    assert f"{pc.failure_probability(5, 400, 400):.8f}" == "0.00652893"
    assert pc.failure_probability(400, 400, 1) == 0.0
    assert math.isclose(
        pc.failure_probability(2, 400, 200), ((400 - 2) / 400) ** 200
    )


def test_lp_export():
    net = pc.Network.loads(TRIANGLE)
    inst = pc.build_instance(net, "set")
    lp = pc.export_lp(inst)
    assert lp.startswith("Minimize\n")
    assert lp.endswith("End\n")
