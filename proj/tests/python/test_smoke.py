import os
import subprocess
from fractions import Fraction

import pytest

import oddcut

CHAIN = "directed\nnodes 4\nedge 0 1\nedge 1 2\nedge 2 3\nterminal 0\nterminal 3\n"


def test_parse_and_format_round_trip():
    inst = oddcut.Instance.parse(CHAIN)
    assert inst.directed and inst.node_kind
    assert inst.node_count == 4
    assert inst.terminals == [0, 3]
    assert inst.free_elements() == [1, 2]
    assert oddcut.Instance.parse(inst.format()) == inst


def test_parse_error_carries_line():
    with pytest.raises(oddcut.ParseError, match="line 3"):
        oddcut.Instance.parse("directed\nnodes 2\nedge 0 5\n")
    assert issubclass(oddcut.ParseError, ValueError)


def test_exact_and_brute_agree_on_chain():
    inst = oddcut.Instance.parse(CHAIN)
    assert oddcut.solve_exact(inst, 0) is None
    got = oddcut.solve_exact(inst, 1)
    assert got["size"] == 1
    assert oddcut.verify_solution(inst, got["elements"])
    assert oddcut.brute_force_solve(inst)["elements"] == [1]
    assert oddcut.solve_minimum(inst)["size"] == 1
    random = oddcut.solve_exact(inst, 1, strategy="random", seed=3)
    assert random["size"] == 1


def test_verify_rejects_protected():
    inst = oddcut.Instance.parse(CHAIN)
    with pytest.raises(oddcut.OddcutError, match="ProtectedViolation"):
        oddcut.verify_solution(inst, [0])


def test_odd_path_and_shadows():
    inst = oddcut.Instance.parse(CHAIN)
    assert oddcut.has_odd_path(inst, 0, 3)
    assert not oddcut.has_odd_path(inst, 0, 2)
    forward, reverse, thin = oddcut.shadows(inst, [1])
    assert forward == [2] and reverse == [] and thin


def test_approx2_on_chain():
    edges, cost = oddcut.approx2(oddcut.Instance.parse(CHAIN), 0, 3)
    assert edges == [0]
    assert cost == 1


@pytest.mark.parametrize("k", [3, 4, 5])
def test_star_gap(k):
    inst, witness = oddcut.star_gap(k)
    assert sum(witness) == Fraction(k, 2)
    optimum = oddcut.brute_force_solve(
        oddcut.Instance.parse(inst.format() + f"budget {k}\n"))["size"]
    assert Fraction(optimum) / sum(witness) == 2 * (1 - Fraction(1, k))


def test_escher_wall():
    r = oddcut.escher_report()
    assert r["dual_value"] == 3 and r["primal_value"] == 3 and r["gap"] == 0
    assert r["extreme_point"] and not r["half_integral"]
    assert Fraction(3, 4) in r["primal"]


def test_vertex_cover_gadget():
    triangle = oddcut.Instance.parse(
        "undirected\nnodes 3\nedge 0 1\nedge 1 2\nedge 0 2\nterminal 0\nterminal 2\n")
    assert oddcut.brute_force_solve(oddcut.vc_gadget(triangle))["size"] == 2


def test_run_cli_matches_binary():
    code, out, _ = oddcut.run_cli(["solve", "-", "--brute"], CHAIN)
    assert code == 0 and out == "SOLUTION size=1\nnode 1\n"
    binary = os.environ.get("ODDCUT_CLI")
    if binary:
        done = subprocess.run([binary, "solve", "-", "--brute"], input=CHAIN,
                              capture_output=True, text=True)
        assert done.returncode == 0 and done.stdout == out
