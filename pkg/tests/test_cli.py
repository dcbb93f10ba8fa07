import json
import subprocess
import sys

import pytest

from nbhdcycles.cli import EXIT_CODES, run_command
from nbhdcycles.constructions import complete_graph
from nbhdcycles.graph import parse_edge_list, parse_graph6

CONSTRUCTIONS = [
    ["book", "3"], ["prism", "4"], ["complete", "5"], ["cycle", "6"],
    ["octahedron"], ["petersen"], ["k4sub", "--base", "prism:3"],
]


def records(stdout):
    return [json.loads(line) for line in stdout.decode().splitlines()]


def test_construct_k4sub_g6():
    code, out, err = run_command(["construct", "k4sub", "--base", "prism:3", "--format", "g6"])
    assert code == 0 and err == b""
    lines = out.splitlines()
    assert len(lines) == 1
    G = parse_graph6(lines[0])
    assert (G.n, G.m) == (24, 45)


def test_construct_formats():
    code, out, _ = run_command(["construct", "book", "2", "--format", "edges"])
    assert code == 0
    [G] = parse_edge_list(out.decode().splitlines())
    assert (G.n, G.m) == (4, 5)
    code, out, _ = run_command(["construct", "complete", "4", "--format", "json"])
    assert records(out) == [{"n": 4, "m": 6, "edges": [list(e) for e in complete_graph(4).edges()]}]


def test_construct_k4sub_from_stdin():
    code, out, _ = run_command(["construct", "k4sub", "--base", "-"], b"C~\n")
    assert code == 0 and parse_graph6(out.strip()).n == 16


def test_verify_proof_on_k4():
    code, out, _ = run_command(["verify-proof"], b"C~\n")
    assert code == 0
    [rec] = records(out)
    assert rec["bound_holds"] is False and rec["status"] == "ok"
    assert rec["step_failures"][0]["step"] == "reduced graph has n<5"


def test_search_chen_yu():
    code, out, _ = run_command(["search", "--harness", "chen-yu", "--n", "5"])
    assert code == 0
    [rec] = records(out)
    assert rec["counterexamples"] == [] and rec["graphs_scanned"] == 13


def test_search_from_stdin():
    _, g6, _ = run_command(["construct", "complete", "5"])
    code, out, _ = run_command(["search", "--harness", "extremal", "--n", "5", "--source", "-"], g6)
    assert code == 0 and records(out)[0]["graphs_scanned"] == 1


@pytest.mark.parametrize("construction", CONSTRUCTIONS, ids=lambda c: c[0])
def test_pipe_into_check(construction):
    code, g6, err = run_command(["construct"] + construction)
    assert code == 0 and err == b""
    code, out, err = run_command(["check", "--property", "nbhd-cycles"], g6)
    assert code == 0 and err == b""
    [rec] = records(out)
    assert rec["value"] is (construction[0] in ("complete", "octahedron", "k4sub"))


def test_check_properties():
    code, out, _ = run_command(["check", "--property", "three-connected"], b"C~\nBw\n")
    recs = records(out)
    assert [r["value"] for r in recs] == [True, False]
    assert recs[0]["vertex_connectivity"] == 3
    code, out, _ = run_command(["check", "--property", "min-degree:3"], b"C~\n")
    assert records(out)[0]["value"] is True
    code, out, _ = run_command(["check", "--property", "independent-set", "--set", "0,2"], b"Bg\n")
    assert records(out)[0]["value"] is True
    code, out, _ = run_command(["check", "--property", "forest", "--set", "0,1,2"], b"Bw\n")
    assert records(out)[0]["value"] is False


def test_check_edge_list_input():
    code, out, _ = run_command(["check", "--property", "nbhd-cycles", "--input-format", "edges"],
                               b"3 3\n0 1\n1 2\n0 2\n")
    assert code == 0 and records(out)[0]["value"] is False


def test_cut():
    code, out, _ = run_command(["cut", "--kind", "independent"], b"Bg\nC~\n")
    recs = records(out)
    assert recs[0]["cut"] == [1] and recs[0]["components"] == 2
    assert recs[1]["cut"] is None


def test_stats():
    code, out, _ = run_command(["stats", "--n", "5", "--connected"])
    [rec] = records(out)
    assert code == 0 and rec["count"] == 21 and sum(rec["by_edges"].values()) == 21


def test_exit_codes():
    assert EXIT_CODES == {"ok": 0, "input-error": 1, "hypothesis-violation": 2, "counterexamples-found": 3}
    # input-error
    for argv, stdin in ([["frobnicate"], b""], [["verify-proof"], b"C\x01\n"],
                        [["check", "--property", "bogus"], b"C~\n"],
                        [["construct", "prism", "2"], b""],
                        [["search", "--harness", "chen-yu", "--n", "3"], b""]):
        code, out, err = run_command(argv, stdin)
        assert code == 1 and err.startswith(b"error:"), argv
    # hypothesis-violation: the prism's neighborhoods are acyclic
    _, g6, _ = run_command(["construct", "prism", "3"])
    code, out, err = run_command(["verify-proof"], g6)
    assert code == 2 and records(out)[0]["violation"] == "some neighborhood is acyclic"
    assert b"hypothesis-violation" in err
    # counterexamples-found: K4 is below 15n/8
    code, out, err = run_command(["search", "--harness", "extremal", "--n", "4"])
    assert code == 3 and records(out)[0]["counterexamples"][0]["graph6"] == "C~"


def test_stdout_only_records_on_error():
    code, out, err = run_command(["verify-proof"], b"C~\nC\x01\n")
    assert code == 1
    assert len(records(out)) == 1 and b"line 2" in err


def test_console_script_runs():
    proc = subprocess.run([sys.executable, "-m", "nbhdcycles.cli", "construct", "octahedron"],
                          capture_output=True, check=True)
    assert parse_graph6(proc.stdout.strip()).m == 12
