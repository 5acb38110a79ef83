import json
import os
import subprocess

import pytest

import bigfree as bf


def test_word_operations():
    w = bf.Word("a1 a2")
    assert str(bf.reduce(bf.Word("a1 a1^-1 a2"))) == "a2"
    assert str(w * bf.Word("a2^-1 a1")) == "a1 a1"
    assert str(bf.inverse(bf.Word("a1 a2^-1"))) == "a2 a1^-1"
    assert str(bf.length(bf.Word("a1 a2 a1^-1"))) == "[2,1]"
    assert str(bf.word_dist(w, bf.Word("a1 a3"))) == "[0,1,1]"
    assert str(bf.gromov(w, bf.Word("a1 a3"))) == "[1]"
    assert [str(v) for v in bf.subwords(bf.Word("a2 a1"))] == ["", "a2", "a2 a1"]
    assert bf.verify_cancellation(bf.Word("a1 a2 a1^-1 a2^-1"), "1-3,2-4") == "noncrossing"
    assert bf.verify_cancellation(bf.Word("a1 a1^-1"), "1-2") is None


def test_vectors_order_lexicographically():
    assert bf.LexVector("[1,-1]") < bf.LexVector("[1]")
    assert bf.LexVector("[0,2]") < bf.LexVector("[1,-5]")
    assert str(bf.half_exact(bf.LexVector("[2,-4]"))) == "[1,-2]"
    with pytest.raises(ArithmeticError):
        bf.half_exact(bf.LexVector("[1]"))


def test_tree_and_triples():
    p = bf.TreePoint("[1] @ a2 a1")
    assert bf.to_triple(p) == "(a2 ; a1^1 ; [1,-1])"
    assert bf.from_triple("(a2 ; a1 ; [1,-1])") == p
    assert str(bf.tree_dist(bf.TreePoint("[1,1] @ a1 a2"), bf.TreePoint("[1,0,1] @ a1 a3"))) == "[0,1,1]"
    exact, simplified = bf.triple_dist("( ; a1 ; [0,1])", "(a1 ; a2 ; [0,0,1])")
    assert (str(exact), str(simplified)) == ("[1,-1,1]", "[1,1,1]")
    assert bf.project("( ; a1^-1 ; [0,1])") == "C(a1) @ [1,-1]"
    u = bf.orbit_witness("(a2 ; a1 ; [0,1])", "(a3 ; a1^-1 ; [1,-1])")
    assert bf.act_triple(u, "(a2 ; a1 ; [0,1])") == "(a3 ; a1^-1 ; [1,-1])"
    assert bf.omega_plus_one_edges(5) == [f"a{k}" for k in range(1, 6)]


def test_cayley_and_topology():
    assert bf.cayley_dist("( ; a1 ; 1/2)", "") == "[1/2]"
    assert bf.cayley_act(bf.Word("a1"), "( ; a1^-1 ; 1/3)") == "( ; a1^1 ; 2/3)"
    coincidences = bf.embed_coincidences(bf.Word(), 1)
    assert [(t, str(s)) for t, s in coincidences] == [("0", "[]"), ("1", "[1]")]
    graph = json.loads(bf.ball_json(bf.Word(), 2, 3))
    assert len(graph["vertices"]) == 37 and len(graph["edges"]) == 36
    assert bf.in_letter_ball(bf.Word("a1"), 3, bf.Word("a1 a5"))
    assert not bf.in_metric_ball(bf.Word(), bf.LexVector("[0,1]"), bf.Word("a2"))


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        bf.Word("a1^0")
    with pytest.raises(ValueError):
        bf.common_prefix(bf.Word("a1 a1^-1"), bf.Word("a1"))
    with pytest.raises(ValueError):
        bf.LexVector("[1]") == bf.LexVector("[1]", bf.Alphabet.omega_plus_one)


def test_suite_check_runs():
    passed, cases, _ = bf.run_check("C8", samples=10)
    assert passed and cases > 0


@pytest.mark.skipif("BIGFREE_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_round_trip():
    cli = os.environ["BIGFREE_CLI"]
    out = subprocess.run([cli, "dist", "a1 a2", "a1 a3"], capture_output=True, text=True, check=True)
    assert out.stdout == "[0,1,1]\n"
    bad = subprocess.run([cli, "reduce", "a1^0"], capture_output=True, text=True)
    assert bad.returncode == 2
