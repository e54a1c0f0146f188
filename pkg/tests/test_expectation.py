from fractions import Fraction

import pytest

from mstlength.errors import DisconnectedGraphError, InexactDivisionError
from mstlength.exactpoly import IntPolynomial, binomial
from mstlength.expectation import (
    ZETA3,
    expected_mst_length,
    factor_out_unity_root,
    kn_coefficient,
    kn_table,
)
from mstlength.graphs import (
    Graph,
    bipartite_graph,
    complete_graph,
    cycle_graph,
    path_graph,
)

from .oracles import mst_expectation_by_rank_enumeration

# Ground truth from the rank-ordering oracle (scripts/small_graph_oracle.py).
ORACLE_VALUES = {
    "K_2": Fraction(1, 2),
    "K_3": Fraction(3, 4),
    "K_4": Fraction(31, 35),
    "K_{3,2}": Fraction(51, 35),
    "C_4": Fraction(6, 5),
    "C_5": Fraction(5, 3),
    "C_6": Fraction(15, 7),
}


def test_k32_headline_value():
    result = expected_mst_length(bipartite_graph(3, 2))
    assert result.expectation == Fraction(51, 35)
    assert result.polynomial == IntPolynomial([4, -6, 0, 0, 3, 0, -1])


@pytest.mark.parametrize(
    "graph, key",
    [
        (complete_graph(2), "K_2"),
        (complete_graph(3), "K_3"),
        (complete_graph(4), "K_4"),
        (bipartite_graph(3, 2), "K_{3,2}"),
        (cycle_graph(4), "C_4"),
        (cycle_graph(5), "C_5"),
        (cycle_graph(6), "C_6"),
    ],
)
def test_against_frozen_oracle_values(graph, key):
    assert expected_mst_length(graph).expectation == ORACLE_VALUES[key]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_oracle_helper_reproduces_frozen_values(n):
    key = f"K_{n}"
    assert mst_expectation_by_rank_enumeration(complete_graph(n)) == ORACLE_VALUES[key]


def test_tree_law():
    for n in range(2, 11):
        assert expected_mst_length(path_graph(n)).expectation == Fraction(n - 1, 2)
    star = Graph(6, tuple((0, i) for i in range(1, 6)))
    assert expected_mst_length(star).expectation == Fraction(5, 2)


def test_expectation_bounds():
    for g in (complete_graph(5), cycle_graph(8), bipartite_graph(4, 3)):
        value = expected_mst_length(g).expectation
        assert 0 < value < g.n - 1


def test_disconnected_rejected():
    with pytest.raises(DisconnectedGraphError):
        expected_mst_length(Graph(4, ((0, 1), (2, 3))))


def test_single_vertex_graph():
    assert expected_mst_length(Graph(1)).expectation == 0


def test_json_schema():
    payload = expected_mst_length(bipartite_graph(3, 2)).to_json_dict(digits=7)
    assert payload["p"] == [4, -6, 0, 0, 3, 0, -1]
    assert payload["a"]["direct"] == [5, -6, 0, 0, 3, 0, -1]
    assert set(payload["a"]) == {"direct", "eq2", "rank", "structural"}
    assert payload["expectation"] == {"num": "51", "den": "35", "decimal": "1.4571429"}


def test_kn_coefficient_closed_forms():
    assert kn_coefficient(5, 1) == -10
    assert kn_coefficient(4, 6) == 2
    for n in range(2, 9):
        assert kn_coefficient(n, 2) == 0
        assert kn_coefficient(n, 0) == n
    with pytest.raises(ValueError):
        kn_coefficient(5, 7)


@pytest.mark.parametrize("n", range(2, 8))
def test_kn_coefficients_match_enumeration(n):
    result = expected_mst_length(complete_graph(n))
    for i in range(7):
        enumerated = result.routes["eq2"].a[i] if i <= result.m else 0
        assert kn_coefficient(n, i) == enumerated


@pytest.mark.parametrize("n", range(2, 8))
def test_factorization(n):
    result = expected_mst_length(complete_graph(n))
    quotient = factor_out_unity_root(result.polynomial, n)
    assert quotient.degree <= binomial(n - 1, 2)
    assert quotient * IntPolynomial((1, -1)) ** (n - 1) == result.polynomial


def test_factorization_examples():
    assert factor_out_unity_root(IntPolynomial([1, -1]), 2) == IntPolynomial([1])
    assert factor_out_unity_root(IntPolynomial([2, -3, 0, 1]), 3) == IntPolynomial([2, 1])


def test_factorization_rejects_non_multiples():
    with pytest.raises(InexactDivisionError):
        factor_out_unity_root(IntPolynomial([1, 0, 1]), 3)


def test_kn_table_small():
    rows = kn_table(4)
    assert [row.expectation for row in rows] == [
        Fraction(1, 2),
        Fraction(3, 4),
        Fraction(31, 35),
    ]
    assert rows[0].delta is None and rows[0].increasing is None
    assert rows[1].delta == Fraction(1, 4) and rows[1].increasing
    assert rows[2].second_difference == Fraction(31, 35) - 2 * Fraction(3, 4) + Fraction(1, 2)
    assert rows[2].concave


def test_kn_table_stays_below_zeta3():
    for row in kn_table(7):
        assert row.expectation < ZETA3


def test_kn_table_json_row():
    row = kn_table(3)[-1].to_json_dict(digits=4)
    assert row == {
        "n": 3,
        "num": "3",
        "den": "4",
        "decimal": "0.7500",
        "delta": "1/4",
        "second_difference": None,
        "increasing": True,
        "concave": None,
    }
