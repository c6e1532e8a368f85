"""Connection expansions between parameter families."""

from fractions import Fraction

import pytest

from simplexpoly.simplex3d import (
    connect_alpha,
    connect_general,
    simplex_poly_raw,
)

F = Fraction

ZEROS = (F(0),) * 6
PARAMS_GRID = [
    ZEROS,
    (F(1, 3), F(1, 3), F(1, 3), F(1, 3), F(1, 3), F(1, 3)),
    (F(1), F(-1, 2), F(0), F(1, 3), F(1), F(0)),
    (F(2), F(0), F(1), F(-1, 2), F(1, 3), F(1)),
]
XIS = [F(1, 2), F(-1, 4), F(2), F(1, 3)]


def indices(max_n):
    return [
        (i, j, k)
        for i in range(max_n + 1)
        for j in range(max_n + 1)
        for k in range(max_n + 1)
        if i + j + k <= max_n
    ]


def test_alpha_identity_target_collapses():
    for params in PARAMS_GRID:
        for idx in indices(3):
            exp = connect_alpha(idx, params, params[0])
            assert len(exp.terms) == 1
            assert exp.terms[0].coeff == 1
            assert exp.terms[0].index == idx


def test_alpha_degree_zero_in_first_slot():
    exp = connect_alpha((0, 2, 1), PARAMS_GRID[2], F(1, 2))
    assert len(exp.terms) == 1 and exp.terms[0].coeff == 1


def test_alpha_two_term_expansion():
    exp = connect_alpha((1, 0, 0), ZEROS, F(1, 2))
    assert [t.index for t in exp.terms] == [(1, 0, 0), (0, 0, 0)]
    assert exp.verify()


@pytest.mark.parametrize("params", PARAMS_GRID)
def test_alpha_reassembles_exactly(params):
    for idx in indices(4):
        for xi in XIS:
            assert connect_alpha(idx, params, xi).verify(), (idx, xi)


def test_general_identity_target_collapses():
    for params in PARAMS_GRID:
        for idx in indices(2):
            exp = connect_general(idx, params, params[:4])
            assert len(exp.terms) == 1
            term = exp.terms[0]
            assert term.coeff == 1 and term.index == idx
            assert term.pow_1x == 0 and term.pow_1xy == 0


def test_general_origin_is_single_unit_term():
    exp = connect_general((0, 0, 0), PARAMS_GRID[2], (F(1), F(0), F(-1, 2), F(1, 3)))
    assert len(exp.terms) == 1 and exp.terms[0].coeff == 1


def test_general_second_slot_expansion():
    exp = connect_general((0, 1, 0), ZEROS, (F(0), F(1, 2), F(0), F(0)))
    ks = sorted(t.index for t in exp.terms)
    assert ks == [(0, 0, 0), (0, 1, 0)]
    assert exp.verify()
    # the lowered term carries the compensating (1-x) factor
    lowered = [t for t in exp.terms if t.index == (0, 0, 0)][0]
    assert lowered.pow_1x == 1 and lowered.pow_1xy == 0


TARGETS = [
    (F(0), F(1, 2), F(0), F(0)),
    (F(1), F(0), F(-1, 2), F(1, 3)),
    (F(1, 3), F(1), F(2), F(0)),
]


@pytest.mark.parametrize("params", PARAMS_GRID)
def test_general_reassembles_exactly(params):
    for idx in indices(3):
        for target in TARGETS:
            assert connect_general(idx, params, target).verify(), (idx, target)


def test_expansion_coefficients_are_exact_fractions():
    exp = connect_general((1, 1, 1), PARAMS_GRID[1], TARGETS[1])
    assert all(isinstance(t.coeff, F) for t in exp.terms)
    assert exp.reassemble() == simplex_poly_raw(1, 1, 1, *PARAMS_GRID[1])
