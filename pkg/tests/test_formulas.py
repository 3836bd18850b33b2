from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from planewiener.errors import OrderOutOfDomain, SecondUndefined
from planewiener.formulas import (
    GraphClass,
    LayerVariant,
    NonSimpleClass,
    conjectured_wiener,
    layer_functional,
    optimal_layer_sequence,
    remoteness_bound,
    sigma_bound_general,
    wiener_path_bound,
)


def test_path_bound_values():
    assert wiener_path_bound(4) == 10
    assert wiener_path_bound(3) == 4
    assert wiener_path_bound(10) == 165


def test_conjectured_wiener_spot_values():
    assert conjectured_wiener(GraphClass.TRI_3, 15) == 225
    assert conjectured_wiener(GraphClass.TRI_4, 14) == 166
    assert conjectured_wiener(GraphClass.TRI_5, 28) == 955
    assert conjectured_wiener(GraphClass.QUAD_2, 13) == 194
    assert conjectured_wiener(GraphClass.QUAD_3, 16) == 288
    assert conjectured_wiener(NonSimpleClass.TRI_NONSIMPLE, 16) == 351
    assert conjectured_wiener(NonSimpleClass.QUAD_NONSIMPLE, 14) == 273


def test_conjectured_wiener_domain():
    with pytest.raises(OrderOutOfDomain):
        conjectured_wiener(GraphClass.TRI_5, 11)


def test_sigma_bound_values():
    assert sigma_bound_general(12, 3) == 26
    assert sigma_bound_general(13, 4) == 24
    for n in range(3, 40):
        assert sigma_bound_general(n, n - 1) == n - 1


def test_remoteness_bound_values():
    assert remoteness_bound(GraphClass.TRI_5, 18) == Fraction(37, 17)
    assert remoteness_bound(GraphClass.QUAD_3, 15) == Fraction(19, 7)
    assert remoteness_bound(GraphClass.QUAD_2, 12) == Fraction(36, 11)


def test_remoteness_bound_integrality_and_transmission_agreement():
    for n in range(6, 501):
        for cls in GraphClass:
            try:
                bound = remoteness_bound(cls, n)
            except OrderOutOfDomain:
                continue
            value = bound * (n - 1)
            assert value.denominator == 1
            if cls in (GraphClass.TRI_3, GraphClass.TRI_4):
                assert value == sigma_bound_general(n, cls.kappa)


def test_conjectured_wiener_is_integral_everywhere():
    # the per-residue clearing of denominators must be exact
    for cls, lo in ((GraphClass.TRI_3, 4), (GraphClass.TRI_4, 6),
                    (GraphClass.TRI_5, 12), (GraphClass.QUAD_2, 4),
                    (GraphClass.QUAD_3, 8)):
        for n in range(lo, 300):
            assert isinstance(conjectured_wiener(cls, n), int)


def test_layer_functional():
    assert layer_functional((1, 5, 5, 1)) == 18
    assert layer_functional((1,)) == 0
    assert layer_functional((1, 3, 3, 1)) == 12


def test_optimal_layer_sequences():
    assert optimal_layer_sequence(28, 5, LayerVariant.MAX) == (1, 5, 5, 5, 5, 5, 2)
    assert layer_functional(optimal_layer_sequence(28, 5, LayerVariant.MAX)) == 87
    assert optimal_layer_sequence(28, 5, LayerVariant.SECOND) == (1, 5, 5, 5, 5, 6, 1)
    assert layer_functional(optimal_layer_sequence(28, 5, LayerVariant.SECOND)) == 86
    assert optimal_layer_sequence(12, 5, LayerVariant.MAX) == (1, 5, 5, 1)


def test_second_undefined():
    # n - 1 == 11 == 5*2 + 1 leaves a unit tail
    with pytest.raises(SecondUndefined):
        optimal_layer_sequence(12, 5, LayerVariant.SECOND)


def _all_sequences(n, delta):
    out = []

    def rec(prefix, rest):
        if rest >= 1:
            out.append(tuple(prefix + [rest]))
        for x in range(delta, rest):
            rec(prefix + [x], rest - x)

    rec([1], n - 1)
    return out


@pytest.mark.parametrize("delta", [3, 5])
def test_layer_optimizer_matches_exhaustive_search(delta):
    for n in range(delta + 2, 26):
        seqs = _all_sequences(n, delta)
        by_value = sorted(seqs, key=layer_functional, reverse=True)
        best = by_value[0]
        assert optimal_layer_sequence(n, delta, LayerVariant.MAX) == best
        values = sorted({layer_functional(s) for s in seqs}, reverse=True)
        try:
            second = optimal_layer_sequence(n, delta, LayerVariant.SECOND)
        except SecondUndefined:
            continue
        attaining = [s for s in seqs if layer_functional(s) == values[1]]
        assert attaining == [second]


@given(st.integers(min_value=8, max_value=120), st.sampled_from([3, 4, 5]))
def test_layer_sequence_constraints(n, delta):
    seq = optimal_layer_sequence(n, delta, LayerVariant.MAX)
    assert seq[0] == 1 and sum(seq) == n
    assert all(x >= delta for x in seq[1:-1]) and seq[-1] >= 1
