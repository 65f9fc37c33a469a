import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from binent import (
    DomainError,
    EntropyValue,
    Unit,
    binary_entropy,
    convert,
    entropy_general,
    sequence_count,
)
from oracles import mp_entropy

LN2 = math.log(2.0)
probabilities = st.floats(0.0, 1.0, allow_nan=False)


def test_binary_entropy_examples():
    assert binary_entropy(0.5) == LN2
    assert binary_entropy(0.0) == 0.0
    assert binary_entropy(1.0) == 0.0
    assert binary_entropy(0.5, "bits") == 1.0
    # mpmath at 40 digits: 0.50040242353818787953
    assert binary_entropy(0.2) == pytest.approx(0.50040242353818787953, abs=1e-15)


@pytest.mark.parametrize("p", [1e-300, 1e-12, 0.01, 0.2, 0.37, 0.5, 0.75, 1 - 1e-9])
def test_binary_entropy_matches_high_precision(p):
    assert binary_entropy(p) == pytest.approx(float(mp_entropy(p)), rel=1e-14, abs=1e-300)


@pytest.mark.parametrize("p", [-0.1, 1.0000001, math.nan, math.inf])
def test_binary_entropy_domain(p):
    with pytest.raises(DomainError):
        binary_entropy(p)


def test_binary_entropy_rejects_non_numbers():
    with pytest.raises(TypeError):
        binary_entropy("0.5")
    with pytest.raises(TypeError):
        binary_entropy(True)


@given(probabilities)
def test_symmetry(p):
    # only meaningful when 1 - p is the exact complement of p
    assume(1.0 - (1.0 - p) == p)
    assert abs(binary_entropy(p) - binary_entropy(1.0 - p)) <= 1e-15


@given(probabilities, st.sampled_from(list(Unit)))
def test_range(p, unit):
    top = LN2 if unit is Unit.NATS else 1.0
    assert 0.0 <= binary_entropy(p, unit) <= top


def test_concavity_on_grid():
    grid = [k / 100 for k in range(1, 100)]
    h = {p: binary_entropy(p) for p in grid}
    for p1 in grid:
        for p2 in grid:
            mid = binary_entropy((p1 + p2) / 2)
            assert mid >= (h[p1] + h[p2]) / 2 - 1e-12


def test_entropy_general_examples():
    assert entropy_general([0.5, 0.5]) == pytest.approx(LN2, abs=1e-16)
    assert entropy_general([1.0]) == 0.0
    assert entropy_general([0.25] * 4, "bits") == pytest.approx(2.0, abs=1e-15)
    assert entropy_general(np.array([0.0, 1.0, 0.0])) == 0.0


@given(probabilities)
def test_entropy_general_agrees_with_binary(p):
    assert abs(entropy_general([p, 1.0 - p]) - binary_entropy(p)) <= 1e-15


@given(st.lists(st.floats(0.0, 1.0), min_size=1, max_size=20).filter(lambda w: sum(w) > 0))
def test_entropy_general_bounds(weights):
    total = math.fsum(weights)
    ps = [w / total for w in weights]
    h = entropy_general(ps)
    assert 0.0 <= h <= math.log(len(ps)) + 1e-12


def test_entropy_general_renormalizes_within_tolerance():
    assert entropy_general([0.5 + 4e-10, 0.5]) == pytest.approx(LN2, abs=1e-9)


@pytest.mark.parametrize(
    "probs", [[], [0.5, 0.4], [0.6, 0.6], [1.2, -0.2], [0.5, math.nan]]
)
def test_entropy_general_domain(probs):
    with pytest.raises(DomainError):
        entropy_general(probs)


def test_sequence_count_examples():
    assert sequence_count(LN2, 10) == pytest.approx(1024.0, rel=1e-14)
    assert sequence_count(0.0, 100) == 1.0
    # exp(2 * 0.5004024235) in 40-digit arithmetic
    assert sequence_count(0.5004024235, 2) == pytest.approx(2.7204705100926099346, rel=1e-14)


def test_sequence_count_bits_input():
    assert sequence_count(1.0, 20, unit="bits") == pytest.approx(2.0**20, rel=1e-13)
    assert sequence_count(EntropyValue(1.0, "bits"), 3) == pytest.approx(8.0, rel=1e-14)


@pytest.mark.parametrize("L", range(1, 51))
def test_sequence_count_powers_of_two(L):
    assert sequence_count(binary_entropy(0.5), L) == pytest.approx(2.0**L, rel=1e-12)


def test_sequence_count_errors():
    with pytest.raises(DomainError):
        sequence_count(-0.1, 3)
    with pytest.raises(DomainError):
        sequence_count(0.1, 0)
    with pytest.raises(TypeError):
        sequence_count(0.1, 2.0)
    with pytest.raises(OverflowError):
        sequence_count(LN2, 2000)


def test_convert_examples():
    assert convert(EntropyValue(1.0, "bits"), "nats").value == 0.6931471805599453
    assert convert(EntropyValue(0.0, "nats"), "bits").value == 0.0
    same = EntropyValue(LN2, "nats")
    assert convert(same, Unit.NATS) == same
    assert same.to("bits").unit is Unit.BITS


@given(st.floats(0.0, 1e6), st.sampled_from(list(Unit)), st.sampled_from(list(Unit)))
def test_convert_round_trip(value, src, dst):
    h = EntropyValue(value, src)
    back = convert(convert(h, dst), src)
    assert back.unit is h.unit
    assert back.value == pytest.approx(h.value, rel=1e-15, abs=0.0)


def test_entropy_value_validation():
    with pytest.raises(DomainError):
        EntropyValue(-1.0)
    with pytest.raises(ValueError):
        EntropyValue(1.0, "hartleys")
    with pytest.raises(TypeError):
        convert(0.5, "bits")
