import itertools
import json

import pytest
from hypothesis import given, strategies as st

from conftest import words
from oracles import count_index_one

from earring import (
    EMPTY,
    MonotonicityError,
    ReductionTrace,
    Word,
    build_counterexample_word,
    collapse_above,
    erase_above,
    inflate,
    min_oscillation_in_class,
    oscillation_number,
    reduce,
    verify_reduction_monotone,
)
from earring.oscillation import cancel_at, cancellable_positions

f = build_counterexample_word


def test_oscillation_examples():
    assert oscillation_number(f(2)) == 4
    assert oscillation_number(EMPTY) == 0
    assert oscillation_number(Word([-1, 2, 1, -2])) == count_index_one([-1, 2, 1, -2]) == 2


def test_min_oscillation_examples():
    for n in range(2, 51):
        assert min_oscillation_in_class(f(n)) == 2 * n
    assert min_oscillation_in_class(Word([1, -1])) == 0
    for seed in range(30):
        assert min_oscillation_in_class(inflate(f(2), 20, seed)) == 4


@given(words, st.integers(1, 8))
def test_retraction_keeps_oscillation(w, k):
    assert oscillation_number(collapse_above(w, k)) == oscillation_number(w)


@given(words, st.integers(1, 8))
def test_erasure_never_adds_oscillation(w, k):
    assert oscillation_number(erase_above(w, k)) <= oscillation_number(w)


def test_erasure_with_reduction_can_drop_oscillation():
    # reducing after the collapse cancels y1^-1 y1, so the reduced retraction
    # sits strictly below the loop itself
    assert oscillation_number(f(3)) == 6
    assert oscillation_number(collapse_above(f(3), 2)) == 6
    assert oscillation_number(erase_above(f(3), 2)) == 0


@given(words)
def test_single_cancellation_delta(w):
    m = oscillation_number(w)
    for i in cancellable_positions(w.codes):
        delta = oscillation_number(Word(cancel_at(w.codes, i))) - m
        assert delta == (-2 if abs(w.codes[i]) == 1 else 0)


@given(words, st.integers(0, 12), st.integers(0, 1000))
def test_class_lower_bound(w, steps, seed):
    assert oscillation_number(inflate(w, steps, seed)) >= min_oscillation_in_class(w)


def test_class_lower_bound_exhaustive_small():
    best = {}
    alphabet = (1, -1, 2, -2)
    for n in range(7):
        for cs in itertools.product(alphabet, repeat=n):
            key = reduce(Word(cs)).codes
            best[key] = min(best.get(key, n + 1), count_index_one(cs))
    for key, m in best.items():
        assert m == min_oscillation_in_class(Word(key))


def test_trace_of_inflated_witness():
    w = inflate(f(2), 10, 3)
    trace = verify_reduction_monotone(w, 3)
    assert len(trace.steps) == 11
    assert trace.words[0] == w and trace.words[-1] == f(2)
    assert trace.counts[0] >= 4 and trace.counts[-1] == 4
    assert trace.is_monotone()


def test_trace_of_reduced_word():
    trace = verify_reduction_monotone(f(3), 0)
    assert trace.steps == ((f(3), 6),)


def test_trace_json():
    trace = verify_reduction_monotone(Word([1, -1, 2]), 0)
    assert json.loads(trace.to_json()) == {
        "steps": [{"word": "1 -1 2", "oscillation": 2}, {"word": "2", "oscillation": 0}]
    }


def test_all_traces_monotone_up_to_length_6():
    def traces(cs, counts):
        pos = cancellable_positions(cs)
        if not pos:
            yield counts
        for i in pos:
            nxt = cancel_at(cs, i)
            yield from traces(nxt, counts + [count_index_one(nxt)])

    n_traces = 0
    for n in range(7):
        for cs in itertools.product((1, -1, 2, -2), repeat=n):
            for counts in traces(cs, [count_index_one(cs)]):
                n_traces += 1
                assert all(a >= b for a, b in zip(counts, counts[1:]))
    assert n_traces > 5461  # at least one trace per word


def test_monotonicity_error_carries_trace():
    bad = ReductionTrace(((Word([2]), 0), (Word([1]), 1)))
    err = MonotonicityError(bad)
    assert err.trace is bad
    assert not bad.is_monotone()
    with pytest.raises(AssertionError):
        raise err
