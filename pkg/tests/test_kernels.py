"""The compiled kernels and the pure-Python fallback must agree exactly."""

import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from smashprod import _kernels_py as kp
from smashprod import kernels

try:
    from smashprod import _ckernels as kc
except ImportError:  # extension not built
    kc = None

needs_ext = pytest.mark.skipif(kc is None, reason="compiled extension not built")

margins = st.lists(st.integers(0, 3), min_size=1, max_size=4)


@needs_ext
@given(margins, margins)
def test_margin_fill_backends_agree(cols, rows):
    assert kc.margin_fill(tuple(cols), tuple(rows)) == kp.margin_fill(tuple(cols), tuple(rows))


@st.composite
def chains(draw):
    shift = 6
    n = draw(st.integers(1, 6))
    degrees = draw(st.lists(st.integers(1, 3), min_size=n, max_size=n))
    exps = draw(st.lists(st.integers(1, 40), min_size=n, max_size=n))
    keys = [(d << shift) | e for d, e in zip(degrees, exps)]
    signs = draw(st.lists(st.sampled_from([1, -1]), min_size=n, max_size=n))
    repeats = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    parts = tuple(draw(st.lists(st.integers(1, 3), min_size=1, max_size=4)))
    return keys, signs, repeats, parts, draw(st.booleans()), draw(st.integers(0, 12)), shift


@needs_ext
@given(chains())
def test_chain_sum_backends_agree(args):
    assert kc.chain_sum(*args) == kp.chain_sum(*args)


def test_chain_sum_repeated_letter():
    # one letter x of degree 1; the chain (x, x) is allowed only with repeats
    key = (1 << 4) | 1
    assert kp.chain_sum([key], [1], [True], (1, 1), False, 4, 4) == {2 * key: 1}
    assert kp.chain_sum([key], [1], [False], (1, 1), False, 4, 4) == {}
    assert kernels.chain_sum([key], [-1], [True], (1, 1), False, 4, 4) == {2 * key: 1}


def test_chain_sum_truncates():
    key = (1 << 4) | 1
    assert kernels.chain_sum([key], [1], [True], (2, 2), False, 3, 4) == {}


def test_margin_fill_rejects_mismatched_totals():
    assert kernels.margin_fill((1, 2), (2,)) == []


def test_pure_python_backend_selected_by_environment():
    env = dict(os.environ, SMASHPROD_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from smashprod import BACKEND; print(BACKEND)"], env=env, capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "python"
