import importlib
import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from yangslice import _kernels_py
from yangslice._kernels_py import BITS
from yangslice.rational import Rat

compiled = pytest.importorskip("yangslice._kernels", reason="compiled kernels not built")

SLOTS = 3
RAD = 2 << (BITS * SLOTS)

keys = st.builds(lambda es, r: sum(e << (BITS * k) for k, e in enumerate(es)) + (r << (BITS * SLOTS)),
                 st.lists(st.integers(0, 4), min_size=SLOTS, max_size=SLOTS), st.integers(0, 1))
coeffs = st.builds(Rat, st.integers(-9, 9), st.integers(1, 9))
polys = st.dictionaries(keys, coeffs, max_size=8)


@settings(max_examples=150, deadline=None)
@given(polys, polys)
def test_products_agree(a, b):
    slots = ((RAD, Rat(3)),)
    assert compiled.poly_mul(a, b, RAD, slots) == _kernels_py.poly_mul(a, b, RAD, slots)


@settings(max_examples=150, deadline=None)
@given(polys, st.lists(st.integers(-3, 3), min_size=SLOTS, max_size=SLOTS))
def test_shifts_agree(a, cs):
    shifts = tuple((BITS * k, Rat(c, 2)) for k, c in enumerate(cs))
    assert compiled.poly_shift(a, shifts) == _kernels_py.poly_shift(a, shifts)


def test_shift_in_high_slot():
    # slot offsets past 32 bits once tripped a C-int shift
    a = {3 << (2 * BITS): Rat(1)}
    shifts = ((2 * BITS, Rat(1)),)
    assert compiled.poly_shift(a, shifts) == _kernels_py.poly_shift(a, shifts)


def test_radical_fold():
    a = {1 << (BITS * SLOTS): Rat(1)}
    assert _kernels_py.poly_mul(a, a, RAD, ((RAD, Rat(5)),)) == {0: Rat(5)}


def test_pure_fallback_selected_by_environment():
    code = "from yangslice import kernels; print(kernels.COMPILED)"
    env = dict(os.environ, YANGSLICE_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False"


def test_compiled_backend_is_default():
    kernels = importlib.import_module("yangslice.kernels")
    if os.environ.get("YANGSLICE_PURE") != "1":
        assert kernels.COMPILED
