"""Hardy membership predicates, inner-outer factorization, conjugate-Smirnov
test, and the kernel-membership bridge."""

import numpy as np
import pytest

from conftest import assert_rf_close, random_h2_rational

from toepkern.blaschke import BlaschkeProduct
from toepkern.errors import NotInHardySpace
from toepkern.expr import parse_symbol
from toepkern.hardy import (
    in_conjugate_smirnov,
    in_kernel,
    inner_outer,
    is_in_H2minus,
    is_in_H2plus,
    is_outer,
)
from toepkern.ratfun import boundary_conjugate, classify, project_plus, rational


def test_h2plus_examples():
    assert is_in_H2plus(parse_symbol("1/(1-0.5*z)"))
    assert not is_in_H2plus(parse_symbol("1/z"))
    assert is_in_H2plus(parse_symbol("(1+z)/(z-3)"))


def test_h2minus_examples():
    assert is_in_H2minus(parse_symbol("1/z"))
    assert not is_in_H2minus(parse_symbol("1"))
    # both conditions hold here: poles {0, 0} inside and num degree 1 < 2
    assert is_in_H2minus(parse_symbol("(z-3)/z^2"))


def test_h2_spaces_disjoint_for_nonzero():
    rng = np.random.default_rng(41)
    for _ in range(20):
        f = random_h2_rational(rng)
        if f.is_zero:
            continue
        assert not (is_in_H2plus(f) and is_in_H2minus(f))


def test_h2minus_iff_projection_vanishes():
    rng = np.random.default_rng(43)
    for _ in range(15):
        f = random_h2_rational(rng) + rational([1.0], [0.0, 1.0])  # add 1/z
        plus = project_plus(f)
        minus = f - plus
        assert is_in_H2minus(minus)
        assert plus.is_zero or not is_in_H2minus(plus)


def test_inner_outer_examples():
    io = inner_outer(parse_symbol("z*(z-2)"))
    assert np.allclose(io.inner.zeros, [0.0])
    assert_rf_close(io.outer, parse_symbol("z-2"), 1e-12)

    io2 = inner_outer(parse_symbol("(z-0.5)*(z+3)"))
    assert np.allclose(io2.inner.zeros, [0.5])
    assert_rf_close(io2.outer, parse_symbol("(1-0.5*z)*(z+3)"), 1e-10)

    io3 = inner_outer(parse_symbol("1+z"))
    assert io3.inner.degree == 0
    assert_rf_close(io3.outer, parse_symbol("1+z"), 1e-12)


def test_inner_outer_reconstructs():
    rng = np.random.default_rng(47)
    for _ in range(15):
        f = random_h2_rational(rng)
        if f.is_zero or not is_in_H2plus(f):
            continue
        io = inner_outer(f)
        assert is_outer(io.outer)
        assert not classify(io.outer).zeros.inside
        assert_rf_close(io.inner.to_rational() * io.outer, f, 1e-9)


def test_inner_outer_rejects_poles_inside():
    with pytest.raises(NotInHardySpace):
        inner_outer(parse_symbol("1/z"))


def test_conjugate_smirnov_examples():
    assert in_conjugate_smirnov(parse_symbol("1/z"))
    assert not in_conjugate_smirnov(parse_symbol("z"))
    # conjugate of an inner function lies in the class
    assert in_conjugate_smirnov(parse_symbol("(1-0.5*z)/(z-0.5)"))


def test_kernel_bridge_monomial():
    sym = parse_symbol("1/z^2")
    assert in_kernel(parse_symbol("1"), sym)
    assert in_kernel(parse_symbol("z"), sym)
    assert in_kernel(parse_symbol("1+2*z"), sym)
    assert not in_kernel(parse_symbol("z^2"), sym)
    assert not in_kernel(parse_symbol("1/(z-0.5)"), sym)


def test_kernel_bridge_model_space():
    th = BlaschkeProduct(1.0, (0.0, 0.5))
    sym = boundary_conjugate(th.to_rational())
    # K_theta = span{1, z} / (1 - 0.5 z): check a couple of elements
    assert in_kernel(parse_symbol("1/(1-0.5*z)"), sym)
    assert in_kernel(parse_symbol("z/(1-0.5*z)"), sym)
    assert not in_kernel(parse_symbol("z^2/(1-0.5*z)"), sym)
