"""p-adic L-functions, Iwasawa algebra and Eisenstein families."""

import json
from fractions import Fraction

from . import _core
from ._core import PeisError

__all__ = [
    "PeisError",
    "bernoulli",
    "zeta_one_minus",
    "generalized_bernoulli",
    "teichmuller",
    "padic_log",
    "digits",
    "lp_interpolation",
    "lp_measure",
    "zeta_star",
    "kummer_check",
    "regularity",
    "weierstrass",
    "classical_G",
    "padic_G_star",
    "verify",
]


def _fraction(text):
    return Fraction(text)


def bernoulli(n):
    return _fraction(_core.bernoulli(n))


def zeta_one_minus(k):
    return _fraction(_core.zeta_one_minus(k))


def generalized_bernoulli(n, p, j=None):
    """B_{n, w^j} as {"order", "coefficients"} in Q(zeta_order); j=None is trivial."""
    return json.loads(_core.generalized_bernoulli(n, p, j))


def teichmuller(a, p, precision):
    return int(_core.teichmuller(a, p, precision))


def padic_log(x, p, precision):
    return json.loads(_core.padic_log(x, p, precision))


def digits(x, p, precision):
    return _core.digits(str(Fraction(x)), p, precision)


def lp_interpolation(n, j, p, precision=20):
    return json.loads(_core.lp_interpolation(n, j, p, precision))


def lp_measure(s, j, p, precision=20, level=8):
    return json.loads(_core.lp_measure(s, j, p, precision, level))


def zeta_star(s, u, p, precision=20):
    return json.loads(_core.zeta_star(s, u, p, precision))


def kummer_check(p, d, k, k2):
    return json.loads(_core.kummer_check(p, d, k, k2))


def regularity(p):
    return json.loads(_core.regularity(p))


def weierstrass(coeffs, p, precision=20, truncation=12):
    return json.loads(_core.weierstrass(list(coeffs), p, precision, truncation))


def classical_G(k, terms=50):
    out = json.loads(_core.classical_G(k, terms))
    return [_fraction(c) for c in out["coeffs"]]


def padic_G_star(s, u, p, terms=50, precision=20):
    return json.loads(_core.padic_G_star(s, u, p, terms, precision))


def verify(suite, p=None):
    return json.loads(_core.verify(suite, p))
