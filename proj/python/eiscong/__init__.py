"""Python access to the eiscong exact-arithmetic core.

Functions that produce reports return plain dicts decoded from the library's
JSON serialization; cyclotomic values keep the {"order", "coeffs"} shape with
rationals as "num/den" strings.
"""

import json
from fractions import Fraction

from . import _eiscong
from ._eiscong import (
    DirichletCharacter,
    InconclusiveScan,
    PrecisionExhausted,
    Unsupported,
    kronecker_character,
    sturm_bound,
    teichmuller_character,
)

__all__ = [
    "DirichletCharacter",
    "InconclusiveScan",
    "PrecisionExhausted",
    "Unsupported",
    "bernoulli",
    "check_cm",
    "check_hypotheses",
    "classgroup",
    "cm_forms",
    "congruence_depth",
    "kronecker_character",
    "kubota_leopoldt",
    "l_value",
    "lambda_specialize",
    "rational_coeffs",
    "search",
    "sturm_bound",
    "teichmuller_character",
    "weight_one_constant",
]


def _char(chi):
    return chi if isinstance(chi, DirichletCharacter) else DirichletCharacter(chi)


def rational_coeffs(value):
    """Coefficients of a serialized cyclotomic value as Fractions."""
    return [Fraction(c) for c in value["coeffs"]]


def bernoulli(k):
    return Fraction(_eiscong.bernoulli(k))


def l_value(chi, k=1, p=None):
    return json.loads(_eiscong.l_value(_char(chi), k, p))


def kubota_leopoldt(s, theta, p):
    return json.loads(_eiscong.kubota_leopoldt(s, _char(theta), p))


def classgroup(d):
    return json.loads(_eiscong.classgroup(d))


def cm_forms(d, order, bound=0):
    return json.loads(_eiscong.cm_forms(d, order, bound))


def congruence_depth(d, p, sigma=None, floors_only=False):
    return json.loads(_eiscong.congruence_depth(d, p, None if sigma is None else set(sigma), floors_only))


def lambda_specialize(chi, p, k, ell, M=20):
    return json.loads(_eiscong.lambda_specialize(_char(chi), p, k, ell, M))


def weight_one_constant(chi, p):
    return json.loads(_eiscong.weight_one_constant(_char(chi), p))


def check_hypotheses(chi, p, sigma, prime_choice=-1):
    return json.loads(_eiscong.check_hypotheses(_char(chi), p, set(sigma), prime_choice))


def check_cm(d, p, sigma=None):
    return json.loads(_eiscong.check_cm(d, p, None if sigma is None else set(sigma)))


def search(order, p, conductor_min, conductor_max):
    return json.loads(_eiscong.search(order, p, conductor_min, conductor_max))
