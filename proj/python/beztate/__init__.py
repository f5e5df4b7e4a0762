"""Exact Bezoutians, Tate resolution windows of Veronese push-forwards, and
Koszul dualities.

Polynomials, matrices and reports use the same JSON shapes as the command
line tool; here they are plain dicts and lists.  Every exact number is a
decimal string.  ``field`` is ``"q"`` or ``"p:MODULUS"`` (default GF(32003)).
"""

import json

from . import _core

InvalidInput = _core.InvalidInput

DEFAULT_FIELD = "p:32003"


def _dump(obj):
    return json.dumps(obj)


def monomial(exponents, coeff="1"):
    """A single-term polynomial dict."""
    return {"n": len(exponents) - 1, "terms": [{"exp": list(exponents), "coeff": str(coeff)}]}


def bezoutian(forms, field=DEFAULT_FIELD):
    return json.loads(_core.bezoutian(_dump(forms), field))


def bezout_slice(forms, a, field=DEFAULT_FIELD):
    return json.loads(_core.bezout_slice(_dump(forms), a, field))


def tate_window(n, d, ell, p_min, p_max, t_min, t_max, field=DEFAULT_FIELD, subspace=None):
    sub = None if subspace is None else _dump(subspace)
    return json.loads(_core.tate_window(n, d, ell, p_min, p_max, t_min, t_max, field, sub))


def verify(window, check):
    """check is one of complex, exactness, generators, cone."""
    return json.loads(_core.verify(_dump(window), check))


def syzygy_space(forms, b, field=DEFAULT_FIELD):
    return json.loads(_core.syzygy_space(_dump(forms), b, field))


def bezout_syzygies(forms, b, field=DEFAULT_FIELD):
    return json.loads(_core.bezout_syzygies(_dump(forms), b, field))


def apolarity_matrix(forms, a, field=DEFAULT_FIELD):
    return json.loads(_core.apolarity_matrix(_dump(forms), a, field))


def apolarity_check(forms, a=None, field=DEFAULT_FIELD):
    return json.loads(_core.apolarity_check(_dump(forms), a, field))


def homology_dim(forms, i, b, field=DEFAULT_FIELD):
    return _core.homology_dim(_dump(forms), i, b, field)


def rank(matrix, field=DEFAULT_FIELD):
    return _core.rank(_dump(matrix), field)


def kernel_basis(matrix, field=DEFAULT_FIELD):
    return _core.kernel_basis(_dump(matrix), field)


def selftest():
    return json.loads(_core.selftest())


def run_cli(args):
    """Runs the command line tool in-process: (exit code, stdout, stderr)."""
    return _core.run_cli(list(args))


__all__ = [
    "InvalidInput",
    "monomial",
    "bezoutian",
    "bezout_slice",
    "tate_window",
    "verify",
    "syzygy_space",
    "bezout_syzygies",
    "apolarity_matrix",
    "apolarity_check",
    "homology_dim",
    "rank",
    "kernel_basis",
    "selftest",
    "run_cli",
]
