"""Dyck factors of automatic sequences."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    AlphabetError,
    CapExceeded,
    DomainError,
    ParseError,
    critical_exponent,
    dyck_factors,
    exponent,
    is_dyck,
    is_power_free,
    nesting,
    period,
    q,
    sequence_names,
    sequence_prefix,
)

__all__ = [
    "AlphabetError",
    "CapExceeded",
    "DomainError",
    "ParseError",
    "census",
    "check_identity",
    "critical_exponent",
    "dyck_factors",
    "enumerate_power_free",
    "exponent",
    "family",
    "is_dyck",
    "is_power_free",
    "linrep",
    "linrep_eval",
    "minimize",
    "nesting",
    "period",
    "q",
    "sequence_names",
    "sequence_prefix",
    "verification_tasks",
    "verify",
]


def census(sequence, n_max, threads=1):
    return json.loads(_core.census(sequence, n_max, threads))


def linrep(source="builtin:f"):
    """JSON dict of a representation. `source` is builtin:f|q|tm or JSON text."""
    return json.loads(_core.linrep_show(source))


def linrep_eval(n, source="builtin:f"):
    return Fraction(_core.linrep_eval(source, n))


def minimize(source):
    if isinstance(source, dict):
        source = json.dumps(source)
    return json.loads(_core.linrep_minimize(source))


def check_identity(name, numeric=False, n_max=10000):
    return json.loads(_core.check_identity(name, numeric, n_max))


def enumerate_power_free(bound, max_len, strict=False, alphabet_size=2, dyck=False):
    return _core.enumerate(str(bound), strict, max_len, alphabet_size, dyck)


def family(name, t, opt_in=False, include_word=False):
    return json.loads(_core.family(name, t, opt_in, include_word))


def verification_tasks():
    return dict(_core.verification_tasks())


def verify(task, desk_scale=False):
    return json.loads(_core.verify(task, desk_scale))
