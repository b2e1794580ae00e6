"""Finite rings given by Cayley tables.

Rings are built from the expression language used by the ``deltaring`` CLI
(``"M(2,Z2)"``, ``"Prod(Z2,GF(4))"``, ...). Reports are plain dicts with the
same layout as the CLI's ``--json`` output.
"""

import json

from ._deltaring import (
    AxiomViolation,
    BadArity,
    BindingError,
    HomViolation,
    IndexOutOfRange,
    InternalInconsistency,
    InvalidBimodule,
    InvalidEndomorphism,
    InvalidGroup,
    InvalidTables,
    NotAnIdeal,
    NotCentral,
    NotIdempotent,
    OrderGuardExceeded,
    Ring,
    RingError,
    SyntaxError,
    UnknownCheckId,
    UnknownClass,
    UnknownName,
    UnsupportedField,
    build,
    canonical,
    catalog,
    check_ids,
    from_tables,
    load,
    order_guard,
    set_order_guard,
)
from . import _deltaring as _ext

__all__ = [name for name in dir() if not name.startswith("_")] + [
    "info",
    "check",
    "verify",
    "search",
    "classes",
]


def info(ring):
    """Element sets (U, Id, Nil, J, Delta, Nil*, QN) and every class verdict."""
    return json.loads(_ext._info(ring))


def check(cls, ring):
    """Verdict of one class on one ring, with a witness when it fails."""
    return json.loads(_ext._check(cls, ring))


def verify(ids=(), max_order=1024, threads=1):
    """Run theorem checks over the catalog. No ids means all of them."""
    if isinstance(ids, str):
        ids = [ids]
    return json.loads(_ext._verify(list(ids), max_order, threads))


def search(include=(), exclude=(), max_order=1024, extended=False):
    """Catalog rings in every ``include`` class and in no ``exclude`` class."""
    return json.loads(_ext._search(list(include), list(exclude), max_order, extended))["rings"]


def classes():
    return {c["name"]: c["definition"] for c in json.loads(_ext._classes())["classes"]}
