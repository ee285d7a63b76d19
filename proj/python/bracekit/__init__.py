"""Braces, skew braces and set-theoretic Yang-Baxter solutions on finite groups."""

from ._core import (
    Brace,
    BracekitError,
    Group,
    InputError,
    PreconditionError,
    VerificationError,
    brace_from_dict,
    build,
    check_ybe,
    decompose,
    resolve,
    run,
    search,
    solution,
)

__all__ = [
    "Brace",
    "BracekitError",
    "Group",
    "InputError",
    "PreconditionError",
    "VerificationError",
    "brace_from_dict",
    "build",
    "check_ybe",
    "decompose",
    "resolve",
    "run",
    "search",
    "solution",
]
