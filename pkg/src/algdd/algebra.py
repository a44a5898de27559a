"""Pluggable algebraic structures for decision-diagram terminals.

An :class:`Algebra` bundles a carrier set with named binary/unary operations
and distinguished elements.  Terminal payloads are plain Python values:
``bool`` for the Boolean carrier, ``float`` for reals and the unit interval,
and ``tuple[float, ...]`` for weight vectors.  Four ready-made algebras ship
here: Boolean logic, probabilistic fuzzy logic, real arithmetic, and the
n-dimensional weight-vector algebra with normalization.
"""

from __future__ import annotations

import numbers
import struct
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .errors import (
    ArithmeticDomainError,
    ConfigurationError,
    DimensionError,
    DomainError,
)

Vector = tuple  # tuple of floats

#: Template categories an algebra may declare.
GROUP_LIKE = "group-like"
RING_LIKE = "ring-like"
LATTICE_LOGIC = "lattice-logic"

#: Operation names a lattice/logic algebra must provide.
_LOGIC_REQUIRED_BINARY = ("and", "or")
_LOGIC_REQUIRED_UNARY = ("not",)
_LOGIC_REQUIRED_ELEMENTS = ("zero", "one")


def _check_unit(a) -> float:
    if isinstance(a, bool) or not isinstance(a, numbers.Real):
        raise DomainError(f"expected a number in [0, 1], got {a!r}")
    a = float(a)
    if not 0.0 <= a <= 1.0:
        raise DomainError(f"value {a!r} outside the unit interval [0, 1]")
    return a


def fuzzy_and(a, b):
    """Probabilistic fuzzy conjunction: the product of certainties."""
    return _check_unit(a) * _check_unit(b)


def fuzzy_or(a, b):
    """Probabilistic fuzzy disjunction: 1 - (1 - a) * (1 - b)."""
    return 1.0 - (1.0 - _check_unit(a)) * (1.0 - _check_unit(b))


def fuzzy_not(a):
    """Fuzzy negation: 1 - a (an involution on [0, 1])."""
    return 1.0 - _check_unit(a)


def _check_dims(u: Sequence[float], v: Sequence[float]) -> None:
    if len(u) != len(v):
        raise DimensionError(
            f"vector dimensions differ: {len(u)} versus {len(v)}"
        )


def vec_add(u, v):
    """Component-wise sum of two equal-dimension vectors."""
    _check_dims(u, v)
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    """Component-wise difference of two equal-dimension vectors."""
    _check_dims(u, v)
    return tuple(a - b for a, b in zip(u, v))


def vec_mul(u, v):
    """Component-wise product of two equal-dimension vectors."""
    _check_dims(u, v)
    return tuple(a * b for a, b in zip(u, v))


def vec_div(u, v, categories: Sequence[str] | None = None):
    """Component-wise quotient; rejects zero divisors, naming the component.

    ``categories`` supplies human-readable component names for the error
    message when the vector dimensions are category weights.
    """
    _check_dims(u, v)
    for i, b in enumerate(v):
        if b == 0:
            label = f"category '{categories[i]}' (index {i})" if categories else f"component {i}"
            raise ArithmeticDomainError(
                f"division by zero in {label}",
                index=i,
                category=categories[i] if categories else None,
            )
    return tuple(a / b for a, b in zip(u, v))


def vec_norm(v):
    """Scale a vector by the reciprocal of its component sum.

    The all-zero-sum case is defined as the identity: such vectors mark
    "leave this outcome untouched" leaves and must stay inert under
    repeated normalization.
    """
    s = sum(v)
    if s == 0:
        return tuple(v)
    return tuple(c / s for c in v)


@dataclass(frozen=True)
class Algebra:
    """A carrier set with named operations and distinguished elements.

    ``validate`` coerces/checks a payload (raising :class:`DomainError`) and
    ``key`` maps a payload to a bit-exact hashable key.  Canonicity of the
    diagram store depends on ``key`` distinguishing values exactly, so float
    payloads are keyed by their IEEE-754 bit patterns, never by tolerance.
    Instances are immutable and safe to share between threads.
    """

    name: str
    carrier: str  # "boolean" | "unit-interval" | "real" | "vector"
    template: str  # GROUP_LIKE | RING_LIKE | LATTICE_LOGIC
    binary_ops: Mapping[str, Callable]
    unary_ops: Mapping[str, Callable]
    distinguished: Mapping[str, object]
    validate: Callable[[object], object]
    dimension: int | None = None
    categories: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.template == LATTICE_LOGIC:
            missing = [n for n in _LOGIC_REQUIRED_BINARY if n not in self.binary_ops]
            missing += [n for n in _LOGIC_REQUIRED_UNARY if n not in self.unary_ops]
            missing += [n for n in _LOGIC_REQUIRED_ELEMENTS if n not in self.distinguished]
            if missing:
                raise ConfigurationError(
                    f"lattice/logic algebra '{self.name}' lacks {missing}"
                )

    def binary(self, op: str) -> Callable:
        try:
            return self.binary_ops[op]
        except KeyError:
            raise ConfigurationError(
                f"algebra '{self.name}' has no binary operation '{op}'"
            ) from None

    def unary(self, op: str) -> Callable:
        try:
            return self.unary_ops[op]
        except KeyError:
            raise ConfigurationError(
                f"algebra '{self.name}' has no unary operation '{op}'"
            ) from None

    def key(self, value):
        """Bit-exact hashable key for a validated payload."""
        if self.carrier == "boolean":
            return value
        if self.carrier == "vector":
            return struct.pack(f"<{len(value)}d", *value)
        return struct.pack("<d", value)

    @property
    def zero(self):
        return self.distinguished["zero"]

    @property
    def one(self):
        return self.distinguished["one"]


def _validate_bool(v):
    if not isinstance(v, bool):
        raise DomainError(f"expected a bool, got {v!r}")
    return v


def _validate_real(v):
    if isinstance(v, bool) or not isinstance(v, numbers.Real):
        raise DomainError(f"expected a real number, got {v!r}")
    return float(v)


def boolean_algebra() -> Algebra:
    """Classical two-valued logic. '+'/'*' alias disjunction/conjunction."""
    ops = {
        "and": lambda a, b: a and b,
        "or": lambda a, b: a or b,
        "xor": lambda a, b: a != b,
    }
    ops["*"] = ops["and"]
    ops["+"] = ops["or"]
    return Algebra(
        name="boolean",
        carrier="boolean",
        template=LATTICE_LOGIC,
        binary_ops=ops,
        unary_ops={"not": lambda a: not a},
        distinguished={"zero": False, "one": True},
        validate=_validate_bool,
    )


def fuzzy_algebra() -> Algebra:
    """Probabilistic fuzzy logic on the unit interval."""
    return Algebra(
        name="fuzzy",
        carrier="unit-interval",
        template=LATTICE_LOGIC,
        binary_ops={"and": fuzzy_and, "or": fuzzy_or},
        unary_ops={"not": fuzzy_not},
        distinguished={"zero": 0.0, "one": 1.0},
        validate=_check_unit,
    )


def _real_div(a, b):
    if b == 0:
        raise ArithmeticDomainError("division by zero")
    return a / b


def real_algebra() -> Algebra:
    """Real arithmetic over double-precision floats."""
    return Algebra(
        name="real",
        carrier="real",
        template=RING_LIKE,
        binary_ops={
            "+": lambda a, b: a + b,
            "-": lambda a, b: a - b,
            "*": lambda a, b: a * b,
            "/": _real_div,
        },
        unary_ops={"neg": lambda a: -a},
        distinguished={"zero": 0.0, "one": 1.0},
        validate=_validate_real,
    )


def weights_algebra(categories: Sequence[str] | int) -> Algebra:
    """Weight vectors with one real component per category.

    Addition/subtraction/multiplication/division are component-wise; the
    unary ``norm`` rescales a vector to sum 1 (all-zero-sum vectors pass
    through unchanged).  ``categories`` may be the declared category names
    or a bare dimension.
    """
    if isinstance(categories, int):
        names: tuple[str, ...] | None = None
        n = categories
    else:
        names = tuple(categories)
        n = len(names)
    if n < 1:
        raise ConfigurationError("weight vectors need at least one category")

    def validate(v):
        if isinstance(v, (str, bytes)) or not isinstance(v, Sequence):
            raise DomainError(f"expected a weight vector of dimension {n}, got {v!r}")
        if len(v) != n:
            raise DimensionError(
                f"expected a weight vector of dimension {n}, got dimension {len(v)}"
            )
        return tuple(_validate_real(c) for c in v)

    return Algebra(
        name="weights",
        carrier="vector",
        template=GROUP_LIKE,
        binary_ops={
            "+": vec_add,
            "-": vec_sub,
            "*": vec_mul,
            "/": lambda u, v: vec_div(u, v, names),
        },
        unary_ops={"norm": vec_norm},
        distinguished={"zero": (0.0,) * n, "one": (1.0,) * n},
        validate=validate,
        dimension=n,
        categories=names,
    )


def algebra_by_name(name: str, categories: Sequence[str] | int | None = None) -> Algebra:
    """Resolve an algebra from its CLI/model identifier.

    ``weights`` needs the declared categories (or a dimension) because the
    carrier depends on them.
    """
    if name == "boolean":
        return boolean_algebra()
    if name == "fuzzy":
        return fuzzy_algebra()
    if name == "real":
        return real_algebra()
    if name == "weights":
        if categories is None:
            raise ConfigurationError(
                "the 'weights' algebra needs the declared categories"
            )
        return weights_algebra(categories)
    raise ConfigurationError(f"unknown algebra '{name}'")
