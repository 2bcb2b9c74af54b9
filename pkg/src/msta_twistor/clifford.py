"""Sparse Clifford algebra kernel for the two-particle space-time algebra.

Blades are 8-bit masks over the generators ``g0..g3`` (particle space 1)
and ``h0..h3`` (particle space 2), with diagonal metric
``(+, -, -, -, +, -, -, -)``.  Generators from different particle spaces
anticommute, so the whole thing is just Cl(2, 6) with a fixed layout.
"""

from __future__ import annotations

import math
import numbers
import re
from typing import Iterable, Mapping, Union

SIGNATURE: tuple[int, ...] = (1, -1, -1, -1, 1, -1, -1, -1)
N_GENERATORS = len(SIGNATURE)
N_BLADES = 1 << N_GENERATORS

Scalar = Union[int, float, numbers.Real]


class AlgebraError(ValueError):
    """Bad argument to an algebra operation."""


class NumericError(ArithmeticError):
    """A numeric procedure failed to converge."""


def grade_of(mask: int) -> int:
    return bin(mask).count("1")


def _reorder_sign(a: int, b: int) -> int:
    # number of transpositions needed to sort the concatenation a.b
    a >>= 1
    swaps = 0
    while a:
        swaps += grade_of(a & b)
        a >>= 1
    return -1 if swaps & 1 else 1


def _metric_sign(common: int) -> int:
    sign = 1
    i = 0
    while common:
        if common & 1:
            sign *= SIGNATURE[i]
        common >>= 1
        i += 1
    return sign


def _build_sign_table() -> list[int]:
    table = [0] * (N_BLADES * N_BLADES)
    for a in range(N_BLADES):
        row = a * N_BLADES
        for b in range(N_BLADES):
            table[row + b] = _reorder_sign(a, b) * _metric_sign(a & b)
    return table


_SIGN = _build_sign_table()
_REVERSE_SIGN = [(-1) ** ((g * (g - 1) // 2) % 2) for g in map(grade_of, range(N_BLADES))]


def blade_sign(a: int, b: int) -> int:
    """Sign of the product of basis blades ``a`` and ``b`` (result mask ``a ^ b``)."""
    return _SIGN[a * N_BLADES + b]


class Multivector:
    """Immutable sparse multivector: mapping blade mask -> float coefficient.

    Terms with coefficient exactly zero are dropped; nothing is
    epsilon-pruned, comparisons take an explicit tolerance instead.
    """

    __slots__ = ("_terms", "_hash")
    __array_ufunc__ = None  # keep numpy scalars from broadcasting over us

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        clean: dict[int, float] = {}
        if terms:
            for mask, coef in terms.items():
                if not 0 <= mask < N_BLADES:
                    raise AlgebraError(f"blade mask out of range: {mask}")
                if coef != 0:
                    clean[mask] = float(coef)
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[int, float]) -> "Multivector":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def scalar(cls, value: Scalar) -> "Multivector":
        return cls({0: value})

    @classmethod
    def blade(cls, mask: int, coef: Scalar = 1.0) -> "Multivector":
        return cls({mask: coef})

    @classmethod
    def generator(cls, index: int) -> "Multivector":
        if not 0 <= index < N_GENERATORS:
            raise AlgebraError(f"generator index out of range: {index}")
        return cls({1 << index: 1.0})

    @property
    def terms(self) -> dict[int, float]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, mask: int) -> float:
        return self._terms.get(mask, 0.0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms))

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other) -> "Multivector":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0.0) + c
            if v == 0:
                out.pop(m, None)
            else:
                out[m] = v
        return Multivector._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Multivector":
        return Multivector._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Multivector":
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Multivector":
        return (-self) + other

    def __mul__(self, other) -> "Multivector":
        if isinstance(other, numbers.Real):
            return self.scale(other)
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        return NotImplemented

    def __rmul__(self, other) -> "Multivector":
        if isinstance(other, numbers.Real):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other) -> "Multivector":
        if isinstance(other, numbers.Real):
            return self.scale(1.0 / other)
        return NotImplemented

    def __invert__(self) -> "Multivector":
        return reverse(self)

    def scale(self, value: Scalar) -> "Multivector":
        if value == 0:
            return Multivector._raw({})
        return Multivector._raw({m: c * value for m, c in self._terms.items() if c * value != 0})

    # -- comparison ---------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def max_abs(self) -> float:
        return max((abs(c) for c in self._terms.values()), default=0.0)

    def isclose(self, other, tol: float = 1e-12) -> bool:
        return (self - _coerce(other)).max_abs() <= tol

    def grades(self) -> set[int]:
        return {grade_of(m) for m in self._terms}

    def masks(self) -> set[int]:
        return set(self._terms)

    def __repr__(self) -> str:
        return f"Multivector({format_multivector(self)!r})"

    def __str__(self) -> str:
        return format_multivector(self)


def _coerce(x) -> Multivector:
    if isinstance(x, Multivector):
        return x
    if isinstance(x, numbers.Real):
        return Multivector.scalar(x)
    return NotImplemented


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    out: dict[int, float] = {}
    sign = _SIGN
    for ma, ca in a._terms.items():
        row = ma * N_BLADES
        for mb, cb in b._terms.items():
            m = ma ^ mb
            out[m] = out.get(m, 0.0) + sign[row + mb] * ca * cb
    return Multivector._raw({m: c for m, c in out.items() if c != 0})


def grade_projection(a: Multivector, k: int) -> Multivector:
    if not 0 <= k <= N_GENERATORS:
        raise AlgebraError(f"grade must be in 0..{N_GENERATORS}, got {k}")
    return Multivector._raw({m: c for m, c in a._terms.items() if grade_of(m) == k})


def scalar_part(a: Multivector) -> float:
    return a[0]


def reverse(a: Multivector) -> Multivector:
    return Multivector._raw({m: _REVERSE_SIGN[m] * c for m, c in a._terms.items()})


def exp_series(a: Multivector, tol: float = 1e-15, max_terms: int = 200) -> Multivector:
    """Power series ``sum a**k / k!``.

    Stops once the newest term's largest coefficient is below ``tol``.  A
    nilpotent argument (``a*a == 0``) gives exactly ``1 + a``.
    """
    one = Multivector.scalar(1.0)
    if not a:
        return one
    square = a * a
    if not square:
        return one + a
    # scale down then square back up so the series converges quickly
    norm = a.max_abs() * len(a)
    halvings = math.ceil(math.log2(norm)) - 1 if norm > 4 else 0
    x = a.scale(0.5 ** halvings)
    total = one
    term = one
    for k in range(1, max_terms):
        term = (term * x).scale(1.0 / k)
        total = total + term
        if term.max_abs() < tol:
            break
    else:
        raise NumericError(f"exp_series did not converge in {max_terms} terms")
    for _ in range(halvings):
        total = total * total
    return total


def blade_mask(indices: Iterable[int]) -> tuple[int, int]:
    """Mask and sign of the product of generators taken in the given order."""
    result = Multivector.scalar(1.0)
    for i in indices:
        result = result * Multivector.generator(i)
    (mask, coef), = result.items()
    return mask, int(coef)


# -- text format --------------------------------------------------------

_TOKENS = [f"g{i}" for i in range(4)] + [f"h{i}" for i in range(4)]
_TOKEN_INDEX = {t: i for i, t in enumerate(_TOKENS)}

_NUM = r"(?:(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?|inf|nan)"
_BLADE = r"(?:[gh][0-3](?:\^[gh][0-3])*)"
_TERM_RE = re.compile(
    rf"\s*(?P<sign>[+-])?\s*(?:(?P<num>{_NUM})(?:\s*\*\s*(?P<blade>{_BLADE}))?|(?P<bare>{_BLADE}))\s*"
)


def _mask_tokens(mask: int) -> str:
    return "^".join(_TOKENS[i] for i in range(N_GENERATORS) if mask >> i & 1)


def format_multivector(a: Multivector) -> str:
    """Render as e.g. ``0.5 - 0.5*g1^g2^h1^h2``; ``repr`` floats keep it lossless."""
    if not a:
        return "0"
    parts = []
    for mask in sorted(a.masks(), key=lambda m: (grade_of(m), m)):
        c = a[mask]
        body = repr(abs(c)) if mask == 0 else f"{abs(c)!r}*{_mask_tokens(mask)}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


def parse_multivector(text: str) -> Multivector:
    """Inverse of :func:`format_multivector`; tokens may come in any order."""
    text = text.strip()
    if not text:
        raise AlgebraError("empty multivector text")
    pos = 0
    total = Multivector()
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise AlgebraError(f"cannot parse multivector at {text[pos:]!r}")
        if not first and m.group("sign") is None:
            raise AlgebraError(f"missing operator before {text[pos:]!r}")
        first = False
        coef = float(m.group("num")) if m.group("num") is not None else 1.0
        if m.group("sign") == "-":
            coef = -coef
        blade = m.group("blade") or m.group("bare")
        if blade:
            idx = [_TOKEN_INDEX[t] for t in blade.split("^")]
            if len(set(idx)) != len(idx):
                raise AlgebraError(f"repeated generator in {blade!r}")
            mask, sign = blade_mask(idx)
            total = total + Multivector.blade(mask, sign * coef)
        else:
            total = total + Multivector.scalar(coef)
        pos = m.end()
    return total
