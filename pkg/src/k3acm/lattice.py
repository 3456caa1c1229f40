"""Integral lattices with a distinguished ample class.

A Lattice is an integer symmetric bilinear form together with basis labels
and a distinguished ample divisor class.  All arithmetic is exact: pairings
are plain Python integers, the signature is computed by congruence
diagonalization over the rationals (Fraction), never by floating point.

A lattice flagged ``k3`` must be even (even diagonal suffices) and have
signature (1, rank-1); this is checked at construction time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    BadDimensionsError,
    DegenerateFormError,
    DimensionMismatchError,
    NonPositiveAmpleError,
    NonSymmetricError,
    OddK3DiagonalError,
    PreconditionError,
    WrongSignatureError,
)


@dataclass(frozen=True)
class DivClass:
    """A divisor class: an integer coordinate vector in a fixed basis.

    Supports the obvious Z-module operations so combinations read like the
    formulas they implement, e.g. ``3*h - 2*b``.
    """

    coords: tuple[int, ...]

    def __init__(self, coords: Iterable[int]):
        coords = tuple(int(c) for c in coords)
        object.__setattr__(self, "coords", coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __add__(self, other: "DivClass") -> "DivClass":
        if len(self) != len(other):
            raise DimensionMismatchError(
                f"cannot add classes of length {len(self)} and {len(other)}")
        return DivClass(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "DivClass") -> "DivClass":
        return self + (-other)

    def __neg__(self) -> "DivClass":
        return DivClass(-a for a in self.coords)

    def __mul__(self, k: int) -> "DivClass":
        if not isinstance(k, int):
            return NotImplemented
        return DivClass(k * a for a in self.coords)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def _check_gram(gram: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    rows = tuple(tuple(int(x) for x in row) for row in gram)
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise BadDimensionsError("gram matrix must be square and nonempty")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise NonSymmetricError(
                    f"gram[{i}][{j}]={rows[i][j]} != gram[{j}][{i}]={rows[j][i]}")
    return rows


def _signature_of(gram: Sequence[Sequence[int]]) -> tuple[int, int]:
    """Signature (#positive, #negative) of a nondegenerate symmetric form.

    Symmetric Gaussian elimination over Fraction.  When every remaining
    diagonal entry vanishes but the row does not, a row+column addition
    turns the 2x2 hyperbolic block into a usable pivot; Sylvester's law
    makes the count basis-independent.
    """
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    pos = neg = 0
    for i in range(n):
        if a[i][i] == 0:
            piv = next((j for j in range(i + 1, n) if a[j][j] != 0), None)
            if piv is not None:
                a[i], a[piv] = a[piv], a[i]
                for row in a:
                    row[i], row[piv] = row[piv], row[i]
            else:
                # all remaining diagonal entries vanish
                k = next((k for k in range(i + 1, n) if a[i][k] != 0), None)
                if k is None:
                    raise DegenerateFormError(
                        "form is degenerate: zero row during diagonalization")
                for col in range(n):
                    a[i][col] += a[k][col]
                for row in a:
                    row[i] += row[k]
        p = a[i][i]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for j in range(i + 1, n):
            if a[j][i] == 0:
                continue
            f = a[j][i] / p
            for col in range(i, n):
                a[j][col] -= f * a[i][col]
            for row in a:
                row[j] -= f * row[i]
    return pos, neg


@dataclass(frozen=True)
class Lattice:
    """An integral lattice with labelled basis and ample class.

    Immutable; every operation is a pure function of the inputs.
    """

    gram: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    ample: DivClass
    k3: bool = False

    def __init__(self, gram, labels, ample, k3: bool = False):
        rows = _check_gram(gram)
        n = len(rows)
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise BadDimensionsError(f"expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n:
            raise BadDimensionsError("basis labels must be distinct")
        if not isinstance(ample, DivClass):
            ample = DivClass(ample)
        if len(ample) != n:
            raise BadDimensionsError(
                f"ample class has length {len(ample)}, lattice rank is {n}")
        object.__setattr__(self, "gram", rows)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "ample", ample)
        object.__setattr__(self, "k3", bool(k3))
        if self.k3:
            for i in range(n):
                if rows[i][i] % 2 != 0:
                    raise OddK3DiagonalError(
                        f"K3 lattice needs an even diagonal; gram[{i}][{i}]={rows[i][i]}")
            sig = _signature_of(rows)
            if sig != (1, n - 1):
                raise WrongSignatureError(
                    f"K3 lattice needs signature (1, {n - 1}), got {sig}")
        if self.self_int(self.ample) <= 0:
            raise NonPositiveAmpleError(
                f"ample class {ample} has self-intersection "
                f"{self.self_int(self.ample)} <= 0")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def basis(self) -> tuple[DivClass, ...]:
        """Unit coordinate vectors, in label order."""
        n = self.rank
        return tuple(DivClass(1 if j == i else 0 for j in range(n))
                     for i in range(n))

    def pair(self, d1: DivClass, d2: DivClass) -> int:
        """Intersection number d1 . d2 (exact integer)."""
        if len(d1) != self.rank or len(d2) != self.rank:
            raise DimensionMismatchError(
                f"classes of length {len(d1)}, {len(d2)} on a rank-{self.rank} lattice")
        total = 0
        for i, a in enumerate(d1.coords):
            if a == 0:
                continue
            row = self.gram[i]
            total += a * sum(row[j] * b for j, b in enumerate(d2.coords) if b)
        return total

    def self_int(self, d: DivClass) -> int:
        """Self-intersection d . d."""
        return self.pair(d, d)

    def deg(self, d: DivClass) -> int:
        """Degree against the ample class."""
        return self.pair(self.ample, d)

    @cached_property
    def _signature(self) -> tuple[int, int]:
        return _signature_of(self.gram)

    def signature(self) -> tuple[int, int]:
        """(#positive, #negative) eigenvalue counts; requires nondegeneracy."""
        return self._signature

    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def hodge_check(self, d1: DivClass, d2: DivClass) -> bool:
        """Hodge index inequality d1^2 * d2^2 <= (d1.d2)^2.

        Only meaningful when both self-intersections are positive; raises
        PreconditionError otherwise.  On a signature-(1, k) lattice the
        inequality always holds, so a False return flags corrupt data.
        """
        a = self.self_int(d1)
        b = self.self_int(d2)
        if a <= 0 or b <= 0:
            raise PreconditionError(
                f"hodge_check needs positive squares, got {a} and {b}")
        return a * b <= self.pair(d1, d2) ** 2
