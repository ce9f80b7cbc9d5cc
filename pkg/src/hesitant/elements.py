"""Hesitant fuzzy elements.

An HFE is the membership degree of one universe element: a non-empty finite
multiset of exact degrees, kept in canonical descending order. Duplicates are
significant — {0.6, 0.6, 0.5} and {0.6, 0.5} are different elements, and two
HFEs are equal iff they are equal as multisets.

The three binary operations follow the bound-filtered concatenation rules:

    union(a, b)        = {h in a ⊔ b : h >= max(min a, min b)}
    intersection(a, b) = {h in a ⊔ b : h <= min(max a, max b)}
    complement(a)      = {1 - h : h in a}

where ⊔ concatenates with multiplicity. Both filters provably keep at least
one degree (the largest maximum survives the union filter, the smallest
minimum survives the intersection filter), so results are never empty.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator

from ._kernel import _pykernel as _ops
from .degrees import ONE, DegreeError, coerce_degree, format_degree


def _fmt(g: Fraction) -> str:
    try:
        return format_degree(g)
    except DegreeError:
        return f"{g.numerator}/{g.denominator}"


class HFE:
    """A canonical descending multiset of degrees; immutable and hashable."""

    __slots__ = ("_degrees",)

    def __init__(self, values: Iterable) -> None:
        degrees = tuple(coerce_degree(v) for v in values)
        if not degrees:
            raise ValueError("an HFE needs at least one degree")
        object.__setattr__(self, "_degrees", _ops.canon(degrees))

    @classmethod
    def _wrap(cls, canonical: tuple) -> "HFE":
        obj = object.__new__(cls)
        object.__setattr__(obj, "_degrees", canonical)
        return obj

    @property
    def degrees(self) -> tuple[Fraction, ...]:
        return self._degrees

    @property
    def upper(self) -> Fraction:
        """Largest degree (the best evaluation)."""
        return self._degrees[0]

    @property
    def lower(self) -> Fraction:
        """Smallest degree (the worst evaluation)."""
        return self._degrees[-1]

    @property
    def bounds(self) -> tuple[Fraction, Fraction]:
        """(lower, upper)."""
        return self._degrees[-1], self._degrees[0]

    @property
    def mean(self) -> Fraction:
        """Exact mean of the degrees, with multiplicity."""
        return Fraction(sum(self._degrees), len(self._degrees))

    def best(self, q: int) -> "HFE":
        """The q largest degrees with multiplicity (1 <= q <= len(self))."""
        return HFE._wrap(_ops.best_q(self._degrees, q))

    def union(self, other: "HFE") -> "HFE":
        return HFE._wrap(_ops.e_union(self._degrees, other._degrees))

    def intersection(self, other: "HFE") -> "HFE":
        return HFE._wrap(_ops.e_inter(self._degrees, other._degrees))

    def complement(self) -> "HFE":
        return HFE._wrap(_ops.e_compl(self._degrees, ONE))

    __or__ = union
    __and__ = intersection
    __invert__ = complement

    def __len__(self) -> int:
        return len(self._degrees)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self._degrees)

    def __contains__(self, value) -> bool:
        return coerce_degree(value) in self._degrees

    def __eq__(self, other) -> bool:
        if isinstance(other, HFE):
            return self._degrees == other._degrees
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._degrees)

    def __str__(self) -> str:
        return "{" + ", ".join(_fmt(g) for g in self._degrees) + "}"

    def __repr__(self) -> str:
        return f"hfe({', '.join(repr(_fmt(g)) for g in self._degrees)})"


def hfe(*values) -> HFE:
    """Convenience constructor: hfe("0.6", "0.5", "0.3")."""
    return HFE(values)


def make_hfe(values: Iterable) -> HFE:
    """Build an HFE from any iterable of degrees (canonicalizing)."""
    return HFE(values)
