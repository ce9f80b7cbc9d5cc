"""Hesitant fuzzy sets over a fixed finite universe, and families of them.

An HFS assigns one HFE to every element of an ordered universe; operations
are pointwise and never merge differing universes. A Family is a non-empty
ordered collection of named HFSs over one shared universe; folds over a
family are left-folds, and commutativity/associativity of the binary
operations make the fold order-irrelevant up to multiset equality.
"""

from __future__ import annotations

from enum import Enum
from functools import reduce
from typing import Iterable, Iterator, Mapping, Sequence

from .elements import HFE
from .errors import UniverseMismatchError


class Universe:
    """Ordered sequence of distinct element identifiers."""

    __slots__ = ("_elements", "_index")

    def __init__(self, elements: Iterable[str]) -> None:
        elems = tuple(elements)
        if not elems:
            raise ValueError("a universe needs at least one element")
        for e in elems:
            if not isinstance(e, str) or not e:
                raise ValueError(f"universe element ids must be non-empty strings, got {e!r}")
        if len(set(elems)) != len(elems):
            dupes = sorted({e for e in elems if elems.count(e) > 1})
            raise ValueError(f"duplicate universe elements: {', '.join(dupes)}")
        object.__setattr__(self, "_elements", elems)
        object.__setattr__(self, "_index", {e: i for i, e in enumerate(elems)})

    @property
    def elements(self) -> tuple[str, ...]:
        return self._elements

    def index(self, element: str) -> int:
        try:
            return self._index[element]
        except KeyError:
            raise KeyError(f"element {element!r} is not in the universe") from None

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self._elements)

    def __contains__(self, element) -> bool:
        return element in self._index

    def __eq__(self, other) -> bool:
        if isinstance(other, Universe):
            return self._elements == other._elements
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._elements)

    def __repr__(self) -> str:
        return f"Universe({list(self._elements)!r})"


def _as_universe(universe) -> Universe:
    return universe if isinstance(universe, Universe) else Universe(universe)


def _require_same_universe(a, b) -> None:
    if a.universe != b.universe:
        raise UniverseMismatchError(
            f"operands live on different universes: "
            f"{list(a.universe.elements)} vs {list(b.universe.elements)}"
        )


class SetOp(Enum):
    UNION = "union"
    INTERSECTION = "intersection"


class HFS:
    """A total mapping from universe elements to HFEs; immutable."""

    __slots__ = ("_universe", "_hfes")

    def __init__(self, universe, memberships: Mapping[str, object]) -> None:
        uni = _as_universe(universe)
        missing = [e for e in uni if e not in memberships]
        if missing:
            raise ValueError(f"missing membership for element(s): {', '.join(missing)}")
        extra = [e for e in memberships if e not in uni]
        if extra:
            raise ValueError(f"unknown element(s): {', '.join(sorted(extra))}")
        hfes = []
        for e in uni:
            m = memberships[e]
            hfes.append(m if isinstance(m, HFE) else HFE(m))
        object.__setattr__(self, "_universe", uni)
        object.__setattr__(self, "_hfes", tuple(hfes))

    @classmethod
    def _wrap(cls, universe: Universe, hfes: tuple[HFE, ...]) -> "HFS":
        obj = object.__new__(cls)
        object.__setattr__(obj, "_universe", universe)
        object.__setattr__(obj, "_hfes", hfes)
        return obj

    @property
    def universe(self) -> Universe:
        return self._universe

    @property
    def hfes(self) -> tuple[HFE, ...]:
        """Memberships in universe order."""
        return self._hfes

    def __getitem__(self, element: str) -> HFE:
        return self._hfes[self._universe.index(element)]

    def items(self) -> Iterator[tuple[str, HFE]]:
        return zip(self._universe, self._hfes)

    def union(self, other: "HFS") -> "HFS":
        _require_same_universe(self, other)
        return HFS._wrap(
            self._universe,
            tuple(a.union(b) for a, b in zip(self._hfes, other._hfes)),
        )

    def intersection(self, other: "HFS") -> "HFS":
        _require_same_universe(self, other)
        return HFS._wrap(
            self._universe,
            tuple(a.intersection(b) for a, b in zip(self._hfes, other._hfes)),
        )

    def complement(self) -> "HFS":
        return HFS._wrap(self._universe, tuple(a.complement() for a in self._hfes))

    __or__ = union
    __and__ = intersection
    __invert__ = complement

    def __eq__(self, other) -> bool:
        if isinstance(other, HFS):
            return self._universe == other._universe and self._hfes == other._hfes
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._universe, self._hfes))

    def __repr__(self) -> str:
        body = ", ".join(f"{e}: {h}" for e, h in self.items())
        return f"HFS({body})"


def make_hfs(universe, assignments: Mapping[str, Iterable]) -> HFS:
    """Build an HFS from per-element degree iterables, canonicalizing each."""
    return HFS(universe, assignments)


def combine(op: SetOp, a: HFS, b: HFS) -> HFS:
    """Pointwise union or intersection of two sets on one universe."""
    if op is SetOp.UNION:
        return a.union(b)
    if op is SetOp.INTERSECTION:
        return a.intersection(b)
    raise ValueError(f"unknown operation {op!r}")


def complement(a: HFS) -> HFS:
    return a.complement()


class Family:
    """Non-empty ordered collection of named HFSs over one universe."""

    __slots__ = ("_universe", "_names", "_sets")

    def __init__(self, members: Sequence[tuple[str, HFS]]) -> None:
        members = tuple(members)
        if not members:
            raise ValueError("a family needs at least one member")
        names = tuple(name for name, _ in members)
        if len(set(names)) != len(names):
            raise ValueError("family member names must be distinct")
        sets_ = tuple(s for _, s in members)
        uni = sets_[0].universe
        for s in sets_[1:]:
            if s.universe != uni:
                raise UniverseMismatchError("family members must share one universe")
        object.__setattr__(self, "_universe", uni)
        object.__setattr__(self, "_names", names)
        object.__setattr__(self, "_sets", sets_)

    @property
    def universe(self) -> Universe:
        return self._universe

    @property
    def names(self) -> tuple[str, ...]:
        return self._names

    @property
    def sets(self) -> tuple[HFS, ...]:
        return self._sets

    def members(self) -> Iterator[tuple[str, HFS]]:
        return zip(self._names, self._sets)

    def __len__(self) -> int:
        return len(self._sets)

    def __iter__(self) -> Iterator[HFS]:
        return iter(self._sets)

    def __repr__(self) -> str:
        return f"Family({list(self._names)!r})"


def family_fold(op: SetOp, fam: Family) -> HFS:
    """Left-fold of the binary operation over the members in order.

    The result is order-independent as a multiset-valued HFS (the binary
    operations are commutative and associative); a property test folds in
    shuffled order and compares.
    """
    if op is SetOp.UNION:
        return reduce(HFS.union, fam.sets)
    if op is SetOp.INTERSECTION:
        return reduce(HFS.intersection, fam.sets)
    raise ValueError(f"unknown operation {op!r}")


def is_subfamily(f1: Family, f2: Family) -> bool:
    """True iff every member of f1 equals (as multisets) some member of f2."""
    if f1.universe != f2.universe:
        raise UniverseMismatchError("families live on different universes")
    return all(any(a == b for b in f2.sets) for a in f1.sets)
