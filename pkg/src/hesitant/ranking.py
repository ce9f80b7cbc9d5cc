"""Pairwise scheme ranking from one set's memberships.

The universe elements of the chosen set are treated as decision schemes and
compared pairwise with one inclusion relation. The output keeps exactly what
the pairwise judgments support: a boolean matrix, the layers of the strict
part (layer 1 holds the schemes nothing beats strictly), and the unresolved
(incomparable) pairs. Nothing breaks ties: the mean relation yields a total
preorder, the others may leave pairs incomparable, and that is reported, not
hidden.

⊂t is not rankable: it is irreflexive by cardinality and admits no equality,
so its strict part is not a preorder over arbitrary scheme sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .elements import HFE
from .relations import Inclusion, element_relation

RANKABLE = (
    Inclusion.POSSIBLE,
    Inclusion.ACCEPTABLE,
    Inclusion.MEAN,
    Inclusion.STRONG,
    Inclusion.NECESSARY,
)


@dataclass(frozen=True)
class Ranking:
    kind: Inclusion
    schemes: tuple[str, ...]
    matrix: Mapping[tuple[str, str], bool]
    layers: tuple[tuple[str, ...], ...]
    unresolved: tuple[tuple[str, str], ...]

    def strictly_above(self, low: str, high: str) -> bool:
        return self.matrix[(low, high)] and not self.matrix[(high, low)]


def rank_schemes(scores, kind: Inclusion) -> Ranking:
    """Rank the universe elements of one HFS by pairwise inclusion."""
    if kind not in RANKABLE:
        raise ValueError(
            f"relation {kind.letter!r} is not rankable; choose one of "
            + ", ".join(k.letter for k in RANKABLE)
        )
    schemes = scores.universe.elements
    hfes: dict[str, HFE] = {e: scores[e] for e in schemes}
    matrix = {
        (a, b): element_relation(kind, hfes[a], hfes[b]) for a in schemes for b in schemes
    }

    def strictly_above(low: str, high: str) -> bool:
        return matrix[(low, high)] and not matrix[(high, low)]

    remaining = list(schemes)
    layers: list[tuple[str, ...]] = []
    while remaining:
        top = [s for s in remaining if not any(strictly_above(s, t) for t in remaining)]
        if not top:
            raise AssertionError("strict part of a transitive relation cannot cycle")
        layers.append(tuple(top))
        remaining = [s for s in remaining if s not in top]

    unresolved = tuple(
        (a, b)
        for i, a in enumerate(schemes)
        for b in schemes[i + 1 :]
        if not matrix[(a, b)] and not matrix[(b, a)]
    )
    return Ranking(
        kind=kind,
        schemes=schemes,
        matrix=matrix,
        layers=tuple(layers),
        unresolved=unresolved,
    )


def ranking_dot(ranking: Ranking) -> str:
    """Graph description (DOT) of the strict part, transitively reduced."""
    schemes = ranking.schemes
    strict = {
        (a, b)
        for a in schemes
        for b in schemes
        if a != b and ranking.strictly_above(a, b)
    }
    reduced = {
        (a, b)
        for (a, b) in strict
        if not any((a, c) in strict and (c, b) in strict for c in schemes)
    }
    lines = [
        "digraph ranking {",
        f'  label="strict ⊂{ranking.kind.letter} (edge points to the better scheme)";',
        "  rankdir=BT;",
    ]
    for s in schemes:
        lines.append(f'  "{s}";')
    for a, b in sorted(reduced):
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_ranking(ranking: Ranking) -> str:
    """Human-readable ranking report."""
    schemes = ranking.schemes
    width = max(len(s) for s in schemes)
    lines = [f"pairwise ⊂{ranking.kind.letter} (row ⊂ column):"]
    header = " " * (width + 2) + "  ".join(s.rjust(width) for s in schemes)
    lines.append(header)
    for a in schemes:
        row = "  ".join(
            ("y" if ranking.matrix[(a, b)] else ".").rjust(width) for b in schemes
        )
        lines.append(f"{a.rjust(width)}  {row}")
    lines.append("")
    lines.append("layers, best first:")
    for i, layer in enumerate(ranking.layers, start=1):
        lines.append(f"  {i}. {', '.join(layer)}")
    if ranking.unresolved:
        pairs = ", ".join(f"{a}/{b}" for a, b in ranking.unresolved)
        lines.append(f"unresolved pairs (incomparable): {pairs}")
    else:
        lines.append("no unresolved pairs")
    return "\n".join(lines) + "\n"
