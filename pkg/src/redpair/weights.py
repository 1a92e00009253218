"""Exact weight vectors and finite weight multisets.

Weights are tuples of Fractions.  Throughout the package a weight of the
big algebra is written in the simple-root basis of its Cartan dual, and a
weight of the small algebra lives in whatever coordinates the embedding
fixes; both are plain ``Weight`` tuples and all arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Weight = tuple[Fraction, ...]

Rational = Union[int, str, Fraction]


def as_fraction(x: Rational) -> Fraction:
    """Coerce an int, Fraction or 'p/q' string; floats are rejected."""
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def vec(*coords: Rational) -> Weight:
    return tuple(as_fraction(c) for c in coords)


def weight(coords: Iterable[Rational]) -> Weight:
    return tuple(as_fraction(c) for c in coords)


def zero(rank: int) -> Weight:
    return (Fraction(0),) * rank


def add(x: Weight, y: Weight) -> Weight:
    if len(x) != len(y):
        raise ValueError(f"weight ranks differ: {len(x)} vs {len(y)}")
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Weight, y: Weight) -> Weight:
    if len(x) != len(y):
        raise ValueError(f"weight ranks differ: {len(x)} vs {len(y)}")
    return tuple(a - b for a, b in zip(x, y))


def neg(x: Weight) -> Weight:
    return tuple(-a for a in x)


def scale(c: Rational, x: Weight) -> Weight:
    f = as_fraction(c)
    return tuple(f * a for a in x)


def is_zero(x: Weight) -> bool:
    return all(a == 0 for a in x)


class WeightMultiset:
    """A finite multiset of weights of a common rank.

    Entries map each weight to a strictly positive multiplicity.  The
    rank must be given explicitly for the empty multiset.
    """

    def __init__(self, entries: Mapping[Weight, int] | Iterable[tuple[Weight, int]] = (),
                 rank: int | None = None):
        items = entries.items() if isinstance(entries, Mapping) else entries
        self.entries: dict[Weight, int] = {}
        for w, m in items:
            if m < 0:
                raise ValueError(f"negative multiplicity {m} for {w}")
            if m == 0:
                continue
            self.entries[w] = self.entries.get(w, 0) + m
        ranks = {len(w) for w in self.entries}
        if len(ranks) > 1:
            raise ValueError(f"mixed weight ranks: {sorted(ranks)}")
        if ranks:
            inferred = ranks.pop()
            if rank is not None and rank != inferred:
                raise ValueError(f"declared rank {rank} but weights have rank {inferred}")
            self.rank = inferred
        else:
            if rank is None:
                raise ValueError("rank is required for an empty multiset")
            self.rank = rank

    def size(self) -> int:
        """Total multiplicity."""
        return sum(self.entries.values())

    def support(self) -> list[Weight]:
        """Distinct weights in canonical (lexicographic) order."""
        return sorted(self.entries)

    def multiplicity(self, w: Weight) -> int:
        return self.entries.get(w, 0)

    def half_sum(self) -> Weight:
        total = zero(self.rank)
        for w, m in self.entries.items():
            total = add(total, scale(m, w))
        return scale(Fraction(1, 2), total)

    def contains(self, other: "WeightMultiset") -> bool:
        """Submultiset test: every multiplicity of ``other`` fits inside."""
        return all(self.entries.get(w, 0) >= m for w, m in other.entries.items())

    def first_excess(self, other: "WeightMultiset") -> Weight | None:
        """First weight (canonical order) where ``other`` exceeds this multiset."""
        for w in other.support():
            if self.entries.get(w, 0) < other.entries[w]:
                return w
        return None

    def minus(self, other: "WeightMultiset") -> "WeightMultiset":
        """Exact multiset difference; raises if ``other`` is not contained."""
        excess = self.first_excess(other)
        if excess is not None:
            raise ValueError(f"not a submultiset: weight {excess} has excess multiplicity")
        return WeightMultiset(
            {w: m - other.entries.get(w, 0) for w, m in self.entries.items()},
            rank=self.rank,
        )

    def items(self) -> Iterator[tuple[Weight, int]]:
        return iter(sorted(self.entries.items()))

    def __iter__(self) -> Iterator[Weight]:
        return iter(self.support())

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightMultiset):
            return NotImplemented
        return self.rank == other.rank and self.entries == other.entries

    def __repr__(self) -> str:
        body = ", ".join(f"{w}: {m}" for w, m in sorted(self.entries.items()))
        return f"WeightMultiset({{{body}}}, rank={self.rank})"


def half_sum(ms: WeightMultiset) -> Weight:
    """Half the multiplicity-weighted sum; the empty multiset gives zero."""
    return ms.half_sum()
