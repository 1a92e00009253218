"""Genericity of a k-type, decided exactly.

A dominant integral weight mu on the small side is generic when

  (1) t_pair(mu + 2 rho - rho_n, alpha) >= 0 for every alpha in the
      support of the positive k-roots, and
  (2) t_pair(mu + 2 rho - rho_S, rho_S) > 0 for every nonempty
      submultiset S of the small-side character of n,

where n is the nilradical attached to the grading weight mu + 2 rho.
The empty submultiset would make (2) unsatisfiable (its half-sum is
zero), so the quantifier deliberately runs over nonempty S only.

Condition (2) is a search over exponentially many submultisets; the
search here is a depth-first scan over multiplicity vectors, ordered by
decreasing pairing with mu + 2 rho, with an exact interval bound that
prunes any branch all of whose completions provably keep the quadratic
positive.  An exhaustive enumerator is kept alongside as an oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .parabolic import is_regular, split_roots
from .reductive import ReductivePair
from .weights import Weight, WeightMultiset, add, scale, sub


def norm2_shifted(p: ReductivePair, mu: Weight) -> Fraction:
    """Squared length of mu + 2 rho in the induced form."""
    shifted = add(mu, scale(2, p.rho))
    return p.t_pair(shifted, shifted)


def minimal_ktype(p: ReductivePair, candidates: list[Weight]) -> Weight:
    """The candidate minimizing the shifted squared length.

    Ties break lexicographically on coordinates, so the result is
    deterministic.  Every candidate must be dominant integral.
    """
    if not candidates:
        raise ValueError("empty candidate list")
    for mu in candidates:
        defect = p.dominance_defect(mu)
        if defect is not None:
            raise ValueError(f"candidate {mu} is not dominant integral: {defect}")
    return min(candidates, key=lambda mu: (norm2_shifted(p, mu), mu))


def iter_submultisets(ms: WeightMultiset) -> Iterator[dict[Weight, int]]:
    """All nonempty submultisets, as weight -> multiplicity dicts."""
    support = ms.support()

    def rec(i: int, current: dict[Weight, int]) -> Iterator[dict[Weight, int]]:
        if i == len(support):
            if current:
                yield dict(current)
            return
        w = support[i]
        for n in range(ms.entries[w] + 1):
            if n:
                current[w] = n
            yield from rec(i + 1, current)
        current.pop(w, None)

    yield from rec(0, {})


class _Condition2Search:
    """Shared state for the pruned scan over submultisets of ch_t n."""

    def __init__(self, p: ReductivePair, c: Weight, ms: WeightMultiset):
        self.p = p
        self.c = c
        # Largest pairing first: dominant-chamber weights fail fastest.
        self.weights = sorted(ms.support(),
                              key=lambda b: (-p.t_pair(c, b), b))
        self.mults = [ms.entries[b] for b in self.weights]
        k = len(self.weights)
        self.cvals = [p.t_pair(c, b) for b in self.weights]
        self.pairs = [[p.t_pair(a, b) for b in self.weights] for a in self.weights]
        # Per-suffix bound on the achievable squared length of any completion:
        # q2[i] >= |q|^2 for every q built from weights i..k-1.
        self.q2 = [Fraction(0)] * (k + 1)
        for i in range(k - 1, -1, -1):
            total = self.q2[i + 1]
            for a in range(i, k):
                for b in range(i, k):
                    if a == i or b == i:
                        v = self.pairs[a][b]
                        if v > 0:
                            total += Fraction(self.mults[a] * self.mults[b]) * v / 4
            self.q2[i] = total

    def find_violation(self) -> bool:
        """True iff some nonempty submultiset S has t_pair(c - rho_S, rho_S) <= 0."""
        k = len(self.weights)
        counts = [0] * k
        dots = [Fraction(0)] * k   # t_pair(rho_S, beta_j)
        cs = Fraction(0)           # t_pair(c, rho_S)
        ss = Fraction(0)           # t_pair(rho_S, rho_S)

        def add_copy(i: int) -> None:
            nonlocal cs, ss
            cs += self.cvals[i] / 2
            ss += dots[i] + self.pairs[i][i] / 4
            for j in range(k):
                dots[j] += self.pairs[i][j] / 2
            counts[i] += 1

        def drop_copy(i: int) -> None:
            nonlocal cs, ss
            counts[i] -= 1
            for j in range(k):
                dots[j] -= self.pairs[i][j] / 2
            ss -= dots[i] + self.pairs[i][i] / 4
            cs -= self.cvals[i] / 2

        def rec(i: int) -> bool:
            if i == k:
                return sum(counts) > 0 and cs - ss <= 0
            # Interval bound: over every completion q of the current
            # partial sum, f is at least f(partial) + min <c - 2 rho, q>
            # - max |q|^2, all three pieces exact rationals.
            low = cs - ss - self.q2[i]
            for j in range(i, k):
                t = self.cvals[j] / 2 - dots[j]
                if t < 0:
                    low += self.mults[j] * t
            if low > 0:
                return False
            if rec(i + 1):
                return True
            for _ in range(self.mults[i]):
                add_copy(i)
                if rec(i + 1):
                    return True
            for _ in range(counts[i]):
                drop_copy(i)
            return False

        return rec(0)

    def minimal_witness(self) -> tuple[WeightMultiset, Weight]:
        """Smallest-size failing submultiset, first in canonical branch order."""
        for size in range(1, sum(self.mults) + 1):
            found = self._witness_of_size(size)
            if found is not None:
                return found
        raise AssertionError("minimal_witness called without a violation")

    def _witness_of_size(self, size: int):
        k = len(self.weights)
        counts = [0] * k
        remaining = [0] * (k + 1)
        for i in range(k - 1, -1, -1):
            remaining[i] = remaining[i + 1] + self.mults[i]

        def rec(i: int, need: int):
            if need == 0:
                ms = WeightMultiset(
                    {self.weights[j]: counts[j] for j in range(k) if counts[j]},
                    rank=self.p.rank_t,
                )
                rho_s = ms.half_sum()
                diff = sub(self.c, rho_s)
                if self.p.t_pair(diff, rho_s) <= 0:
                    return ms, rho_s
                return None
            if i == k or remaining[i] < need:
                return None
            for n in range(min(self.mults[i], need) + 1):
                counts[i] = n
                result = rec(i + 1, need - n)
                if result is not None:
                    return result
            counts[i] = 0
            return None

        return rec(0, size)


@dataclass(frozen=True)
class GenericityReport:
    holds: bool
    condition1_ok: bool
    condition2_ok: bool
    witness_root: Weight | None = None
    witness_submultiset: WeightMultiset | None = None
    witness_rho_s: Weight | None = None
    lam: Weight | None = None
    rho_n: Weight | None = None


def is_generic(p: ReductivePair, mu: Weight) -> GenericityReport:
    """Decide both genericity conditions for the k-type with highest
    weight mu; on failure the report carries a witness (a failing root
    for condition 1, a smallest failing submultiset for condition 2)."""
    defect = p.dominance_defect(mu)
    if defect is not None:
        raise ValueError(f"mu is not dominant integral: {defect}")
    lam = add(mu, scale(2, p.rho))
    if not is_regular(p, lam):
        raise ValueError(
            "mu + 2 rho is irregular: it pairs to zero with a restricted root, "
            "so no minimal parabolic is attached to it"
        )
    split = split_roots(p, lam)

    condition1_ok = True
    witness_root = None
    shifted = sub(lam, split.rho_n)
    for alpha in p.k_positive_multiset().support():
        if p.t_pair(shifted, alpha) < 0:
            condition1_ok = False
            witness_root = alpha
            break

    search = _Condition2Search(p, lam, split.ch_t_n)
    witness_submultiset = None
    witness_rho_s = None
    condition2_ok = not search.find_violation()
    if not condition2_ok:
        witness_submultiset, witness_rho_s = search.minimal_witness()

    return GenericityReport(
        holds=condition1_ok and condition2_ok,
        condition1_ok=condition1_ok,
        condition2_ok=condition2_ok,
        witness_root=witness_root,
        witness_submultiset=witness_submultiset,
        witness_rho_s=witness_rho_s,
        lam=lam,
        rho_n=split.rho_n,
    )


def sl2_threshold(p: ReductivePair) -> int:
    """Closed-form genericity threshold for a rank-one subalgebra.

    Returns the integer T such that V(mu = m) is generic exactly when
    m + 1 >= T.  T is the half-sum of the positive restricted root
    values (the Weyl vector evaluated on the defining semisimple
    element); for a genuine semisimple element of a standard triple that
    value is an integer and is returned as-is, and for formal mark
    vectors with a half-integral value the floor is the unique integer
    making the prediction match the two genericity conditions at every
    natural m.
    """
    if p.rank_t != 1:
        raise ValueError(f"threshold needs a rank-one subalgebra, got rank {p.rank_t}")
    total = Fraction(0)
    for root in p.g.positive_roots:
        v = p.restrict(root)[0]
        if v < 0:
            v = -v
        total += v
    return math.floor(total / 2)
