"""K-type multiplicities of the fundamental series, by Euler characteristic.

The series itself is never materialized.  Its k-character is assembled
from three exactly computable ingredients: the cohomology of the
positive k-root nilradical acting on a k-type (Kostant: weights
w(delta + rho) - rho, one per Weyl element, in degree length(w)), the
symmetric algebra on n cap k-perp (a vector partition function), and
the inducing module, which for a minimal parabolic enters only through
its dimension and the scalar by which the small Cartan acts.  The
alternating sum

    dim E * sum_w (-1)^len(w) * count(w(delta+rho) - rho - omega - 2 rho_n_perp)

is the Euler characteristic of the series against V(delta); under
genericity the series lives in a single degree, making the sum an
honest multiplicity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .genericity import norm2_shifted
from .parabolic import CompatibleParabolic
from .reductive import ReductivePair
from .rootsystem import RootSystem, weyl_dim_from_roots
from .weights import Weight, WeightMultiset, add, is_zero, scale, sub, zero


@dataclass(frozen=True)
class InducingModule:
    """The simple module inducing the series: ambient highest weight nu,
    its restriction omega, the dimension, and mu = omega + 2 rho_n_perp."""

    nu: Weight
    omega: Weight
    dim_e: int
    mu: Weight


def _m_simple_roots(m_positive: tuple[Weight, ...]) -> list[Weight]:
    roots = set(m_positive)
    simple = []
    for gamma in m_positive:
        if any(sub(gamma, other) in roots for other in m_positive if other != gamma):
            continue
        simple.append(gamma)
    return simple


def inducing_module(p: ReductivePair, parab: CompatibleParabolic,
                    nu: Weight) -> InducingModule:
    """Validate nu against the reductive part and package the inducing data."""
    if len(nu) != p.g.rank:
        raise ValueError(f"nu must have rank {p.g.rank}")
    m_positive = parab.m_positive_roots()
    for gamma in _m_simple_roots(m_positive):
        c = 2 * p.g.pair(nu, gamma) / p.g.pair(gamma, gamma)
        if c.denominator != 1 or c < 0:
            raise ValueError(
                f"nu is not dominant integral for the reductive part: "
                f"coroot pairing {c} at {gamma}"
            )
    dim_e = weyl_dim_from_roots(list(m_positive), p.g.pair, nu)
    omega = p.restrict(nu)
    mu = add(omega, scale(2, parab.rho_n_perp))
    return InducingModule(nu=nu, omega=omega, dim_e=dim_e, mu=mu)


class PartitionCounter:
    """Vector partition function for a fixed generator multiset.

    count(target) is the number of ways to write target as an
    N-combination of the generators, a weight of multiplicity m acting
    as m independent generators (the coefficient of the target in
    prod (1 - e^beta)^(-mult beta)).  Every generator must pair
    strictly positively with the grading weight, which makes the
    memoized recursion terminate.
    """

    def __init__(self, p: ReductivePair, generators: WeightMultiset,
                 grading: Weight):
        self.p = p
        self.grading = grading
        self.support = sorted(generators.support(),
                              key=lambda b: (-p.t_pair(grading, b), b))
        self.mults = [generators.entries[b] for b in self.support]
        for b in self.support:
            if p.t_pair(grading, b) <= 0:
                raise ValueError(
                    f"generator {b} does not pair strictly positively with "
                    f"the grading weight {grading}"
                )
        self._memo: dict[tuple[Weight, int], int] = {}

    def count(self, target: Weight) -> int:
        return self._count(target, 0)

    def _count(self, target: Weight, i: int) -> int:
        level = self.p.t_pair(self.grading, target)
        if level < 0:
            return 0
        if level == 0:
            return 1 if is_zero(target) else 0
        if i == len(self.support):
            return 0
        key = (target, i)
        cached = self._memo.get(key)
        if cached is not None:
            return cached
        beta, mult = self.support[i], self.mults[i]
        total = 0
        j = 0
        probe = target
        while self.p.t_pair(self.grading, probe) >= 0:
            total += math.comb(j + mult - 1, mult - 1) * self._count(probe, i + 1)
            probe = sub(probe, beta)
            j += 1
        self._memo[key] = total
        return total


def partition_count(p: ReductivePair, generators: WeightMultiset,
                    target: Weight, grading: Weight) -> int:
    """One-shot vector partition count; see PartitionCounter."""
    return PartitionCounter(p, generators, grading).count(target)


def kostant_weights(p: ReductivePair, delta: Weight,
                    max_weyl: int | None = 1_000_000) -> list[tuple[int, Weight]]:
    """The weights w(delta + rho) - rho of the nilradical cohomology of a
    k-type, one per Weyl element w, tagged with the degree length(w)."""
    defect = p.dominance_defect(delta)
    if defect is not None:
        raise ValueError(f"delta is not dominant integral: {defect}")
    shifted = add(delta, p.rho)
    out = [(w.length, sub(w.apply(shifted), p.rho))
           for w in p.k_weyl_group(max_weyl)]
    out.sort(key=lambda t: (t[0], t[1]))
    return out


def _check_series_inputs(p: ReductivePair, parab: CompatibleParabolic,
                         e: InducingModule) -> None:
    if not parab.minimal:
        raise ValueError(
            "the parabolic is not minimal: the small Cartan does not act on "
            "the inducing module by a scalar, so the character formula does "
            "not apply"
        )
    if e.mu != add(e.omega, scale(2, parab.rho_n_perp)):
        raise ValueError("inducing module does not match this parabolic: "
                         "mu != omega + 2 rho_n_perp")


def euler_multiplicity(p: ReductivePair, parab: CompatibleParabolic,
                       e: InducingModule, delta: Weight,
                       counter: PartitionCounter | None = None) -> int:
    """Euler characteristic of the series against V(delta); equals the
    multiplicity when the inducing k-type is generic."""
    _check_series_inputs(p, parab, e)
    defect = p.dominance_defect(delta)
    if defect is not None:
        raise ValueError(f"delta is not dominant integral: {defect}")
    if counter is None:
        counter = PartitionCounter(p, parab.ch_t_n_cap_kperp, parab.lam)
    base = add(e.omega, scale(2, parab.rho_n_perp))
    total = 0
    for length, w_weight in kostant_weights(p, delta):
        target = sub(w_weight, base)
        total += (-1) ** length * counter.count(target)
    return e.dim_e * total


def multiplicity_bound(p: ReductivePair, parab: CompatibleParabolic,
                       e: InducingModule, delta: Weight, i: int) -> int:
    """Upper bound for the multiplicity of V(delta) in degree s - i: the
    unsigned sum of the length-i terms of the Euler characteristic."""
    _check_series_inputs(p, parab, e)
    defect = p.dominance_defect(delta)
    if defect is not None:
        raise ValueError(f"delta is not dominant integral: {defect}")
    counter = PartitionCounter(p, parab.ch_t_n_cap_kperp, parab.lam)
    base = add(e.omega, scale(2, parab.rho_n_perp))
    total = 0
    for length, w_weight in kostant_weights(p, delta):
        if length == i:
            total += counter.count(sub(w_weight, base))
    return e.dim_e * total


@dataclass(frozen=True)
class MultiplicityTable:
    """Nonzero k-type Euler multiplicities inside a shifted-norm ball."""

    entries: dict[Weight, int]
    cutoff: Fraction
    s: int
    r: int
    mu: Weight
    dim_e: int

    def sorted_entries(self, p: ReductivePair) -> list[tuple[Weight, int]]:
        return sorted(self.entries.items(),
                      key=lambda kv: (norm2_shifted(p, kv[0]), kv[0]))


def _candidate_ktypes(p: ReductivePair, parab: CompatibleParabolic,
                      e: InducingModule, cutoff: Fraction) -> list[Weight]:
    """Every dominant integral delta inside the cutoff ball that can carry
    a nonzero term: delta = w(mu + rho + x) - rho for a Weyl element w
    and an N-combination x of the weights of n cap k-perp.

    The walk over x is capped by an exact consequence of Cauchy-Schwarz:
    any contributing x satisfies
        t_pair(lam, x) <= |t_pair(lam, rho + mu)| + sqrt(Q),
    with Q = |lam|^2 (2 cutoff + 2 |rho|^2), tested without leaving the
    rationals by squaring.
    """
    lam = parab.lam
    mu_rho = add(e.mu, p.rho)
    c_shift = abs(p.t_pair(lam, mu_rho))
    q_bound = p.t_pair(lam, lam) * (2 * cutoff + 2 * p.t_pair(p.rho, p.rho))

    def within_cap(x: Weight) -> bool:
        d = p.t_pair(lam, x) - c_shift
        return d <= 0 or d * d <= q_bound

    supports = sorted(parab.ch_t_n_cap_kperp.support(),
                      key=lambda b: (-p.t_pair(lam, b), b))
    points: set[Weight] = set()

    def walk(i: int, x: Weight) -> None:
        if not within_cap(x):
            return
        if i == len(supports):
            points.add(x)
            return
        step = x
        while within_cap(step):
            walk(i + 1, step)
            step = add(step, supports[i])

    walk(0, zero(p.rank_t))

    candidates: set[Weight] = set()
    group = p.k_weyl_group()
    for x in points:
        base = add(mu_rho, x)
        for w in group:
            delta = sub(w.apply(base), p.rho)
            if p.dominance_defect(delta) is not None:
                continue
            if norm2_shifted(p, delta) > cutoff:
                continue
            candidates.add(delta)
    return sorted(candidates, key=lambda d: (norm2_shifted(p, d), d))


def ktype_table(p: ReductivePair, parab: CompatibleParabolic,
                e: InducingModule, cutoff: Fraction | int) -> MultiplicityTable:
    """All nonzero Euler multiplicities at dominant integral weights whose
    shifted squared norm is at most the cutoff."""
    _check_series_inputs(p, parab, e)
    cutoff = Fraction(cutoff)
    minimum_norm = norm2_shifted(p, e.mu)
    if cutoff < minimum_norm:
        raise ValueError(
            f"cutoff {cutoff} lies below the shifted norm {minimum_norm} of "
            f"the minimal k-type, which the table must contain"
        )
    counter = PartitionCounter(p, parab.ch_t_n_cap_kperp, parab.lam)
    entries: dict[Weight, int] = {}
    for delta in _candidate_ktypes(p, parab, e, cutoff):
        value = euler_multiplicity(p, parab, e, delta, counter=counter)
        if value != 0:
            entries[delta] = value
    return MultiplicityTable(entries=entries, cutoff=cutoff, s=parab.s,
                             r=parab.r, mu=e.mu, dim_e=e.dim_e)


@dataclass(frozen=True)
class InfinitesimalCharacter:
    """Central character labeled by the dominant representative of the
    Weyl orbit of nu + the ambient Weyl vector."""

    representative: Weight


def dominant_representative(rs: RootSystem, x: Weight) -> Weight:
    """The unique weakly dominant point of the Weyl orbit of x."""
    current = x
    while True:
        for i in range(rs.rank):
            c = rs.coroot_pairing(current, i)
            if c < 0:
                moved = list(current)
                moved[i] -= c
                current = tuple(moved)
                break
        else:
            return current


def infinitesimal_character(rs: RootSystem, e: InducingModule) -> InfinitesimalCharacter:
    return InfinitesimalCharacter(
        representative=dominant_representative(rs, add(e.nu, rs.rho_tilde))
    )


@dataclass(frozen=True)
class MinimalKTypeReport:
    """Checks that the table looks like the character of a series with a
    unique minimal k-type of multiplicity dim E and nonnegative entries."""

    minimal_entry_ok: bool
    unique_minimum_ok: bool
    nonnegative_ok: bool
    mu: Weight
    dim_e: int

    @property
    def all_ok(self) -> bool:
        return self.minimal_entry_ok and self.unique_minimum_ok and self.nonnegative_ok


def verify_minimal_ktype(table: MultiplicityTable, e: InducingModule,
                         p: ReductivePair) -> MinimalKTypeReport:
    mu_norm = norm2_shifted(p, e.mu)
    minimal_entry_ok = table.entries.get(e.mu) == e.dim_e
    unique_minimum_ok = all(
        norm2_shifted(p, delta) > mu_norm
        for delta in table.entries
        if delta != e.mu
    )
    nonnegative_ok = all(v >= 0 for v in table.entries.values())
    return MinimalKTypeReport(
        minimal_entry_ok=minimal_entry_ok,
        unique_minimum_ok=unique_minimum_ok,
        nonnegative_ok=nonnegative_ok,
        mu=e.mu,
        dim_e=e.dim_e,
    )
