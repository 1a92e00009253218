"""Compatible parabolic subalgebras and their weight-level decomposition.

For a weight lam on the small Cartan, the roots of the ambient algebra
split by the sign of t_pair(lam, restrict(alpha)): strictly positive
pairings span the nilradical n, zero pairings span the reductive part m,
and the rest are the negatives of n.  The decomposition is recorded
purely as small-side weight multisets.

A remark on the intersection with the subalgebra k: the parabolic
contains the whole Cartan, so p cap k always contains t; the quantity
used for the homological degree bookkeeping is n cap k, which for a
b_k-dominant regular lam equals the span of the positive k-root spaces.
The multiset split below implements exactly that reading.
"""

from __future__ import annotations

from dataclasses import dataclass

from .reductive import ReductivePair
from .weights import Weight, WeightMultiset


def is_regular(p: ReductivePair, lam: Weight) -> bool:
    """True iff lam pairs nonzero with every restricted root."""
    return all(p.t_pair(lam, sigma) != 0 for sigma in p.delta_t)


@dataclass(frozen=True)
class RootSplit:
    """Sign decomposition of the ambient roots against a grading weight."""

    lam: Weight
    n_roots: tuple[Weight, ...]        # ambient roots with positive pairing
    m_roots: tuple[Weight, ...]        # ambient roots with zero pairing
    ch_t_n: WeightMultiset
    rho_n: Weight
    minimal: bool

    def m_positive_roots(self) -> tuple[Weight, ...]:
        """The reductive part's positivity, fixed by ambient positivity on ties."""
        positive = set()
        for root in self.m_roots:
            if root in positive or tuple(-c for c in root) in positive:
                continue
            positive.add(root)
        return tuple(sorted(positive))


def split_roots(p: ReductivePair, lam: Weight) -> RootSplit:
    """Partition all ambient roots by the sign of their pairing with lam."""
    if len(lam) != p.rank_t:
        raise ValueError(f"grading weight must have rank {p.rank_t}")
    n_roots: list[Weight] = []
    m_roots: list[Weight] = []
    ch: dict[Weight, int] = {}
    for root in p.g.positive_roots:
        for signed in (root, tuple(-c for c in root)):
            restricted = p.restrict(signed)
            value = p.t_pair(lam, restricted)
            if value > 0:
                n_roots.append(signed)
                ch[restricted] = ch.get(restricted, 0) + 1
            elif value == 0 and signed == root:
                m_roots.append(root)
                m_roots.append(tuple(-c for c in root))
    ch_t_n = WeightMultiset(ch, rank=p.rank_t)
    return RootSplit(
        lam=lam,
        n_roots=tuple(n_roots),
        m_roots=tuple(m_roots),
        ch_t_n=ch_t_n,
        rho_n=ch_t_n.half_sum(),
        minimal=is_regular(p, lam),
    )


@dataclass(frozen=True)
class CompatibleParabolic:
    lam: Weight
    n_roots: tuple[Weight, ...]
    m_roots: tuple[Weight, ...]
    ch_t_n: WeightMultiset
    ch_t_n_cap_k: WeightMultiset
    ch_t_n_cap_kperp: WeightMultiset
    rho_n: Weight
    rho_n_perp: Weight
    s: int                              # size of ch_t(n cap k)
    r: int                              # size of ch_t(n cap k-perp)
    minimal: bool

    def m_positive_roots(self) -> tuple[Weight, ...]:
        positive = set()
        for root in self.m_roots:
            if root in positive or tuple(-c for c in root) in positive:
                continue
            positive.add(root)
        return tuple(sorted(positive))


def compatible_parabolic(p: ReductivePair, lam: Weight) -> CompatibleParabolic:
    """The parabolic attached to lam, with its n cap k / n cap k-perp split.

    The k-side character of n cap k is the multiset of positive k-roots;
    it must embed in the character of n, which holds whenever lam is
    b_k-dominant and the embedding data is consistent.  Irregular lam is
    allowed and simply reports minimal=False.
    """
    split = split_roots(p, lam)
    cap_k = p.k_positive_multiset()
    excess = split.ch_t_n.first_excess(cap_k)
    if excess is not None:
        raise ValueError(
            f"the k-positive multiset does not embed in the character of n: "
            f"weight {excess} is missing; the embedding data is inconsistent "
            f"or lam is not b_k-dominant"
        )
    cap_kperp = split.ch_t_n.minus(cap_k)
    return CompatibleParabolic(
        lam=split.lam,
        n_roots=split.n_roots,
        m_roots=split.m_roots,
        ch_t_n=split.ch_t_n,
        ch_t_n_cap_k=cap_k,
        ch_t_n_cap_kperp=cap_kperp,
        rho_n=split.rho_n,
        rho_n_perp=cap_kperp.half_sum(),
        s=cap_k.size(),
        r=cap_kperp.size(),
        minimal=split.minimal,
    )
