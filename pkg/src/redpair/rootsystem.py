"""Root systems of semisimple Lie algebras with exact rational arithmetic.

Weights are coordinate tuples in the simple-root basis.  The invariant
bilinear form is normalized so that every long root of every simple
component has squared length 2; it is represented by the Gram matrix of
the simple roots, from which positive roots, the Weyl vector, Weyl
groups and the Weyl dimension formula are all derived.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .linalg import Matrix, inverse, mat_vec
from .weights import Weight, add, scale, sub, zero

_FAMILY_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 3,
    "E": lambda n: n in (6, 7, 8),
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}

_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


class CapExceeded(RuntimeError):
    """An enumeration would exceed its configured resource cap."""


@dataclass(frozen=True)
class LieType:
    """A product of simple types, e.g. LieType.parse("B2") or ("A1xA1")."""

    components: tuple[tuple[str, int], ...]

    def __post_init__(self):
        if not self.components:
            raise ValueError("empty Lie type")
        for family, rank in self.components:
            check = _FAMILY_RANKS.get(family)
            if check is None:
                raise ValueError(f"unknown family {family!r}")
            if not check(rank):
                raise ValueError(f"invalid rank {rank} for family {family}")

    @staticmethod
    def parse(text: str) -> "LieType":
        parts = text.strip().split("x")
        components = []
        for part in parts:
            m = re.fullmatch(r"([A-G])(\d+)", part.strip())
            if m is None:
                raise ValueError(f"cannot parse Lie type component {part!r}")
            components.append((m.group(1), int(m.group(2))))
        return LieType(tuple(components))

    @property
    def rank(self) -> int:
        return sum(rank for _, rank in self.components)

    def __str__(self) -> str:
        return "x".join(f"{fam}{rank}" for fam, rank in self.components)


def _simple_gram(family: str, n: int) -> list[list[Fraction]]:
    """Gram matrix of the simple roots, long roots normalized to length 2."""
    g = [[Fraction(0)] * n for _ in range(n)]
    chain = list(range(n - 1))  # edges i -- i+1 by default

    if family == "A":
        lengths = [Fraction(2)] * n
        off = {(i, i + 1): Fraction(-1) for i in chain}
    elif family == "B":
        # last simple root short
        lengths = [Fraction(2)] * (n - 1) + [Fraction(1)]
        off = {(i, i + 1): Fraction(-1) for i in chain}
    elif family == "C":
        # last simple root long
        lengths = [Fraction(1)] * (n - 1) + [Fraction(2)]
        off = {(i, i + 1): Fraction(-1, 2) for i in range(n - 2)}
        off[(n - 2, n - 1)] = Fraction(-1)
    elif family == "D":
        lengths = [Fraction(2)] * n
        off = {(i, i + 1): Fraction(-1) for i in range(n - 2)}
        off[(n - 3, n - 1)] = Fraction(-1)
        off.pop((n - 2, n - 1), None)
    elif family == "E":
        # Bourbaki numbering: chain 1-3-4-5-...-n with node 2 attached to 4
        lengths = [Fraction(2)] * n
        off = {}
        chain_nodes = [0] + list(range(2, n))
        for a, b in zip(chain_nodes, chain_nodes[1:]):
            off[(a, b)] = Fraction(-1)
        off[(1, 3)] = Fraction(-1)
    elif family == "F":
        lengths = [Fraction(2), Fraction(2), Fraction(1), Fraction(1)]
        off = {(0, 1): Fraction(-1), (1, 2): Fraction(-1), (2, 3): Fraction(-1, 2)}
    elif family == "G":
        lengths = [Fraction(2, 3), Fraction(2)]
        off = {(0, 1): Fraction(-1)}
    else:  # pragma: no cover
        raise ValueError(family)

    for i in range(n):
        g[i][i] = lengths[i]
    for (i, j), v in off.items():
        g[i][j] = v
        g[j][i] = v
    return g


@dataclass(frozen=True)
class RootSystem:
    lie_type: LieType
    gram: Matrix
    cartan: Matrix  # cartan[i][j] = <alpha_i, alpha_j-coroot>
    simple_roots: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    rho_tilde: Weight

    @property
    def rank(self) -> int:
        return len(self.simple_roots)

    def pair(self, x: Weight, y: Weight) -> Fraction:
        """The invariant form, evaluated in simple-root coordinates."""
        n = self.rank
        if len(x) != n or len(y) != n:
            raise ValueError(f"expected weights of rank {n}, got {len(x)} and {len(y)}")
        gy = mat_vec(self.gram, y)
        return sum(a * b for a, b in zip(x, gy))

    def coroot_pairing(self, x: Weight, i: int) -> Fraction:
        """<x, alpha_i-coroot> = 2 (x, alpha_i) / (alpha_i, alpha_i)."""
        col = [self.gram[j][i] for j in range(self.rank)]
        num = sum(a * b for a, b in zip(x, col))
        return 2 * num / self.gram[i][i]

    def inverse_cartan(self) -> Matrix:
        return inverse(self.cartan)

    def from_fundamental(self, coords: Weight) -> Weight:
        """Convert fundamental-weight coordinates to simple-root coordinates.

        If x = sum c_i omega_i then <x, alpha_j-coroot> = c_j, so the
        simple-root coordinates are (C^T)^{-1} c for the Cartan matrix C.
        """
        if len(coords) != self.rank:
            raise ValueError("coordinate length does not match rank")
        inv = inverse(tuple(zip(*self.cartan)))
        return mat_vec(inv, coords)

    def to_fundamental(self, x: Weight) -> Weight:
        return tuple(self.coroot_pairing(x, i) for i in range(self.rank))


def positive_roots_from_cartan(cartan: Matrix,
                               max_roots: int | None = None) -> list[Weight]:
    """Closure of the simple roots under root-string addition.

    Works level by level in height; beta + alpha_i is a root iff the
    alpha_i-string through beta satisfies p - <beta, alpha_i-coroot> > 0,
    where p is the largest k with beta - k alpha_i a root.  Roots come
    out in simple-root coordinates, ordered by height.
    """
    rank = len(cartan)
    simple = [tuple(Fraction(1) if j == i else Fraction(0) for j in range(rank))
              for i in range(rank)]

    def coroot_pairing(x: Weight, i: int) -> Fraction:
        return sum(x[j] * cartan[j][i] for j in range(rank))

    roots: set[Weight] = set(simple)
    level: list[Weight] = list(simple)
    all_levels = [list(simple)]
    while level:
        nxt: list[Weight] = []
        for beta in level:
            for i in range(rank):
                candidate = add(beta, simple[i])
                if candidate in roots:
                    continue
                p = 0
                probe = sub(beta, simple[i])
                while probe in roots:
                    p += 1
                    probe = sub(probe, simple[i])
                if p - coroot_pairing(beta, i) > 0:
                    roots.add(candidate)
                    nxt.append(candidate)
                    if max_roots is not None and len(roots) > max_roots:
                        raise ValueError(
                            "root closure exceeded its cap; the Cartan data is "
                            "not of finite type"
                        )
        if nxt:
            all_levels.append(nxt)
        level = nxt
    return [r for lev in all_levels for r in sorted(lev)]


def build_root_system(t: LieType | str) -> RootSystem:
    """Construct the root system of a semisimple type, exactly."""
    lie_type = LieType.parse(t) if isinstance(t, str) else t
    rank = lie_type.rank

    gram = [[Fraction(0)] * rank for _ in range(rank)]
    offset = 0
    for family, n in lie_type.components:
        block = _simple_gram(family, n)
        for i in range(n):
            for j in range(n):
                gram[offset + i][offset + j] = block[i][j]
        offset += n

    cartan = tuple(
        tuple(2 * gram[i][j] / gram[j][j] for j in range(rank)) for i in range(rank)
    )
    simple = tuple(
        tuple(Fraction(1) if j == i else Fraction(0) for j in range(rank))
        for i in range(rank)
    )
    positive = tuple(positive_roots_from_cartan(cartan))

    expected = sum(_POSITIVE_ROOT_COUNT[f](n) for f, n in lie_type.components)
    if len(positive) != expected:
        raise AssertionError(
            f"positive root closure for {lie_type} produced {len(positive)} roots, "
            f"expected {expected}"
        )

    total = zero(rank)
    for r in positive:
        total = add(total, r)
    rho_tilde = scale(Fraction(1, 2), total)

    return RootSystem(
        lie_type=lie_type,
        gram=tuple(tuple(row) for row in gram),
        cartan=cartan,
        simple_roots=simple,
        positive_roots=positive,
        rho_tilde=rho_tilde,
    )


def pair(rs: RootSystem, x: Weight, y: Weight) -> Fraction:
    return rs.pair(x, y)


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element as a reduced word and its action matrix.

    ``matrix`` acts on simple-root coordinates; ``word`` lists simple
    reflection indices, and its length is the Coxeter length.
    """

    word: tuple[int, ...]
    matrix: Matrix

    @property
    def length(self) -> int:
        return len(self.word)

    def apply(self, x: Weight) -> Weight:
        return mat_vec(self.matrix, x)


def _reflection_matrices(cartan: Matrix) -> list[Matrix]:
    rank = len(cartan)
    mats = []
    for i in range(rank):
        rows = []
        for a in range(rank):
            row = [Fraction(1) if a == b else Fraction(0) for b in range(rank)]
            if a == i:
                # s_i sends x to x - <x, alpha_i-coroot> alpha_i; only
                # coordinate i changes: x_i -> x_i - sum_j x_j C[j][i]
                row = [row[b] - cartan[b][i] for b in range(rank)]
            rows.append(tuple(row))
        mats.append(tuple(rows))
    return mats


def enumerate_reflection_group(generators: list[Matrix], rank: int,
                               max_size: int | None = None) -> list[WeylElement]:
    """Breadth-first closure of reflection generators; depth equals length."""
    ident = tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(rank))
        for i in range(rank)
    )
    seen = {ident}
    elements = [WeylElement((), ident)]
    frontier = [elements[0]]
    while frontier:
        nxt = []
        for w in frontier:
            for idx, gen in enumerate(generators):
                prod = tuple(
                    tuple(sum(w.matrix[a][c] * gen[c][b] for c in range(rank))
                          for b in range(rank))
                    for a in range(rank)
                )
                if prod in seen:
                    continue
                seen.add(prod)
                elem = WeylElement(w.word + (idx,), prod)
                elements.append(elem)
                if max_size is not None and len(elements) > max_size:
                    raise CapExceeded(
                        f"reflection group exceeds the cap of {max_size} elements"
                    )
                nxt.append(elem)
        frontier = nxt
    return elements


def weyl_group(rs: RootSystem, max_rank: int = 6,
               max_size: int | None = None) -> list[WeylElement]:
    """All Weyl group elements with correct lengths, breadth-first.

    Full enumeration only; the rank cap guards against accidentally
    asking for astronomically large groups.
    """
    if rs.rank > max_rank:
        raise CapExceeded(
            f"rank {rs.rank} exceeds the Weyl enumeration cap of {max_rank}"
        )
    return enumerate_reflection_group(_reflection_matrices(rs.cartan), rs.rank, max_size)


def weyl_dim_from_roots(positive_roots: list[Weight],
                        form, highest: Weight) -> int:
    """Weyl dimension formula over an explicit set of positive roots.

    ``form`` is the ambient invariant bilinear form.  The empty root
    system gives 1 for every weight (torus factor).
    """
    if not positive_roots:
        return 1
    rho = zero(len(positive_roots[0]))
    for a in positive_roots:
        rho = add(rho, a)
    rho = scale(Fraction(1, 2), rho)
    value = Fraction(1)
    shifted = add(highest, rho)
    for a in positive_roots:
        value *= form(shifted, a) / form(rho, a)
    if value.denominator != 1 or value <= 0:
        raise ValueError(f"Weyl dimension formula gave a non-natural value {value}")
    return int(value)


def weyl_dim(rs: RootSystem, highest: Weight) -> int:
    """Dimension of the simple module with the given highest weight."""
    for i in range(rs.rank):
        c = rs.coroot_pairing(highest, i)
        if c.denominator != 1 or c < 0:
            raise ValueError(
                f"weight {highest} is not dominant integral: "
                f"coroot pairing {c} at simple root {i + 1}"
            )
    return weyl_dim_from_roots(list(rs.positive_roots), rs.pair, highest)
