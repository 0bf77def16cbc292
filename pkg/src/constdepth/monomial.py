"""Monomials as exponent tuples and monomial ideals as canonical generator lists.

A monomial ``x1^a1 * ... * xn^an`` is stored as the tuple ``(a1, ..., an)``.
Python integers are unbounded, so large powers never overflow.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from typing import Iterable, Optional, Sequence, Tuple

from .errors import DimensionMismatch

ExponentVector = Tuple[int, ...]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    q = 3
    while q * q <= p:
        if p % q == 0:
            return False
        q += 2
    return True


@dataclass(frozen=True)
class Field:
    """Coefficient field: the rationals (``p is None``) or GF(p)."""

    p: Optional[int] = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"field characteristic {self.p} is not prime")

    @classmethod
    def parse(cls, text: str) -> "Field":
        text = text.strip().lower()
        if text in ("rational", "rationals", "qq", "q"):
            return cls()
        if text.startswith("fp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise ValueError(f"bad field spec {text!r}") from None
            return cls(p)
        raise ValueError(f"bad field spec {text!r}; expected 'rational' or 'fp:<p>'")

    def __str__(self):
        return "rational" if self.p is None else f"fp:{self.p}"


QQ = Field()


@dataclass(frozen=True)
class PolyContext:
    nvars: int
    field: Field = QQ

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("nvars must be >= 1")


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Sequence[int], b: Sequence[int]) -> ExponentVector:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mul(a: Sequence[int], b: Sequence[int]) -> ExponentVector:
    return tuple(x + y for x, y in zip(a, b))


def degree(a: Sequence[int]) -> int:
    return sum(a)


def _check_vector(v, n) -> ExponentVector:
    v = tuple(int(x) for x in v)
    if len(v) != n:
        raise DimensionMismatch(f"exponent vector {v} has length {len(v)}, expected {n}")
    if any(x < 0 for x in v):
        raise ValueError(f"negative exponent in {v}")
    return v


def _minimal(gens: Iterable[ExponentVector]) -> Tuple[ExponentVector, ...]:
    # Sorting by degree first means a divisor is always seen before its multiples.
    cands = sorted(set(gens), key=lambda g: (sum(g), g))
    kept = []
    for g in cands:
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(sorted(kept, reverse=True))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal given by its minimal generators, sorted greatest first in
    lex order (x1 > x2 > ... > xn).

    The zero ideal has no generators; the unit ideal has the single zero vector.
    Build instances with :func:`minimalize` or :meth:`from_gens`; the raw
    constructor trusts its input.
    """

    context: PolyContext
    gens: Tuple[ExponentVector, ...] = dc_field(default=())

    @classmethod
    def from_gens(cls, gens, nvars=None, field: Field = QQ) -> "MonomialIdeal":
        gens = list(gens)
        if nvars is None:
            if not gens:
                raise ValueError("nvars required for an empty generator list")
            nvars = len(gens[0])
        return minimalize(gens, PolyContext(nvars, field))

    @property
    def nvars(self) -> int:
        return self.context.nvars

    @property
    def field(self) -> Field:
        return self.context.field

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    @property
    def is_squarefree(self) -> bool:
        return all(x <= 1 for g in self.gens for x in g)

    def degrees(self):
        return [sum(g) for g in self.gens]

    @property
    def is_equigenerated(self) -> bool:
        return len(set(self.degrees())) <= 1

    def with_field(self, field: Field) -> "MonomialIdeal":
        return MonomialIdeal(PolyContext(self.nvars, field), self.gens)

    def __contains__(self, m) -> bool:
        return contains(self, m)

    def __len__(self):
        return len(self.gens)

    def __str__(self):
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(monomial_str(g) for g in self.gens) + ")"


def monomial_str(a: Sequence[int]) -> str:
    parts = []
    for i, e in enumerate(a, start=1):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) if parts else "1"


def minimalize(gens: Iterable[Sequence[int]], ctx: PolyContext) -> MonomialIdeal:
    vecs = [_check_vector(g, ctx.nvars) for g in gens]
    return MonomialIdeal(ctx, _minimal(vecs))


def unit_ideal(ctx: PolyContext) -> MonomialIdeal:
    return MonomialIdeal(ctx, ((0,) * ctx.nvars,))


def maximal_ideal(nvars: int, field: Field = QQ) -> MonomialIdeal:
    n = nvars
    return minimalize([tuple(int(i == j) for j in range(n)) for i in range(n)], PolyContext(n, field))


def _same_context(I: MonomialIdeal, J: MonomialIdeal):
    if I.nvars != J.nvars:
        raise DimensionMismatch(f"ideals live in {I.nvars} and {J.nvars} variables")


def product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same_context(I, J)
    return MonomialIdeal(I.context, _minimal(mul(a, b) for a in I.gens for b in J.gens))


def power(I: MonomialIdeal, k: int) -> MonomialIdeal:
    if k < 0:
        raise ValueError("power exponent must be >= 0")
    if k == 0:
        return unit_ideal(I.context)
    n = I.nvars
    prods = []
    for combo in itertools.combinations_with_replacement(I.gens, k):
        prods.append(tuple(sum(c[j] for c in combo) for j in range(n)))
    return MonomialIdeal(I.context, _minimal(prods))


def contains(I: MonomialIdeal, m: Sequence[int]) -> bool:
    if len(m) != I.nvars:
        raise DimensionMismatch(f"monomial {tuple(m)} not in {I.nvars} variables")
    return any(divides(g, m) for g in I.gens)


def colon(I: MonomialIdeal, p: Sequence[int]) -> MonomialIdeal:
    """The ideal quotient I : x^p."""
    return MonomialIdeal(I.context, _minimal(tuple(max(a - b, 0) for a, b in zip(g, p)) for g in I.gens))


def add_generator(I: MonomialIdeal, p: Sequence[int]) -> MonomialIdeal:
    return MonomialIdeal(I.context, _minimal(list(I.gens) + [tuple(p)]))


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 1..nvertices."""

    nvertices: int
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= self.nvertices and 1 <= v <= self.nvertices):
                raise ValueError(f"edge {(u, v)} out of range")
            key = frozenset((u, v))
            if key in seen:
                raise ValueError(f"duplicate edge {(u, v)}")
            seen.add(key)

    def components(self):
        parent = list(range(self.nvertices + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            parent[find(u)] = find(v)
        groups = {}
        for v in range(1, self.nvertices + 1):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())


def edge_ideal(G: Graph, field: Field = QQ) -> MonomialIdeal:
    n = G.nvertices
    gens = []
    for u, v in G.edges:
        a = [0] * n
        a[u - 1] = a[v - 1] = 1
        gens.append(a)
    return minimalize(gens, PolyContext(n, field))
