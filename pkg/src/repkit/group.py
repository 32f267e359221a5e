"""Finite groups given by Cayley tables, with subgroups, cosets, quotients and homomorphisms.

Elements are the indices ``0 .. n-1``; ``labels`` only matter for I/O.
``table[i][j]`` is the index of the product ``i * j``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import GroupAxiomError, HomomorphismError, SubgroupError

MAX_ORDER = 120


class FiniteGroup:
    """A validated finite group.

    Build through :func:`validate_group` or the constructors below; pass
    ``check=False`` only for tables already known to be groups.
    """

    def __init__(
        self,
        labels: Sequence[str],
        table: Sequence[Sequence[int]],
        identity: int = 0,
        name: str = "G",
        *,
        check: bool = True,
        permutations: Sequence[tuple[int, ...]] | None = None,
    ):
        self.labels = tuple(str(x) for x in labels)
        self.table = tuple(tuple(int(v) for v in row) for row in table)
        self.identity = int(identity)
        self.name = name
        self.permutations = tuple(permutations) if permutations is not None else None
        if check:
            _check_axioms(self.labels, self.table, self.identity)
        e = self.identity
        self.inverses = tuple(row.index(e) for row in self.table)
        self._index = {lab: i for i, lab in enumerate(self.labels)}

    @property
    def order(self) -> int:
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(range(len(self.labels)))

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.labels == other.labels and self.table == other.table and self.identity == other.identity

    def __hash__(self):
        return hash((self.labels, self.table, self.identity))

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverses[a], -k
        result = self.identity
        for _ in range(k):
            result = self.table[result][a]
        return result

    def conjugate(self, x: int, w: int) -> int:
        """w x w^-1."""
        return self.table[self.table[w][x]][self.inverses[w]]

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown element label {label!r}") from None

    def label(self, i: int) -> str:
        return self.labels[i]

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        n = self.order
        return all(t[a][b] == t[b][a] for a in range(n) for b in range(a + 1, n))

    @cached_property
    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        return conjugacy_classes(self)

    @cached_property
    def class_index(self) -> tuple[int, ...]:
        out = [0] * self.order
        for k, cls in enumerate(self.conjugacy_classes):
            for x in cls:
                out[x] = k
        return tuple(out)

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        return element_order_and_exponent(self)[0]

    @cached_property
    def exponent(self) -> int:
        return element_order_and_exponent(self)[1]

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """A generating set chosen greedily in index order."""
        gens: list[int] = []
        closure = {self.identity}
        for x in range(self.order):
            if x not in closure:
                gens.append(x)
                closure = set(subgroup_closure(self, gens).elements)
        return tuple(gens)

    def subgroup(self, elements: Iterable[int], name: str | None = None) -> "FiniteGroup":
        """The subgroup on ``elements`` as a group in its own right.

        Element ``k`` of the result is ``sorted(elements)[k]`` of this group.
        """
        elems = sorted(set(elements))
        check_subgroup(self, elems)
        pos = {x: k for k, x in enumerate(elems)}
        table = [[pos[self.table[a][b]] for b in elems] for a in elems]
        perms = [self.permutations[x] for x in elems] if self.permutations is not None else None
        return FiniteGroup(
            [self.labels[x] for x in elems],
            table,
            pos[self.identity],
            name or f"subgroup of {self.name}",
            check=False,
            permutations=perms,
        )


def _check_axioms(labels: tuple, table: tuple, e: int) -> None:
    n = len(labels)
    if n == 0:
        raise GroupAxiomError("shape", "a group needs at least one element")
    if len(set(labels)) != n:
        raise GroupAxiomError("shape", "element labels are not distinct")
    if len(table) != n or any(len(row) != n for row in table):
        raise GroupAxiomError("shape", f"table must be {n}x{n}")
    for i, row in enumerate(table):
        for j, v in enumerate(row):
            if not 0 <= v < n:
                raise GroupAxiomError("shape", f"table entry ({i}, {j}) out of range", (i, j))
    if not 0 <= e < n:
        raise GroupAxiomError("identity", "identity index out of range")
    for x in range(n):
        if table[e][x] != x or table[x][e] != x:
            raise GroupAxiomError(
                "identity", f"{labels[e]} is not a two-sided identity: fails at {labels[x]}", (x,)
            )
    for a in range(n):
        ra = table[a]
        for b in range(n):
            ab = ra[b]
            rab = table[ab]
            rb = table[b]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    raise GroupAxiomError(
                        "associativity",
                        f"associativity fails for ({labels[a]}, {labels[b]}, {labels[c]})",
                        (a, b, c),
                    )
    full = set(range(n))
    for i, row in enumerate(table):
        if set(row) != full:
            raise GroupAxiomError("row_permutation", f"row {labels[i]} is not a permutation", (i,))
    for j in range(n):
        if {table[i][j] for i in range(n)} != full:
            raise GroupAxiomError("column_permutation", f"column {labels[j]} is not a permutation", (j,))
    for x in range(n):
        y = table[x].index(e)
        if table[y][x] != e:
            raise GroupAxiomError("inverse", f"{labels[x]} has no two-sided inverse", (x,))


def validate_group(
    labels: Sequence[str], table: Sequence[Sequence[int]], identity: int | str = 0, name: str = "G"
) -> FiniteGroup:
    """Check every group axiom; raise :class:`GroupAxiomError` naming the first failure."""
    if isinstance(identity, str):
        if identity not in labels:
            raise GroupAxiomError("identity", f"identity label {identity!r} is not an element")
        identity = list(labels).index(identity)
    return FiniteGroup(labels, table, identity, name)


def conjugacy_classes(G: FiniteGroup) -> tuple[tuple[int, ...], ...]:
    """Classes sorted internally and ordered by their least element."""
    seen = [False] * G.order
    classes = []
    for x in range(G.order):
        if seen[x]:
            continue
        cls = sorted({G.conjugate(x, w) for w in range(G.order)})
        for y in cls:
            seen[y] = True
        classes.append(tuple(cls))
    return tuple(classes)


class Closure(NamedTuple):
    elements: tuple[int, ...]
    is_normal: bool


def _is_normal(G: FiniteGroup, H: Iterable[int]) -> bool:
    hs = set(H)
    return all(G.conjugate(h, x) in hs for h in hs for x in range(G.order))


def subgroup_closure(G: FiniteGroup, generators: Iterable[int]) -> Closure:
    elems = {G.identity}
    frontier = [G.identity]
    gens = list(generators)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = G.mul(a, g)
                if b not in elems:
                    elems.add(b)
                    nxt.append(b)
        frontier = nxt
    return Closure(tuple(sorted(elems)), _is_normal(G, elems))


def check_subgroup(G: FiniteGroup, H: Iterable[int]) -> None:
    hs = set(H)
    if not hs:
        raise SubgroupError("a subgroup is never empty")
    if any(not 0 <= h < G.order for h in hs):
        raise SubgroupError("subgroup element out of range")
    if G.identity not in hs:
        raise SubgroupError("subgroup does not contain the identity")
    for a in hs:
        if G.inv(a) not in hs:
            raise SubgroupError(f"inverse of {G.labels[a]} missing from subgroup")
        for b in hs:
            if G.mul(a, b) not in hs:
                raise SubgroupError(f"product {G.labels[a]}*{G.labels[b]} leaves the subgroup")


def is_normal(G: FiniteGroup, H: Iterable[int]) -> bool:
    check_subgroup(G, H)
    return _is_normal(G, H)


@dataclass(frozen=True)
class GroupAction:
    """Left action of a group on ``range(size)``: ``perms[x][a]`` is x . a."""

    group: FiniteGroup
    size: int
    perms: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        G = self.group
        if len(self.perms) != G.order:
            raise HomomorphismError("one permutation per group element is required")
        pts = set(range(self.size))
        for x, p in enumerate(self.perms):
            if len(p) != self.size or set(p) != pts:
                raise HomomorphismError(f"image of {G.labels[x]} is not a permutation", (x,))
        if self.perms[G.identity] != tuple(range(self.size)):
            raise HomomorphismError("identity does not act trivially", (G.identity,))
        for x in range(G.order):
            px = self.perms[x]
            for y in range(G.order):
                py, pxy = self.perms[y], self.perms[G.mul(x, y)]
                if any(pxy[a] != px[py[a]] for a in range(self.size)):
                    raise HomomorphismError(
                        f"action law fails for ({G.labels[x]}, {G.labels[y]})", (x, y)
                    )

    def fixed_points(self, x: int) -> int:
        return sum(1 for a, b in enumerate(self.perms[x]) if a == b)


class CosetData(NamedTuple):
    cosets: tuple[tuple[int, ...], ...]
    transversal: tuple[int, ...]
    action: GroupAction


def cosets_and_action(G: FiniteGroup, H: Iterable[int]) -> CosetData:
    """Left cosets xH (ordered by least element), their least elements, and G acting on them."""
    hs = sorted(set(H))
    check_subgroup(G, hs)
    where = [-1] * G.order
    cosets = []
    for x in range(G.order):
        if where[x] >= 0:
            continue
        c = tuple(sorted(G.mul(x, h) for h in hs))
        for y in c:
            where[y] = len(cosets)
        cosets.append(c)
    transversal = tuple(c[0] for c in cosets)
    perms = tuple(tuple(where[G.mul(g, r)] for r in transversal) for g in range(G.order))
    return CosetData(tuple(cosets), transversal, GroupAction(G, len(cosets), perms))


@dataclass(frozen=True)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    mapping: tuple[int, ...]

    def __post_init__(self):
        G1, G2, phi = self.source, self.target, self.mapping
        if len(phi) != G1.order or any(not 0 <= v < G2.order for v in phi):
            raise HomomorphismError("map must send every source element to a target index")
        if phi[G1.identity] != G2.identity:
            raise HomomorphismError("identity is not sent to the identity", (G1.identity,))
        for x in range(G1.order):
            for y in range(G1.order):
                if phi[G1.mul(x, y)] != G2.mul(phi[x], phi[y]):
                    raise HomomorphismError(
                        f"phi({G1.labels[x]}*{G1.labels[y]}) != phi({G1.labels[x]})*phi({G1.labels[y]})",
                        (x, y),
                    )

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def kernel(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.source.order) if self.mapping[x] == self.target.identity)

    def image(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.mapping)))

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == self.source.order


def hom_kernel_image(phi: GroupHom) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return phi.kernel(), phi.image()


def quotient_group(G: FiniteGroup, N: Iterable[int]) -> tuple[FiniteGroup, GroupHom]:
    """G/N with labels ``[rep]`` and the projection G -> G/N."""
    ns = sorted(set(N))
    check_subgroup(G, ns)
    if not _is_normal(G, ns):
        raise SubgroupError("quotient needs a normal subgroup")
    data = cosets_and_action(G, ns)
    where = {}
    for k, c in enumerate(data.cosets):
        for x in c:
            where[x] = k
    reps = data.transversal
    table = [[where[G.mul(a, b)] for b in reps] for a in reps]
    labels = ["[" + G.labels[r] + "]" for r in reps]
    Q = FiniteGroup(labels, table, where[G.identity], f"{G.name}/N", check=False)
    proj = GroupHom(G, Q, tuple(where[x] for x in range(G.order)))
    return Q, proj


def element_order_and_exponent(G: FiniteGroup) -> tuple[tuple[int, ...], int]:
    orders = []
    for x in range(G.order):
        k, y = 1, x
        while y != G.identity:
            y = G.mul(y, x)
            k += 1
        orders.append(k)
    return tuple(orders), math.lcm(*orders)


# ---------------------------------------------------------------------------
# constructors


def _check_size(n: int) -> None:
    if n > MAX_ORDER:
        raise ValueError(f"groups of order > {MAX_ORDER} are not supported")


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group order must be >= 1")
    _check_size(n)
    labels = ["e"] + ["g" if k == 1 else f"g^{k}" for k in range(1, n)]
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(labels, table, 0, f"Z{n}", check=False)


def cycle_notation(perm: Sequence[int]) -> str:
    """1-based cycle notation; the identity is ``()``."""
    seen = set()
    parts = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        j = perm[start]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = perm[j]
        parts.append("(" + " ".join(str(k + 1) for k in cyc) + ")")
    return "".join(parts) or "()"


def permutation_sign(perm: Sequence[int]) -> int:
    seen = set()
    sign = 1
    for start in range(len(perm)):
        if start in seen:
            continue
        length = 0
        j = start
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def symmetric(n: int) -> FiniteGroup:
    """S_n on points 0..n-1, elements in lexicographic order, (s t)(i) = s(t(i))."""
    if not 1 <= n <= 5:
        raise ValueError("symmetric(n) is limited to 1 <= n <= 5")
    perms = list(itertools.permutations(range(n)))
    pos = {p: k for k, p in enumerate(perms)}
    table = [[pos[tuple(s[t[i]] for i in range(n))] for t in perms] for s in perms]
    return FiniteGroup([cycle_notation(p) for p in perms], table, 0, f"S{n}", check=False, permutations=perms)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon: r^k s^m with s r s = r^-1, order 2n."""
    if n < 1:
        raise ValueError("dihedral(n) needs n >= 1")
    _check_size(2 * n)
    elems = [(k, m) for m in range(2) for k in range(n)]
    pos = {x: i for i, x in enumerate(elems)}

    def mul(a, b):
        (k1, m1), (k2, m2) = a, b
        return ((k1 + (-k2 if m1 else k2)) % n, (m1 + m2) % 2)

    def lab(k, m):
        r = "" if k == 0 else ("r" if k == 1 else f"r^{k}")
        s = "s" if m else ""
        return (r + s) or "e"

    table = [[pos[mul(a, b)] for b in elems] for a in elems]
    return FiniteGroup([lab(*x) for x in elems], table, 0, f"D{n}", check=False)


def product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    _check_size(G.order * H.order)
    pairs = [(a, b) for a in range(G.order) for b in range(H.order)]
    pos = {p: i for i, p in enumerate(pairs)}
    table = [[pos[(G.mul(a, c), H.mul(b, d))] for (c, d) in pairs] for (a, b) in pairs]
    labels = [f"({G.labels[a]},{H.labels[b]})" for a, b in pairs]
    return FiniteGroup(labels, table, pos[(G.identity, H.identity)], f"{G.name}x{H.name}", check=False)


def constructors(spec: str, *args) -> FiniteGroup:
    if spec == "cyclic":
        return cyclic(*args)
    if spec == "symmetric":
        return symmetric(*args)
    if spec == "product":
        return product(*args)
    if spec == "dihedral":
        return dihedral(*args)
    raise ValueError(f"unknown group constructor {spec!r}")
