"""Dense-table finite group arithmetic.

A group lives on element ids ``0 .. order-1`` with the identity always at
id ``0``; ``mult[a, b]`` is the product and ``inv[a]`` the inverse.  All
set-level operations (subgroups, centralizers, quotients) reduce to numpy
gathers over these tables and boolean membership masks, which keeps
everything exact and brute-forceable at desk scale.

Conventions used consistently throughout the package:

* conjugation is ``x^g = g^-1 * x * g``
* commutators are ``[a, b] = a^-1 * b^-1 * a * b``
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import (
    InvalidPermutation,
    NotAGroup,
    NotCentral,
    NotNormal,
    OrderExceedsCap,
    OrderMismatch,
)

DEFAULT_ORDER_CAP = 4096

# Exhaustive associativity is O(n^3); above this order a seeded sample of
# at least SAMPLE_FACTOR * n^2 triples is checked instead.
EXHAUSTIVE_LIMIT = 256
SAMPLE_FACTOR = 10


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_power(n: int) -> tuple[int, int] | None:
    """(p, k) with n = p^k and k >= 1, or None (n = 1 included)."""
    if n < 2:
        return None
    p = smallest_prime_factor(n)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return (p, k) if n == 1 else None


def smallest_prime_factor(n: int) -> int:
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


class GroupTable:
    """A finite group as a dense multiplication table plus inverse table.

    Instances are immutable after construction; derived data (center,
    commutator subgroup, partitions) is memoised on the instance.
    """

    __slots__ = ("order", "mult", "inv", "label", "_cache")

    def __init__(self, mult, inv, label: str = ""):
        mult = np.array(mult, dtype=np.int32)
        inv = np.array(inv, dtype=np.int32)
        if mult.ndim != 2 or mult.shape[0] != mult.shape[1]:
            raise NotAGroup("multiplication table is not square")
        if inv.shape != (mult.shape[0],):
            raise NotAGroup("inverse table length does not match the order")
        mult.setflags(write=False)
        inv.setflags(write=False)
        self.order = int(mult.shape[0])
        self.mult = mult
        self.inv = inv
        self.label = label
        self._cache: dict = {}

    def relabeled(self, label: str) -> "GroupTable":
        """Same group, new report label (tables are shared, cache is not)."""
        return GroupTable(self.mult, self.inv, label=label)

    def mul(self, a: int, b: int) -> int:
        return int(self.mult[a, b])

    def inverse(self, a: int) -> int:
        return int(self.inv[a])

    def conjugate(self, x: int, g: int) -> int:
        """x^g = g^-1 * x * g."""
        m = self.mult
        return int(m[m[self.inv[g], x], g])

    def commutator(self, a: int, b: int) -> int:
        """[a, b] = a^-1 * b^-1 * a * b."""
        m = self.mult
        return int(m[m[m[self.inv[a], self.inv[b]], a], b])

    def power(self, x: int, k: int) -> int:
        if k < 0:
            return self.power(self.inverse(x), -k)
        acc = 0
        for _ in range(k):
            acc = self.mul(acc, x)
        return acc

    def element_order(self, x: int) -> int:
        """Smallest k >= 1 with x^k = identity."""
        k, y = 1, x
        while y != 0:
            y = self.mul(y, x)
            k += 1
        return k

    def elements(self) -> range:
        return range(self.order)

    def _memo(self, key, compute):
        if key not in self._cache:
            self._cache[key] = compute()
        return self._cache[key]

    def __repr__(self) -> str:
        name = self.label or "unnamed"
        return f"GroupTable({name!r}, order={self.order})"


class SubgroupSet:
    """A subgroup of a GroupTable as a boolean membership mask.

    Immutable and hashable; equality means the same owning group (by
    identity) and the same member set.  Closure is not re-verified on
    construction -- call :meth:`validate` to check the invariants.
    """

    __slots__ = ("group", "mask", "size")

    def __init__(self, group: GroupTable, mask):
        mask = np.array(mask, dtype=bool)
        if mask.shape != (group.order,):
            raise ValueError("membership mask length does not match the group order")
        mask.setflags(write=False)
        self.group = group
        self.mask = mask
        self.size = int(mask.sum())

    @classmethod
    def from_members(cls, group: GroupTable, members) -> "SubgroupSet":
        mask = np.zeros(group.order, dtype=bool)
        mask[np.asarray(list(members), dtype=np.int64)] = True
        return cls(group, mask)

    @property
    def index(self) -> int:
        return self.group.order // self.size

    def members(self) -> np.ndarray:
        return np.flatnonzero(self.mask)

    def __contains__(self, x: int) -> bool:
        return bool(self.mask[x])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SubgroupSet)
            and self.group is other.group
            and np.array_equal(self.mask, other.mask)
        )

    def __hash__(self) -> int:
        return hash((id(self.group), self.mask.tobytes()))

    def is_subset_of(self, other: "SubgroupSet") -> bool:
        return not np.any(self.mask & ~other.mask)

    def conjugate_by(self, g: int) -> "SubgroupSet":
        """g^-1 * H * g as a new SubgroupSet."""
        m = self.group.mult
        moved = m[m[self.group.inv[g], self.members()], g]
        return SubgroupSet.from_members(self.group, moved)

    def validate(self) -> None:
        """Check identity membership, closure, and Lagrange divisibility."""
        if not self.mask[0]:
            raise NotAGroup("subgroup does not contain the identity")
        mem = self.members()
        if not self.mask[self.group.mult[np.ix_(mem, mem)]].all():
            raise NotAGroup("subgroup is not closed under multiplication")
        if not self.mask[self.group.inv[mem]].all():
            raise NotAGroup("subgroup is not closed under inversion")
        if self.group.order % self.size:
            raise NotAGroup("subgroup size does not divide the group order")

    def __repr__(self) -> str:
        return f"SubgroupSet(size={self.size} of {self.group!r})"


@dataclass
class QuotientGroup:
    """A quotient G/N: its own GroupTable plus the projection data.

    ``projection[a]`` is the quotient id of the coset a*N; ``coset_reps[q]``
    is the smallest parent element in coset q (so rep 0 is the identity).
    """

    table: GroupTable
    projection: np.ndarray
    kernel: SubgroupSet
    coset_reps: np.ndarray


def validate_group_table(G: GroupTable, *, exhaustive: bool | None = None, seed: int = 0) -> None:
    """Check the four group axioms on the dense tables.

    Identity, inverses, and the Latin-square property are always checked in
    full.  Associativity is exhaustive (O(n^3)) up to ``EXHAUSTIVE_LIMIT``
    elements or when ``exhaustive=True``; above that a seeded sample of
    ``SAMPLE_FACTOR * n^2`` triples is used.  Raises :class:`NotAGroup`
    carrying the first offending witness.
    """
    n, m = G.order, G.mult
    ar = np.arange(n, dtype=np.int32)
    if n == 0:
        raise NotAGroup("empty table")
    if m.min() < 0 or m.max() >= n:
        raise NotAGroup("table entry out of range")
    if not np.array_equal(m[0], ar):
        raise NotAGroup("row 0 is not the identity row")
    if not np.array_equal(m[:, 0], ar):
        raise NotAGroup("column 0 is not the identity column")
    if G.inv.min() < 0 or G.inv.max() >= n:
        raise NotAGroup("inverse table entry out of range")
    bad = np.flatnonzero(m[ar, G.inv] != 0)
    if bad.size:
        raise NotAGroup("right inverse fails", int(bad[0]))
    bad = np.flatnonzero(m[G.inv, ar] != 0)
    if bad.size:
        raise NotAGroup("left inverse fails", int(bad[0]))
    sorted_rows = np.sort(m, axis=1)
    bad = np.flatnonzero(~(sorted_rows == ar).all(axis=1))
    if bad.size:
        raise NotAGroup("row is not a permutation", int(bad[0]))
    sorted_cols = np.sort(m.T, axis=1)
    bad = np.flatnonzero(~(sorted_cols == ar).all(axis=1))
    if bad.size:
        raise NotAGroup("column is not a permutation", int(bad[0]))
    if exhaustive is None:
        exhaustive = n <= EXHAUSTIVE_LIMIT
    if exhaustive:
        for a in range(n):
            left = m[m[a]]      # [b, c] -> (a*b)*c
            right = m[a][m]     # [b, c] -> a*(b*c)
            if not np.array_equal(left, right):
                b, c = np.argwhere(left != right)[0]
                raise NotAGroup("associativity fails", (a, int(b), int(c)))
    else:
        rng = np.random.default_rng(seed)
        k = SAMPLE_FACTOR * n * n
        a, b, c = rng.integers(0, n, size=(3, k), dtype=np.int64)
        bad = np.flatnonzero(m[m[a, b], c] != m[a, m[b, c]])
        if bad.size:
            i = int(bad[0])
            raise NotAGroup("associativity fails", (int(a[i]), int(b[i]), int(c[i])))


def from_multiplication_table(rows, label: str = "", *, exhaustive: bool | None = None,
                              seed: int = 0) -> GroupTable:
    """Build a validated GroupTable from a raw square table of element ids.

    The identity need not be at index 0 in the input; the group is relabeled
    so that it is.  Raises :class:`NotAGroup` with the first witness of any
    failed axiom.
    """
    arr = np.asarray(rows, dtype=np.int64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NotAGroup("table is not square")
    n = arr.shape[0]
    if n == 0:
        raise NotAGroup("empty table")
    if arr.min() < 0 or arr.max() >= n:
        raise NotAGroup("table entry out of range")
    ar = np.arange(n)
    idents = [e for e in range(n)
              if np.array_equal(arr[e], ar) and np.array_equal(arr[:, e], ar)]
    if not idents:
        raise NotAGroup("no two-sided identity element")
    e = idents[0]
    if e != 0:
        p = ar.copy()
        p[[0, e]] = [e, 0]
        arr = p[arr[np.ix_(p, p)]]
    zeros = arr == 0
    bad = np.flatnonzero(zeros.sum(axis=1) != 1)
    if bad.size:
        raise NotAGroup("row has no unique inverse", int(bad[0]))
    inv = np.argmax(zeros, axis=1)
    bad = np.flatnonzero(arr[inv, ar] != 0)
    if bad.size:
        raise NotAGroup("left and right inverses disagree", int(bad[0]))
    G = GroupTable(arr, inv, label=label)
    validate_group_table(G, exhaustive=exhaustive, seed=seed)
    return G


def from_permutation_generators(gens, label: str = "", *, cap: int = DEFAULT_ORDER_CAP,
                                exhaustive: bool | None = None, seed: int = 0) -> GroupTable:
    """Enumerate the permutation group generated by ``gens`` as a GroupTable.

    Each generator must be a bijection of ``0..m-1`` given as a sequence of
    images; products compose right-to-left, ``(p*q)(i) = p[q[i]]``.  Element
    ids follow breadth-first discovery order with the identity first.
    """
    perms: list[tuple[int, ...]] = []
    degree = None
    for g in gens:
        t = tuple(int(v) for v in g)
        if degree is None:
            degree = len(t)
        if len(t) != degree or sorted(t) != list(range(degree)):
            raise InvalidPermutation(f"not a bijection of 0..{degree - 1}: {t}")
        perms.append(t)
    if degree is None:
        degree = 0
    ident = tuple(range(degree))
    index = {ident: 0}
    elems = [ident]
    queue = [ident]
    while queue:
        x = queue.pop(0)
        for g in perms:
            y = tuple(x[v] for v in g)
            if y not in index:
                if len(elems) >= cap:
                    raise OrderExceedsCap(f"permutation closure exceeds cap {cap}")
                index[y] = len(elems)
                elems.append(y)
                queue.append(y)
    n = len(elems)
    mult = np.empty((n, n), dtype=np.int32)
    for i, p in enumerate(elems):
        for j, q in enumerate(elems):
            mult[i, j] = index[tuple(p[v] for v in q)]
    inv = np.empty(n, dtype=np.int32)
    for i, p in enumerate(elems):
        pinv = [0] * degree
        for a, b in enumerate(p):
            pinv[b] = a
        inv[i] = index[tuple(pinv)]
    G = GroupTable(mult, inv, label=label)
    validate_group_table(G, exhaustive=exhaustive, seed=seed)
    return G


def read_cayley_table(path, label: str | None = None, *, exhaustive: bool | None = None,
                      seed: int = 0) -> GroupTable:
    """Load the plain-text Cayley format: first the order n, then n*n ids.

    ``#`` starts a comment.  The identity may sit at any index in the file;
    the loaded group is relabeled so it lands at id 0.
    """
    path = Path(path)
    tokens: list[int] = []
    for line in path.read_text().splitlines():
        line = line.split("#", 1)[0]
        tokens.extend(int(tok) for tok in line.split())
    if not tokens:
        raise NotAGroup(f"{path}: no data")
    n = tokens[0]
    if n < 1 or len(tokens) != 1 + n * n:
        raise NotAGroup(f"{path}: expected {n}*{n} entries after the order, got {len(tokens) - 1}")
    rows = np.array(tokens[1:], dtype=np.int64).reshape(n, n)
    return from_multiplication_table(rows, label=label or path.name,
                                     exhaustive=exhaustive, seed=seed)


def write_cayley_table(G: GroupTable, path) -> None:
    """Write the canonical (identity at id 0) Cayley text format."""
    lines = [str(G.order)]
    lines.extend(" ".join(str(int(v)) for v in row) for row in G.mult)
    Path(path).write_text("\n".join(lines) + "\n")


def subgroup_generated(G: GroupTable, gens) -> SubgroupSet:
    """Smallest subgroup containing ``gens`` (empty set gives the trivial one)."""
    garr = np.unique(np.asarray(list(gens), dtype=np.int64))
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    if garr.size == 0:
        return SubgroupSet(G, mask)
    if garr.min() < 0 or garr.max() >= G.order:
        raise ValueError("generator id out of range")
    frontier = np.array([0], dtype=np.int64)
    while frontier.size:
        prods = np.unique(G.mult[np.ix_(frontier, garr)])
        new = prods[~mask[prods]]
        mask[new] = True
        frontier = new
    return SubgroupSet(G, mask)


def commuting_table(G: GroupTable) -> np.ndarray:
    """Boolean matrix with entry [x, g] true iff x*g = g*x.

    Row x is exactly the membership mask of the centralizer of x.
    """
    return G._memo("commuting", lambda: G.mult == G.mult.T)


def center(G: GroupTable) -> SubgroupSet:
    return G._memo("center", lambda: SubgroupSet(G, commuting_table(G).all(axis=1)))


def centralizer(G: GroupTable, x: int) -> SubgroupSet:
    """All elements commuting with x; contains <x> and the center."""
    return SubgroupSet(G, commuting_table(G)[x])


def normalizer(G: GroupTable, H: SubgroupSet) -> SubgroupSet:
    """All g with g^-1 * H * g = H; contains H."""
    if H.group is not G:
        raise ValueError("subgroup belongs to a different group")
    mem = H.members()
    ar = np.arange(G.order)
    moved = G.mult[G.mult[np.ix_(G.inv, mem)], ar[:, None]]   # [g, i] = g^-1 * m_i * g
    return SubgroupSet(G, H.mask[moved].all(axis=1))


def commutator_values(G: GroupTable) -> np.ndarray:
    """Matrix of all commutators: entry [a, b] is the id of [a, b]."""
    def compute():
        m, ar = G.mult, np.arange(G.order)
        t = m[np.ix_(G.inv, G.inv)]        # a^-1 * b^-1
        t = m[t, ar[:, None]]              # ... * a
        return m[t, ar[None, :]]           # ... * b
    return G._memo("commutator_values", compute)


def commutator_subgroup(G: GroupTable) -> SubgroupSet:
    """Subgroup generated by all commutators [a, b]."""
    return G._memo(
        "derived",
        lambda: subgroup_generated(G, np.unique(commutator_values(G))),
    )


def quotient(G: GroupTable, N: SubgroupSet) -> QuotientGroup:
    """Coset group G/N; raises :class:`NotNormal` with a witness pair."""
    if N.group is not G:
        raise ValueError("subgroup belongs to a different group")
    mem = N.members()
    ar = np.arange(G.order)
    moved = G.mult[G.mult[np.ix_(G.inv, mem)], ar[:, None]]
    inside = N.mask[moved].all(axis=1)
    if not inside.all():
        g = int(np.flatnonzero(~inside)[0])
        h = int(mem[int(np.argmin(N.mask[moved[g]]))])
        raise NotNormal(f"not normal: {g}^-1 * {h} * {g} leaves the subgroup", (g, h))
    coset_min = G.mult[:, mem].min(axis=1)
    reps = np.unique(coset_min)
    proj = np.searchsorted(reps, coset_min).astype(np.int32)
    qmult = proj[G.mult[np.ix_(reps, reps)]]
    qinv = proj[G.inv[reps]]
    label = f"{G.label}/{N.size}" if G.label else f"G/{N.size}"
    table = GroupTable(qmult, qinv, label=label)
    return QuotientGroup(table=table, projection=proj, kernel=N,
                         coset_reps=reps.astype(np.int32))


def central_quotient(G: GroupTable) -> QuotientGroup:
    """G/Z(G), memoised."""
    return G._memo("central_quotient", lambda: quotient(G, center(G)))


def is_abelian(G: GroupTable) -> bool:
    return G._memo("abelian", lambda: bool(np.array_equal(G.mult, G.mult.T)))


def element_orders(G: GroupTable) -> np.ndarray:
    """Vector of element orders, computed by iterated powering."""
    def compute():
        n = G.order
        ar = np.arange(n)
        orders = np.zeros(n, dtype=np.int64)
        acc = ar.copy()
        k = 1
        while True:
            fresh = (acc == 0) & (orders == 0)
            orders[fresh] = k
            if orders.all():
                return orders
            acc = G.mult[acc, ar]
            k += 1
    return G._memo("element_orders", compute)


def is_elementary_abelian(G: GroupTable) -> int | None:
    """The prime p when G is abelian with all non-identity orders p, else None.

    The trivial group returns None by convention.
    """
    if G.order == 1 or not is_abelian(G):
        return None
    distinct = np.unique(element_orders(G)[1:])
    if distinct.size != 1:
        return None
    p = int(distinct[0])
    return p if is_prime(p) else None


def direct_product(G: GroupTable, H: GroupTable, *, cap: int = DEFAULT_ORDER_CAP) -> GroupTable:
    """Componentwise product; pair (g, h) gets id g*|H| + h."""
    n = G.order * H.order
    if n > cap:
        raise OrderExceedsCap(f"direct product order {n} exceeds cap {cap}")
    mg = G.mult.astype(np.int64)
    mult = (mg[:, None, :, None] * H.order + H.mult[None, :, None, :]).reshape(n, n)
    inv = (G.inv.astype(np.int64)[:, None] * H.order + H.inv[None, :]).reshape(n)
    label = f"{G.label}x{H.label}" if G.label and H.label else ""
    return GroupTable(mult, inv, label=label)


def central_product(G: GroupTable, H: GroupTable, zg: int, zh: int, *,
                    cap: int = DEFAULT_ORDER_CAP) -> GroupTable:
    """(G x H) / <(zg, zh^-1)> for central zg, zh of one prime order p.

    The result has order |G|*|H|/p and amalgamates the two chosen central
    subgroups.
    """
    if zg not in center(G):
        raise NotCentral(f"element {zg} is not central in {G.label or 'G'}")
    if zh not in center(H):
        raise NotCentral(f"element {zh} is not central in {H.label or 'H'}")
    og, oh = G.element_order(zg), H.element_order(zh)
    if og != oh:
        raise OrderMismatch(f"central element orders differ: {og} vs {oh}")
    if not is_prime(og):
        raise OrderMismatch(f"amalgamated order {og} is not prime")
    n = G.order * H.order // og
    if n > cap:
        raise OrderExceedsCap(f"central product order {n} exceeds cap {cap}")
    P = direct_product(G, H, cap=G.order * H.order)
    d = zg * H.order + int(H.inv[zh])
    D = subgroup_generated(P, [d])
    table = quotient(P, D).table
    label = f"{G.label}o{H.label}" if G.label and H.label else ""
    return table.relabeled(label)


def are_subgroups_conjugate(G: GroupTable, H: SubgroupSet, K: SubgroupSet) -> int | None:
    """Some g with g^-1 * H * g = K, or None.  Scans g in ascending id order."""
    if H.group is not G or K.group is not G:
        raise ValueError("subgroups belong to a different group")
    if H.size != K.size:
        return None
    mem = H.members()
    ar = np.arange(G.order)
    moved = G.mult[G.mult[np.ix_(G.inv, mem)], ar[:, None]]
    hits = np.flatnonzero(K.mask[moved].all(axis=1))
    return int(hits[0]) if hits.size else None
