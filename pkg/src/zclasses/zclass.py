"""Partitions of a group by conjugacy of centralizers.

Two elements are equivalent when their centralizers are conjugate
subgroups; the resulting classes, their sizes, the orbit-size identity
predicting those sizes, and conjugate type vectors are all computed by
exhaustive search over the dense tables.  The ``verify_*`` functions turn
each statement under test into a checkable :class:`TheoremReport` on one
concrete group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .construct import frattini_subgroup
from .core import (
    DEFAULT_ORDER_CAP,
    GroupTable,
    SubgroupSet,
    are_subgroups_conjugate,
    center,
    central_quotient,
    centralizer,
    commutator_subgroup,
    commuting_table,
    is_abelian,
    is_elementary_abelian,
    is_prime,
    normalizer,
    prime_power,
    quotient,
    subgroup_generated,
)
from .errors import AbelianGroup, NotPGroup, NotPrimePowerIndex, PreconditionViolated


@dataclass
class ZClass:
    """One class of the partition: members, smallest member, its centralizer."""

    members: np.ndarray
    representative: int
    centralizer: SubgroupSet

    @property
    def size(self) -> int:
        return int(self.members.size)


class ZClassPartition:
    """Partition of a group's elements into classes of conjugate centralizers.

    Classes are ordered by (and represented by) their smallest member, so the
    class containing the identity -- which is exactly the center -- comes
    first.
    """

    def __init__(self, group: GroupTable, classes: list[ZClass]):
        self.group = group
        self.classes = classes
        lookup = np.empty(group.order, dtype=np.int32)
        for i, cls in enumerate(classes):
            lookup[cls.members] = i
        self._lookup = lookup

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def class_index_of(self, x: int) -> int:
        return int(self._lookup[x])

    def class_of(self, x: int) -> ZClass:
        return self.classes[self.class_index_of(x)]

    def sizes(self) -> list[int]:
        return [cls.size for cls in self.classes]

    def __repr__(self) -> str:
        return f"ZClassPartition({self.group!r}, {self.num_classes} classes)"


def strict_fixed_set(G: GroupTable, x: int) -> np.ndarray:
    """All y whose centralizer equals that of x, as a sorted id array."""
    cm = commuting_table(G)
    return np.flatnonzero((cm == cm[x]).all(axis=1))


def fixed_set(G: GroupTable, x: int) -> np.ndarray:
    """All y whose centralizer contains that of x (non-strict containment)."""
    cm = commuting_table(G)
    return np.flatnonzero((cm | ~cm[x]).all(axis=1))


def z_class_partition(G: GroupTable) -> ZClassPartition:
    """Partition G by conjugacy of centralizers.

    Elements with identical centralizers are grouped first; those cells are
    then merged whenever their centralizers are conjugate subgroups, with the
    conjugacy test short-circuiting on subgroup size.
    """
    def compute():
        cm = commuting_table(G)
        cells: dict[bytes, list[int]] = {}
        for x in range(G.order):
            cells.setdefault(cm[x].tobytes(), []).append(x)
        merged: list[tuple[SubgroupSet, list[int]]] = []
        for members in cells.values():
            C = SubgroupSet(G, cm[members[0]])
            for cent, acc in merged:
                if cent.size == C.size and are_subgroups_conjugate(G, cent, C) is not None:
                    acc.extend(members)
                    break
            else:
                merged.append((C, list(members)))
        classes = [
            ZClass(members=np.array(sorted(mem), dtype=np.int64),
                   representative=min(mem), centralizer=cent)
            for cent, mem in merged
        ]
        classes.sort(key=lambda c: c.representative)
        return ZClassPartition(G, classes)

    return G._memo("zclass_partition", compute)


def z_class_count(G: GroupTable) -> int:
    return z_class_partition(G).num_classes


def kulkarni_size_check(G: GroupTable, x: int) -> tuple[int, int]:
    """(predicted, actual) size of the class of x.

    The prediction is the orbit-size identity
    ``[G : N_G(C_G(x))] * |{y : C(y) = C(x)}|``; the actual size comes from
    the computed partition.  The two must agree for every element.
    """
    C = centralizer(G, x)
    NC = normalizer(G, C)
    predicted = (G.order // NC.size) * int(strict_fixed_set(G, x).size)
    actual = z_class_partition(G).class_of(x).size
    return predicted, actual


def conjugate_type_vector(G: GroupTable) -> tuple[int, ...]:
    """Distinct centralizer indices [G : C(x)], sorted descending (ends in 1)."""
    sizes = commuting_table(G).sum(axis=1)
    indices = np.unique(G.order // sizes)
    return tuple(int(v) for v in indices[::-1])


def is_type_n_1(G: GroupTable) -> int | None:
    """n when the conjugate type vector is exactly (n, 1) with n > 1, else None."""
    ctv = conjugate_type_vector(G)
    if len(ctv) == 2 and ctv[1] == 1 and ctv[0] > 1:
        return ctv[0]
    return None


def max_zclass_bound(G: GroupTable) -> int:
    """(p^k - 1)/(p - 1) + 1 where [G : Z(G)] = p^k, in exact arithmetic."""
    if is_abelian(G):
        raise AbelianGroup("the class-count bound is for non-abelian groups")
    index = G.order // center(G).size
    pw = prime_power(index)
    if pw is None:
        raise NotPrimePowerIndex(f"[G : Z(G)] = {index} is not a prime power")
    p, k = pw
    return (p ** k - 1) // (p - 1) + 1


def condition_central_quotient_elementary(G: GroupTable) -> bool:
    """Whether G/Z(G) is elementary abelian (non-abelian G intended)."""
    return is_elementary_abelian(central_quotient(G).table) is not None


def condition_local_center(G: GroupTable) -> tuple[bool, int | None]:
    """Check Z(C_G(x)) = <x, Z(G)> for every noncentral x.

    Returns (True, None), or (False, x) for the smallest offending x.
    """
    cm = commuting_table(G)
    zmask = center(G).mask
    zmem = np.flatnonzero(zmask)
    for x in np.flatnonzero(~zmask):
        cmask = cm[x]
        mem = np.flatnonzero(cmask)
        local_center = mem[(cm[mem] | ~cmask).all(axis=1)]
        gen = subgroup_generated(G, np.append(zmem, x))
        if local_center.size != gen.size or not gen.mask[local_center].all():
            return False, int(x)
    return True, None


def has_abelian_subgroup_of_index_p(G: GroupTable, p: int) -> SubgroupSet | None:
    """Search all index-p subgroups of a p-group for an abelian one.

    The index-p subgroups are exactly the preimages of the hyperplanes of
    the elementary abelian quotient G/Phi(G), enumerated exhaustively.
    """
    if G.order > 1:
        pw = prime_power(G.order)
        if pw is None or pw[0] != p:
            raise NotPGroup(f"order {G.order} is not a power of {p}")
    if G.order == 1:
        return None
    phi = frattini_subgroup(G, p)
    quo = quotient(G, phi)
    Q = quo.table
    basis: list[int] = []
    span = subgroup_generated(Q, basis)
    while span.size < Q.order:
        basis.append(int(np.flatnonzero(~span.mask)[0]))
        span = subgroup_generated(Q, basis)
    r = len(basis)
    coord_of = np.empty((Q.order, r), dtype=np.int64)
    for coords in itertools.product(range(p), repeat=r):
        e = 0
        for b, c in zip(basis, coords):
            e = Q.mul(e, Q.power(b, c))
        coord_of[e] = coords
    cm = commuting_table(G)
    for alpha in _functionals(p, r):
        in_plane = (coord_of @ alpha) % p == 0
        mask = in_plane[quo.projection]
        mem = np.flatnonzero(mask)
        if cm[np.ix_(mem, mem)].all():
            return SubgroupSet(G, mask)
    return None


def _functionals(p: int, r: int):
    """Nonzero functionals on F_p^r up to scalar (leading coefficient 1)."""
    for lead in range(r):
        for tail in itertools.product(range(p), repeat=r - lead - 1):
            yield np.array((0,) * lead + (1,) + tail, dtype=np.int64)


def has_abelian_subgroup_exceeding(G: GroupTable) -> SubgroupSet | None:
    """Find an abelian subgroup of order exceeding p * |Z(G)|, if any.

    Requires a non-abelian p-group whose central quotient is elementary
    abelian.  Under that hypothesis it suffices to search the subgroups
    <x, y, Z(G)> over commuting noncentral pairs with y outside <x, Z(G)>:
    any larger abelian subgroup A yields such a pair inside A*Z(G).
    """
    if is_abelian(G):
        raise PreconditionViolated("group is abelian")
    if prime_power(G.order) is None:
        raise PreconditionViolated(f"order {G.order} is not a prime power")
    if not condition_central_quotient_elementary(G):
        raise PreconditionViolated("central quotient is not elementary abelian")
    cm = commuting_table(G)
    zmask = center(G).mask
    zmem = np.flatnonzero(zmask)
    for x in np.flatnonzero(~zmask):
        xz = subgroup_generated(G, np.append(zmem, x))
        candidates = np.flatnonzero(cm[x] & ~zmask & ~xz.mask)
        if candidates.size:
            y = int(candidates[0])
            return subgroup_generated(G, np.append(zmem, [x, y]))
    return None


def zclass_size_lower_bound_check(G: GroupTable) -> tuple[bool, int | None]:
    """Every class except the center has size >= (p-1)*|Z(G)|.

    Requires a non-abelian p-group whose central quotient has exponent p.
    Returns (True, None) or (False, representative of an offending class).
    """
    if is_abelian(G):
        raise PreconditionViolated("group is abelian")
    pw = prime_power(G.order)
    if pw is None:
        raise PreconditionViolated(f"order {G.order} is not a prime power")
    p = pw[0]
    Z = center(G)
    ar = np.arange(G.order)
    acc = ar.copy()
    for _ in range(p - 1):
        acc = G.mult[acc, ar]
    if not Z.mask[acc].all():
        raise PreconditionViolated("central quotient does not have exponent p")
    floor = (p - 1) * Z.size
    for cls in z_class_partition(G).classes:
        if cls.representative == 0:
            continue
        if cls.size < floor:
            return False, cls.representative
    return True, None


@dataclass
class TheoremReport:
    """Outcome of checking one statement on one group.

    ``verdict`` is ``confirmed``, ``vacuous`` (a hypothesis fails, nothing to
    check), or ``REFUTED`` (all hypotheses hold and the conclusion fails --
    which the test suite treats as a failure).
    """

    group: str
    theorem: str
    hypotheses: list[tuple[str, bool, str | None]]
    conclusion: bool | None
    verdict: str
    witness: str | None = None
    facts: dict = field(default_factory=dict)


def _label(G: GroupTable) -> str:
    return G.label or f"order{G.order}"


def verify_theorem_mt(G: GroupTable) -> TheoremReport:
    """Check the maximal-count characterization on a type-(n,1) group.

    For non-abelian G of type (n,1) with [G : Z(G)] = p^k the class count
    attains (p^k - 1)/(p - 1) + 1 exactly when the central quotient is
    elementary abelian and Z(C_G(x)) = <x, Z(G)> for every noncentral x.
    Both directions of the equivalence are evaluated.
    """
    ab = is_abelian(G)
    ntype = None if ab else is_type_n_1(G)
    hyps = [
        ("non_abelian", not ab, None),
        ("type_(n,1)", ntype is not None, None if ntype is None else f"n={ntype}"),
    ]
    if ab or ntype is None:
        return TheoremReport(_label(G), "mt", hyps, None, "vacuous")
    count = z_class_count(G)
    bound = max_zclass_bound(G)
    attains = count == bound
    c1 = condition_central_quotient_elementary(G)
    c2, w2 = condition_local_center(G)
    ok = attains == (c1 and c2)
    facts = {"zclasses": count, "bound": bound, "attains": attains,
             "cond1": c1, "cond2": c2}
    witness = None
    if not ok:
        witness = f"attains={attains} but cond1={c1}, cond2={c2}"
        if w2 is not None:
            witness += f" (local center fails at x={w2})"
    return TheoremReport(_label(G), "mt", hyps, ok,
                         "confirmed" if ok else "REFUTED", witness, facts)


def verify_theorem_A(G: GroupTable) -> TheoremReport:
    """Check the necessary conditions for attaining the class-count bound.

    A non-abelian p-group attaining the bound must either have central
    quotient of order p^2 (elementary abelian), or have no abelian subgroup
    of index p together with an elementary abelian central quotient.
    """
    ab = is_abelian(G)
    pw = prime_power(G.order)
    hyps = [
        ("non_abelian", not ab, None),
        ("p_group", pw is not None, None if pw is None else f"p={pw[0]}"),
    ]
    if ab or pw is None:
        return TheoremReport(_label(G), "A", hyps, None, "vacuous")
    p = pw[0]
    count = z_class_count(G)
    bound = max_zclass_bound(G)
    attains = count == bound
    hyps.append(("attains_bound", attains, f"{count}/{bound}"))
    if not attains:
        return TheoremReport(_label(G), "A", hyps, None, "vacuous")
    Q = central_quotient(G).table
    qp = is_elementary_abelian(Q)
    branch1 = qp == p and Q.order == p * p
    no_abelian_maximal = has_abelian_subgroup_of_index_p(G, p) is None
    branch2 = qp == p and no_abelian_maximal
    ok = branch1 or branch2
    facts = {"zclasses": count, "bound": bound,
             "quotient_order": Q.order, "quotient_elementary": qp == p,
             "no_abelian_index_p": no_abelian_maximal}
    witness = "central quotient CpxCp" if branch1 else (
        "no abelian index-p subgroup" if branch2 else "both branches fail")
    return TheoremReport(_label(G), "A", hyps, ok,
                         "confirmed" if ok else "REFUTED", witness, facts)


def verify_corollary_est(G: GroupTable, *, iso_cap: int = 64,
                         order_cap: int = DEFAULT_ORDER_CAP) -> TheoremReport:
    """Check: with |G'| = p and [G : Z(G)] = p^k (k >= 2), the class count
    attains the bound exactly when G is isoclinic to an extraspecial group.

    The isoclinism target is the plus-type extraspecial group of order
    p^(1+k); an attained bound with odd k is unsatisfiable and reported as
    REFUTED.  Raises :class:`PreconditionViolated` when the hypotheses on
    G', the central index, or k fail.
    """
    from .construct import extraspecial
    from .isoclinism import are_isoclinic

    if is_abelian(G):
        raise PreconditionViolated("group is abelian")
    D = commutator_subgroup(G)
    if not is_prime(D.size):
        raise PreconditionViolated(f"|G'| = {D.size} is not prime")
    index = G.order // center(G).size
    pw = prime_power(index)
    if pw is None or pw[0] != D.size:
        raise PreconditionViolated(
            f"[G : Z(G)] = {index} is not a power of |G'| = {D.size}")
    p, k = pw
    if k < 2:
        raise PreconditionViolated(f"need [G : Z(G)] = p^k with k >= 2, got k={k}")
    hyps = [
        ("non_abelian", True, None),
        ("derived_subgroup_prime", True, f"|G'|={p}"),
        ("central_index_p^k", True, f"k={k}"),
    ]
    count = z_class_count(G)
    bound = max_zclass_bound(G)
    attains = count == bound
    witness_text = None
    if k % 2:
        iso = None
        witness_text = "k odd: no extraspecial target exists"
    else:
        target = extraspecial(p, k // 2, "plus", cap=order_cap)
        iso = are_isoclinic(G, target, cap=iso_cap)
        if iso is not None:
            witness_text = f"isoclinic to {target.label}"
    rhs = iso is not None
    ok = attains == rhs
    facts = {"zclasses": count, "bound": bound, "attains": attains,
             "isoclinic_to_extraspecial": rhs, "k": k}
    if not ok:
        witness_text = f"attains={attains} but isoclinic={rhs}"
    return TheoremReport(_label(G), "est", hyps, ok,
                         "confirmed" if ok else "REFUTED", witness_text, facts)


def verify_kulkarni(G: GroupTable) -> TheoremReport:
    """Sweep the orbit-size identity over every element of G.

    Elements sharing a centralizer share both the predicted and actual class
    size, so the sweep runs once per distinct centralizer while still
    covering all elements.
    """
    cm = commuting_table(G)
    part = z_class_partition(G)
    seen: set[bytes] = set()
    mismatch = None
    for x in range(G.order):
        key = cm[x].tobytes()
        if key in seen:
            continue
        seen.add(key)
        predicted, actual = kulkarni_size_check(G, x)
        if predicted != actual:
            mismatch = (x, predicted, actual)
            break
    ok = mismatch is None
    witness = None if ok else f"x={mismatch[0]}: predicted {mismatch[1]}, actual {mismatch[2]}"
    return TheoremReport(_label(G), "kulkarni", [], ok,
                         "confirmed" if ok else "REFUTED", witness,
                         {"distinct_centralizers": len(seen),
                          "zclasses": part.num_classes})


def verify_bounds(G: GroupTable) -> TheoremReport:
    """Check p + 2 <= class count <= (p^k - 1)/(p - 1) + 1 on a p-group."""
    ab = is_abelian(G)
    pw = prime_power(G.order)
    hyps = [
        ("non_abelian", not ab, None),
        ("p_group", pw is not None, None if pw is None else f"p={pw[0]}"),
    ]
    if ab or pw is None:
        return TheoremReport(_label(G), "bounds", hyps, None, "vacuous")
    p = pw[0]
    count = z_class_count(G)
    bound = max_zclass_bound(G)
    ok = p + 2 <= count <= bound
    facts = {"zclasses": count, "lower": p + 2, "upper": bound}
    witness = None if ok else f"count={count} outside [{p + 2}, {bound}]"
    return TheoremReport(_label(G), "bounds", hyps, ok,
                         "confirmed" if ok else "REFUTED", witness, facts)
