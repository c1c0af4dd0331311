"""Isoclinism of finite groups via the commutator pairing.

The pairing G/Z x G/Z -> G' (send a coset pair to the commutator of any
representatives) determines a group up to isoclinism: two groups are
isoclinic when isomorphisms between their central quotients and their
commutator subgroups intertwine the pairings.  ``are_isoclinic`` runs a
complete backtracking search over such pairs, so a ``None`` answer is a
proof of non-isoclinism at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .construct import cyclic
from .core import (
    DEFAULT_ORDER_CAP,
    GroupTable,
    QuotientGroup,
    SubgroupSet,
    center,
    central_quotient,
    commutator_subgroup,
    commutator_values,
    direct_product,
    element_orders,
    smallest_prime_factor,
    subgroup_generated,
)
from .errors import PreconditionViolated, QuotientExceedsCap
from .zclass import TheoremReport, z_class_count

DEFAULT_ISO_CAP = 64


@dataclass
class CommutatorPairing:
    """The pairing table of a group: entry [aZ, bZ] is the commutator of any
    representatives, as an element id of the parent group (lying in G')."""

    quotient: QuotientGroup
    target: SubgroupSet
    table: np.ndarray


def commutator_pairing(G: GroupTable) -> CommutatorPairing:
    """Build the pairing and verify it is representative-independent,
    antisymmetric (w(a,b) = w(b,a)^-1) and trivial on the diagonal."""
    def compute():
        quo = central_quotient(G)
        reps = quo.coset_reps
        cv = commutator_values(G)
        table = cv[np.ix_(reps, reps)]
        # second representative per coset; equal tables certify well-definedness
        if quo.kernel.size > 1:
            alt = np.array([np.flatnonzero(quo.projection == q)[1]
                            for q in range(quo.table.order)])
            assert np.array_equal(table, cv[np.ix_(alt, alt)]), \
                "pairing depends on coset representatives"
        assert np.array_equal(table.T, G.inv[table]), "pairing is not antisymmetric"
        assert not table.diagonal().any(), "pairing is nonzero on the diagonal"
        target = commutator_subgroup(G)
        assert target.mask[table].all(), "pairing value outside the commutator subgroup"
        return CommutatorPairing(quotient=quo, target=target, table=table)

    return G._memo("commutator_pairing", compute)


@dataclass
class IsoclinismWitness:
    """A concrete isoclinism: phi maps central-quotient ids of group1 to
    those of group2, psi maps commutator-subgroup member ids likewise."""

    group1: GroupTable
    group2: GroupTable
    phi: np.ndarray
    psi: dict[int, int]

    def validate(self) -> None:
        """Exhaustively re-check that (phi, psi) is an isoclinism."""
        P1 = commutator_pairing(self.group1)
        P2 = commutator_pairing(self.group2)
        Q1, Q2 = P1.quotient.table, P2.quotient.table
        if sorted(self.phi.tolist()) != list(range(Q2.order)):
            raise AssertionError("phi is not a bijection")
        for a in range(Q1.order):
            for b in range(Q1.order):
                if self.phi[Q1.mult[a, b]] != Q2.mult[self.phi[a], self.phi[b]]:
                    raise AssertionError(f"phi is not a homomorphism at ({a}, {b})")
        d1 = set(int(v) for v in P1.target.members())
        d2 = set(int(v) for v in P2.target.members())
        if set(self.psi) != d1 or set(self.psi.values()) != d2:
            raise AssertionError("psi is not a bijection between the commutator subgroups")
        for a in d1:
            for b in d1:
                lhs = self.psi[self.group1.mul(a, b)]
                rhs = self.group2.mul(self.psi[a], self.psi[b])
                if lhs != rhs:
                    raise AssertionError(f"psi is not a homomorphism at ({a}, {b})")
        W1, W2 = P1.table, P2.table
        for a in range(Q1.order):
            for b in range(Q1.order):
                if self.psi[int(W1[a, b])] != int(W2[self.phi[a], self.phi[b]]):
                    raise AssertionError(f"pairing compatibility fails at ({a}, {b})")

    def inverse(self) -> "IsoclinismWitness":
        inv_phi = np.empty_like(self.phi)
        inv_phi[self.phi] = np.arange(self.phi.size)
        inv_psi = {v: k for k, v in self.psi.items()}
        return IsoclinismWitness(self.group2, self.group1, inv_phi, inv_psi)

    def to_json(self) -> dict:
        return {
            "phi": [int(v) for v in self.phi],
            "psi": sorted([int(k), int(v)] for k, v in self.psi.items()),
        }


def witness_from_json(G1: GroupTable, G2: GroupTable, payload: dict) -> IsoclinismWitness:
    """Rebuild a witness from its serialized form; call validate() to check it."""
    phi = np.asarray(payload["phi"], dtype=np.int64)
    psi = {int(k): int(v) for k, v in payload["psi"]}
    return IsoclinismWitness(G1, G2, phi, psi)


def _greedy_generating_sequence(Q: GroupTable) -> list[int]:
    """Repeatedly adjoin the smallest element outside the closure so far."""
    gens: list[int] = []
    closed = subgroup_generated(Q, gens)
    while closed.size < Q.order:
        gens.append(int(np.flatnonzero(~closed.mask)[0]))
        closed = subgroup_generated(Q, gens)
    return gens


def _extend_embedding(m1: np.ndarray, m2: np.ndarray, assign: list[tuple[int, int]]):
    """Close a partial map under products, checking the homomorphism property
    and injectivity along the way.

    Returns (phi, domain) with phi = -1 off the generated subgroup, or None
    on any conflict.
    """
    n = m1.shape[0]
    phi = np.full(n, -1, dtype=np.int64)
    used = np.zeros(m2.shape[0], dtype=bool)
    phi[0] = 0
    used[0] = True
    queue = [0]
    for e, im in assign:
        if phi[e] == -1:
            if used[im]:
                return None
            phi[e] = im
            used[im] = True
            queue.append(e)
        elif phi[e] != im:
            return None
    domain: list[int] = []
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        for y in (*domain, x):
            for u, v in ((x, y), (y, x)):
                z = int(m1[u, v])
                w = int(m2[phi[u], phi[v]])
                if phi[z] == -1:
                    if used[w]:
                        return None
                    phi[z] = w
                    used[w] = True
                    queue.append(z)
                elif phi[z] != w:
                    return None
        domain.append(x)
    return phi, domain


def _forced_psi(G1: GroupTable, G2: GroupTable, W1: np.ndarray, W2: np.ndarray,
                phi: np.ndarray, domain: list[int]):
    """Propagate the pairing constraints to a partial map on G1'.

    psi is pinned on every pairing value over the mapped domain, then closed
    multiplicatively; any clash or injectivity failure returns None.
    """
    psi: dict[int, int] = {0: 0}
    taken: set[int] = {0}

    def put(d, e):
        if d in psi:
            return psi[d] == e
        if e in taken:
            return False
        psi[d] = e
        taken.add(e)
        return True

    for a in domain:
        for b in domain:
            if not put(int(W1[a, b]), int(W2[phi[a], phi[b]])):
                return None
    changed = True
    while changed:
        changed = False
        items = list(psi.items())
        for d1, e1 in items:
            for d2, e2 in items:
                d = G1.mul(d1, d2)
                e = G2.mul(e1, e2)
                if d in psi:
                    if psi[d] != e:
                        return None
                elif e in taken:
                    return None
                else:
                    psi[d] = e
                    taken.add(e)
                    changed = True
    return psi


def are_isoclinic(G1: GroupTable, G2: GroupTable,
                  cap: int = DEFAULT_ISO_CAP) -> IsoclinismWitness | None:
    """Complete backtracking search for an isoclinism between two groups.

    Images are chosen for a minimal generating sequence of G1/Z1 in
    ascending id order; each partial choice is closed to a subgroup
    embedding, and the derived-subgroup map is never searched -- the pairing
    forces it, and any clash prunes the branch.  Returned witnesses are
    validated exhaustively; ``None`` means the search space was exhausted.
    """
    P1, P2 = commutator_pairing(G1), commutator_pairing(G2)
    Q1, Q2 = P1.quotient.table, P2.quotient.table
    if Q1.order != Q2.order or P1.target.size != P2.target.size:
        return None
    if Q1.order > cap:
        raise QuotientExceedsCap(
            f"|G/Z| = {Q1.order} exceeds the search cap {cap}")
    oq1, oq2 = element_orders(Q1), element_orders(Q2)
    if sorted(oq1.tolist()) != sorted(oq2.tolist()):
        return None
    od1 = sorted(G1.element_order(int(x)) for x in P1.target.members())
    od2 = sorted(G2.element_order(int(x)) for x in P2.target.members())
    if od1 != od2:
        return None

    if G1.order == G2.order and np.array_equal(G1.mult, G2.mult):
        witness = IsoclinismWitness(G1, G2, np.arange(Q1.order, dtype=np.int64),
                                    {int(x): int(x) for x in P1.target.members()})
        witness.validate()
        return witness

    gens = _greedy_generating_sequence(Q1)
    m1, m2 = Q1.mult, Q2.mult
    W1, W2 = P1.table, P2.table

    def search(i: int, assign: list[tuple[int, int]]) -> IsoclinismWitness | None:
        ext = _extend_embedding(m1, m2, assign)
        if ext is None:
            return None
        phi, domain = ext
        psi = _forced_psi(G1, G2, W1, W2, phi, domain)
        if psi is None:
            return None
        if i == len(gens):
            if len(domain) != Q1.order or len(psi) != P1.target.size:
                return None
            witness = IsoclinismWitness(G1, G2, phi, psi)
            witness.validate()
            return witness
        g = gens[i]
        want = int(oq1[g])
        for im in range(Q2.order):
            if int(oq2[im]) != want:
                continue
            found = search(i + 1, assign + [(g, im)])
            if found is not None:
                return found
        return None

    return search(0, [])


def is_stem_group(G: GroupTable) -> bool:
    """Whether the center is contained in the commutator subgroup."""
    return center(G).is_subset_of(commutator_subgroup(G))


def verify_isoclinism_invariance(G1: GroupTable, G2: GroupTable,
                                 witness: IsoclinismWitness | None = None, *,
                                 cap: int = DEFAULT_ISO_CAP) -> TheoremReport:
    """Given isoclinic groups, assert their class counts agree.

    Searches for a witness when none is supplied and raises
    :class:`PreconditionViolated` if the groups are not isoclinic.
    """
    if witness is None:
        witness = are_isoclinic(G1, G2, cap=cap)
    if witness is None:
        raise PreconditionViolated("groups are not isoclinic")
    witness.validate()
    c1, c2 = z_class_count(G1), z_class_count(G2)
    ok = c1 == c2
    label = f"{G1.label or 'G1'}~{G2.label or 'G2'}"
    return TheoremReport(
        label, "isoclinism-invariance",
        [("isoclinic", True, None)], ok,
        "confirmed" if ok else "REFUTED",
        None if ok else f"counts differ: {c1} vs {c2}",
        {"zclasses_1": c1, "zclasses_2": c2},
    )


def verify_direct_factor_invariance(G: GroupTable, *, iso_cap: int = DEFAULT_ISO_CAP,
                                    order_cap: int = DEFAULT_ORDER_CAP) -> TheoremReport:
    """Check that appending an abelian direct factor C_p preserves the count.

    p is the smallest prime dividing |G| (2 for the trivial group); the
    isoclinism between G and G x C_p is found by the full search and
    re-validated before the counts are compared.
    """
    p = 2 if G.order == 1 else smallest_prime_factor(G.order)
    H = direct_product(G, cyclic(p), cap=max(order_cap, G.order * p))
    H = H.relabeled(f"{G.label or 'G'}xC{p}")
    witness = are_isoclinic(G, H, cap=iso_cap)
    label = _report_label(G)
    if witness is None:
        return TheoremReport(label, "isoclinism-invariance",
                             [("isoclinic_to_GxCp", False, None)], False,
                             "REFUTED", "no isoclinism with the direct product found")
    witness.validate()
    c1, c2 = z_class_count(G), z_class_count(H)
    ok = c1 == c2
    return TheoremReport(
        label, "isoclinism-invariance",
        [("isoclinic_to_GxCp", True, f"p={p}")], ok,
        "confirmed" if ok else "REFUTED",
        None if ok else f"counts differ: {c1} vs {c2}",
        {"zclasses": c1, "zclasses_product": c2, "p": p},
    )


def _report_label(G: GroupTable) -> str:
    return G.label or f"order{G.order}"
