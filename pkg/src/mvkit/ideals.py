"""Ideals, principal down-/up-sets, the congruence of an ideal, and quotients."""
from dataclasses import dataclass

import numpy as np

from .algebra import ElementSet, Morphism, MvAlgebra, validate_axioms
from .errors import InvariantError, MvError, PreconditionError


@dataclass(frozen=True)
class SubsetClassification:
    is_ideal: bool
    is_proper: bool
    is_prime: bool
    is_lattice_ideal: bool
    witnesses: dict  # flag name -> (rule, tuple of elements), only for false flags


@dataclass(frozen=True)
class Partition:
    order: int
    class_of: tuple
    blocks: tuple  # ElementSet per block, ordered by smallest member


@dataclass(frozen=True)
class Quotient:
    algebra: MvAlgebra
    projection: Morphism
    partition: Partition


def _subset(A, S):
    if not isinstance(S, ElementSet):
        S = ElementSet.of(A.order, S)
    if S.order != A.order:
        raise MvError("subset and algebra have different carriers")
    if not len(S):
        raise MvError("subset must be nonempty")
    return S


def _closure_defect(A, mask, table):
    """First (x, y) in S with table[x, y] outside S."""
    bad = mask[:, None] & mask[None, :] & ~mask[table]
    hit = np.argwhere(bad)
    return None if not len(hit) else tuple(int(v) for v in hit[0])


def _downward_defect(A, mask):
    """First (y, x) with x in S, y <= x and y outside S."""
    bad = ~mask[:, None] & mask[None, :] & A.leq
    hit = np.argwhere(bad)
    return None if not len(hit) else tuple(int(v) for v in hit[0])


def classify_subset(A, S):
    S = _subset(A, S)
    mask = S.mask
    witnesses = {}

    down = _downward_defect(A, mask)
    plus = _closure_defect(A, mask, A.oplus)
    join = _closure_defect(A, mask, A.join)
    is_ideal = down is None and plus is None
    if not is_ideal:
        witnesses["is_ideal"] = ("oplus-closed", plus) if plus is not None else ("down-closed", down)
    is_lattice_ideal = down is None and join is None
    if not is_lattice_ideal:
        witnesses["is_lattice_ideal"] = ("join-closed", join) if join is not None else ("down-closed", down)
    is_proper = len(S) < A.order
    if not is_proper:
        witnesses["is_proper"] = ("contains-one", (A.one,))

    is_prime = False
    if is_ideal and is_proper:
        bad = mask[A.meet] & ~mask[:, None] & ~mask[None, :]
        hit = np.argwhere(bad)
        is_prime = not len(hit)
        if not is_prime:
            witnesses["is_prime"] = ("meet-split", tuple(int(v) for v in hit[0]))
    else:
        witnesses["is_prime"] = witnesses.get("is_ideal") or witnesses["is_proper"]
    return SubsetClassification(is_ideal, is_proper, is_prime, is_lattice_ideal, witnesses)


def is_ideal(A, S):
    return classify_subset(A, S).is_ideal


def principal_downset(A, t):
    """(t] = {x : x <= t}."""
    _elem(A, t)
    return ElementSet.from_mask(A.leq[:, t])


def principal_upset(A, a):
    """[a) = {x : a <= x}."""
    _elem(A, a)
    return ElementSet.from_mask(A.leq[a, :])


def _elem(A, x):
    if not 0 <= int(x) < A.order:
        raise MvError(f"element {x} out of range")


def lattice_ideal_generated(A, H):
    """Least join-closed down-set containing H (down-set of the join of H)."""
    H = _subset(A, H)
    top = 0
    for h in H:
        top = int(A.join[top, h])
    return principal_downset(A, top)


def ideals(A):
    """All ideals of A by exhaustive subset search, ordered by member tuple."""
    if A.order > 16:
        raise MvError("exhaustive ideal search limited to order 16")
    found = []
    rest = A.order - 1
    for bits in range(1 << rest):
        S = ElementSet.of(A.order, [0] + [i + 1 for i in range(rest) if bits >> i & 1])
        if is_ideal(A, S):
            found.append(S)
    return sorted(found, key=lambda S: S.members)


def prime_ideals(A):
    return [S for S in ideals(A) if classify_subset(A, S).is_prime]


def congruence_classes(A, I):
    """Partition of the carrier by x ~ y iff (x⊙y*)⊕(y⊙x*) lies in I."""
    mask = I.mask
    dist = A.oplus[A.ominus, A.ominus.T]
    related = mask[dist]
    class_of = [-1] * A.order
    reps = []
    for x in A.elements:
        if class_of[x] >= 0:
            continue
        block_id = len(reps)
        reps.append(x)
        for y in np.flatnonzero(related[x]):
            class_of[int(y)] = block_id
    blocks = tuple(ElementSet.of(A.order, [x for x in A.elements if class_of[x] == b]) for b in range(len(reps)))
    # equivalence relation: the related set of every x is exactly its block
    cls = np.asarray(class_of)
    if not np.array_equal(related, cls[:, None] == cls[None, :]):
        raise InvariantError("relation of the ideal is not an equivalence")
    return Partition(A.order, tuple(class_of), blocks), related


def quotient(A, I):
    """Quotient algebra A/I with smallest-index representatives."""
    I = _subset(A, I)
    if not is_ideal(A, I):
        raise PreconditionError("quotient requires an ideal")
    partition, related = congruence_classes(A, I)
    cls = np.asarray(partition.class_of)
    reps = [block.members[0] for block in partition.blocks]
    # compatibility: x~x', y~y' implies x⊕y ~ x'⊕y' and x* ~ x'*
    sums = cls[A.oplus]
    for block in partition.blocks:
        members = list(block)
        if (sums[members] != sums[members[0]]).any():
            raise InvariantError("congruence not compatible with ⊕")
        if len(set(cls[A.neg[members]].tolist())) != 1:
            raise InvariantError("congruence not compatible with negation")
    oplus = sums[np.ix_(reps, reps)]
    neg = cls[A.neg[reps]]
    Q = MvAlgebra(oplus, neg)
    if not validate_axioms(Q).passed:
        raise InvariantError("quotient fails the MV axioms")
    projection = Morphism(A, Q, tuple(int(c) for c in cls))
    if projection.defect() is not None:
        raise InvariantError("projection is not a homomorphism")
    if partition.blocks[0].members != I.members:
        raise InvariantError("block of 0 differs from the ideal")
    return Quotient(Q, projection, partition)
