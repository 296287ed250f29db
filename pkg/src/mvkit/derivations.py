"""Unary maps on a finite MV-algebra and the derivation notions built on them.

A map is classified against every identity at once; enumeration searches
the pruned map space and filters it through the batch kernels.
"""
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from . import kernels
from .algebra import ElementSet, boolean_center, is_boolean
from .errors import DimensionError, MvError, PreconditionError, InvariantError, RangeError, SizeGuardError
from .ideals import classify_subset
from .verdict import ClaimVerdict, verdict_from

FAMILIES = ("d", "d_star", "g", "g_star")
KINDS = ("general", "additive", "isotone", "implicative", "lattice")
ENUMERATION_GUARD = 8


@dataclass(frozen=True)
class UnaryMap:
    image: tuple

    @classmethod
    def of(cls, order, image):
        image = tuple(int(v) for v in image)
        if len(image) != order:
            raise DimensionError(f"map has {len(image)} entries, algebra has order {order}")
        for v in image:
            if not 0 <= v < order:
                raise RangeError(f"map entry {v} out of range 0..{order - 1}")
        return cls(image)

    @property
    def order(self):
        return len(self.image)

    @property
    def array(self):
        return np.asarray(self.image, dtype=np.int64)

    def __call__(self, x):
        return self.image[x]

    def __iter__(self):
        return iter(self.image)


@dataclass(frozen=True)
class MapClassification:
    is_derivation: bool
    preserves_oplus: bool
    is_additive: bool
    is_isotone: bool
    preserves_imp: bool
    implicative_rule: bool
    is_implicative: bool
    preserves_join: bool
    lattice_meet_rule: bool
    is_lattice_derivation: bool
    witnesses: dict = field(default_factory=dict)

    def flags(self):
        return {k: v for k, v in self.__dict__.items() if k != "witnesses"}


@dataclass(frozen=True)
class FixKernel:
    fix: ElementSet
    kernel: ElementSet


@dataclass(frozen=True)
class PrimeIdealDerivation:
    map: UnaryMap
    t: int
    is_additive_derivation: bool
    fix_equals_ideal: bool


def _as_map(A, f):
    if isinstance(f, UnaryMap):
        if f.order != A.order:
            raise DimensionError(f"map of order {f.order} on algebra of order {A.order}")
        return f
    return UnaryMap.of(A.order, f)


def _first_pair(bad):
    hit = np.argwhere(bad)
    return None if not len(hit) else (int(hit[0][0]), int(hit[0][1]))


def _leibniz_bad(d, mul, add):
    n = d.shape[0]
    col = np.arange(n)
    return d[mul] != add[mul[d[:, None], col[None, :]], mul[col[:, None], d[None, :]]]


def _hom_bad(d, table):
    return d[table] != table[d[:, None], d[None, :]]


def _isotone_bad(A, d):
    return A.leq & ~A.leq[d[:, None], d[None, :]]


def classify_map(A, f):
    """Evaluate every derivation notion on ``f``; witnesses are smallest violating pairs."""
    f = _as_map(A, f)
    d = f.array
    bad = {
        "is_derivation": _leibniz_bad(d, A.odot, A.oplus),
        "preserves_oplus": _hom_bad(d, A.oplus),
        "is_isotone": _isotone_bad(A, d),
        "preserves_imp": _hom_bad(d, A.imp),
        "implicative_rule": _leibniz_bad(d, A.imp, A.oplus),
        "preserves_join": _hom_bad(d, A.join),
        "lattice_meet_rule": _leibniz_bad(d, A.meet, A.join),
    }
    w = {k: _first_pair(v) for k, v in bad.items()}
    flags = {k: v is None for k, v in w.items()}
    witnesses = {k: v for k, v in w.items() if v is not None}
    for combined, parts in (
        ("is_additive", ("is_derivation", "preserves_oplus")),
        ("is_implicative", ("preserves_imp", "implicative_rule")),
        ("is_lattice_derivation", ("preserves_join", "lattice_meet_rule")),
    ):
        flags[combined] = all(flags[p] for p in parts)
        if not flags[combined]:
            witnesses[combined] = next(w[p] for p in parts[::-1] if w[p] is not None)
    return MapClassification(witnesses=witnesses, **flags)


def is_derivation(A, f):
    return _first_pair(_leibniz_bad(_as_map(A, f).array, A.odot, A.oplus)) is None


def is_additive_derivation(A, f):
    d = _as_map(A, f).array
    return _first_pair(_leibniz_bad(d, A.odot, A.oplus)) is None and _first_pair(_hom_bad(d, A.oplus)) is None


def is_implicative(A, f):
    d = _as_map(A, f).array
    return _first_pair(_hom_bad(d, A.imp)) is None and _first_pair(_leibniz_bad(d, A.imp, A.oplus)) is None


# --------------------------------------------------------------------------
# enumeration
# --------------------------------------------------------------------------


def candidate_space(A, kind):
    """Per-element candidate images for a brute-force search of ``kind``.

    Derivations: d(0)=0 and d(x) <= x. Lattice derivations: d(x) <= x, which
    is the x=y instance of the meet rule. Implicative maps: g(1)=1 and
    g(x) >= x, the instances (x, x) and (1, x) of the two defining clauses.
    """
    down = [list(np.flatnonzero(A.leq[:, x])) for x in A.elements]
    if kind in ("general", "isotone"):
        down[0] = [0]
        return down
    if kind == "lattice":
        return down
    if kind == "implicative":
        up = [list(np.flatnonzero(A.leq[x, :])) for x in A.elements]
        up[A.one] = [A.one]
        return up
    raise MvError(f"no candidate space for kind {kind!r}")


def maps_from_space(space):
    """All maps x -> space[x], one row each, in lexicographic order."""
    if not space:
        return np.zeros((1, 0), dtype=np.int64)
    return np.array(list(product(*space)), dtype=np.int64).reshape(-1, len(space))


def enumerate_maps(A, kind="general", max_order=ENUMERATION_GUARD):
    """Exactly the maps of the requested kind, lexicographically ordered."""
    if kind not in KINDS:
        raise MvError(f"unknown kind {kind!r}; expected one of {KINDS}")
    if kind == "additive":
        found = []
        for a in boolean_center(A):
            f = canonical_map(A, a, "d")
            if is_additive_derivation(A, f):
                found.append(f)
        return sorted(found, key=lambda f: f.image)
    if A.order > max_order:
        raise SizeGuardError(f"enumeration of {kind} maps limited to order {max_order}")
    maps = maps_from_space(candidate_space(A, kind))
    if kind in ("general", "isotone"):
        keep = kernels.leibniz_mask(maps, A.odot, A.oplus)
        if kind == "isotone":
            keep &= kernels.isotone_mask(maps, A.leq)
    elif kind == "lattice":
        keep = kernels.homomorphic_mask(maps, A.join) & kernels.leibniz_mask(maps, A.meet, A.join)
    else:
        keep = kernels.homomorphic_mask(maps, A.imp) & kernels.leibniz_mask(maps, A.imp, A.oplus)
    return [UnaryMap(tuple(int(v) for v in row)) for row in maps[keep]]


# --------------------------------------------------------------------------
# canonical maps, fixed points, adjoints
# --------------------------------------------------------------------------


def canonical_map(A, a, family):
    """x⊙a (d), x⊖a (d_star), a⊕x (g) or a→x (g_star)."""
    if not 0 <= int(a) < A.order:
        raise RangeError(f"element {a} out of range")
    if family == "d":
        col = A.odot[:, a]
    elif family == "d_star":
        col = A.ominus[:, a]
    elif family == "g":
        col = A.oplus[a, :]
    elif family == "g_star":
        col = A.imp[a, :]
    else:
        raise MvError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return UnaryMap(tuple(int(v) for v in col))


def fix_and_kernel(A, f):
    d = _as_map(A, f).array
    idx = np.arange(A.order)
    return FixKernel(ElementSet.from_mask(d == idx), ElementSet.from_mask(d == 0))


def galois_defect(A, f, g):
    """None when (f, g) is a Galois connection, else the first failing clause.

    The pair is read with composition left to right: ``x <= g(f(x))`` and
    ``f(g(y)) <= y``, together with both maps being order-preserving. This is
    the residuation ``f(x) <= y`` iff ``x <= g(y)``.
    """
    f, g = _as_map(A, f).array, _as_map(A, g).array
    le = A.leq
    for clause, m in (("f-isotone", f), ("g-isotone", g)):
        hit = _first_pair(_isotone_bad(A, m))
        if hit is not None:
            return {"clause": clause, "at": list(hit)}
    unit = np.flatnonzero(~le[np.arange(A.order), g[f]])
    if len(unit):
        return {"clause": "unit", "at": [int(unit[0])]}
    counit = np.flatnonzero(~le[f[g], np.arange(A.order)])
    if len(counit):
        return {"clause": "counit", "at": [int(counit[0])]}
    return None


def is_galois_pair(A, f, g, algebra_id=""):
    w = galois_defect(A, f, g)
    return verdict_from(w is None, claim="D2.6", algebra=algebra_id, witness=w)


def adjoint_search(A, f):
    """All maps g forming a Galois connection with f, by exhaustive backtracking."""
    f = _as_map(A, f).array
    n, le = A.order, A.leq
    g = [-1] * n
    preimages = [np.flatnonzero(f == y) for y in range(n)]
    found = []

    def fits(y, z):
        if not le[f[z], y]:
            return False
        if not le[preimages[y], z].all():
            return False
        for y2 in range(y):
            if le[y2, y] and not le[g[y2], z]:
                return False
            if le[y, y2] and not le[z, g[y2]]:
                return False
        return True

    def search(y):
        if y == n:
            found.append(UnaryMap(tuple(g)))
            return
        for z in range(n):
            if fits(y, z):
                g[y] = z
                search(y + 1)
        g[y] = -1

    search(0)
    for cand in found:
        if galois_defect(A, UnaryMap(tuple(int(v) for v in f)), cand) is not None:
            raise InvariantError("adjoint search produced a non-adjoint")
    return found


def residual_adjoint(A, f, max_order=ENUMERATION_GUARD):
    """The unique g with (f, g) a Galois connection, or None if none exists."""
    if A.order > max_order:
        raise SizeGuardError(f"adjoint search limited to order {max_order}")
    f = _as_map(A, f)
    if _first_pair(_isotone_bad(A, f.array)) is not None:
        raise PreconditionError("residual_adjoint needs an order-preserving map")
    found = adjoint_search(A, f)
    if len(found) > 1:
        raise InvariantError(f"adjoint not unique: {len(found)} solutions")
    return found[0] if found else None


def prime_ideal_derivation(A, I):
    """d(x)=x on I and x∧t elsewhere, t the join of I, on a Boolean algebra."""
    if not is_boolean(A):
        raise PreconditionError("prime_ideal_derivation needs a Boolean algebra")
    if not isinstance(I, ElementSet):
        I = ElementSet.of(A.order, I)
    if not classify_subset(A, I).is_prime:
        raise PreconditionError("ideal is not prime")
    t = 0
    for x in I:
        t = int(A.join[t, x])
    d = UnaryMap(tuple(x if x in I else int(A.meet[x, t]) for x in A.elements))
    return PrimeIdealDerivation(
        map=d,
        t=t,
        is_additive_derivation=is_additive_derivation(A, d),
        fix_equals_ideal=fix_and_kernel(A, d).fix.members == I.members,
    )
