"""Finite MV-algebras given by an ⊕ Cayley table and a negation vector.

The carrier is always ``0..n-1`` with the constant 0 at index 0 and the top
element at ``neg[0]``. Every other operation (⊙, →, ∨, ∧, ⊖) and the
natural order are derived from the two tables.
"""
from dataclasses import dataclass
from functools import cached_property, reduce
from itertools import permutations

import numpy as np

from . import kernels
from .errors import DimensionError, InvariantError, MvError, RangeError
from .verdict import ClaimVerdict, verdict_from

DERIVED_KINDS = ("odot", "imp", "join", "meet", "ominus")


@dataclass(frozen=True, eq=False)
class MvAlgebra:
    """Immutable table representation; build instances with :func:`build_algebra`."""

    oplus: np.ndarray
    neg: np.ndarray

    def __post_init__(self):
        self.oplus.setflags(write=False)
        self.neg.setflags(write=False)

    @property
    def order(self):
        return int(self.neg.shape[0])

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return int(self.neg[0])

    @property
    def elements(self):
        return range(self.order)

    @cached_property
    def odot(self):
        n = self.neg
        return _frozen(n[self.oplus[n[:, None], n[None, :]]])

    @cached_property
    def imp(self):
        return _frozen(self.oplus[self.neg[:, None], np.arange(self.order)[None, :]])

    @cached_property
    def ominus(self):
        return _frozen(self.odot[np.arange(self.order)[:, None], self.neg[None, :]])

    @cached_property
    def join(self):
        return _frozen(self.oplus[self.ominus, np.arange(self.order)[None, :]])

    @cached_property
    def meet(self):
        return _frozen(self.odot[np.arange(self.order)[:, None], self.imp])

    @cached_property
    def leq(self):
        """Boolean matrix ``leq[x, y]`` of the natural order."""
        return _frozen(self.imp == self.one)

    @cached_property
    def idempotent(self):
        return _frozen(np.diag(self.oplus) == np.arange(self.order))

    def table(self, kind):
        if kind == "oplus":
            return self.oplus
        if kind not in DERIVED_KINDS:
            raise MvError(f"unknown operation {kind!r}")
        return getattr(self, kind)

    def __eq__(self, other):
        if not isinstance(other, MvAlgebra):
            return NotImplemented
        return np.array_equal(self.oplus, other.oplus) and np.array_equal(self.neg, other.neg)

    def __hash__(self):
        return hash((self.oplus.tobytes(), self.neg.tobytes()))

    def __repr__(self):
        return f"MvAlgebra(order={self.order})"


def _frozen(arr):
    arr = np.ascontiguousarray(arr)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class ElementSet:
    """A subset of a carrier; ``members`` is kept sorted."""

    order: int
    members: tuple

    @classmethod
    def of(cls, order, items):
        items = sorted({int(i) for i in items})
        if items and (items[0] < 0 or items[-1] >= order):
            raise RangeError(f"element out of range 0..{order - 1}: {items}")
        return cls(order, tuple(items))

    @classmethod
    def from_mask(cls, mask):
        mask = np.asarray(mask, dtype=bool)
        return cls(int(mask.shape[0]), tuple(int(i) for i in np.flatnonzero(mask)))

    @classmethod
    def full(cls, order):
        return cls(order, tuple(range(order)))

    @property
    def mask(self):
        m = np.zeros(self.order, dtype=bool)
        m[list(self.members)] = True
        return m

    def __contains__(self, x):
        return x in self.members

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class AxiomReport:
    passed: bool
    failures: tuple  # ((axiom_id, witness_tuple), ...)

    def failed(self, axiom):
        return any(a == axiom for a, _ in self.failures)

    def to_text(self):
        if self.passed:
            return "passed"
        lines = ["failed"]
        lines += [f"  {axiom}: {' '.join(map(str, w))}" for axiom, w in self.failures]
        return "\n".join(lines)


@dataclass(frozen=True, eq=False)
class Morphism:
    """A map between the carriers of two algebras, ``image[x]`` in the target."""

    source: MvAlgebra
    target: MvAlgebra
    image: tuple

    def __call__(self, x):
        return self.image[x]

    def defect(self):
        """First reason this is not a homomorphism, as ``{"reason", "at"}``, or None."""
        S, T, f = self.source, self.target, self.image
        if len(f) != S.order:
            return {"reason": "length", "at": [len(f)]}
        for x, v in enumerate(f):
            if not 0 <= v < T.order:
                return {"reason": "range", "at": [x]}
        if f[0] != 0:
            return {"reason": "zero", "at": [0]}
        img = np.asarray(f)
        bad = img[S.oplus] != T.oplus[img[:, None], img[None, :]]
        hit = np.argwhere(bad)
        if len(hit):
            return {"reason": "oplus", "at": [int(v) for v in hit[0]]}
        bad = img[S.neg] != T.neg[img]
        hit = np.flatnonzero(bad)
        if len(hit):
            return {"reason": "neg", "at": [int(hit[0])]}
        return None

    @property
    def is_homomorphism(self):
        return self.defect() is None

    @property
    def is_bijective(self):
        return self.source.order == self.target.order and len(set(self.image)) == self.target.order

    @property
    def is_isomorphism(self):
        return self.is_bijective and self.is_homomorphism


# --------------------------------------------------------------------------
# construction and validation
# --------------------------------------------------------------------------


def build_algebra(order, oplus, neg):
    """Build an algebra from raw tables, checking dimensions and ranges only."""
    if int(order) < 1:
        raise DimensionError("order must be positive")
    order = int(order)
    rows = [list(r) for r in oplus]
    if len(rows) != order or any(len(r) != order for r in rows):
        lengths = [len(r) for r in rows]
        raise DimensionError(f"oplus must be {order}x{order}, got row lengths {lengths}")
    neg = list(neg)
    if len(neg) != order:
        raise DimensionError(f"neg must have {order} entries, got {len(neg)}")
    table = np.array(rows, dtype=np.int64).reshape(order, order)
    negv = np.array(neg, dtype=np.int64)
    for arr, name in ((table, "oplus"), (negv, "neg")):
        if arr.size and (arr.min() < 0 or arr.max() >= order):
            raise RangeError(f"{name} entry out of range 0..{order - 1}")
    return MvAlgebra(table, negv)


def validate_axioms(A):
    """Exhaustive check of MV1-MV4 plus the derived lattice laws."""
    n = A.order
    if A.oplus.min(initial=0) < 0 or A.oplus.max(initial=0) >= n or A.neg.min() < 0 or A.neg.max() >= n:
        return AxiomReport(False, (("table-range", ()),))
    raw = kernels.axiom_witnesses(A.oplus, A.neg)
    failures = []
    for axiom, arity, row in zip(kernels.AXIOMS, kernels.AXIOM_ARITY, raw):
        if row[0] >= 0:
            failures.append((axiom, tuple(int(v) for v in row[:arity])))
    return AxiomReport(not failures, tuple(failures))


def _check(A, *xs):
    for x in xs:
        if not 0 <= int(x) < A.order:
            raise RangeError(f"element {x} out of range 0..{A.order - 1}")


def derived_op(A, kind, x, y):
    _check(A, x, y)
    return int(A.table(kind)[x, y])


def leq(A, x, y):
    _check(A, x, y)
    return bool(A.leq[x, y])


def boolean_center(A, check=True):
    """Idempotent elements; with ``check`` also confirms ``e⊕y = e∨y`` for all y."""
    center = ElementSet.from_mask(A.idempotent)
    if check:
        for e in center:
            if not np.array_equal(A.oplus[e], A.join[e]):
                raise InvariantError(f"idempotent {e} has e⊕y != e∨y")
    return center


def is_boolean(A):
    return bool(A.idempotent.all())


def chain(n):
    """The n-element Łukasiewicz chain; index k stands for k/(n-1)."""
    if n < 2:
        raise MvError("chain(n) needs n >= 2")
    idx = np.arange(n)
    return MvAlgebra(np.minimum(n - 1, idx[:, None] + idx[None, :]), (n - 1) - idx)


def direct_product(*factors):
    """Componentwise product; pair (i, j) gets index ``i*|B| + j``."""
    if not factors:
        raise MvError("direct_product needs at least one factor")
    return reduce(_product2, factors)


def _product2(A, B):
    m = B.order
    i = np.arange(A.order * m)
    hi, lo = i // m, i % m
    oplus = A.oplus[hi[:, None], hi[None, :]] * m + B.oplus[lo[:, None], lo[None, :]]
    neg = A.neg[hi] * m + B.neg[lo]
    return MvAlgebra(oplus, neg)


# --------------------------------------------------------------------------
# identities that hold in every MV-algebra
# --------------------------------------------------------------------------


def _grid(n, k):
    return np.meshgrid(*([np.arange(n)] * k), indexing="ij")


def _first_tuple(bad):
    hit = np.argwhere(bad)
    return None if not len(hit) else [int(v) for v in hit[0]]


def _basic_identities(A):
    """Violation arrays for the eleven basic identities, keyed 1..11."""
    o, d, imp, j, m, le, neg, one = A.oplus, A.odot, A.imp, A.join, A.meet, A.leq, A.neg, A.one
    x1 = np.arange(A.order)
    x2, y2 = _grid(A.order, 2)
    x, y, z = _grid(A.order, 3)
    return {
        1: o[x1, neg[x1]] != one,
        2: d[x1, neg[x1]] != 0,
        3: le[x2, y2] != (imp[x2, y2] == one),
        4: ~le[d[x2, y2], m[x2, y2]],
        5: imp[x, m[y, z]] != m[imp[x, y], imp[x, z]],
        6: imp[j[x, y], z] != m[imp[x, z], imp[y, z]],
        7: le[x, y] & ~le[d[x, z], d[y, z]],
        8: (j[x2, y2] != imp[imp[x2, y2], y2]) | (j[x2, y2] != imp[imp[y2, x2], x2]),
        9: ~le[x2, imp[y2, x2]],
        10: d[x, j[y, z]] != j[d[x, y], d[x, z]],
        11: o[x, m[y, z]] != m[o[x, y], o[x, z]],
    }


def _center_identities(A, centre):
    """Violation arrays over (e, x, y) with e idempotent, keyed 1..5."""
    o, d, imp, j, m = A.oplus, A.odot, A.imp, A.join, A.meet
    e = np.asarray(centre, dtype=np.int64)[:, None, None]
    x = np.arange(A.order)[None, :, None]
    y = np.arange(A.order)[None, None, :]
    return {
        1: m[e, d[x, y]] != d[m[e, x], m[e, y]],
        2: j[e, d[x, y]] != d[j[e, x], j[e, y]],
        3: m[e, o[x, y]] != o[m[e, x], m[e, y]],
        4: j[e, o[x, y]] != o[j[e, x], j[e, y]],
        5: d[e, imp[x, y]] != d[e, imp[d[e, x], d[e, y]]],
    }


def identity_suite(A, algebra_id=""):
    """Exhaustive checks of the standard MV identities on ``A``.

    Returns one verdict per basic identity (P2.3 items 1-11), one for the
    three-way characterization of idempotents (P2.4), and one per identity
    relative to an idempotent element (P2.5 items 1-5).
    """
    out = []
    for item, bad in _basic_identities(A).items():
        w = _first_tuple(bad)
        out.append(verdict_from(w is None, claim="P2.3", algebra=algebra_id, params=(("item", item),), witness=w and {"at": w}))

    first = None
    for x in A.elements:
        flags = [bool(A.oplus[x, x] == x), bool((A.oplus[x] == A.join[x]).all()), bool((A.odot[x] == A.meet[x]).all())]
        if len(set(flags)) > 1:
            first = {"x": x, "conditions": flags}
            break
    out.append(verdict_from(first is None, claim="P2.4", algebra=algebra_id, witness=first))

    centre = np.flatnonzero(A.idempotent)
    for item, bad in _center_identities(A, centre).items():
        w = _first_tuple(bad)
        if w is not None:
            w[0] = int(centre[w[0]])
        out.append(verdict_from(w is None, claim="P2.5", algebra=algebra_id, params=(("item", item),), witness=w and {"at": w}))
    return out


# --------------------------------------------------------------------------
# isomorphism search
# --------------------------------------------------------------------------


def element_signature(A, x):
    """Isomorphism-invariant profile of one element."""
    power, k = x, 1
    while power != A.one and k <= A.order:
        nxt = int(A.oplus[power, x])
        if nxt == power:
            break
        power, k = nxt, k + 1
    reaches_top = power == A.one
    return (
        bool(A.idempotent[x]),
        int(A.leq[:, x].sum()),
        int(A.leq[x, :].sum()),
        k if reaches_top else -k,
    )


def find_isomorphism(A, B):
    """Backtracking search for an isomorphism ``A -> B``; None if there is none."""
    if A.order != B.order or int(A.idempotent.sum()) != int(B.idempotent.sum()):
        return None
    n = A.order
    sigA = [element_signature(A, x) for x in range(n)]
    sigB = [element_signature(B, y) for y in range(n)]
    if sorted(sigA) != sorted(sigB):
        return None
    candidates = [[y for y in range(n) if sigB[y] == sigA[x]] for x in range(n)]
    order = sorted(range(n), key=lambda x: (len(candidates[x]), x))
    image = [-1] * n
    used = [False] * n

    def consistent(x):
        fx = image[x]
        nx = int(A.neg[x])
        if image[nx] >= 0 and image[nx] != B.neg[fx]:
            return False
        for y in range(n):
            fy = image[y]
            if fy < 0:
                continue
            s = int(A.oplus[x, y])
            if image[s] >= 0 and image[s] != B.oplus[fx, fy]:
                return False
        return True

    def assign(x, y, trail):
        image[x] = y
        used[y] = True
        trail.append(x)

    def undo(trail):
        for x in trail:
            used[image[x]] = False
            image[x] = -1

    def search(pos):
        while pos < n and image[order[pos]] >= 0:
            pos += 1
        if pos == n:
            return True
        x = order[pos]
        for y in candidates[x]:
            if used[y]:
                continue
            trail = []
            assign(x, y, trail)
            nx, ny = int(A.neg[x]), int(B.neg[y])
            ok = consistent(x)
            if ok and image[nx] < 0:
                if used[ny] or sigB[ny] != sigA[nx]:
                    ok = False
                else:
                    assign(nx, ny, trail)
                    ok = consistent(nx)
            if ok and search(pos + 1):
                return True
            undo(trail)
        return False

    assign(0, 0, [])
    if not search(0):
        return None
    morphism = Morphism(A, B, tuple(image))
    if not morphism.is_isomorphism:
        raise InvariantError("isomorphism search returned an invalid map")
    return morphism


def all_isomorphisms(A, B):
    """Every isomorphism ``A -> B`` by brute force over bijections fixing 0 (small orders)."""
    if A.order != B.order:
        return []
    found = []
    for perm in permutations(range(1, B.order)):
        m = Morphism(A, B, (0,) + perm)
        if m.is_homomorphism:
            found.append(m)
    return found
