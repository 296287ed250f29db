"""The catalog of chain products and its exhaustive cross-check."""
from dataclasses import dataclass
from itertools import product
from math import prod

import numpy as np

from .algebra import MvAlgebra, chain, direct_product, find_isomorphism, validate_axioms
from .errors import MvError, SizeGuardError
from .verdict import verdict_from

CROSS_CHECK_LIMIT = 5


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    algebra_id: str
    factors: tuple
    algebra: MvAlgebra


def chain_multisets(max_order):
    """Non-decreasing tuples of chain lengths >= 2 with product <= max_order."""
    found = []

    def grow(prefix, smallest, size):
        if prefix:
            found.append(tuple(prefix))
        for n in range(smallest, max_order + 1):
            if size * n > max_order:
                break
            grow(prefix + [n], n, size * n)

    grow([], 2, 1)
    return sorted(found, key=lambda ns: (prod(ns), ns))


def algebra_id(factors):
    return "x".join(f"S{n}" for n in factors)


def generate_catalog(max_order):
    """Every product of chains of order <= max_order, smallest first."""
    if max_order < 2:
        raise MvError("catalog needs max_order >= 2")
    return [
        CatalogEntry(algebra_id(ns), ns, direct_product(*[chain(n) for n in ns]))
        for ns in chain_multisets(max_order)
    ]


def _involutions(n):
    """Involutions of 0..n-1 swapping 0 and n-1."""
    inner = list(range(1, n - 1))
    out = []

    def grow(rest, pairs):
        if not rest:
            neg = list(range(n))
            neg[0], neg[n - 1] = n - 1, 0
            for x, y in pairs:
                neg[x], neg[y] = y, x
            out.append(neg)
            return
        x, rest = rest[0], rest[1:]
        grow(rest, pairs + [(x, x)])
        for y in rest:
            grow([r for r in rest if r != y], pairs + [(x, y)])

    grow(inner, [])
    return out


def mv_tables(n):
    """All MV-algebra tables of order n with zero at 0 and top at n-1.

    Any finite MV-algebra can be relabelled this way, so the result covers
    every isomorphism class. Rows 0 and n-1 are fixed by the unit law and
    MV3, ⊕ is taken symmetric and x ⊕ x* = 1 pins further cells; the free
    cells are enumerated, filtered by associativity and MV4 in bulk, and
    the survivors are confirmed with the full axiom check.
    """
    if n == 1:
        return [MvAlgebra(np.zeros((1, 1), np.int64), np.zeros(1, np.int64))]
    top = n - 1
    found = []
    for neg in _involutions(n):
        base = np.full((n, n), -1, dtype=np.int64)
        base[0, :] = base[:, 0] = np.arange(n)
        base[top, :] = base[:, top] = top
        for x in range(n):
            base[x, neg[x]] = top
        free = [(i, j) for i in range(1, top) for j in range(i, top) if base[i, j] < 0]
        combos = np.array(list(product(range(n), repeat=len(free))), dtype=np.int64)
        combos = combos.reshape(n ** len(free), len(free))
        tables = np.repeat(base[None], len(combos), axis=0)
        for k, (i, j) in enumerate(free):
            tables[:, i, j] = tables[:, j, i] = combos[:, k]
        negv = np.array(neg, dtype=np.int64)
        tables = tables[_bulk_filter(tables, negv)]
        for t in tables:
            A = MvAlgebra(t, negv)
            if validate_axioms(A).passed:
                found.append(A)
    return found


def _bulk_filter(tables, neg):
    m, n, _ = tables.shape
    b = np.arange(m)[:, None, None, None]
    x = np.arange(n)[None, :, None, None]
    y = np.arange(n)[None, None, :, None]
    z = np.arange(n)[None, None, None, :]
    xy = tables[b, x, y]
    yz = tables[b, y, z]
    assoc = (tables[b, xy, z] == tables[b, x, yz]).all(axis=(1, 2, 3))
    T = tables
    bb = np.arange(m)[:, None, None]
    xx = np.arange(n)[None, :, None]
    yy = np.arange(n)[None, None, :]
    lhs = T[bb, neg[T[bb, neg[xx], yy]], yy]
    rhs = T[bb, neg[T[bb, neg[yy], xx]], xx]
    mv4 = (lhs == rhs).all(axis=(1, 2))
    return assoc & mv4


def isomorphism_classes(algebras):
    reps = []
    for A in algebras:
        if not any(find_isomorphism(A, R) is not None for R in reps):
            reps.append(A)
    return reps


def cross_check_catalog(max_order):
    """Exhaustive table search at each order 2..max_order against the catalog."""
    if max_order > CROSS_CHECK_LIMIT:
        raise SizeGuardError(f"cross-check limited to order {CROSS_CHECK_LIMIT}")
    if max_order < 2:
        raise MvError("cross-check needs max_order >= 2")
    catalog = generate_catalog(max_order)
    classes = {}
    witness = {"classes": classes, "tables": {}}
    for n in range(2, max_order + 1):
        found = mv_tables(n)
        witness["tables"][str(n)] = len(found)
        reps = isomorphism_classes(found)
        entries = [e for e in catalog if e.algebra.order == n]
        matched = []
        for R in reps:
            hits = [e.algebra_id for e in entries if find_isomorphism(R, e.algebra) is not None]
            if len(hits) != 1:
                return verdict_from(False, claim="catalog", algebra=f"order-{n}",
                                    witness={"reason": "search class not matched once", "oplus": R.oplus.tolist(),
                                             "neg": R.neg.tolist(), "matches": hits})
            matched.append(hits[0])
        missing = sorted({e.algebra_id for e in entries} - set(matched))
        if missing or len(entries) != len(reps):
            return verdict_from(False, claim="catalog", algebra=f"order-{n}",
                                witness={"reason": "catalog entry not found by search", "missing": missing})
        classes[str(n)] = sorted(matched)
    return verdict_from(True, claim="catalog", algebra=f"max-order-{max_order}", witness=witness)


def relabel(A, perm):
    """The algebra ``A`` transported along the bijection ``perm`` (perm[0] must be 0)."""
    perm = np.asarray(perm, dtype=np.int64)
    inv = np.empty_like(perm)
    inv[perm] = np.arange(len(perm))
    return MvAlgebra(perm[A.oplus[inv[:, None], inv[None, :]]], perm[A.neg[inv]])

