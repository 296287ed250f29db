"""Exhaustive table kernels.

Every kernel exists twice: a loop version compiled by numba (``*_nb``) and a
vectorized numpy version (``*_np``). The public names bind to one of them
according to :data:`mvkit._jit.USE_NUMBA`. Tables are ``int64`` arrays of
element indices; ``maps`` is an ``(m, n)`` array holding one unary map per
row.
"""
import numpy as np

from ._jit import USE_NUMBA, njit

AXIOMS = (
    "MV1-comm",
    "MV1-assoc",
    "MV1-unit",
    "MV2",
    "MV3",
    "MV4",
    "order-refl",
    "order-antisym",
    "order-trans",
    "join-lub",
    "meet-glb",
    "distributive",
)
AXIOM_ARITY = (2, 3, 1, 1, 1, 2, 1, 2, 3, 3, 3, 3)

_CHUNK = 4096


# --------------------------------------------------------------------------
# numba loop kernels
# --------------------------------------------------------------------------


@njit
def _derived_nb(oplus, neg):
    n = neg.shape[0]
    one = neg[0]
    odot = np.empty((n, n), np.int64)
    imp = np.empty((n, n), np.int64)
    leq = np.empty((n, n), np.bool_)
    for x in range(n):
        for y in range(n):
            odot[x, y] = neg[oplus[neg[x], neg[y]]]
            imp[x, y] = oplus[neg[x], y]
            leq[x, y] = imp[x, y] == one
    join = np.empty((n, n), np.int64)
    meet = np.empty((n, n), np.int64)
    for x in range(n):
        for y in range(n):
            join[x, y] = oplus[odot[x, neg[y]], y]
            meet[x, y] = odot[x, imp[x, y]]
    return odot, imp, leq, join, meet


@njit
def _axiom_witnesses_nb(oplus, neg):
    n = neg.shape[0]
    one = neg[0]
    out = np.full((12, 3), -1, np.int64)
    odot, imp, leq, join, meet = _derived_nb(oplus, neg)

    # pairs: MV1-comm (0), MV4 (5), order-antisym (7)
    for x in range(n):
        for y in range(n):
            if out[0, 0] < 0 and oplus[x, y] != oplus[y, x]:
                out[0, 0] = x
                out[0, 1] = y
            if out[5, 0] < 0:
                lhs = oplus[neg[oplus[neg[x], y]], y]
                rhs = oplus[neg[oplus[neg[y], x]], x]
                if lhs != rhs:
                    out[5, 0] = x
                    out[5, 1] = y
            if out[7, 0] < 0 and x != y and leq[x, y] and leq[y, x]:
                out[7, 0] = x
                out[7, 1] = y

    # singles: MV1-unit (2), MV2 (3), MV3 (4), order-refl (6)
    for x in range(n):
        if out[2, 0] < 0 and oplus[x, 0] != x:
            out[2, 0] = x
        if out[3, 0] < 0 and neg[neg[x]] != x:
            out[3, 0] = x
        if out[4, 0] < 0 and oplus[one, x] != one:
            out[4, 0] = x
        if out[6, 0] < 0 and not leq[x, x]:
            out[6, 0] = x

    # triples: MV1-assoc (1), order-trans (8), join-lub (9), meet-glb (10), distributive (11)
    for x in range(n):
        for y in range(n):
            j = join[x, y]
            m = meet[x, y]
            for z in range(n):
                if out[1, 0] < 0 and oplus[oplus[x, y], z] != oplus[x, oplus[y, z]]:
                    out[1, 0] = x
                    out[1, 1] = y
                    out[1, 2] = z
                if out[8, 0] < 0 and leq[x, y] and leq[y, z] and not leq[x, z]:
                    out[8, 0] = x
                    out[8, 1] = y
                    out[8, 2] = z
                if out[9, 0] < 0:
                    ok = leq[x, j] and leq[y, j]
                    if ok and leq[x, z] and leq[y, z]:
                        ok = leq[j, z]
                    if not ok:
                        out[9, 0] = x
                        out[9, 1] = y
                        out[9, 2] = z
                if out[10, 0] < 0:
                    ok = leq[m, x] and leq[m, y]
                    if ok and leq[z, x] and leq[z, y]:
                        ok = leq[z, m]
                    if not ok:
                        out[10, 0] = x
                        out[10, 1] = y
                        out[10, 2] = z
                if out[11, 0] < 0 and meet[x, join[y, z]] != join[meet[x, y], meet[x, z]]:
                    out[11, 0] = x
                    out[11, 1] = y
                    out[11, 2] = z
    return out


@njit
def _leibniz_mask_nb(maps, mul, add):
    m, n = maps.shape
    out = np.ones(m, np.bool_)
    for k in range(m):
        d = maps[k]
        ok = True
        for x in range(n):
            for y in range(n):
                if d[mul[x, y]] != add[mul[d[x], y], mul[x, d[y]]]:
                    ok = False
                    break
            if not ok:
                break
        out[k] = ok
    return out


@njit
def _homomorphic_mask_nb(maps, table):
    m, n = maps.shape
    out = np.ones(m, np.bool_)
    for k in range(m):
        d = maps[k]
        ok = True
        for x in range(n):
            for y in range(n):
                if d[table[x, y]] != table[d[x], d[y]]:
                    ok = False
                    break
            if not ok:
                break
        out[k] = ok
    return out


@njit
def _two_sided_mask_nb(maps, table):
    m, n = maps.shape
    out = np.ones(m, np.bool_)
    for k in range(m):
        d = maps[k]
        ok = True
        for x in range(n):
            for y in range(n):
                v = d[table[x, y]]
                if v != table[d[x], y] or v != table[x, d[y]]:
                    ok = False
                    break
            if not ok:
                break
        out[k] = ok
    return out


@njit
def _isotone_mask_nb(maps, leq):
    m, n = maps.shape
    out = np.ones(m, np.bool_)
    for k in range(m):
        d = maps[k]
        ok = True
        for x in range(n):
            for y in range(n):
                if leq[x, y] and not leq[d[x], d[y]]:
                    ok = False
                    break
            if not ok:
                break
        out[k] = ok
    return out


# --------------------------------------------------------------------------
# numpy kernels
# --------------------------------------------------------------------------


def _derived_np(oplus, neg):
    n = neg.shape[0]
    one = neg[0]
    col = np.arange(n)[None, :]
    odot = neg[oplus[neg[:, None], neg[None, :]]]
    imp = oplus[neg[:, None], col]
    leq = imp == one
    join = oplus[odot[np.arange(n)[:, None], neg[None, :]], col]
    meet = odot[np.arange(n)[:, None], imp]
    return odot, imp, leq, join, meet


def _first(bad):
    hits = np.argwhere(bad)
    return hits[0] if len(hits) else None


def _axiom_witnesses_np(oplus, neg):
    n = neg.shape[0]
    one = neg[0]
    out = np.full((12, 3), -1, np.int64)
    odot, imp, leq, join, meet = _derived_np(oplus, neg)
    X = np.arange(n)[:, None, None]
    Y = np.arange(n)[None, :, None]
    Z = np.arange(n)[None, None, :]
    x2 = np.arange(n)[:, None]
    y2 = np.arange(n)[None, :]

    j = join[:, :, None]
    m = meet[:, :, None]
    upper = leq[X, Z] & leq[Y, Z]
    lower = leq[Z, X] & leq[Z, Y]
    checks = [
        oplus != oplus.T,
        oplus[oplus[X, Y], Z] != oplus[X, oplus[Y, Z]],
        oplus[:, 0] != np.arange(n),
        neg[neg] != np.arange(n),
        oplus[one, :] != one,
        oplus[neg[oplus[neg[x2], y2]], y2] != oplus[neg[oplus[neg[y2], x2]], x2],
        ~np.diag(leq),
        (x2 != y2) & leq & leq.T,
        leq[X, Y] & leq[Y, Z] & ~leq[X, Z],
        ~(leq[X, j] & leq[Y, j] & (~upper | leq[j, Z])),
        ~(leq[m, X] & leq[m, Y] & (~lower | leq[Z, m])),
        meet[X, join[Y, Z]] != join[meet[X, Y], meet[X, Z]],
    ]
    for k, bad in enumerate(checks):
        bad = np.broadcast_to(bad, (n,) * AXIOM_ARITY[k])
        w = _first(bad)
        if w is not None:
            out[k, : len(w)] = w
    return out


def _chunks(maps):
    for start in range(0, maps.shape[0], _CHUNK):
        yield maps[start : start + _CHUNK]


def _leibniz_mask_np(maps, mul, add):
    n = maps.shape[1]
    cols = np.arange(n)
    parts = []
    for d in _chunks(maps):
        lhs = d[:, mul]
        dx = d[:, :, None]
        dy = d[:, None, :]
        rhs = add[mul[dx, cols[None, None, :]], mul[cols[None, :, None], dy]]
        parts.append((lhs == rhs).all(axis=(1, 2)))
    return np.concatenate(parts) if parts else np.ones(0, bool)


def _homomorphic_mask_np(maps, table):
    parts = []
    for d in _chunks(maps):
        lhs = d[:, table]
        rhs = table[d[:, :, None], d[:, None, :]]
        parts.append((lhs == rhs).all(axis=(1, 2)))
    return np.concatenate(parts) if parts else np.ones(0, bool)


def _two_sided_mask_np(maps, table):
    n = maps.shape[1]
    cols = np.arange(n)
    parts = []
    for d in _chunks(maps):
        lhs = d[:, table]
        left = table[d[:, :, None], cols[None, None, :]]
        right = table[cols[None, :, None], d[:, None, :]]
        parts.append(((lhs == left) & (lhs == right)).all(axis=(1, 2)))
    return np.concatenate(parts) if parts else np.ones(0, bool)


def _isotone_mask_np(maps, leq):
    parts = []
    for d in _chunks(maps):
        img = leq[d[:, :, None], d[:, None, :]]
        parts.append((~leq[None] | img).all(axis=(1, 2)))
    return np.concatenate(parts) if parts else np.ones(0, bool)


NUMPY_KERNELS = {
    "axiom_witnesses": _axiom_witnesses_np,
    "leibniz_mask": _leibniz_mask_np,
    "homomorphic_mask": _homomorphic_mask_np,
    "two_sided_mask": _two_sided_mask_np,
    "isotone_mask": _isotone_mask_np,
}
NUMBA_KERNELS = {
    "axiom_witnesses": _axiom_witnesses_nb,
    "leibniz_mask": _leibniz_mask_nb,
    "homomorphic_mask": _homomorphic_mask_nb,
    "two_sided_mask": _two_sided_mask_nb,
    "isotone_mask": _isotone_mask_nb,
}
ACTIVE = NUMBA_KERNELS if USE_NUMBA else NUMPY_KERNELS
BACKEND = "numba" if USE_NUMBA else "numpy"


def _i64(a):
    return np.ascontiguousarray(a, dtype=np.int64)


def axiom_witnesses(oplus, neg):
    """First violating tuple per entry of :data:`AXIOMS`; rows of ``-1`` pass."""
    return ACTIVE["axiom_witnesses"](_i64(oplus), _i64(neg))


def leibniz_mask(maps, mul, add):
    """Rows ``d`` with ``d(mul(x,y)) == add(mul(d(x),y), mul(x,d(y)))`` for all x, y."""
    return ACTIVE["leibniz_mask"](_i64(maps), _i64(mul), _i64(add))


def homomorphic_mask(maps, table):
    """Rows ``d`` with ``d(t(x,y)) == t(d(x),d(y))``."""
    return ACTIVE["homomorphic_mask"](_i64(maps), _i64(table))


def two_sided_mask(maps, table):
    """Rows ``d`` with ``d(t(x,y)) == t(d(x),y) == t(x,d(y))``."""
    return ACTIVE["two_sided_mask"](_i64(maps), _i64(table))


def isotone_mask(maps, leq):
    """Rows ``d`` with ``x <= y`` implying ``d(x) <= d(y)``."""
    return ACTIVE["isotone_mask"](_i64(maps), np.ascontiguousarray(leq, dtype=np.bool_))
