#!/usr/bin/env python3
"""Standalone brute-force verdicts for claims R4.2, E4.8 and T4.17.

Deliberately imports nothing from ``mvkit``: chain products are built from
component tuples with truncated addition, every identity is evaluated by
direct iteration over the raw tables. The campaign runner must emit the
same JSON lines for these three claims.

Usage::

    python oracles/ambiguity_oracle.py --catalog 9 [--algebra FILE ...]
"""
import argparse
import itertools
import json
import pathlib
import sys


def chain_multisets(max_order):
    found = []

    def grow(prefix, smallest, product):
        if prefix:
            found.append(tuple(prefix))
        for n in range(smallest, max_order + 1):
            if product * n > max_order:
                break
            grow(prefix + [n], n, product * n)

    grow([], 2, 1)
    found.sort(key=lambda ns: (_prod(ns), ns))
    return found


def _prod(ns):
    p = 1
    for n in ns:
        p *= n
    return p


def chain_product_tables(ns):
    elements = list(itertools.product(*[range(n) for n in ns]))
    index = {e: i for i, e in enumerate(elements)}
    oplus = [
        [index[tuple(min(n - 1, a + b) for n, a, b in zip(ns, x, y))] for y in elements]
        for x in elements
    ]
    neg = [index[tuple(n - 1 - a for n, a in zip(ns, x))] for x in elements]
    return oplus, neg


def read_algebra_file(path):
    lines = [ln for ln in pathlib.Path(path).read_text().splitlines() if not ln.startswith("#")]
    assert lines[0] == "mvalg v1"
    n = int(lines[1].split()[1])
    neg = [int(t) for t in lines[2].split()[1:]]
    oplus = [[int(t) for t in ln.split()] for ln in lines[4:4 + n]]
    return oplus, neg


class Tables:
    def __init__(self, oplus, neg):
        self.n = len(neg)
        self.oplus = oplus
        self.neg = neg
        self.one = neg[0]
        R = range(self.n)
        self.odot = [[neg[oplus[neg[x]][neg[y]]] for y in R] for x in R]
        self.imp = [[oplus[neg[x]][y] for y in R] for x in R]

    def le(self, x, y):
        return self.oplus[self.neg[x]][y] == self.one


def first_pair(n, bad):
    for x in range(n):
        for y in range(n):
            if bad(x, y):
                return [x, y]
    return None


def first_single(n, bad):
    for x in range(n):
        if bad(x):
            return [x]
    return None


def r42_lines(aid, T):
    R = range(T.n)
    for a in R:
        d = [T.odot[x][a] for x in R]
        der = first_pair(T.n, lambda x, y: d[T.odot[x][y]] != T.oplus[T.odot[d[x]][y]][T.odot[x][d[y]]])
        add = first_pair(T.n, lambda x, y: d[T.oplus[x][y]] != T.oplus[d[x]][d[y]])
        center = T.oplus[a][a] == a
        additive_derivation = der is None and add is None
        yield {
            "claim": "R4.2",
            "algebra": aid,
            "params": {"a": a},
            "verdict": "holds" if additive_derivation == center else "counterexample",
            "witness": {
                "center": center,
                "derivation": der is None,
                "derivation_violation": der,
                "oplus_preserving": add is None,
                "oplus_violation": add,
            },
        }


def galois(T, f, g):
    n = T.n
    at = first_pair(n, lambda x, y: T.le(x, y) and not T.le(f[x], f[y]))
    if at is not None:
        return {"clause": "f-isotone", "at": at}
    at = first_pair(n, lambda x, y: T.le(x, y) and not T.le(g[x], g[y]))
    if at is not None:
        return {"clause": "g-isotone", "at": at}
    at = first_single(n, lambda x: not T.le(x, g[f[x]]))
    if at is not None:
        return {"clause": "unit", "at": at}
    at = first_single(n, lambda y: not T.le(f[g[y]], y))
    if at is not None:
        return {"clause": "counit", "at": at}
    return None


def e48_lines(aid, T):
    R = range(T.n)
    for a in R:
        if T.oplus[a][a] != a:
            continue
        nu = [T.oplus[a][x] for x in R]
        mu = [T.odot[x][a] for x in R]
        mu_der = first_pair(T.n, lambda x, y: mu[T.odot[x][y]] != T.oplus[T.odot[mu[x]][y]][T.odot[x][mu[y]]])
        mu_add = first_pair(T.n, lambda x, y: mu[T.oplus[x][y]] != T.oplus[mu[x]][mu[y]])
        nu_imp = first_pair(T.n, lambda x, y: nu[T.imp[x][y]] != T.imp[nu[x]][nu[y]])
        nu_id = first_pair(T.n, lambda x, y: nu[T.imp[x][y]] != T.oplus[T.imp[nu[x]][y]][T.imp[x][nu[y]]])
        nm = galois(T, nu, mu)
        mn = galois(T, mu, nu)
        yield {
            "claim": "E4.8",
            "algebra": aid,
            "params": {"a": a},
            "verdict": "holds" if nm is None or mn is None else "counterexample",
            "witness": {
                "mu_additive_derivation": mu_der is None and mu_add is None,
                "mu_nu": mn,
                "nu_implicative": nu_imp is None and nu_id is None,
                "nu_mu": nm,
            },
        }


def iso_defect(T, phi, factors):
    """phi: x -> tuple of L-elements; factors: list of (members, bottom, negation)."""
    n = T.n
    images = [phi(x) for x in range(n)]
    at = first_single(n, lambda x: any(c not in fac[0] for c, fac in zip(images[x], factors)))
    if at is not None:
        return {"reason": "codomain", "at": at}
    if tuple(images[0]) != tuple(fac[1] for fac in factors):
        return {"reason": "zero", "at": [0]}
    at = first_pair(
        n,
        lambda x, y: tuple(images[T.oplus[x][y]])
        != tuple(T.oplus[u][v] for u, v in zip(images[x], images[y])),
    )
    if at is not None:
        return {"reason": "oplus", "at": at}
    at = first_single(
        n, lambda x: tuple(images[T.neg[x]]) != tuple(fac[2](c) for c, fac in zip(images[x], factors))
    )
    if at is not None:
        return {"reason": "neg", "at": at}
    at = first_pair(n, lambda x, y: x < y and images[x] == images[y])
    if at is not None:
        return {"reason": "injective", "at": at}
    size = 1
    for fac in factors:
        size *= len(fac[0])
    if size != n:
        return {"reason": "surjective", "at": []}
    return None


def t417_lines(aid, T):
    R = range(T.n)
    for a in R:
        if T.oplus[a][a] != a:
            continue
        ac = T.neg[a]
        fix_ga = ({x for x in R if T.oplus[a][x] == x}, a, lambda x, a=a: T.oplus[a][T.neg[x]])
        fix_gac = ({x for x in R if T.imp[a][x] == x}, ac, lambda x, a=a: T.imp[a][T.neg[x]])
        maps = {
            "printed": lambda x, a=a: (T.oplus[x][a], T.imp[x][a]),
            "variant": lambda x, a=a: (T.oplus[x][a], T.imp[a][x]),
        }
        orders = {"gA,gA*": [fix_ga, fix_gac], "gA*,gA": [fix_gac, fix_ga]}
        witness = {}
        for mname, phi in maps.items():
            for oname, factors in orders.items():
                witness[f"{mname}:{oname}"] = iso_defect(T, phi, factors)
        holding = sorted(k for k, v in witness.items() if v is None)
        witness["holding"] = holding
        printed_ok = any(k.startswith("printed:") for k in holding)
        yield {
            "claim": "T4.17",
            "algebra": aid,
            "params": {"a": a},
            "verdict": "holds" if printed_ok else "counterexample",
            "witness": witness,
        }


def oracle_lines(aid, oplus, neg):
    T = Tables(oplus, neg)
    for gen in (r42_lines, e48_lines, t417_lines):
        for rec in gen(aid, T):
            yield json.dumps(rec, sort_keys=True)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--catalog", type=int, default=0, help="max order of chain products")
    ap.add_argument("--algebra", action="append", default=[], help="mvalg v1 file")
    args = ap.parse_args(argv)
    for ns in chain_multisets(args.catalog) if args.catalog >= 2 else []:
        aid = "x".join(f"S{n}" for n in ns)
        for line in oracle_lines(aid, *chain_product_tables(ns)):
            print(line)
    for path in args.algebra:
        for line in oracle_lines(pathlib.Path(path).stem, *read_algebra_file(path)):
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
