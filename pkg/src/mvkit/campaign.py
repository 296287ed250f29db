"""The audit campaign: every registered claim on every algebra of a catalog.

Output order is the catalog order, then the registry order of
:data:`CLAIMS`, then the order each audit emits its parameters in (ascending
element index). Two runs over the same inputs therefore give identical
byte streams.
"""
from dataclasses import dataclass, field
from functools import cached_property

from .algebra import MvAlgebra, boolean_center, identity_suite
from .derivations import enumerate_maps
from .errors import MvError
from . import structure as st
from .verdict import verdict_from

CLAIMS = (
    "P2.3", "P2.4", "P2.5", "T3.10", "T3.12", "T3.13", "T3.14", "C3.15", "T3.16",
    "E3.17", "P3.18", "P3.20", "T4.1", "R4.2", "T4.5", "E4.8", "T4.9", "T4.10",
    "T4.11", "C4.12", "C4.13", "T4.14", "T4.15", "T4.16", "T4.17", "T4.18",
    "T4.19", "T4.20", "T4.21", "T4.22", "T4.23", "T4.24", "T4.25", "L3.11",
)


@dataclass(eq=False)
class AuditContext:
    """One algebra with the searches shared across claims, computed on first use."""

    algebra_id: str
    algebra: MvAlgebra
    _memo: dict = field(default_factory=dict)

    @cached_property
    def center(self):
        return list(boolean_center(self.algebra))

    @cached_property
    def additive(self):
        return enumerate_maps(self.algebra, "additive")

    @cached_property
    def derivations(self):
        """(space, maps): all derivations on small algebras, the additive ones otherwise."""
        if self.algebra.order <= st.GENERAL_ENUMERATION_ORDER:
            return "enumerated", enumerate_maps(self.algebra, "general")
        return "additive-only", self.additive

    def once(self, key, fn):
        """Run an audit that yields records for several claims a single time."""
        if key not in self._memo:
            self._memo[key] = fn()
        return self._memo[key]

    def per_center(self, fn):
        return [v for a in self.center for v in fn(self.algebra, a, self.algebra_id)]


def _identities(ctx, claim):
    return [v for v in ctx.once("identities", lambda: identity_suite(ctx.algebra, ctx.algebra_id)) if v.claim == claim]


def _t310(ctx):
    space, maps = ctx.derivations
    all_true = 0
    for d in maps:
        v = st.audit_equivalence_T3_10(ctx.algebra, d, ctx.algebra_id)
        if not v.holds:
            return [verdict_from(False, claim="T3.10", algebra=ctx.algebra_id,
                                 witness={"map": list(d.image), "vector": v.witness["vector"], "space": space})]
        all_true += v.witness["vector"][0]
    return [verdict_from(True, claim="T3.10", algebra=ctx.algebra_id,
                         witness={"space": space, "derivations": len(maps), "additive": all_true})]


def _per_additive(fn):
    return lambda ctx: [fn(ctx.algebra, d, algebra_id=ctx.algebra_id) for d in ctx.additive]


def _t316(ctx):
    has_identity = any(d(ctx.algebra.one) == ctx.algebra.one for d in ctx.additive)
    return [st.audit_identity_criteria(ctx.algebra, d, vacuous=not has_identity, algebra_id=ctx.algebra_id)
            for d in ctx.additive]


def _single(fn):
    return lambda ctx: [fn(ctx.algebra, ctx.algebra_id)]


def _grouped(key, fn, claim):
    """Claims audited together per center element; pick the records of one claim."""
    def run(ctx):
        records = ctx.once(key, lambda: ctx.per_center(fn))
        return [v for v in records if v.claim == claim]
    return run


def _per_center_single(fn):
    return lambda ctx: [fn(ctx.algebra, a, ctx.algebra_id) for a in ctx.center]


def _center_isos(claim):
    def run(ctx):
        records = ctx.once("center-isos", lambda: st.audit_center_isos(ctx.algebra, ctx.algebra_id))
        return [v for v in records if v.claim == claim]
    return run


REGISTRY = {
    "P2.3": lambda ctx: _identities(ctx, "P2.3"),
    "P2.4": lambda ctx: _identities(ctx, "P2.4"),
    "P2.5": lambda ctx: _identities(ctx, "P2.5"),
    "T3.10": _t310,
    "T3.12": _per_additive(st.audit_fix_additive),
    "T3.13": _per_additive(st.audit_quotient_iso),
    "T3.14": _single(st.audit_center_maps),
    "C3.15": _single(st.audit_boolean_maps),
    "T3.16": _t316,
    "E3.17": _single(st.audit_example_s3),
    "P3.18": _per_additive(st.audit_fix_ideal),
    "P3.20": lambda ctx: st.audit_prime_ideal_derivations(ctx.algebra, ctx.algebra_id),
    "T4.1": _single(st.audit_boolean_by_d),
    "R4.2": lambda ctx: st.audit_remark_4_2(ctx.algebra, ctx.algebra_id),
    "T4.5": _single(st.audit_boolean_by_g),
    "E4.8": _per_center_single(st.audit_example_4_8),
    "T4.9": _per_center_single(st.audit_adjoint),
    "T4.20": _single(st.audit_fix_shapes),
    "T4.21": lambda ctx: [st.audit_derivation_lattice(ctx.algebra, "D", ctx.algebra_id)],
    "T4.22": lambda ctx: [st.audit_derivation_lattice(ctx.algebra, "G", ctx.algebra_id)],
    "L3.11": _single(st.audit_lattice_derivations),
}
for _claim in ("T4.10", "T4.11", "C4.12", "C4.13"):
    REGISTRY[_claim] = _grouped("fix", st.audit_fix_canonical, _claim)
for _claim in ("T4.14", "T4.15"):
    REGISTRY[_claim] = _grouped("relative", st.audit_relativization_isos, _claim)
for _claim in ("T4.16", "T4.17", "T4.18", "T4.19"):
    REGISTRY[_claim] = _grouped("decompose", st.audit_decompositions, _claim)
for _claim in ("T4.23", "T4.24", "T4.25"):
    REGISTRY[_claim] = _center_isos(_claim)
assert tuple(sorted(REGISTRY)) == tuple(sorted(CLAIMS))


def _entries(catalog):
    for entry in catalog:
        if isinstance(entry, tuple):
            yield entry
        else:
            yield entry.algebra_id, entry.algebra


def run_campaign(catalog, claim_filter=None):
    """Yield a ClaimVerdict for each (algebra, claim, parameter) cell."""
    entries = list(_entries(catalog))
    if not entries:
        raise MvError("campaign needs a nonempty catalog")
    claims = CLAIMS
    if claim_filter:
        unknown = sorted(set(claim_filter) - set(CLAIMS))
        if unknown:
            raise MvError(f"unknown claim ids: {', '.join(unknown)}")
        claims = tuple(c for c in CLAIMS if c in set(claim_filter))
    for algebra_id, A in entries:
        ctx = AuditContext(algebra_id, A)
        for claim in claims:
            yield from REGISTRY[claim](ctx)


def summarize(verdicts):
    """{claim: {verdict: count}} in registry order."""
    out = {}
    for v in verdicts:
        out.setdefault(v.claim, {}).setdefault(v.verdict, 0)
        out[v.claim][v.verdict] += 1
    return {c: out[c] for c in CLAIMS if c in out}
