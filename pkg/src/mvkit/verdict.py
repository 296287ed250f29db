"""Audit verdict records and their JSON Lines encoding."""
import json
from dataclasses import dataclass, field
from typing import Any

import numpy as np

HOLDS = "holds"
COUNTEREXAMPLE = "counterexample"
NOT_APPLICABLE = "not-applicable"


def jsonable(value):
    """Convert numpy scalars, tuples and sets into plain JSON values."""
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return [jsonable(v) for v in sorted(value)]
    if isinstance(value, np.ndarray):
        return [jsonable(v) for v in value.tolist()]
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    return value


@dataclass(frozen=True)
class ClaimVerdict:
    claim: str
    algebra: str
    verdict: str
    params: tuple = ()
    witness: Any = field(default=None, compare=False)

    def __post_init__(self):
        if self.verdict not in (HOLDS, COUNTEREXAMPLE, NOT_APPLICABLE):
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.verdict == COUNTEREXAMPLE and self.witness is None:
            raise ValueError(f"{self.claim}: counterexample without witness")

    @property
    def holds(self):
        return self.verdict == HOLDS

    def to_record(self):
        return {
            "claim": self.claim,
            "algebra": self.algebra,
            "params": {k: jsonable(v) for k, v in self.params},
            "verdict": self.verdict,
            "witness": jsonable(self.witness),
        }

    def to_json(self):
        return json.dumps(self.to_record(), sort_keys=True)

    def to_text(self):
        params = " ".join(f"{k}={v}" for k, v in self.params)
        head = f"{self.claim:<6} {self.algebra:<12} {params:<10} {self.verdict}"
        if self.verdict == HOLDS or self.witness is None:
            return head.rstrip()
        return f"{head}  {json.dumps(jsonable(self.witness), sort_keys=True)}"


def verdict_from(ok, **kw):
    return ClaimVerdict(verdict=HOLDS if ok else COUNTEREXAMPLE, **kw)
