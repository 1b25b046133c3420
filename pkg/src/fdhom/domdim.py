"""Relative dominant and codominant dimension by two independent routes.

* greedy: the approximation chain engine; the value is the number of
  injective approximation maps, and a cokernel landing in add Q certifies
  an infinite value via the finite coresolution.

* criterion: for values >= 2, bijectivity of the evaluation map alpha
  (alpha_M(m)(f) = f(m)) together with vanishing of Tor_i^B of the two
  induced modules against DQ, where B is the opposite endomorphism algebra
  of Q.  Both Tor arguments are computed and must agree; a mismatch is a
  build-failing event.
"""

from dataclasses import dataclass, field

import numpy as np

from .approx import (
    ApproxStep,
    ChainResult,
    DomdimError,
    MethodDisagreement,
    addq_chain,
    alpha_map,
    universal_approximation,
    _criterion_modules,
    _q_package,
)
from .homology import tor
from .modules import ModuleRep
from .values import DimValue


@dataclass
class DomdimResult:
    value: DimValue
    method: str
    applicable: bool = True
    chain: ChainResult = None
    tor_table: list = field(default_factory=list)

    def to_json(self):
        out = {"value": self.value.to_json(), "method": self.method,
               "applicable": self.applicable}
        if self.chain is not None:
            out["chain"] = self.chain.to_json()
        if self.tor_table:
            out["tor_table"] = self.tor_table
        return out


def greedy_domdim(q: ModuleRep, m: ModuleRep, cap: int = 16) -> DomdimResult:
    """Dominant dimension of M relative to Q by greedy approximations.

    Exact finite values and closure-certified infinite values are certified;
    cap expiry (or a module size blowup) yields an explicit ">= k".
    """
    chain = addq_chain(q, m, cap)
    if chain.kind == "closed":
        return DomdimResult(DimValue.infinite(), "greedy", chain=chain)
    if chain.kind == "failed":
        return DomdimResult(DimValue.exact(chain.failed_step - 1), "greedy", chain=chain)
    bound = cap if chain.kind == "capped" else len(chain.steps)
    return DomdimResult(DimValue.at_least(bound), "greedy", chain=chain)


def tor_criterion_domdim(q: ModuleRep, m: ModuleRep, cap: int = 16) -> DomdimResult:
    """Dominant dimension via the endomorphism-side Tor vanishing test.

    Applicable only in the >= 2 regime (alpha bijective); below that the
    result is flagged inapplicable with the meaning "value < 2".  Both Tor
    arguments demanded by the characterisation are computed; they must agree
    degree by degree.
    """
    _, is_iso = alpha_map(m, q)
    if not is_iso:
        return DomdimResult(DimValue.at_least(0), "criterion", applicable=False)
    h1, h2, dq = _criterion_modules(q, m)
    table = []
    for i in range(1, max(cap - 1, 1)):
        t1 = tor(h1, dq, i)
        t2 = tor(h2, dq, i)
        if t1 != t2:  # pragma: no cover - equal over a field
            raise MethodDisagreement(
                f"criterion Tor arguments disagree in degree {i}: {t1} vs {t2}")
        table.append({"i": i, "tor": t1})
        if t1 != 0:
            return DomdimResult(DimValue.exact(i + 1), "criterion", tor_table=table)
    return DomdimResult(DimValue.at_least(cap), "criterion", tor_table=table)


def domdim(q: ModuleRep, m: ModuleRep, cap: int = 16, method: str = "greedy") -> DomdimResult:
    """Dispatch: greedy, criterion, or both with a hard agreement assertion."""
    if method == "greedy":
        return greedy_domdim(q, m, cap)
    if method == "criterion":
        return tor_criterion_domdim(q, m, cap)
    if method != "both":
        raise ValueError(f"unknown method {method!r}")
    g = greedy_domdim(q, m, cap)
    c = tor_criterion_domdim(q, m, cap)
    _assert_agreement(g, c)
    best = g
    if not g.value.certified and (c.value.certified or c.value.n > g.value.n):
        best = c
    # greedy always carries a value, so the combined result is applicable;
    # the tor table records whether the criterion contributed
    return DomdimResult(best.value, "both", applicable=True,
                        chain=g.chain, tor_table=c.tor_table)


def _assert_agreement(g: DomdimResult, c: DomdimResult):
    from .values import values_agree
    if not c.applicable:
        if g.value.known_at_least(2):
            raise MethodDisagreement(
                f"criterion inapplicable but greedy found {g.value}")
        return
    if not g.value.known_at_least(2) and g.value.certified:
        raise MethodDisagreement(
            f"criterion applicable (>= 2) but greedy certified {g.value}")
    if not values_agree(g.value, c.value):
        raise MethodDisagreement(f"methods disagree: greedy {g.value}, criterion {c.value}")


def codomdim(q: ModuleRep, m: ModuleRep, cap: int = 16, method: str = "greedy") -> DomdimResult:
    """Relative codominant dimension, delegated through duality."""
    res = domdim(q.dual(), m.dual(), cap, method)
    res.method = f"{res.method} (dual)"
    return res
