"""Instance-level conjecture probes.

Scanning never claims proofs: each instance is classified as confirmed,
uncertified, skipped (hypotheses certifiably fail), or COUNTEREXAMPLE, and
a counterexample is only declared when every ingredient is certified.
"""

from dataclasses import dataclass, field

from .correspondence import quasi_generator_degree
from .domdim import greedy_domdim
from .homology import idim, is_self_orthogonal, pdim
from .modules import ModuleRep, injective_cogenerator
from .values import DimValue


@dataclass
class TiltingResult:
    holds: bool
    certified: bool
    pdim: DimValue = None
    self_orthogonal: bool = None
    degree_status: str = ""
    degree: int = -1
    level: int = -1  # the n for which T is n-tilting (when holds)

    def to_json(self):
        return {"holds": self.holds, "certified": self.certified,
                "pdim": self.pdim.to_json() if self.pdim else None,
                "self_orthogonal": self.self_orthogonal,
                "degree_status": self.degree_status, "degree": self.degree,
                "level": self.level}


def is_tilting(t: ModuleRep, cap: int = 16, n: int = None) -> TiltingResult:
    """Tilting = finite projective dimension + self-orthogonal + finite
    quasi-generator degree; when ``n`` is given both pdim and the degree must
    stay below it."""
    pd = pdim(t, cap)
    so = is_self_orthogonal(t, cap)
    deg = quasi_generator_degree(t, cap)
    res = TiltingResult(False, False, pdim=pd, self_orthogonal=so.holds,
                        degree_status=deg.status, degree=deg.value)
    if so.certified and not so.holds:
        res.certified = True
        return res
    if deg.status == "none":
        res.certified = True
        return res
    if pd.is_finite_exact and so.certified and so.holds and deg.status == "degree":
        level = max(pd.n, deg.value) if n is None else n
        ok = pd.n <= level and deg.value <= level
        res.holds = ok
        res.certified = True
        res.level = level
        return res
    if n is not None:
        if pd.is_finite_exact and pd.n > n:
            res.certified = True
            return res
        if deg.status == "degree" and deg.value > n:
            res.certified = True
            return res
    return res  # uncertified


@dataclass
class ConjectureVerdict:
    """One scanned instance of the self-orthogonal quasi-generator bound."""

    instance: str
    status: str  # "confirmed" | "uncertified" | "skipped" | "COUNTEREXAMPLE"
    reason: str = ""
    degree: int = -1
    pdim: DimValue = None
    self_orthogonal_certified: bool = False

    def to_json(self):
        return {"instance": self.instance, "status": self.status,
                "reason": self.reason, "degree": self.degree,
                "pdim": self.pdim.to_json() if self.pdim else None,
                "self_orthogonal_certified": self.self_orthogonal_certified}


def check_quasi_generator_bound(m: ModuleRep, cap: int = 16, instance: str = "") -> ConjectureVerdict:
    """Does a self-orthogonal quasi-generator of degree n have pdim <= n?

    Counterexamples require, with certificates: self-orthogonality, an exact
    degree n, and pdim > n (exact or periodicity-certified infinite).
    """
    name = instance or m.name or "module"
    # cheap certified rejections first: one Ext, then the degree chain
    from .homology import ext
    if not m.is_zero() and ext(m, m, 1) != 0:
        return ConjectureVerdict(name, "skipped", reason="not self-orthogonal",
                                 self_orthogonal_certified=True)
    deg = quasi_generator_degree(m, cap)
    if deg.status == "none":
        return ConjectureVerdict(name, "skipped", reason="not a quasi-generator")
    so = is_self_orthogonal(m, cap)
    if so.certified and not so.holds:
        return ConjectureVerdict(name, "skipped", reason="not self-orthogonal",
                                 self_orthogonal_certified=True)
    if not so.certified or deg.status != "degree":
        why = []
        if not so.certified:
            why.append("self-orthogonality only checked up to cap")
        if deg.status != "degree":
            why.append("degree undecided at cap")
        return ConjectureVerdict(name, "uncertified", reason="; ".join(why),
                                 degree=deg.value if deg.status == "degree" else -1)
    pd = pdim(m, cap, certify_periodic=True)
    if pd.is_finite_exact:
        if pd.n <= deg.value:
            return ConjectureVerdict(name, "confirmed", degree=deg.value, pdim=pd,
                                     self_orthogonal_certified=True)
        return ConjectureVerdict(name, "COUNTEREXAMPLE",
                                 reason=f"pdim {pd.n} exceeds degree {deg.value}",
                                 degree=deg.value, pdim=pd,
                                 self_orthogonal_certified=True)
    if pd.kind == "infinite":
        return ConjectureVerdict(name, "COUNTEREXAMPLE",
                                 reason="certified infinite pdim with finite degree",
                                 degree=deg.value, pdim=pd,
                                 self_orthogonal_certified=True)
    return ConjectureVerdict(name, "uncertified", reason="pdim undecided at cap",
                             degree=deg.value, pdim=pd,
                             self_orthogonal_certified=True)


def scan_quasi_generator_bound(instances, cap: int = 16):
    """Scan (name, module) pairs; returns all verdicts in input order."""
    out = []
    for name, m in instances:
        out.append(check_quasi_generator_bound(m, cap, instance=name))
    return out


@dataclass
class ProbeReport:
    title: str
    status: str  # "confirmed" | "hypotheses-not-met" | "uncertified" | "disagree"
    facts: dict = field(default_factory=dict)

    def to_json(self):
        return {"title": self.title, "status": self.status, "facts": self.facts}


def wakamatsu_probe(t: ModuleRep, cap: int = 16) -> ProbeReport:
    """Check the hypotheses (self-orthogonal, finite pdim, relative dominant
    dimension of the algebra certified infinite) and whether the tilting
    conclusion holds on this instance."""
    so = is_self_orthogonal(t, cap)
    pd = pdim(t, cap)
    reg = ModuleRep.regular(t.algebra, t.side)
    dd = greedy_domdim(t, reg, cap)
    facts = {"self_orthogonal": so.holds, "self_orthogonal_certified": so.certified,
             "pdim": str(pd), "domdim_of_algebra": str(dd.value)}
    hypotheses_fail = ((so.certified and not so.holds)
                       or dd.value.is_finite_exact)
    if hypotheses_fail:
        return ProbeReport("wakamatsu tilting probe", "hypotheses-not-met", facts)
    certified = so.certified and pd.is_finite_exact and dd.value.kind == "infinite"
    if not certified:
        return ProbeReport("wakamatsu tilting probe", "uncertified", facts)
    til = is_tilting(t, cap)
    facts["tilting"] = til.to_json()
    if til.certified and til.holds:
        return ProbeReport("wakamatsu tilting probe", "confirmed", facts)
    if til.certified and not til.holds:
        return ProbeReport("wakamatsu tilting probe", "disagree", facts)
    return ProbeReport("wakamatsu tilting probe", "uncertified", facts)


def gorenstein_probe(alg, cap: int = 16) -> ProbeReport:
    """Compare 'the injective cogenerator has a certified quasi-generator
    degree' with 'both regular modules have finite injective dimension'."""
    da = injective_cogenerator(alg, "left")
    deg = quasi_generator_degree(da, cap)
    left_reg = ModuleRep.regular(alg, "left")
    right_reg = ModuleRep.regular(alg, "right")
    idl = idim(left_reg, cap)
    idr = idim(right_reg, cap)
    facts = {"cogenerator_degree": deg.to_json(), "idim_left": str(idl),
             "idim_right": str(idr)}
    if not deg.certified or not idl.certified or not idr.certified:
        return ProbeReport("gorenstein probe", "uncertified", facts)
    has_degree = deg.status == "degree"
    finite_idims = idl.is_finite_exact and idr.is_finite_exact
    status = "confirmed" if has_degree == finite_idims else "disagree"
    return ProbeReport("gorenstein probe", status, facts)
