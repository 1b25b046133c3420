"""Certified dimension values: exact integers, capped lower bounds, infinity."""

from dataclasses import dataclass


@dataclass(frozen=True)
class DimValue:
    """A homological dimension: exact n, ">= bound" (uncertified), or infinite.

    Exact and infinite values are certified; "at least" values record that a
    search stopped at a configured cap without deciding.
    """

    kind: str  # "exact" | "atleast" | "infinite"
    n: int = 0

    @classmethod
    def exact(cls, n: int) -> "DimValue":
        return cls("exact", int(n))

    @classmethod
    def at_least(cls, bound: int) -> "DimValue":
        return cls("atleast", int(bound))

    @classmethod
    def infinite(cls) -> "DimValue":
        return cls("infinite")

    @property
    def certified(self) -> bool:
        return self.kind != "atleast"

    @property
    def is_finite_exact(self) -> bool:
        return self.kind == "exact"

    def known_at_least(self, k: int) -> bool:
        """True when the value is provably >= k."""
        if self.kind == "infinite":
            return True
        return self.n >= k

    def __str__(self):
        if self.kind == "exact":
            return str(self.n)
        if self.kind == "atleast":
            return f">= {self.n}"
        return "infinite"

    def to_json(self):
        if self.kind == "exact":
            return {"kind": "exact", "value": self.n}
        if self.kind == "atleast":
            return {"kind": "atleast", "bound": self.n}
        return {"kind": "infinite"}

    @classmethod
    def from_json(cls, obj) -> "DimValue":
        if obj["kind"] == "exact":
            return cls.exact(obj["value"])
        if obj["kind"] == "atleast":
            return cls.at_least(obj["bound"])
        return cls.infinite()


def values_agree(a: DimValue, b: DimValue) -> bool:
    """Consistency of two independently computed dimension values.

    Certified values must match exactly; an uncertified ">= c" is consistent
    with any certified value >= c and with any other uncertified value.
    """
    if a.kind == "atleast" or b.kind == "atleast":
        capped, other = (a, b) if a.kind == "atleast" else (b, a)
        if other.kind == "atleast":
            return True
        return other.known_at_least(capped.n)
    return a == b
