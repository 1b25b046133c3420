import pytest

from fdhom.catalog import (
    interval_modules,
    linear_an_algebra,
    truncated_algebra,
    uniserial_modules,
)
from fdhom.modules import ModuleRep, direct_sum


@pytest.fixture(scope="session")
def a2():
    return linear_an_algebra(2, 2)


@pytest.fixture(scope="session")
def kx2():
    return truncated_algebra(2, 2)


@pytest.fixture(scope="session")
def a2mods(a2):
    """Named left modules over the A_2 path algebra: P1 = I[1,2], P2 = S2,
    S1 = I[1,1]."""
    p1 = ModuleRep.projective(a2, 0, "left")
    p2 = ModuleRep.projective(a2, 1, "left")
    iv = {m.name: m for m in interval_modules(a2)}
    s1 = iv["I[1,1]"]
    reg = ModuleRep.regular(a2, "left")
    da = ModuleRep.regular(a2, "right").dual()
    t = direct_sum([p1, s1])
    p1.name, p2.name, s1.name, reg.name, da.name, t.name = "P1", "P2", "S1", "A", "DA", "T"
    return {"P1": p1, "P2": p2, "S1": s1, "S2": iv["I[2,2]"], "A": reg, "DA": da, "T": t}


@pytest.fixture(scope="session")
def kx2mods(kx2):
    s, a = uniserial_modules(kx2)
    both = direct_sum([a, s])
    s.name, a.name, both.name = "S", "A", "A+S"
    return {"S": s, "A": a, "A+S": both}
