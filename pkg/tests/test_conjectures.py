import pytest

from fdhom.catalog import (
    FamilySpec,
    enumerate_corpus,
    linear_an_algebra,
    truncated_algebra,
)
from fdhom.conjectures import (
    check_quasi_generator_bound,
    gorenstein_probe,
    is_tilting,
    scan_quasi_generator_bound,
    wakamatsu_probe,
)
from fdhom.modules import ModuleRep


def test_regular_module_is_zero_tilting(a2, a2mods):
    res = is_tilting(a2mods["A"])
    assert res.holds and res.certified and res.level == 0


def test_p1_plus_s1_is_one_tilting(a2, a2mods):
    res = is_tilting(a2mods["T"])
    assert res.holds and res.certified and res.level == 1


def test_p2_alone_is_not_tilting(a2, a2mods):
    res = is_tilting(a2mods["P2"])
    assert not res.holds and res.certified
    assert res.degree_status == "none"


def test_is_tilting_with_explicit_level(a2, a2mods):
    assert is_tilting(a2mods["T"], n=1).holds
    res = is_tilting(a2mods["T"], n=0)
    assert not res.holds and res.certified  # degree 1 exceeds requested level


def test_conjecture_scan_confirms_hereditary_corpus(a2):
    spec = FamilySpec(family="linear-An", p=2, n=2, max_total_dim=4, max_summands=2)
    alg, mods = enumerate_corpus(spec)
    verdicts = scan_quasi_generator_bound(
        [(m.name, m) for m in mods], cap=8)
    assert not any(v.status == "COUNTEREXAMPLE" for v in verdicts)
    assert any(v.status == "confirmed" for v in verdicts)


def test_conjecture_scan_skips_non_self_orthogonal(kx2, kx2mods):
    v = check_quasi_generator_bound(kx2mods["A+S"], cap=6)
    assert v.status == "skipped"
    assert "self-orthogonal" in v.reason


def test_conjecture_scan_confirms_regular(a2, a2mods, kx2, kx2mods):
    for mods in (a2mods, kx2mods):
        v = check_quasi_generator_bound(mods["A"], cap=6)
        assert v.status == "confirmed"
        assert v.degree == 0 and v.pdim.n == 0


def test_wakamatsu_probe_regular(a2, a2mods):
    rep = wakamatsu_probe(a2mods["A"])
    assert rep.status == "confirmed"


def test_wakamatsu_probe_tilting_instance(a2, a2mods):
    rep = wakamatsu_probe(a2mods["T"])
    assert rep.status == "confirmed"


def test_wakamatsu_probe_rejects_p1(a2, a2mods):
    rep = wakamatsu_probe(a2mods["P1"])
    assert rep.status == "hypotheses-not-met"
    assert rep.facts["domdim_of_algebra"] == "1"


def test_gorenstein_probe_self_injective(kx2):
    rep = gorenstein_probe(kx2)
    assert rep.status == "confirmed"
    assert rep.facts["cogenerator_degree"]["value"] == 0
    assert rep.facts["idim_left"] == "0"


def test_gorenstein_probe_hereditary(a2):
    rep = gorenstein_probe(a2)
    assert rep.status == "confirmed"
    assert rep.facts["cogenerator_degree"]["value"] == 1
    assert rep.facts["idim_left"] == "1"
    assert rep.facts["idim_right"] == "1"


def test_gorenstein_probe_semisimple():
    alg = truncated_algebra(1, 3)
    rep = gorenstein_probe(alg)
    assert rep.status == "confirmed"
    assert rep.facts["cogenerator_degree"]["value"] == 0
    assert rep.facts["idim_left"] == "0"


def test_degree_zero_slice_is_generator_projectivity_check(a2):
    # at degree 0 the scanner tests: self-orthogonal generator => projective
    spec = FamilySpec(family="linear-An", p=2, n=2, max_total_dim=5, max_summands=2)
    _, mods = enumerate_corpus(spec)
    from fdhom.correspondence import quasi_generator_degree
    from fdhom.homology import is_self_orthogonal, pdim
    for m in mods:
        deg = quasi_generator_degree(m, cap=6)
        so = is_self_orthogonal(m, cap=6)
        if deg.status == "degree" and deg.value == 0 and so.certified and so.holds:
            v = check_quasi_generator_bound(m, cap=6)
            assert v.status == "confirmed"
            assert pdim(m, 6).n == 0  # generator + self-orthogonal => projective here
