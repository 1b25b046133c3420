import pytest

from fdhom.catalog import linear_an_algebra, truncated_algebra, interval_modules, uniserial_modules
from fdhom.homology import (
    Resolution,
    ext,
    idim,
    idim_by_coresolution,
    is_self_orthogonal,
    pdim,
    resolution_of,
    tor,
)
from fdhom.modules import ModuleRep, direct_sum, hom
from fdhom.values import DimValue


def test_resolution_of_projective_has_length_zero(a2mods):
    res = Resolution(a2mods["P1"]).extend_to(3)
    assert res.finished
    assert len(res.terms) == 1
    assert res.term(0).dim == a2mods["P1"].dim


def test_minimal_resolution_of_s1(a2, a2mods):
    # 0 -> P2 -> P1 -> S1 -> 0: dim vectors (0,1) -> (1,1) -> (1,0)
    res = Resolution(a2mods["S1"]).extend_to(4)
    assert res.finished
    assert [t.dim for t in res.terms] == [2, 1]


def test_resolution_over_dual_numbers_does_not_finish(kx2mods):
    res = Resolution(kx2mods["S"]).extend_to(5)
    assert not res.finished
    assert all(t.dim == 2 for t in res.terms)  # cover is always A


def test_pdim_examples(a2mods, kx2mods):
    assert pdim(a2mods["P1"]) == DimValue.exact(0)
    assert pdim(a2mods["S1"]) == DimValue.exact(1)
    assert pdim(kx2mods["S"], cap=8) == DimValue.at_least(8)


def test_pdim_periodicity_certificate(kx2mods):
    assert pdim(kx2mods["S"], cap=8, certify_periodic=True) == DimValue.infinite()


def test_idim_examples(a2, a2mods):
    assert idim(a2mods["S1"]) == DimValue.exact(0)  # S1 = I1
    assert idim(a2mods["P2"]) == DimValue.exact(1)  # 0 -> P2 -> I2 -> I1 -> 0
    assert idim(a2mods["P1"]) == DimValue.exact(0)  # P1 = I2
    da = a2mods["DA"]
    assert idim(da.dual().dual()) == DimValue.exact(0)


def test_ext_anchors_over_a2(a2mods):
    assert ext(a2mods["S1"], a2mods["P2"], 1) == 1
    assert ext(a2mods["S1"], a2mods["P1"], 1) == 0
    for n in ("P1", "P2", "S1"):
        assert ext(a2mods["P1"], a2mods[n], 1) == 0
        assert ext(a2mods["P1"], a2mods[n], 2) == 0


def test_ext_degree_zero_is_hom(a2mods):
    for m in ("P1", "S1", "T"):
        for n in ("P1", "S1", "T"):
            assert ext(a2mods[m], a2mods[n], 0) == hom(a2mods[m], a2mods[n]).dim


def test_tor_anchors_over_a2(a2mods):
    dp2 = a2mods["P2"].dual()
    assert tor(dp2, a2mods["S1"], 1) == 1  # field duality with Ext^1(S1,P2)
    assert tor(dp2, a2mods["S1"], 0) == 0  # tensor example
    dreg = a2mods["A"].dual()  # right module D(A)
    assert tor(dreg, a2mods["P1"], 1) == 0
    assert tor(dreg, a2mods["P1"], 2) == 0


def test_tor_zero_equals_tensor_dim(a2, a2mods):
    from fdhom.modules import tensor_over_algebra
    dreg = a2mods["A"].dual()
    for n in ("P1", "P2", "S1", "A", "T"):
        t = tensor_over_algebra(dreg, a2mods[n])
        assert tor(dreg, a2mods[n], 0) == t.dim


def test_self_orthogonality(a2mods, kx2mods):
    res = is_self_orthogonal(a2mods["P1"])
    assert res.holds and res.certified
    res = is_self_orthogonal(a2mods["T"])
    assert res.holds and res.certified  # pdim 1, Ext^1(T,T) = 0
    res = is_self_orthogonal(direct_sum([a2mods["A"], a2mods["DA"].dual().dual()]))
    assert not res.holds and res.certified and res.witness_degree == 1
    res = is_self_orthogonal(kx2mods["A+S"], cap=6)
    assert not res.holds and res.certified  # Ext^1(S,S) != 0 over k[x]/(x^2)


def test_ext_duality_invariant(a2, a2mods, kx2, kx2mods):
    # dim Ext^i(M, N) = dim Ext^i over the opposite algebra of (DN, DM)
    for mods in (a2mods, kx2mods):
        lefts = [m for m in mods.values() if m.side == "left"]
        for m in lefts:
            for n in lefts:
                for i in range(5):
                    assert ext(m, n, i) == ext(n.dual(), m.dual(), i), (m.name, n.name, i)


def test_tor_ext_field_duality(a2mods, kx2mods):
    # dim Tor_i(DN, M) = dim Ext^i(M, N)
    for mods in (a2mods, kx2mods):
        lefts = [m for m in mods.values() if m.side == "left"]
        for m in lefts:
            for n in lefts:
                for i in range(5):
                    assert tor(n.dual(), m, i) == ext(m, n, i), (m.name, n.name, i)


def test_pdim_equals_idim_of_dual_over_opposite(a2mods, kx2mods):
    for mods in (a2mods, kx2mods):
        for m in mods.values():
            if m.side != "left":
                continue
            assert pdim(m, cap=6) == idim(m.dual(), cap=6)


def test_idim_coresolution_route_agrees(a2, a2mods, kx2, kx2mods):
    for mods in (a2mods, kx2mods):
        for m in mods.values():
            if m.side != "left":
                continue
            a = idim(m, cap=5)
            b = idim_by_coresolution(m, cap=5)
            assert a == b, m.name


def test_minimal_and_generic_resolutions_give_same_ext(a2, a2mods):
    for mname in ("S1", "T", "A"):
        m = a2mods[mname]
        gen_res = Resolution(m, minimal=False).extend_to(3)
        min_res = resolution_of(m).extend_to(3)
        for nname in ("P1", "S1"):
            n = a2mods[nname]
            for i in range(3):
                got_min = ext(m, n, i)
                # recompute against the generic resolution by hand
                from fdhom.homology import _hom_dims_and_deltas, _delta_rank
                if i == 0:
                    continue
                spaces = _hom_dims_and_deltas(gen_res, n, i)
                alt = spaces[i].dim - _delta_rank(gen_res, spaces, i, n) \
                    - _delta_rank(gen_res, spaces, i - 1, n)
                assert alt == got_min, (mname, nname, i)


def test_resolution_exactness_bookkeeping(a2mods):
    res = resolution_of(a2mods["S1"]).extend_to(2)
    from fdhom.linalg import rank
    assert rank(res.dmap(0)) == a2mods["S1"].dim
    if len(res.maps) > 1:
        assert (res.dmap(0) @ res.dmap(1)).is_zero()
