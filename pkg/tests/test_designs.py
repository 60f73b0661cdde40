import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from z4gbent import designs
from z4gbent.designs import Design, SimpleGraph
from z4gbent.errors import CapacityError, InputError, PreconditionError


def _design(v, blocks):
    return Design(v, tuple(frozenset(b) for b in blocks))


def _graph(n, edges):
    return SimpleGraph(n, frozenset(tuple(sorted(e)) for e in edges))


@pytest.fixture(scope="module")
def rows3():
    return designs.reference_designs(3)


def test_single_codeword():
    d = designs.supports_to_design([(1, 1, 0, 0)])
    assert d.blocks == (frozenset({0, 1}),)
    assert d.multiplicity == {frozenset({0, 1}): 1}


def test_empty_input():
    with pytest.raises(InputError):
        designs.supports_to_design([])


def test_multiplicity_collapsed():
    d = designs.supports_to_design([(1, 1, 0), (3, 1, 0), (0, 2, 2)])
    assert d.b == 2
    assert d.multiplicity[frozenset({0, 1})] == 2


def test_non_design():
    assert designs.verify_one_design(_design(3, [{0, 1}, {0, 2}])) is None


def test_intersection_numbers():
    assert designs.intersection_numbers(_design(4, [{0, 1}, {2, 3}])) == {0}
    with pytest.raises(InputError):
        designs.intersection_numbers(_design(4, [{0, 1}]))


def test_srg_examples():
    k44 = _graph(8, [(i, j) for i in range(4) for j in range(4, 8)])
    assert designs.srg_parameters(k44)[:4] == (8, 4, 0, 4)
    assert designs.srg_parameters(_graph(3, [(0, 1), (1, 2)])) is None
    k4 = designs.srg_parameters(_graph(4, itertools.combinations(range(4), 2)))
    assert k4 == (4, 3, 2, 0, False)
    petersen = _graph(10, [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)]
                      + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])
    assert designs.srg_parameters(petersen)[:4] == (10, 3, 0, 1)


def test_resolvability_examples():
    single = _design(8, [{0, 1}, {2, 3}, {4, 5}, {6, 7}])
    assert len(designs.resolvability(single)) == 1
    affine = _design(4, [{0, 1}, {2, 3}, {0, 2}, {1, 3}])
    assert designs.net_parameters(affine) == (2, 2, 1)
    # K4 edges: three perfect matchings, edges from different matchings meet in one point
    k4 = _design(4, itertools.combinations(range(4), 2))
    assert len(designs.resolvability(k4)) == 3
    assert designs.net_parameters(k4) == (2, 3, 1)
    # resolvable, but blocks from different classes meet in 2 or 1 points
    uneven = _design(6, [{0, 1, 2}, {3, 4, 5}, {0, 1, 3}, {2, 4, 5}])
    assert len(designs.resolvability(uneven)) == 2
    assert not designs.is_affine_resolvable(uneven)
    # a triangle cannot be split into parallel classes
    assert designs.resolvability(_design(3, [{0, 1}, {1, 2}, {0, 2}])) is None


def test_resolvability_cap():
    many = _design(600, [{2 * i, 2 * i + 1} for i in range(300)])
    with pytest.raises(CapacityError):
        designs.resolvability(many)


def test_table_rows_m3(rows3):
    summary = {(r["v"], r["k"], r["lambda"], r["b"]): r for r in rows3}
    assert set(summary) == {(8, 2, 1, 4), (8, 5, 5, 8), (8, 8, 1, 1), (16, 4, 1, 4),
                            (8, 2, 3, 12), (8, 4, 2, 4)}
    l6 = summary[(8, 5, 5, 8)]
    assert l6["graphs"]["2"] == [8, 4, 0, 4]
    d = designs.supports_to_design([[1 if p in blk else 0 for p in range(1, 9)] for blk in l6["blocks"]])
    assert designs.block_intersection_graph(d, 5).edges == frozenset()


def test_rows_for_second_pair():
    from z4gbent.boolfn import BooleanFunction
    from z4gbent.construct import SECOND_PAIR_M3
    a, b = (BooleanFunction.from_anf(s, 2) for s in SECOND_PAIR_M3)
    rows = designs.code_designs(a, b)
    got = sorted((r["v"], r["k"], r["lambda"], r["b"]) for r in rows)
    ref = sorted((r["v"], r["k"], r["lambda"], r["b"]) for r in designs.reference_designs(3))
    assert got == ref


@pytest.mark.parametrize("m,blocks", [(3, 12), (5, 240), (7, 4032)])
def test_torsion_design(m, blocks):
    td = designs.torsion_min_weight_design(m)
    p = designs.verify_one_design(td.design)
    assert (p.k, p.lam, p.b) == (2, 2 ** (m - 1) - 1, blocks)
    assert td.coverage_ok
    assert set(td.classes) == set(range(2, 2 ** (m - 1) + 1, 2))


def test_torsion_design_rejects_m():
    with pytest.raises(PreconditionError):
        designs.torsion_min_weight_design(9)


@st.composite
def designs_and_perms(draw):
    v = draw(st.integers(2, 9))
    blocks = draw(st.lists(st.frozensets(st.integers(0, v - 1), min_size=1), min_size=1, max_size=8))
    perm = draw(st.permutations(range(v)))
    return _design(v, blocks), perm


@given(designs_and_perms())
def test_relabelling_is_covariant(args):
    d, perm = args
    words = [[1 if p in blk else 0 for p in range(d.v)] for blk in d.blocks]
    moved = [[w[perm.index(p)] for p in range(d.v)] for w in words]
    assert designs.supports_to_design(moved, d.v).blocks == d.relabel(perm).blocks


@given(designs_and_perms())
def test_design_law_and_srg_feasibility(args):
    d, _ = args
    p = designs.verify_one_design(d)
    if p is not None:
        assert p.b * p.k == d.v * p.r
    if d.b >= 2:
        for s in designs.intersection_numbers(d):
            srg = designs.srg_parameters(designs.block_intersection_graph(d, s))
            if srg is not None and srg.has_nonadjacent:
                v, k, lam, mu, _ = srg
                assert k * (k - lam - 1) == (v - k - 1) * mu
