"""Bound quiver presentations and the degreewise basis engine: zigzag
algebras, covers, Borels, quadratic duals, and the closed-form basis
oracles that cross-check the engine."""

import pytest

from zzqh import (NonTerminationError, closed_form_cover_basis,
                  compute_basis, presentation_borel, presentation_cover,
                  presentation_dual_conjectured, presentation_shifted_dual,
                  presentation_zigzag, quadratic_dual,
                  shifted_dual_membership, zigzag_hom_oracle)
from zzqh.algebra import Arrow, Element, Path, Presentation

GRID = ((1, 2), (1, 3), (2, 2), (2, 3), (3, 2))


# ---------------------------------------------------------------------------
# zigzag algebras


def test_zigzag_dim_and_cartan():
    inst = compute_basis(presentation_zigzag(2, 3))
    assert inst.dim() == 30
    verts = inst.presentation.vertices
    oracle = zigzag_hom_oracle(2, 3)
    assert [[inst.dim_block(x, y) for y in verts] for x in verts] \
        == oracle.data


def test_zigzag_hom_oracle_small_cases():
    # the oracle also covers the parameters where the quadratic
    # presentation degenerates (single directed cycle, see below)
    for n, s in ((2, 2), (2, 3), (3, 2)):
        m = zigzag_hom_oracle(n, s)
        for i in range(m.nrows):
            for j in range(m.ncols):
                assert m.data[i][j] == 2 if i == j else m.data[i][j] <= 1
    assert sum(sum(r) for r in zigzag_hom_oracle(2, 3).data) == 30


def test_zigzag_weight_one_presentations_do_not_terminate():
    # on a weight-1 quiver the quadratic relations never fire, so the
    # engine reports non-termination instead of a basis
    for n in (1, 2):
        with pytest.raises(NonTerminationError) as exc:
            compute_basis(presentation_zigzag(n, 2), 10)
        assert exc.value.max_len == 10
        assert all(d == n + 1 for d in exc.value.dims)


def test_zigzag_socle_is_full_cycle():
    inst = compute_basis(presentation_zigzag(2, 3))
    for x in inst.presentation.vertices:
        assert inst.dim_block(x, x) == 2
        cycles = [p for p in inst.basis()
                  if p.source == x and p.target == x and p.length]
        assert len(cycles) == 1 and cycles[0].length == 3


# ---------------------------------------------------------------------------
# covers and Borels


def test_cover_dims_small():
    inst = compute_basis(presentation_cover(1, 2))
    # the trailing zero is the certified empty top level
    assert inst.dims_by_length() == [3, 4, 2, 0]
    assert inst.dim() == 9
    verts = inst.presentation.vertices
    assert verts == ((0, 2), (1, 1), (2, 0))
    assert [sum(inst.dim_block(x, y) for y in verts) for x in verts] \
        == [2, 4, 3]


def test_cover_cartan_small():
    inst = compute_basis(presentation_cover(1, 2))
    verts = inst.presentation.vertices
    assert [[inst.dim_block(x, y) for y in verts] for x in verts] \
        == [[1, 1, 0], [1, 2, 1], [0, 1, 2]]


def test_cover_matches_closed_form_basis(covers):
    for (n, s), inst in covers.items():
        closed = closed_form_cover_basis(n, s)
        assert inst.dim() == len(closed)
        engine = {}
        for p in inst.basis():
            key = (p.length, p.source, p.target)
            engine[key] = engine.get(key, 0) + 1
        oracle = {}
        for p in closed:
            key = (p.length, p.source, p.target)
            oracle[key] = oracle.get(key, 0) + 1
        assert engine == oracle


def test_cover_k_vertices_kill_return_paths():
    inst = compute_basis(presentation_cover(2, 3))
    assert inst.dim() == 49
    # at a vertex with first coordinate zero the 0-then-1 composite dies
    z = (0, 1, 2)
    pres = inst.presentation
    assert inst.reduce_path(pres.path(z, (0, 1))).is_zero()
    # away from those vertices it survives
    y = (1, 1, 1)
    assert not inst.reduce_path(pres.path(y, (0, 1))).is_zero()


def test_borel_is_directed_subalgebra():
    borel = compute_basis(presentation_borel(2, 3))
    assert borel.dim() == 28
    assert all(a.label != 0 for a in borel.presentation.arrows)
    cover = compute_basis(presentation_cover(2, 3))
    for x in borel.presentation.vertices:
        for y in borel.presentation.vertices:
            nonzero = sum(1 for p in cover.basis()
                          if p.source == x and p.target == y
                          and all(a.label != 0 for a in p.arrows))
            assert borel.dim_block(x, y) == nonzero


# ---------------------------------------------------------------------------
# quadratic and shifted duals


def test_quadratic_dual_is_involutive_on_dims():
    pres = presentation_cover(1, 2)
    once = compute_basis(quadratic_dual(pres))
    twice = compute_basis(quadratic_dual(quadratic_dual(pres)))
    base = compute_basis(pres)
    assert twice.dims_by_length() == base.dims_by_length()
    assert once.dim() == 14


def test_shifted_dual_dims():
    for (n, s), want in (((1, 2), 14), ((1, 3), 30), ((2, 2), 27),
                         ((2, 3), 77), ((3, 2), 44)):
        assert compute_basis(presentation_shifted_dual(n, s)).dim() == want


def test_shifted_dual_matches_quadratic_dual_blocks():
    for n, s in ((1, 2), (2, 2)):
        b = compute_basis(presentation_shifted_dual(n, s))
        dq = compute_basis(quadratic_dual(presentation_cover(n, s)))
        for x in b.presentation.vertices:
            for y in b.presentation.vertices:
                assert b.dim_block(x, y) == dq.dim_block(x, y)


def test_shifted_dual_membership_small_cases():
    assert shifted_dual_membership((0, 2), (1, 1))
    assert shifted_dual_membership((2, 0), (0, 2))
    assert shifted_dual_membership((1, 1), (1, 1))
    assert not shifted_dual_membership((2, 0), (1, 0))
    assert shifted_dual_membership((0, 1, 2), (1, 0, 1))
    assert not shifted_dual_membership((0, 1, 2), (0, 0, 2))
    with pytest.raises(ValueError):
        shifted_dual_membership((1, 1), (1, -1))


def test_dual_conjectured_dim_small():
    assert compute_basis(presentation_dual_conjectured(1, 2)).dim() == 9


# ---------------------------------------------------------------------------
# presentation plumbing


def test_presentation_rejects_duplicate_arrows():
    a = Arrow(source=(0,), target=(0,), label=1, bidegree=(1, 0))
    with pytest.raises(ValueError):
        Presentation([(0,)], [a, a], [])


def test_presentation_rejects_inhomogeneous_relations():
    a = Arrow(source=(0,), target=(0,), label=1, bidegree=(1, 0))
    p1 = Path((0,), (a,))
    p2 = Path((0,), (a, a))
    with pytest.raises(ValueError):
        Presentation([(0,)], [a], [Element({p1: 1, p2: 1})])


def test_reduce_path_fixes_basis_paths():
    inst = compute_basis(presentation_cover(1, 2))
    for p in inst.basis():
        red = inst.reduce_path(p)
        assert red.terms == {p: 1}
        assert inst.is_basis_path(p)
