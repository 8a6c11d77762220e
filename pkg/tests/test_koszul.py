"""Koszulity in its three flavours: classical for covers and Borels,
standard Koszulity, Koszulity of standard modules, plus the fixtures
that separate the notions."""

from zzqh import compute_basis, presentation_borel, presentation_zigzag
from zzqh.koszul import (check_delta_koszul, check_koszul,
                         check_shifted_dual_lemmas, check_standard_koszul,
                         fixture_brauer_line, fixture_counterexample,
                         loop_presentation)

GRID = ((1, 2), (1, 3), (2, 2), (2, 3), (3, 2))


def test_covers_are_koszul(covers):
    for key, cover in covers.items():
        rep = check_koszul(cover)
        assert rep.passed(), (key, rep.offdiagonal)
        assert rep.extra["hilbert_identity"]["passed"]
        assert all(m["linear"] and m["complete"]
                   for m in rep.modules.values())


def test_covers_are_standard_koszul(covers):
    for key, cover in covers.items():
        rep = check_standard_koszul(cover)
        assert rep.passed(), (key, rep.offdiagonal)


def test_standards_are_koszul_in_flat_grading(covers):
    for key, cover in covers.items():
        rep = check_delta_koszul(cover)
        assert rep.passed(), (key, rep.offdiagonal)
        assert rep.offdiagonal == []
        assert rep.extra["gamma0_iso_delta"]
        assert rep.extra["line_algebra"]


def test_borels_are_koszul(borels):
    for key, borel in borels.items():
        assert check_koszul(borel).passed(), key


def test_zigzag_is_almost_but_not_koszul():
    inst = compute_basis(presentation_zigzag(2, 3))
    rep = check_koszul(inst)
    assert not rep.passed()
    hilbert = rep.extra["hilbert_identity"]
    assert not hilbert["passed"]
    # the alternating-sum identity first fails in degree 3
    assert min(hilbert["failures"]) == 3


def test_loop_fixture_linear_up_to_truncation():
    inst = compute_basis(loop_presentation())
    assert inst.dim() == 2
    rep = check_koszul(inst, max_steps=5)
    assert rep.passed()
    mod = rep.modules["1"]
    assert mod["linear"] and not mod["complete"]


def test_socle_lemmas_on_grid():
    for n, s in GRID:
        rep = check_shifted_dual_lemmas(n, s)
        assert rep["passed"], ((n, s), rep)
        assert rep["matches_quadratic_dual_blocks"]
        assert rep["membership_mismatches"] == []


def test_counterexample_fixture_frozen_values():
    fx = fixture_counterexample()
    assert fx["passed"]
    assert fx["dim"] == 9
    assert fx["dim_degree_zero"] == 5
    assert fx["self_orthogonal"] and fx["offdiagonal"] == []
    assert fx["s3_shape_matches"]
    assert fx["s3_terms"] == [[[3, [0, 0]]],
                              [[2, [0, 1]], [2, [1, 0]]],
                              [[1, [0, 2]], [1, [1, 1]]]]
    # self-orthogonal in the flat grading, yet the resolution is not
    # flat-linear: orthogonality does not force linearity
    assert fx["s3_linear_length"] and not fx["s3_linear_flat"]


def test_brauer_line_fixture_matches_covers():
    for s, dim in ((2, 9), (3, 13), (4, 17)):
        fx = fixture_brauer_line(s)
        assert fx["passed"], (s, fx)
        assert fx["dim"] == dim
        assert fx["arrows_match"] and fx["relations_match"]
        assert fx["block_dims_match"] and fx["koszul"]
