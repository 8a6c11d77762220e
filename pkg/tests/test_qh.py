"""Quasi-heredity of the covers, the double-centralizer property over
the zigzag algebras, and the Borel subalgebra checks."""

from zzqh import compute_basis, presentation_zigzag
from zzqh.qh import (QhReport, check_borel, check_cover,
                     check_projective_injective, check_quasi_hereditary)
from zzqh.quiver import build_quiver, order_data


def test_covers_are_quasi_hereditary(covers):
    for (n, s), cover in covers.items():
        rep = check_quasi_hereditary(cover)
        assert rep.passed(), ((n, s), rep.witnesses)
        assert rep.endo_standard_trivial
        assert rep.projectives_delta_filtered
        assert rep.ext_delta_nabla_vanishing
        assert rep.hom_delta_nabla_diagonal


def test_covers_cover_their_zigzag_algebras(covers):
    for (n, s), cover in covers.items():
        rep = check_cover(cover)
        assert rep.passed(), ((n, s), rep.witnesses)
        assert rep.cover_fully_faithful


def test_borel_restriction(covers, borels):
    for key, cover in covers.items():
        rep = check_borel(cover, borels[key])
        assert rep.passed(), (key, rep.witnesses)
        assert rep.borel_directed
        assert rep.borel_costandard_iso


def test_projective_injective_at_positive_first_coordinate(covers):
    for key, cover in covers.items():
        rep = check_projective_injective(cover)
        assert rep.passed(), (key, rep.witnesses)
        assert rep.proj_injective_at_J


def test_zigzag_is_not_quasi_hereditary():
    inst = compute_basis(presentation_zigzag(2, 3))
    order = order_data(build_quiver(2, 2))
    rep = check_quasi_hereditary(inst, order=order)
    assert not rep.passed()
    assert rep.projectives_delta_filtered is False
    witness = rep.witnesses["projectives_delta_filtered"]
    assert witness and all("projective" in w for w in witness)


def test_report_merge_and_pass_semantics():
    empty = QhReport()
    assert not empty.passed()
    a = QhReport(endo_standard_trivial=True)
    b = QhReport(borel_directed=False, witnesses={"borel_directed": ["x"]})
    merged = a.merge(b)
    assert merged.endo_standard_trivial and merged.borel_directed is False
    assert not merged.passed()
    assert merged.witnesses == {"borel_directed": ["x"]}
    assert merged.as_dict()["passed"] is False
