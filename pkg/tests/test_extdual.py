"""The Ext algebra of the standard modules: bigraded tables, Yoneda
products, extraction of the dual presentation and its certification
against the closed form."""

import pytest

from zzqh import (compute_basis, presentation_cover,
                  presentation_dual_conjectured)
from zzqh.extdual import (build_dual_from_ext, check_degree_law,
                          check_dual_koszul, check_simple_costandard_dims,
                          check_yoneda_associative, compare_dual,
                          dual_presentation_json, ext_table,
                          perturb_presentation, yoneda_product)

GRID = ((1, 2), (1, 3), (2, 2), (2, 3), (3, 2))


def _labels(path):
    return tuple(a.label for a in path.arrows)


# ---------------------------------------------------------------------------
# the bigraded Ext table


def test_table_small_frozen(tables):
    table = tables[(1, 2)]
    want = {
        ((0, 2), (0, 2), 0, 0, 0): 1,
        ((1, 1), (0, 2), 0, 0, 1): 1,
        ((1, 1), (0, 2), 1, 1, 0): 1,
        ((1, 1), (1, 1), 0, 0, 0): 1,
        ((2, 0), (0, 2), 1, 1, 1): 1,
        ((2, 0), (0, 2), 2, 2, 0): 1,
        ((2, 0), (1, 1), 0, 0, 1): 1,
        ((2, 0), (1, 1), 1, 1, 0): 1,
        ((2, 0), (2, 0), 0, 0, 0): 1,
    }
    assert table.dims == want


def test_table_total_dim_matches_dual_algebra(tables):
    for (n, s), table in tables.items():
        dual = compute_basis(presentation_dual_conjectured(n, s))
        assert sum(table.dims.values()) == dual.dim()


def test_flat_degree_equals_homological_degree(tables):
    for key, table in tables.items():
        assert table.flat_equals_homological() == []


def test_degree_law_on_grid(tables):
    checked = {(1, 2): 9, (1, 3): 16, (2, 2): 20, (2, 3): 50, (3, 2): 35}
    for key, table in tables.items():
        rep = check_degree_law(table)
        assert rep["passed"], (key, rep["failures"])
        assert rep["checked"] == checked[key]


# ---------------------------------------------------------------------------
# Yoneda products


def test_identity_laws(tables):
    table = tables[(1, 2)]
    ones = [c for key in sorted(table.classes_by_key)
            if key[2] + key[4] == 1 for c in table.classes_by_key[key]]
    for f in ones:
        left = yoneda_product(table.identity(f.target), f)
        right = yoneda_product(f, table.identity(f.source))
        assert left.row == f.row and right.row == f.row
        assert left.bidegree == f.bidegree == right.bidegree


def test_square_products(tables):
    table = tables[(1, 2)]
    ones = [c for key in sorted(table.classes_by_key)
            if key[2] + key[4] == 1 for c in table.classes_by_key[key]]
    a0 = [c for c in ones if c.bidegree == (0, 1)]
    a1 = [c for c in ones if c.bidegree == (1, 0)]
    # composable sharp arrows always square to zero
    for f in a0:
        for g in a0:
            if g.target == f.source:
                assert yoneda_product(f, g).is_zero()
    # the flat square survives where the underlying path does
    squares = [yoneda_product(f, g) for f in a1 for g in a1
               if g.target == f.source]
    assert squares and all(not p.is_zero() for p in squares)
    assert all(p.i == 2 and p.bidegree == (2, 0) for p in squares)


def test_associativity_exhaustive(tables):
    triples = {(1, 2): 0, (1, 3): 8, (2, 2): 7, (2, 3): 41, (3, 2): 22}
    for key, table in tables.items():
        rep = check_yoneda_associative(table)
        assert rep["passed"], (key, rep["failures"])
        assert rep["triples"] == triples[key]


def test_product_of_incomposable_classes_rejected(tables):
    table = tables[(1, 2)]
    f = table.identity((0, 2))
    g = table.identity((2, 0))
    with pytest.raises(ValueError):
        yoneda_product(f, g)


# ---------------------------------------------------------------------------
# the extracted presentation


def test_built_relations_small(built_duals):
    built = built_duals[(1, 2)]
    rels = []
    for r in built.relations:
        rels.append(sorted((_labels(p), c) for p, c in r.terms.items()))
    rels.sort()
    assert rels == [
        [((0, 0), 1)],
        [((0, 1), -1), ((1, 0), 1)],
    ]
    # no relation involves the repeated flat arrow
    assert all(all(lbls != (1, 1) for lbls, _ in r) for r in rels)


def test_built_relations_two_colours(built_duals):
    built = built_duals[(2, 2)]
    rels = sorted(
        (p0.source, sorted((_labels(p), c) for p, c in r.terms.items()))
        for r in built.relations
        for p0 in [next(iter(r.terms))])
    assert rels == [
        ((0, 0, 2), [((0, 0), 1)]),
        ((0, 0, 2), [((0, 2), -1), ((2, 0), 1)]),
        ((0, 0, 2), [((2, 1), 1)]),
        ((0, 1, 1), [((0, 1), -1), ((1, 0), 1)]),
        ((0, 1, 1), [((1, 2), 1), ((2, 1), -1)]),
        ((1, 0, 1), [((2, 1), 1)]),
    ]


def test_built_quiver_is_directed(built_duals, covers):
    from zzqh.modules import algebra_order
    for key, built in built_duals.items():
        order = algebra_order(covers[key])
        for a in built.arrows:
            assert order.lt(a.target, a.source)


def test_compare_full_agreement_on_grid(built_duals, tables):
    for (n, s), built in built_duals.items():
        rep = compare_dual(built, presentation_dual_conjectured(n, s),
                           tables[(n, s)])
        assert rep["passed"], ((n, s), rep)
        assert rep["arrows_equal"]
        assert rep["relations_equal"] and not rep["relations_rescaled"]
        assert rep["dim_tables_equal"]
        assert rep["ext_dims_match"]
        assert rep["hom_blocks_match_standards"]
        assert rep["built_directed"]
        assert rep["relation_witness"] is None


def test_perturbed_relation_is_detected(built_duals, tables):
    for (n, s) in ((1, 2), (2, 2)):
        bad = perturb_presentation(built_duals[(n, s)])
        rep = compare_dual(bad, presentation_dual_conjectured(n, s),
                           tables[(n, s)])
        assert not rep["passed"]
        assert not rep["relations_equal"] and not rep["relations_rescaled"]
        witness = rep["relation_witness"]
        assert witness and witness["block"]
        assert witness["built"] != witness["conjectured"]


def test_dual_koszul_and_shift_law():
    for n, s in ((1, 2), (1, 3), (2, 2), (2, 3)):
        rep = check_dual_koszul(n, s)
        assert rep.passed(), ((n, s), rep.offdiagonal)
        shift = rep.extra["shift_law"]
        assert shift["passed"] and shift["checked"] > 0


def test_simple_costandard_dims(covers, built_duals):
    for key, cover in covers.items():
        rep = check_simple_costandard_dims(cover, built_duals[key])
        assert rep["passed"], (key, rep["failures"])


def test_json_emission_deterministic(built_duals):
    built = built_duals[(2, 2)]
    j = dual_presentation_json(built)
    assert j == dual_presentation_json(built)
    assert set(j) == {"vertices", "arrows", "relations"}
    assert all(set(a) == {"src", "tgt", "kind", "i"} for a in j["arrows"])
    kinds = {a["kind"] for a in j["arrows"]}
    assert kinds == {"a0", "ai"}
