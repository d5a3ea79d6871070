import json

import pytest

from domdimlab import nakayama as nak
from domdimlab import quivalg as qa
from domdimlab.exactmath import F2, F3, QQ

LOOPS = qa.QuiverSpec(
    vertices=("v0",),
    arrows=(qa.Arrow("a", "v0", "v0"), qa.Arrow("b", "v0", "v0")),
    relations=("a*a", "b*b - a*b*a"),
    loewy_bound=5,
    field=F2,
)


# -- relation parsing ---------------------------------------------------------

def test_parse_single_squared_loop():
    expr = qa.parse_relation("a*a", LOOPS)
    assert len(expr.terms) == 1
    term = expr.terms[0]
    assert term.coeff == 1 and term.path == ("a", "a")


def test_parse_hopf_relation():
    expr = qa.parse_relation("b*b - a*b*a", LOOPS)
    coeffs = {t.path: t.coeff for t in expr.terms}
    assert coeffs == {("b", "b"): 1, ("a", "b", "a"): -1}


def test_parse_integer_coefficients():
    expr = qa.parse_relation("2*a*b - 3*b", LOOPS)
    coeffs = {t.path: t.coeff for t in expr.terms}
    assert coeffs == {("a", "b"): 2, ("b",): -3}


def test_parse_combines_like_terms_over_z():
    expr = qa.parse_relation("a*b + a*b", LOOPS)
    assert {t.coeff for t in expr.terms} == {2}
    assert qa.parse_relation("a - a", LOOPS).terms == ()


def test_parse_vertex_names_denote_idempotents():
    expr = qa.parse_relation("v0*a*v0", LOOPS)
    assert expr.terms[0].path == ("a",)


def test_parse_noncomposable_path():
    two = qa.QuiverSpec(
        vertices=("v0", "v1", "v2"),
        arrows=(qa.Arrow("a", "v0", "v0"), qa.Arrow("c", "v1", "v2")),
        relations=(),
        loewy_bound=3,
        field=QQ,
    )
    with pytest.raises(qa.NonComposableError):
        qa.parse_relation("a*c", two)


def test_parse_unknown_name():
    with pytest.raises(qa.UnknownNameError):
        qa.parse_relation("a*zz", LOOPS)


def test_parse_syntax_error_carries_position():
    with pytest.raises(qa.RelationSyntaxError) as err:
        qa.parse_relation("a*+b", LOOPS)
    assert "position" in str(err.value)
    with pytest.raises(qa.RelationSyntaxError):
        qa.parse_relation("3 a", LOOPS)  # coefficient must be glued with '*'


def test_parse_rejects_leading_sign():
    # the grammar has no unary minus: expr := term (("+"|"-") term)*
    with pytest.raises(qa.RelationSyntaxError):
        qa.parse_relation("-a*b", LOOPS)


def test_parse_rejects_trailing_operator():
    with pytest.raises(qa.RelationSyntaxError):
        qa.parse_relation("a*b -", LOOPS)


def test_compile_arrow_rewriting_relation():
    # a length-1 term rewrites the arrow away; the quotient is k[b]/(b^4)
    # and the rewritten arrow's image must stay in the generator set
    spec = qa.QuiverSpec(
        vertices=("v0",),
        arrows=(qa.Arrow("a", "v0", "v0"), qa.Arrow("b", "v0", "v0")),
        relations=("a - b*b", "b*b*b*b"),
        loewy_bound=5,
        field=QQ,
    )
    table = qa.compile_quiver(spec)
    assert table.basis_names == ("v0", "b", "b*b", "b*b*b")
    from domdimlab import homology as hml

    R = hml.regular(table)
    assert hml.dim_hom(R, R) == 4  # commutative: End(A) = A
    assert qa.is_symmetric(table) is True


def test_compile_mixed_endpoint_relation():
    # a relation whose terms sit at different vertices acts through its
    # composable pieces only; here it just kills both length-2 paths
    spec = qa.QuiverSpec(
        vertices=("v0", "v1"),
        arrows=(qa.Arrow("a", "v0", "v1"), qa.Arrow("b", "v1", "v0")),
        relations=("a*b + b*a",),
        loewy_bound=3,
        field=QQ,
    )
    table = qa.compile_quiver(spec)
    # paths e0, e1, a, b survive; ab and ba die separately (e0*(ab+ba)*e0 = ab)
    assert table.dim == 4


# -- compilation --------------------------------------------------------------

def test_compile_truncated_polynomial():
    spec = qa.QuiverSpec(("v0",), (qa.Arrow("x", "v0", "v0"),),
                         ("x*x*x*x",), 4, QQ)
    table = qa.compile_quiver(spec)
    assert table.dim == 4
    assert qa.loewy_length(table) == 4


def test_compile_hopf_a5_dim8():
    table = qa.compile_quiver(LOOPS)
    assert table.dim == 8
    # the squared loop is rewritten to the longer normal form
    assert "a*b*a" in table.basis_names
    assert "b*b" not in table.basis_names


def test_compile_dihedral_presentation_dim8():
    spec = qa.QuiverSpec(
        vertices=("v0",),
        arrows=(qa.Arrow("x", "v0", "v0"), qa.Arrow("y", "v0", "v0")),
        relations=("x*x", "y*y", "x*y*x*y - y*x*y*x"),
        loewy_bound=5,
        field=F2,
    )
    assert qa.compile_quiver(spec).dim == 8


def test_compile_rejects_uncertified_loewy_bound():
    bad = qa.QuiverSpec(("v0",),
                        (qa.Arrow("a", "v0", "v0"), qa.Arrow("b", "v0", "v0")),
                        ("a*a",), 3, F2)
    with pytest.raises(qa.LoewyBoundError):
        qa.compile_quiver(bad)


def test_compile_rejects_field_degenerate_relation():
    spec = qa.QuiverSpec(("v0",), (qa.Arrow("x", "v0", "v0"),),
                         ("2*x*x", "x*x*x"), 3, F2)
    with pytest.raises(qa.CompileError, match="degenerate"):
        qa.compile_quiver(spec)


def test_compile_rejects_trivial_path_terms():
    spec = qa.QuiverSpec(("v0",), (qa.Arrow("x", "v0", "v0"),),
                         ("x*x - v0",), 3, QQ)
    with pytest.raises(qa.CompileError, match="trivial-path"):
        qa.compile_quiver(spec)


def test_compile_determinism():
    a = qa.compile_quiver(LOOPS)
    b = qa.compile_quiver(LOOPS)
    assert a.basis_names == b.basis_names
    assert a.mult == b.mult
    assert json.dumps(a.to_json(), sort_keys=True) == json.dumps(b.to_json(), sort_keys=True)


def test_monomial_dimension_is_field_independent():
    A = nak.validate(nak.CYCLE, (3, 4, 4))
    dims = {qa.nakayama_to_table(A, fld).dim for fld in (F2, F3, QQ)}
    assert dims == {11}


# -- presets ------------------------------------------------------------------

def test_preset_hopf():
    table = qa.preset("hopf-a5-f2")
    assert table.dim == 8 and qa.is_local(table)


def test_preset_preproj_a2():
    table = qa.preset("preproj-a2")
    assert table.dim == 4
    assert table.n_vertices == 2
    assert qa.is_selfinjective(table)


def test_preset_truncated_poly():
    table = qa.preset("truncated-poly(3,F3)")
    assert table.dim == 3 and qa.is_local(table)
    assert qa.is_symmetric(table) is True
    assert table.field == F3


def test_preset_group_algebras_are_local_symmetric():
    for name in ("dihedral8-f2", "quaternion8-f2"):
        table = qa.preset(name)
        assert table.dim == 8 and qa.is_local(table)
        assert qa.is_symmetric(table) is True


def test_preset_unknown_name():
    with pytest.raises(KeyError):
        qa.preset("does-not-exist")


# -- bridge -------------------------------------------------------------------

def test_nakayama_to_table_dims():
    assert qa.nakayama_to_table(nak.validate(nak.CYCLE, (2, 2)), F2).dim == 4
    t = qa.nakayama_to_table(nak.validate(nak.CYCLE, (3, 3)), F3)
    assert t.dim == 6 and qa.is_symmetric(t) is True
    line = qa.nakayama_to_table(nak.validate(nak.LINE, (2, 1)), QQ)
    assert line.dim == 3
    assert not line.provenance.get("spec", {}).get("relations")  # hereditary


def test_symmetric_rule_cross_validation():
    # the form search must reproduce the c = 1 (mod n) classification
    for kup in [(2, 2), (3, 3), (4, 4), (5, 5), (3, 3, 3), (4, 4, 4)]:
        A = nak.validate(nak.CYCLE, kup)
        table = qa.nakayama_to_table(A, F3)
        assert qa.is_symmetric(table) is nak.is_symmetric(A)


def test_symmetric_decision_over_q():
    # over Q the negative answer is certified by the determinant polynomial
    # vanishing on the whole degree grid
    assert qa.is_symmetric(qa.nakayama_to_table(nak.validate(nak.CYCLE, (4, 4)), QQ)) is False
    assert qa.is_symmetric(qa.nakayama_to_table(nak.validate(nak.CYCLE, (3, 3)), QQ)) is True
    assert qa.is_selfinjective(qa.nakayama_to_table(nak.validate(nak.CYCLE, (3, 3)), QQ))


def test_selfinjective_bridge_cross_validation():
    assert qa.is_selfinjective(qa.nakayama_to_table(nak.validate(nak.CYCLE, (4, 4)), F2))
    assert not qa.is_selfinjective(
        qa.nakayama_to_table(nak.validate(nak.LINE, (2, 1)), F2))


# -- derived constructions ----------------------------------------------------

def test_opposite_is_involution():
    table = qa.preset("hopf-a5-f2")
    back = qa.opposite(qa.opposite(table))
    assert back.mult == table.mult
    assert back.basis_names == table.basis_names


def test_opposite_of_commutative_is_identical():
    table = qa.preset("truncated-poly(4,Q)")
    assert qa.opposite(table).mult == table.mult


def test_enveloping_dimensions():
    env3, _ = qa.enveloping(qa.preset("truncated-poly(3,F3)"))
    assert env3.dim == 9
    env8, bimod = qa.enveloping(qa.preset("hopf-a5-f2"))
    assert env8.dim == 64
    assert bimod.dim == 8


def test_enveloping_bimodule_is_a_module():
    _, bimod = qa.enveloping(qa.preset("truncated-poly(3,F3)"))
    bimod.verify()


def test_tensor_size_limit():
    with pytest.raises(qa.SizeLimitError):
        qa.enveloping(qa.preset("hopf-a5-f2"), size_limit=32)


def test_corner_algebra_of_unit_recovers_dimension():
    table = qa.preset("preproj-a2")
    corner, rows = qa.corner_algebra(table, table.vertex_labels())
    assert corner.dim == table.dim
    assert len(rows) == table.dim


# -- table integrity ----------------------------------------------------------

def test_verify_catches_broken_associativity():
    table = qa.preset("truncated-poly(3,F3)")
    mult = [[list(cell) for cell in row] for row in table.mult]
    mult[2][2][0] = 1  # x^2 * x^2 = 1 breaks associativity/nilpotency
    with pytest.raises(qa.CompileError):
        qa.make_table(table.field, table.basis_names, mult, table.unit,
                      list(table.idempotents), list(table.radical))


def test_verify_catches_wrong_radical():
    table = qa.preset("truncated-poly(3,F3)")
    radical = list(table.radical) + [list(table.unit)]
    with pytest.raises(qa.CompileError):
        qa.make_table(table.field, table.basis_names, table.mult, table.unit,
                      list(table.idempotents), radical)


def test_element_from_expr():
    table = qa.preset("truncated-poly(4,Q)")
    x2 = table.element_from_expr("a0*a0")
    assert x2 == table.basis_vec(2)
    combo = table.element_from_expr("2*a0 - a0*a0")
    assert combo[1] == 2 and combo[2] == -1


def test_algebra_file_roundtrip(tmp_path):
    table = qa.preset("preproj-a2")
    path = tmp_path / "algebra.json"
    qa.save_algebra(table, str(path))
    loaded = qa.load_algebra(str(path))
    assert loaded.dim == table.dim
    assert loaded.mult == table.mult
    nk = nak.validate(nak.CYCLE, (5, 6, 6, 6, 6))
    path2 = tmp_path / "nak.json"
    qa.save_algebra(nk, str(path2))
    assert qa.load_algebra(str(path2)) == nk


def test_quiver_file_compiles_on_load(tmp_path):
    path = tmp_path / "quiver.json"
    with open(path, "w") as fh:
        json.dump(LOOPS.to_json(), fh)
    table = qa.load_algebra(str(path))
    assert table.dim == 8
