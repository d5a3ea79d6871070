import pytest

from domdimlab import homology as hml
from domdimlab import nakayama as nak
from domdimlab import quivalg as qa
from domdimlab.bounded import BoundedValue
from domdimlab.exactmath import F2, F3, QQ


@pytest.fixture(scope="module")
def hopf():
    return qa.preset("hopf-a5-f2")


@pytest.fixture(scope="module")
def bridged33():
    return qa.nakayama_to_table(nak.validate(nak.CYCLE, (3, 3)), F2)


# -- basic modules -------------------------------------------------------------

def test_simple_and_projective_local(hopf):
    S = hml.simple(hopf, 0)
    P = hml.projective(hopf, 0)
    assert S.dim == 1
    assert P.dim == 8
    S.verify()


def test_regular_dimension(hopf):
    R = hml.regular(hopf)
    assert R.dim == hopf.dim
    R.verify()


def test_bridged_simples_and_projectives(bridged33):
    for v in range(2):
        assert hml.simple(bridged33, v).dim == 1
        assert hml.projective(bridged33, v).dim == 3


def test_radical_of_regular_hopf(hopf):
    R = hml.regular(hopf)
    assert hml.radical_submodule(R).dim == 7
    assert hml.top(R).dim == 1


def test_radical_of_simple_is_zero(hopf):
    S = hml.simple(hopf, 0)
    assert hml.radical_submodule(S).dim == 0


def test_radical_power_hopf_j2(hopf):
    assert hml.radical_power(hopf, 2).dim == 5
    assert hml.radical_power(hopf, 5).dim == 0  # at the Loewy length


def test_top_of_projective_is_simple(bridged33):
    for v in range(2):
        T = hml.top(hml.projective(bridged33, v))
        assert T.dim == 1


# -- covers and syzygies --------------------------------------------------------

def test_projective_cover_of_radical_hopf(hopf):
    J = hml.radical_submodule(hml.regular(hopf))
    cov = hml.projective_cover(J)
    assert cov.vertices == [0, 0]  # A^2: the top of J is two-dimensional
    assert cov.P.dim == 16


def test_projective_cover_of_simple(bridged33):
    S = hml.simple(bridged33, 1)
    cov = hml.projective_cover(S)
    assert cov.vertices == [1]


def test_cover_of_projective_is_isomorphism(bridged33):
    P = hml.projective(bridged33, 0)
    assert hml.is_projective_rep(P)
    assert hml.syzygy(P).dim == 0


def test_syzygy_dims_hopf(hopf):
    S = hml.simple(hopf, 0)
    assert hml.syzygy_dims(S, 4) == [7, 9, 7, 9]


def test_syzygy_dims_dihedral_paper_value():
    table = qa.preset("dihedral8-f2")
    S = hml.simple(table, 0)
    dims = hml.syzygy_dims(S, 4)
    assert dims[3] == 17
    assert dims == [7, 9, 15, 17]


def test_syzygy_dims_quaternion_periodic():
    table = qa.preset("quaternion8-f2")
    S = hml.simple(table, 0)
    dims = hml.syzygy_dims(S, 4)
    assert dims == [7, 9, 7, 1]
    om = S
    for _ in range(4):
        om = hml.syzygy(om)
    assert hml.modules_isomorphic(om, S) is True


def test_kernel_dimension_bookkeeping(hopf):
    # dim Omega(M) = dim P(top M) - dim M at every resolution step
    S = hml.simple(hopf, 0)
    om1 = hml.syzygy(S)
    cov1 = hml.projective_cover(om1)
    om2 = hml.syzygy(om1)
    assert om2.dim == cov1.P.dim - om1.dim == 16 - 7


def test_syzygy_of_bridged_uniserial(bridged33):
    # kernel computation matches the combinatorial syzygy M(0,2) -> M(0,1)
    M = hml.bridged_module(bridged33, 0, 2)
    om = hml.syzygy(M)
    assert om.dim == 1
    target = hml.bridged_module(bridged33, 0, 1)
    assert hml.modules_isomorphic(om, target) is True


# -- Ext -----------------------------------------------------------------------

def test_ext1_self_extension_of_simple_hopf(hopf):
    S = hml.simple(hopf, 0)
    assert hml.ext_dims(S, S, 1).dim(1) > 0


def test_ext_from_projective_vanishes(bridged33):
    P = hml.projective(bridged33, 0)
    N = hml.bridged_module(bridged33, 1, 2)
    assert hml.ext_dims(P, N, 3).degrees == (0, 0, 0)


def test_ext_pattern_simple_33(bridged33):
    S0 = hml.bridged_module(bridged33, 0, 1)
    table = hml.ext_dims(S0, S0, 3)
    assert table.degrees[:2] == (0, 0)
    assert table.degrees[2] > 0


def test_hom_dims_match_combinatorial(bridged33):
    A = nak.validate(nak.CYCLE, (3, 3))
    for M in nak.indecomposables(A):
        for N in nak.indecomposables(A):
            rm = hml.bridged_module(bridged33, M.vertex, M.length)
            rn = hml.bridged_module(bridged33, N.vertex, N.length)
            assert hml.dim_hom(rm, rn) == nak.dim_hom(A, M, N)


def test_line_algebra_oracle_agreement():
    # the engines also agree off the cyclic corpus
    for kup in [(2, 1), (3, 2, 1), (2, 2, 1)]:
        A = nak.validate(nak.LINE, kup)
        table = qa.nakayama_to_table(A, F2)
        mods = sorted(nak.indecomposables(A))
        bridged = {M: hml.bridged_module(table, M.vertex, M.length) for M in mods}
        for M in mods:
            for N in mods:
                ext = hml.ext_dims(bridged[M], bridged[N], 3, include_hom=True)
                assert ext.hom == nak.dim_hom(A, M, N)
                for t in (1, 2, 3):
                    assert ext.dim(t) == nak.dim_ext(A, t, M, N)


def test_duality_consistency():
    # Ext^t_A(M, N) = Ext^t_{A^op}(DN, DM)
    A = nak.validate(nak.CYCLE, (2, 3))
    table = qa.nakayama_to_table(A, F3)
    op = qa.opposite(table)
    mods = [(i, k) for i in range(2) for k in range(1, A.c(i) + 1)]
    for (i1, k1) in mods:
        for (i2, k2) in mods:
            M = hml.bridged_module(table, i1, k1)
            N = hml.bridged_module(table, i2, k2)
            DM = hml.dual_representation(M, op)
            DN = hml.dual_representation(N, op)
            lhs = hml.ext_dims(M, N, 3).degrees
            rhs = hml.ext_dims(DN, DM, 3).degrees
            assert lhs == rhs


# -- injectives and dominant dimension ------------------------------------------

def test_injective_dims_line21():
    table = qa.nakayama_to_table(nak.validate(nak.LINE, (2, 1)), QQ)
    assert sorted(hml.injective(table, a).dim for a in range(2)) == [1, 2]
    assert hml.projective_injective_vertices(table) == {1}


def test_domdim_bridged_family(bridged33):
    A5 = qa.nakayama_to_table(nak.validate(nak.CYCLE, (5, 6, 6, 6, 6)), F2)
    assert hml.domdim(A5, 20) == BoundedValue.finite(8)
    assert hml.domdim(bridged33, 20) == BoundedValue.at_least(20)


def test_domdim_selfinjective_preset_cutoff():
    table = qa.preset("preproj-a2")
    assert hml.domdim(table, 20) == BoundedValue.at_least(20)


def test_domdim_agrees_with_combinatorial_engine():
    for kup in [(2, 3), (3, 4, 4), (2, 2), (4, 4)]:
        A = nak.validate(nak.CYCLE, kup)
        table = qa.nakayama_to_table(A, F2)
        assert hml.domdim(table, 16) == nak.domdim(A, 16)


def test_injective_coresolution_report(bridged33):
    S = hml.bridged_module(bridged33, 0, 1)
    rep = hml.injective_coresolution(S, 3)
    assert len(rep.terms) == 3
    assert all(t["projective"] for t in rep.terms)  # selfinjective algebra
    assert rep.terms[0]["dim"] == 3  # envelope of a simple is one injective


def test_injective_coresolution_matches_combinatorial_domdim():
    A = nak.validate(nak.CYCLE, (2, 3))
    table = qa.nakayama_to_table(A, F2)
    P0 = hml.projective(table, 0)
    rep = hml.injective_coresolution(P0, 4)
    flags = [t["projective"] for t in rep.terms]
    # first non-projective term sits exactly at the dominant dimension
    assert flags.index(False) == nak.domdim_module(A, nak.projective(A, 0), 16).value == 2


def test_resolution_report(hopf):
    S = hml.simple(hopf, 0)
    rep = hml.resolution_report(S, 3)
    assert rep["syzygy_dims"] == [7, 9, 7]
    assert rep["terms"][0] == {"vertices": {"v0": 1}, "dim": 8}
    assert rep["terms"][1] == {"vertices": {"v0": 2}, "dim": 16}
    assert rep["minimal"]


def test_semisimple_rejected():
    S = hml.simple(qa.preset("hopf-a5-f2"), 0)
    end = hml.endomorphism_algebra([S])
    with pytest.raises(hml.SemisimpleInputError):
        hml.domdim(end, 5)


# -- phi / delta ----------------------------------------------------------------

def test_phi_of_syzygy_hopf(hopf):
    S = hml.simple(hopf, 0)
    om = hml.syzygy(S)
    assert hml.phi(om, 12) == BoundedValue.finite(1)


def test_phi_rejects_projective(bridged33):
    with pytest.raises(hml.PreconditionError):
        hml.phi(hml.projective(bridged33, 0), 5)


def test_phi_simple_33(bridged33):
    S0 = hml.bridged_module(bridged33, 0, 1)
    assert hml.phi(S0, 12) == BoundedValue.finite(3)


def test_delta_line21():
    table = qa.nakayama_to_table(nak.validate(nak.LINE, (2, 1)), F2)
    assert hml.delta(table, 12) == BoundedValue.finite(1)


def test_delta_selfinjective_needs_witnesses(bridged33):
    mods = [hml.bridged_module(bridged33, i, k) for i in range(2) for k in (1, 2)]
    got = hml.delta(bridged33, 12, witnesses=mods, witnesses_complete=True)
    assert got == BoundedValue.finite(3)
    partial = hml.delta(bridged33, 12, witnesses=mods[:1])
    assert partial.kind == "at_least" and partial.value == 3
    # the dual-regular formula is only valid off the selfinjective case
    with pytest.raises(hml.PreconditionError):
        hml.delta(bridged33, 12)


# -- ideals ----------------------------------------------------------------------

def test_ideal_module_x_squared():
    table = qa.preset("truncated-poly(4,Q)")
    X = hml.ideal_module(table, [table.element_from_expr("a0*a0")])
    assert X.dim == 2


def test_ideal_module_rejects_zero():
    table = qa.preset("truncated-poly(4,Q)")
    with pytest.raises(ValueError):
        hml.ideal_module(table, [table.zero_vec()])


def test_check_ideal_rigidity_truncated_poly():
    table = qa.preset("truncated-poly(4,Q)")
    X = hml.ideal_module(table, [table.element_from_expr("a0*a0")])
    rep = hml.check_ideal_rigidity(table, X)
    assert rep.holds and rep.hom_to_quotient > 0 and rep.ext1_self > 0


def test_check_ideal_rigidity_radical_of_33(bridged33):
    sym = qa.is_symmetric(bridged33)
    assert sym is True
    X = hml.radical_power(bridged33, 1)
    rep = hml.check_ideal_rigidity(bridged33, X)
    assert rep.ext1_self > 0


def test_check_ideal_rigidity_enveloping_f3():
    table = qa.preset("truncated-poly(3,F3)")
    env, bimod = qa.enveloping(table)
    assert hml.ext_dims(bimod, bimod, 1).dim(1) > 0


def test_check_ideal_rigidity_requires_proper_ideal():
    table = qa.preset("truncated-poly(4,Q)")
    full = hml.ideal_module(table, [list(table.unit)])
    with pytest.raises(hml.PreconditionError):
        hml.check_ideal_rigidity(table, full)


def test_check_ideal_rigidity_requires_symmetric():
    table = qa.preset("preproj-a2")  # selfinjective, not symmetric
    X = hml.radical_power(table, 1)
    with pytest.raises(hml.PreconditionError):
        hml.check_ideal_rigidity(table, X)


def test_ideal_rigidity_group_algebra_radical_powers():
    # local symmetric algebras: every nontrivial proper two-sided ideal has
    # a nonzero first self-extension; probe all radical powers
    for name in ("dihedral8-f2", "quaternion8-f2"):
        table = qa.preset(name)
        for k in range(1, 5):
            X = hml.radical_power(table, k)
            if not 0 < X.dim < table.dim:
                continue
            rep = hml.check_ideal_rigidity(table, X)
            assert rep.holds and rep.ext1_self > 0


def test_local_hopf_phi_one_on_witness_family():
    # the first self-extension degree is 1 for every non-projective witness
    # we can reach: syzygies of the simple and the radical powers
    hopf = qa.preset("hopf-a5-f2")
    witnesses = [hml.simple(hopf, 0)]
    om = witnesses[0]
    for _ in range(4):
        om = hml.syzygy(om)
        witnesses.append(om)
    witnesses.append(hml.radical_power(hopf, 2).rep)
    witnesses.append(hml.radical_power(hopf, 3).rep)
    for M in witnesses:
        assert hml.phi(M, 8) == BoundedValue.finite(1), M.name
    # the witness family gives a certified lower bound through delta
    assert hml.delta(hopf, 8, witnesses=witnesses).value == 1


# -- endomorphism algebras --------------------------------------------------------

def test_end_of_regular_recovers_dimension():
    table = qa.nakayama_to_table(nak.validate(nak.CYCLE, (2, 2)), F2)
    P0 = hml.projective(table, 0); P0.name = "P0"
    P1 = hml.projective(table, 1); P1.name = "P1"
    end = hml.endomorphism_algebra([P0, P1])
    assert end.dim == table.dim  # End of the regular module of a basic algebra


def test_end_mueller_instance(bridged33):
    P0 = hml.projective(bridged33, 0); P0.name = "P0"
    P1 = hml.projective(bridged33, 1); P1.name = "P1"
    S0 = hml.bridged_module(bridged33, 0, 1); S0.name = "S0"
    end = hml.endomorphism_algebra([P0, P1, S0])
    assert end.dim == 9
    assert hml.domdim(end, 20) == BoundedValue.finite(4)


def test_end_mueller_field_independence():
    # the dominant dimension of the endomorphism algebra is 4 over Q as well
    table = qa.nakayama_to_table(nak.validate(nak.CYCLE, (3, 3)), QQ)
    P0 = hml.projective(table, 0); P0.name = "P0"
    P1 = hml.projective(table, 1); P1.name = "P1"
    S0 = hml.bridged_module(table, 0, 1); S0.name = "S0"
    end = hml.endomorphism_algebra([P0, P1, S0])
    assert end.dim == 9
    assert hml.domdim(end, 20) == BoundedValue.finite(4)


def test_nonisomorphism_certified_over_q():
    table = qa.nakayama_to_table(nak.validate(nak.CYCLE, (3, 3)), QQ)
    P0 = hml.projective(table, 0)
    P1 = hml.projective(table, 1)
    assert hml.modules_isomorphic(P0, P1) is False  # decided, not undetermined


def test_end_rejects_duplicate_summands(bridged33):
    P0 = hml.projective(bridged33, 0)
    P0bis = hml.projective(bridged33, 0)
    with pytest.raises(hml.PreconditionError):
        hml.endomorphism_algebra([P0, P0bis])


def test_end_rejects_decomposable_summand(bridged33):
    R = hml.regular(bridged33)
    with pytest.raises(hml.PreconditionError):
        hml.endomorphism_algebra([R])


def test_single_simple_end_is_semisimple(hopf):
    S = hml.simple(hopf, 0)
    end = hml.endomorphism_algebra([S])
    assert end.dim == 1
    assert qa.is_semisimple(end)


def test_indecomposability_certificates(bridged33):
    assert hml.is_indecomposable(hml.projective(bridged33, 0)) is True
    assert hml.is_indecomposable(hml.regular(bridged33)) is False
    M = hml.bridged_module(bridged33, 0, 2)
    assert hml.is_indecomposable(M) is True


# -- gendo-symmetric ----------------------------------------------------------------

def test_gendo_symmetric_family():
    table = qa.nakayama_to_table(nak.validate(nak.CYCLE, (3, 4, 4)), F2)
    assert hml.is_gendo_symmetric(table, 16) is True


def test_gendo_symmetric_line_false():
    table = qa.nakayama_to_table(nak.validate(nak.LINE, (2, 1)), F2)
    assert hml.is_gendo_symmetric(table, 16) is False


def test_gendo_symmetric_of_symmetric_algebra(bridged33):
    assert hml.is_gendo_symmetric(bridged33, 16) is True


def test_gendo_symmetric_rejects_small_cutoff(bridged33):
    with pytest.raises(hml.PreconditionError):
        hml.is_gendo_symmetric(bridged33, 1)


# -- serialization -------------------------------------------------------------------

def test_representation_json_roundtrip(bridged33):
    M = hml.bridged_module(bridged33, 0, 2)
    M.name = "M(0,2)"
    obj = M.to_json()
    back = hml.representation_from_json(bridged33, obj)
    assert back.dim == M.dim
    assert back.actions == M.actions


def test_representation_verify_catches_bad_action(bridged33):
    M = hml.bridged_module(bridged33, 0, 2)
    broken = [[list(r) for r in m] for m in M.actions]
    broken[2][0][0] = 1  # arrow action gains a fixed vector
    bad = hml.Representation(bridged33, M.dim, broken)
    with pytest.raises(ValueError):
        bad.verify()
