import pytest
from hypothesis import given, strategies as st

from domdimlab import homology as hml
from domdimlab import nakayama as nak
from domdimlab import quivalg as qa
from domdimlab import rigidity as rg


C = nak.CYCLE


def brute_force_o_k(A, k):
    """Independent oracle: exhaustive search over all subsets of indecomposables."""
    mods = rg.indecomposables_sorted(A)
    best = 0
    for bits in range(1, 2 ** len(mods)):
        sub = [m for i, m in enumerate(mods) if bits >> i & 1]
        if rg.is_k_rigid(A, sub, k):
            best = max(best, len(set(sub)))
    return best


# -- compatibility graph -------------------------------------------------------

def test_compat_graph_22():
    A = nak.validate(C, (2, 2))
    g = rg.compat_graph(A, 1)
    verts = list(g.vertices)
    assert set(verts) == set(nak.indecomposables(A))  # all four are 1-rigid
    s0, s1 = verts.index(nak.NakModule(0, 1)), verts.index(nak.NakModule(1, 1))
    assert not g.adjacency[s0] >> s1 & 1  # the two simples extend each other
    p0, p1 = verts.index(nak.NakModule(0, 2)), verts.index(nak.NakModule(1, 2))
    assert g.adjacency[p0] >> p1 & 1


def test_compat_graph_projectives_always_present():
    A = nak.validate(C, (3, 3))
    g = rg.compat_graph(A, 4)
    for i in range(A.n):
        assert nak.projective(A, i) in g.vertices


@given(st.sampled_from([(2, 2), (3, 3), (2, 3), (3, 4, 4), (4, 4)]))
def test_compat_vertices_match_one_rigid(kup):
    A = nak.validate(C, kup)
    g = rg.compat_graph(A, 1)
    assert set(g.vertices) == set(nak.one_rigid_indecomposables(A))


# -- is_k_rigid ----------------------------------------------------------------

def test_regular_module_always_rigid():
    for kup in [(2, 3), (3, 3), (5, 6, 6, 6, 6)]:
        A = nak.validate(C, kup)
        regular = [nak.projective(A, i) for i in range(A.n)]
        for k in (1, 2, 3):
            assert rg.is_k_rigid(A, regular, k)


def test_paper_witness_is_2_rigid():
    A = nak.validate(C, (5, 6, 6, 6, 6))
    mods = list(nak.dual_regular(A))
    for I in nak.dual_regular(A):
        om = nak.syzygy_power(A, I, 4)
        if om is not None:
            mods.append(om)
    assert rg.is_k_rigid(A, mods, 2)


def test_non_rigid_module_55():
    A = nak.validate(C, (5, 5))
    assert not rg.is_k_rigid(A, [nak.NakModule(0, 2)], 1)


def test_multiset_input_equals_set_input():
    A = nak.validate(C, (3, 3))
    mods = [nak.NakModule(0, 2), nak.NakModule(0, 2), nak.projective(A, 0)]
    assert rg.is_k_rigid(A, mods, 1) == rg.is_k_rigid(A, set(mods), 1)


# -- o_k -------------------------------------------------------------------------

def test_o1_22_exhaustive_oracle():
    A = nak.validate(C, (2, 2))
    rep = rg.o_k(A, 1)
    assert rep.o_k == 3
    assert brute_force_o_k(A, 1) == 3
    assert rg.is_k_rigid(A, rep.witness, 1)


def test_o1_local_algebra_is_1():
    A = nak.validate(C, (4,))
    assert rg.o_k(A, 1).o_k == 1


@given(st.sampled_from([(2, 2), (2, 3), (3, 3), (3, 4), (4, 4), (2, 2, 2)]))
def test_o1_matches_bruteforce(kup):
    A = nak.validate(C, kup)
    assert rg.o_k(A, 1).o_k == brute_force_o_k(A, 1)


@given(st.sampled_from([(2, 3), (3, 3), (3, 4, 4), (4, 5), (2, 2, 3)]))
def test_o_k_monotone_nonincreasing(kup):
    A = nak.validate(C, kup)
    values = [rg.o_k(A, k).o_k for k in (1, 2, 3)]
    assert values[0] >= values[1] >= values[2] >= A.n


def test_o_k_witness_revalidates():
    A = nak.validate(C, (3, 4, 4))
    for k in (1, 2):
        rep = rg.o_k(A, k)
        assert rg.is_k_rigid(A, rep.witness, k)
        assert len(rep.witness) == rep.o_k


def test_o1_bound_small_corpus():
    for kup in [(2, 2), (5, 5), (6, 6), (5, 6, 6, 6, 6), (9, 9, 9)]:
        A = nak.validate(C, kup)
        n = A.n
        assert rg.o_k(A, 1).o_k <= n * (n - 1) + n * n


# -- rigid sequence construction ---------------------------------------------------

def test_rigid_sequence_family_n5():
    A = nak.validate(C, (5, 6, 6, 6, 6))
    res = rg.rigid_sequence_module(A, 2, 64)
    assert res.q == 1
    expect = set(nak.dual_regular(A))
    expect.add(nak.NakModule(3, 5))  # the only surviving fourth syzygy
    assert set(res.modules) == expect
    assert res.size >= res.w + res.q
    assert res.rigid


def test_rigid_sequence_q0_fallback():
    # dominant dimension 2 leaves no room for a shift: D(A) alone
    A = nak.validate(C, (2, 3))
    res = rg.rigid_sequence_module(A, 1, 64)
    assert res.q == 0
    assert set(res.modules) == set(nak.dual_regular(A))
    assert res.size >= res.w


def test_rigid_sequence_rejects_selfinjective():
    with pytest.raises(nak.NakInputError):
        rg.rigid_sequence_module(nak.validate(C, (3, 3)), 1, 64)


# -- main inequality ------------------------------------------------------------------

def test_main_inequality_family_instances():
    rep = rg.verify_main_inequality(nak.validate(C, (3, 4, 4)), 1, 64, gendo="bimodule")
    assert rep.verdict and rep.gendo_provenance == "bimodule-test"
    assert rep.domdim.value == 4
    rep2 = rg.verify_main_inequality(nak.validate(C, (5, 6, 6, 6, 6)), 2, 64,
                                     gendo="assert")
    assert rep2.verdict
    # the inequality with domdim 8 forces o_2 >= 6; the exact clique search
    # finds a strictly larger 2-rigid module
    assert rep2.o_k >= 6 and rep2.rhs == 8
    assert rep2.lhs == (rep2.o_k + 2 - 5) * 4 - 1 >= 8


def test_main_inequality_rejects_selfinjective():
    with pytest.raises(nak.NakInputError):
        rg.verify_main_inequality(nak.validate(C, (3, 3)), 1, 64)


def test_main_inequality_rejects_non_gendo():
    with pytest.raises(hml.PreconditionError):
        rg.verify_main_inequality(nak.validate(C, (2, 3, 3)), 1, 64, gendo="bimodule")


# -- 1-Extsymmetric -------------------------------------------------------------------

def test_preproj_a2_is_ext1_symmetric_both_routes():
    A = nak.validate(C, (2, 2))
    assert rg.is_ext1_symmetric(A) is True
    table = qa.preset("preproj-a2")
    mods = [hml.bridged_module(table, M.vertex, M.length)
            for M in rg.indecomposables_sorted(A)]
    assert rg.is_ext1_symmetric(table, mods) is True


def test_symmetric_33_is_not_ext1_symmetric():
    # Ext^1(M(0,2), S_0) is one-dimensional while Ext^1(S_0, M(0,2)) vanishes
    A = nak.validate(C, (3, 3))
    assert nak.dim_ext(A, 1, nak.NakModule(0, 2), nak.NakModule(0, 1)) == 1
    assert nak.dim_ext(A, 1, nak.NakModule(0, 1), nak.NakModule(0, 2)) == 0
    assert rg.is_ext1_symmetric(A) is False


def test_extsym_bound_preproj_a2():
    A = nak.validate(C, (2, 2))
    rep = rg.verify_extsym_bound(A, 12)
    assert rep.extsymmetric
    assert rep.delta.value == 2 and rep.o_1 == 3 and rep.simples == 2
    assert rep.bound == 3 and rep.holds


def test_extsym_bound_with_end_algebra():
    A = nak.validate(C, (2, 2))
    table = qa.preset("preproj-a2")
    P0 = hml.projective(table, 0); P0.name = "P0"
    P1 = hml.projective(table, 1); P1.name = "P1"
    S0 = hml.bridged_module(table, 0, 1); S0.name = "S0"
    end = hml.endomorphism_algebra([P0, P1, S0])
    rep = rg.verify_extsym_bound(A, 12, end_algebras=[end])
    assert rep.holds
    assert rep.end_algebra_checks[0]["holds"]


def test_extsym_requires_selfinjective():
    with pytest.raises(nak.NakInputError):
        rg.is_ext1_symmetric(nak.validate(C, (2, 3)))
    with pytest.raises(nak.NakInputError):
        rg.verify_extsym_bound(nak.validate(C, (2, 3)), 12)
