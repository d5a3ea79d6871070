"""Linear-algebraic homological algebra over algebra tables.

Right modules are row-vector representations: a module of dimension d
assigns to each basis element of the algebra a d x d matrix, acting by
``m -> m @ act(b)``; multiplicativity ``act(u) @ act(v) = act(uv)`` is
the module axiom.  All functors here are computed through minimal
projective resolutions built from explicit projective covers; injective
constructions are obtained exclusively by dualising over the opposite
algebra, so there is a single code path to test.

Every potentially infinite search (dominant dimension, first
non-vanishing self-extension, their suprema) takes a cutoff and returns
a :class:`BoundedValue`.  Searches that can only be settled by finding a
witness (module isomorphism, nondegenerate form) return True/False/None
with None meaning the bounded search was exhausted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bounded import BoundedValue
from .exactmath import (
    SpanBuilder,
    coords_against,
    kernel_rows,
    left_kernel_rows,
    matmul_rows,
    rank_rows,
    reduce_against,
    rref_rows,
)
from .quivalg import (
    AlgebraTable,
    DEFAULT_SEARCH_BUDGET,
    _coeff_tuples,
    corner_algebra,
    is_local,
    is_semisimple,
    is_symmetric,
    opposite,
    tensor_algebra,
)


class SemisimpleInputError(ValueError):
    """Semisimple algebras are outside the scope of the analysis entry points."""


class PreconditionError(ValueError):
    pass


class UndeterminedError(RuntimeError):
    """A bounded witness search was exhausted without a verdict."""


class FalsificationError(AssertionError):
    """A machine-checked theorem instance failed; treat as fatal."""


def require_not_semisimple(table: AlgebraTable) -> None:
    if is_semisimple(table):
        raise SemisimpleInputError(f"{table.describe()} is semisimple")


# ---------------------------------------------------------------------------
# representations
# ---------------------------------------------------------------------------

class Representation:
    """A right module over an AlgebraTable, given by one action matrix per
    algebra basis element (row-vector convention)."""

    def __init__(self, algebra: AlgebraTable, dim: int, actions, name: str = ""):
        self.algebra = algebra
        self.dim = dim
        self.actions = tuple(tuple(tuple(r) for r in m) for m in actions)
        self.name = name
        self._cache: dict = {}

    def __repr__(self):
        label = self.name or "module"
        return f"<{label}: dim {self.dim} over {self.algebra.describe()}>"

    def act_raw(self, idx: int) -> list[list]:
        return [list(r) for r in self.actions[idx]]

    def element_action(self, vec) -> list[list]:
        """Action matrix of an arbitrary algebra element (coordinate vector)."""
        fld = self.algebra.field
        d = self.dim
        zero = fld.zero()
        acc = [[zero] * d for _ in range(d)]
        for u, c in enumerate(vec):
            if c:
                m = self.actions[u]
                if fld.kind == "prime":
                    p = fld.p
                    for i in range(d):
                        row = m[i]
                        ai = acc[i]
                        for j in range(d):
                            if row[j]:
                                ai[j] = (ai[j] + c * row[j]) % p
                else:
                    for i in range(d):
                        row = m[i]
                        ai = acc[i]
                        for j in range(d):
                            if row[j]:
                                ai[j] = ai[j] + c * row[j]
        return acc

    def verify(self) -> None:
        """Re-check the module axioms against the structure constants."""
        A = self.algebra
        fld = A.field
        d = self.dim
        unit_mat = self.element_action(list(A.unit))
        ident = [[fld.one() if i == j else fld.zero() for j in range(d)] for i in range(d)]
        if unit_mat != ident:
            raise ValueError("unit does not act as the identity")
        for u in range(A.dim):
            mu = self.act_raw(u)
            for v in range(A.dim):
                lhs = matmul_rows(fld, mu, self.act_raw(v))
                rhs = self.element_action(list(A.mult[u][v]))
                if lhs != rhs:
                    raise ValueError(
                        f"action violates structure constants on pair "
                        f"({A.basis_names[u]}, {A.basis_names[v]})"
                    )

    def to_json(self):
        fld = self.algebra.field
        return {
            "dimension": self.dim,
            "name": self.name,
            "field": fld.to_json(),
            "actions": {
                self.algebra.basis_names[u]: [[fld.fmt(x) for x in row] for row in self.actions[u]]
                for u in range(self.algebra.dim)
            },
        }


def representation_from_json(table: AlgebraTable, obj) -> Representation:
    fld = table.field
    actions = []
    for name in table.basis_names:
        grid = obj["actions"][name]
        actions.append([[fld.parse(x) for x in row] for row in grid])
    rep = Representation(table, int(obj["dimension"]), actions, obj.get("name", ""))
    rep.verify()
    return rep


def regular(table: AlgebraTable) -> Representation:
    d = table.dim
    actions = [[table.mult[i][u] for i in range(d)] for u in range(d)]
    return Representation(table, d, actions, name="regular")


def _unit_row(fld, n, j):
    v = [fld.zero()] * n
    v[j] = fld.one()
    return v


def submodule(M: Representation, rows, name: str = "") -> tuple[Representation, list[list]]:
    """Restrict M to the span of ``rows`` (must be action-stable).

    Returns (representation, echelon basis rows inside M)."""
    fld = M.algebra.field
    span = SpanBuilder(fld, M.dim)
    for r in rows:
        span.add(list(r))
    basis, pivots = span.finish()
    k = len(basis)
    actions = []
    for u in range(M.algebra.dim):
        act = M.act_raw(u)
        mat = []
        for b in basis:
            img = matmul_rows(fld, [b], act)[0]
            coeffs = coords_against(fld, basis, pivots, img)
            if coeffs is None:
                raise ValueError("rows are not action-stable")
            mat.append(coeffs)
        actions.append(mat)
    return Representation(M.algebra, k, actions, name=name), basis


def quotient(M: Representation, rows, name: str = "") -> tuple[Representation, dict]:
    """Quotient of M by the span of ``rows`` (must be action-stable).

    Returns (representation, data) where data carries ``project`` (M row ->
    quotient coords) and ``lift`` (quotient coords -> M row)."""
    fld = M.algebra.field
    span = SpanBuilder(fld, M.dim)
    for r in rows:
        span.add(list(r))
    basis, pivots = span.finish()
    pivset = set(pivots)
    comp = [j for j in range(M.dim) if j not in pivset]

    def project(vec):
        red = reduce_against(fld, basis, pivots, list(vec))
        return [red[j] for j in comp]

    def lift(qvec):
        out = [fld.zero()] * M.dim
        for c, j in zip(qvec, comp):
            out[j] = c
        return out

    actions = []
    for u in range(M.algebra.dim):
        act = M.act_raw(u)
        mat = []
        for j in comp:
            img = matmul_rows(fld, [_unit_row(fld, M.dim, j)], act)[0]
            mat.append(project(img))
        actions.append(mat)
    rep = Representation(M.algebra, len(comp), actions, name=name)
    return rep, {"project": project, "lift": lift, "sub_basis": basis, "sub_pivots": pivots}


def radical_rows(M: Representation) -> list[list]:
    """Rows spanning M*J (images of the declared radical basis)."""
    span = SpanBuilder(M.algebra.field, M.dim)
    for r in M.algebra.radical:
        act = M.element_action(list(r))
        for row in act:
            if any(row):
                span.add(list(row))
    return [list(r) for r in span.rows]


def radical_submodule(M: Representation) -> Representation:
    rep, _ = submodule(M, radical_rows(M), name=f"rad({M.name})" if M.name else "radical")
    return rep


def top(M: Representation) -> Representation:
    rep, _ = quotient(M, radical_rows(M), name=f"top({M.name})" if M.name else "top")
    return rep


def _projective_data(table: AlgebraTable, vertex: int):
    cache = getattr(table, "_proj_cache", None)
    if cache is None:
        cache = {}
        table._proj_cache = cache
    if vertex in cache:
        return cache[vertex]
    fld = table.field
    label, e = table.idempotents[vertex]
    span = SpanBuilder(fld, table.dim)
    for j in range(table.dim):
        r = table.mult_elements(list(e), table.basis_vec(j))
        if any(r):
            span.add(r)
    basis, pivots = span.finish()
    k = len(basis)
    actions = []
    for u in range(table.dim):
        mat = []
        for b in basis:
            img = table.mult_elements(list(b), table.basis_vec(u))
            coeffs = coords_against(fld, basis, pivots, img)
            mat.append(coeffs)
        actions.append(mat)
    rep = Representation(table, k, actions, name=f"P({label})")
    cache[vertex] = (rep, basis, pivots)
    return cache[vertex]


def projective(table: AlgebraTable, vertex: int) -> Representation:
    """The indecomposable projective e_v A with its right regular action."""
    return _projective_data(table, vertex)[0]


def simple(table: AlgebraTable, vertex: int) -> Representation:
    """Simple top of the projective at ``vertex``; one-dimensional in scope."""
    P = projective(table, vertex)
    S = top(P)
    if S.dim != 1:
        label = table.idempotents[vertex][0]
        raise ValueError(f"non-split top at vertex {label}: dim {S.dim}")
    S.name = f"S({table.idempotents[vertex][0]})"
    return S


def dual_representation(M: Representation, target: AlgebraTable) -> Representation:
    """K-dual of M, a right module over the opposite algebra (actions are
    the transposes).  ``target`` must be the opposite table of M.algebra."""
    if target.dim != M.algebra.dim:
        raise ValueError("dual target has the wrong dimension")
    actions = []
    for u in range(M.algebra.dim):
        m = M.actions[u]
        actions.append([[m[i][j] for i in range(M.dim)] for j in range(M.dim)])
    return Representation(target, M.dim, actions, name=f"D({M.name})" if M.name else "dual")


# ---------------------------------------------------------------------------
# projective covers and minimal resolutions
# ---------------------------------------------------------------------------

@dataclass
class Cover:
    vertices: list[int]
    P: Representation
    blocks: list[tuple[int, list[list], list[int]]]  # (vertex, basis rows of e_iA, pivots)
    offsets: list[int]
    matrix: list[list]  # dim P x dim M
    generators: list[tuple[int, list]]  # (vertex, image row in M) per summand


def _cover_generators(M: Representation) -> list[tuple[int, list]]:
    """Pick top generators aligned with idempotents: pairs (vertex, m-row)."""
    A = M.algebra
    fld = A.field
    span = SpanBuilder(fld, M.dim)
    for r in radical_rows(M):
        span.add(r)
    basis, pivots = span.finish()
    pivset = set(pivots)
    comp = [j for j in range(M.dim) if j not in pivset]

    def proj(vec):
        red = reduce_against(fld, basis, pivots, vec)
        return [red[j] for j in comp]

    gens: list[tuple[int, list]] = []
    sel = SpanBuilder(fld, len(comp))
    idem_actions = [M.element_action(list(e)) for _, e in A.idempotents]
    for j in range(M.dim):
        if len(gens) == len(comp):
            break
        u = _unit_row(fld, M.dim, j)
        for vi in range(len(A.idempotents)):
            m = matmul_rows(fld, [u], idem_actions[vi])[0]
            if not any(m):
                continue
            if sel.add(proj(m)):
                gens.append((vi, m))
                if len(gens) == len(comp):
                    break
    assert len(gens) == len(comp), "top generators do not split by idempotents"
    return gens


def _projective_sum(table: AlgebraTable, vertices: list[int]) -> tuple[Representation, list, list]:
    blocks = [_projective_data(table, v) for v in vertices]
    dims = [b[0].dim for b in blocks]
    offsets = [0]
    for d in dims:
        offsets.append(offsets[-1] + d)
    total = offsets[-1]
    fld = table.field
    zero = fld.zero()
    actions = []
    for u in range(table.dim):
        mat = [[zero] * total for _ in range(total)]
        for bi, (rep, _, _) in enumerate(blocks):
            off = offsets[bi]
            act = rep.actions[u]
            for i in range(rep.dim):
                row = act[i]
                target = mat[off + i]
                for j in range(rep.dim):
                    if row[j]:
                        target[off + j] = row[j]
        actions.append(mat)
    name = "(+)".join(f"P{v}" for v in vertices)
    rep = Representation(table, total, actions, name=name)
    block_data = [(v, b[1], b[2]) for v, b in zip(vertices, blocks)]
    return rep, block_data, offsets


def projective_cover(M: Representation) -> Cover:
    """Minimal projective cover of a nonzero module; kernel inside the radical."""
    if M.dim == 0:
        raise ValueError("projective cover of the zero module")
    A = M.algebra
    fld = A.field
    gens = _cover_generators(M)
    vertices = [vi for vi, _ in gens]
    P, blocks, offsets = _projective_sum(A, vertices)
    matrix = []
    for (vi, m), (v2, rows, _) in zip(gens, blocks):
        act_cache = [M.element_action(list(r)) for r in rows]
        for act in act_cache:
            matrix.append(matmul_rows(fld, [m], act)[0])
    # surjectivity (covers the top, hence everything)
    if rank_rows(fld, matrix) != M.dim:
        raise AssertionError("projective cover failed to surject")
    return Cover(vertices, P, blocks, offsets, matrix, gens)


def syzygy(M: Representation, check_minimal: bool = True) -> Representation:
    """Kernel of the projective cover (zero-dimensional for projectives)."""
    cov = projective_cover(M)
    ker = left_kernel_rows(M.algebra.field, cov.matrix)
    if check_minimal and ker:
        radP = SpanBuilder(M.algebra.field, cov.P.dim)
        for r in radical_rows(cov.P):
            radP.add(r)
        for row in ker:
            if not radP.contains(row):
                raise AssertionError("cover is not minimal: kernel escapes the radical")
    rep, _ = submodule(cov.P, ker, name=f"syz({M.name})" if M.name else "syzygy")
    return rep


def is_projective_rep(M: Representation) -> bool:
    if M.dim == 0:
        return True
    cov = projective_cover(M)
    return cov.P.dim == M.dim


class MinimalResolution:
    """Minimal projective resolution, extended on demand.

    ``levels[s]`` is the vertex list of the s-th projective term.
    ``maps[s]`` (s >= 1) is the connecting map P_s -> P_{s-1} written as
    an element matrix: entry [c][c'] is the algebra element carrying the
    c'-th generator of P_s into the c-th summand of P_{s-1}.
    ``kernel_dims[s]`` is dim of the (s+1)-st syzygy.
    """

    def __init__(self, M: Representation):
        require_not_semisimple(M.algebra)
        self.M = M
        self.levels: list[list[int]] = []
        self.maps: list[Optional[list[list]]] = [None]
        self.kernel_dims: list[int] = []
        self._covers: list[Cover] = []
        self._current: Optional[Representation] = M
        self._sub_basis: Optional[list] = None  # rows of the current kernel inside its ambient P
        self.finished = False

    def extend_to(self, length: int) -> None:
        while len(self.levels) < length and not self.finished:
            self._extend_once()

    def _extend_once(self) -> None:
        cur = self._current
        if cur is None or cur.dim == 0:
            self.finished = True
            return
        A = self.M.algebra
        fld = A.field
        cov = projective_cover(cur)
        self.levels.append(list(cov.vertices))
        self._covers.append(cov)
        if len(self.levels) >= 2:
            prev = self._covers[-2]
            gens = cov.generators
            # rows of the new generators inside the previous projective sum
            assert self._sub_basis is not None
            elem_matrix = [
                [None] * len(cov.vertices) for _ in range(len(prev.vertices))
            ]
            for gi, (vi, m) in enumerate(gens):
                prow = matmul_rows(fld, [m], self._sub_basis)[0]
                for c in range(len(prev.vertices)):
                    off = prev.offsets[c]
                    rows = prev.blocks[c][1]
                    block = prow[off:off + len(rows)]
                    elem = A.zero_vec()
                    for coeff, brow in zip(block, rows):
                        if coeff:
                            for k in range(A.dim):
                                if brow[k]:
                                    elem[k] = fld.add(elem[k], fld.mul(coeff, brow[k]))
                    elem_matrix[c][gi] = elem
            self.maps.append(elem_matrix)
        ker = left_kernel_rows(fld, cov.matrix)
        radP = SpanBuilder(fld, cov.P.dim)
        for r in radical_rows(cov.P):
            radP.add(r)
        for row in ker:
            if not radP.contains(row):
                raise AssertionError("cover is not minimal: kernel escapes the radical")
        krep, kbasis = submodule(cov.P, ker, name="") if ker else (None, [])
        if krep is None or krep.dim == 0:
            self.kernel_dims.append(0)
            self._current = None
            self._sub_basis = None
        else:
            self.kernel_dims.append(krep.dim)
            self._current = krep
            self._sub_basis = kbasis

    def term_count(self) -> int:
        return len(self.levels)


def _resolution(M: Representation, length: int) -> MinimalResolution:
    res = M._cache.get("resolution")
    if res is None:
        res = MinimalResolution(M)
        M._cache["resolution"] = res
    res.extend_to(length)
    return res


def syzygy_dims(M: Representation, t: int) -> list[int]:
    """Dimensions of the first t syzygies of M."""
    if t < 1:
        raise ValueError("t must be >= 1")
    res = _resolution(M, t)
    out = []
    for s in range(t):
        if s < len(res.kernel_dims):
            out.append(res.kernel_dims[s])
        else:
            out.append(0)
    return out


# ---------------------------------------------------------------------------
# Hom and Ext
# ---------------------------------------------------------------------------

def _weight_basis(N: Representation, vertex: int):
    key = ("weight", vertex)
    if key in N._cache:
        return N._cache[key]
    fld = N.algebra.field
    _, e = N.algebra.idempotents[vertex]
    act = N.element_action(list(e))
    span = SpanBuilder(fld, N.dim)
    for row in act:
        if any(row):
            span.add(list(row))
    N._cache[key] = span.finish()
    return N._cache[key]


@dataclass
class ExtTable:
    source: str
    target: str
    degrees: tuple[int, ...]  # dims of Ext^1 .. Ext^t
    hom: Optional[int] = None  # dim Hom, when requested

    def dim(self, t: int) -> int:
        if t == 0:
            if self.hom is None:
                raise ValueError("degree-0 entry was not requested")
            return self.hom
        return self.degrees[t - 1]

    def to_json(self):
        obj = {"source": self.source, "target": self.target,
               "degrees": list(self.degrees)}
        if self.hom is not None:
            obj["hom"] = self.hom
        return obj


def ext_dims(M: Representation, N: Representation, t: int,
             include_hom: bool = False) -> ExtTable:
    """Dimensions of Ext^1..Ext^t(M, N) via Hom(-, N) on the minimal resolution.

    Hom(P_s, N) is split into weight spaces N e_i along the summands of
    P_s; the induced differentials are right multiplications by the
    element matrices of the resolution.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    if M.algebra is not N.algebra and M.algebra.dim != N.algebra.dim:
        raise ValueError("modules live over different algebras")
    fld = M.algebra.field
    res = _resolution(M, t + 2)  # the outgoing differential needs level t+1

    def h_basis(s):
        if s >= len(res.levels):
            return []
        out = []
        for c, v in enumerate(res.levels[s]):
            rows, pivots = _weight_basis(N, v)
            out.append((c, v, rows, pivots))
        return out

    def h_dim(basis):
        return sum(len(rows) for _, _, rows, _ in basis)

    def delta_rank(s):
        """Rank of Hom(P_{s-1}, N) -> Hom(P_s, N)."""
        if s >= len(res.levels) or s < 1:
            return 0
        src = h_basis(s - 1)
        tgt = h_basis(s)
        tgt_dim = h_dim(tgt)
        if tgt_dim == 0 or h_dim(src) == 0:
            return 0
        emat = res.maps[s]
        tgt_offsets = []
        off = 0
        for _, _, rows, _ in tgt:
            tgt_offsets.append(off)
            off += len(rows)
        images = []
        for c, v, rows, _ in src:
            act_cache = [N.element_action(emat[c][c2]) for c2 in range(len(tgt))]
            for r in rows:
                img = [fld.zero()] * tgt_dim
                for c2, (_, _, trows, tpivots) in enumerate(tgt):
                    if not trows:
                        continue
                    piece = matmul_rows(fld, [list(r)], act_cache[c2])[0]
                    coeffs = coords_against(fld, trows, tpivots, piece)
                    if coeffs is None:
                        raise AssertionError("differential image left its weight space")
                    base = tgt_offsets[c2]
                    for k, cf in enumerate(coeffs):
                        img[base + k] = cf
                images.append(img)
        return rank_rows(fld, images)

    degrees = []
    ranks: dict[int, int] = {}

    def rk(s):
        if s not in ranks:
            ranks[s] = delta_rank(s)
        return ranks[s]

    for deg in range(1, t + 1):
        if deg >= len(res.levels):
            degrees.append(0)
            continue
        h = h_dim(h_basis(deg))
        val = h - rk(deg) - rk(deg + 1)
        assert val >= 0
        degrees.append(val)
    hom = None
    if include_hom:
        hom = h_dim(h_basis(0)) - rk(1)
    return ExtTable(M.name or "M", N.name or "N", tuple(degrees), hom)


def hom_basis(M: Representation, N: Representation) -> list[list[list]]:
    """Basis of Hom_A(M, N) as dM x dN matrices, solved against the
    algebra's generator set."""
    fld = M.algebra.field
    dm, dn = M.dim, N.dim
    if dm == 0 or dn == 0:
        return []
    gens = M.algebra.generators
    rows = []
    gen_pairs = []
    for g in gens:
        gen_pairs.append((M.element_action(list(g)), N.element_action(list(g))))
    for actM, actN in gen_pairs:
        for i in range(dm):
            for k in range(dn):
                row = [fld.zero()] * (dm * dn)
                # sum_j actM[i][j] T[j][k] - T[i][j'] actN[j'][k] = 0
                for j in range(dm):
                    if actM[i][j]:
                        row[j * dn + k] = fld.add(row[j * dn + k], actM[i][j])
                for jp in range(dn):
                    if actN[jp][k]:
                        row[i * dn + jp] = fld.sub(row[i * dn + jp], actN[jp][k])
                if any(row):
                    rows.append(row)
    if not rows:
        flat = []
        one, zero = fld.one(), fld.zero()
        for pos in range(dm * dn):
            flat.append([one if q == pos else zero for q in range(dm * dn)])
        sols = flat
    else:
        sols = kernel_rows(fld, rows, dm * dn)
    mats = []
    for sol in sols:
        mats.append([[sol[i * dn + k] for k in range(dn)] for i in range(dm)])
    return mats


def dim_hom(M: Representation, N: Representation) -> int:
    return len(hom_basis(M, N))


def _find_invertible(mats, fld, dim, budget):
    """Search the span of ``mats`` for an invertible matrix.

    Returns (witness or None, search_complete).  Complete exhaustion rules
    out a witness: over F_p all points are tried; over Q the determinant of
    the generic combination has total degree <= dim, so vanishing on the
    whole {0..dim}^h grid makes it the zero polynomial."""
    if not mats:
        return None, True
    for T in mats:
        if rank_rows(fld, T) == dim:
            return T, False
    tuples, complete = _coeff_tuples(fld, len(mats), budget, degree_bound=dim)
    for coeffs in tuples:
        acc = [[fld.zero()] * dim for _ in range(dim)]
        for c, T in zip(coeffs, mats):
            if c:
                for i in range(dim):
                    row = T[i]
                    ai = acc[i]
                    for j in range(dim):
                        if row[j]:
                            ai[j] = fld.add(ai[j], fld.mul(c, row[j]))
        if rank_rows(fld, acc) == dim:
            return acc, complete
    return None, complete


def modules_isomorphic(M: Representation, N: Representation,
                       budget: int = DEFAULT_SEARCH_BUDGET):
    """True / False / None: does an invertible intertwiner exist?

    Equality of dimensions and a nonzero Hom space are necessary; the
    witness search is exhaustive over F_p whenever p^dim Hom fits the
    budget, making False definitive there.
    """
    if M.dim != N.dim:
        return False
    if M.dim == 0:
        return True
    mats = hom_basis(M, N)
    if not mats:
        return False
    fld = M.algebra.field
    witness, complete = _find_invertible(mats, fld, M.dim, budget)
    if witness is not None:
        return True
    return False if complete else None


# ---------------------------------------------------------------------------
# injectives, dominant dimension, phi, delta
# ---------------------------------------------------------------------------

def _op_table(table: AlgebraTable) -> AlgebraTable:
    op = getattr(table, "_op_cache", None)
    if op is None:
        op = opposite(table)
        table._op_cache = op
        op._op_cache = table
    return op


def injective(table: AlgebraTable, vertex: int) -> Representation:
    """D(A e_v), computed as the dual of the projective over the opposite."""
    op = _op_table(table)
    rep = dual_representation(projective(op, vertex), table)
    rep.name = f"I({table.idempotents[vertex][0]})"
    return rep


def dual_regular(table: AlgebraTable) -> Representation:
    """D(A) as a right module: dual of the regular module of the opposite."""
    op = _op_table(table)
    rep = dual_representation(regular(op), table)
    rep.name = "D(A)"
    return rep


def projective_injective_vertices(table: AlgebraTable,
                                  budget: int = DEFAULT_SEARCH_BUDGET) -> set[int]:
    """Vertices whose injective is also projective."""
    key = "_pi_vertices"
    cached = getattr(table, key, None)
    if cached is not None:
        return cached
    nv = table.n_vertices
    projs = [projective(table, j) for j in range(nv)]
    out = set()
    for i in range(nv):
        inj = injective(table, i)
        verdict_found = False
        for P in projs:
            if P.dim != inj.dim:
                continue
            verdict = modules_isomorphic(inj, P, budget=budget)
            if verdict is True:
                verdict_found = True
                break
            if verdict is None:
                raise UndeterminedError(
                    "isomorphism search exhausted while locating projective-injectives"
                )
        if verdict_found:
            out.add(i)
    setattr(table, key, out)
    return out


def domdim(table: AlgebraTable, cutoff: int,
           budget: int = DEFAULT_SEARCH_BUDGET) -> BoundedValue:
    """Dominant dimension via the dual of a minimal projective resolution
    of D(A) over the opposite algebra."""
    if cutoff < 1:
        raise PreconditionError("cutoff must be >= 1")
    require_not_semisimple(table)
    PI = projective_injective_vertices(table, budget)
    op = _op_table(table)
    co_reg = dual_representation(regular(table), op)
    co_reg.name = "D(A_A)"
    res = _resolution(co_reg, 1)
    for s in range(cutoff):
        res.extend_to(s + 1)
        if s >= len(res.levels):
            return BoundedValue.at_least(cutoff)  # coresolution terminated
        if any(v not in PI for v in res.levels[s]):
            return BoundedValue.finite(s)
    return BoundedValue.at_least(cutoff)


@dataclass
class CoresolutionReport:
    module: str
    terms: list  # per step: {"vertices": {label: count}, "dim": n, "projective": bool}

    def to_json(self):
        return {"module": self.module, "terms": self.terms}


def resolution_report(M: Representation, t: int) -> dict:
    """First t terms of the minimal projective resolution as a JSON-ready
    dict: vertex multiset and dimension per step, syzygy dims, minimality flag."""
    res = _resolution(M, t)
    table = M.algebra
    terms = []
    for s in range(t):
        if s >= len(res.levels):
            terms.append({"vertices": {}, "dim": 0})
            continue
        counts: dict[str, int] = {}
        dim_s = 0
        for v in res.levels[s]:
            label = table.idempotents[v][0]
            counts[label] = counts.get(label, 0) + 1
            dim_s += projective(table, v).dim
        terms.append({"vertices": dict(sorted(counts.items())), "dim": dim_s})
    return {
        "module": M.name or "M",
        "terms": terms,
        "syzygy_dims": syzygy_dims(M, t),
        "minimal": True,  # covers are minimal by construction and certified per step
    }


def injective_coresolution(M: Representation, t: int,
                           budget: int = DEFAULT_SEARCH_BUDGET) -> CoresolutionReport:
    """First t terms of the minimal injective coresolution, by dualising."""
    table = M.algebra
    op = _op_table(table)
    dual = dual_representation(M, op)
    res = _resolution(dual, t)
    PI = projective_injective_vertices(table, budget)
    terms = []
    for s in range(t):
        if s >= len(res.levels):
            terms.append({"vertices": {}, "dim": 0, "projective": True})
            continue
        verts = res.levels[s]
        counts: dict[str, int] = {}
        dim_s = 0
        for v in verts:
            label = table.idempotents[v][0]
            counts[label] = counts.get(label, 0) + 1
            dim_s += projective(op, v).dim
        terms.append({
            "vertices": dict(sorted(counts.items())),
            "dim": dim_s,
            "projective": all(v in PI for v in verts),
        })
    return CoresolutionReport(M.name or "M", terms)


def phi(M: Representation, cutoff: int) -> BoundedValue:
    """First degree r in [1, cutoff] with Ext^r(M, M) nonzero."""
    if cutoff < 1:
        raise PreconditionError("cutoff must be >= 1")
    require_not_semisimple(M.algebra)
    if is_projective_rep(M):
        raise PreconditionError("phi is undefined on projective modules")
    res = _resolution(M, cutoff + 1)
    for r in range(1, cutoff + 1):
        if r >= len(res.levels) and res.finished:
            return BoundedValue.at_least(cutoff)  # finite projective dimension, all higher Ext vanish
        if ext_dims(M, M, r).dim(r) > 0:
            return BoundedValue.finite(r)
    return BoundedValue.at_least(cutoff)


def delta(table: AlgebraTable, cutoff: int, witnesses=None,
          witnesses_complete: bool = False) -> BoundedValue:
    """Supremum of phi over non-projective generator-cogenerators.

    Without witnesses the algebra must not be selfinjective and the value
    is the first degree with Ext^r(D(A), A) nonzero.  With a witness
    family of modules the result is the maximum of their phi values --
    exact when the family is certified complete, otherwise a lower bound.
    """
    require_not_semisimple(table)
    if witnesses is not None:
        nonproj = [W for W in witnesses if not is_projective_rep(W)]
        if not nonproj:
            raise PreconditionError("witness family contains no non-projective module")
        bound = 0
        all_finite = True
        for W in nonproj:
            r = phi(W, cutoff)
            if r.is_finite:
                bound = max(bound, r.value)
            else:
                all_finite = False
                bound = max(bound, r.value)
        if witnesses_complete and all_finite:
            return BoundedValue.finite(bound)
        return BoundedValue.at_least(bound)
    from .quivalg import is_selfinjective as _table_selfinjective

    if _table_selfinjective(table):
        raise PreconditionError(
            "delta of a selfinjective algebra needs an explicit witness family"
        )
    D = dual_regular(table)
    A = regular(table)
    res = _resolution(D, cutoff + 1)
    for r in range(1, cutoff + 1):
        if r >= len(res.levels) and res.finished:
            return BoundedValue.at_least(cutoff)
        if ext_dims(D, A, r).dim(r) > 0:
            return BoundedValue.finite(r)
    return BoundedValue.at_least(cutoff)


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------

@dataclass
class IdealModule:
    rep: Representation
    rows: list[list]  # echelon basis inside the algebra

    @property
    def dim(self) -> int:
        return len(self.rows)


def ideal_module(table: AlgebraTable, generator_vectors) -> IdealModule:
    """Smallest two-sided ideal containing the generators, as a right module."""
    gens = [list(v) for v in generator_vectors if any(v)]
    if not gens:
        raise ValueError("ideal generators are all zero")
    fld = table.field
    span = SpanBuilder(fld, table.dim)
    work = []
    for g in gens:
        if span.add(g):
            work.append(g)
    while work:
        v = work.pop()
        for g in table.generators:
            for prod in (table.mult_elements(v, list(g)), table.mult_elements(list(g), v)):
                if any(prod) and span.add(prod):
                    work.append(prod)
    rows = [list(r) for r in span.rows]
    rep, basis = submodule(regular(table), rows, name="ideal")
    return IdealModule(rep, basis)


def radical_power(table: AlgebraTable, k: int) -> IdealModule:
    """J^k with its right module structure (dim 0 above the Loewy length)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    fld = table.field
    current = [list(v) for v in table.radical]
    for _ in range(k - 1):
        nxt = SpanBuilder(fld, table.dim)
        for u in current:
            for v in table.radical:
                w = table.mult_elements(u, list(v))
                if any(w):
                    nxt.add(w)
        current = [list(r) for r in nxt.rows]
        if not current:
            break
    if not current:
        zero_rep = Representation(table, 0, [[] for _ in range(table.dim)], name=f"J^{k}")
        return IdealModule(zero_rep, [])
    rep, basis = submodule(regular(table), current, name=f"J^{k}")
    return IdealModule(rep, basis)


@dataclass
class IdealRigidityReport:
    algebra: str
    ideal_dim: int
    hom_to_quotient: int
    ext1_self: int
    local: bool
    holds: bool

    def to_json(self):
        return {
            "algebra": self.algebra,
            "ideal_dim": self.ideal_dim,
            "dim_hom_X_AmodX": self.hom_to_quotient,
            "dim_ext1_X_X": self.ext1_self,
            "local": self.local,
            "holds": self.holds,
        }


def check_ideal_rigidity(table: AlgebraTable, X: IdealModule,
                         strict: bool = True,
                         budget: int = DEFAULT_SEARCH_BUDGET) -> IdealRigidityReport:
    """For a symmetric algebra and a nontrivial proper two-sided ideal X:
    report dim Hom(X, A/X) and dim Ext^1(X, X) and check that the first
    being nonzero forces the second nonzero (and, for local algebras,
    that the first is nonzero unconditionally)."""
    require_not_semisimple(table)
    sym = is_symmetric(table, budget=budget)
    if sym is None:
        raise UndeterminedError("could not certify the algebra symmetric")
    if sym is False:
        raise PreconditionError("ideal rigidity check requires a symmetric algebra")
    if not 0 < X.dim < table.dim:
        raise PreconditionError("ideal must be nontrivial and proper")
    quot, _ = quotient(regular(table), X.rows, name="A/X")
    hom = dim_hom(X.rep, quot)
    ext1 = ext_dims(X.rep, X.rep, 1).dim(1)
    local = is_local(table)
    holds = True
    if local and hom == 0:
        holds = False
    if hom != 0 and ext1 == 0:
        holds = False
    report = IdealRigidityReport(table.describe(), X.dim, hom, ext1, local, holds)
    if strict and not holds:
        raise FalsificationError(f"ideal rigidity failed: {report.to_json()}")
    return report


# ---------------------------------------------------------------------------
# endomorphism algebras
# ---------------------------------------------------------------------------

def _local_scalar(T, fld, dim):
    """The unique lambda with T - lambda*I nilpotent, for endomorphisms of
    modules with (split) local endomorphism ring; None when absent."""
    def nilpotent(mat):
        power = [list(r) for r in mat]
        steps = 1
        while steps < dim:
            power = matmul_rows(fld, power, power)
            steps *= 2
        return all(not x for row in power for x in row)

    def shifted(lam):
        return [
            [fld.sub(T[i][j], lam) if i == j else T[i][j] for j in range(dim)]
            for i in range(dim)
        ]

    if fld.kind == "prime":
        for lam_int in range(fld.p):
            lam = fld.of_int(lam_int)
            if nilpotent(shifted(lam)):
                return lam
        return None
    trace = fld.zero()
    for i in range(dim):
        trace = fld.add(trace, T[i][i])
    lam = fld.mul(trace, fld.inv(fld.of_int(dim)))
    return lam if nilpotent(shifted(lam)) else None


def is_indecomposable(M: Representation, budget: int = DEFAULT_SEARCH_BUDGET):
    """True / False / None, by Fitting splittings and an End-locality certificate.

    A stable power of any endomorphism with rank strictly between 0 and
    dim splits M.  If no candidate splits and the endomorphism ring is
    certified local (scalars plus a nilpotent ideal), M is indecomposable.
    """
    if M.dim == 0:
        raise ValueError("zero module")
    fld = M.algebra.field
    ends = hom_basis(M, M)
    if len(ends) == 1:
        return True
    candidates = list(ends)
    for i in range(len(ends)):
        for j in range(i + 1, len(ends)):
            candidates.append([
                [fld.add(ends[i][r][c], ends[j][r][c]) for c in range(M.dim)]
                for r in range(M.dim)
            ])
    candidates = candidates[:budget]
    for T in candidates:
        power = [list(r) for r in T]
        steps = 1
        while steps < M.dim:
            power = matmul_rows(fld, power, power)
            steps *= 2
        r = rank_rows(fld, power)
        if 0 < r < M.dim:
            return False
    lambdas = []
    for T in ends:
        lam = _local_scalar(T, fld, M.dim)
        if lam is None:
            return None
        lambdas.append(lam)
    nil = []
    for T, lam in zip(ends, lambdas):
        nil.append([
            [fld.sub(T[i][j], lam) if i == j else T[i][j] for j in range(M.dim)]
            for i in range(M.dim)
        ])
    flat = lambda mat: [x for row in mat for x in row]
    span = SpanBuilder(fld, M.dim * M.dim)
    for Nl in nil:
        span.add(flat(Nl))
    if span.rank != len(ends) - 1:
        return None
    # two-sided ideal inside End, and nilpotent
    for Nl in nil:
        for T in ends:
            if not span.contains(flat(matmul_rows(fld, Nl, T))):
                return None
            if not span.contains(flat(matmul_rows(fld, T, Nl))):
                return None
    current = list(nil)
    steps = 0
    while current:
        steps += 1
        if steps > len(ends) + 1:
            return None
        nxt = SpanBuilder(fld, M.dim * M.dim)
        keep = []
        for U in current:
            for V in nil:
                W = matmul_rows(fld, U, V)
                if any(any(row) for row in W) and nxt.add(flat(W)):
                    keep.append(W)
        current = keep
    return True


def endomorphism_algebra(summands: list[Representation],
                         budget: int = DEFAULT_SEARCH_BUDGET) -> AlgebraTable:
    """End(M) for M the direct sum of pairwise non-isomorphic verified
    indecomposables, as an algebra table.

    Basis elements are homomorphisms between summands; the product u*v is
    "u then v" (composition read left to right), so the summand identity
    maps are the complete set of orthogonal primitive idempotents.
    """
    from .quivalg import make_table

    if not summands:
        raise ValueError("empty summand list")
    table = summands[0].algebra
    fld = table.field
    for M in summands:
        verdict = is_indecomposable(M, budget)
        if verdict is False:
            raise PreconditionError(f"summand {M.name or '?'} is decomposable")
        if verdict is None:
            raise UndeterminedError(
                f"indecomposability of summand {M.name or '?'} is undetermined"
            )
    for i in range(len(summands)):
        for j in range(i + 1, len(summands)):
            verdict = modules_isomorphic(summands[i], summands[j], budget)
            if verdict is True:
                raise PreconditionError("summands must be pairwise non-isomorphic")
            if verdict is None:
                raise UndeterminedError("summand isomorphism test undetermined")
    k = len(summands)
    homs = [[hom_basis(summands[a], summands[b]) for b in range(k)] for a in range(k)]
    basis = []  # (a, b, matrix)
    names = []
    for a in range(k):
        for b in range(k):
            for idx, T in enumerate(homs[a][b]):
                basis.append((a, b, T))
                names.append(f"h{a}to{b}_{idx}")
    dim_e = len(basis)
    flat = lambda mat: [x for row in mat for x in row]
    offsets = {}
    pos = 0
    for a in range(k):
        for b in range(k):
            offsets[(a, b)] = pos
            pos += len(homs[a][b])

    def coords_of(a, b, T):
        return _solve_coords(fld, [flat(X) for X in homs[a][b]], flat(T))

    mult = []
    for (a1, b1, T1) in basis:
        row = []
        for (a2, b2, T2) in basis:
            vec = [fld.zero()] * dim_e
            if b1 == a2:
                comp = matmul_rows(fld, T1, T2)  # "T1 then T2"
                if any(any(r) for r in comp):
                    sol = coords_of(a1, b2, comp)
                    base = offsets[(a1, b2)]
                    for idx, c in enumerate(sol):
                        vec[base + idx] = c
            row.append(tuple(vec))
        mult.append(tuple(row))

    def ident(a):
        d = summands[a].dim
        return [[fld.one() if i == j else fld.zero() for j in range(d)] for i in range(d)]

    unit = [fld.zero()] * dim_e
    idem = []
    for a in range(k):
        e = [fld.zero()] * dim_e
        sol = coords_of(a, a, ident(a))
        base = offsets[(a, a)]
        for idx, c in enumerate(sol):
            e[base + idx] = c
            unit[base + idx] = fld.add(unit[base + idx], c)
        label = summands[a].name or f"m{a}"
        idem.append((label, e))
    radical = []
    for pos, (a, b, T) in enumerate(basis):
        if a != b:
            v = [fld.zero()] * dim_e
            v[pos] = fld.one()
            radical.append(v)
    for a in range(k):
        for T in homs[a][a]:
            lam = _local_scalar(T, fld, summands[a].dim)
            if lam is None:
                raise UndeterminedError("endomorphism scalar not found; non-split input?")
            d = summands[a].dim
            nil = [[fld.sub(T[i][j], lam) if i == j else T[i][j] for j in range(d)]
                   for i in range(d)]
            if not any(any(r) for r in nil):
                continue
            v = [fld.zero()] * dim_e
            sol = coords_of(a, a, nil)
            base = offsets[(a, a)]
            for idx, c in enumerate(sol):
                v[base + idx] = c
            radical.append(v)
    return make_table(
        field=fld,
        basis_names=names,
        mult=mult,
        unit=unit,
        idempotents=idem,
        radical=radical,
        generators=None,
        provenance={"kind": "endomorphism",
                    "summands": [M.name or f"m{i}" for i, M in enumerate(summands)]},
    )


def _solve_coords(fld, basis_rows, target):
    """Coordinates of ``target`` in the (independent) raw basis rows."""
    n = len(basis_rows)
    width = len(target)
    aug = [[basis_rows[i][j] for i in range(n)] + [target[j]] for j in range(width)]
    work = [list(r) for r in aug]
    _, pivots = rref_rows(fld, work)
    sol = [fld.zero()] * n
    for row, c in zip(work, pivots):
        if c >= n:
            raise AssertionError("target outside the span")
        sol[c] = row[n]
    return sol


# ---------------------------------------------------------------------------
# gendo-symmetric test
# ---------------------------------------------------------------------------

def is_gendo_symmetric(table: AlgebraTable, cutoff: int,
                       budget: int = DEFAULT_SEARCH_BUDGET,
                       size_limit: int = 4096):
    """True / False / None: dominant dimension >= 2 together with the
    bimodule isomorphism D(Ae) = eA over eAe (x) A^op, for e the sum of
    idempotents spanning the minimal faithful projective-injective."""
    if cutoff < 2:
        raise PreconditionError("cutoff must be >= 2 to settle domdim >= 2")
    require_not_semisimple(table)
    dd = domdim(table, cutoff, budget)
    if dd.is_finite and dd.value < 2:
        return False
    fld = table.field
    PI = sorted(projective_injective_vertices(table, budget))
    labels = [table.idempotents[i][0] for i in PI]
    corner, corner_rows = corner_algebra(table, labels, size_limit=size_limit)
    T = tensor_algebra(opposite(corner), table, size_limit=size_limit)

    e = table.zero_vec()
    for i in PI:
        e = [fld.add(a, b) for a, b in zip(e, table.idempotents[i][1])]

    # eA as a right module over (eAe)^op (x) A: m . (x (x) a) = x*m*a
    span_eA = SpanBuilder(fld, table.dim)
    for j in range(table.dim):
        r = table.mult_elements(e, table.basis_vec(j))
        if any(r):
            span_eA.add(r)
    rows_eA, piv_eA = span_eA.finish()

    span_Ae = SpanBuilder(fld, table.dim)
    for j in range(table.dim):
        r = table.mult_elements(table.basis_vec(j), e)
        if any(r):
            span_Ae.add(r)
    rows_Ae, piv_Ae = span_Ae.finish()

    dim_e = len(rows_eA)
    actions_eA = []
    actions_DAe = []
    for ci in range(corner.dim):
        x = corner_rows[ci]
        for aj in range(table.dim):
            a = table.basis_vec(aj)
            mat = []
            for r in rows_eA:
                img = table.mult_elements(x, table.mult_elements(list(r), a))
                coeffs = coords_against(fld, rows_eA, piv_eA, img)
                if coeffs is None:
                    raise AssertionError("eA is not stable under the bimodule action")
                mat.append(coeffs)
            actions_eA.append(mat)
            # on Ae: m -> a*m*x, then transpose for the dual
            mat2 = []
            for r in rows_Ae:
                img = table.mult_elements(a, table.mult_elements(list(r), x))
                coeffs = coords_against(fld, rows_Ae, piv_Ae, img)
                if coeffs is None:
                    raise AssertionError("Ae is not stable under the bimodule action")
                mat2.append(coeffs)
            actions_DAe.append([[mat2[i][j] for i in range(len(rows_Ae))]
                                for j in range(len(rows_Ae))])
    rep_eA = Representation(T, dim_e, actions_eA, name="eA")
    rep_DAe = Representation(T, len(rows_Ae), actions_DAe, name="D(Ae)")
    return modules_isomorphic(rep_DAe, rep_eA, budget=budget)


# ---------------------------------------------------------------------------
# Nakayama bridge
# ---------------------------------------------------------------------------

def bridged_module(table: AlgebraTable, vertex: int, length: int) -> Representation:
    """The uniserial module P_vertex / (its length-th radical power) over a
    bridged Nakayama table."""
    P = projective(table, vertex)
    fld = table.field
    rad_actions = [P.element_action(list(r)) for r in table.radical]
    rows = [_unit_row(fld, P.dim, j) for j in range(P.dim)]
    for _ in range(length):
        span = SpanBuilder(fld, P.dim)
        for r in rows:
            for act in rad_actions:
                img = matmul_rows(fld, [r], act)[0]
                if any(img):
                    span.add(img)
        rows = [list(x) for x in span.rows]
        if not rows:
            break
    if not rows:
        return Representation(table, P.dim, P.actions, name=f"M({vertex},{length})")
    rep, _ = quotient(P, rows, name=f"M({vertex},{length})")
    return rep
