"""Finite-dimensional algebras as explicit basis/structure-constant tables.

A table records a field, a named basis, the full multiplication tensor,
the unit, a complete set of orthogonal primitive idempotents (with
vertex labels) and a basis of the Jacobson radical.  Every constructor
re-verifies the algebra axioms plus the split-basic certificate
(``dim A = dim J + #idempotents``), which is what licenses the
homological machinery downstream (one-dimensional simple tops,
projective covers through idempotents, ...).

Tables are produced four ways: compiling a bounded quiver algebra with
relations (with a certified Loewy bound), fixed presets, bridging a
Nakayama algebra given by its Kupisch series, and closure operations
(opposite, tensor/enveloping, corner algebras).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field as dc_field
from itertools import product as iter_product

from . import nakayama as nak
from .exactmath import (
    FieldSpec,
    SpanBuilder,
    coords_against,
    kernel_rows,
    matmul_rows,
    rank_rows,
    reduce_against,
)

DEFAULT_SIZE_LIMIT = 4096
DEFAULT_SEARCH_BUDGET = 20000


class RelationSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownNameError(ValueError):
    pass


class NonComposableError(ValueError):
    pass


class CompileError(ValueError):
    pass


class LoewyBoundError(CompileError):
    pass


class SizeLimitError(ValueError):
    pass


# ---------------------------------------------------------------------------
# quiver specs and relation expressions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class QuiverSpec:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    relations: tuple[str, ...]
    loewy_bound: int
    field: FieldSpec

    def __post_init__(self):
        names = list(self.vertices) + [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise CompileError("vertex and arrow names must be pairwise distinct")
        vset = set(self.vertices)
        for a in self.arrows:
            if a.source not in vset or a.target not in vset:
                raise CompileError(f"arrow {a.name} has an endpoint outside the vertex list")
        if self.loewy_bound < 2:
            raise CompileError("Loewy bound must be at least 2")

    def to_json(self):
        return {
            "kind": "quiver",
            "vertices": list(self.vertices),
            "arrows": [[a.name, a.source, a.target] for a in self.arrows],
            "relations": list(self.relations),
            "loewy_bound": self.loewy_bound,
            "field": self.field.to_json(),
        }

    @staticmethod
    def from_json(obj) -> "QuiverSpec":
        return QuiverSpec(
            vertices=tuple(obj["vertices"]),
            arrows=tuple(Arrow(*a) for a in obj["arrows"]),
            relations=tuple(obj["relations"]),
            loewy_bound=int(obj["loewy_bound"]),
            field=FieldSpec.from_json(obj["field"]),
        )


@dataclass(frozen=True)
class RelTerm:
    coeff: int
    path: tuple[str, ...]  # arrow names, left-to-right composition
    source: str
    target: str


@dataclass(frozen=True)
class RelationExpr:
    text: str
    terms: tuple[RelTerm, ...]


_TOKEN = re.compile(r"(?P<ws>\s+)|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[+\-*])")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise RelationSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if not m.lastgroup == "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    return tokens


def parse_relation(text: str, spec: QuiverSpec) -> RelationExpr:
    """Parse one relation against the grammar

        expr := term (("+"|"-") term)*
        term := [integer "*"]? name ("*" name)*

    where a name is a vertex (denoting its idempotent) or an arrow.
    Terms are resolved into coefficient/path form with composability
    checked left to right; like paths are combined over the integers.
    """
    arrows = {a.name: a for a in spec.arrows}
    vertices = set(spec.vertices)
    tokens = _tokenize(text)
    idx = 0

    def peek(kind):
        return idx < len(tokens) and tokens[idx][0] == kind

    def expect(kind):
        nonlocal idx
        if not peek(kind):
            pos = tokens[idx][2] if idx < len(tokens) else len(text)
            raise RelationSyntaxError(f"expected {kind}", pos)
        tok = tokens[idx]
        idx += 1
        return tok

    def parse_name():
        _, name, pos = expect("name")
        if name in vertices:
            return ("vertex", name, pos)
        if name in arrows:
            return ("arrow", arrows[name], pos)
        raise UnknownNameError(f"unknown name {name!r} (position {pos})")

    def parse_term(sign: int) -> RelTerm:
        nonlocal idx
        coeff = sign
        if peek("int"):
            coeff *= int(expect("int")[1])
            if not (peek("op") and tokens[idx][1] == "*"):
                pos = tokens[idx][2] if idx < len(tokens) else len(text)
                raise RelationSyntaxError("integer coefficient must be followed by '*'", pos)
            idx += 1
        factors = [parse_name()]
        while peek("op") and tokens[idx][1] == "*":
            idx += 1
            factors.append(parse_name())
        source = target = None
        path: list[str] = []
        for kind, val, pos in factors:
            if kind == "vertex":
                s, t = val, val
            else:
                s, t = val.source, val.target
            if source is None:
                source = s
            elif target != s:
                raise NonComposableError(
                    f"path breaks at position {pos}: previous factor ends at "
                    f"{target!r}, next starts at {s!r}"
                )
            target = t
            if kind == "arrow":
                path.append(val.name)
        return RelTerm(coeff, tuple(path), source, target)

    if not tokens:
        raise RelationSyntaxError("empty expression", 0)
    terms = [parse_term(1)]
    while idx < len(tokens):
        kind, val, pos = tokens[idx]
        if kind != "op" or val not in "+-":
            raise RelationSyntaxError("expected '+' or '-'", pos)
        idx += 1
        terms.append(parse_term(1 if val == "+" else -1))

    combined: dict[tuple, int] = {}
    for t in terms:
        key = (t.path, t.source, t.target)
        combined[key] = combined.get(key, 0) + t.coeff
    canon = tuple(
        RelTerm(c, path, src, tgt)
        for (path, src, tgt), c in combined.items()
        if c != 0
    )
    return RelationExpr(text, canon)


# ---------------------------------------------------------------------------
# the algebra table
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class AlgebraTable:
    field: FieldSpec
    basis_names: tuple[str, ...]
    mult: tuple[tuple[tuple, ...], ...]  # mult[i][j] = coordinate vector of b_i * b_j
    unit: tuple
    idempotents: tuple[tuple[str, tuple], ...]  # (vertex label, coordinate vector)
    radical: tuple[tuple, ...]  # vectors spanning the Jacobson radical
    generators: tuple[tuple, ...]  # vectors generating the algebra (with the unit)
    provenance: dict = dc_field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    @property
    def n_vertices(self) -> int:
        return len(self.idempotents)

    def vertex_labels(self) -> list[str]:
        return [label for label, _ in self.idempotents]

    def describe(self) -> str:
        name = self.provenance.get("preset") or self.provenance.get("kind", "table")
        return f"{name}[dim={self.dim},{self.field.describe()}]"

    # -- element arithmetic ------------------------------------------------
    def zero_vec(self) -> list:
        return [self.field.zero()] * self.dim

    def basis_vec(self, i: int) -> list:
        v = self.zero_vec()
        v[i] = self.field.one()
        return v

    def mult_elements(self, u, v) -> list:
        fld = self.field
        acc = self.zero_vec()
        if fld.kind == "prime":
            p = fld.p
            for i, ui in enumerate(u):
                if ui:
                    mi = self.mult[i]
                    for j, vj in enumerate(v):
                        if vj:
                            f = ui * vj % p
                            row = mi[j]
                            for k in range(self.dim):
                                if row[k]:
                                    acc[k] = (acc[k] + f * row[k]) % p
        else:
            for i, ui in enumerate(u):
                if ui:
                    mi = self.mult[i]
                    for j, vj in enumerate(v):
                        if vj:
                            f = ui * vj
                            row = mi[j]
                            for k in range(self.dim):
                                if row[k]:
                                    acc[k] = acc[k] + f * row[k]
        return acc

    def right_mult_matrix(self, v) -> list[list]:
        """Matrix of x -> x*v on row vectors."""
        out = []
        for i in range(self.dim):
            out.append(self.mult_elements(self.basis_vec(i), v))
        return out

    def left_mult_matrix(self, v) -> list[list]:
        """Matrix of x -> v*x on row vectors."""
        out = []
        for i in range(self.dim):
            out.append(self.mult_elements(v, self.basis_vec(i)))
        return out

    def element_from_expr(self, text: str):
        """Evaluate a relation-grammar expression whose names are basis
        elements or idempotent labels, inside this table."""
        tokens = _tokenize(text)
        by_name = {name: self.basis_vec(i) for i, name in enumerate(self.basis_names)}
        for label, vec in self.idempotents:
            by_name.setdefault(label, list(vec))
        idx = 0

        def peek(kind):
            return idx < len(tokens) and tokens[idx][0] == kind

        def term(sign: int):
            nonlocal idx
            coeff = sign
            if peek("int"):
                coeff *= int(tokens[idx][1])
                idx += 1
                if not (peek("op") and tokens[idx][1] == "*"):
                    raise RelationSyntaxError("integer coefficient must be followed by '*'",
                                              tokens[idx - 1][2])
                idx += 1
            vec = None
            while True:
                if not peek("name"):
                    pos = tokens[idx][2] if idx < len(tokens) else len(text)
                    raise RelationSyntaxError("expected a name", pos)
                kind, name, pos = tokens[idx]
                idx += 1
                if name not in by_name:
                    raise UnknownNameError(f"unknown name {name!r} (position {pos})")
                vec = by_name[name] if vec is None else self.mult_elements(vec, by_name[name])
                if peek("op") and tokens[idx][1] == "*":
                    idx += 1
                    continue
                break
            c = self.field.of_int(coeff)
            return [self.field.mul(c, x) for x in vec]

        if not tokens:
            raise RelationSyntaxError("empty expression", 0)
        acc = term(1)
        while idx < len(tokens):
            kind, val, pos = tokens[idx]
            if kind != "op" or val not in "+-":
                raise RelationSyntaxError("expected '+' or '-'", pos)
            idx += 1
            nxt = term(1 if val == "+" else -1)
            acc = [self.field.add(a, b) for a, b in zip(acc, nxt)]
        return acc

    def to_json(self):
        structure = []
        for i in range(self.dim):
            for j in range(self.dim):
                for k, c in enumerate(self.mult[i][j]):
                    if c:
                        structure.append([i, j, k, self.field.fmt(c)])
        fmt_vec = lambda v: [self.field.fmt(x) for x in v]
        return {
            "kind": "table",
            "field": self.field.to_json(),
            "basis": list(self.basis_names),
            "unit": fmt_vec(self.unit),
            "structure": structure,
            "idempotents": [[label, fmt_vec(vec)] for label, vec in self.idempotents],
            "radical": [fmt_vec(v) for v in self.radical],
            "generators": [fmt_vec(v) for v in self.generators],
            "provenance": self.provenance,
        }

    @staticmethod
    def from_json(obj) -> "AlgebraTable":
        fld = FieldSpec.from_json(obj["field"])
        basis = tuple(obj["basis"])
        d = len(basis)
        mult = [[[fld.zero()] * d for _ in range(d)] for _ in range(d)]
        for i, j, k, c in obj["structure"]:
            mult[i][j][k] = fld.parse(c)
        parse_vec = lambda v: tuple(fld.parse(x) for x in v)
        return make_table(
            field=fld,
            basis_names=basis,
            mult=[[tuple(cell) for cell in row] for row in mult],
            unit=parse_vec(obj["unit"]),
            idempotents=[(label, parse_vec(vec)) for label, vec in obj["idempotents"]],
            radical=[parse_vec(v) for v in obj["radical"]],
            generators=[parse_vec(v) for v in obj.get("generators", [])] or None,
            provenance=obj.get("provenance", {}),
        )


def make_table(field, basis_names, mult, unit, idempotents, radical,
               generators=None, provenance=None, verify: bool = True,
               check_associativity: bool = True) -> AlgebraTable:
    mult = tuple(tuple(tuple(cell) for cell in row) for row in mult)
    table = AlgebraTable(
        field=field,
        basis_names=tuple(basis_names),
        mult=mult,
        unit=tuple(unit),
        idempotents=tuple((label, tuple(vec)) for label, vec in idempotents),
        radical=tuple(tuple(v) for v in radical),
        generators=(),
        provenance=provenance or {},
    )
    if generators is None:
        generators = _default_generators(table)
    table.generators = tuple(tuple(v) for v in generators)
    if verify:
        verify_table(table, check_associativity=check_associativity)
    return table


def _default_generators(table: AlgebraTable) -> list[list]:
    """Idempotents plus lifts of a basis of J/J^2: a unital generating set."""
    fld = table.field
    d = table.dim
    j2 = SpanBuilder(fld, d)
    rad = [list(v) for v in table.radical]
    for u in rad:
        for v in rad:
            w = table.mult_elements(u, v)
            if any(w):
                j2.add(w)
    gens = [list(vec) for _, vec in table.idempotents]
    mod = SpanBuilder(fld, d)
    for r in j2.rows:
        mod.add(list(r))
    for v in rad:
        if mod.add(list(v)):
            gens.append(list(v))
    return gens


def verify_table(table: AlgebraTable, check_associativity: bool = True) -> None:
    """Re-check every table axiom: unit, associativity, the idempotent set,
    and that the declared radical is a nilpotent two-sided ideal with a
    split-basic quotient.

    ``check_associativity=False`` is reserved for constructions whose
    associativity is a consequence of verified inputs (tensor products:
    the identity on the tensor factors through the two factor identities).
    """
    d = table.dim
    fld = table.field
    unit = list(table.unit)
    for i in range(d):
        b = table.basis_vec(i)
        if table.mult_elements(unit, b) != b or table.mult_elements(b, unit) != b:
            raise CompileError(f"unit axiom fails on basis element {table.basis_names[i]}")
    if check_associativity:
        _verify_associativity(table)
    # idempotents: orthogonal, idempotent, complete
    acc = table.zero_vec()
    for label, e in table.idempotents:
        e = list(e)
        if table.mult_elements(e, e) != e:
            raise CompileError(f"idempotent {label} is not idempotent")
        acc = [fld.add(a, b) for a, b in zip(acc, e)]
    if acc != unit:
        raise CompileError("idempotents do not sum to the unit")
    for (la, ea), (lb, eb) in [
        (x, y) for x in table.idempotents for y in table.idempotents if x is not y
    ]:
        if any(table.mult_elements(list(ea), list(eb))):
            raise CompileError(f"idempotents {la} and {lb} are not orthogonal")
    # radical: two-sided ideal, nilpotent, complement spanned by idempotents
    rad = SpanBuilder(fld, d)
    for v in table.radical:
        rad.add(list(v))
    rad_rank = rad.rank
    for v in table.radical:
        for j in range(d):
            b = table.basis_vec(j)
            if not rad.contains(table.mult_elements(list(v), b)):
                raise CompileError("declared radical is not a right ideal")
            if not rad.contains(table.mult_elements(b, list(v))):
                raise CompileError("declared radical is not a left ideal")
    if rad_rank + len(table.idempotents) != d:
        raise CompileError(
            f"split-basic certificate fails: dim {d} != radical rank {rad_rank} "
            f"+ {len(table.idempotents)} idempotents"
        )
    full = SpanBuilder(fld, d)
    for v in table.radical:
        full.add(list(v))
    for _, e in table.idempotents:
        if not full.add(list(e)):
            raise CompileError("idempotents are not independent modulo the radical")
    # nilpotency: iterate J -> J*J until zero
    current = [list(v) for v in rad.rows]
    steps = 0
    while current:
        steps += 1
        if steps > d + 1:
            raise CompileError("declared radical is not nilpotent")
        nxt = SpanBuilder(fld, d)
        for u in current:
            for v in rad.rows:
                w = table.mult_elements(u, v)
                if any(w):
                    nxt.add(w)
        current = [list(r) for r in nxt.rows]


def _verify_associativity(table: AlgebraTable) -> None:
    d = table.dim
    if table.field.kind == "prime" and d > 12:
        import numpy as np

        p = table.field.p
        C = np.array(table.mult, dtype=np.int64)  # C[i,j,:] = b_i b_j
        for u in range(d):
            lhs = np.einsum("ij,jvk->ivk", C[:, u, :], C) % p  # (b_i b_u) b_v
            rhs = np.einsum("vw,iwk->ivk", C[u], C) % p  # b_i (b_u b_v)
            if not (lhs == rhs).all():
                raise CompileError(f"associativity fails around basis element {u}")
        return
    for i in range(d):
        bi = table.basis_vec(i)
        for j in range(d):
            bij = list(table.mult[i][j])
            for k in range(d):
                bk = table.basis_vec(k)
                left = table.mult_elements(bij, bk)
                right = table.mult_elements(bi, list(table.mult[j][k]))
                if left != right:
                    raise CompileError(f"associativity fails on triple ({i},{j},{k})")


def loewy_length(table: AlgebraTable) -> int:
    """Least L with J^L = 0."""
    fld = table.field
    rad = [list(v) for v in table.radical]
    current = rad
    L = 0
    while current:
        L += 1
        nxt = SpanBuilder(fld, table.dim)
        for u in current:
            for v in rad:
                w = table.mult_elements(u, v)
                if any(w):
                    nxt.add(w)
        current = [list(r) for r in nxt.rows]
        if L > table.dim:
            raise CompileError("radical is not nilpotent")
    return L + 1 if rad else 1


def is_semisimple(table: AlgebraTable) -> bool:
    return len(table.radical) == 0


# ---------------------------------------------------------------------------
# compilation of bounded quiver algebras
# ---------------------------------------------------------------------------

def compile_quiver(spec: QuiverSpec, size_limit: int = DEFAULT_SIZE_LIMIT) -> AlgebraTable:
    """Compile KQ/I truncated at the certified Loewy bound L.

    The working space is spanned by the paths of length <= L; the image of
    the relation ideal in it is spanned by the truncations of p*r*q over
    all path pairs within the length budget.  Compilation fails unless
    every path of length exactly L lies in that span, which certifies
    J^L = 0 in the quotient; the basis is then the non-pivot paths of
    length < L, and products are path concatenation in normal form.
    """
    fld = spec.field
    L = spec.loewy_bound
    arrows_from: dict[str, list[Arrow]] = {v: [] for v in spec.vertices}
    for a in spec.arrows:
        arrows_from[a.source].append(a)
    arrow_index = {a.name: i for i, a in enumerate(spec.arrows)}
    vertex_index = {v: i for i, v in enumerate(spec.vertices)}

    # paths as (source vertex, arrow-name tuple); deglex column order
    paths: list[tuple[str, tuple[str, ...]]] = [(v, ()) for v in spec.vertices]
    frontier = list(paths)
    for _ in range(L):
        nxt = []
        for src, arr in frontier:
            end = spec.arrows[arrow_index[arr[-1]]].target if arr else src
            for a in arrows_from[end]:
                nxt.append((src, arr + (a.name,)))
        paths.extend(nxt)
        frontier = nxt
        if len(paths) > size_limit:
            raise SizeLimitError(f"more than {size_limit} paths below the Loewy bound")

    def sort_key(p):
        src, arr = p
        if not arr:
            return (0, (vertex_index[src],))
        return (len(arr), tuple(arrow_index[x] for x in arr))

    paths.sort(key=sort_key)
    col_of = {p: i for i, p in enumerate(paths)}
    ncols = len(paths)

    def path_target(p) -> str:
        src, arr = p
        return spec.arrows[arrow_index[arr[-1]]].target if arr else src

    # relation ideal span, truncated at length L
    parsed = [parse_relation(text, spec) for text in spec.relations]
    span = SpanBuilder(fld, ncols)
    for expr in parsed:
        terms = []
        for t in expr.terms:
            c = fld.of_int(t.coeff)
            if c != fld.zero():
                terms.append((c, t))
        if not terms:
            raise CompileError(f"field-degenerate relation (reduces to 0): {expr.text!r}")
        for _, t in terms:
            if len(t.path) == 0:
                raise CompileError(
                    f"relation {expr.text!r} contains a trivial-path term; "
                    "relations must lie in the arrow ideal"
                )
        mindeg = min(len(t.path) for _, t in terms)
        budget = L - mindeg
        for p in paths:
            lp = len(p[1])
            if lp > budget:
                continue
            p_end = path_target(p)
            for q in paths:
                lq = len(q[1])
                if lp + mindeg + lq > L:
                    continue
                row = [fld.zero()] * ncols
                hit = False
                for c, t in terms:
                    if t.source != p_end or t.target != q[0]:
                        continue  # the incomposable summands of p*r*q vanish
                    total = lp + len(t.path) + lq
                    if total > L:
                        continue
                    key = (p[0], p[1] + t.path + q[1])
                    col = col_of[key]
                    row[col] = fld.add(row[col], c)
                    hit = True
                if hit and any(row):
                    span.add(row)

    rref, pivots = span.finish()
    pivset = set(pivots)

    # Loewy certificate: every path of length exactly L lies in the span
    for p in paths:
        if len(p[1]) == L:
            vec = [fld.zero()] * ncols
            vec[col_of[p]] = fld.one()
            if any(reduce_against(fld, rref, pivots, vec)):
                raise LoewyBoundError(
                    f"path {'*'.join(p[1])} of length {L} does not lie in the "
                    "relation ideal; the declared Loewy bound is not certified"
                )

    basis_paths = [p for p in paths if len(p[1]) < L and col_of[p] not in pivset]
    if not basis_paths:
        raise CompileError("empty quotient")
    basis_col = {p: i for i, p in enumerate(basis_paths)}
    d = len(basis_paths)

    def normal_form(col_vec) -> list:
        red = reduce_against(fld, rref, pivots, col_vec)
        out = [fld.zero()] * d
        for p, i in basis_col.items():
            c = red[col_of[p]]
            if c:
                out[i] = c
        return out

    nf_cache: dict[tuple, tuple] = {}

    def concat_nf(p, q):
        if path_target(p) != q[0]:
            return None
        total = len(p[1]) + len(q[1])
        if total > L:
            return None  # lands in J^L = 0
        key = (p[0], p[1] + q[1])
        if key in nf_cache:
            return nf_cache[key]
        vec = [fld.zero()] * ncols
        vec[col_of[key]] = fld.one()
        nf = tuple(normal_form(vec))
        nf_cache[key] = nf
        return nf

    zero_row = tuple(fld.zero() for _ in range(d))
    mult = []
    for p in basis_paths:
        row = []
        for q in basis_paths:
            if path_target(p) != q[0] or len(p[1]) + len(q[1]) > L:
                row.append(zero_row)
            else:
                nf = concat_nf(p, q)
                row.append(nf if nf is not None else zero_row)
        mult.append(tuple(row))

    def name_of(p):
        src, arr = p
        return "*".join(arr) if arr else src

    basis_names = [name_of(p) for p in basis_paths]
    idem = []
    unit = [fld.zero()] * d
    for v in spec.vertices:
        col = basis_col.get((v, ()))
        if col is None:
            raise CompileError("empty quotient: a vertex idempotent died in the ideal")
        e = [fld.zero()] * d
        e[col] = fld.one()
        idem.append((v, e))
        unit[col] = fld.one()
    radical = []
    for i, p in enumerate(basis_paths):
        if len(p[1]) >= 1:
            v = [fld.zero()] * d
            v[i] = fld.one()
            radical.append(v)
    # idempotents plus the image of every arrow generate: each basis path
    # is a product of arrow images (arrows rewritten by relations included)
    generators = [vec for _, vec in idem]
    for a in spec.arrows:
        vec = [fld.zero()] * ncols
        vec[col_of[(a.source, (a.name,))]] = fld.one()
        img = normal_form(vec)
        if any(img):
            generators.append(img)
    return make_table(
        field=fld,
        basis_names=basis_names,
        mult=mult,
        unit=unit,
        idempotents=idem,
        radical=radical,
        generators=generators,
        provenance={"kind": "quiver", "spec": spec.to_json()},
    )


# ---------------------------------------------------------------------------
# presets and the Nakayama bridge
# ---------------------------------------------------------------------------

def nakayama_to_table(A: nak.NakAlgebra, field: FieldSpec,
                      size_limit: int = DEFAULT_SIZE_LIMIT) -> AlgebraTable:
    """The basic algebra with the given Kupisch series, as a monomial
    bounded quiver algebra over ``field``.  Basis size is sum(c_i)."""
    n = A.n
    total = sum(A.kupisch)
    if total > size_limit:
        raise SizeLimitError(f"Nakayama table of dimension {total} exceeds limit {size_limit}")
    vertices = tuple(f"v{i}" for i in range(n))
    if A.is_cycle:
        arrows = tuple(Arrow(f"a{i}", f"v{i}", f"v{(i + 1) % n}") for i in range(n))
    else:
        arrows = tuple(Arrow(f"a{i}", f"v{i}", f"v{i + 1}") for i in range(n - 1))
    relations = []
    for i in range(n):
        ci = A.c(i)
        if A.is_cycle:
            rel = "*".join(f"a{(i + t) % n}" for t in range(ci))
            relations.append(rel)
        else:
            if i + ci <= n - 1:
                rel = "*".join(f"a{i + t}" for t in range(ci))
                relations.append(rel)
    L = max(A.kupisch) + 1
    spec = QuiverSpec(vertices, arrows, tuple(relations), L, field)
    table = compile_quiver(spec, size_limit=size_limit)
    table.provenance.update({"kind": "nakayama", "nakayama": A.to_json()})
    assert table.dim == total, "bridge dimension bookkeeping failed"
    return table


def _group_algebra(names: list[str], mult_map: dict[tuple[str, str], str],
                   identity: str, gens: list[str], field: FieldSpec,
                   preset: str) -> AlgebraTable:
    """Group algebra over F_p with p dividing the group order at every
    nontrivial element order (used for the 2-groups here): the radical is
    the augmentation ideal."""
    d = len(names)
    index = {g: i for i, g in enumerate(names)}
    zero, one = field.zero(), field.one()
    mult = []
    for g in names:
        row = []
        for h in names:
            vec = [zero] * d
            vec[index[mult_map[(g, h)]]] = one
            row.append(tuple(vec))
        mult.append(tuple(row))
    unit = [zero] * d
    unit[index[identity]] = one
    radical = []
    for g in names:
        if g == identity:
            continue
        v = [zero] * d
        v[index[g]] = one
        v[index[identity]] = field.sub(v[index[identity]], one)
        radical.append(v)  # g - 1
    generators = [list(unit)]
    for g in gens:
        v = [zero] * d
        v[index[g]] = one
        v[index[identity]] = field.sub(v[index[identity]], one)
        generators.append(v)
    return make_table(
        field=field,
        basis_names=names,
        mult=mult,
        unit=unit,
        idempotents=[("v0", unit)],
        radical=radical,
        generators=generators,
        provenance={"kind": "preset", "preset": preset},
    )


def _dihedral8_table(field: FieldSpec) -> AlgebraTable:
    # <r, s | r^4 = s^2 = 1, s r s = r^-1>
    names = [f"r{a}s{b}" for b in (0, 1) for a in range(4)]

    def mul(x, y):
        a1, b1 = int(x[1]), int(x[3])
        a2, b2 = int(y[1]), int(y[3])
        a = (a1 + (a2 if b1 == 0 else -a2)) % 4
        b = (b1 + b2) % 2
        return f"r{a}s{b}"

    mult_map = {(x, y): mul(x, y) for x in names for y in names}
    return _group_algebra(names, mult_map, "r0s0", ["r1s0", "r0s1"], field, "dihedral8-f2")


def _quaternion8_table(field: FieldSpec) -> AlgebraTable:
    # {±1, ±i, ±j, ±k} with i^2 = j^2 = k^2 = ijk = -1
    units = ["1", "i", "j", "k"]
    names = [s + u for s in ("", "z") for u in units]  # z denotes the central -1

    base = {
        ("1", "1"): (0, "1"), ("1", "i"): (0, "i"), ("1", "j"): (0, "j"), ("1", "k"): (0, "k"),
        ("i", "1"): (0, "i"), ("i", "i"): (1, "1"), ("i", "j"): (0, "k"), ("i", "k"): (1, "j"),
        ("j", "1"): (0, "j"), ("j", "i"): (1, "k"), ("j", "j"): (1, "1"), ("j", "k"): (0, "i"),
        ("k", "1"): (0, "k"), ("k", "i"): (0, "j"), ("k", "j"): (1, "i"), ("k", "k"): (1, "1"),
    }

    def mul(x, y):
        s1, u1 = (1, x[1:]) if x.startswith("z") else (0, x)
        s2, u2 = (1, y[1:]) if y.startswith("z") else (0, y)
        s3, u = base[(u1, u2)]
        s = (s1 + s2 + s3) % 2
        return ("z" if s else "") + u

    mult_map = {(x, y): mul(x, y) for x in names for y in names}
    return _group_algebra(names, mult_map, "1", ["i", "j"], field, "quaternion8-f2")


_TRUNCPOLY = re.compile(r"truncated-poly\((\d+),(F(\d+)|Q)\)$")


def preset(name: str, size_limit: int = DEFAULT_SIZE_LIMIT) -> AlgebraTable:
    """Fixed example algebras addressable by name.

    hopf-a5-f2        the 8-dimensional local algebra K<a,b>/(a^2, b^2-aba), char 2
    dihedral8-f2      group algebra of the order-8 dihedral group over F_2
    quaternion8-f2    group algebra of the order-8 quaternion group over F_2
    preproj-a2        the selfinjective Nakayama algebra with Kupisch series (2,2) over F_2
    truncated-poly(n,F)   k[x]/(x^n) over F in {F2, F3, ..., Q}
    """
    f2 = FieldSpec.prime(2)
    if name == "hopf-a5-f2":
        spec = QuiverSpec(
            vertices=("v0",),
            arrows=(Arrow("a", "v0", "v0"), Arrow("b", "v0", "v0")),
            relations=("a*a", "b*b - a*b*a"),
            loewy_bound=5,
            field=f2,
        )
        table = compile_quiver(spec, size_limit)
        table.provenance.update({"kind": "preset", "preset": name})
        return table
    if name == "dihedral8-f2":
        return _dihedral8_table(f2)
    if name == "quaternion8-f2":
        return _quaternion8_table(f2)
    if name == "preproj-a2":
        table = nakayama_to_table(nak.validate(nak.CYCLE, (2, 2)), f2, size_limit)
        table.provenance.update({"kind": "preset", "preset": name})
        return table
    m = _TRUNCPOLY.match(name)
    if m:
        npow = int(m.group(1))
        if npow < 2:
            raise CompileError("truncated-poly needs exponent >= 2")
        fld = FieldSpec.rational() if m.group(2) == "Q" else FieldSpec.prime(int(m.group(3)))
        table = nakayama_to_table(nak.validate(nak.CYCLE, (npow,)), fld, size_limit)
        table.provenance.update({"kind": "preset", "preset": name})
        return table
    raise KeyError(f"unknown preset {name!r}")


# ---------------------------------------------------------------------------
# derived constructions
# ---------------------------------------------------------------------------

def opposite(table: AlgebraTable) -> AlgebraTable:
    """Same space, reversed multiplication.  Involutive on the nose."""
    d = table.dim
    mult = [[table.mult[j][i] for j in range(d)] for i in range(d)]
    return make_table(
        field=table.field,
        basis_names=table.basis_names,
        mult=mult,
        unit=table.unit,
        idempotents=table.idempotents,
        radical=table.radical,
        generators=table.generators,
        provenance={"kind": "opposite", "of": table.provenance},
        verify=False,  # axioms are mirror images of the verified ones
    )


def tensor_algebra(a: AlgebraTable, b: AlgebraTable,
                   size_limit: int = DEFAULT_SIZE_LIMIT) -> AlgebraTable:
    if a.field != b.field:
        raise ValueError("tensor factors must share the field")
    d = a.dim * b.dim
    if d > size_limit:
        raise SizeLimitError(f"tensor algebra of dimension {d} exceeds limit {size_limit}")
    fld = a.field
    zero = fld.zero()

    def kron(u, v):
        out = [zero] * d
        for i, ui in enumerate(u):
            if ui:
                base = i * b.dim
                for j, vj in enumerate(v):
                    if vj:
                        out[base + j] = fld.mul(ui, vj)
        return out

    mult = []
    for i1 in range(a.dim):
        for j1 in range(b.dim):
            row = []
            for i2 in range(a.dim):
                for j2 in range(b.dim):
                    row.append(tuple(kron(a.mult[i1][i2], b.mult[j1][j2])))
            mult.append(tuple(row))
    basis_names = tuple(
        f"{na}(x){nb}" for na in a.basis_names for nb in b.basis_names
    )
    unit = kron(a.unit, b.unit)
    idem = [
        (f"{la}|{lb}", kron(ea, eb))
        for la, ea in a.idempotents
        for lb, eb in b.idempotents
    ]
    idem_a = [list(e) for _, e in a.idempotents]
    radical = []
    for r in a.radical:
        for j in range(b.dim):
            radical.append(kron(r, b.basis_vec(j)))
    span_e = SpanBuilder(fld, a.dim)
    for e in idem_a:
        span_e.add(e)
    for e in span_e.rows:
        for r in b.radical:
            radical.append(kron(e, r))
    generators = [kron(g, b.unit) for g in a.generators]
    generators += [kron(a.unit, g) for g in b.generators]
    # associativity of the tensor product is inherited from the verified
    # factors: the identity splits into the two factor identities
    return make_table(
        field=fld,
        basis_names=basis_names,
        mult=mult,
        unit=unit,
        idempotents=idem,
        radical=radical,
        generators=generators,
        provenance={"kind": "tensor"},
        check_associativity=False,
    )


def enveloping(table: AlgebraTable, size_limit: int = DEFAULT_SIZE_LIMIT):
    """A (x) A^op, together with the regular bimodule as a right module
    over it: (u (x) v) acts by m -> v*m*u.

    Returns (enveloping table, Representation of the regular bimodule).
    """

    from .homology import Representation  # local import to avoid a cycle

    env = tensor_algebra(table, opposite(table), size_limit=size_limit)
    env.provenance.update({"kind": "enveloping"})
    d = table.dim
    actions = []
    for i in range(d):
        R_u = table.right_mult_matrix(table.basis_vec(i))
        for j in range(d):
            L_v = table.left_mult_matrix(table.basis_vec(j))
            actions.append(tuple(tuple(r) for r in matmul_rows(table.field, L_v, R_u)))
    rep = Representation(env, d, tuple(actions), name="regular-bimodule")
    return env, rep


def corner_algebra(table: AlgebraTable, idem_labels: list[str],
                   size_limit: int = DEFAULT_SIZE_LIMIT):
    """e*A*e for e the sum of the named idempotents.

    Returns (corner table, basis rows of eAe inside A).
    """
    fld = table.field
    d = table.dim
    chosen = [(l, list(v)) for l, v in table.idempotents if l in set(idem_labels)]
    if len(chosen) != len(idem_labels):
        raise KeyError("unknown idempotent label")
    e = table.zero_vec()
    for _, v in chosen:
        e = [fld.add(a, b) for a, b in zip(e, v)]
    span = SpanBuilder(fld, d)
    for i in range(d):
        ebe = table.mult_elements(e, table.mult_elements(table.basis_vec(i), e))
        if any(ebe):
            span.add(ebe)
    rows, pivots = span.finish()
    dim_c = len(rows)
    if dim_c > size_limit:
        raise SizeLimitError("corner algebra too large")

    def coords(vec):
        c = coords_against(fld, rows, pivots, vec)
        if c is None:
            raise CompileError("corner multiplication left the corner span")
        return c

    mult = []
    for u in rows:
        r = []
        for v in rows:
            r.append(tuple(coords(table.mult_elements(list(u), list(v)))))
        mult.append(tuple(r))
    unit = coords(e)
    idem = [(l, tuple(coords(list(v)))) for l, v in chosen]
    rad = SpanBuilder(fld, d)
    for v in table.radical:
        eve = table.mult_elements(e, table.mult_elements(list(v), e))
        if any(eve):
            rad.add(eve)
    radical = [coords(list(v)) for v in rad.rows]
    names = tuple(f"c{i}" for i in range(dim_c))
    corner = make_table(
        field=fld,
        basis_names=names,
        mult=mult,
        unit=unit,
        idempotents=idem,
        radical=radical,
        generators=None,
        provenance={"kind": "corner", "of": table.provenance, "idem": list(idem_labels)},
    )
    return corner, [list(r) for r in rows]


# ---------------------------------------------------------------------------
# structural predicates
# ---------------------------------------------------------------------------

def is_local(table: AlgebraTable) -> bool:
    return len(table.idempotents) == 1


def symmetric_functional_space(table: AlgebraTable) -> list[list]:
    """Basis of the functionals lam with lam(uv) = lam(vu) for all u, v."""


    d = table.dim
    fld = table.field
    rows = []
    for i in range(d):
        for j in range(i + 1, d):
            row = [fld.sub(table.mult[i][j][k], table.mult[j][i][k]) for k in range(d)]
            if any(row):
                rows.append(row)
    if not rows:
        return [list(table.basis_vec(i)) for i in range(d)]
    return kernel_rows(fld, rows, d)


def _gram(table: AlgebraTable, lam: list) -> list[list]:
    d = table.dim
    fld = table.field
    out = []
    for i in range(d):
        row = []
        for j in range(d):
            cell = fld.zero()
            m = table.mult[i][j]
            for k in range(d):
                if m[k] and lam[k]:
                    cell = fld.add(cell, fld.mul(m[k], lam[k]))
            row.append(cell)
        out.append(row)
    return out


def _coeff_tuples(field: FieldSpec, h: int, budget: int, degree_bound: int | None = None):
    """Deterministic enumeration of coefficient tuples, cheap ones first.

    The scan is *complete* (second return value) in two situations, and the
    caller may then read exhaustion as a definitive "no witness":

    * over F_p when p^h fits the budget: every point of the search space
      is visited;
    * over Q when the witness condition is the non-vanishing of a
      polynomial of total degree <= ``degree_bound`` in the coefficients
      (a determinant of a matrix depending linearly on them): such a
      polynomial vanishing on the whole grid {0..degree_bound}^h is
      identically zero, so no witness exists over any extension either.
    """
    if field.kind == "prime":
        p = field.p
        total = p ** h
        if total <= budget:
            def gen():
                for tup in iter_product(range(p), repeat=h):
                    if any(tup):
                        yield [field.of_int(x) for x in tup]
            return gen(), True

        def gen_partial():
            count = 0
            for tup in iter_product(range(p), repeat=h):
                if any(tup):
                    yield [field.of_int(x) for x in tup]
                    count += 1
                    if count >= budget:
                        return
        return gen_partial(), False

    if degree_bound is not None and (degree_bound + 1) ** h <= budget:
        def gen_grid():
            for tup in iter_product(range(degree_bound + 1), repeat=h):
                if any(tup):
                    yield [field.of_int(x) for x in tup]
        return gen_grid(), True

    def gen_q():
        count = 0
        for radius in (1, 2, 3):
            for tup in iter_product(range(-radius, radius + 1), repeat=h):
                if any(tup) and max(abs(x) for x in tup) == radius:
                    yield [field.of_int(x) for x in tup]
                    count += 1
                    if count >= budget:
                        return
    return gen_q(), False


def is_symmetric(table: AlgebraTable, budget: int = DEFAULT_SEARCH_BUDGET):
    """True / False / None (undetermined).

    Searches for a symmetrising functional whose induced bilinear form
    b(x, y) = lam(xy) is nondegenerate.  Over F_p the scan is exhaustive
    whenever p^dim(space) fits the budget, making False definitive; over Q
    a found witness gives True and exhaustion gives None.
    """


    lams = symmetric_functional_space(table)
    h = len(lams)
    if h == 0:
        return False
    fld = table.field
    # the Gram determinant has total degree <= dim in the coefficients
    tuples, complete = _coeff_tuples(fld, h, budget, degree_bound=table.dim)
    for coeffs in tuples:
        lam = [fld.zero()] * table.dim
        for c, base in zip(coeffs, lams):
            if c:
                for k in range(table.dim):
                    lam[k] = fld.add(lam[k], fld.mul(c, base[k]))
        if rank_rows(fld, _gram(table, lam)) == table.dim:
            return True
    return False if complete else None


def is_selfinjective(table: AlgebraTable, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    """Every dual left projective is isomorphic to some right projective."""
    from . import homology as hml

    op = opposite(table)
    projs = [hml.projective(table, i) for i in range(table.n_vertices)]
    for i in range(table.n_vertices):
        inj = hml.dual_representation(hml.projective(op, i), table)
        found = False
        for P in projs:
            if P.dim != inj.dim:
                continue
            verdict = hml.modules_isomorphic(inj, P, budget=budget)
            if verdict is True:
                found = True
                break
            if verdict is None:
                raise hml.UndeterminedError(
                    "module isomorphism search exhausted while testing selfinjectivity"
                )
        if not found:
            return False
    return True


# ---------------------------------------------------------------------------
# algebra description files
# ---------------------------------------------------------------------------

def load_algebra(path_or_obj):
    """Load an algebra description (kind quiver | table | nakayama).

    Quiver descriptions are compiled; the return value is an AlgebraTable
    or a NakAlgebra depending on the kind.
    """
    if isinstance(path_or_obj, (str,)):
        with open(path_or_obj, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    else:
        obj = path_or_obj
    kind = obj.get("kind")
    if kind == "nakayama":
        return nak.validate(obj["orientation"], obj["kupisch"])
    if kind == "quiver":
        return compile_quiver(QuiverSpec.from_json(obj))
    if kind == "table":
        return AlgebraTable.from_json(obj)
    raise ValueError(f"unknown algebra kind {kind!r}")


def save_algebra(obj, path: str) -> None:
    if isinstance(obj, nak.NakAlgebra):
        payload = obj.to_json()
    elif isinstance(obj, QuiverSpec):
        payload = obj.to_json()
    elif isinstance(obj, AlgebraTable):
        payload = obj.to_json()
    else:
        raise TypeError(f"cannot serialise {type(obj)!r}")
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
