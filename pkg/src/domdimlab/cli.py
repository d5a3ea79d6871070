"""Command-line interface.

Three command groups: ``nakayama`` (combinatorial engine, Kupisch series
input), ``quiver`` (table engine, presets or algebra description files),
and ``verify`` (batch suites).  Reports are deterministic JSON: byte
identical across runs with identical inputs and cutoffs.  Wall time is
printed to stderr only, so it never perturbs the report bytes.

Exit codes: 0 success, 1 falsification or assertion failure, 2 usage
error, 3 undetermined predicate.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
import time

import click

from . import __version__
from . import homology as hml
from . import nakayama as nak
from . import quivalg as qa
from . import rigidity as rg
from .exactmath import FieldSpec
from .suites import SUITES

DEFAULT_CUTOFF = 64


def _cutoff_default() -> int:
    env = os.environ.get("DOMDIMLAB_CUTOFF")
    if env:
        try:
            return int(env)
        except ValueError:
            raise click.UsageError(f"DOMDIMLAB_CUTOFF is not an integer: {env!r}")
    return DEFAULT_CUTOFF


def _digest(payload) -> str:
    return hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()[:16]


def _emit(command: str, inputs, items, failures, report_path=None, fmt="json",
          started=None):
    doc = {
        "tool": "domdimlab",
        "version": __version__,
        "command": command,
        "input_digest": _digest(inputs),
        "items": items,
        "failures": failures,
    }
    if fmt == "csv":
        lines = ["name,pass"]
        for it in items:
            lines.append(f"{it.get('name', '')},{str(it.get('pass', '')).lower()}")
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    click.echo(text, nl=False)
    if report_path:
        with open(report_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    if started is not None:
        click.echo(f"[{command}] wall time {time.perf_counter() - started:.2f}s",
                   err=True)
    if failures:
        sys.exit(1)


def _algebra_from_flags(cycle: bool, line: bool, kupisch: str) -> nak.NakAlgebra:
    if cycle == line:
        raise click.UsageError("exactly one of --cycle / --line is required")
    if not kupisch:
        raise click.UsageError("--kupisch is required")
    try:
        return nak.validate(nak.CYCLE if cycle else nak.LINE, nak.parse_kupisch(kupisch))
    except nak.KupischError as exc:
        raise click.UsageError(str(exc))


def _parse_nak_modules(A: nak.NakAlgebra, spec: str) -> list[nak.NakModule]:
    """Module spec grammar: simple[:v] | projective:v | dual-regular |
    omega:T:SPEC | i,k"""
    try:
        if spec == "dual-regular":
            return list(nak.dual_regular(A))
        if spec.startswith("omega:"):
            _, t_str, inner = spec.split(":", 2)
            t = int(t_str)
            out = []
            for M in _parse_nak_modules(A, inner):
                om = nak.syzygy_power(A, M, t)
                if om is not None:
                    out.append(om)
            return out
        if spec.startswith("simple"):
            v = int(spec.split(":", 1)[1]) if ":" in spec else 0
            return [nak.simple(A, v)]
        if spec.startswith("projective:"):
            v = int(spec.split(":", 1)[1])
            return [nak.projective(A, v)]
        i_str, k_str = spec.split(",")
        return [nak.module(A, int(i_str), int(k_str))]
    except (ValueError, nak.NakInputError) as exc:
        raise click.UsageError(f"bad module spec {spec!r}: {exc}")


def _load_table(preset: str | None, algebra: str | None) -> qa.AlgebraTable:
    if (preset is None) == (algebra is None):
        raise click.UsageError("exactly one of --preset / --algebra is required")
    try:
        if preset is not None:
            return qa.preset(preset)
        loaded = qa.load_algebra(algebra)
    except KeyError as exc:
        raise click.UsageError(str(exc))
    except (qa.CompileError, ValueError) as exc:
        raise click.UsageError(f"cannot load algebra: {exc}")
    if isinstance(loaded, nak.NakAlgebra):
        return qa.nakayama_to_table(loaded, FieldSpec.prime(2))
    return loaded


def _parse_table_module(table: qa.AlgebraTable, spec: str) -> hml.Representation:
    try:
        if spec.startswith("simple"):
            v = int(spec.split(":", 1)[1]) if ":" in spec else 0
            return hml.simple(table, v)
        if spec.startswith("projective"):
            v = int(spec.split(":", 1)[1]) if ":" in spec else 0
            return hml.projective(table, v)
    except (ValueError, IndexError) as exc:
        raise click.UsageError(f"bad module spec {spec!r}: {exc}")
    raise click.UsageError(f"bad module spec {spec!r} (want simple[:v] or projective:v)")


_shared = [
    click.option("--report", type=click.Path(), default=None, help="also write the JSON report here"),
    click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json"),
]


def shared_options(fn):
    for opt in reversed(_shared):
        fn = opt(fn)
    return fn


@click.group()
@click.version_option(__version__)
def main():
    """Exact homological invariants of finite-dimensional algebras."""


# ---------------------------------------------------------------------------
# nakayama group
# ---------------------------------------------------------------------------

@main.group()
def nakayama():
    """Combinatorial engine for connected Nakayama algebras."""


def _nak_flags(fn):
    fn = click.option("--kupisch", default="", help="comma-separated Kupisch series")(fn)
    fn = click.option("--line", is_flag=True, help="line orientation")(fn)
    fn = click.option("--cycle", is_flag=True, help="cycle orientation")(fn)
    return fn


@nakayama.command()
@_nak_flags
@shared_options
def info(cycle, line, kupisch, report, fmt):
    """Basic invariants of the algebra."""
    started = time.perf_counter()
    A = _algebra_from_flags(cycle, line, kupisch)
    item = {
        "name": "info",
        "pass": True,
        "orientation": A.orientation,
        "kupisch": list(A.kupisch),
        "simples": A.n,
        "dimension": sum(A.kupisch),
        "indecomposables": len(nak.indecomposables(A)),
        "selfinjective": nak.is_selfinjective(A),
        "symmetric": nak.is_symmetric(A),
        "injective_dimensions": [nak.injective_dim_at(A, a) for a in range(A.n)],
    }
    _emit("nakayama info", item, [item], [], report, fmt, started)


@nakayama.command()
@_nak_flags
@click.option("--module", "modules", multiple=True, required=True,
              help="one or two module specs; Ext is from the first to the last")
@click.option("--degree", type=int, default=4, show_default=True)
@shared_options
def ext(cycle, line, kupisch, modules, degree, report, fmt):
    """Ext dimensions between (sums of) indecomposables."""
    started = time.perf_counter()
    A = _algebra_from_flags(cycle, line, kupisch)
    if degree < 1:
        raise click.UsageError("--degree must be >= 1")
    sources = _parse_nak_modules(A, modules[0])
    targets = _parse_nak_modules(A, modules[-1])
    items = []
    for t in range(1, degree + 1):
        total = sum(nak.dim_ext(A, t, M, N) for M in sources for N in targets)
        items.append({"name": f"ext^{t}", "pass": True, "degree": t, "dim": total})
    _emit("nakayama ext",
          {"algebra": A.to_json(), "modules": list(modules), "degree": degree},
          items, [], report, fmt, started)


@nakayama.command()
@_nak_flags
@click.option("--cutoff", type=int, default=None,
              help="search cutoff for bounded invariants (default 64; env DOMDIMLAB_CUTOFF)")
@shared_options
def domdim(cycle, line, kupisch, cutoff, report, fmt):
    """Dominant dimension (bounded search)."""
    started = time.perf_counter()
    A = _algebra_from_flags(cycle, line, kupisch)
    cutoff = cutoff or _cutoff_default()
    value = nak.domdim(A, cutoff)
    item = {"name": "domdim", "pass": True, "cutoff": cutoff,
            "domdim": value.to_json()}
    _emit("nakayama domdim", {"algebra": A.to_json(), "cutoff": cutoff},
          [item], [], report, fmt, started)


@nakayama.command()
@_nak_flags
@click.option("--k", "kdeg", type=int, required=True)
@click.option("--module", "modules", multiple=True, required=True)
@shared_options
def rigid(cycle, line, kupisch, kdeg, modules, report, fmt):
    """k-rigidity of a direct sum of indecomposables."""
    started = time.perf_counter()
    A = _algebra_from_flags(cycle, line, kupisch)
    summands: list[nak.NakModule] = []
    for spec in modules:
        summands.extend(_parse_nak_modules(A, spec))
    try:
        verdict = rg.is_k_rigid(A, summands, kdeg)
    except nak.NakInputError as exc:
        raise click.UsageError(str(exc))
    item = {"name": "rigid", "pass": True, "k": kdeg, "rigid": verdict,
            "modules": [[m.vertex, m.length] for m in sorted(set(summands))]}
    _emit("nakayama rigid",
          {"algebra": A.to_json(), "k": kdeg, "modules": list(modules)},
          [item], [], report, fmt, started)


@nakayama.command()
@_nak_flags
@click.option("--k", "kdeg", type=int, required=True)
@shared_options
def ok(cycle, line, kupisch, kdeg, report, fmt):
    """Exact maximal size of a k-rigid module (clique search)."""
    started = time.perf_counter()
    A = _algebra_from_flags(cycle, line, kupisch)
    try:
        rep = rg.o_k(A, kdeg)
    except nak.NakInputError as exc:
        raise click.UsageError(str(exc))
    item = {"name": f"o_{kdeg}", "pass": True}
    item.update(rep.to_json())
    _emit("nakayama ok", {"algebra": A.to_json(), "k": kdeg},
          [item], [], report, fmt, started)


@nakayama.command("verify-main")
@_nak_flags
@click.option("--k", "kdeg", type=int, required=True)
@click.option("--cutoff", type=int, default=None,
              help="search cutoff for bounded invariants (default 64; env DOMDIMLAB_CUTOFF)")
@click.option("--assume-gendo", is_flag=True,
              help="record the gendo-symmetric hypothesis as caller-asserted "
                   "instead of running the bimodule test")
@shared_options
def verify_main(cycle, line, kupisch, kdeg, cutoff, assume_gendo, report, fmt):
    """Check the dominant-dimension inequality on one instance."""
    started = time.perf_counter()
    A = _algebra_from_flags(cycle, line, kupisch)
    cutoff = cutoff or _cutoff_default()
    try:
        rep = rg.verify_main_inequality(A, kdeg, cutoff,
                                        gendo="assert" if assume_gendo else "bimodule")
    except (nak.NakInputError, hml.PreconditionError) as exc:
        raise click.UsageError(str(exc))
    except hml.UndeterminedError as exc:
        click.echo(str(exc), err=True)
        sys.exit(3)
    item = {"name": "main-inequality", "pass": bool(rep.verdict)}
    item.update(rep.to_json())
    failures = [] if rep.verdict else ["main-inequality"]
    _emit("nakayama verify-main",
          {"algebra": A.to_json(), "k": kdeg, "cutoff": cutoff},
          [item], failures, report, fmt, started)


# ---------------------------------------------------------------------------
# quiver group
# ---------------------------------------------------------------------------

@main.group()
def quiver():
    """Linear-algebra engine for algebras given by tables, quivers or presets."""


@quiver.command("compile")
@click.option("--algebra", type=click.Path(exists=True), default=None)
@click.option("--preset", default=None)
@shared_options
def compile_cmd(algebra, preset, report, fmt):
    """Compile / load an algebra and print its headline data."""
    started = time.perf_counter()
    table = _load_table(preset, algebra)
    item = {
        "name": "compile",
        "pass": True,
        "dimension": table.dim,
        "field": table.field.describe(),
        "basis": list(table.basis_names),
        "vertices": table.vertex_labels(),
        "radical_dim": len(table.radical),
        "loewy_length": qa.loewy_length(table),
    }
    _emit("quiver compile", {"preset": preset, "algebra": algebra},
          [item], [], report, fmt, started)


@quiver.command()
@click.option("--algebra", type=click.Path(exists=True), default=None)
@click.option("--preset", default=None)
@click.option("--module", "module_spec", default="simple")
@click.option("--length", type=int, default=4, show_default=True)
@shared_options
def resolve(algebra, preset, module_spec, length, report, fmt):
    """Syzygy dimensions along the minimal projective resolution."""
    started = time.perf_counter()
    table = _load_table(preset, algebra)
    M = _parse_table_module(table, module_spec)
    dims = hml.syzygy_dims(M, length)
    item = {"name": "resolve", "pass": True, "module": M.name,
            "module_dim": M.dim, "syzygy_dims": dims}
    _emit("quiver resolve",
          {"preset": preset, "algebra": algebra, "module": module_spec,
           "length": length},
          [item], [], report, fmt, started)


@quiver.command("ext")
@click.option("--algebra", type=click.Path(exists=True), default=None)
@click.option("--preset", default=None)
@click.option("--module", "modules", multiple=True, required=True)
@click.option("--degree", type=int, default=4, show_default=True)
@shared_options
def quiver_ext(algebra, preset, modules, degree, report, fmt):
    """Ext dimensions between two modules."""
    started = time.perf_counter()
    table = _load_table(preset, algebra)
    M = _parse_table_module(table, modules[0])
    N = _parse_table_module(table, modules[-1])
    ext = hml.ext_dims(M, N, degree, include_hom=True)
    item = {"name": "ext", "pass": True, "hom": ext.hom,
            "degrees": list(ext.degrees)}
    _emit("quiver ext",
          {"preset": preset, "algebra": algebra, "modules": list(modules),
           "degree": degree},
          [item], [], report, fmt, started)


@quiver.command("domdim")
@click.option("--algebra", type=click.Path(exists=True), default=None)
@click.option("--preset", default=None)
@click.option("--cutoff", type=int, default=None,
              help="search cutoff for bounded invariants (default 64; env DOMDIMLAB_CUTOFF)")
@shared_options
def quiver_domdim(algebra, preset, cutoff, report, fmt):
    """Dominant dimension of a table algebra (bounded search)."""
    started = time.perf_counter()
    table = _load_table(preset, algebra)
    cutoff = cutoff or _cutoff_default()
    value = hml.domdim(table, cutoff)
    item = {"name": "domdim", "pass": True, "cutoff": cutoff,
            "domdim": value.to_json()}
    _emit("quiver domdim", {"preset": preset, "algebra": algebra, "cutoff": cutoff},
          [item], [], report, fmt, started)


@quiver.command()
@click.option("--algebra", type=click.Path(exists=True), default=None)
@click.option("--preset", default=None)
@click.option("--generators", "gen_exprs", multiple=True, required=True,
              help="ideal generators as relation-grammar expressions over basis names")
@shared_options
def ideal(algebra, preset, gen_exprs, report, fmt):
    """Two-sided ideal rigidity report: Hom(X, A/X) and Ext^1(X, X)."""
    started = time.perf_counter()
    table = _load_table(preset, algebra)
    try:
        vectors = [table.element_from_expr(e) for e in gen_exprs]
    except (qa.RelationSyntaxError, qa.UnknownNameError) as exc:
        raise click.UsageError(str(exc))
    X = hml.ideal_module(table, vectors)
    try:
        rep = hml.check_ideal_rigidity(table, X, strict=False)
    except (hml.PreconditionError, hml.SemisimpleInputError) as exc:
        raise click.UsageError(str(exc))
    except hml.UndeterminedError as exc:
        click.echo(str(exc), err=True)
        sys.exit(3)
    item = {"name": "ideal-rigidity", "pass": rep.holds}
    item.update(rep.to_json())
    failures = [] if rep.holds else ["ideal-rigidity"]
    _emit("quiver ideal",
          {"preset": preset, "algebra": algebra, "generators": list(gen_exprs)},
          [item], failures, report, fmt, started)


@quiver.command()
@click.option("--algebra", type=click.Path(exists=True), default=None)
@click.option("--preset", default=None)
@click.option("--cutoff", type=int, default=None,
              help="search cutoff for bounded invariants (default 64; env DOMDIMLAB_CUTOFF)")
@shared_options
def predicates(algebra, preset, cutoff, report, fmt):
    """Structural predicates: local, selfinjective, symmetric, gendo-symmetric."""
    started = time.perf_counter()
    table = _load_table(preset, algebra)
    cutoff = cutoff or _cutoff_default()
    sym = qa.is_symmetric(table)
    try:
        selfinj = qa.is_selfinjective(table)
    except hml.UndeterminedError:
        selfinj = None
    try:
        gendo = hml.is_gendo_symmetric(table, max(cutoff, 2))
    except hml.UndeterminedError:
        gendo = None
    undetermined = sym is None or gendo is None or selfinj is None
    item = {
        "name": "predicates",
        "pass": True,
        "local": qa.is_local(table),
        "selfinjective": "undetermined" if selfinj is None else selfinj,
        "symmetric": "undetermined" if sym is None else sym,
        "gendo_symmetric": "undetermined" if gendo is None else gendo,
    }
    _emit("quiver predicates",
          {"preset": preset, "algebra": algebra, "cutoff": cutoff},
          [item], [], report, fmt, started)
    if undetermined:
        sys.exit(3)


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

@main.command()
@click.option("--suite", required=True)
@click.option("--jobs", type=int, default=1, show_default=True)
@shared_options
def verify(suite, jobs, report, fmt):
    """Run a batch verification suite; exit 0 iff every item passes."""
    started = time.perf_counter()
    runner = SUITES.get(suite)
    if runner is None:
        raise click.UsageError(
            f"unknown suite {suite!r}; available: {', '.join(sorted(SUITES))}")
    items, failures = runner(jobs=jobs)
    _emit(f"verify {suite}", {"suite": suite}, items, failures, report, fmt, started)
