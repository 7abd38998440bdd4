"""Command line front end.

Exit codes: 0 success, 1 mathematical failure, 2 usage or parse failure.
"""

from __future__ import annotations

import sys

import click
import numpy as np

from .datum import (
    DoiHopfDatum,
    check_morphism,
    morphism_failures,
    validate_comodule_algebra,
    validate_datum,
    validate_module,
    validate_module_coalgebra,
)
from .gallery import drinfeld_double, heisenberg_double, koppinen_double
from .hopf import (
    Failure,
    ValidationError,
    ValidationReport,
    validate_algebra,
    validate_coalgebra,
    validate_hopf,
)
from .integrals import classical_integrals, compute_space, failed_conditions, is_normalized, space_definition
from .io import WorkspaceError, dump_workspace, emit_algebra, emit_hopf, load_workspace, max_dim
from .linalg import FieldError
from .maschke import Separable, lift_retraction, splits_unit

OK, MATH, USAGE = 0, 1, 2

SPACES = ("v1", "v2", "v3", "v4", "v5", "w1", "classical")


def _fmt(field, x) -> str:
    return field.format(x)


def _axes(d: DoiHopfDatum, tag: str) -> tuple[list, str]:
    C, A = d.C.labels, d.A.labels
    return {
        "V1": ([C, A, C, C, A], "nu({2}⊗{3}⊗{4}) on {0}⊗{1}"),
        "V2": ([C, A, C, C], "lambda({2}⊗{3}) on {0}⊗{1}"),
        "V3": ([A, C, C], "theta({1}⊗{2}) on {0}"),
        "V4": ([C, A, C], "gamma({2})({0}) on {1}"),
        "V5": ([C, A, C, A], "psi({2}⊗{3})({0}) on {1}"),
        "W1": ([C, A], "{0}⊗{1}"),
    }[tag]


def _describe_vector(field, T: np.ndarray, axes, template) -> list[str]:
    out = []
    for idx in np.ndindex(T.shape):
        x = T[idx]
        if x != 0:
            out.append(f"    {template.format(*(axes[i][j] for i, j in enumerate(idx)))}: {_fmt(field, x)}")
    return out or ["    0"]


def _validate_object(ws, name: str) -> ValidationReport:
    kind = ws.kind(name)
    obj = ws.get(name)
    if kind == "algebra":
        return validate_algebra(obj)
    if kind == "coalgebra":
        return validate_coalgebra(obj)
    if kind == "hopf":
        return validate_hopf(obj)
    if kind == "comodule-algebra":
        return validate_comodule_algebra(obj)
    if kind == "module-coalgebra":
        return validate_module_coalgebra(obj)
    if kind == "datum":
        return validate_datum(obj)
    if kind == "module":
        rep = validate_datum(obj.datum)
        rep.extend(validate_module(obj))
        return rep
    if kind == "map":
        raw = ws.raw[name]
        src, dst = ws.get(raw["source"]), ws.get(raw["target"])
        rep = ValidationReport(f"map {name}")
        for bad in morphism_failures(obj, src, dst):
            rep.add(Failure(bad, (), "map is not a Doi-Hopf morphism"))
        return rep
    if kind == "integral":
        d = ws.get(ws.raw[name]["datum"])
        rep = ValidationReport(f"integral {name}")
        for bad in failed_conditions(d, "V4", obj):
            rep.add(Failure(bad, (), "not an A-integral"))
        return rep
    raise WorkspaceError(f"cannot validate objects of kind {kind!r}")


def _guard(n_unknowns: int):
    cap = max_dim() ** 2
    if n_unknowns > cap:
        raise WorkspaceError(f"{n_unknowns} unknowns exceed DOIHOPF_MAX_DIM^2 = {cap}; raise DOIHOPF_MAX_DIM to proceed")


def do_validate(ws, name: str, echo) -> int:
    rep = _validate_object(ws, name)
    if rep.ok:
        echo(f"OK {name} ({ws.kind(name)})")
        return OK
    echo(str(rep))
    return MATH


def _datum_or_hopf(ws, name):
    kind = ws.kind(name)
    if kind == "hopf":
        return ws.get(name)
    if kind == "datum":
        return ws.get(name).h
    raise WorkspaceError(f"{name!r} is a {kind!r}, expected a hopf algebra or datum")


def do_integrals(ws, name: str, space: str, normalized: bool, echo) -> int:
    space = space.lower()
    if space not in SPACES:
        raise WorkspaceError(f"unknown space {space!r}; choose from {', '.join(SPACES)}")
    if space == "classical":
        h = _datum_or_hopf(ws, name)
        _guard(h.dim * h.dim)
        ci = classical_integrals(h, normalized)
        echo(f"space classical   dim {ci.dim}")
        for k, v in enumerate(ci.space.homogeneous_basis):
            echo(f"  basis {k}:")
            echo("\n".join(_describe_vector(h.field, np.asarray(v, dtype=object), [h.labels], "phi({0})")))
        if normalized:
            p = ci.space.particular
            if p is None:
                echo("  normalized (phi(1) = 1): none")
            else:
                echo("  normalized (phi(1) = 1):")
                echo("\n".join(_describe_vector(h.field, np.asarray(p, dtype=object), [h.labels], "phi({0})")))
        return OK
    d = ws.get(name, "datum")
    rep = validate_datum(d)
    if not rep.ok:
        echo(str(rep))
        return MATH
    tag = space.upper()
    _guard(int(np.prod(space_definition(d, tag).shape)))
    sp = compute_space(d, tag, False)
    axes, template = _axes(d, tag)
    echo(f"space {tag}   dim {sp.dim}")
    for k, v in enumerate(sp.basis()):
        echo(f"  basis {k}:")
        echo("\n".join(_describe_vector(d.field, v, axes, template)))
    if not normalized:
        return OK
    sp1 = compute_space(d, tag, True)
    p = sp1.particular()
    if p is None:
        echo("  normalized: none (inconsistent system)")
        if tag == "W1" or d.h.has_antipode:
            verdict = Separable.NO
        else:
            verdict = Separable.SUFFICIENT_ONLY
    else:
        echo("  normalized particular:")
        echo("\n".join(_describe_vector(d.field, p, axes, template)))
        echo(f"  normalization holds: {is_normalized(d, tag, p)}")
        echo(f"  normalized elements: particular + subspace of dim {sp1.dim}")
        verdict = Separable.YES
    functor = "Induction" if tag == "W1" else "Forgetful"
    echo(f"SEPARABLE: {verdict.value} ({functor})")
    return OK


def do_maschke(ws, datum: str, morphism: str, retraction: str, integral: str | None, echo) -> int:
    d = ws.get(datum, "datum")
    u = ws.get(morphism, "map")
    r = ws.get(retraction, "map")
    m = ws.get(ws.raw[morphism]["source"], "module")
    n = ws.get(ws.raw[morphism]["target"], "module")
    if m.datum is not d or n.datum is not d:
        raise WorkspaceError("modules do not belong to the given datum")
    if ws.raw[retraction]["source"] != ws.raw[morphism]["target"] or ws.raw[retraction]["target"] != ws.raw[morphism]["source"]:
        raise WorkspaceError("retraction must go from the morphism's target to its source")
    if integral is None:
        sp = compute_space(d, "V4", True)
        if not sp.has_normalized:
            echo("no total A-integral: the forgetful functor is not separable")
            return MATH
        gamma = sp.particular()
    else:
        gamma = ws.get(integral, "integral")
    try:
        rt = lift_retraction(u, m, n, r, gamma)
    except ValidationError as exc:
        echo(str(exc.report))
        return MATH
    echo(f"lifted retraction {n.dim} -> {m.dim}:")
    for i, row in enumerate(rt.tolist()):
        echo(f"  {m.labels[i]}: " + " ".join(_fmt(d.field, x) for x in row))
    echo(f"  A-linear and C-colinear: {check_morphism(rt, n, m)}")
    echo(f"  r~ o u = I: {rt @ u == type(rt).identity(d.field, m.dim)}")
    echo(f"  nu_M o rho_M = I: {splits_unit(gamma, m)}")
    return OK


def do_double(ws, name: str, kind: str, out, echo) -> int:
    h = ws.get(name, "hopf")
    if kind == "drinfeld":
        if not h.has_antipode or not h.antipode_bijective:
            echo(f"{name} has no bijective antipode; D(H) is not available")
            return MATH
        obj = emit_hopf(drinfeld_double(h).d_of_h)
    elif kind == "heisenberg":
        obj = emit_algebra(heisenberg_double(h))
    elif kind == "koppinen":
        if not h.has_antipode or not h.antipode_bijective:
            echo(f"{name} has no bijective antipode; the Koppinen double is not available")
            return MATH
        obj = emit_algebra(koppinen_double(h).algebra)
    else:
        raise WorkspaceError(f"unknown double {kind!r}")
    text = dump_workspace(ws.field, {f"{kind}({name})": obj})
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
        echo(f"wrote {kind}({name}) of dimension {len(obj['basis'])} to {out}")
    else:
        echo(text.rstrip("\n"))
    return OK


def _run_query(ws, q: dict, echo) -> int:
    if not isinstance(q, dict) or "command" not in q:
        raise WorkspaceError("each query must be an object with a 'command'")
    cmd = q["command"]
    if cmd == "validate":
        return do_validate(ws, q.get("object"), echo)
    if cmd == "integrals":
        return do_integrals(ws, q.get("datum"), q.get("space", "v4"), bool(q.get("normalized", False)), echo)
    if cmd == "maschke":
        return do_maschke(ws, q.get("datum"), q.get("morphism"), q.get("retraction"), q.get("integral"), echo)
    if cmd == "double":
        return do_double(ws, q.get("hopf"), q.get("kind", "drinfeld"), None, echo)
    raise WorkspaceError(f"unknown command {cmd!r}")


def _guarded(fn):
    try:
        code = fn()
    except WorkspaceError as exc:
        click.echo(f"error: {exc}", err=True)
        code = USAGE
    except ValidationError as exc:
        click.echo(str(exc.report))
        code = MATH
    except (FieldError, ValueError, KeyError, TypeError) as exc:
        click.echo(f"error: {exc}", err=True)
        code = USAGE
    sys.exit(code)


@click.group()
def main():
    """Exact computations with Doi-Hopf data, their integrals and Maschke splittings."""


@main.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.argument("obj", metavar="OBJECT")
def validate(file, obj):
    """Run the axiom checks for OBJECT."""
    _guarded(lambda: do_validate(load_workspace(file), obj, click.echo))


@main.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.argument("datum")
@click.option("--space", type=click.Choice(SPACES, case_sensitive=False), default="v4", show_default=True)
@click.option("--normalized", is_flag=True, help="Add the normalization rows and report separability.")
def integrals(file, datum, space, normalized):
    """Compute an integral space of DATUM (a hopf object for --space classical)."""
    _guarded(lambda: do_integrals(load_workspace(file), datum, space, normalized, click.echo))


@main.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.argument("datum")
@click.argument("morphism")
@click.argument("retraction")
@click.option("--integral", default=None, help="Integral object to use instead of the solver's total integral.")
def maschke(file, datum, morphism, retraction, integral):
    """Lift an A-linear RETRACTION of MORPHISM to a Doi-Hopf retraction."""
    _guarded(lambda: do_maschke(load_workspace(file), datum, morphism, retraction, integral, click.echo))


@main.command()
@click.argument("file", type=click.Path(dir_okay=False))
@click.argument("hopf")
@click.option("--kind", type=click.Choice(("drinfeld", "heisenberg", "koppinen")), default="drinfeld", show_default=True)
@click.option("-o", "--output", default=None, type=click.Path(dir_okay=False), help="Write the result here.")
def double(file, hopf, kind, output):
    """Emit a double of HOPF in the workspace format."""
    _guarded(lambda: do_double(load_workspace(file), hopf, kind, output, click.echo))


@main.command()
@click.argument("file", type=click.Path(dir_okay=False))
def run(file):
    """Execute the file's query list; exit with the worst code."""

    def go():
        ws = load_workspace(file)
        worst = OK
        for q in ws.queries:
            worst = max(worst, _run_query(ws, q, click.echo))
        return worst

    _guarded(go)


if __name__ == "__main__":
    main()
