"""Command-line front end.

Exit status: 0 all residuals zero, 1 some residual nonzero (or a construction
hypothesis failed), 2 invalid input, 3 a search cap was exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import structfile
from .algebra import (
    HomAssocAlgebra,
    HomLieAlgebra,
    HomPoissonAlgebra,
    Residual,
    check_hom_associative,
    check_hom_lie,
    check_hom_poisson,
    prefixed,
)
from .bialgebra import (
    HAYBE_VARIANTS,
    HomPoissonBialgebra,
    check_poisson_bialgebra,
    check_r_alpha_invariant,
    check_coboundary_conditions,
    chybe_residual,
    coboundary_bialgebra,
    coboundary_Delta,
    coboundary_delta,
    drinfeld_double,
    haybe_residual,
    coboundary_printed_readings,
)
from .errors import CapExceeded, HomPoissonError, HypothesisViolated, InputError, SchemaMismatch
from .matched import (
    MatchedPairLie,
    MatchedPairPoisson,
    bowtie_lie,
    bowtie_poisson,
    check_manin_triple,
    check_matched_pair_lie,
    check_matched_pair_poisson,
    standard_manin_triple,
)
from .post import (
    ModuleHomPoisson,
    OOperator,
    PostHomPoisson,
    _o_residuals,
    associated_hom_poisson,
    check_module_hom_poisson,
    check_post_hom_poisson,
    module_semidirect,
    post_from_o_operator,
    post_from_quasitriangular,
)
from .reps import PoissonModule, check_poisson_module, dual_module, semidirect_product
from .solver import load_spec, solve
from .structfile import ManinTripleData

SPECIES = ("hom-assoc", "hom-lie", "hom-poisson", "module", "matched-pair", "manin-triple", "bialgebra", "post", "o-operator")
CONSTRUCTIONS = ("semidirect", "dual-module", "bowtie", "standard-manin", "coboundary", "double", "post-from-o", "associated")
_KIND_SPECIES = {"module-poisson": "module", "lie-matched-pair": "matched-pair"}


def _fmt(v) -> str:
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _nested(arr):
    if not isinstance(arr, np.ndarray):
        return _fmt(arr)
    if arr.ndim == 0:
        return _fmt(arr.item())
    return [_nested(a) for a in arr]


# -- loading -----------------------------------------------------------------------------


def _load(path: str):
    sf = structfile.read(path)
    return sf, structfile.to_structure(sf)


def _mismatch(sf, species: str) -> SchemaMismatch:
    return SchemaMismatch(f"file holds a {sf.kind!r} structure, it cannot be checked as {species!r}")


def battery(sf, obj, species: str, haybe_variant: str = "standard") -> tuple[list[Residual], list[Residual]]:
    """Residuals deciding the check, and informational residuals that do not."""
    info: list[Residual] = []
    if species == "hom-assoc":
        A = obj.assoc if isinstance(obj, HomPoissonAlgebra) else obj
        if not isinstance(A, HomAssocAlgebra):
            raise _mismatch(sf, species)
        return check_hom_associative(A), info
    if species == "hom-lie":
        L = obj.lie if isinstance(obj, HomPoissonAlgebra) else obj
        if not isinstance(L, HomLieAlgebra):
            raise _mismatch(sf, species)
        return check_hom_lie(L), info
    if species == "hom-poisson" and isinstance(obj, HomPoissonAlgebra):
        return check_hom_poisson(obj), info
    if species == "module":
        if isinstance(obj, PoissonModule):
            return check_poisson_module(obj), info
        if isinstance(obj, ModuleHomPoisson):
            return check_module_hom_poisson(obj), info
    if species == "matched-pair":
        if isinstance(obj, MatchedPairPoisson):
            return check_matched_pair_poisson(obj), info
        if isinstance(obj, MatchedPairLie):
            return check_matched_pair_lie(obj), info
    if species == "manin-triple" and isinstance(obj, ManinTripleData):
        return check_manin_triple(obj.P, obj.plus, obj.minus, obj.form), info
    if species == "post" and isinstance(obj, PostHomPoisson):
        return check_post_hom_poisson(obj), info
    if species == "o-operator" and isinstance(obj, OOperator):
        M = obj.module
        return prefixed("module:", check_module_hom_poisson(M)) + _o_residuals(obj.R, obj.weight, M), info
    if species == "bialgebra" and isinstance(obj, HomPoissonBialgebra):
        out = check_poisson_bialgebra(obj)
        r = sf.tensors.get("r")
        if r is not None:
            P = obj.P
            inv = check_r_alpha_invariant(P.alpha, r)
            out.append(Residual("r:alpha-invariant", inv.tensor))
            if inv.ok:
                out += [
                    Residual("r:coboundary-delta", obj.delta - coboundary_delta(P, r)),
                    Residual("r:coboundary-Delta", obj.Delta - coboundary_Delta(P, r)),
                ]
            out.append(Residual("r:chybe", chybe_residual(P.lie, r)))
            out.append(Residual(f"r:haybe[{haybe_variant}]", haybe_residual(P.assoc, r, haybe_variant)))
            out += prefixed("r:", check_coboundary_conditions(P, r, haybe_variant))
            for v in HAYBE_VARIANTS:
                if v != haybe_variant:
                    info.append(Residual(f"r:haybe[{v}]", haybe_residual(P.assoc, r, v)))
            info += prefixed("r:", coboundary_printed_readings(P, r))
        return out, info
    raise _mismatch(sf, species)


# -- reporting ---------------------------------------------------------------------------


def _row(r: Residual, informational: bool) -> dict:
    w = r.witness
    return {
        "label": r.label,
        "ok": r.ok,
        "nonzero": r.nonzero_count,
        "witness": None if w is None else list(w),
        "value": None if w is None else _fmt(r.tensor[w]),
        "informational": informational,
    }


def _print_table(rows: list[dict], out) -> None:
    width = max([len("residual")] + [len(r["label"]) for r in rows])
    out.write(f"{'residual':<{width}}  status  nonzero  witness        value\n")
    for r in rows:
        status = ("ok" if r["ok"] else "FAIL") if not r["informational"] else ("info" if r["ok"] else "info!")
        wit = "-" if r["witness"] is None else "(" + ", ".join(map(str, r["witness"])) + ")"
        val = r["value"] or "-"
        out.write(f"{r['label']:<{width}}  {status:<6}  {r['nonzero']:>7}  {wit:<13}  {val}\n")


def report(residuals: list[Residual], info: list[Residual], fmt: str, out) -> int:
    rows = [_row(r, False) for r in residuals] + [_row(r, True) for r in info]
    failed = sum(1 for r in residuals if not r.ok)
    status = 0 if failed == 0 else 1
    if fmt == "json-lines":
        for row in rows:
            out.write(json.dumps(row) + "\n")
        out.write(json.dumps({"summary": {"checked": len(residuals), "failed": failed, "exit": status}}) + "\n")
    else:
        _print_table(rows, out)
        verdict = "PASS" if status == 0 else "FAIL"
        out.write(f"{verdict}: {len(residuals) - failed}/{len(residuals)} residuals zero\n")
    return status


# -- subcommands -------------------------------------------------------------------------


def cmd_check(args, out) -> int:
    sf, obj = _load(args.file)
    species = args.species or _KIND_SPECIES.get(sf.kind, sf.kind)
    residuals, info = battery(sf, obj, species, args.haybe_variant)
    return report(residuals, info, args.format, out)


def construct(kind: str, sf, obj):
    """Returns ``(structure, r or None)``."""
    r_in = sf.tensors.get("r")
    if kind == "semidirect":
        if isinstance(obj, PoissonModule):
            return semidirect_product(obj), None
        if isinstance(obj, ModuleHomPoisson):
            return module_semidirect(obj), None
    elif kind == "dual-module" and isinstance(obj, PoissonModule):
        return dual_module(obj), None
    elif kind == "bowtie":
        if isinstance(obj, MatchedPairPoisson):
            return bowtie_poisson(obj), None
        if isinstance(obj, MatchedPairLie):
            return bowtie_lie(obj), None
    elif kind == "standard-manin" and isinstance(obj, HomPoissonBialgebra):
        PD, form = standard_manin_triple(obj.P, obj.dual_algebra())
        n = obj.dim
        return ManinTripleData(PD, form, list(range(n)), list(range(n, 2 * n))), None
    elif kind == "coboundary" and isinstance(obj, (HomPoissonAlgebra, HomPoissonBialgebra)):
        if r_in is None:
            raise SchemaMismatch("coboundary needs an 'r' tensor in the input file")
        P = obj if isinstance(obj, HomPoissonAlgebra) else obj.P
        return coboundary_bialgebra(P, r_in), r_in
    elif kind == "double" and isinstance(obj, HomPoissonBialgebra):
        PD, r = drinfeld_double(obj)
        return coboundary_bialgebra(PD, r), r
    elif kind == "post-from-o":
        if isinstance(obj, OOperator):
            return post_from_o_operator(obj), None
        if isinstance(obj, HomPoissonBialgebra) and r_in is not None:
            return post_from_quasitriangular(obj, r_in), None
    elif kind == "associated" and isinstance(obj, PostHomPoisson):
        return associated_hom_poisson(obj), None
    raise SchemaMismatch(f"construction {kind!r} does not accept a {sf.kind!r} structure")


def cmd_construct(args, out) -> int:
    sf, obj = _load(args.input)
    result, r = construct(args.kind, sf, obj)
    structfile.save_structure(result, args.output, r=r, metadata={"construction": args.kind})
    out.write(f"wrote {args.output} ({structfile.from_structure(result).kind})\n")
    return 0


def cmd_solve(args, out) -> int:
    spec = load_spec(args.spec)
    if args.haybe_variant_given:
        from dataclasses import replace

        spec = replace(spec, haybe_variant=args.haybe_variant)
    result = solve(spec)
    sols = result.solutions
    if args.format == "json-lines":
        for s in sols:
            out.write(
                json.dumps(
                    {
                        "index": list(s.index),
                        "point": [_fmt(v) for v in s.point],
                        "unknowns": {k: _nested(v) for k, v in s.unknowns.items()},
                        "certificate": {r.label: r.ok for r in s.residuals},
                    }
                )
                + "\n"
            )
        out.write(json.dumps({"summary": {"target": spec.target, "points": result.points_searched, "solutions": len(sols)}}) + "\n")
    else:
        out.write(f"target {spec.target}: {result.points_searched} grid points, {len(sols)} solutions\n")
        for k, s in enumerate(sols, 1):
            point = ", ".join(_fmt(v) for v in s.point)
            out.write(f"{k:>4}  [{point}]  certified: {len(s.residuals)} residuals zero\n")
    return 0


def cmd_residual(args, out) -> int:
    sf, obj = _load(args.file)
    species = args.species or _KIND_SPECIES.get(sf.kind, sf.kind)
    residuals, info = battery(sf, obj, species, args.haybe_variant)
    found = [r for r in residuals + info if r.label == args.eq]
    if not found:
        labels = ", ".join(r.label for r in residuals + info)
        raise SchemaMismatch(f"no residual named {args.eq!r}; available: {labels}")
    r = found[0]
    entries = [(list(idx), _fmt(v)) for idx, v in np.ndenumerate(r.tensor) if v != 0]
    if args.format == "json-lines":
        out.write(json.dumps({"label": r.label, "shape": list(r.tensor.shape), "entries": entries}) + "\n")
    else:
        out.write(f"{r.label}: shape {tuple(r.tensor.shape)}, {len(entries)} nonzero entries\n")
        for idx, v in entries:
            out.write(f"  ({', '.join(map(str, idx))})  {v}\n")
    return 0 if r.ok else 1


# -- entry point -------------------------------------------------------------------------


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--haybe-variant", choices=HAYBE_VARIANTS, default=default)
    parser.add_argument("--format", choices=("table", "json-lines"), default=default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hompoisson", description="Exact checks and constructions for Hom-Poisson structures.")
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="print the residual table of a structure file")
    p.add_argument("file")
    p.add_argument("--as", dest="species", choices=SPECIES)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("construct", parents=[common], help="build a new structure file")
    p.add_argument("kind", choices=CONSTRUCTIONS)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", dest="output", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("solve", parents=[common], help="grid search described by a spec file")
    p.add_argument("--spec", required=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("residual", parents=[common], help="print one named residual tensor")
    p.add_argument("file")
    p.add_argument("--eq", required=True)
    p.add_argument("--as", dest="species", choices=SPECIES)
    p.set_defaults(func=cmd_residual)
    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    args.haybe_variant_given = args.haybe_variant is not None
    args.haybe_variant = args.haybe_variant or "standard"
    args.format = args.format or "table"
    try:
        return args.func(args, out)
    except InputError as e:
        err.write(f"error: {e}\n")
        return 2
    except OSError as e:
        err.write(f"error: {e}\n")
        return 2
    except HypothesisViolated as e:
        err.write(f"hypothesis failed: {e}\n")
        return 1
    except CapExceeded as e:
        err.write(f"cap exceeded: {e}\n")
        return 3
    except HomPoissonError as e:
        err.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
