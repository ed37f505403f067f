"""Versioned JSON structure files with exact ``"p/q"`` scalars.

A file is one JSON object::

    {
      "schema": "hompoisson-structure/1",
      "kind": "hom-poisson",
      "dim": 2,
      "basis": ["e1", "e2"],
      "tensors": {"alpha": [...], "mul": [...], "bracket": [...]},
      "metadata": {}
    }

Scalars are integers or strings ``"p/q"``; floats are rejected.  The
roles each kind reads are listed in :data:`KIND_ROLES` and the full schema is
documented in ``docs/structure-format.md``.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np

from .algebra import HomAssocAlgebra, HomLieAlgebra, HomPoissonAlgebra
from .bialgebra import HomPoissonBialgebra
from .errors import ParseError, SchemaMismatch, ShapeError
from .kernel import qeye, qzeros
from .matched import BilinearForm, MatchedPairLie, MatchedPairPoisson
from .post import ModuleHomPoisson, OOperator, PostHomPoisson
from .reps import PoissonModule

SCHEMA = "hompoisson-structure/1"
SUPPORTED = (SCHEMA,)

# role -> shape in terms of the symbols n (dim), m (second dim)
_SHAPES = {
    "alpha": "nn",
    "mul": "nnn",
    "bracket": "nnn",
    "delta": "nnn",
    "Delta": "nnn",
    "r": "nn",
    "B": "nn",
    "beta": "mm",
    "S": "nmm",
    "T": "nmm",
    "R": "nm",
    "V.mul": "mmm",
    "V.bracket": "mmm",
    "P2.mul": "mmm",
    "P2.bracket": "mmm",
    "rho1": "nmm",
    "mu1": "nmm",
    "rho2": "mnn",
    "mu2": "mnn",
    "lie": "nnn",
    "diamond": "nnn",
    "dot": "nnn",
    "succ": "nnn",
}

KIND_ROLES = {
    "hom-assoc": ("alpha", "mul"),
    "hom-lie": ("alpha", "bracket"),
    "hom-poisson": ("alpha", "mul", "bracket"),
    "module": ("alpha", "mul", "bracket", "beta", "S", "T"),
    "matched-pair": ("alpha", "mul", "bracket", "beta", "P2.mul", "P2.bracket", "rho1", "mu1", "rho2", "mu2"),
    "lie-matched-pair": ("alpha", "bracket", "beta", "P2.bracket", "rho1", "rho2"),
    "manin-triple": ("alpha", "mul", "bracket", "B"),
    "bialgebra": ("alpha", "mul", "bracket", "delta", "Delta"),
    "post": ("alpha", "lie", "diamond", "dot", "succ"),
    "module-poisson": ("alpha", "mul", "bracket", "beta", "V.mul", "V.bracket", "S", "T"),
    "o-operator": ("alpha", "mul", "bracket", "beta", "V.mul", "V.bracket", "S", "T", "R"),
}
# roles that default to zero (or identity for twists) when absent
_OPTIONAL = {"alpha", "beta", "mul", "bracket", "delta", "Delta", "V.mul", "V.bracket", "P2.mul", "P2.bracket"}
_RATIONAL = re.compile(r"\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


@dataclass
class StructureFile:
    kind: str
    dim: int
    tensors: dict[str, np.ndarray]
    basis: list[str] | None = None
    dim2: int | None = None
    metadata: dict[str, Any] = field(default_factory=dict)
    schema: str = SCHEMA


def _locate(text: str, needle: str) -> tuple[int | None, int | None]:
    pos = text.find(needle)
    if pos < 0:
        return None, None
    line = text.count("\n", 0, pos) + 1
    return line, pos - (text.rfind("\n", 0, pos) + 1) + 1


def _scalar(v, role: str, text: str) -> Fraction:
    if isinstance(v, bool) or isinstance(v, float) or not isinstance(v, (int, str)):
        line, col = _locate(text, json.dumps(v))
        raise ParseError(f"tensor {role!r}: {v!r} is not an exact rational", line, col)
    if isinstance(v, int):
        return Fraction(v)
    if not _RATIONAL.match(v) or v.replace(" ", "").endswith("/0"):
        line, col = _locate(text, json.dumps(v))
        raise ParseError(f"tensor {role!r}: cannot parse {v!r} as p/q", line, col)
    return Fraction(v.replace(" ", ""))


def _tensor(data, role: str, text: str) -> np.ndarray:
    def walk(x):
        if isinstance(x, list):
            return [walk(y) for y in x]
        return _scalar(x, role, text)

    vals = walk(data)
    try:
        arr = np.array(vals, dtype=object)
    except ValueError:
        arr = None
    if arr is None or any(isinstance(v, list) for v in arr.reshape(-1)):
        raise ShapeError(f"tensor {role!r} is ragged", tensor=role)
    return arr


def _shape(role: str, n: int, m: int) -> tuple[int, ...]:
    spec = _SHAPES.get(role)
    if spec is None:
        raise SchemaMismatch(f"unknown tensor role {role!r}")
    return tuple(n if c == "n" else m for c in spec)


def _infer_kind(tensors: dict) -> str:
    has = set(tensors)
    if "R" in has:
        return "o-operator"
    if {"diamond", "succ"} & has:
        return "post"
    if {"delta", "Delta"} & has:
        return "bialgebra"
    if {"rho1", "rho2"} & has:
        return "matched-pair" if "mu1" in has or "mu2" in has else "lie-matched-pair"
    if {"V.mul", "V.bracket"} & has:
        return "module-poisson"
    if {"S", "T"} & has:
        return "module"
    if "B" in has:
        return "manin-triple"
    if "mul" in has and "bracket" in has:
        return "hom-poisson"
    if "bracket" in has:
        return "hom-lie"
    if "mul" in has:
        return "hom-assoc"
    raise SchemaMismatch("cannot infer the structure kind from the tensors present")


def parse(text: str) -> StructureFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", 1, 1)
    schema = doc.get("schema", SCHEMA)
    if schema not in SUPPORTED:
        raise SchemaMismatch(f"unsupported schema {schema!r}; this reader understands {', '.join(SUPPORTED)}")
    if not isinstance(doc.get("dim"), int) or doc["dim"] < 0:
        raise SchemaMismatch("'dim' must be a non-negative integer")
    raw = doc.get("tensors", {})
    if not isinstance(raw, dict):
        raise SchemaMismatch("'tensors' must be an object")
    tensors = {role: _tensor(v, role, text) for role, v in raw.items()}
    kind = doc.get("kind") or _infer_kind(tensors)
    if kind not in KIND_ROLES:
        raise SchemaMismatch(f"unknown kind {kind!r}")
    n = doc["dim"]
    m = doc.get("dim2")
    if m is None:
        m = n
        for role in ("beta", "V.mul", "V.bracket", "P2.mul", "P2.bracket"):
            if role in tensors and tensors[role].ndim:
                m = tensors[role].shape[0]
                break
    for role, arr in tensors.items():
        want = _shape(role, n, m)
        if arr.shape != want:
            raise ShapeError(f"tensor {role!r} must have shape {want}, got {arr.shape}", tensor=role)
    for role in KIND_ROLES[kind]:
        if role not in tensors:
            if role not in _OPTIONAL:
                raise SchemaMismatch(f"kind {kind!r} requires tensor {role!r}")
            shape = _shape(role, n, m)
            tensors[role] = qeye(shape[0]) if role in ("alpha", "beta") else qzeros(shape)
    basis = doc.get("basis")
    if basis is not None and len(basis) != n:
        raise ShapeError(f"basis lists {len(basis)} names for dim {n}", tensor="basis")
    return StructureFile(kind, n, tensors, basis, doc.get("dim2"), dict(doc.get("metadata", {})), schema)


def read(path) -> StructureFile:
    return parse(Path(path).read_text())


def _fmt(v: Fraction) -> int | str:
    return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def _nested(arr):
    if not isinstance(arr, np.ndarray):
        return _fmt(Fraction(arr))
    if arr.ndim == 0:
        return _fmt(Fraction(arr.item()))
    return [_nested(a) for a in arr]


def _dump_value(x, indent: int) -> str:
    # innermost rows stay on one line so files diff row by row
    pad = " " * indent
    if isinstance(x, list) and x and isinstance(x[0], list):
        inner = ",\n".join(pad + "  " + _dump_value(y, indent + 2) for y in x)
        return "[\n" + inner + "\n" + pad + "]"
    return json.dumps(x)


def dumps(sf: StructureFile) -> str:
    lines = ["{", f'  "schema": {json.dumps(sf.schema)},', f'  "kind": {json.dumps(sf.kind)},', f'  "dim": {sf.dim},']
    if sf.dim2 is not None:
        lines.append(f'  "dim2": {sf.dim2},')
    if sf.basis is not None:
        lines.append(f'  "basis": {json.dumps(sf.basis)},')
    lines.append('  "tensors": {')
    items = [f"    {json.dumps(k)}: {_dump_value(_nested(np.asarray(v)), 4)}" for k, v in sf.tensors.items()]
    lines.append(",\n".join(items))
    lines.append("  },")
    lines.append(f'  "metadata": {json.dumps(sf.metadata, sort_keys=True)}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def write(sf: StructureFile, path) -> None:
    Path(path).write_text(dumps(sf))


# -- typed structures ------------------------------------------------------------


def to_structure(sf: StructureFile):
    """Build the typed object a file describes."""
    t, md = sf.tensors, sf.metadata
    if sf.kind == "hom-assoc":
        return HomAssocAlgebra(t["alpha"], t["mul"])
    if sf.kind == "hom-lie":
        return HomLieAlgebra(t["alpha"], t["bracket"])
    P = HomPoissonAlgebra(t["alpha"], t["mul"], t["bracket"]) if "mul" in t else None
    if sf.kind == "hom-poisson":
        return P
    if sf.kind == "module":
        return PoissonModule(P, t["beta"], t["S"], t["T"])
    if sf.kind == "matched-pair":
        P2 = HomPoissonAlgebra(t["beta"], t["P2.mul"], t["P2.bracket"])
        return MatchedPairPoisson(P, P2, t["rho1"], t["mu1"], t["rho2"], t["mu2"])
    if sf.kind == "lie-matched-pair":
        return MatchedPairLie(
            HomLieAlgebra(t["alpha"], t["bracket"]), HomLieAlgebra(t["beta"], t["P2.bracket"]), t["rho1"], t["rho2"]
        )
    if sf.kind == "manin-triple":
        n = sf.dim
        plus = md.get("plus", list(range(n // 2)))
        minus = md.get("minus", list(range(n // 2, n)))
        return ManinTripleData(P, BilinearForm(t["B"]), list(plus), list(minus))
    if sf.kind == "bialgebra":
        return HomPoissonBialgebra(P, t["delta"], t["Delta"])
    if sf.kind == "post":
        return PostHomPoisson(t["alpha"], t["lie"], t["diamond"], t["dot"], t["succ"])
    V = HomPoissonAlgebra(t["beta"], t["V.mul"], t["V.bracket"])
    M = ModuleHomPoisson(P, V, t["S"], t["T"])
    if sf.kind == "module-poisson":
        return M
    return OOperator(t["R"], Fraction(str(md.get("weight", 0))), M)


@dataclass(frozen=True)
class ManinTripleData:
    P: HomPoissonAlgebra
    form: BilinearForm
    plus: list[int]
    minus: list[int]


def from_structure(obj, r=None, metadata: dict | None = None, basis: list[str] | None = None) -> StructureFile:
    """Inverse of :func:`to_structure`; ``r`` is stored alongside when given."""
    md = dict(metadata or {})
    t: dict[str, np.ndarray] = {}

    def poisson(P, prefix=""):
        t[prefix + "mul"] = P.mul
        t[prefix + "bracket"] = P.bracket

    if isinstance(obj, HomAssocAlgebra):
        kind, n, t = "hom-assoc", obj.dim, {"alpha": obj.alpha, "mul": obj.mul}
    elif isinstance(obj, HomLieAlgebra):
        kind, n, t = "hom-lie", obj.dim, {"alpha": obj.alpha, "bracket": obj.bracket}
    elif isinstance(obj, HomPoissonAlgebra):
        kind, n = "hom-poisson", obj.dim
        t["alpha"] = obj.alpha
        poisson(obj)
    elif isinstance(obj, PoissonModule):
        kind, n = "module", obj.base.dim
        t["alpha"] = obj.base.alpha
        poisson(obj.base)
        t.update(beta=obj.beta, S=obj.S, T=obj.T)
    elif isinstance(obj, MatchedPairPoisson):
        kind, n = "matched-pair", obj.P1.dim
        t["alpha"] = obj.P1.alpha
        poisson(obj.P1)
        t["beta"] = obj.P2.alpha
        poisson(obj.P2, "P2.")
        t.update(rho1=obj.rho1, mu1=obj.mu1, rho2=obj.rho2, mu2=obj.mu2)
    elif isinstance(obj, MatchedPairLie):
        kind, n = "lie-matched-pair", obj.L1.dim
        t.update({"alpha": obj.L1.alpha, "bracket": obj.L1.bracket, "beta": obj.L2.alpha})
        t.update({"P2.bracket": obj.L2.bracket, "rho1": obj.rho1, "rho2": obj.rho2})
    elif isinstance(obj, ManinTripleData):
        kind, n = "manin-triple", obj.P.dim
        t["alpha"] = obj.P.alpha
        poisson(obj.P)
        t["B"] = obj.form.B
        md.update(plus=list(obj.plus), minus=list(obj.minus))
    elif isinstance(obj, HomPoissonBialgebra):
        kind, n = "bialgebra", obj.dim
        t["alpha"] = obj.P.alpha
        poisson(obj.P)
        t.update(delta=obj.delta, Delta=obj.Delta)
    elif isinstance(obj, PostHomPoisson):
        kind, n = "post", obj.dim
        t.update(alpha=obj.alpha, lie=obj.lie, diamond=obj.diamond, dot=obj.dot, succ=obj.succ)
    elif isinstance(obj, (ModuleHomPoisson, OOperator)):
        M = obj.module if isinstance(obj, OOperator) else obj
        kind, n = ("o-operator" if isinstance(obj, OOperator) else "module-poisson"), M.base.dim
        t["alpha"] = M.base.alpha
        poisson(M.base)
        t["beta"] = M.beta
        poisson(M.V, "V.")
        t.update(S=M.S, T=M.T)
        if isinstance(obj, OOperator):
            t["R"] = obj.R
            md["weight"] = _fmt(obj.weight)
    else:
        raise TypeError(f"cannot serialise {type(obj).__name__}")
    if r is not None:
        t["r"] = r
    dim2 = None
    for role in ("beta",):
        if role in t and t[role].shape[0] != n:
            dim2 = t[role].shape[0]
    return StructureFile(kind, n, dict(t), basis, dim2, md)


def load_structure(path):
    return to_structure(read(path))


def save_structure(obj, path, r=None, metadata: dict | None = None) -> None:
    write(from_structure(obj, r=r, metadata=metadata), path)
