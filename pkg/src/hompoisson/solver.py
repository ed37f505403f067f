"""Exhaustive grid search for Yang-Baxter solutions, Rota-Baxter operators,
O-operators and Lie matched pairs.

Every target's residual battery is at most quadratic in the unknowns, so it
is turned once into integer polynomial rows (constant, linear and quadratic
coefficients recovered by evaluating the battery at ``0``, ``+-e_i`` and
``e_i + e_j``).  The rows are then evaluated at every grid point by
:mod:`hompoisson.polygrid`, and each zero is re-certified with the exact
battery.
"""
from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable, Sequence

import numpy as np

from . import polygrid
from .algebra import HomPoissonAlgebra, Residual, check_hom_lie, check_hom_poisson, failures
from .bialgebra import HAYBE_VARIANTS, check_r_alpha_invariant, chybe_residual, haybe_residual
from .errors import FixtureInvalid, GridTooLarge, SchemaMismatch
from .kernel import qarray, to_fraction
from .matched import MatchedPairLie, check_matched_pair_lie
from .post import ModuleHomPoisson, _o_residuals, check_module_hom_poisson, check_rota_baxter, self_module

TARGETS = ("chybe", "haybe", "hpybe", "rota-baxter", "o-operator", "matched-pair")
DEFAULT_CAP = 10**7


@dataclass(frozen=True)
class SearchSpec:
    target: str
    fixture: object
    grid: tuple[tuple[Fraction, ...], ...] | tuple[Fraction, ...]
    weight: Fraction | None = None
    cap: int = DEFAULT_CAP
    haybe_variant: str = "standard"

    def __post_init__(self):
        if self.target not in TARGETS:
            raise SchemaMismatch(f"unknown target {self.target!r}; expected one of {', '.join(TARGETS)}")
        if self.haybe_variant not in HAYBE_VARIANTS:
            raise SchemaMismatch(f"unknown HAYBE variant {self.haybe_variant!r}")
        if self.target in ("rota-baxter", "o-operator") and self.weight is None:
            object.__setattr__(self, "weight", Fraction(0))


@dataclass(frozen=True)
class Solution:
    index: tuple[int, ...]
    point: tuple[Fraction, ...]
    unknowns: dict[str, np.ndarray] = field(repr=False)
    residuals: list[Residual] = field(repr=False)


@dataclass(frozen=True)
class SearchResult:
    spec: SearchSpec
    points_searched: int
    backend: str
    solutions: list[Solution]


# -- target batteries ------------------------------------------------------------


@dataclass(frozen=True)
class _Problem:
    size: int
    split: Callable[[Sequence[Fraction]], dict[str, np.ndarray]]
    battery: Callable[[dict[str, np.ndarray]], list[Residual]]


def _reshaper(shapes: dict[str, tuple[int, ...]]):
    def split(x):
        out, pos = {}, 0
        for name, shape in shapes.items():
            k = math.prod(shape)
            out[name] = qarray(list(x[pos : pos + k])).reshape(shape)
            pos += k
        return out

    return split, sum(math.prod(s) for s in shapes.values())


def _problem(spec: SearchSpec) -> _Problem:
    fx, t = spec.fixture, spec.target
    if t in ("chybe", "haybe", "hpybe", "rota-baxter"):
        if not isinstance(fx, HomPoissonAlgebra):
            raise FixtureInvalid(f"target {t} needs a Hom-Poisson fixture")
        bad = failures(check_hom_poisson(fx))
        if bad:
            raise FixtureInvalid(f"fixture fails {bad[0].label} at {bad[0].witness}")
        n = fx.dim
        if t == "rota-baxter":
            split, size = _reshaper({"R": (n, n)})
            return _Problem(size, split, lambda u: check_rota_baxter(fx, u["R"], spec.weight))
        split, size = _reshaper({"r": (n, n)})

        def battery(u):
            r = u["r"]
            out = [check_r_alpha_invariant(fx.alpha, r)]
            if t in ("chybe", "hpybe"):
                out.append(Residual("chybe", chybe_residual(fx.lie, r)))
            if t in ("haybe", "hpybe"):
                out.append(Residual("haybe", haybe_residual(fx.assoc, r, spec.haybe_variant)))
            return out

        return _Problem(size, split, battery)
    if t == "o-operator":
        if isinstance(fx, HomPoissonAlgebra):
            fx = self_module(fx)
        if not isinstance(fx, ModuleHomPoisson):
            raise FixtureInvalid("target o-operator needs a module Hom-Poisson fixture")
        bad = failures(check_module_hom_poisson(fx))
        if bad:
            raise FixtureInvalid(f"fixture fails {bad[0].label} at {bad[0].witness}")
        split, size = _reshaper({"R": (fx.base.dim, fx.V.dim)})
        return _Problem(size, split, lambda u: _o_residuals(u["R"], spec.weight, fx))
    if not isinstance(fx, MatchedPairLie):
        raise FixtureInvalid("target matched-pair needs a Lie matched-pair fixture")
    L1, L2 = fx.L1, fx.L2
    for lab, L in (("L1", L1), ("L2", L2)):
        bad = failures(check_hom_lie(L))
        if bad:
            raise FixtureInvalid(f"{lab} fails {bad[0].label} at {bad[0].witness}")
    n1, n2 = L1.dim, L2.dim
    split, size = _reshaper({"rho1": (n1, n2, n2), "rho2": (n2, n1, n1)})
    return _Problem(
        size, split, lambda u: check_matched_pair_lie(MatchedPairLie(L1, L2, u["rho1"], u["rho2"]))
    )


def _flat(residuals: list[Residual]) -> list[Fraction]:
    return [v for r in residuals for v in r.tensor.reshape(-1)]


# -- polynomial extraction ---------------------------------------------------------


def quadratic_rows(f: Callable[[list[Fraction]], list[Fraction]], m: int):
    """Coefficients ``(c, L, Q)`` of a vector polynomial of degree <= 2.

    ``Q[(i, j)]`` for ``i <= j`` is the coefficient of ``x_i x_j``.  The
    extraction is checked against one extra deterministic point.
    """
    def point(*coords: tuple[int, int]) -> list[Fraction]:
        x = [Fraction(0)] * m
        for i, v in coords:
            x[i] = Fraction(v)
        return x

    c = f(point())
    L, Q = [], {}
    for i in range(m):
        plus, minus = f(point((i, 1))), f(point((i, -1)))
        L.append([(p - q) / 2 for p, q in zip(plus, minus)])
        Q[(i, i)] = [(p + q) / 2 - z for p, q, z in zip(plus, minus, c)]
    for i in range(m):
        for j in range(i + 1, m):
            both = f(point((i, 1), (j, 1)))
            Q[(i, j)] = [
                b - z - li - lj - qi - qj
                for b, z, li, lj, qi, qj in zip(both, c, L[i], L[j], Q[(i, i)], Q[(j, j)])
            ]
    rng = random.Random(m)
    probe = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(m)]
    want = f(probe)
    for k, w in enumerate(want):
        got = c[k] + sum(L[i][k] * probe[i] for i in range(m))
        got += sum(q[k] * probe[i] * probe[j] for (i, j), q in Q.items())
        if got != w:
            raise RuntimeError("residual battery is not quadratic in the unknowns")
    return c, L, Q


def integer_rows(c, L, Q, m: int, den: int):
    """Integer rows in ``y = den * x`` packed for :func:`polygrid.zero_points`."""
    rows = []
    for k in range(len(c)):
        terms = []
        if c[k]:
            terms.append((c[k] * den * den, m, m))
        for i in range(m):
            if L[i][k]:
                terms.append((L[i][k] * den, i, m))
        for (i, j), q in Q.items():
            if q[k]:
                terms.append((q[k], i, j))
        if terms:
            scale = math.lcm(*(t[0].denominator for t in terms))
            rows.append([(int(t[0] * scale), t[1], t[2]) for t in terms])
    rows.sort(key=len)
    row_ptr, coef, ii, jj = [0], [], [], []
    for row in rows:
        for cf, i, j in row:
            coef.append(cf)
            ii.append(i)
            jj.append(j)
        row_ptr.append(len(coef))
    return rows, row_ptr, coef, ii, jj


# -- search ----------------------------------------------------------------------


def _grid(spec: SearchSpec, m: int) -> list[list[Fraction]]:
    g = spec.grid
    if g and not isinstance(g[0], (list, tuple)):
        g = [g] * m
    if len(g) != m:
        raise SchemaMismatch(f"grid lists {len(g)} coordinates, the target has {m} unknowns")
    out = [sorted(set(to_fraction(v) for v in axis)) for axis in g]
    if any(not axis for axis in out):
        raise SchemaMismatch("every grid axis needs at least one value")
    return out


@dataclass(frozen=True)
class GridSystem:
    """A target's residual battery as integer polynomial rows over a grid."""

    problem: _Problem
    grid: list[list[Fraction]]
    total: int
    args: tuple

    def zero_points(self, backend: str | None = None, start: int = 0, stop: int | None = None) -> list[int]:
        stop = self.total if stop is None else stop
        if self.problem.size == 0:
            return [0] if not self.args[2][-1] else []
        return polygrid.zero_points(*self.args[:6], start, stop, self.args[6], backend=backend)


def grid_system(spec: SearchSpec) -> GridSystem:
    prob = _problem(spec)
    m = prob.size
    grid = _grid(spec, m)
    total = math.prod(len(a) for a in grid)
    if total > spec.cap:
        raise GridTooLarge(f"grid has {total} points, cap is {spec.cap}")
    c, L, Q = quadratic_rows(lambda x: _flat(prob.battery(prob.split(x))), m)
    den = math.lcm(*(v.denominator for axis in grid for v in axis))
    rows, row_ptr, coef, ii, jj = integer_rows(c, L, Q, m, den)
    width = max([1] + [len(a) for a in grid])
    values = [[int(v * den) for v in axis] + [0] * (width - len(axis)) for axis in grid]
    ymax = max([1] + [abs(v) for axis in values for v in axis])
    native = all(sum(abs(t[0]) for t in row) * ymax * ymax < 2**62 for row in rows)
    args = (
        np.array(values, dtype=object if not native else np.int64),
        np.array([len(a) for a in grid], dtype=np.int64),
        np.array(row_ptr, dtype=np.int64),
        np.array(coef, dtype=np.int64 if native else object),
        np.array(ii, dtype=np.int64),
        np.array(jj, dtype=np.int64),
        native,
    )
    return GridSystem(prob, grid, total, args)


def solve(spec: SearchSpec, backend: str | None = None) -> SearchResult:
    system = grid_system(spec)
    prob, grid = system.problem, system.grid
    used = backend or polygrid.BACKEND
    hits = system.zero_points(used)
    solutions = []
    dims = [len(a) for a in grid]
    for flat in hits:
        idx = tuple(int(i) for i in np.unravel_index(flat, dims)) if prob.size else ()
        point = tuple(grid[k][i] for k, i in enumerate(idx))
        unknowns = prob.split(list(point))
        res = prob.battery(unknowns)
        bad = failures(res)
        if bad:
            raise RuntimeError(f"grid evaluator reported a non-solution at {point}: {bad[0].label}")
        solutions.append(Solution(idx, point, unknowns, res))
    return SearchResult(spec, system.total, used, solutions)


# -- spec files --------------------------------------------------------------------


def load_spec(path) -> SearchSpec:
    from .structfile import load_structure

    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except json.JSONDecodeError as e:
        from .errors import ParseError

        raise ParseError(e.msg, e.lineno, e.colno) from None
    for key in ("target", "fixture", "grid"):
        if key not in doc:
            raise SchemaMismatch(f"search spec needs {key!r}")
    fixture = load_structure(path.parent / doc["fixture"])
    grid = doc["grid"]
    if isinstance(grid, list) and grid and isinstance(grid[0], list):
        grid = tuple(tuple(to_fraction(v) for v in axis) for axis in grid)
    else:
        grid = tuple(to_fraction(v) for v in grid)
    weight = doc.get("weight")
    return SearchSpec(
        doc["target"],
        fixture,
        grid,
        None if weight is None else to_fraction(str(weight)),
        int(doc.get("cap", DEFAULT_CAP)),
        doc.get("haybe_variant", "standard"),
    )
