"""Small named structures used by the tests, the acceptance suite and the CLI.

The ``centroid`` fixtures carry an involutive twist that commutes with left
multiplication (``alpha(x o y) = alpha(x) o y``); on those the double and the
Manin triple machinery behave as in the untwisted case.  The ``yau_*``
fixtures twist a Poisson algebra by a morphism that is not of that kind and
are kept for the discrepancy tests.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Callable

import numpy as np

from .algebra import HomLieAlgebra, HomPoissonAlgebra
from .bialgebra import HomPoissonBialgebra, coboundary_bialgebra, drinfeld_double
from .kernel import qarray, qeinsum, qeye, qzeros
from .post import OOperator, self_module
from .reps import adjoint_module

FIXTURE_DIR = Path(__file__).with_name("fixtures")


def _poisson(alpha, mul, bracket) -> HomPoissonAlgebra:
    return HomPoissonAlgebra(qarray(alpha), qarray(mul), qarray(bracket))


def _diag(*vals) -> np.ndarray:
    return qarray(np.diag([Fraction(v) for v in vals]))


def _lie_pair(n: int, i: int, j: int, k: int, c=1) -> np.ndarray:
    b = qzeros((n, n, n))
    b[i, j, k] = c
    b[j, i, k] = -c
    return b


def yau_twist(alpha, mul, bracket) -> HomPoissonAlgebra:
    """``(alpha, alpha o mul, alpha o bracket)`` for a morphism ``alpha``."""
    alpha = qarray(alpha)
    return HomPoissonAlgebra(
        alpha, qeinsum("abm,km->abk", qarray(mul), alpha), qeinsum("abm,km->abk", qarray(bracket), alpha)
    )


# -- algebras --------------------------------------------------------------------------


def line() -> HomPoissonAlgebra:
    """``e o e = e`` in dimension 1."""
    m = qzeros((1, 1, 1))
    m[0, 0, 0] = 1
    return _poisson(qeye(1), m, qzeros((1, 1, 1)))


def abelian(n: int = 2) -> HomPoissonAlgebra:
    return HomPoissonAlgebra.zero(n)


def nonab2() -> HomPoissonAlgebra:
    """``[e1, e2] = e2``, zero product."""
    return _poisson(qeye(2), qzeros((2, 2, 2)), _lie_pair(2, 0, 1, 1))


def p3() -> HomPoissonAlgebra:
    """``x o x = z`` and ``{x, y} = y``."""
    m = qzeros((3, 3, 3))
    m[0, 0, 2] = 1
    return _poisson(qeye(3), m, _lie_pair(3, 0, 1, 1))


def yau_q(q=Fraction(1, 2)) -> HomPoissonAlgebra:
    """``e1 e1 = e1``, ``e1 e2 = e2 e1 = q e2`` with ``alpha = diag(1, q)``."""
    q = Fraction(q)
    m = qzeros((2, 2, 2))
    m[0, 0, 0] = 1
    m[0, 1, 1] = m[1, 0, 1] = q
    return _poisson(_diag(1, q), m, qzeros((2, 2, 2)))


def yau_lie2() -> HomPoissonAlgebra:
    """``[e1, e2] = 2 e2`` twisted by ``diag(1, 2)``."""
    return _poisson(_diag(1, 2), qzeros((2, 2, 2)), _lie_pair(2, 0, 1, 1, 2))


def centroid_nonab2() -> HomPoissonAlgebra:
    """``nonab2`` plus a central ``w`` with ``alpha(w) = -w``."""
    return _poisson(_diag(1, 1, -1), qzeros((3, 3, 3)), _lie_pair(3, 0, 1, 1))


def centroid_line() -> HomPoissonAlgebra:
    """``line`` plus a null ``w`` with ``alpha(w) = -w``."""
    m = qzeros((2, 2, 2))
    m[0, 0, 0] = 1
    return _poisson(_diag(1, -1), m, qzeros((2, 2, 2)))


def stretch3() -> HomPoissonAlgebra:
    """``[e1, e2] = e2``, ``[e1, e3] = -e3`` with the automorphism ``diag(1, 2, 1/2)``."""
    return _poisson(_diag(1, 2, Fraction(1, 2)), qzeros((3, 3, 3)), _lie_pair(3, 0, 1, 1) - _lie_pair(3, 0, 2, 2))


def yau_nonab2_flip() -> HomPoissonAlgebra:
    return yau_twist(_diag(1, -1), qzeros((2, 2, 2)), _lie_pair(2, 0, 1, 1))


def yau_p3_flip() -> HomPoissonAlgebra:
    p = p3()
    return yau_twist(_diag(1, -1, 1), p.mul, p.bracket)


ALGEBRAS: dict[str, Callable[[], HomPoissonAlgebra]] = {
    "line": line,
    "abelian2": abelian,
    "nonab2": nonab2,
    "p3": p3,
    "yau-q": yau_q,
    "yau-lie2": yau_lie2,
    "centroid-nonab2": centroid_nonab2,
    "centroid-line": centroid_line,
    "stretch3": stretch3,
    "yau-nonab2-flip": yau_nonab2_flip,
    "yau-p3-flip": yau_p3_flip,
}

# twists for which the double is defined and behaves classically
DOUBLE_READY = ("line", "abelian2", "nonab2", "p3", "centroid-nonab2", "centroid-line")


# -- bialgebras ------------------------------------------------------------------------


def skew(n: int, i: int = 0, j: int = 1) -> np.ndarray:
    """``e_i (x) e_j - e_j (x) e_i``."""
    r = qzeros((n, n))
    r[i, j] = 1
    r[j, i] = -1
    return r


def trivial_bialgebra(P: HomPoissonAlgebra) -> HomPoissonBialgebra:
    n = P.dim
    return HomPoissonBialgebra(P, qzeros((n, n, n)), qzeros((n, n, n)))


def bialgebras() -> dict[str, HomPoissonBialgebra]:
    """Bialgebra fixtures on which the double is defined."""
    out = {f"{name}-trivial": trivial_bialgebra(ALGEBRAS[name]()) for name in DOUBLE_READY}
    out["nonab2-skew"] = coboundary_bialgebra(nonab2(), skew(2))
    out["centroid-nonab2-skew"] = coboundary_bialgebra(centroid_nonab2(), skew(3))
    return out


def dual_numbers() -> HomPoissonAlgebra:
    """``e1 e1 = e1``, ``e1 e2 = e2 e1 = e2``, zero bracket."""
    m = qzeros((2, 2, 2))
    m[0, 0, 0] = m[0, 1, 1] = m[1, 0, 1] = 1
    return _poisson(qeye(2), m, qzeros((2, 2, 2)))


def quasitriangular() -> dict[str, tuple[HomPoissonBialgebra, np.ndarray]]:
    """``(B, r)`` pairs with ``B`` the coboundary bialgebra of ``r``."""
    out = {"nonab2-skew": (coboundary_bialgebra(nonab2(), skew(2)), skew(2))}
    # e2 (x) e2 is symmetric, so the dual product is nonzero
    r = qzeros((2, 2))
    r[1, 1] = 1
    out["dual-numbers-e2e2"] = (coboundary_bialgebra(dual_numbers(), r), r)
    for name in ("line", "nonab2"):
        PD, r = drinfeld_double(trivial_bialgebra(ALGEBRAS[name]()))
        out[f"double-{name}"] = (coboundary_bialgebra(PD, r), r)
    return out


def fixture_path(name: str) -> Path:
    """Path of a shipped structure file."""
    return FIXTURE_DIR / f"{name}.json"


def broken_lie() -> HomLieAlgebra:
    """A bracket with ``[e1, e2] = e2`` but ``[e2, e1] = 0``."""
    b = qzeros((2, 2, 2))
    b[0, 1, 1] = 1
    return HomLieAlgebra(qeye(2), b)


def rb_identity(P: HomPoissonAlgebra) -> OOperator:
    """``R = id`` of weight ``-1`` on the self-module."""
    return OOperator(qeye(P.dim), Fraction(-1), self_module(P))


def write_fixtures(directory=FIXTURE_DIR) -> list[Path]:
    """Regenerate the shipped structure and search-spec files."""
    from .structfile import save_structure

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []

    def save(name, obj, r=None):
        path = directory / f"{name}.json"
        save_structure(obj, path, r=r)
        written.append(path)

    for name, make in ALGEBRAS.items():
        save(name, make())
    save("broken-lie", broken_lie())
    for name, B in bialgebras().items():
        r = skew(B.dim) if name.endswith("-skew") else None
        save(f"bialgebra-{name}", B, r)
    save("module-adjoint-p3", adjoint_module(p3()))
    save("o-operator-nonab2-identity", rb_identity(nonab2()))
    specs = {
        "search-chybe-nonab2": {"target": "chybe", "fixture": "nonab2.json", "grid": [-1, 0, 1]},
        "search-chybe-abelian2": {"target": "chybe", "fixture": "abelian2.json", "grid": [-1, 0, 1]},
        "search-rota-baxter-p3": {"target": "rota-baxter", "fixture": "p3.json", "grid": [0, 1], "weight": -1},
    }
    for name, spec in specs.items():
        path = directory / f"{name}.json"
        path.write_text(json.dumps(spec, indent=2) + "\n")
        written.append(path)
    return written
