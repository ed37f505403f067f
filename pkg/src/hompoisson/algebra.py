"""Hom-associative, Hom-Lie and Hom-Poisson algebras given by structure constants.

Checkers never return booleans.  They return :class:`Residual` objects that
hold the full left-minus-right tensor of an identity, evaluated on every
tuple of basis vectors, so a failing structure can be located exactly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import ShapeError
from .kernel import first_nonzero, frozen, is_zero, qarray, qeinsum, qeye, qzeros


@dataclass(frozen=True)
class Residual:
    """Left-minus-right side of one identity over all basis tuples."""

    label: str
    tensor: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "tensor", frozen(self.tensor))

    @property
    def ok(self) -> bool:
        return is_zero(self.tensor)

    @property
    def witness(self) -> tuple[int, ...] | None:
        """Index of the first nonzero entry, ``None`` when the identity holds."""
        return first_nonzero(self.tensor)

    @property
    def nonzero_count(self) -> int:
        return sum(1 for v in self.tensor.reshape(-1) if v != 0)

    def value_at_witness(self):
        w = self.witness
        return None if w is None else self.tensor[w]


def passes(residuals: Iterable[Residual] | Residual) -> bool:
    if isinstance(residuals, Residual):
        return residuals.ok
    return all(r.ok for r in residuals)


def failures(residuals: Iterable[Residual]) -> list[Residual]:
    return [r for r in residuals if not r.ok]


def by_label(residuals: Sequence[Residual], label: str) -> Residual:
    for r in residuals:
        if r.label == label:
            return r
    raise KeyError(label)


def prefixed(prefix: str, residuals: Iterable[Residual]) -> list[Residual]:
    return [Residual(f"{prefix}{r.label}", r.tensor) for r in residuals]


def _square(name: str, m, n: int | None = None) -> np.ndarray:
    m = qarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or (n is not None and m.shape[0] != n):
        want = f"{n}x{n}" if n is not None else "square"
        raise ShapeError(f"{name} must be {want}, got shape {m.shape}", tensor=name)
    return frozen(m)


def _cube(name: str, c, n: int) -> np.ndarray:
    c = qarray(c)
    if c.shape != (n, n, n):
        raise ShapeError(f"{name} must have shape {(n, n, n)}, got {c.shape}", tensor=name)
    return frozen(c)


@dataclass(frozen=True)
class HomAssocAlgebra:
    alpha: np.ndarray
    mul: np.ndarray
    unit: np.ndarray | None = None

    def __post_init__(self):
        alpha = _square("alpha", self.alpha)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "mul", _cube("mul", self.mul, alpha.shape[0]))
        if self.unit is not None:
            u = qarray(self.unit)
            if u.shape != (alpha.shape[0],):
                raise ShapeError(f"unit must have shape {(alpha.shape[0],)}, got {u.shape}", tensor="unit")
            object.__setattr__(self, "unit", frozen(u))

    @property
    def dim(self) -> int:
        return self.alpha.shape[0]


@dataclass(frozen=True)
class HomLieAlgebra:
    alpha: np.ndarray
    bracket: np.ndarray

    def __post_init__(self):
        alpha = _square("alpha", self.alpha)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "bracket", _cube("bracket", self.bracket, alpha.shape[0]))

    @property
    def dim(self) -> int:
        return self.alpha.shape[0]


@dataclass(frozen=True)
class HomPoissonAlgebra:
    alpha: np.ndarray
    mul: np.ndarray
    bracket: np.ndarray

    def __post_init__(self):
        alpha = _square("alpha", self.alpha)
        n = alpha.shape[0]
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "mul", _cube("mul", self.mul, n))
        object.__setattr__(self, "bracket", _cube("bracket", self.bracket, n))

    @property
    def dim(self) -> int:
        return self.alpha.shape[0]

    @property
    def assoc(self) -> HomAssocAlgebra:
        return HomAssocAlgebra(self.alpha, self.mul)

    @property
    def lie(self) -> HomLieAlgebra:
        return HomLieAlgebra(self.alpha, self.bracket)

    @classmethod
    def zero(cls, n: int, alpha=None) -> "HomPoissonAlgebra":
        return cls(qeye(n) if alpha is None else alpha, qzeros((n, n, n)), qzeros((n, n, n)))


# -- residual building blocks ------------------------------------------------


def multiplicativity(alpha: np.ndarray, c: np.ndarray) -> np.ndarray:
    """``alpha(e_a * e_b) - alpha(e_a) * alpha(e_b)``, indexed ``[a, b, k]``."""
    return qeinsum("abm,km->abk", c, alpha) - qeinsum("pa,qb,pqk->abk", alpha, alpha, c)


def hom_associator(alpha: np.ndarray, c: np.ndarray) -> np.ndarray:
    """``alpha(a)(bc) - (ab)alpha(c)``, indexed ``[a, b, c, k]``."""
    return qeinsum("pa,bcm,pmk->abck", alpha, c, c) - qeinsum("abm,qc,mqk->abck", c, alpha, c)


def hom_jacobiator(alpha: np.ndarray, b: np.ndarray) -> np.ndarray:
    """``[alpha(a),[b,c]]`` summed cyclically, indexed ``[a, b, c, k]``."""
    j = qeinsum("pa,bcm,pmk->abck", alpha, b, b)
    return j + qeinsum("bcak->abck", j) + qeinsum("cabk->abck", j)


def check_hom_associative(A: HomAssocAlgebra, require_commutative: bool = False) -> list[Residual]:
    out = [
        Residual("alpha-multiplicative", multiplicativity(A.alpha, A.mul)),
        Residual("hom-associativity", hom_associator(A.alpha, A.mul)),
    ]
    if require_commutative:
        out.append(Residual("commutativity", A.mul - qeinsum("bak->abk", A.mul)))
    if A.unit is not None:
        u = A.unit
        out.append(Residual("unit-fixed", A.alpha.dot(u) - u))
        out.append(Residual("left-unit", qeinsum("i,iak->ak", u, A.mul) - A.alpha.T))
        out.append(Residual("right-unit", qeinsum("i,aik->ak", u, A.mul) - A.alpha.T))
    return out


def check_hom_lie(L: HomLieAlgebra) -> list[Residual]:
    return [
        Residual("antisymmetry", L.bracket + qeinsum("bak->abk", L.bracket)),
        Residual("alpha-bracket-morphism", multiplicativity(L.alpha, L.bracket)),
        Residual("hom-jacobi", hom_jacobiator(L.alpha, L.bracket)),
    ]


def leibniz_residual(alpha: np.ndarray, mul: np.ndarray, bracket: np.ndarray) -> np.ndarray:
    """``[alpha x, y z] - alpha(y)[x, z] - alpha(z)[x, y]``, indexed ``[x, y, z, k]``."""
    return (
        qeinsum("px,yzm,pmk->xyzk", alpha, mul, bracket)
        - qeinsum("py,xzm,pmk->xyzk", alpha, bracket, mul)
        - qeinsum("pz,xym,pmk->xyzk", alpha, bracket, mul)
    )


def check_leibniz(P: HomPoissonAlgebra) -> Residual:
    return Residual("leibniz", leibniz_residual(P.alpha, P.mul, P.bracket))


def check_hom_poisson(P: HomPoissonAlgebra) -> list[Residual]:
    return (
        prefixed("assoc:", check_hom_associative(P.assoc, require_commutative=True))
        + prefixed("lie:", check_hom_lie(P.lie))
        + [check_leibniz(P)]
    )


def morphism_residual(f: np.ndarray, src_op: np.ndarray, dst_op: np.ndarray) -> np.ndarray:
    """``f(x . y) - f(x) . f(y)`` for ``f`` mapping src coordinates to dst coordinates."""
    return qeinsum("xym,km->xyk", src_op, f) - qeinsum("px,qy,pqk->xyk", f, f, dst_op)


def check_poisson_homomorphism(f, src: HomPoissonAlgebra, dst: HomPoissonAlgebra) -> list[Residual]:
    f = qarray(f)
    if f.shape != (dst.dim, src.dim):
        raise ShapeError(f"map must have shape {(dst.dim, src.dim)}, got {f.shape}", tensor="f")
    return [
        Residual("preserves-bracket", morphism_residual(f, src.bracket, dst.bracket)),
        Residual("preserves-product", morphism_residual(f, src.mul, dst.mul)),
        Residual("commutes-with-twist", f.dot(src.alpha) - dst.alpha.dot(f)),
    ]


def opposite_bracket(P: HomPoissonAlgebra) -> HomPoissonAlgebra:
    return HomPoissonAlgebra(P.alpha, P.mul, -P.bracket)
