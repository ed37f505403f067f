"""Module Hom-Poisson algebras, O-operators and post-Hom-Poisson algebras.

Residuals over three inputs are indexed ``[x, y, z, k]`` in the order the
variables appear in the identity's name; actions keep the ``s[x, u, v]``
layout of :mod:`hompoisson.reps`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algebra import (
    HomAssocAlgebra,
    HomLieAlgebra,
    HomPoissonAlgebra,
    Residual,
    check_hom_poisson,
    failures,
    prefixed,
)
from .bialgebra import (
    HomPoissonBialgebra,
    check_coboundary_conditions,
    chybe_residual,
    coboundary_Delta,
    coboundary_delta,
    haybe_residual,
)
from .errors import CoalgebraMismatch, InvalidModule, InvalidOOperator, NotQuasitriangular, ShapeError
from .kernel import block_diag, dual_action, dual_map, equal, frozen, qarray, qeinsum, qzeros, to_fraction
from .reps import PoissonModule, check_assoc_rep, check_lie_rep, check_poisson_module, equivariance


def _swap(c: np.ndarray) -> np.ndarray:
    return qeinsum("yxk->xyk", c)


# -- module Hom-Poisson algebras ---------------------------------------------------


def _derivation(alpha, beta, op, s) -> np.ndarray:
    """``s(alpha x)(u . v) - (s(x)u) . beta(v) - beta(u) . (s(x)v)``, indexed ``[x, u, v, k]``."""
    return (
        qeinsum("px,uvm,pmk->xuvk", alpha, op, s)
        - qeinsum("xua,qv,aqk->xuvk", s, beta, op)
        - qeinsum("pu,xvb,pbk->xuvk", beta, s, op)
    )


def check_l_hom_lie_algebra(L: HomLieAlgebra, Lp: HomLieAlgebra, rho) -> list[Residual]:
    """``rho`` is a representation of ``L`` on ``Lp`` acting by twisted derivations."""
    rho = qarray(rho)
    if rho.shape != (L.dim, Lp.dim, Lp.dim):
        raise ShapeError(f"rho must have shape {(L.dim, Lp.dim, Lp.dim)}, got {rho.shape}", tensor="rho")
    return prefixed("rep:", check_lie_rep(L, rho, Lp.alpha)) + [
        Residual("derivation", _derivation(L.alpha, Lp.alpha, Lp.bracket, rho))
    ]


def check_module_hom_algebra(A: HomAssocAlgebra, R: HomAssocAlgebra, mu) -> list[Residual]:
    mu = qarray(mu)
    if mu.shape != (A.dim, R.dim, R.dim):
        raise ShapeError(f"mu must have shape {(A.dim, R.dim, R.dim)}, got {mu.shape}", tensor="mu")
    beta = R.alpha
    return prefixed("rep:", check_assoc_rep(A, mu, beta)) + [
        Residual(
            "product-compat",
            qeinsum("px,uvm,pmk->xuvk", A.alpha, R.mul, mu) - qeinsum("xua,qv,aqk->xuvk", mu, beta, R.mul),
        ),
        Residual("equivariance", equivariance(A.alpha, beta, mu)),
    ]


@dataclass(frozen=True)
class ModuleHomPoisson:
    """``V`` with its own Hom-Poisson structure, acted on by ``base`` through ``S`` and ``T``."""

    base: HomPoissonAlgebra
    V: HomPoissonAlgebra
    S: np.ndarray
    T: np.ndarray

    def __post_init__(self):
        want = (self.base.dim, self.V.dim, self.V.dim)
        for name in ("S", "T"):
            s = qarray(getattr(self, name))
            if s.shape != want:
                raise ShapeError(f"{name} must have shape {want}, got {s.shape}", tensor=name)
            object.__setattr__(self, name, frozen(s))

    @property
    def beta(self) -> np.ndarray:
        return self.V.alpha

    @property
    def poisson_module(self) -> PoissonModule:
        return PoissonModule(self.base, self.beta, self.S, self.T)


def self_module(P: HomPoissonAlgebra) -> ModuleHomPoisson:
    """``(P, [,], o, ad, L, alpha)`` over itself."""
    return ModuleHomPoisson(P, P, P.bracket, P.mul)


def check_module_hom_poisson(M: ModuleHomPoisson) -> list[Residual]:
    P, V = M.base, M.V
    a, b = P.alpha, M.beta
    mixed = (
        qeinsum("pu,xvb,pbk->xuvk", b, M.T, V.bracket)
        + qeinsum("xua,qv,aqk->xuvk", M.S, b, V.mul)
        - qeinsum("px,uvm,pmk->xuvk", a, V.bracket, M.T)
    )
    return (
        prefixed("V:", check_hom_poisson(V))
        + prefixed("lie-module:", check_l_hom_lie_algebra(P.lie, V.lie, M.S))
        + prefixed("assoc-module:", check_module_hom_algebra(P.assoc, V.assoc, M.T))
        + prefixed("module:", check_poisson_module(M.poisson_module))
        + [
            Residual("S-equivariance", equivariance(a, b, M.S)),
            Residual("T-equivariance", equivariance(a, b, M.T)),
            Residual("S-product-derivation", _derivation(a, b, V.mul, M.S)),
            Residual("bracket-T", mixed),
        ]
    )


def module_semidirect(M: ModuleHomPoisson) -> HomPoissonAlgebra:
    """``P + V`` with ``[(x,u),(y,v)] = ([x,y], S(x)v - S(y)u + [u,v]_1)`` and
    ``(x,u) o (y,v) = (xy, T(x)v + T(y)u + u o_1 v)``."""
    P, V = M.base, M.V
    n, m = P.dim, V.dim
    br = qzeros((n + m,) * 3)
    mul = qzeros((n + m,) * 3)
    br[:n, :n, :n] = P.bracket
    mul[:n, :n, :n] = P.mul
    br[n:, n:, n:] = V.bracket
    mul[n:, n:, n:] = V.mul
    br[:n, n:, n:] = M.S
    br[n:, :n, n:] = -np.transpose(M.S, (1, 0, 2))
    mul[:n, n:, n:] = M.T
    mul[n:, :n, n:] = np.transpose(M.T, (1, 0, 2))
    return HomPoissonAlgebra(block_diag(P.alpha, M.beta), mul, br)


# -- post structures ---------------------------------------------------------------


def check_post_hom_lie(lie, diamond, alpha) -> list[Residual]:
    a, br, dm = qarray(alpha), qarray(lie), qarray(diamond)
    j = qeinsum("xym,pz,mpk->xyzk", br, a, br)
    return [
        Residual("antisymmetry", br + _swap(br)),
        Residual("hom-jacobi", j + qeinsum("zxyk->xyzk", j) + qeinsum("yzxk->xyzk", j)),
        Residual(
            "diamond-rep",
            qeinsum("pz,yxm,pmk->xyzk", a, dm, dm)
            - qeinsum("py,zxm,pmk->xyzk", a, dm, dm)
            + qeinsum("yzm,px,mpk->xyzk", dm - _swap(dm) + br, a, dm),
        ),
        Residual(
            "diamond-derivation",
            qeinsum("pz,xym,pmk->xyzk", a, br, dm)
            - qeinsum("zxm,py,mpk->xyzk", dm, a, br)
            - qeinsum("px,zym,pmk->xyzk", a, dm, br),
        ),
    ]


def check_comm_dendriform(dot, succ, alpha) -> list[Residual]:
    a, dt, sc = qarray(alpha), qarray(dot), qarray(succ)
    total = sc + _swap(sc) + dt
    return [
        Residual("dot-commutativity", dt - _swap(dt)),
        Residual(
            "dot-hom-associativity",
            qeinsum("xym,pz,mpk->xyzk", dt, a, dt) - qeinsum("px,yzm,pmk->xyzk", a, dt, dt),
        ),
        Residual(
            "succ-rep",
            qeinsum("xym,pz,mpk->xyzk", total, a, sc) - qeinsum("px,yzm,pmk->xyzk", a, sc, sc),
        ),
        Residual(
            "succ-dot",
            qeinsum("xym,pz,mpk->xyzk", sc, a, dt) - qeinsum("px,yzm,pmk->xyzk", a, dt, sc),
        ),
    ]


@dataclass(frozen=True)
class PostHomPoisson:
    alpha: np.ndarray
    lie: np.ndarray
    diamond: np.ndarray
    dot: np.ndarray
    succ: np.ndarray

    def __post_init__(self):
        alpha = qarray(self.alpha)
        if alpha.ndim != 2 or alpha.shape[0] != alpha.shape[1]:
            raise ShapeError(f"alpha must be square, got {alpha.shape}", tensor="alpha")
        object.__setattr__(self, "alpha", frozen(alpha))
        n = alpha.shape[0]
        for name in ("lie", "diamond", "dot", "succ"):
            c = qarray(getattr(self, name))
            if c.shape != (n, n, n):
                raise ShapeError(f"{name} must have shape {(n, n, n)}, got {c.shape}", tensor=name)
            object.__setattr__(self, name, frozen(c))

    @property
    def dim(self) -> int:
        return self.alpha.shape[0]


def check_post_hom_poisson(Q: PostHomPoisson) -> list[Residual]:
    a, br, dm, dt, sc = Q.alpha, Q.lie, Q.diamond, Q.dot, Q.succ
    return (
        prefixed("post-lie:", check_post_hom_lie(br, dm, a))
        + prefixed("dendriform:", check_comm_dendriform(dt, sc, a))
        + [
            Residual(
                "lie-dot-leibniz",
                qeinsum("px,yzm,pmk->xyzk", a, dt, br)
                - qeinsum("xym,pz,mpk->xyzk", br, a, dt)
                - qeinsum("py,xzm,pmk->xyzk", a, br, dt),
            ),
            Residual(
                "lie-succ",
                qeinsum("px,zym,pmk->xyzk", a, sc, br)
                - qeinsum("pz,xym,pmk->xyzk", a, br, sc)
                + qeinsum("py,zxm,pmk->xyzk", a, dm, dt),
            ),
            Residual(
                "diamond-dot",
                qeinsum("px,yzm,pmk->xyzk", a, dt, dm)
                - qeinsum("xym,pz,mpk->xyzk", dm, a, dt)
                - qeinsum("py,xzm,pmk->xyzk", a, dm, dt),
            ),
            Residual(
                "circ-diamond",
                qeinsum("yzm,px,mpk->xyzk", sc + _swap(sc) + dt, a, dm)
                - qeinsum("pz,yxm,pmk->xyzk", a, dm, sc)
                - qeinsum("py,zxm,pmk->xyzk", a, dm, sc),
            ),
            Residual(
                "diamond-succ",
                qeinsum("px,zym,pmk->xyzk", a, sc, dm)
                - qeinsum("pz,xym,pmk->xyzk", a, dm, sc)
                - qeinsum("xzm,py,mpk->xyzk", dm - _swap(dm) + br, a, sc),
            ),
        ]
    )


def associated_hom_poisson(Q: PostHomPoisson) -> HomPoissonAlgebra:
    """``{x,y} = x<>y - y<>x + [x,y]`` and ``x o y = x>y + y>x + x.y``."""
    return HomPoissonAlgebra(
        Q.alpha,
        Q.succ + _swap(Q.succ) + Q.dot,
        Q.diamond - _swap(Q.diamond) + Q.lie,
    )


# -- O-operators -------------------------------------------------------------------


@dataclass(frozen=True)
class OOperator:
    R: np.ndarray
    weight: Fraction
    module: ModuleHomPoisson

    def __post_init__(self):
        R = qarray(self.R)
        want = (self.module.base.dim, self.module.V.dim)
        if R.shape != want:
            raise ShapeError(f"R must have shape {want}, got {R.shape}", tensor="R")
        object.__setattr__(self, "R", frozen(R))
        object.__setattr__(self, "weight", to_fraction(self.weight))


def _o_residuals(R, lam, M: ModuleHomPoisson) -> list[Residual]:
    P, V = M.base, M.V
    out = []
    for label, op, act, own, sign in (
        ("bracket", P.bracket, M.S, V.bracket, -1),
        ("product", P.mul, M.T, V.mul, 1),
    ):
        lhs = qeinsum("au,bv,abk->uvk", R, R, op)
        inner = qeinsum("au,avw->uvw", R, act) + sign * qeinsum("av,auw->uvw", R, act) + lam * own
        out.append(Residual(label, lhs - qeinsum("uvw,kw->uvk", inner, R)))
    return [Residual("twist", P.alpha.dot(R) - R.dot(M.beta))] + out


def check_o_operator(O: OOperator) -> list[Residual]:
    bad = failures(check_module_hom_poisson(O.module))
    if bad:
        raise InvalidModule(f"module fails {bad[0].label} at {bad[0].witness}", residual=bad[0])
    return _o_residuals(O.R, O.weight, O.module)


def check_rota_baxter(P: HomPoissonAlgebra, R, weight) -> list[Residual]:
    """Rota-Baxter identities of ``R`` on ``P``; the O-operator battery on the self-module."""
    R = qarray(R)
    if R.shape != (P.dim, P.dim):
        raise ShapeError(f"R must have shape {(P.dim, P.dim)}, got {R.shape}", tensor="R")
    return _o_residuals(R, to_fraction(weight), self_module(P))


def post_from_o_operator(O: OOperator) -> PostHomPoisson:
    bad = failures(check_o_operator(O))
    if bad:
        raise InvalidOOperator(f"{bad[0].label} fails at {bad[0].witness}", residual=bad[0])
    M, R, lam = O.module, O.R, O.weight
    return PostHomPoisson(
        M.beta,
        lam * M.V.bracket,
        qeinsum("au,avk->uvk", R, M.S),
        lam * M.V.mul,
        qeinsum("au,avk->uvk", R, M.T),
    )


# -- quasitriangular structures ------------------------------------------------------


def symmetric_parts(r) -> tuple[np.ndarray, np.ndarray]:
    """Skew part ``(r - tau r)/2`` and symmetric part ``(r + tau r)/2``."""
    r = qarray(r)
    return qarray((r - r.T) / 2), qarray((r + r.T) / 2)


def as_map(r) -> np.ndarray:
    """``r`` as the map ``P* -> P``, ``<r(a*), b*> = <a* (x) b*, r>``."""
    return qarray(qarray(r).T)


def check_quasitriangular(B: HomPoissonBialgebra, r) -> list[Residual]:
    P = B.P
    if not (equal(B.delta, coboundary_delta(P, r)) and equal(B.Delta, coboundary_Delta(P, r))):
        raise CoalgebraMismatch("the cooperations are not the coboundary ones of r")
    return [
        Residual("chybe", chybe_residual(P.lie, r)),
        Residual("haybe", haybe_residual(P.assoc, r, "standard")),
    ] + prefixed("bialgebra:", check_coboundary_conditions(P, r))


def _require_quasitriangular(B: HomPoissonBialgebra, r) -> None:
    bad = failures(check_quasitriangular(B, r))
    if bad:
        raise NotQuasitriangular(f"{bad[0].label} fails at {bad[0].witness}", residual=bad[0])


def _dual_ops(P: HomPoissonAlgebra, r) -> tuple[np.ndarray, np.ndarray]:
    _, psi = symmetric_parts(r)
    m = as_map(psi)
    return (
        -2 * qeinsum("ja,jbk->abk", m, dual_action(P.bracket)),
        2 * qeinsum("ja,jbk->abk", m, dual_action(P.mul)),
    )


def quasitriangular_dual_module(B: HomPoissonBialgebra, r) -> tuple[ModuleHomPoisson, OOperator]:
    """``(P*, {,}, ., ad*, -L*, alpha*)`` and ``r`` as an O-operator of weight 1 on it."""
    _require_quasitriangular(B, r)
    P = B.P
    bracket, dot = _dual_ops(P, r)
    M = ModuleHomPoisson(P, HomPoissonAlgebra(dual_map(P.alpha), dot, bracket), dual_action(P.bracket), -dual_action(P.mul))
    return M, OOperator(as_map(r), Fraction(1), M)


def post_from_quasitriangular(B: HomPoissonBialgebra, r) -> PostHomPoisson:
    _require_quasitriangular(B, r)
    P = B.P
    bracket, dot = _dual_ops(P, r)
    m = as_map(r)
    return PostHomPoisson(
        dual_map(P.alpha),
        bracket,
        qeinsum("ja,jbk->abk", m, dual_action(P.bracket)),
        dot,
        -qeinsum("ja,jbk->abk", m, dual_action(P.mul)),
    )
