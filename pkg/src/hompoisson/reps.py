"""Representations, semidirect products and dual modules."""
from __future__ import annotations

from dataclasses import dataclass

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
from .errors import HypothesisViolated, ShapeError
from .kernel import block_diag, dual_action, dual_map, frozen, qarray, qeinsum, qzeros


def _action(name: str, s, n: int, m: int) -> np.ndarray:
    s = qarray(s)
    if s.shape != (n, m, m):
        raise ShapeError(f"{name} must have shape {(n, m, m)}, got {s.shape}", tensor=name)
    return frozen(s)


@dataclass(frozen=True)
class PoissonModule:
    """``(V, S, T, beta)`` over a Hom-Poisson algebra: ``S`` the Lie action, ``T`` the product action."""

    base: HomPoissonAlgebra
    beta: np.ndarray
    S: np.ndarray
    T: np.ndarray

    def __post_init__(self):
        beta = qarray(self.beta)
        if beta.ndim != 2 or beta.shape[0] != beta.shape[1]:
            raise ShapeError(f"beta must be square, got {beta.shape}", tensor="beta")
        m = beta.shape[0]
        object.__setattr__(self, "beta", frozen(beta))
        object.__setattr__(self, "S", _action("S", self.S, self.base.dim, m))
        object.__setattr__(self, "T", _action("T", self.T, self.base.dim, m))

    @property
    def vdim(self) -> int:
        return self.beta.shape[0]


def adjoint_module(P: HomPoissonAlgebra) -> PoissonModule:
    """``(P, ad, L, alpha)``: the bracket and product tensors already have action layout."""
    return PoissonModule(P, P.alpha, P.bracket, P.mul)


def coadjoint_module(P: HomPoissonAlgebra) -> PoissonModule:
    """``(P*, ad*, -L*, alpha*)``."""
    return PoissonModule(P, dual_map(P.alpha), dual_action(P.bracket), -dual_action(P.mul))


# -- identity blocks shared with the matched-pair and post-structure checks ---


def equivariance(alpha: np.ndarray, beta: np.ndarray, s: np.ndarray) -> np.ndarray:
    """``beta(s(x)v) - s(alpha x) beta(v)``, indexed ``[x, u, k]``."""
    return qeinsum("xuw,kw->xuk", s, beta) - qeinsum("px,wu,pwk->xuk", alpha, beta, s)


def op_beta(c: np.ndarray, beta: np.ndarray, s: np.ndarray) -> np.ndarray:
    """``s(x . y) beta`` applied to ``f_u``, indexed ``[x, y, u, k]``."""
    return qeinsum("xym,wu,mwk->xyuk", c, beta, s)


def compose_twisted(alpha: np.ndarray, outer: np.ndarray, inner: np.ndarray, twist_first: bool) -> np.ndarray:
    """``outer(alpha x) inner(y)`` (``twist_first``) or ``outer(alpha y) inner(x)``, indexed ``[x, y, u, k]``."""
    if twist_first:
        return qeinsum("px,yuw,pwk->xyuk", alpha, inner, outer)
    return qeinsum("py,xuw,pwk->xyuk", alpha, inner, outer)


def check_lie_rep(L: HomLieAlgebra, rho, beta) -> list[Residual]:
    beta = qarray(beta)
    rho = _action("rho", rho, L.dim, beta.shape[0])
    return [
        Residual("rep-equivariance", equivariance(L.alpha, beta, rho)),
        Residual(
            "rep-bracket",
            op_beta(L.bracket, beta, rho)
            - compose_twisted(L.alpha, rho, rho, True)
            + compose_twisted(L.alpha, rho, rho, False),
        ),
    ]


def check_assoc_rep(A: HomAssocAlgebra, mu, nu) -> list[Residual]:
    """``mu(x y) nu - mu(alpha x) mu(y)`` over basis pairs."""
    nu = qarray(nu)
    mu = _action("mu", mu, A.dim, nu.shape[0])
    return [Residual("rep-product", op_beta(A.mul, nu, mu) - compose_twisted(A.alpha, mu, mu, True))]


def check_poisson_module(M: PoissonModule) -> list[Residual]:
    P = M.base
    a, b = P.alpha, M.beta
    return (
        [
            Residual("S-equivariance", equivariance(a, b, M.S)),
            Residual("T-equivariance", equivariance(a, b, M.T)),
            Residual(
                "S-of-product",
                op_beta(P.mul, b, M.S)
                - compose_twisted(a, M.T, M.S, False)
                - compose_twisted(a, M.T, M.S, True),
            ),
            Residual(
                "T-of-bracket",
                op_beta(P.bracket, b, M.T)
                - compose_twisted(a, M.S, M.T, True)
                + compose_twisted(a, M.T, M.S, False),
            ),
        ]
        + prefixed("lie-rep:", check_lie_rep(P.lie, M.S, b))
        + prefixed("assoc-rep:", check_assoc_rep(P.assoc, M.T, b))
    )


def semidirect_product(M: PoissonModule) -> HomPoissonAlgebra:
    """``P + V`` with ``{x + u, y + v} = {x, y} + S(x)v - S(y)u`` and ``(x+u)(y+v) = xy + T(x)v + T(y)u``."""
    P = M.base
    n, m = P.dim, M.vdim
    br = qzeros((n + m,) * 3)
    mul = qzeros((n + m,) * 3)
    br[:n, :n, :n] = P.bracket
    mul[:n, :n, :n] = P.mul
    br[:n, n:, n:] = M.S
    br[n:, :n, n:] = -np.transpose(M.S, (1, 0, 2))
    mul[:n, n:, n:] = M.T
    mul[n:, :n, n:] = np.transpose(M.T, (1, 0, 2))
    return HomPoissonAlgebra(block_diag(P.alpha, M.beta), mul, br)


def dual_module_hypotheses(M: PoissonModule) -> list[Residual]:
    """Extra identities required before the dual module may be formed.

    ``beta(S(alpha x)v) = S(x)beta(v)``, ``beta(T(x)v) = T(x)beta(v)``,
    ``S(xy)beta = S(x)T(alpha y) + S(y)T(alpha x)`` and
    ``T([x, y])beta = T(y)S(alpha x) - S(x)T(alpha y)``.
    """
    P = M.base
    a, b, S, T = P.alpha, M.beta, M.S, M.T
    return [
        Residual(
            "dual:S-twisted-equivariance",
            qeinsum("px,puw,kw->xuk", a, S, b) - qeinsum("wu,xwk->xuk", b, S),
        ),
        Residual("dual:T-commutes-beta", qeinsum("xuw,kw->xuk", T, b) - qeinsum("wu,xwk->xuk", b, T)),
        Residual(
            "dual:S-of-product",
            op_beta(P.mul, b, S) - qeinsum("py,puw,xwk->xyuk", a, T, S) - qeinsum("px,puw,ywk->xyuk", a, T, S),
        ),
        Residual(
            "dual:T-of-bracket",
            op_beta(P.bracket, b, T) - qeinsum("px,puw,ywk->xyuk", a, S, T) + qeinsum("py,puw,xwk->xyuk", a, T, S),
        ),
    ]


def dual_module(M: PoissonModule) -> PoissonModule:
    """``(V*, S*, -T*, beta*)``; refuses when the extra hypotheses fail."""
    bad = failures(dual_module_hypotheses(M))
    if bad:
        r = bad[0]
        raise HypothesisViolated(f"{r.label} fails at basis index {r.witness}", residual=r)
    return PoissonModule(M.base, dual_map(M.beta), dual_action(M.S), -dual_action(M.T))


def semidirect_is_poisson(M: PoissonModule) -> bool:
    return not failures(check_hom_poisson(semidirect_product(M)))
