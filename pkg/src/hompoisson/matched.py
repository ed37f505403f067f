"""Matched pairs, bicrossed sums, invariant forms and Manin triples."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .algebra import (
    HomAssocAlgebra,
    HomLieAlgebra,
    HomPoissonAlgebra,
    Residual,
    check_hom_associative,
    check_hom_lie,
    check_hom_poisson,
    check_leibniz,
    prefixed,
)
from .errors import PartitionInvalid, ShapeError
from .kernel import ONE, ZERO, block_diag, det, dual_action, dual_map, frozen, qarray, qeinsum, qzeros
from .reps import PoissonModule, check_assoc_rep, check_lie_rep, check_poisson_module, equivariance


def _action(name: str, s, n: int, m: int) -> np.ndarray:
    s = qarray(s)
    if s.shape != (n, m, m):
        raise ShapeError(f"{name} must have shape {(n, m, m)}, got {s.shape}", tensor=name)
    return frozen(s)


@dataclass(frozen=True)
class MatchedPairLie:
    L1: HomLieAlgebra
    L2: HomLieAlgebra
    rho1: np.ndarray  # L1 acting on L2
    rho2: np.ndarray  # L2 acting on L1

    def __post_init__(self):
        object.__setattr__(self, "rho1", _action("rho1", self.rho1, self.L1.dim, self.L2.dim))
        object.__setattr__(self, "rho2", _action("rho2", self.rho2, self.L2.dim, self.L1.dim))


@dataclass(frozen=True)
class MatchedPairAssoc:
    A1: HomAssocAlgebra
    A2: HomAssocAlgebra
    mu1: np.ndarray
    mu2: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "mu1", _action("mu1", self.mu1, self.A1.dim, self.A2.dim))
        object.__setattr__(self, "mu2", _action("mu2", self.mu2, self.A2.dim, self.A1.dim))


@dataclass(frozen=True)
class MatchedPairPoisson:
    P1: HomPoissonAlgebra
    P2: HomPoissonAlgebra
    rho1: np.ndarray
    mu1: np.ndarray
    rho2: np.ndarray
    mu2: np.ndarray

    def __post_init__(self):
        n1, n2 = self.P1.dim, self.P2.dim
        object.__setattr__(self, "rho1", _action("rho1", self.rho1, n1, n2))
        object.__setattr__(self, "mu1", _action("mu1", self.mu1, n1, n2))
        object.__setattr__(self, "rho2", _action("rho2", self.rho2, n2, n1))
        object.__setattr__(self, "mu2", _action("mu2", self.mu2, n2, n1))

    @property
    def lie(self) -> MatchedPairLie:
        return MatchedPairLie(self.P1.lie, self.P2.lie, self.rho1, self.rho2)

    @property
    def assoc(self) -> MatchedPairAssoc:
        return MatchedPairAssoc(self.P1.assoc, self.P2.assoc, self.mu1, self.mu2)


@dataclass(frozen=True)
class BilinearForm:
    B: np.ndarray

    def __post_init__(self):
        b = qarray(self.B)
        if b.ndim != 2 or b.shape[0] != b.shape[1]:
            raise ShapeError(f"bilinear form must be square, got {b.shape}", tensor="B")
        object.__setattr__(self, "B", frozen(b))

    @property
    def dim(self) -> int:
        return self.B.shape[0]


# -- Hom-Lie matched pairs ----------------------------------------------------


def _lie_compat(alpha_a, alpha_b, br_b, rho_a, rho_b) -> np.ndarray:
    """``rho_a(alpha x)[a, b] - [rho_a(x)a, alpha b] - [alpha a, rho_a(x)b]
    + rho_a(rho_b(a)x) alpha b - rho_a(rho_b(b)x) alpha a``, indexed ``[x, a, b, k]``."""
    return (
        qeinsum("px,abm,pmk->xabk", alpha_a, br_b, rho_a)
        - qeinsum("xam,qb,mqk->xabk", rho_a, alpha_b, br_b)
        - qeinsum("qa,xbm,qmk->xabk", alpha_b, rho_a, br_b)
        + qeinsum("axm,qb,mqk->xabk", rho_b, alpha_b, rho_a)
        - qeinsum("bxm,qa,mqk->xabk", rho_b, alpha_b, rho_a)
    )


def check_matched_pair_lie(mp: MatchedPairLie) -> list[Residual]:
    L1, L2 = mp.L1, mp.L2
    return (
        prefixed("L1:", check_hom_lie(L1))
        + prefixed("L2:", check_hom_lie(L2))
        + prefixed("rho1:", check_lie_rep(L1, mp.rho1, L2.alpha))
        + prefixed("rho2:", check_lie_rep(L2, mp.rho2, L1.alpha))
        + [
            Residual("lie-compat-1", _lie_compat(L1.alpha, L2.alpha, L2.bracket, mp.rho1, mp.rho2)),
            Residual("lie-compat-2", _lie_compat(L2.alpha, L1.alpha, L1.bracket, mp.rho2, mp.rho1)),
        ]
    )


def _bicrossed(op1, op2, act1, act2, antisymmetric: bool) -> np.ndarray:
    """Operation on ``X1 + X2`` from two operations and mutual actions.

    ``act1`` is X1 acting on X2, ``act2`` is X2 acting on X1.  The mixed terms
    are ``x . b = act1(x)b + sign * act2(b)x`` and ``a . y = act2(a)y + sign * act1(y)a``
    with ``sign = -1`` for brackets and ``+1`` for products.
    """
    n1, n2 = op1.shape[0], op2.shape[0]
    sign = -1 if antisymmetric else 1
    out = qzeros((n1 + n2,) * 3)
    out[:n1, :n1, :n1] = op1
    out[n1:, n1:, n1:] = op2
    out[:n1, n1:, n1:] = act1
    out[:n1, n1:, :n1] = sign * np.transpose(act2, (1, 0, 2))
    out[n1:, :n1, :n1] = act2
    out[n1:, :n1, n1:] = sign * np.transpose(act1, (1, 0, 2))
    return out


def bowtie_lie(mp: MatchedPairLie) -> HomLieAlgebra:
    return HomLieAlgebra(
        block_diag(mp.L1.alpha, mp.L2.alpha),
        _bicrossed(mp.L1.bracket, mp.L2.bracket, mp.rho1, mp.rho2, antisymmetric=True),
    )


# -- commutative Hom-associative matched pairs --------------------------------


def _assoc_compat(beta_a, beta_b, mul_b, mu_a, mu_b) -> np.ndarray:
    """``mu_a(beta x)(a b) - (mu_a(x)a) beta(b) - mu_a(mu_b(a)x) beta(b)``, indexed ``[x, a, b, k]``."""
    return (
        qeinsum("px,abm,pmk->xabk", beta_a, mul_b, mu_a)
        - qeinsum("xam,qb,mqk->xabk", mu_a, beta_b, mul_b)
        - qeinsum("axm,qb,mqk->xabk", mu_b, beta_b, mu_a)
    )


def check_matched_pair_assoc(mp: MatchedPairAssoc) -> list[Residual]:
    A1, A2 = mp.A1, mp.A2
    return (
        prefixed("A1:", check_hom_associative(A1, require_commutative=True))
        + prefixed("A2:", check_hom_associative(A2, require_commutative=True))
        + prefixed("mu1:", check_assoc_rep(A1, mp.mu1, A2.alpha))
        + prefixed("mu2:", check_assoc_rep(A2, mp.mu2, A1.alpha))
        + [
            Residual("mu1-equivariance", equivariance(A1.alpha, A2.alpha, mp.mu1)),
            Residual("mu2-equivariance", equivariance(A2.alpha, A1.alpha, mp.mu2)),
            Residual("assoc-compat-1", _assoc_compat(A1.alpha, A2.alpha, A2.mul, mp.mu1, mp.mu2)),
            Residual("assoc-compat-2", _assoc_compat(A2.alpha, A1.alpha, A1.mul, mp.mu2, mp.mu1)),
        ]
    )


def bowtie_assoc(mp: MatchedPairAssoc) -> HomAssocAlgebra:
    return HomAssocAlgebra(
        block_diag(mp.A1.alpha, mp.A2.alpha),
        _bicrossed(mp.A1.mul, mp.A2.mul, mp.mu1, mp.mu2, antisymmetric=False),
    )


# -- Hom-Poisson matched pairs ------------------------------------------------


def _poisson_compat_product(P_a, P_b, rho_a, mu_a, rho_b, mu_b) -> np.ndarray:
    """``rho_b(alpha a)(x y) - (rho_b(a)x) alpha(y) - alpha(x)(rho_b(a)y)
    + mu_b(rho_a(x)a) alpha(y) + mu_b(rho_a(y)a) alpha(x)``, indexed ``[a, x, y, k]``.

    Here ``x, y`` live in ``P_a`` and ``a`` in ``P_b``.
    """
    A, B = P_a.alpha, P_b.alpha
    return (
        qeinsum("qa,xym,qmk->axyk", B, P_a.mul, rho_b)
        - qeinsum("axm,qy,mqk->axyk", rho_b, A, P_a.mul)
        - qeinsum("qx,aym,qmk->axyk", A, rho_b, P_a.mul)
        + qeinsum("xam,qy,mqk->axyk", rho_a, A, mu_b)
        + qeinsum("yam,qx,mqk->axyk", rho_a, A, mu_b)
    )


def _poisson_compat_mixed(P_a, P_b, rho_a, mu_a, rho_b, mu_b) -> np.ndarray:
    """``[alpha x, mu_b(a)y] - rho_b(mu_a(y)a) alpha x - mu_b(rho_a(x)a) alpha y
    + (rho_b(a)x) alpha y - mu_b(alpha a)[x, y]``, indexed ``[x, a, y, k]``."""
    A, B = P_a.alpha, P_b.alpha
    return (
        qeinsum("px,aym,pmk->xayk", A, mu_b, P_a.bracket)
        - qeinsum("yam,px,mpk->xayk", mu_a, A, rho_b)
        - qeinsum("xam,py,mpk->xayk", rho_a, A, mu_b)
        + qeinsum("axm,py,mpk->xayk", rho_b, A, P_a.mul)
        - qeinsum("qa,xym,qmk->xayk", B, P_a.bracket, mu_b)
    )


def check_matched_pair_poisson(mp: MatchedPairPoisson) -> list[Residual]:
    P1, P2 = mp.P1, mp.P2
    return (
        prefixed("lie:", check_matched_pair_lie(mp.lie))
        + prefixed("assoc:", check_matched_pair_assoc(mp.assoc))
        + prefixed("module1:", check_poisson_module(PoissonModule(P1, P2.alpha, mp.rho1, mp.mu1)))
        + prefixed("module2:", check_poisson_module(PoissonModule(P2, P1.alpha, mp.rho2, mp.mu2)))
        + [
            Residual("P1:leibniz", check_leibniz(P1).tensor),
            Residual("P2:leibniz", check_leibniz(P2).tensor),
            Residual("compat-product-1", _poisson_compat_product(P1, P2, mp.rho1, mp.mu1, mp.rho2, mp.mu2)),
            Residual("compat-mixed-1", _poisson_compat_mixed(P1, P2, mp.rho1, mp.mu1, mp.rho2, mp.mu2)),
            Residual("compat-product-2", _poisson_compat_product(P2, P1, mp.rho2, mp.mu2, mp.rho1, mp.mu1)),
            Residual("compat-mixed-2", _poisson_compat_mixed(P2, P1, mp.rho2, mp.mu2, mp.rho1, mp.mu1)),
        ]
    )


def bowtie_poisson(mp: MatchedPairPoisson) -> HomPoissonAlgebra:
    return HomPoissonAlgebra(
        block_diag(mp.P1.alpha, mp.P2.alpha),
        _bicrossed(mp.P1.mul, mp.P2.mul, mp.mu1, mp.mu2, antisymmetric=False),
        _bicrossed(mp.P1.bracket, mp.P2.bracket, mp.rho1, mp.rho2, antisymmetric=True),
    )


def coadjoint_pair(P: HomPoissonAlgebra, Pstar: HomPoissonAlgebra) -> MatchedPairPoisson:
    """``(P, P*, ad*, -L*, ad*, -L*)`` with ``P*`` read on the dual basis."""
    if Pstar.dim != P.dim:
        raise ShapeError(f"dual algebra has dimension {Pstar.dim}, expected {P.dim}", tensor="Pstar")
    return MatchedPairPoisson(
        P,
        Pstar,
        dual_action(P.bracket),
        -dual_action(P.mul),
        dual_action(Pstar.bracket),
        -dual_action(Pstar.mul),
    )


# -- forms and Manin triples --------------------------------------------------


def hyperbolic_form(n: int) -> BilinearForm:
    """``B(x + a*, y + b*) = <x, b*> + <a*, y>`` on ``P + P*``."""
    b = qzeros((2 * n, 2 * n))
    for i in range(n):
        b[i, n + i] = ONE
        b[n + i, i] = ONE
    return BilinearForm(b)


def check_invariant_form(P: HomPoissonAlgebra, B: BilinearForm) -> list[Residual]:
    if B.dim != P.dim:
        raise ShapeError(f"form has dimension {B.dim}, algebra has {P.dim}", tensor="B")
    b, a = B.B, P.alpha
    singular = qarray([ONE if det(b) == 0 else ZERO])
    return [
        Residual("form-symmetric", b - b.T),
        Residual("form-nondegenerate", singular),
        Residual(
            "form-invariant-bracket",
            qeinsum("xym,pz,mp->xyz", P.bracket, a, b) - qeinsum("px,yzm,pm->xyz", a, P.bracket, b),
        ),
        Residual(
            "form-invariant-product",
            qeinsum("xym,pz,mp->xyz", P.mul, a, b) - qeinsum("px,yzm,pm->xyz", a, P.mul, b),
        ),
    ]


def _partition(n: int, plus: Sequence[int], minus: Sequence[int]) -> tuple[list[int], list[int]]:
    plus, minus = sorted(int(i) for i in plus), sorted(int(i) for i in minus)
    if sorted(plus + minus) != list(range(n)) or not plus or not minus:
        raise PartitionInvalid(f"index sets {plus} and {minus} do not partition range({n})")
    return plus, minus


def check_manin_triple(P: HomPoissonAlgebra, plus, minus, B: BilinearForm) -> list[Residual]:
    plus, minus = _partition(P.dim, plus, minus)
    out = prefixed("ambient:", check_hom_poisson(P))
    for name, part, other in (("plus", plus, minus), ("minus", minus, plus)):
        out += [
            Residual(f"{name}-closed-bracket", P.bracket[np.ix_(part, part, other)]),
            Residual(f"{name}-closed-product", P.mul[np.ix_(part, part, other)]),
            Residual(f"{name}-closed-twist", P.alpha[np.ix_(other, part)]),
            Residual(f"{name}-isotropic", B.B[np.ix_(part, part)]),
        ]
    return out + check_invariant_form(P, B)


def standard_manin_triple(P: HomPoissonAlgebra, Pstar: HomPoissonAlgebra) -> tuple[HomPoissonAlgebra, BilinearForm]:
    """``P + P*`` built from the coadjoint matched pair, with twist ``alpha + alpha*``.

    ``Pstar`` carries its own twist, normally ``alpha^T``.
    """
    return bowtie_poisson(coadjoint_pair(P, Pstar)), hyperbolic_form(P.dim)


def dual_twist_algebra(P: HomPoissonAlgebra, bracket, mul) -> HomPoissonAlgebra:
    """Structure on ``P*`` with the dual twist ``alpha*``."""
    return HomPoissonAlgebra(dual_map(P.alpha), mul, bracket)
