"""Hom-Poisson coalgebras and bialgebras, coboundary structures and the double.

Elements of ``P (x) P`` are matrices ``t[i, j]``; a cooperation ``d[k, i, j]``
stores ``delta(e_k)``.  Residuals of identities in ``P (x) P`` are indexed
``[x, y, i, j]`` (inputs first), those in ``P (x) P (x) P`` ``[x, i, j, k]``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import HomPoissonAlgebra, Residual, check_hom_poisson, failures, prefixed
from .errors import InvalidBialgebra, RNotAlphaInvariant, ShapeError
from .kernel import block_diag, dual_map, frozen, leg_product, qarray, qeinsum, qzeros, unitize
from .matched import (
    check_manin_triple,
    check_matched_pair_poisson,
    coadjoint_pair,
    standard_manin_triple,
)

HAYBE_VARIANTS = ("standard", "as-printed")
COCYCLE_VARIANTS = ("twisted", "as-printed")


def _costructure(name: str, d, n: int) -> np.ndarray:
    d = qarray(d)
    if d.shape != (n, n, n):
        raise ShapeError(f"{name} must have shape {(n, n, n)}, got {d.shape}", tensor=name)
    return frozen(d)


def _rtensor(r, n: int) -> np.ndarray:
    r = qarray(r)
    if r.shape != (n, n):
        raise ShapeError(f"r must have shape {(n, n)}, got {r.shape}", tensor="r")
    return r


def dualize_costructure(d) -> np.ndarray:
    """``c*[i, j, k] = d[k, i, j]``: the operation induced on the dual space."""
    return qeinsum("kij->ijk", qarray(d))


def costructure_of(c) -> np.ndarray:
    """Inverse of :func:`dualize_costructure`."""
    return qeinsum("ijk->kij", qarray(c))


@dataclass(frozen=True)
class HomPoissonBialgebra:
    P: HomPoissonAlgebra
    delta: np.ndarray
    Delta: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "delta", _costructure("delta", self.delta, self.P.dim))
        object.__setattr__(self, "Delta", _costructure("Delta", self.Delta, self.P.dim))

    @property
    def dim(self) -> int:
        return self.P.dim

    def dual_algebra(self) -> HomPoissonAlgebra:
        """``(P*, [,] = delta*, o = Delta*, alpha*)``."""
        return HomPoissonAlgebra(
            dual_map(self.P.alpha), dualize_costructure(self.Delta), dualize_costructure(self.delta)
        )


def twisted_op(alpha: np.ndarray, c: np.ndarray) -> np.ndarray:
    """Operation tensor of ``x -> op(alpha x)``."""
    return qeinsum("px,pjk->xjk", alpha, c)


def _pair(op: np.ndarray, alpha: np.ndarray, t: np.ndarray, sign: int) -> np.ndarray:
    """``(op(x) (x) alpha + sign * alpha (x) op(x)) t`` for each basis ``x``.

    ``t`` is one element ``[i, j]`` or a batch ``[y, i, j]``; the basis index
    ``x`` of the operator comes first in the result.
    """
    if t.ndim == 2:
        return qeinsum("xai,ab,jb->xij", op, t, alpha) + sign * qeinsum("ia,ab,xbj->xij", alpha, t, op)
    return qeinsum("xai,yab,jb->xyij", op, t, alpha) + sign * qeinsum("ia,yab,xbj->xyij", alpha, t, op)


def _triple(op: np.ndarray, alpha: np.ndarray, t: np.ndarray, signs: tuple[int, int, int]) -> np.ndarray:
    """``(s1 op(x)(x)a(x)a + s2 a(x)op(x)(x)a + s3 a(x)a(x)op(x)) t``, indexed ``[x, i, j, k]``."""
    out = qzeros((op.shape[0],) + t.shape)
    if signs[0]:
        out = out + signs[0] * qeinsum("xai,abc,jb,kc->xijk", op, t, alpha, alpha)
    if signs[1]:
        out = out + signs[1] * qeinsum("ia,xbj,abc,kc->xijk", alpha, op, t, alpha)
    if signs[2]:
        out = out + signs[2] * qeinsum("ia,jb,abc,xck->xijk", alpha, alpha, t, op)
    return out


def check_r_alpha_invariant(alpha: np.ndarray, r) -> Residual:
    r = qarray(r)
    return Residual("r-alpha-invariant", alpha.dot(r).dot(alpha.T) - r)


def _require_invariant(P: HomPoissonAlgebra, r) -> np.ndarray:
    r = _rtensor(r, P.dim)
    res = check_r_alpha_invariant(P.alpha, r)
    if not res.ok:
        raise RNotAlphaInvariant(f"(alpha (x) alpha) r != r at index {res.witness}", residual=res)
    return r


# -- coboundaries ---------------------------------------------------------------


def coboundary_delta(P: HomPoissonAlgebra, r) -> np.ndarray:
    """``delta(x) = (ad(x) (x) alpha + alpha (x) ad(x)) r``."""
    return _pair(P.bracket, P.alpha, _require_invariant(P, r), +1)


def coboundary_Delta(P: HomPoissonAlgebra, r) -> np.ndarray:
    """``Delta(x) = (L(x) (x) alpha - alpha (x) L(x)) r``."""
    return _pair(P.mul, P.alpha, _require_invariant(P, r), -1)


def coboundary_bialgebra(P: HomPoissonAlgebra, r) -> HomPoissonBialgebra:
    return HomPoissonBialgebra(P, coboundary_delta(P, r), coboundary_Delta(P, r))


# -- cocycle conditions -----------------------------------------------------------


def check_lie_cocycle(L, delta, variant: str = "twisted") -> Residual:
    """``delta([x, y]) - ad_x delta(y) + ad_y delta(x)``.

    ``ad_x`` is ``ad(u) (x) alpha + alpha (x) ad(u)`` with ``u = alpha(x)``
    (``variant="twisted"``) or ``u = x`` (``variant="as-printed"``).
    """
    if variant not in COCYCLE_VARIANTS:
        raise ValueError(f"unknown cocycle variant {variant!r}")
    d = _costructure("delta", delta, L.dim)
    act = twisted_op(L.alpha, L.bracket) if variant == "twisted" else L.bracket
    t = _pair(act, L.alpha, d, +1)
    return Residual(
        "lie-cocycle",
        qeinsum("xym,mij->xyij", L.bracket, d) - t + qeinsum("yxij->xyij", t),
    )


def check_infinitesimal(A, Delta) -> Residual:
    """``Delta(ab) - (L(alpha a) (x) alpha) Delta(b) - (alpha (x) R(alpha b)) Delta(a)``."""
    D = _costructure("Delta", Delta, A.dim)
    left = twisted_op(A.alpha, A.mul)
    right = twisted_op(A.alpha, qeinsum("zyk->yzk", A.mul))
    return Residual(
        "infinitesimal",
        qeinsum("abm,mij->abij", A.mul, D)
        - qeinsum("aui,buv,jv->abij", left, D, A.alpha)
        - qeinsum("iu,auv,bvj->abij", A.alpha, D, right),
    )


# -- coalgebra axioms -----------------------------------------------------------


def _co_compose(first_alpha_leg: np.ndarray, outer: np.ndarray, inner: np.ndarray) -> np.ndarray:
    """``(alpha (x) inner) outer(x)``, indexed ``[x, a, b, c]``."""
    return qeinsum("au,xum,mbc->xabc", first_alpha_leg, outer, inner)


def _co_compose_last(alpha: np.ndarray, outer: np.ndarray, inner: np.ndarray) -> np.ndarray:
    """``(inner (x) alpha) outer(x)``, indexed ``[x, a, b, c]``."""
    return qeinsum("xmv,mab,cv->xabc", outer, inner, alpha)


def _co_multiplicative(alpha: np.ndarray, d: np.ndarray) -> np.ndarray:
    """``(alpha (x) alpha) d(x) - d(alpha x)``."""
    return qeinsum("ia,jb,kab->kij", alpha, alpha, d) - qeinsum("mk,mij->kij", alpha, d)


def check_poisson_coalgebra(delta, Delta, alpha, compat_twist: str = "id") -> list[Residual]:
    """Hom-Lie coalgebra axioms for ``delta``, cocommutative Hom-coassociativity
    for ``Delta``, and ``(alpha (x) Delta)delta = (delta (x) alpha)Delta + (tau (x) id)(alpha (x) delta)Delta``.

    ``compat_twist="alpha"`` replaces the last ``id`` by ``alpha``, the form used in ``W(x)``.
    """
    alpha = qarray(alpha)
    n = alpha.shape[0]
    d = _costructure("delta", delta, n)
    D = _costructure("Delta", Delta, n)
    jac = _co_compose(alpha, d, d)
    return [
        Residual("co-antisymmetry", d + qeinsum("kji->kij", d)),
        Residual("delta-co-multiplicative", _co_multiplicative(alpha, d)),
        Residual("co-hom-jacobi", jac + qeinsum("xbca->xabc", jac) + qeinsum("xcab->xabc", jac)),
        Residual("co-commutativity", D - qeinsum("kji->kij", D)),
        Residual("Delta-co-multiplicative", _co_multiplicative(alpha, D)),
        Residual("hom-coassociativity", _co_compose(alpha, D, D) - _co_compose_last(alpha, D, D)),
        Residual("coalgebra-compat", compat_residual(d, D, alpha, compat_twist)),
    ]


def compat_residual(d, D, alpha, twist: str = "id") -> np.ndarray:
    swapped = qeinsum("xbac->xabc", _co_compose(alpha, D, d))
    if twist == "alpha":
        swapped = qeinsum("xabv,cv->xabc", swapped, alpha)
    elif twist != "id":
        raise ValueError(f"unknown twist {twist!r}")
    return _co_compose(alpha, d, D) - _co_compose_last(alpha, D, d) - swapped


def w_residual(P: HomPoissonAlgebra, delta, Delta) -> np.ndarray:
    """``W(e_x) = (alpha (x) Delta)delta - (delta (x) alpha)Delta - (tau (x) alpha)(alpha (x) delta)Delta``."""
    n = P.dim
    return compat_residual(_costructure("delta", delta, n), _costructure("Delta", Delta, n), P.alpha, "alpha")


# -- bialgebra compatibilities ------------------------------------------------------


def _eq_delta_of_product(P: HomPoissonAlgebra, d, D, sign: int) -> np.ndarray:
    """``delta(x o y) - (L(alpha y) (x) alpha)delta(x) - (L(alpha x) (x) alpha)delta(y)
    - sign * ((alpha (x) ad(x))Delta(y) + (alpha (x) ad(y))Delta(x))``."""
    A = P.alpha
    la = twisted_op(A, P.mul)
    return (
        qeinsum("xym,mij->xyij", P.mul, d)
        - qeinsum("yai,xab,jb->xyij", la, d, A)
        - qeinsum("xai,yab,jb->xyij", la, d, A)
        - sign * qeinsum("ia,yab,xbj->xyij", A, D, P.bracket)
        - sign * qeinsum("ia,xab,ybj->xyij", A, D, P.bracket)
    )


def _eq_Delta_of_bracket(P: HomPoissonAlgebra, d, D) -> np.ndarray:
    """``Delta({x, y}) - (ad(alpha x)(x)alpha + alpha(x)ad(alpha x))Delta(y)
    - (L(alpha y)(x)alpha - alpha(x)L(alpha y))delta(x)``."""
    A = P.alpha
    ada = twisted_op(A, P.bracket)
    la = twisted_op(A, P.mul)
    return (
        qeinsum("xym,mij->xyij", P.bracket, D)
        - qeinsum("xai,yab,jb->xyij", ada, D, A)
        - qeinsum("ia,yab,xbj->xyij", A, D, ada)
        - qeinsum("yai,xab,jb->xyij", la, d, A)
        + qeinsum("ia,xab,ybj->xyij", A, d, la)
    )


def check_poisson_bialgebra(
    B: HomPoissonBialgebra,
    cocycle_variant: str = "twisted",
    product_sign: int = -1,
) -> list[Residual]:
    """Full battery for a Hom-Poisson bialgebra.

    ``product_sign`` is the sign in front of the ``(alpha (x) ad)Delta`` terms of
    the ``delta(x o y)`` identity.
    """
    P, d, D = B.P, B.delta, B.Delta
    return (
        prefixed("algebra:", check_hom_poisson(P))
        + prefixed("coalgebra:", check_poisson_coalgebra(d, D, P.alpha))
        + [
            check_lie_cocycle(P.lie, d, cocycle_variant),
            check_infinitesimal(P.assoc, D),
            Residual("delta-of-product", _eq_delta_of_product(P, d, D, product_sign)),
            Residual("Delta-of-bracket", _eq_Delta_of_bracket(P, d, D)),
        ]
    )


# -- Yang-Baxter residuals ---------------------------------------------------------


def chybe_residual(L, r) -> np.ndarray:
    """``C(r) = [r12, r13] + [r12, r23] + [r13, r23]``."""
    r = _rtensor(r, L.dim)
    b = L.bracket
    return leg_product(r, r, "12*13", b) + leg_product(r, r, "12*23", b) + leg_product(r, r, "13*23", b)


def haybe_residual(A, r, variant: str = "standard") -> np.ndarray:
    """``r13 r12 - r12 r23 + r23 r13`` (``standard``) or with last term ``r23 r23`` (``as-printed``).

    The printed form puts weight on the formal unit in the first slot, so it
    is returned on the unitized cube of shape ``(dim + 1,) * 3``.
    """
    r = _rtensor(r, A.dim)
    c = A.mul
    if variant == "standard":
        return leg_product(r, r, "13*12", c) - leg_product(r, r, "12*23", c) + leg_product(r, r, "23*13", c)
    if variant == "as-printed":
        return (
            leg_product(r, r, "13*12", c, keep_unit=True)
            - leg_product(r, r, "12*23", c, keep_unit=True)
            + leg_product(r, r, "23*23", c, keep_unit=True)
        )
    raise ValueError(f"unknown HAYBE variant {variant!r}")


def _unitized_maps(P: HomPoissonAlgebra, size: int) -> tuple[np.ndarray, np.ndarray]:
    if size == P.dim:
        return P.alpha, P.mul
    one = qzeros((1, 1)) + 1
    alpha = block_diag(P.alpha, one)
    return alpha, unitize(P.mul)[: P.dim]


def check_coboundary_conditions(P: HomPoissonAlgebra, r, haybe_variant: str = "standard") -> list[Residual]:
    """Residuals of the four conditions making a coboundary pair a bialgebra."""
    r = _require_invariant(P, r)
    A = P.alpha
    s = r + r.T
    Ar = haybe_residual(P.assoc, r, haybe_variant)
    ua, umul = _unitized_maps(P, Ar.shape[0])
    C = chybe_residual(P.lie, r)
    delta, Delta = coboundary_delta(P, r), coboundary_Delta(P, r)
    return [
        Residual("sym-part-ad-invariant", _pair(P.bracket, A, s, +1)),
        Residual("sym-part-L-invariant", _pair(P.mul, A, s, -1)),
        Residual("L-on-haybe", _triple(umul, ua, Ar, (1, 0, -1))),
        Residual("ad-on-chybe", _triple(P.bracket, A, C, (1, 1, 1))),
        Residual("W", w_residual(P, delta, Delta)),
    ]


# name used by the operation catalogue
check_theorem44 = check_coboundary_conditions


def coboundary_printed_readings(P: HomPoissonAlgebra, r) -> list[Residual]:
    """Literal readings kept for reporting: ``+`` in the L-invariance and the printed HAYBE."""
    r = _require_invariant(P, r)
    s = r + r.T
    Ar = haybe_residual(P.assoc, r, "as-printed")
    ua, umul = _unitized_maps(P, Ar.shape[0])
    return [
        Residual("printed:sym-part-L-plus-invariant", _pair(P.mul, P.alpha, s, +1)),
        Residual("printed:L-on-haybe", _triple(umul, ua, Ar, (1, 0, -1))),
    ]


def w_closed_form(P: HomPoissonAlgebra, r, haybe_variant: str = "standard") -> np.ndarray:
    """``-(ad(x)(x)a(x)a)A(r) + (a(x)L(x)(x)a - a(x)a(x)L(x))C(r)
    - sum_i [(ad(a_i)(x)a)(L(x)(x)a - a(x)L(x))(r + tau r)] (x) b_i``."""
    r = _rtensor(r, P.dim)
    A = P.alpha
    Ar = haybe_residual(P.assoc, r, haybe_variant)
    if Ar.shape[0] != P.dim:
        raise ValueError("closed form needs the standard HAYBE residual")
    C = chybe_residual(P.lie, r)
    m = _pair(P.mul, A, r + r.T, -1)  # [x, a, b]
    k = qeinsum("pai,xab,jb->xpij", P.bracket, m, A)
    tail = qeinsum("pq,xpij->xijq", r, k)
    return -_triple(P.bracket, A, Ar, (1, 0, 0)) + _triple(P.mul, A, C, (0, 1, -1)) - tail


# -- the double ------------------------------------------------------------------


def canonical_r(n: int) -> np.ndarray:
    """``sum_i e_i (x) e_i*`` on ``P + P*``."""
    r = qzeros((2 * n, 2 * n))
    for i in range(n):
        r[i, n + i] = 1
    return qarray(r)


def drinfeld_double(
    B: HomPoissonBialgebra, cocycle_variant: str = "twisted", product_sign: int = -1
) -> tuple[HomPoissonAlgebra, np.ndarray]:
    """``(P + P*, sum_i e_i (x) e_i*)`` built from the coadjoint matched pair."""
    bad = failures(check_poisson_bialgebra(B, cocycle_variant, product_sign))
    if bad:
        raise InvalidBialgebra(f"{bad[0].label} fails at index {bad[0].witness}", residual=bad[0])
    PD, _ = standard_manin_triple(B.P, B.dual_algebra())
    r = canonical_r(B.dim)
    res = check_r_alpha_invariant(PD.alpha, r)
    if not res.ok:
        raise RNotAlphaInvariant(
            "the canonical element is fixed by alpha + alpha* only when alpha is an involution",
            residual=res,
        )
    return PD, r


def three_way_checks(B: HomPoissonBialgebra, **kw) -> dict[str, list[Residual]]:
    """The three equivalent descriptions: bialgebra, coadjoint matched pair, standard Manin triple."""
    Pstar = B.dual_algebra()
    PD, form = standard_manin_triple(B.P, Pstar)
    n = B.dim
    return {
        "bialgebra": check_poisson_bialgebra(B, **kw),
        "matched-pair": check_matched_pair_poisson(coadjoint_pair(B.P, Pstar)),
        "manin-triple": check_manin_triple(PD, range(n), range(n, 2 * n), form),
    }
