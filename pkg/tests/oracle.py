"""Reference implementations by explicit loops over basis vectors.

Every identity is evaluated literally: vectors are Python lists of
Fractions, operations are applied to basis vectors one at a time, and no
contraction helper from the library is used.  Results are laid out like the
library's residual tensors (input indices first, output coordinates last) so
the two can be compared entry by entry.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product

import numpy as np

ZERO = 0


def _num(v):
    # integral entries stay Python ints; exactness is unaffected and ints are far cheaper
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else v


def lst(a):
    return np.vectorize(_num, otypes=[object])(np.asarray(a, dtype=object)).tolist()


def arr(x) -> np.ndarray:
    out = np.empty(np.shape(np.array(x, dtype=object)), dtype=object)
    out[...] = np.array(x, dtype=object)
    return out


# -- vectors -------------------------------------------------------------------------


def e(n: int, i: int) -> list:
    v = [ZERO] * n
    v[i] = 1
    return v


def add(*vs) -> list:
    return [sum(c, ZERO) for c in zip(*vs)]


def sub(u, v) -> list:
    return [a - b for a, b in zip(u, v)]


def scale(c, v) -> list:
    return [c * a for a in v]


def mv(M, v) -> list:
    """``M v`` with ``M(e_j) = sum_i M[i][j] e_i``."""
    return [sum((M[i][j] * v[j] for j in range(len(v)) if v[j]), ZERO) for i in range(len(M))]


def bil(c, u, v) -> list:
    """``u . v`` for the operation with ``e_i . e_j = sum_k c[i][j][k] e_k``."""
    n_out = len(c[0][0]) if c and c[0] else 0
    out = [ZERO] * n_out
    for i, ui in enumerate(u):
        if not ui:
            continue
        for j, vj in enumerate(v):
            if not vj:
                continue
            row = c[i][j]
            for k in range(n_out):
                if row[k]:
                    out[k] += ui * vj * row[k]
    return out


def act(s, x, u) -> list:
    """``s(x) u`` for an action tensor ``s[x][u][v]``."""
    return bil(s, x, u)


def table(dims, f) -> np.ndarray:
    """``out[idx..., k] = f(*idx)[k]`` over all basis index tuples."""
    data = {}
    for idx in product(*(range(d) for d in dims)):
        data[idx] = f(*idx)
    sample = np.array(data[next(iter(data))], dtype=object) if data else np.array([], dtype=object)
    out = np.empty(tuple(dims) + sample.shape, dtype=object)
    for idx, v in data.items():
        out[idx] = np.array(v, dtype=object) if sample.shape else v
    return out


# -- tensors in V (x) V and V (x) V (x) V ------------------------------------------------


def outer2(u, v):
    return [[a * b for b in v] for a in u]


def outer3(u, v, w):
    return [[[a * b * c for c in w] for b in v] for a in u]


def apply2(f, g, t, n):
    """``(f (x) g) t`` for ``t[i][j]`` on a basis of size ``n``."""
    F = [f(e(n, i)) for i in range(n)]
    G = [g(e(n, j)) for j in range(n)]
    out = [[ZERO] * len(G[0]) for _ in range(len(F[0]))]
    for i in range(n):
        for j in range(n):
            c = t[i][j]
            if not c:
                continue
            for p, fp in enumerate(F[i]):
                if fp:
                    row = out[p]
                    for q, gq in enumerate(G[j]):
                        if gq:
                            row[q] += c * fp * gq
    return out


def apply3(f, g, h, t, n):
    F = [f(e(n, i)) for i in range(n)]
    G = [g(e(n, i)) for i in range(n)]
    H = [h(e(n, i)) for i in range(n)]
    out = [[[ZERO] * len(H[0]) for _ in range(len(G[0]))] for _ in range(len(F[0]))]
    for i, j, k in product(range(n), repeat=3):
        c = t[i][j][k]
        if not c:
            continue
        for p, fp in enumerate(F[i]):
            if not fp:
                continue
            for q, gq in enumerate(G[j]):
                if not gq:
                    continue
                row = out[p][q]
                for s_, hs in enumerate(H[k]):
                    if hs:
                        row[s_] += c * fp * gq * hs
    return out


def np_add(a, b):
    if isinstance(a, list):
        return [np_add(x, y) for x, y in zip(a, b)]
    return a + b


def np_sub(a, b):
    if isinstance(a, list):
        return [np_sub(x, y) for x, y in zip(a, b)]
    return a - b


def np_scale(c, a):
    if isinstance(a, list):
        return [np_scale(c, x) for x in a]
    return c * a


def ident(v):
    return v


# -- algebra-core --------------------------------------------------------------------------


def hom_associative(alpha, mul, commutative=False):
    a, c = lst(alpha), lst(mul)
    n = len(a)
    al = lambda v: mv(a, v)
    m = lambda u, v: bil(c, u, v)
    out = {
        "alpha-multiplicative": table((n, n), lambda x, y: sub(al(m(e(n, x), e(n, y))), m(al(e(n, x)), al(e(n, y))))),
        "hom-associativity": table(
            (n, n, n),
            lambda x, y, z: sub(m(al(e(n, x)), m(e(n, y), e(n, z))), m(m(e(n, x), e(n, y)), al(e(n, z)))),
        ),
    }
    if commutative:
        out["commutativity"] = table((n, n), lambda x, y: sub(m(e(n, x), e(n, y)), m(e(n, y), e(n, x))))
    return out


def hom_lie(alpha, bracket):
    a, b = lst(alpha), lst(bracket)
    n = len(a)
    al = lambda v: mv(a, v)
    br = lambda u, v: bil(b, u, v)

    def jac(x, y, z):
        X, Y, Z = e(n, x), e(n, y), e(n, z)
        return add(br(al(X), br(Y, Z)), br(al(Y), br(Z, X)), br(al(Z), br(X, Y)))

    return {
        "antisymmetry": table((n, n), lambda x, y: add(br(e(n, x), e(n, y)), br(e(n, y), e(n, x)))),
        "alpha-bracket-morphism": table(
            (n, n), lambda x, y: sub(al(br(e(n, x), e(n, y))), br(al(e(n, x)), al(e(n, y))))
        ),
        "hom-jacobi": table((n, n, n), jac),
    }


def leibniz(alpha, mul, bracket):
    a, c, b = lst(alpha), lst(mul), lst(bracket)
    n = len(a)
    al = lambda v: mv(a, v)
    m = lambda u, v: bil(c, u, v)
    br = lambda u, v: bil(b, u, v)

    def f(x, y, z):
        X, Y, Z = e(n, x), e(n, y), e(n, z)
        return sub(sub(br(al(X), m(Y, Z)), m(al(Y), br(X, Z))), m(al(Z), br(X, Y)))

    return table((n, n, n), f)


def hom_poisson(alpha, mul, bracket):
    out = {f"assoc:{k}": v for k, v in hom_associative(alpha, mul, True).items()}
    out.update({f"lie:{k}": v for k, v in hom_lie(alpha, bracket).items()})
    out["leibniz"] = leibniz(alpha, mul, bracket)
    return out


def poisson_homomorphism(f, src, dst):
    F = lst(f)
    ns, nd = len(F[0]), len(F)
    fm = lambda v: mv(F, v)
    out = {}
    for label, s_op, d_op in (("preserves-bracket", src.bracket, dst.bracket), ("preserves-product", src.mul, dst.mul)):
        s_op, d_op = lst(s_op), lst(d_op)
        out[label] = table(
            (ns, ns), lambda x, y: sub(fm(bil(s_op, e(ns, x), e(ns, y))), bil(d_op, fm(e(ns, x)), fm(e(ns, y))))
        )
    sa, da = lst(src.alpha), lst(dst.alpha)
    out["commutes-with-twist"] = table((nd, ns), lambda i, j: [ZERO])[..., 0]
    for i in range(nd):
        for j in range(ns):
            out["commutes-with-twist"][i, j] = fm(mv(sa, e(ns, j)))[i] - mv(da, fm(e(ns, j)))[i]
    return out


# -- modules ---------------------------------------------------------------------------------


def equivariance(alpha, beta, s):
    a, b, S = lst(alpha), lst(beta), lst(s)
    n, m = len(a), len(b)
    return table((n, m), lambda x, u: sub(mv(b, act(S, e(n, x), e(m, u))), act(S, mv(a, e(n, x)), mv(b, e(m, u)))))


def lie_rep(alpha, bracket, rho, beta):
    a, br, R, b = lst(alpha), lst(bracket), lst(rho), lst(beta)
    n, m = len(a), len(b)

    def f(x, y, u):
        X, Y, U = e(n, x), e(n, y), e(m, u)
        lhs = act(R, bil(br, X, Y), mv(b, U))
        return add(sub(lhs, act(R, mv(a, X), act(R, Y, U))), act(R, mv(a, Y), act(R, X, U)))

    return {"rep-equivariance": equivariance(alpha, beta, rho), "rep-bracket": table((n, n, m), f)}


def assoc_rep(alpha, mul, mu, nu):
    a, c, M, b = lst(alpha), lst(mul), lst(mu), lst(nu)
    n, m = len(a), len(b)

    def f(x, y, u):
        X, Y, U = e(n, x), e(n, y), e(m, u)
        return sub(act(M, bil(c, X, Y), mv(b, U)), act(M, mv(a, X), act(M, Y, U)))

    return {"rep-product": table((n, n, m), f)}


def poisson_module(P, beta, S, T):
    a, b, s, t = lst(P.alpha), lst(beta), lst(S), lst(T)
    c, br = lst(P.mul), lst(P.bracket)
    n, m = len(a), len(b)
    al = lambda v: mv(a, v)

    def s_prod(x, y, u):
        X, Y, U = e(n, x), e(n, y), e(m, u)
        r = act(s, bil(c, X, Y), mv(b, U))
        return sub(sub(r, act(t, al(Y), act(s, X, U))), act(t, al(X), act(s, Y, U)))

    def t_br(x, y, u):
        X, Y, U = e(n, x), e(n, y), e(m, u)
        r = act(t, bil(br, X, Y), mv(b, U))
        return add(sub(r, act(s, al(X), act(t, Y, U))), act(t, al(Y), act(s, X, U)))

    out = {
        "S-equivariance": equivariance(P.alpha, beta, S),
        "T-equivariance": equivariance(P.alpha, beta, T),
        "S-of-product": table((n, n, m), s_prod),
        "T-of-bracket": table((n, n, m), t_br),
    }
    out.update({f"lie-rep:{k}": v for k, v in lie_rep(P.alpha, P.bracket, S, beta).items()})
    out.update({f"assoc-rep:{k}": v for k, v in assoc_rep(P.alpha, P.mul, T, beta).items()})
    return out


def dual_module_hypotheses(P, beta, S, T):
    a, b, s, t = lst(P.alpha), lst(beta), lst(S), lst(T)
    c, br = lst(P.mul), lst(P.bracket)
    n, m = len(a), len(b)
    al = lambda v: mv(a, v)
    E, U_ = (lambda i: e(n, i)), (lambda i: e(m, i))
    return {
        "dual:S-twisted-equivariance": table(
            (n, m), lambda x, u: sub(mv(b, act(s, al(E(x)), U_(u))), act(s, E(x), mv(b, U_(u))))
        ),
        "dual:T-commutes-beta": table((n, m), lambda x, u: sub(mv(b, act(t, E(x), U_(u))), act(t, E(x), mv(b, U_(u))))),
        "dual:S-of-product": table(
            (n, n, m),
            lambda x, y, u: sub(
                sub(act(s, bil(c, E(x), E(y)), mv(b, U_(u))), act(s, E(x), act(t, al(E(y)), U_(u)))),
                act(s, E(y), act(t, al(E(x)), U_(u))),
            ),
        ),
        "dual:T-of-bracket": table(
            (n, n, m),
            lambda x, y, u: add(
                sub(act(t, bil(br, E(x), E(y)), mv(b, U_(u))), act(t, E(y), act(s, al(E(x)), U_(u)))),
                act(s, E(x), act(t, al(E(y)), U_(u))),
            ),
        ),
    }


def semidirect_product(P, beta, S, T, V=None):
    """Structure constants of ``P + V`` assembled from products of pairs of basis vectors."""
    n, m = P.dim, len(lst(beta))
    c, br, s, t = lst(P.mul), lst(P.bracket), lst(S), lst(T)
    vm = lst(V.mul) if V is not None else None
    vb = lst(V.bracket) if V is not None else None

    def split(i):
        return (e(n, i), [ZERO] * m) if i < n else ([ZERO] * n, e(m, i - n))

    def prod(i, j, bracket):
        (x, u), (y, v) = split(i), split(j)
        if bracket:
            top = bil(br, x, y)
            low = sub(act(s, x, v), act(s, y, u))
            if vb is not None:
                low = add(low, bil(vb, u, v))
        else:
            top = bil(c, x, y)
            low = add(act(t, x, v), act(t, y, u))
            if vm is not None:
                low = add(low, bil(vm, u, v))
        return top + low

    N = n + m
    alpha = [[ZERO] * N for _ in range(N)]
    for i, row in enumerate(lst(P.alpha)):
        alpha[i][:n] = row
    for i, row in enumerate(lst(beta)):
        alpha[n + i][n:] = row
    return (
        arr(alpha),
        table((N, N), lambda i, j: prod(i, j, False)),
        table((N, N), lambda i, j: prod(i, j, True)),
    )


# -- matched pairs and forms ------------------------------------------------------------------


def lie_compat(alpha_a, alpha_b, br_b, rho_a, rho_b):
    A, B, bb, ra, rb = lst(alpha_a), lst(alpha_b), lst(br_b), lst(rho_a), lst(rho_b)
    n, m = len(A), len(B)

    def f(x, p, q):
        X, a_, b_ = e(n, x), e(m, p), e(m, q)
        out = act(ra, mv(A, X), bil(bb, a_, b_))
        out = sub(out, bil(bb, act(ra, X, a_), mv(B, b_)))
        out = sub(out, bil(bb, mv(B, a_), act(ra, X, b_)))
        out = add(out, act(ra, act(rb, a_, X), mv(B, b_)))
        return sub(out, act(ra, act(rb, b_, X), mv(B, a_)))

    return table((n, m, m), f)


def matched_pair_lie(L1, L2, rho1, rho2):
    out = {f"L1:{k}": v for k, v in hom_lie(L1.alpha, L1.bracket).items()}
    out.update({f"L2:{k}": v for k, v in hom_lie(L2.alpha, L2.bracket).items()})
    out.update({f"rho1:{k}": v for k, v in lie_rep(L1.alpha, L1.bracket, rho1, L2.alpha).items()})
    out.update({f"rho2:{k}": v for k, v in lie_rep(L2.alpha, L2.bracket, rho2, L1.alpha).items()})
    out["lie-compat-1"] = lie_compat(L1.alpha, L2.alpha, L2.bracket, rho1, rho2)
    out["lie-compat-2"] = lie_compat(L2.alpha, L1.alpha, L1.bracket, rho2, rho1)
    return out


def assoc_compat(alpha_a, alpha_b, mul_b, mu_a, mu_b):
    A, B, mb, ma_, mb_ = lst(alpha_a), lst(alpha_b), lst(mul_b), lst(mu_a), lst(mu_b)
    n, m = len(A), len(B)

    def f(x, p, q):
        X, a_, b_ = e(n, x), e(m, p), e(m, q)
        out = act(ma_, mv(A, X), bil(mb, a_, b_))
        out = sub(out, bil(mb, act(ma_, X, a_), mv(B, b_)))
        return sub(out, act(ma_, act(mb_, a_, X), mv(B, b_)))

    return table((n, m, m), f)


def matched_pair_assoc(A1, A2, mu1, mu2):
    out = {f"A1:{k}": v for k, v in hom_associative(A1.alpha, A1.mul, True).items()}
    out.update({f"A2:{k}": v for k, v in hom_associative(A2.alpha, A2.mul, True).items()})
    out.update({f"mu1:{k}": v for k, v in assoc_rep(A1.alpha, A1.mul, mu1, A2.alpha).items()})
    out.update({f"mu2:{k}": v for k, v in assoc_rep(A2.alpha, A2.mul, mu2, A1.alpha).items()})
    out["mu1-equivariance"] = equivariance(A1.alpha, A2.alpha, mu1)
    out["mu2-equivariance"] = equivariance(A2.alpha, A1.alpha, mu2)
    out["assoc-compat-1"] = assoc_compat(A1.alpha, A2.alpha, A2.mul, mu1, mu2)
    out["assoc-compat-2"] = assoc_compat(A2.alpha, A1.alpha, A1.mul, mu2, mu1)
    return out


def poisson_compat(Pa, Pb, rho_a, mu_a, rho_b, mu_b):
    A, B = lst(Pa.alpha), lst(Pb.alpha)
    ma, ba = lst(Pa.mul), lst(Pa.bracket)
    ra, mua, rb, mub = lst(rho_a), lst(mu_a), lst(rho_b), lst(mu_b)
    n, m = len(A), len(B)

    def product_(p, x, y):
        a_, X, Y = e(m, p), e(n, x), e(n, y)
        out = act(rb, mv(B, a_), bil(ma, X, Y))
        out = sub(out, bil(ma, act(rb, a_, X), mv(A, Y)))
        out = sub(out, bil(ma, mv(A, X), act(rb, a_, Y)))
        out = add(out, act(mub, act(ra, X, a_), mv(A, Y)))
        return add(out, act(mub, act(ra, Y, a_), mv(A, X)))

    def mixed(x, p, y):
        X, a_, Y = e(n, x), e(m, p), e(n, y)
        out = bil(ba, mv(A, X), act(mub, a_, Y))
        out = sub(out, act(rb, act(mua, Y, a_), mv(A, X)))
        out = sub(out, act(mub, act(ra, X, a_), mv(A, Y)))
        out = add(out, bil(ma, act(rb, a_, X), mv(A, Y)))
        return sub(out, act(mub, mv(B, a_), bil(ba, X, Y)))

    return table((m, n, n), product_), table((n, m, n), mixed)


def matched_pair_poisson(P1, P2, rho1, mu1, rho2, mu2):
    out = {f"lie:{k}": v for k, v in matched_pair_lie(P1.lie, P2.lie, rho1, rho2).items()}
    out.update({f"assoc:{k}": v for k, v in matched_pair_assoc(P1.assoc, P2.assoc, mu1, mu2).items()})
    out.update({f"module1:{k}": v for k, v in poisson_module(P1, P2.alpha, rho1, mu1).items()})
    out.update({f"module2:{k}": v for k, v in poisson_module(P2, P1.alpha, rho2, mu2).items()})
    out["P1:leibniz"] = leibniz(P1.alpha, P1.mul, P1.bracket)
    out["P2:leibniz"] = leibniz(P2.alpha, P2.mul, P2.bracket)
    out["compat-product-1"], out["compat-mixed-1"] = poisson_compat(P1, P2, rho1, mu1, rho2, mu2)
    out["compat-product-2"], out["compat-mixed-2"] = poisson_compat(P2, P1, rho2, mu2, rho1, mu1)
    return out


def bicrossed(op1, op2, act1, act2, bracket: bool):
    """Operation on ``X1 + X2`` evaluated on pairs of basis vectors."""
    o1, o2, s1, s2 = lst(op1), lst(op2), lst(act1), lst(act2)
    n, m = len(o1), len(o2)
    sign = -1 if bracket else 1

    def split(i):
        return (e(n, i), [ZERO] * m) if i < n else ([ZERO] * n, e(m, i - n))

    def f(i, j):
        (x, a_), (y, b_) = split(i), split(j)
        top = add(bil(o1, x, y), act(s2, a_, y), scale(sign, act(s2, b_, x)))
        low = add(bil(o2, a_, b_), act(s1, x, b_), scale(sign, act(s1, y, a_)))
        return top + low

    return table((n + m, n + m), f)


def bilinear(B, u, v):
    return sum((B[i][j] * u[i] * v[j] for i in range(len(u)) for j in range(len(v)) if u[i] and v[j]), ZERO)


def det(M) -> Fraction:
    M = [list(map(Fraction, r)) for r in M]
    n, d = len(M), Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            d = -d
        d *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return d


def invariant_form(P, B):
    b, a = lst(B), lst(P.alpha)
    n = len(b)
    out = {
        "form-symmetric": arr([[b[i][j] - b[j][i] for j in range(n)] for i in range(n)]),
        "form-nondegenerate": arr([Fraction(1) if det(b) == 0 else ZERO]),
    }
    for label, op in (("form-invariant-bracket", lst(P.bracket)), ("form-invariant-product", lst(P.mul))):
        t = np.empty((n, n, n), dtype=object)
        for x, y, z in product(range(n), repeat=3):
            X, Y, Z = e(n, x), e(n, y), e(n, z)
            t[x, y, z] = bilinear(b, bil(op, X, Y), mv(a, Z)) - bilinear(b, mv(a, X), bil(op, Y, Z))
        out[label] = t
    return out


def manin_triple(P, plus, minus, B):
    out = {f"ambient:{k}": v for k, v in hom_poisson(P.alpha, P.mul, P.bracket).items()}
    br, c, a, b = lst(P.bracket), lst(P.mul), lst(P.alpha), lst(B)
    for name, part, other in (("plus", plus, minus), ("minus", minus, plus)):
        for label, op in (("bracket", br), ("product", c)):
            t = np.empty((len(part), len(part), len(other)), dtype=object)
            for (i, x), (j, y), (k, z) in product(enumerate(part), enumerate(part), enumerate(other)):
                t[i, j, k] = op[x][y][z]
            out[f"{name}-closed-{label}"] = t
        t = np.empty((len(other), len(part)), dtype=object)
        for (i, z), (j, x) in product(enumerate(other), enumerate(part)):
            t[i, j] = a[z][x]
        out[f"{name}-closed-twist"] = t
        t = np.empty((len(part), len(part)), dtype=object)
        for (i, x), (j, y) in product(enumerate(part), repeat=2):
            t[i, j] = b[x][y]
        out[f"{name}-isotropic"] = t
    out.update(invariant_form(P, B))
    return out


# -- coalgebras and bialgebras -----------------------------------------------------------------


def co(d, v):
    """Apply a cooperation ``d[k][i][j]`` to a vector, giving an ``n x n`` tensor."""
    n = len(d)
    out = [[ZERO] * n for _ in range(n)]
    for k, vk in enumerate(v):
        if vk:
            for i in range(n):
                for j in range(n):
                    out[i][j] += vk * d[k][i][j]
    return out


def coboundary(P, r, product: bool):
    a, rr = lst(P.alpha), lst(r)
    op = lst(P.mul if product else P.bracket)
    n = len(a)
    sign = -1 if product else 1
    al = lambda v: mv(a, v)

    def f(x):
        X = e(n, x)
        left = apply2(lambda v: bil(op, X, v), al, rr, n)
        right = apply2(al, lambda v: bil(op, X, v), rr, n)
        return np_add(left, np_scale(sign, right))

    return table((n,), f)


def lie_cocycle(alpha, bracket, delta, twisted=True):
    a, br, d = lst(alpha), lst(bracket), lst(delta)
    n = len(a)
    al = lambda v: mv(a, v)

    def adx(u, t):
        return np_add(apply2(lambda v: bil(br, u, v), al, t, n), apply2(al, lambda v: bil(br, u, v), t, n))

    def f(x, y):
        X, Y = e(n, x), e(n, y)
        ux, uy = (al(X), al(Y)) if twisted else (X, Y)
        return np_add(np_sub(co(d, bil(br, X, Y)), adx(ux, co(d, Y))), adx(uy, co(d, X)))

    return table((n, n), f)


def infinitesimal(alpha, mul, Delta):
    a, c, D = lst(alpha), lst(mul), lst(Delta)
    n = len(a)
    al = lambda v: mv(a, v)

    def f(x, y):
        X, Y = e(n, x), e(n, y)
        out = co(D, bil(c, X, Y))
        out = np_sub(out, apply2(lambda v: bil(c, al(X), v), al, co(D, Y), n))
        return np_sub(out, apply2(al, lambda v: bil(c, v, al(Y)), co(D, X), n))

    return table((n, n), f)


def _compose(first, d_outer, d_inner, n, inner_first):
    """``(first (x) d_inner) t`` or ``(d_inner (x) first) t`` for ``t = d_outer(x)``, as ``n^3`` lists."""
    out = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    imgs = [first(e(n, i)) for i in range(n)]
    cos = [co(d_inner, e(n, i)) for i in range(n)]
    for i in range(n):
        for j in range(n):
            c = d_outer[i][j]
            if not c:
                continue
            if inner_first:
                u, t = imgs[j], cos[i]
                for p, q, s in product(range(n), repeat=3):
                    out[p][q][s] += c * t[p][q] * u[s]
            else:
                u, t = imgs[i], cos[j]
                for p, q, s in product(range(n), repeat=3):
                    out[p][q][s] += c * u[p] * t[q][s]
    return out


def coalgebra_compat(x, d, D, a, twist="id"):
    """``(alpha (x) Delta)delta - (delta (x) alpha)Delta - (tau (x) t)(alpha (x) delta)Delta`` at ``e_x``,
    with ``t = id`` or ``alpha``."""
    n = len(a)
    al = lambda v: mv(a, v)
    X = e(n, x)
    sw = _compose(al, co(D, X), d, n, False)
    sw = [[[sw[j][i][k] for k in range(n)] for j in range(n)] for i in range(n)]
    if twist == "alpha":
        sw = [[al(row) for row in plane] for plane in sw]
    return np_sub(np_sub(_compose(al, co(d, X), D, n, False), _compose(al, co(D, X), d, n, True)), sw)


def poisson_coalgebra(delta, Delta, alpha, twist="id"):
    a, d, D = lst(alpha), lst(delta), lst(Delta)
    n = len(a)
    al = lambda v: mv(a, v)

    def cyc(t):
        return [[[t[i][j][k] + t[j][k][i] + t[k][i][j] for k in range(n)] for j in range(n)] for i in range(n)]

    def comult(dd):
        return table((n,), lambda x: np_sub(apply2(al, al, co(dd, e(n, x)), n), co(dd, al(e(n, x)))))

    def transpose(t):
        return [list(r) for r in zip(*t)]

    return {
        "co-antisymmetry": table((n,), lambda x: np_add(co(d, e(n, x)), transpose(co(d, e(n, x))))),
        "delta-co-multiplicative": comult(d),
        "co-hom-jacobi": table((n,), lambda x: cyc(_compose(al, co(d, e(n, x)), d, n, False))),
        "co-commutativity": table((n,), lambda x: np_sub(co(D, e(n, x)), transpose(co(D, e(n, x))))),
        "Delta-co-multiplicative": comult(D),
        "hom-coassociativity": table(
            (n,), lambda x: np_sub(_compose(al, co(D, e(n, x)), D, n, False), _compose(al, co(D, e(n, x)), D, n, True))
        ),
        "coalgebra-compat": table((n,), lambda x: coalgebra_compat(x, d, D, a, twist)),
    }

def delta_of_product(P, delta, Delta, sign):
    a, c, br, d, D = lst(P.alpha), lst(P.mul), lst(P.bracket), lst(delta), lst(Delta)
    n = len(a)
    al = lambda v: mv(a, v)

    def f(x, y):
        X, Y = e(n, x), e(n, y)
        out = co(d, bil(c, X, Y))
        out = np_sub(out, apply2(lambda v: bil(c, al(Y), v), al, co(d, X), n))
        out = np_sub(out, apply2(lambda v: bil(c, al(X), v), al, co(d, Y), n))
        extra = np_add(apply2(al, lambda v: bil(br, X, v), co(D, Y), n), apply2(al, lambda v: bil(br, Y, v), co(D, X), n))
        return np_sub(out, np_scale(sign, extra))

    return table((n, n), f)


def Delta_of_bracket(P, delta, Delta):
    a, c, br, d, D = lst(P.alpha), lst(P.mul), lst(P.bracket), lst(delta), lst(Delta)
    n = len(a)
    al = lambda v: mv(a, v)

    def f(x, y):
        X, Y = e(n, x), e(n, y)
        out = co(D, bil(br, X, Y))
        ad = lambda v: bil(br, al(X), v)
        L = lambda v: bil(c, al(Y), v)
        out = np_sub(out, np_add(apply2(ad, al, co(D, Y), n), apply2(al, ad, co(D, Y), n)))
        return np_sub(out, np_sub(apply2(L, al, co(d, X), n), apply2(al, L, co(d, X), n)))

    return table((n, n), f)


def poisson_bialgebra(P, delta, Delta, twisted=True, product_sign=-1):
    out = {f"algebra:{k}": v for k, v in hom_poisson(P.alpha, P.mul, P.bracket).items()}
    out.update({f"coalgebra:{k}": v for k, v in poisson_coalgebra(delta, Delta, P.alpha).items()})
    out["lie-cocycle"] = lie_cocycle(P.alpha, P.bracket, delta, twisted)
    out["infinitesimal"] = infinitesimal(P.alpha, P.mul, Delta)
    out["delta-of-product"] = delta_of_product(P, delta, Delta, product_sign)
    out["Delta-of-bracket"] = Delta_of_bracket(P, delta, Delta)
    return out


# -- Yang-Baxter tensors through a formal unit ------------------------------------------------


UNIT = "1"


def _embed(r, legs):
    """``r_{pq}`` as a dict from index triples (``UNIT`` in the free slot) to coefficients."""
    p, q = int(legs[0]) - 1, int(legs[1]) - 1
    out = {}
    for i, row in enumerate(r):
        for j, v in enumerate(row):
            if v:
                idx = [UNIT] * 3
                idx[p], idx[q] = i, j
                out[tuple(idx)] = out.get(tuple(idx), ZERO) + v
    return out


def _slot_product(op, u, v):
    if u == UNIT:
        return {v: 1}
    if v == UNIT:
        return {u: 1}
    return {k: c for k, c in enumerate(op[u][v]) if c}


def leg_product(r, s, left, right, op):
    """Slotwise product of ``r_left`` and ``s_right``; keys may keep ``UNIT``."""
    out = {}
    for ia, ca in _embed(r, left).items():
        for ib, cb in _embed(s, right).items():
            parts = [_slot_product(op, x, y) for x, y in zip(ia, ib)]
            for (k0, c0), (k1, c1), (k2, c2) in product(*(p.items() for p in parts)):
                key = (k0, k1, k2)
                out[key] = out.get(key, ZERO) + ca * cb * c0 * c1 * c2
    return out


def _to_cube(terms, n, unit_cube):
    size = n + 1 if unit_cube else n
    out = np.empty((size,) * 3, dtype=object)
    out[...] = ZERO
    for key, v in terms.items():
        if not v:
            continue
        idx = tuple(n if k == UNIT else k for k in key)
        if not unit_cube and n in idx:
            raise ValueError("weight on the unit")
        out[idx] += v
    return out


def _combine(*signed):
    out = {}
    for sign, terms in signed:
        for k, v in terms.items():
            out[k] = out.get(k, ZERO) + sign * v
    return out


def chybe(bracket, r):
    b, rr = lst(bracket), lst(r)
    n = len(rr)
    t = _combine(
        (1, leg_product(rr, rr, "12", "13", b)),
        (1, leg_product(rr, rr, "12", "23", b)),
        (1, leg_product(rr, rr, "13", "23", b)),
    )
    return _to_cube(t, n, False)


def haybe(mul, r, variant="standard"):
    c, rr = lst(mul), lst(r)
    n = len(rr)
    last = ("23", "13") if variant == "standard" else ("23", "23")
    t = _combine(
        (1, leg_product(rr, rr, "13", "12", c)),
        (-1, leg_product(rr, rr, "12", "23", c)),
        (1, leg_product(rr, rr, last[0], last[1], c)),
    )
    return _to_cube(t, n, variant != "standard")


def _unit_ops(P, size):
    """``alpha`` and left multiplications extended by a formal unit when ``size > dim``."""
    n = P.dim
    a, c = lst(P.alpha), lst(P.mul)
    if size == n:
        return (lambda v: mv(a, v)), (lambda x, v: bil(c, e(n, x), v))

    def al(v):
        return mv(a, v[:n]) + [v[n]]

    def L(x, v):
        # e_x times (w + t 1) = e_x w + t e_x
        return add(bil(c, e(n, x), v[:n]), scale(v[n], e(n, x))) + [ZERO]

    return al, L


def coboundary_conditions(P, r, variant="standard", printed=False):
    a, br, rr = lst(P.alpha), lst(P.bracket), lst(r)
    n = len(a)
    al = lambda v: mv(a, v)
    s = [[rr[i][j] + rr[j][i] for j in range(n)] for i in range(n)]
    Ar = haybe(P.mul, r, "as-printed" if printed else variant)
    size = Ar.shape[0]
    ual, uL = _unit_ops(P, size)
    A_l = lst(Ar)

    def l_on_haybe(x):
        return np_sub(
            apply3(lambda v: uL(x, v), ual, ual, A_l, size), apply3(ual, ual, lambda v: uL(x, v), A_l, size)
        )

    def mul_sym(x, sign):
        c = lst(P.mul)
        X = e(n, x)
        return np_add(apply2(lambda v: bil(c, X, v), al, s, n), np_scale(sign, apply2(al, lambda v: bil(c, X, v), s, n)))

    if printed:
        return {
            "printed:sym-part-L-plus-invariant": table((n,), lambda x: mul_sym(x, 1)),
            "printed:L-on-haybe": table((n,), l_on_haybe),
        }
    C = lst(chybe(P.bracket, r))

    def ad_sym(x):
        X = e(n, x)
        return np_add(apply2(lambda v: bil(br, X, v), al, s, n), apply2(al, lambda v: bil(br, X, v), s, n))

    def ad_on_chybe(x):
        ad = lambda v: bil(br, e(n, x), v)
        return np_add(np_add(apply3(ad, al, al, C, n), apply3(al, ad, al, C, n)), apply3(al, al, ad, C, n))

    d = lst(coboundary(P, r, False))
    D = lst(coboundary(P, r, True))
    return {
        "sym-part-ad-invariant": table((n,), ad_sym),
        "sym-part-L-invariant": table((n,), lambda x: mul_sym(x, -1)),
        "L-on-haybe": table((n,), l_on_haybe),
        "ad-on-chybe": table((n,), ad_on_chybe),
        "W": table((n,), lambda x: coalgebra_compat(x, d, D, a, "alpha")),
    }


# -- post structures and O-operators -----------------------------------------------------------


def derivation(alpha, beta, op, s):
    a, b, o, S = lst(alpha), lst(beta), lst(op), lst(s)
    n, m = len(a), len(b)

    def f(x, u, v):
        X, U, V = e(n, x), e(m, u), e(m, v)
        out = act(S, mv(a, X), bil(o, U, V))
        out = sub(out, bil(o, act(S, X, U), mv(b, V)))
        return sub(out, bil(o, mv(b, U), act(S, X, V)))

    return table((n, m, m), f)


def l_hom_lie_algebra(L, Lp, rho):
    out = {f"rep:{k}": v for k, v in lie_rep(L.alpha, L.bracket, rho, Lp.alpha).items()}
    out["derivation"] = derivation(L.alpha, Lp.alpha, Lp.bracket, rho)
    return out


def module_hom_algebra(A, R, mu):
    a, b, c, M = lst(A.alpha), lst(R.alpha), lst(R.mul), lst(mu)
    n, m = len(a), len(b)
    out = {f"rep:{k}": v for k, v in assoc_rep(A.alpha, A.mul, mu, R.alpha).items()}

    def f(x, u, v):
        X, U, V = e(n, x), e(m, u), e(m, v)
        return sub(act(M, mv(a, X), bil(c, U, V)), bil(c, act(M, X, U), mv(b, V)))

    out["product-compat"] = table((n, m, m), f)
    out["equivariance"] = equivariance(A.alpha, R.alpha, mu)
    return out


def module_hom_poisson(M):
    P, V = M.base, M.V
    a, b = lst(P.alpha), lst(V.alpha)
    vb, vm, S, T = lst(V.bracket), lst(V.mul), lst(M.S), lst(M.T)
    n, m = len(a), len(b)
    out = {f"V:{k}": v for k, v in hom_poisson(V.alpha, V.mul, V.bracket).items()}
    out.update({f"lie-module:{k}": v for k, v in l_hom_lie_algebra(P.lie, V.lie, M.S).items()})
    out.update({f"assoc-module:{k}": v for k, v in module_hom_algebra(P.assoc, V.assoc, M.T).items()})
    out.update({f"module:{k}": v for k, v in poisson_module(P, V.alpha, M.S, M.T).items()})
    out["S-equivariance"] = equivariance(P.alpha, V.alpha, M.S)
    out["T-equivariance"] = equivariance(P.alpha, V.alpha, M.T)
    out["S-product-derivation"] = derivation(P.alpha, V.alpha, V.mul, M.S)

    def mixed(x, u, v):
        X, U, W = e(n, x), e(m, u), e(m, v)
        out_ = add(bil(vb, mv(b, U), act(T, X, W)), bil(vm, act(S, X, U), mv(b, W)))
        return sub(out_, act(T, mv(a, X), bil(vb, U, W)))

    out["bracket-T"] = table((n, m, m), mixed)
    return out


def _ops(alpha, *tensors):
    a = lst(alpha)
    n = len(a)
    fs = [(lambda c: (lambda u, v: bil(c, u, v)))(lst(t)) for t in tensors]
    return n, (lambda v: mv(a, v)), fs


def post_hom_lie(lie, diamond, alpha):
    n, al, (br, dm) = _ops(alpha, lie, diamond)
    E = lambda i: e(n, i)
    ast = lambda u, v: add(sub(dm(u, v), dm(v, u)), br(u, v))

    def rep(x, y, z):
        X, Y, Z = E(x), E(y), E(z)
        return add(sub(dm(al(Z), dm(Y, X)), dm(al(Y), dm(Z, X))), dm(ast(Y, Z), al(X)))

    def der(x, y, z):
        X, Y, Z = E(x), E(y), E(z)
        return sub(sub(dm(al(Z), br(X, Y)), br(dm(Z, X), al(Y))), br(al(X), dm(Z, Y)))

    return {
        "antisymmetry": table((n, n), lambda x, y: add(br(E(x), E(y)), br(E(y), E(x)))),
        "hom-jacobi": table(
            (n, n, n),
            lambda x, y, z: add(
                br(br(E(x), E(y)), al(E(z))), br(br(E(z), E(x)), al(E(y))), br(br(E(y), E(z)), al(E(x)))
            ),
        ),
        "diamond-rep": table((n, n, n), rep),
        "diamond-derivation": table((n, n, n), der),
    }


def comm_dendriform(dot, succ, alpha):
    n, al, (dt, sc) = _ops(alpha, dot, succ)
    E = lambda i: e(n, i)
    circ = lambda u, v: add(sc(u, v), sc(v, u), dt(u, v))
    return {
        "dot-commutativity": table((n, n), lambda x, y: sub(dt(E(x), E(y)), dt(E(y), E(x)))),
        "dot-hom-associativity": table(
            (n, n, n), lambda x, y, z: sub(dt(dt(E(x), E(y)), al(E(z))), dt(al(E(x)), dt(E(y), E(z))))
        ),
        "succ-rep": table(
            (n, n, n), lambda x, y, z: sub(sc(circ(E(x), E(y)), al(E(z))), sc(al(E(x)), sc(E(y), E(z))))
        ),
        "succ-dot": table(
            (n, n, n), lambda x, y, z: sub(dt(sc(E(x), E(y)), al(E(z))), sc(al(E(x)), dt(E(y), E(z))))
        ),
    }


def post_hom_poisson(Q):
    out = {f"post-lie:{k}": v for k, v in post_hom_lie(Q.lie, Q.diamond, Q.alpha).items()}
    out.update({f"dendriform:{k}": v for k, v in comm_dendriform(Q.dot, Q.succ, Q.alpha).items()})
    n, al, (br, dm, dt, sc) = _ops(Q.alpha, Q.lie, Q.diamond, Q.dot, Q.succ)
    E = lambda i: e(n, i)
    circ = lambda u, v: add(sc(u, v), sc(v, u), dt(u, v))
    ast = lambda u, v: add(sub(dm(u, v), dm(v, u)), br(u, v))

    def three(f):
        return table((n, n, n), lambda x, y, z: f(E(x), E(y), E(z)))

    out["lie-dot-leibniz"] = three(lambda X, Y, Z: sub(sub(br(al(X), dt(Y, Z)), dt(br(X, Y), al(Z))), dt(al(Y), br(X, Z))))
    out["lie-succ"] = three(lambda X, Y, Z: add(sub(br(al(X), sc(Z, Y)), sc(al(Z), br(X, Y))), dt(al(Y), dm(Z, X))))
    out["diamond-dot"] = three(lambda X, Y, Z: sub(sub(dm(al(X), dt(Y, Z)), dt(dm(X, Y), al(Z))), dt(al(Y), dm(X, Z))))
    out["circ-diamond"] = three(lambda X, Y, Z: sub(sub(dm(circ(Y, Z), al(X)), sc(al(Z), dm(Y, X))), sc(al(Y), dm(Z, X))))
    out["diamond-succ"] = three(lambda X, Y, Z: sub(sub(dm(al(X), sc(Z, Y)), sc(al(Z), dm(X, Y))), sc(ast(X, Z), al(Y))))
    return out


def o_operator(R, weight, M):
    P, V = M.base, M.V
    Rm, a, b = lst(R), lst(P.alpha), lst(V.alpha)
    n, m = len(a), len(b)
    lam = _num(weight)
    Rv = lambda v: mv(Rm, v)
    twist = np.empty((n, m), dtype=object)
    for j in range(m):
        col = sub(mv(a, Rv(e(m, j))), Rv(mv(b, e(m, j))))
        for i in range(n):
            twist[i, j] = col[i]
    out = {"twist": twist}
    for label, op, s, own, sign in (
        ("bracket", lst(P.bracket), lst(M.S), lst(V.bracket), -1),
        ("product", lst(P.mul), lst(M.T), lst(V.mul), 1),
    ):
        def f(u, v, op=op, s=s, own=own, sign=sign):
            U, W = e(m, u), e(m, v)
            inner = add(act(s, Rv(U), W), scale(sign, act(s, Rv(W), U)), scale(lam, bil(own, U, W)))
            return sub(bil(op, Rv(U), Rv(W)), Rv(inner))

        out[label] = table((m, m), f)
    return out


def post_from_o_operator(R, weight, M):
    """``(beta, lam [,]_V, S(Ru)v, lam ._V, T(Ru)v)`` evaluated on basis pairs."""
    V = M.V
    Rm = lst(R)
    m = V.dim
    lam = _num(weight)
    S, T = lst(M.S), lst(M.T)
    vb, vm = lst(V.bracket), lst(V.mul)
    diamond = table((m, m), lambda u, v: act(S, mv(Rm, e(m, u)), e(m, v)))
    succ = table((m, m), lambda u, v: act(T, mv(Rm, e(m, u)), e(m, v)))
    lie = table((m, m), lambda u, v: scale(lam, bil(vb, e(m, u), e(m, v))))
    dot = table((m, m), lambda u, v: scale(lam, bil(vm, e(m, u), e(m, v))))
    return arr(lst(V.alpha)), lie, diamond, dot, succ


def r_alpha_invariant(alpha, r):
    a, rr = lst(alpha), lst(r)
    n = len(a)
    moved = apply2(lambda v: mv(a, v), lambda v: mv(a, v), rr, n)
    return arr(np_sub(moved, rr))


def equal(x, y) -> bool:
    x, y = np.asarray(x, dtype=object), np.asarray(y, dtype=object)
    return x.shape == y.shape and all(a == b for a, b in zip(x.reshape(-1), y.reshape(-1)))
