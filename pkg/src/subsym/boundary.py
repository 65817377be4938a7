"""The flat CR model: boundary ring, frame fields, pullback along the cone
section, canonical homogeneous extension, sub-Laplacian and the reduction
identity.

Boundary coordinates are z^1..z^n, their conjugates zb^1..zb^n and the real
contact coordinate sigma.  The lowered combinations z_a = g_a zb^a appear
throughout; with the diagonal metric they are unit multiples of the
conjugates.  The section of the null cone is phi(z, sigma) =
(1, z^a, -z^a z_a/2 + i sigma) and every ambient identity is checked after
pulling back along it.

The tangential operators are *defined* operationally (pullback of the
cone-adapted frame derivatives of an extension); the closed forms
d_a = d/dz^a + (i/2) z_a d/dsigma etc. are derived artifacts and the test
suite checks them against the operational definition, which immunizes the
build against sign-convention drift.
"""

from __future__ import annotations

import itertools

from .ambient import AmbientModel
from .rings import LaurentPoly, Ring
from .scalars import GR_I, GR_ONE, gr, rat
from .weyl import WeylOperator


class BoundaryModel:
    def __init__(self, n, g_diag=None):
        if n < 1:
            raise ValueError("need n >= 1")
        self.n = n
        self.g_diag = tuple(g_diag) if g_diag is not None else (1,) * n
        if len(self.g_diag) != n or any(g not in (1, -1) for g in self.g_diag):
            raise ValueError("g_diag must be n entries of +-1")
        names = (
            [f"z{a}" for a in range(1, n + 1)]
            + [f"zb{a}" for a in range(1, n + 1)]
            + ["sigma"]
        )
        self.ring = Ring(names)
        self.ambient = AmbientModel(n, self.g_diag)

    def z(self, a) -> LaurentPoly:
        """Holomorphic coordinate z^a, 1-based."""
        return self.ring.gen(f"z{a}")

    def zb(self, a) -> LaurentPoly:
        return self.ring.gen(f"zb{a}")

    def z_low(self, a) -> LaurentPoly:
        """Lowered z_a = g_a * conj(z^a)."""
        return self.zb(a).scale(gr(self.g_diag[a - 1]))

    def zb_low(self, a) -> LaurentPoly:
        """Lowered conjugate zbar_abar = g_a * z^a."""
        return self.z(a).scale(gr(self.g_diag[a - 1]))

    def sigma(self) -> LaurentPoly:
        return self.ring.gen("sigma")

    def zz_half(self) -> LaurentPoly:
        """sum_a z^a z_a / 2 (a real quantity on the model)."""
        out = self.ring.zero()
        for a in range(1, self.n + 1):
            out = out + self.z(a) * self.z_low(a)
        return out.scale(gr(rat(1, 2)))

    def monomials(self, max_degree):
        """All boundary monomials of total degree <= max_degree."""
        names = self.ring.names
        for total in range(max_degree + 1):
            for exps in itertools.product(range(total + 1), repeat=len(names)):
                if sum(exps) == total:
                    yield self.ring.monomial(
                        {nm: e for nm, e in zip(names, exps) if e}
                    )


# ---------------------------------------------------------------------------
# frame fields on the section (z^0 = 1, rho = 0)


class FrameFields:
    """Cone-adapted frames evaluated on the image of the section.

    Components are indexed by the ambient index A in {0, 1..n, inf}; entries
    are boundary polynomials.  X_up/X_dn are the position vector and its
    lowered conjugate, Z the cone direction, Y_up[b]/Y_dn[c] the tangent
    frames with one boundary index.
    """

    def __init__(self, m: BoundaryModel):
        n = m.n
        zero = m.ring.zero()
        one = m.ring.one()
        isig = m.sigma().scale(GR_I)
        self.X_up = [one] + [m.z(a) for a in range(1, n + 1)] + [isig - m.zz_half()]
        self.X_dn = (
            [isig.scale(gr(-1)) - m.zz_half()]
            + [m.z_low(a) for a in range(1, n + 1)]
            + [one]
        )
        self.Z_up = [zero] * (n + 1) + [one]
        self.Z_dn = [one] + [zero] * (n + 1)
        self.Y_up = {}
        self.Y_dn = {}
        for b in range(1, n + 1):
            col = [zero] * (n + 2)
            col[b] = one
            col[n + 1] = m.z_low(b).scale(gr(-1))
            self.Y_up[b] = col
            row = [m.z(b).scale(gr(-1))] + [zero] * (n + 1)
            row[b] = one
            self.Y_dn[b] = row

    def completeness_residuals(self, m: BoundaryModel):
        """delta^A_B - (X^A Z_B + Z^A X_B + Y^A_c Y^c_B), all entries."""
        n = m.n
        out = []
        for A in range(n + 2):
            for B in range(n + 2):
                acc = self.X_up[A] * self.Z_dn[B] + self.Z_up[A] * self.X_dn[B]
                for c in range(1, n + 1):
                    acc = acc + self.Y_up[c][A] * self.Y_dn[c][B]
                target = m.ring.one() if A == B else m.ring.zero()
                if acc != target:
                    out.append((A, B, str(acc - target)))
        return out

    def tangency_residuals(self, m: BoundaryModel):
        """Y^B_a X_B = 0 and Y^c_B X^B = 0 on the section."""
        out = []
        n = m.n
        for a in range(1, n + 1):
            acc = m.ring.zero()
            for B in range(n + 2):
                acc = acc + self.Y_up[a][B] * self.X_dn[B]
            if acc:
                out.append(("upper", a, str(acc)))
            acc = m.ring.zero()
            for B in range(n + 2):
                acc = acc + self.Y_dn[a][B] * self.X_up[B]
            if acc:
                out.append(("lower", a, str(acc)))
        return out


# ---------------------------------------------------------------------------
# pullback and extension


def phi_pullback(m: BoundaryModel, f: LaurentPoly) -> LaurentPoly:
    """Substitute the section: x^0 -> 1, x^a -> z^a, x^inf -> -zz/2 + i sigma,
    x_0 -> -zz/2 - i sigma, x_a -> z_a, x_inf -> 1."""
    amb = m.ambient
    n = m.n
    images = {"x0": m.ring.one(), "x_inf": m.ring.one()}
    isig = m.sigma().scale(GR_I)
    images["xinf"] = isig - m.zz_half()
    images["x_0"] = isig.scale(gr(-1)) - m.zz_half()
    for a in range(1, n + 1):
        images[f"x{a}"] = m.z(a)
        images[f"x_{a}"] = m.z_low(a)
    return f.substitute(images, m.ring)


def extension_arguments(m: BoundaryModel):
    """Images of the boundary generators used by the canonical extension:
    z^a -> x^a/x^0, zb^a -> g_a x_a/x_inf, sigma -> (x^inf/x^0 - x_0/x_inf)/(2i)."""
    amb = m.ambient
    n = m.n
    x0_inv = amb.ring.gen("x0", -1)
    xinf_low_inv = amb.ring.gen("x_inf", -1)
    images = {}
    for a in range(1, n + 1):
        images[f"z{a}"] = amb.up(a) * x0_inv
        images[f"zb{a}"] = (amb.dn(a) * xinf_low_inv).scale(gr(m.g_diag[a - 1]))
    s = (amb.up(n + 1) * x0_inv - amb.dn(0) * xinf_low_inv) * amb.ring.const(
        GR_ONE / (gr(2) * GR_I)
    )
    images["sigma"] = s
    return images


def extend(m: BoundaryModel, F: LaurentPoly, w1: int, w2: int) -> LaurentPoly:
    """Canonical rho-independent (w1, w2)-homogeneous extension of F."""
    if not isinstance(w1, int) or not isinstance(w2, int):
        raise ValueError("polynomial extensions need integer weights")
    if F.ring != m.ring:
        raise ValueError("F must live in the boundary ring")
    amb = m.ambient
    body = F.substitute(extension_arguments(m), amb.ring)
    pref = amb.ring.gen("x0", w1) * amb.ring.gen("x_inf", w2)
    return pref * body


# ---------------------------------------------------------------------------
# tangential operators


def tangential_ops(m: BoundaryModel):
    """(list of d_a, list of raised d^a, d_sigma) as boundary Weyl operators.

    Closed forms: d_a = d/dz^a + (i/2) z_a d_sigma,
    d^a = g_a d/dzb^a - (i/2) z^a d_sigma, d_sigma = d/dsigma.
    """
    n = m.n
    ring = m.ring
    dsig = WeylOperator.derivative(ring, "sigma")
    d_hol = []
    d_raised = []
    half_i = GR_I * gr(rat(1, 2))
    for a in range(1, n + 1):
        da = WeylOperator.derivative(ring, f"z{a}") + WeylOperator.term(
            m.z_low(a).scale(half_i), {"sigma": 1}
        )
        d_hol.append(da)
        dra = WeylOperator.derivative(ring, f"zb{a}").scale(gr(m.g_diag[a - 1])) - (
            WeylOperator.term(m.z(a).scale(half_i), {"sigma": 1})
        )
        d_raised.append(dra)
    return d_hol, d_raised, dsig


def tangential_op_operational(m: BoundaryModel, kind, a, F: LaurentPoly) -> LaurentPoly:
    """Chain-rule definition: pull back a frame derivative of the (0,0)
    extension.  kind is 'hol' (d_a), 'raised' (d^a) or 'sigma'."""
    amb = m.ambient
    frames = FrameFields(m)
    f = extend(m, F, 0, 0)
    if kind == "hol":
        acc = amb.ring.zero()
        for B in range(m.n + 2):
            acc = acc + amb.d_up(B).apply(f) * _lift(m, frames.Y_up[a][B])
        return phi_pullback(m, acc)
    if kind == "raised":
        acc = amb.ring.zero()
        for B in range(m.n + 2):
            acc = acc + amb.d_dn(B).apply(f) * _lift(m, frames.Y_dn[a][B])
        return phi_pullback(m, acc)
    if kind == "sigma":
        acc = (amb.d_up(m.n + 1).apply(f) - amb.d_dn(0).apply(f)).scale(GR_I)
        return phi_pullback(m, acc)
    raise ValueError(kind)


def _lift(m: BoundaryModel, p: LaurentPoly) -> LaurentPoly:
    """Lift a boundary polynomial to the ambient ring along the section
    (z^a -> x^a, zb^a -> g_a x_a, sigma -> (x^inf - x_0)/(2i)); used only to
    multiply frame components against ambient derivatives before pulling
    back, where any section-compatible lift gives the same pullback."""
    amb = m.ambient
    images = {}
    for a in range(1, m.n + 1):
        images[f"z{a}"] = amb.up(a)
        images[f"zb{a}"] = amb.dn(a).scale(gr(m.g_diag[a - 1]))
    images["sigma"] = (amb.up(m.n + 1) - amb.dn(0)) * amb.ring.const(
        GR_ONE / (gr(2) * GR_I)
    )
    return p.substitute(images, amb.ring)


def sublaplacian(m: BoundaryModel, w1, w2) -> WeylOperator:
    """(1/2) g^{ab}(d_a d_b-bar + d_b-bar d_a) + i((w1-w2)/2) d_sigma.

    Normalization follows the reduction identity (the definition in the
    source adds the 1/2 only in the proof; this is the variant for which
    the reduction holds exactly)."""
    d_hol, d_raised, dsig = tangential_ops(m)
    out = WeylOperator.zero(m.ring)
    for a in range(m.n):
        out = out + (
            d_hol[a].compose(d_raised[a]) + d_raised[a].compose(d_hol[a])
        ).scale(gr(rat(1, 2)))
    out = out + dsig.scale(gr(0, 1) * gr(rat(w1 - w2, 2)))
    return out


# ---------------------------------------------------------------------------
# verification helpers


def verify_reduction(m: BoundaryModel, F: LaurentPoly, w1: int, w2: int):
    """(lap of the extension) pulled back minus Delta F; None when exact."""
    if m.n + w1 + w2 != 0:
        raise ValueError("reduction requires n + w1 + w2 = 0")
    from .ambient import ambient_laplacian

    lhs = phi_pullback(m, ambient_laplacian(m.ambient).apply(extend(m, F, w1, w2)))
    rhs = sublaplacian(m, w1, w2).apply(F)
    res = lhs - rhs
    return None if not res else res


def admissible_weights(n, max_abs_diff=4):
    """Integer (w1, w2) with n + w1 + w2 = 0, |w1 - w2| <= max_abs_diff and
    the parity w1 - w2 = n (mod 2) forced by integrality."""
    out = []
    for dw in range(-max_abs_diff, max_abs_diff + 1):
        if (dw - n) % 2 == 0:
            w1 = (-n + dw) // 2
            w2 = -n - w1
            out.append((w1, w2))
    return out


def verify_rh_lemma(m: BoundaryModel, h: LaurentPoly, w1: int, w2: int):
    """lap(r h) - r lap(h) - (n + w1 + w2) h for ambient h of bidegree
    (w1-1, w2-1); None when exact."""
    from .ambient import ambient_laplacian, r_poly

    amb = m.ambient
    bid = amb.bidegree(h)
    if bid is not None and bid != (w1 - 1, w2 - 1):
        raise ValueError(f"h has bidegree {bid}, expected {(w1 - 1, w2 - 1)}")
    lap = ambient_laplacian(amb)
    r = r_poly(amb)
    res = lap.apply(r * h) - r * lap.apply(h) - h.scale(gr(m.n + w1 + w2))
    return None if not res else res


def induce(m: BoundaryModel, D: WeylOperator, w1: int, w2: int, F: LaurentPoly) -> LaurentPoly:
    """Boundary operator induced by an ambient operator at weights (w1, w2)."""
    return phi_pullback(m, D.apply(extend(m, F, w1, w2)))
