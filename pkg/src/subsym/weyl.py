"""Normal-ordered differential operators with Laurent-polynomial coefficients.

A :class:`WeylOperator` over a ring with generators (g_1, ..., g_m) is a sparse
sum  sum_alpha  p_alpha(g) * D^alpha  with D^alpha the monomial of partial
derivatives given by the multi-index alpha.  Normal form keeps every
coefficient to the left of every derivative; composition applies the
generalized Leibniz rule term by term.  Equality is decided in normal form.
"""

from __future__ import annotations

from .rings import LaurentPoly, Ring, RingMismatchError, binom_exp
from .scalars import GaussianRational, gr


def _iter_sub_multiindices(alpha):
    """All gamma with 0 <= gamma <= alpha slot-wise."""
    if not alpha:
        yield ()
        return
    head, rest = alpha[0], alpha[1:]
    for tail in _iter_sub_multiindices(rest):
        for g in range(head + 1):
            yield (g,) + tail


class WeylOperator:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = {a: p for a, p in terms.items() if p}

    # -- constructors ---------------------------------------------------
    @staticmethod
    def zero(ring: Ring) -> "WeylOperator":
        return WeylOperator(ring, {})

    @staticmethod
    def identity(ring: Ring) -> "WeylOperator":
        return WeylOperator(ring, {(0,) * ring.arity: ring.one()})

    @staticmethod
    def mul_by(p: LaurentPoly) -> "WeylOperator":
        """Multiplication operator f -> p*f."""
        return WeylOperator(p.ring, {(0,) * p.ring.arity: p})

    @staticmethod
    def derivative(ring: Ring, name: str, order: int = 1) -> "WeylOperator":
        alpha = [0] * ring.arity
        alpha[ring.index[name]] = order
        return WeylOperator(ring, {tuple(alpha): ring.one()})

    @staticmethod
    def term(p: LaurentPoly, derivs: dict) -> "WeylOperator":
        """p * prod d^k/d(name)^k for derivs = {name: k}."""
        ring = p.ring
        alpha = [0] * ring.arity
        for name, k in derivs.items():
            alpha[ring.index[name]] = k
        return WeylOperator(ring, {tuple(alpha): p})

    # -- structure --------------------------------------------------------
    @property
    def order(self):
        if not self.terms:
            return None
        return max(sum(a) for a in self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, WeylOperator):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset((a, hash(p)) for a, p in self.terms.items())))

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError("operators live over different rings")

    # -- linear space -------------------------------------------------------
    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for a, p in other.terms.items():
            s = out.get(a)
            s = p if s is None else s + p
            if s:
                out[a] = s
            else:
                out.pop(a, None)
        return WeylOperator(self.ring, out)

    def __neg__(self):
        return WeylOperator(self.ring, {a: -p for a, p in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "WeylOperator":
        c = c if isinstance(c, GaussianRational) else gr(c)
        return WeylOperator(self.ring, {a: p.scale(c) for a, p in self.terms.items()})

    # -- action and composition ----------------------------------------------
    def apply(self, f: LaurentPoly) -> LaurentPoly:
        if f.ring != self.ring:
            raise RingMismatchError("operand lives in a different ring")
        names = self.ring.names
        out = self.ring.zero()
        for alpha, p in self.terms.items():
            g = f
            for i, k in enumerate(alpha):
                for _ in range(k):
                    g = g.diff(names[i])
                    if not g:
                        break
                if not g:
                    break
            if g:
                out = out + p * g
        return out

    def compose(self, other: "WeylOperator") -> "WeylOperator":
        """Normal-ordered product: (self∘other)(f) = self(other(f))."""
        self._check(other)
        names = self.ring.names
        out = {}
        for alpha, p in self.terms.items():
            for beta, q in other.terms.items():
                # D^alpha (q Dbeta f) = sum_gamma C(alpha,gamma) (D^gamma q) D^(alpha-gamma+beta) f
                for gamma in _iter_sub_multiindices(alpha):
                    dq = q
                    for i, k in enumerate(gamma):
                        for _ in range(k):
                            dq = dq.diff(names[i])
                            if not dq:
                                break
                        if not dq:
                            break
                    if not dq:
                        continue
                    coeff = binom_exp(alpha, gamma)
                    idx = tuple(a - g + b for a, g, b in zip(alpha, gamma, beta))
                    contrib = (p * dq).scale(coeff)
                    s = out.get(idx)
                    s = contrib if s is None else s + contrib
                    if s:
                        out[idx] = s
                    else:
                        out.pop(idx, None)
        return WeylOperator(self.ring, out)

    def commutator(self, other: "WeylOperator") -> "WeylOperator":
        return self.compose(other) - other.compose(self)

    def principal_part(self, order: int) -> "WeylOperator":
        """Sum of terms whose derivative degree is exactly ``order``."""
        return WeylOperator(
            self.ring, {a: p for a, p in self.terms.items() if sum(a) == order}
        )

    # -- serialization -----------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]))

    def to_jsonable(self):
        return [[list(a), p.to_jsonable()] for a, p in self.sorted_terms()]

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for a, p in self.sorted_terms():
            ds = [
                f"d_{name}" + (f"^{k}" if k > 1 else "")
                for name, k in zip(self.ring.names, a)
                if k
            ]
            parts.append(f"[{p}] " + " ".join(ds) if ds else f"[{p}]")
        return " + ".join(parts)

    def __repr__(self):
        return f"WeylOperator({self})"


def from_action(ring: Ring, action, max_order: int) -> WeylOperator:
    """Reconstruct a polynomial-coefficient operator from its exact action.

    ``action`` maps a LaurentPoly to a LaurentPoly linearly.  Probing the
    monomials x^alpha in graded order determines the coefficients uniquely
    for any operator of order <= max_order: D^beta x^alpha vanishes unless
    beta <= alpha slot-wise, and equals alpha! at beta = alpha.
    """
    import itertools
    from math import factorial

    names = ring.names
    terms = {}
    degrees = sorted(
        (
            alpha
            for alpha in itertools.product(range(max_order + 1), repeat=len(names))
            if sum(alpha) <= max_order
        ),
        key=sum,
    )
    for alpha in degrees:
        x_alpha = ring.monomial({n: e for n, e in zip(names, alpha) if e})
        acc = action(x_alpha)
        for beta, p in terms.items():
            if all(b <= a for b, a in zip(beta, alpha)):
                dx = x_alpha
                for i, k in enumerate(beta):
                    for _ in range(k):
                        dx = dx.diff(names[i])
                if dx:
                    acc = acc - p * dx
        if acc:
            fact = 1
            for e in alpha:
                fact *= factorial(e)
            terms[alpha] = acc.scale(gr(1) / gr(fact))
    return WeylOperator(ring, terms)


def equal_on_monomials(a: WeylOperator, b: WeylOperator, degree: int) -> bool:
    """Cheaper sampled equality: agreement on all monomials up to a degree
    bound.  Normal-form equality (==) is the authoritative check; this one is
    for large operators where assembling the normal form twice is wasteful.
    """
    import itertools

    if a.ring != b.ring:
        return False
    names = a.ring.names
    for exps in itertools.product(range(degree + 1), repeat=len(names)):
        if sum(exps) > degree:
            continue
        f = a.ring.monomial({n: e for n, e in zip(names, exps) if e})
        if a.apply(f) != b.apply(f):
            return False
    return True


def weyl_apply(op: WeylOperator, p: LaurentPoly) -> LaurentPoly:
    return op.apply(p)


def weyl_compose(a: WeylOperator, b: WeylOperator) -> WeylOperator:
    return a.compose(b)


def weyl_commutator(a: WeylOperator, b: WeylOperator) -> WeylOperator:
    return a.commutator(b)


def principal_part(op: WeylOperator, order: int) -> WeylOperator:
    return op.principal_part(order)
