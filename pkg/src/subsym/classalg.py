"""Symmetric-group combinatorics and the centre of the group algebra.

Permutations are tuples of 0-based images: p[i] is where position i is sent.
Composition is (p * q)(i) = p(q(i)).  Conjugacy classes are indexed by
partitions (weakly decreasing tuples).  A :class:`ClassElement` is a linear
combination of *averaged* class sums c_lambda = (1/|C_lambda|) sum_{s in
C_lambda} s; in this basis the product of two basis elements has
coefficients that are exact probabilities (the chance that a product of
uniformly drawn class members lands in a given class).

Two multiplication backends are provided and must agree: direct enumeration
(`class_multiply`, exact probabilities) and full group-algebra convolution of
class sums (`center_convolution`).
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import factorial

from .scalars import Fraction, rat

# ---------------------------------------------------------------------------
# permutations


def identity_perm(k):
    return tuple(range(k))


def compose_perm(p, q):
    """(p*q)(i) = p(q(i))."""
    return tuple(p[q[i]] for i in range(len(p)))


def invert_perm(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def perm_sign(p):
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j, ln = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            ln += 1
        if ln % 2 == 0:
            sign = -sign
    return sign


def cycle_type(p):
    """Cycle type as a weakly decreasing tuple (a partition of len(p))."""
    seen = [False] * len(p)
    cycles = []
    for i in range(len(p)):
        if seen[i]:
            continue
        j, ln = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            ln += 1
        cycles.append(ln)
    cycles.sort(reverse=True)
    return tuple(cycles)


def from_cycles(k, cycles):
    """Permutation of {0..k-1} from disjoint cycles given in 1-based notation."""
    img = list(range(k))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b - 1
    return tuple(img)


def act_on_tuple(p, t):
    """Position action: result[p(i)] = t[i], matching e_{s.I} index relabeling."""
    out = [None] * len(t)
    for i, v in enumerate(t):
        out[p[i]] = v
    return tuple(out)


# ---------------------------------------------------------------------------
# partitions and conjugacy classes


@lru_cache(maxsize=None)
def partitions(k):
    """All partitions of k, in reverse-lexicographic (dominance-compatible) order."""
    if k == 0:
        return ((),)
    out = []

    def rec(rest, maxpart, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(rest, maxpart), 0, -1):
            rec(rest - p, p, prefix + [p])

    rec(k, k, [])
    return tuple(out)


def z_lambda(lam) -> int:
    """Centralizer order: prod_i i^{m_i} m_i!."""
    out = 1
    for part in set(lam):
        m = lam.count(part)
        out *= part**m * factorial(m)
    return out


def class_size(lam) -> int:
    return factorial(sum(lam)) // z_lambda(lam)


def conjugacy_classes(k):
    """List of (partition, class size); sizes sum to k!."""
    return [(lam, class_size(lam)) for lam in partitions(k)]


@lru_cache(maxsize=None)
def class_elements(k):
    """dict partition -> tuple of all permutations of that cycle type (k <= 8)."""
    if k > 8:
        raise ValueError("full class enumeration is capped at k = 8")
    buckets = {lam: [] for lam in partitions(k)}
    for p in itertools.permutations(range(k)):
        buckets[cycle_type(p)].append(p)
    return {lam: tuple(v) for lam, v in buckets.items()}


def class_representative(lam):
    """Canonical representative with consecutive cycles."""
    k = sum(lam)
    img = list(range(k))
    start = 0
    for part in lam:
        for i in range(part):
            img[start + i] = start + (i + 1) % part
        start += part
    return tuple(img)


# ---------------------------------------------------------------------------
# class algebra elements

ENUMERATION_LIMIT = 7


class ClassElement:
    """Element of Z(C[S_k]) in the averaged-class-sum basis."""

    __slots__ = ("k", "coeffs")

    def __init__(self, k, coeffs=None):
        self.k = k
        self.coeffs = {lam: c for lam, c in (coeffs or {}).items() if c}

    @staticmethod
    def basis(k, lam) -> "ClassElement":
        return ClassElement(k, {tuple(lam): rat(1)})

    @staticmethod
    def one(k) -> "ClassElement":
        return ClassElement.basis(k, (1,) * k)

    def __add__(self, other):
        assert self.k == other.k
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            s = out.get(lam, rat(0)) + c
            if s:
                out[lam] = s
            else:
                out.pop(lam, None)
        return ClassElement(self.k, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = rat(c) if not isinstance(c, type(rat(0))) else c
        return ClassElement(self.k, {lam: v * c for lam, v in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, ClassElement) and self.k == other.k and self.coeffs == other.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = [f"({Fraction(int(c.numerator), int(c.denominator))})*C{list(lam)}"
                 for lam, c in sorted(self.coeffs.items())]
        return " + ".join(parts)

    __repr__ = __str__


@lru_cache(maxsize=None)
def _basis_product_enumeration(k, lam, mu):
    """Probability vector for C_lam * C_mu by exhaustive enumeration.

    The product-class distribution is conjugation invariant, so one factor may
    be pinned to a fixed representative; enumeration then runs over the full
    second class.  Exact over |C_mu|.
    """
    rep = class_representative(lam)
    counts = {}
    elements = class_elements(k)[mu]
    for q in elements:
        t = cycle_type(compose_perm(rep, q))
        counts[t] = counts.get(t, 0) + 1
    total = len(elements)
    return {t: rat(c, total) for t, c in counts.items()}


def class_multiply(u: ClassElement, v: ClassElement, k=None) -> ClassElement:
    """Product in Z(C[S_k]); basis products are exact probability mixtures.

    Uses exhaustive enumeration for k <= 7 and falls back to the convolution
    backend beyond that.
    """
    k = k or u.k
    assert u.k == v.k == k
    if k > ENUMERATION_LIMIT:
        return center_convolution(u, v, k)
    out = ClassElement(k)
    for lam, cu in u.coeffs.items():
        for mu, cv in v.coeffs.items():
            probs = _basis_product_enumeration(k, lam, mu)
            out = out + ClassElement(k, {t: p * cu * cv for t, p in probs.items()})
    return out


@lru_cache(maxsize=None)
def _basis_product_convolution(k, lam, mu):
    """Oracle backend: literal convolution of averaged class sums."""
    a = GroupAlgebraElement.class_sum(k, lam, averaged=True)
    b = GroupAlgebraElement.class_sum(k, mu, averaged=True)
    prod = a * b
    out = {}
    for p, c in prod.coeffs.items():
        t = cycle_type(p)
        out[t] = out.get(t, rat(0)) + c
    # coefficient on the averaged class sum: total mass of the class
    return {t: c for t, c in out.items() if c}


def center_convolution(u: ClassElement, v: ClassElement, k=None) -> ClassElement:
    k = k or u.k
    assert u.k == v.k == k
    out = ClassElement(k)
    for lam, cu in u.coeffs.items():
        for mu, cv in v.coeffs.items():
            probs = _basis_product_convolution(k, lam, mu)
            out = out + ClassElement(k, {t: p * cu * cv for t, p in probs.items()})
    return out


# ---------------------------------------------------------------------------
# group algebra


class GroupAlgebraElement:
    """Finitely supported map S_k -> coefficients, with convolution product."""

    __slots__ = ("k", "coeffs")

    def __init__(self, k, coeffs=None):
        self.k = k
        self.coeffs = {p: c for p, c in (coeffs or {}).items() if c}

    @staticmethod
    def from_perm(p, coeff=1):
        return GroupAlgebraElement(len(p), {tuple(p): rat(coeff)})

    @staticmethod
    def one(k):
        return GroupAlgebraElement.from_perm(identity_perm(k))

    @staticmethod
    def class_sum(k, lam, averaged=False):
        elems = class_elements(k)[tuple(lam)]
        c = rat(1, len(elems)) if averaged else rat(1)
        return GroupAlgebraElement(k, {p: c for p in elems})

    def __add__(self, other):
        assert self.k == other.k
        out = dict(self.coeffs)
        for p, c in other.coeffs.items():
            s = out.get(p, rat(0)) + c
            if s:
                out[p] = s
            else:
                out.pop(p, None)
        return GroupAlgebraElement(self.k, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return GroupAlgebraElement(self.k, {p: v * rat(c) for p, v in self.coeffs.items()})

    def __mul__(self, other):
        assert self.k == other.k
        out = {}
        for p, cp in self.coeffs.items():
            for q, cq in other.coeffs.items():
                r = compose_perm(p, q)
                s = out.get(r)
                v = cp * cq
                s = v if s is None else s + v
                if s:
                    out[r] = s
                else:
                    out.pop(r, None)
        return GroupAlgebraElement(self.k, out)

    def __eq__(self, other):
        return (
            isinstance(other, GroupAlgebraElement)
            and self.k == other.k
            and self.coeffs == other.coeffs
        )

    def __bool__(self):
        return bool(self.coeffs)

    def is_class_function(self) -> bool:
        by_type = {}
        for p, c in self.coeffs.items():
            by_type.setdefault(cycle_type(p), set()).add(c)
        if any(len(vals) != 1 for vals in by_type.values()):
            return False
        # every member of a touched class must carry the same coefficient
        return all(
            p in self.coeffs for t in by_type for p in class_elements(self.k)[t]
        )


# ---------------------------------------------------------------------------
# characters: Murnaghan-Nakayama


def _border_strips(lam, length):
    """All ways to remove a border strip of given length from shape lam.

    Yields (new_partition, height) with height = rows spanned minus one.
    """
    lam = list(lam)
    n = len(lam)
    for start in range(n):
        # strip starting in row `start` (its rightmost cell in that row)
        # spans rows start..end; end determined by walking the rim
        for end in range(start, n):
            # cells removed from rows start..end along the rim:
            # row i keeps lam[i+1]-1 cells for i<end, row end keeps some tail
            removed = 0
            ok = True
            new = lam.copy()
            for i in range(start, end):
                take = lam[i] - (lam[i + 1] - 1)
                if take <= 0:
                    ok = False
                    break
                removed += take
                new[i] = lam[i + 1] - 1
            if not ok:
                continue
            tail = length - removed
            if tail <= 0:
                continue
            take_end_max = lam[end] - (lam[end + 1] if end + 1 < n else 0)
            if tail > take_end_max:
                continue
            new[end] = lam[end] - tail
            cand = [x for x in new if x > 0]
            if all(cand[i] >= cand[i + 1] for i in range(len(cand) - 1)):
                yield tuple(cand), end - start


@lru_cache(maxsize=None)
def mn_character(lam, mu) -> int:
    """Irreducible character chi^lam on class mu via Murnaghan-Nakayama."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError("partitions must have equal size")
    if not lam:
        return 1
    total = 0
    first, rest = mu[0], mu[1:]
    for new, height in _border_strips(lam, first):
        total += (-1) ** height * mn_character(new, rest)
    return total


def hook_length_dim(lam) -> int:
    """Number of standard tableaux via the hook length formula (oracle)."""
    k = sum(lam)
    conj = conjugate_partition(lam)
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j) + (conj[j] - i) - 1
    return factorial(k) // prod


def conjugate_partition(lam):
    if not lam:
        return ()
    out = []
    for j in range(lam[0]):
        out.append(sum(1 for row in lam if row > j))
    return tuple(out)


def char_dim(lam) -> int:
    return mn_character(tuple(lam), (1,) * sum(lam))


# ---------------------------------------------------------------------------
# central idempotents and Young symmetrizers


def central_idempotent(lam, k=None) -> GroupAlgebraElement:
    """e_lam = (dim/k!) sum_s chi^lam(s) s; orthogonal idempotents summing to 1."""
    lam = tuple(lam)
    k = k or sum(lam)
    d = char_dim(lam)
    coeffs = {}
    for mu, elems in class_elements(k).items():
        c = rat(d * mn_character(lam, mu), factorial(k))
        if not c:
            continue
        for p in elems:
            coeffs[p] = c
    return GroupAlgebraElement(k, coeffs)


def standard_tableaux(lam):
    """All standard Young tableaux of shape lam (tuples of row tuples)."""
    lam = tuple(lam)
    k = sum(lam)
    results = []

    def rec(filled, rows):
        n = sum(len(r) for r in rows)
        if n == k:
            results.append(tuple(tuple(r) for r in rows))
            return
        for i, row in enumerate(rows):
            if len(row) < lam[i] and (i == 0 or len(rows[i - 1]) > len(row)):
                row.append(n + 1)
                rec(filled, rows)
                row.pop()

    rec(0, [[] for _ in lam])
    return results


def _row_group(tab, k):
    """All permutations preserving each row (as 0-based position permutations)."""
    perms = [identity_perm(k)]
    for row in tab:
        idx = [v - 1 for v in row]
        new = []
        for base in perms:
            for arr in itertools.permutations(idx):
                img = list(base)
                for src, dst in zip(idx, arr):
                    img[src] = base[dst]
                new.append(tuple(img))
        perms = list(set(new))
    return perms


def _group_from_blocks(blocks, k):
    """Subgroup of S_k permuting positions within each block independently."""
    gens = [identity_perm(k)]
    for block in blocks:
        new = []
        for base in gens:
            for arr in itertools.permutations(block):
                img = list(base)
                for src, dst in zip(block, arr):
                    img[src] = base[dst]
                new.append(tuple(img))
        gens = list(set(new))
    return gens


def young_symmetrizer(tab) -> GroupAlgebraElement:
    """c(A) r(A): column antisymmetrizer composed with row symmetrizer, K = 1."""
    lam = tuple(len(r) for r in tab)
    k = sum(lam)
    rows = [[v - 1 for v in r] for r in tab]
    conj = conjugate_partition(lam)
    cols = []
    for j in range(lam[0]):
        col = [tab[i][j] - 1 for i in range(conj[j])]
        cols.append(col)
    r_elems = _group_from_blocks(rows, k)
    c_elems = _group_from_blocks(cols, k)
    r_sum = GroupAlgebraElement(k, {p: rat(1) for p in r_elems})
    c_sum = GroupAlgebraElement(k, {p: rat(perm_sign(p)) for p in c_elems})
    return c_sum * r_sum


def young_projector_sum(lam) -> GroupAlgebraElement:
    """Sum of Young symmetrizers over all standard tableaux of shape lam."""
    lam = tuple(lam)
    out = GroupAlgebraElement(sum(lam), {})
    for tab in standard_tableaux(lam):
        out = out + young_symmetrizer(tab)
    return out


# ---------------------------------------------------------------------------
# CSV table of structure constants


def structure_constant_table(k):
    """dict (lam, mu) -> {tau: probability} over all basis pairs."""
    out = {}
    for lam in partitions(k):
        for mu in partitions(k):
            prod = class_multiply(ClassElement.basis(k, lam), ClassElement.basis(k, mu), k)
            out[(lam, mu)] = dict(prod.coeffs)
    return out
