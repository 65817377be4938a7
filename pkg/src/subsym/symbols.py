"""Symbol calculus for ambient symmetry operators.

An ambient tensor with d column pairs induces a boundary operator whose
coefficients in the d_a / d^b / d_sigma basis form a family of symbol
tensors V[k, l] (k upper boundary indices, l lower, d-k-l sigma slots).
Extraction contracts the tensor with the cone-adapted frames and pulls back
along the section, with the (-1)^l (-i)^(d-k-l) prefactors and idempotent
(averaged) symmetrizations.

The extracted family satisfies the symbol recursions; equations whose right
side carries an undetermined trace tensor are checked as solvability of the
delta-insertion linear system (exact left-kernel test).
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb, factorial

from . import linalg
from .ambient import AmbientSymTensor
from .boundary import BoundaryModel, FrameFields, tangential_ops
from .rings import LaurentPoly
from .scalars import GaussianRational, gr, rat


class SymbolTensor:
    """Symmetric family of boundary polynomials indexed by sorted boundary
    index tuples (k upper, l lower); sigma slot count carried separately."""

    __slots__ = ("k", "l", "sigma_slots", "n", "components", "ring")

    def __init__(self, n, k, l, sigma_slots, ring, components=None):
        self.n = n
        self.k = k
        self.l = l
        self.sigma_slots = sigma_slots
        self.ring = ring
        self.components = {key: p for key, p in (components or {}).items() if p}

    def key(self, a_tuple, b_tuple):
        return (tuple(sorted(a_tuple)), tuple(sorted(b_tuple)))

    def get(self, a_tuple, b_tuple) -> LaurentPoly:
        return self.components.get(self.key(a_tuple, b_tuple), self.ring.zero())

    def __bool__(self):
        return bool(self.components)

    def __eq__(self, other):
        return (
            isinstance(other, SymbolTensor)
            and (self.k, self.l, self.sigma_slots) == (other.k, other.l, other.sigma_slots)
            and self.components == other.components
        )

    def scale(self, c):
        return SymbolTensor(
            self.n, self.k, self.l, self.sigma_slots, self.ring,
            {key: p.scale(c) for key, p in self.components.items()},
        )

    def is_constant(self) -> bool:
        return all(p.is_constant() for p in self.components.values())

    def upper_keys(self):
        return itertools.combinations_with_replacement(range(1, self.n + 1), self.k)

    def lower_keys(self):
        return itertools.combinations_with_replacement(range(1, self.n + 1), self.l)


def extract_symbols(m: BoundaryModel, T: AmbientSymTensor, k: int, l: int) -> SymbolTensor:
    """The (k, l) symbol of the operator induced by T (d = T.d columns).

    Column roles: k columns contract (lower slot with the position vector,
    upper slot with the tangent coframe carrying an upper boundary label),
    l columns the mirror pattern, remaining columns contract both slots with
    the position vectors (the sigma directions).

    The inner loop runs over column assignments and tensor entries once and
    expands the boundary labels through the sparsity of the tangent frames
    (a dual-slot value 0 admits every label, a boundary value pins it, the
    cone value kills the term); the direct per-component transcription is
    kept as _extract_symbols_reference and cross-checked in the tests.
    """
    d = T.d
    if k + l > d:
        raise ValueError("need k + l <= d")
    n = m.n
    fr = FrameFields(m)
    INF = n + 1
    pref = gr((-1) ** l) * _minus_i_power(d - k - l)
    norm = gr(rat(1, factorial(k) * factorial(l)))
    full = {}  # ordered label tuples -> polynomial
    cols = range(d)

    # per-(slot values) factor caches, shared across entries and assignments
    sig_cache, iopt_cache, jopt_cache = {}, {}, {}

    def sig_factor(B_c, A_c):
        key = (B_c, A_c)
        out = sig_cache.get(key)
        if out is None:
            out = fr.X_up[A_c] * fr.X_dn[B_c]
            sig_cache[key] = out
        return out

    def i_options(B_c, A_c):
        # contract the dual slot with Y (label) and the vector slot with X
        key = (B_c, A_c)
        if key not in iopt_cache:
            x = fr.X_up[A_c]
            if B_c == 0:
                iopt_cache[key] = [(a, fr.Y_dn[a][0] * x) for a in range(1, n + 1)]
            elif B_c == INF:
                iopt_cache[key] = None
            else:
                iopt_cache[key] = [(B_c, x)]  # Y_dn[a][B_c] = delta, unit factor
        return iopt_cache[key]

    def j_options(B_c, A_c):
        key = (B_c, A_c)
        if key not in jopt_cache:
            x = fr.X_dn[B_c]
            if A_c == INF:
                jopt_cache[key] = [(b, fr.Y_up[b][INF] * x) for b in range(1, n + 1)]
            elif A_c == 0:
                jopt_cache[key] = None
            else:
                jopt_cache[key] = [(A_c, x)]
        return jopt_cache[key]

    entry_data = []
    for (B, A), v in T.entries.items():
        per_col = [
            (sig_factor(B[c], A[c]), i_options(B[c], A[c]), j_options(B[c], A[c]))
            for c in cols
        ]
        entry_data.append((per_col, v))

    for icols in itertools.permutations(cols, k):
        iset = set(icols)
        rest = [c for c in cols if c not in iset]
        for jcols in itertools.permutations(rest, l):
            jset = set(jcols)
            sigma_cols = [c for c in rest if c not in jset]
            for per_col, v in entry_data:
                opts = []
                dead = False
                for c in icols:
                    o = per_col[c][1]
                    if o is None:
                        dead = True
                        break
                    opts.append(o)
                if dead:
                    continue
                for c in jcols:
                    o = per_col[c][2]
                    if o is None:
                        dead = True
                        break
                    opts.append(o)
                if dead:
                    continue
                base = None
                for c in sigma_cols:
                    fg = per_col[c][0]
                    if not fg:
                        dead = True
                        break
                    base = fg if base is None else base * fg
                if dead:
                    continue
                base = m.ring.const(v) if base is None else base.scale(v)
                stack = [((), base)]
                for o in opts:
                    stack = [
                        (labels + (lab,), poly * fac)
                        for labels, poly in stack
                        for lab, fac in o
                    ]
                for labels, poly in stack:
                    if not poly:
                        continue
                    key = (labels[:k], labels[k:])
                    prev = full.get(key)
                    full[key] = poly if prev is None else prev + poly
    out = {}
    for a_key in itertools.combinations_with_replacement(range(1, n + 1), k):
        for b_key in itertools.combinations_with_replacement(range(1, n + 1), l):
            acc = full.get((a_key, b_key))
            if acc:
                out[(a_key, b_key)] = acc.scale(pref * norm)
    return SymbolTensor(n, k, l, d - k - l, m.ring, out)


def _extract_symbols_reference(m: BoundaryModel, T: AmbientSymTensor, k: int, l: int) -> SymbolTensor:
    """Direct per-component transcription of the extraction; test oracle."""
    d = T.d
    if k + l > d:
        raise ValueError("need k + l <= d")
    n = m.n
    fr = FrameFields(m)
    pref = gr((-1) ** l) * _minus_i_power(d - k - l)
    norm = gr(rat(1, factorial(k) * factorial(l)))
    out = {}
    cols = range(d)
    for a_key in itertools.combinations_with_replacement(range(1, n + 1), k):
        for b_key in itertools.combinations_with_replacement(range(1, n + 1), l):
            acc = m.ring.zero()
            for icols in itertools.permutations(cols, k):
                rest = [c for c in cols if c not in icols]
                for jcols in itertools.permutations(rest, l):
                    sigma_cols = [c for c in rest if c not in jcols]
                    for (B, A), v in T.entries.items():
                        term = None
                        dead = False
                        for pos, c in enumerate(icols):
                            f = fr.Y_dn[a_key[pos]][B[c]]
                            if not f:
                                dead = True
                                break
                            term = f * fr.X_up[A[c]] if term is None else term * (f * fr.X_up[A[c]])
                        if dead:
                            continue
                        for pos, c in enumerate(jcols):
                            f = fr.Y_up[b_key[pos]][A[c]]
                            if not f:
                                dead = True
                                break
                            term = f * fr.X_dn[B[c]] if term is None else term * (f * fr.X_dn[B[c]])
                        if dead:
                            continue
                        for c in sigma_cols:
                            fg = fr.X_up[A[c]] * fr.X_dn[B[c]]
                            term = fg if term is None else term * fg
                        if term is None:
                            term = m.ring.one()
                        acc = acc + term.scale(v)
            if acc:
                out[(a_key, b_key)] = acc.scale(pref * norm)
    return SymbolTensor(n, k, l, d - k - l, m.ring, out)


def _minus_i_power(p: int) -> GaussianRational:
    vals = [gr(1), gr(0, -1), gr(-1), gr(0, 1)]
    return vals[p % 4]


def extract_all_symbols(m: BoundaryModel, T: AmbientSymTensor):
    """dict (k, l) -> SymbolTensor for all k + l <= d."""
    d = T.d
    return {
        (k, l): extract_symbols(m, T, k, l)
        for k in range(d + 1)
        for l in range(d + 1 - k)
    }


# ---------------------------------------------------------------------------
# symmetrized tangential derivatives and trace solvability


def sym_derivative_upper(m: BoundaryModel, S: SymbolTensor) -> SymbolTensor:
    """Idempotent symmetrization of the raised derivative: one extra upper
    index, averaged over all k+1 uppers."""
    _, d_raised, _ = tangential_ops(m)
    k2 = S.k + 1
    out = {}
    for a_key in itertools.combinations_with_replacement(range(1, m.n + 1), k2):
        for b_key in S.lower_keys() if S.l else [()]:
            acc = m.ring.zero()
            for pos in range(k2):
                rest = a_key[:pos] + a_key[pos + 1 :]
                comp = S.get(rest, b_key)
                if comp:
                    acc = acc + d_raised[a_key[pos] - 1].apply(comp)
            acc = acc.scale(gr(rat(1, k2)))
            if acc:
                out[(a_key, tuple(sorted(b_key)))] = acc
    return SymbolTensor(m.n, k2, S.l, S.sigma_slots, m.ring, out)


def sym_derivative_lower(m: BoundaryModel, S: SymbolTensor) -> SymbolTensor:
    d_hol, _, _ = tangential_ops(m)
    l2 = S.l + 1
    out = {}
    for a_key in S.upper_keys() if S.k else [()]:
        for b_key in itertools.combinations_with_replacement(range(1, m.n + 1), l2):
            acc = m.ring.zero()
            for pos in range(l2):
                rest = b_key[:pos] + b_key[pos + 1 :]
                comp = S.get(a_key, rest)
                if comp:
                    acc = acc + d_hol[b_key[pos] - 1].apply(comp)
            acc = acc.scale(gr(rat(1, l2)))
            if acc:
                out[(tuple(sorted(a_key)), b_key)] = acc
    return SymbolTensor(m.n, S.k, l2, S.sigma_slots, m.ring, out)


def add_symbols(x: SymbolTensor, y: SymbolTensor) -> SymbolTensor:
    assert (x.k, x.l) == (y.k, y.l)
    out = dict(x.components)
    for key, p in y.components.items():
        s = out.get(key)
        s = p if s is None else s + p
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return SymbolTensor(x.n, x.k, x.l, min(x.sigma_slots, y.sigma_slots), x.ring, out)


@lru_cache(maxsize=None)
def _insertion_left_kernel(n: int, k: int, l: int):
    """Left kernel of the symmetrized delta-insertion map
    lambda^{(k-1,l-1)} -> delta^{(a}_{(b} lambda^{...)}_{...)}, over full
    (unsorted) index tuples.  Rows of the kernel annihilate exactly the
    image, so 'trace-free part of X vanishes' = all kernel rows kill X."""
    src = list(itertools.product(range(1, n + 1), repeat=(k - 1) + (l - 1)))
    dst = list(itertools.product(range(1, n + 1), repeat=k + l))
    src_index = {key: i for i, key in enumerate(src)}
    rows = []
    norm = rat(1, factorial(k) * factorial(l))
    for key in dst:
        a, b = key[:k], key[k:]
        row = [rat(0)] * len(src)
        for pa in itertools.permutations(range(k)):
            for pb in itertools.permutations(range(l)):
                if a[pa[0]] != b[pb[0]]:
                    continue
                rest_a = tuple(a[pa[i]] for i in range(1, k))
                rest_b = tuple(b[pb[i]] for i in range(1, l))
                j = src_index[rest_a + rest_b]
                row[j] = row[j] + norm
        rows.append(row)
    # left kernel = kernel of the transpose
    cols = [list(col) for col in zip(*rows)]
    kern = linalg.kernel_basis(cols, len(dst)) if cols else []
    return dst, tuple(tuple(v) for v in kern)


def trace_free_part_vanishes(m: BoundaryModel, S: SymbolTensor) -> LaurentPoly | None:
    """None when S = delta-insertion of some lambda (i.e. its trace-free part
    is zero); otherwise a nonzero witness polynomial."""
    if S.k == 0 or S.l == 0:
        for p in S.components.values():
            if p:
                return p
        return None
    dst, kern = _insertion_left_kernel(m.n, S.k, S.l)
    for kv in kern:
        acc = m.ring.zero()
        for coeff, key in zip(kv, dst):
            if coeff:
                comp = S.get(key[: S.k], key[S.k :])
                if comp:
                    acc = acc + comp.scale(gr(coeff))
        if acc:
            return acc
    return None


# ---------------------------------------------------------------------------
# the symbol recursions


def check_symbol_recursions(m: BoundaryModel, symbols: dict, d: int):
    """Exact residuals of the rewritten symbol equations for a full family.

    ``symbols`` maps (k, l) to the extracted SymbolTensor.  Returns a list of
    (equation label, ok, witness) entries.
    """
    results = []

    def record(label, residual):
        results.append((label, residual is None, None if residual is None else str(residual)))

    # pure-sigma recursions, exact
    for k in range(1, d + 1):
        S = symbols[(k, 0)]
        D = sym_derivative_upper(m, symbols[(k - 1, 0)])
        res = None
        for a_key in S.upper_keys():
            val = S.get(a_key, ()).scale(gr(0, k)) + D.get(a_key, ())
            if val:
                res = val
                break
        record(f"sigma recursion (upper) k={k}", res)
    for l in range(1, d + 1):
        S = symbols[(0, l)]
        D = sym_derivative_lower(m, symbols[(0, l - 1)])
        res = None
        for b_key in S.lower_keys():
            val = S.get((), b_key).scale(gr(0, -l)) + D.get((), b_key)
            if val:
                res = val
                break
        record(f"sigma recursion (lower) l={l}", res)

    # mixed recursions, trace-free part
    for k in range(1, d + 1):
        for l in range(1, d + 1 - k):
            lhs = add_symbols(
                add_symbols(
                    symbols[(k, l)].scale(gr(0, k - l)),
                    sym_derivative_upper(m, symbols[(k - 1, l)]),
                ),
                sym_derivative_lower(m, symbols[(k, l - 1)]),
            )
            record(f"mixed recursion k={k} l={l}", trace_free_part_vanishes(m, lhs))

    # top equations (no sigma slots left): k + l = d + 1
    S_up = sym_derivative_upper(m, symbols[(d, 0)])
    res = None
    for a_key in S_up.upper_keys():
        if S_up.get(a_key, ()):
            res = S_up.get(a_key, ())
            break
    record("top gradient symmetrization (upper)", res)
    S_dn = sym_derivative_lower(m, symbols[(0, d)])
    res = None
    for b_key in S_dn.lower_keys():
        if S_dn.get((), b_key):
            res = S_dn.get((), b_key)
            break
    record("top gradient symmetrization (lower)", res)
    for k in range(1, d + 1):
        l = d + 1 - k
        if l < 1 or l > d:
            continue
        lhs = add_symbols(
            sym_derivative_upper(m, symbols[(k - 1, l)]),
            sym_derivative_lower(m, symbols[(k, l - 1)]),
        )
        record(f"top mixed equation k={k} l={l}", trace_free_part_vanishes(m, lhs))
    return results


def check_bgg(m: BoundaryModel, top: SymbolTensor, d: int, s: int):
    """First BGG equations on the top symbol: the trace-free part of
    d+1-2s symmetrized raised (resp. lowered) derivatives vanishes."""
    assert top.k == s and top.l == s
    results = []
    D = top
    for _ in range(d + 1 - 2 * s):
        D = sym_derivative_upper(m, D)
    if s == 0:
        res = None
        for a_key in D.upper_keys():
            if D.get(a_key, ()):
                res = D.get(a_key, ())
                break
    else:
        res = trace_free_part_vanishes(m, D)
    results.append(("first BGG equation (upper)", res is None, None if res is None else str(res)))
    D = top
    for _ in range(d + 1 - 2 * s):
        D = sym_derivative_lower(m, D)
    if s == 0:
        res = None
        for b_key in D.lower_keys():
            if D.get((), b_key):
                res = D.get((), b_key)
                break
    else:
        res = trace_free_part_vanishes(m, D)
    results.append(("first BGG equation (lower)", res is None, None if res is None else str(res)))
    return results


# ---------------------------------------------------------------------------
# canonical symmetry construction: types, a-coefficients, linear system


def a_coeff(s: int, row: int, i: int) -> int:
    """The binomial sum a^s_{row, i} with row = k + 1."""
    if not (1 <= row <= s + 1) or not (0 <= i <= s):
        raise ValueError("indices out of range")
    k = row - 1
    total = 0
    for j in range(0, min(i, k) + 1):
        total += comb(s - i, k - j) * comb(i, j) * comb(s - j, k)
    return total


def pascal_identity_check(s_max: int):
    """a^{s+1}_{k+2, i} - a^{s+1}_{k+2, i+1} = a^s_{k+1, i}, with the
    convention a^s_{0, i} = 0.  Returns list of counterexamples."""
    bad = []
    for s in range(1, s_max + 1):
        for k in range(-1, s):
            for i in range(0, s + 1):
                lhs = a_coeff(s + 1, k + 2, i) - a_coeff(s + 1, k + 2, i + 1)
                rhs = a_coeff(s, k + 1, i) if k >= 0 else 0
                if lhs != rhs:
                    bad.append((s, k, i, lhs, rhs))
    return bad


def _det(rows):
    """Exact determinant by fraction-preserving elimination."""
    n = len(rows)
    m = [[rat(x) for x in r] for r in rows]
    det = rat(1)
    for c in range(n):
        piv = None
        for r in range(c, n):
            if m[r][c]:
                piv = r
                break
        if piv is None:
            return rat(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det = det * m[c][c]
        inv = m[c][c]
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] / inv
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


def a_matrix_det(s: int):
    return _det([[a_coeff(s, r, i) for i in range(1, s + 1)] for r in range(1, s + 1)])


def type_count(d: int, s: int, i: int) -> int:
    """Number of column placements of the i-th type."""
    return comb(d, 2 * s - 2 * i) * comb(2 * s - 2 * i, s - i) * comb(d - 2 * s + 2 * i, i)


def prop1_system(d: int, s: int):
    """Solve for the type coefficients x_1..x_s (x_0 = 1).

    Returns dict with the matrix, solution, bare a-matrix determinants and
    the sign recurrence check det_s = (-1)^(s+1) det_(s-1).
    """
    if not (1 <= s and 2 * s <= d):
        raise ValueError("need 1 <= s and 2s <= d")
    rows = []
    rhs = []
    for r in range(1, s + 1):
        rows.append([rat(type_count(d, s, i) * a_coeff(s, r, i)) for i in range(1, s + 1)])
        rhs.append(rat(-type_count(d, s, 0) * a_coeff(s, r, 0)))
    sol = linalg.solve(rows, rhs)
    if sol is None:
        return {"solved": False, "matrix": rows, "rhs": rhs}
    x, kern = sol
    dets = {t: a_matrix_det(t) for t in range(1, s + 1)}
    sign_ok = all(
        dets[t] == (-1) ** (t + 1) * dets[t - 1] for t in range(2, s + 1)
    )
    return {
        "solved": True,
        "unique": not kern,
        "matrix": rows,
        "rhs": rhs,
        "x": x,
        "dets": dets,
        "det_sign_recurrence": sign_ok,
        "dets_unimodular": all(abs(v) == 1 for v in dets.values()),
    }


def default_prop1_seed(m: BoundaryModel, s: int) -> SymbolTensor:
    """Constant seed with all upper labels 1 and all lower labels 2;
    trace-free by index disjointness (needs n >= 2)."""
    if m.n < 2:
        raise ValueError("the disjoint-index seed needs n >= 2")
    comp = {((1,) * s, (2,) * s): m.ring.one()} if s else {((), ()): m.ring.one()}
    return SymbolTensor(m.n, s, s, 0, m.ring, comp)


def _seed_is_trace_free(seed: SymbolTensor) -> bool:
    if seed.k == 0:
        return True
    n = seed.n
    for a_rest in itertools.product(range(1, n + 1), repeat=seed.k - 1):
        for b_rest in itertools.product(range(1, n + 1), repeat=seed.l - 1):
            acc = seed.ring.zero()
            for c in range(1, n + 1):
                acc = acc + seed.get((c,) + a_rest, (c,) + b_rest)
            if acc:
                return False
    return True


def build_prop1_tensor(
    m: BoundaryModel, d: int, s: int, x, seed: SymbolTensor | None = None
) -> AmbientSymTensor:
    """Ambient tensor whose nonzero components are the s+1 types.

    ``seed`` is a constant, symmetric, trace-free boundary symbol with s
    upper and s lower indices (default: disjoint-index seed).  ``x`` is the
    type coefficient list x_1..x_s; x_0 = 1.  Column symmetry holds by
    construction because the placements are enumerated set-wise.
    """
    if seed is None:
        seed = default_prop1_seed(m, s)
    if (seed.k, seed.l) != (s, s):
        raise ValueError("seed must carry s upper and s lower indices")
    if not seed.is_constant():
        raise ValueError("seed must be constant")
    if not _seed_is_trace_free(seed):
        raise ValueError("seed is not trace-free")
    N = m.n + 2
    INF = m.n + 1
    coeffs = [gr(1)] + [c if isinstance(c, GaussianRational) else gr(c) for c in x]
    entries = {}
    cols = range(d)
    for i in range(0, s + 1):
        for joint in itertools.combinations(cols, i):
            rest1 = [c for c in cols if c not in joint]
            for sa in itertools.combinations(rest1, s - i):
                rest2 = [c for c in rest1 if c not in sa]
                for sb in itertools.combinations(rest2, s - i):
                    acols = sorted(joint + sa)
                    bcols = sorted(joint + sb)
                    for avals in itertools.product(range(1, m.n + 1), repeat=s):
                        for bvals in itertools.product(range(1, m.n + 1), repeat=s):
                            val = seed.get(avals, bvals)
                            if not val:
                                continue
                            B = [INF] * d
                            A = [0] * d
                            for c, v in zip(acols, avals):
                                B[c] = v
                            for c, v in zip(bcols, bvals):
                                A[c] = v
                            key = (tuple(B), tuple(A))
                            prev = entries.get(key)
                            add = coeffs[i] * val.constant_value()
                            entries[key] = add if prev is None else prev + add
    return AmbientSymTensor(d, N, entries)


def verify_prop1(m: BoundaryModel, d: int, s: int):
    """End-to-end check of the type-based construction; returns (ok, detail)."""
    sysres = prop1_system(d, s)
    detail = {"system": sysres}
    if not sysres.get("solved") or not sysres.get("unique"):
        return False, detail
    T = build_prop1_tensor(m, d, s, sysres["x"])
    detail["column_symmetric"] = T.is_column_symmetric()
    symbols = extract_all_symbols(m, T)
    lower_ok = all(not symbols[(k, k)] for k in range(0, s))
    detail["lower_diag_symbols_vanish"] = lower_ok
    top = symbols[(s, s)]
    seed_key = ((1,) * s, (2,) * s)
    topc = top.components.get(seed_key)
    top_ok = (
        top.is_constant()
        and topc is not None
        and bool(topc)
        and all(key == seed_key for key in top.components)
    )
    detail["top_symbol_nonzero_seed_multiple"] = top_ok
    bgg = check_bgg(m, top, d, s)
    detail["bgg"] = bgg
    rec = check_symbol_recursions(m, symbols, d)
    detail["recursions"] = rec
    ok = (
        lower_ok
        and top_ok
        and all(okk for _, okk, _ in bgg)
        and all(okk for _, okk, _ in rec)
    )
    return ok, detail


def symmetry_space_dim(d: int, n: int):
    """Per-s dimensions of the symmetry components of order d (Weyl formula)."""
    from .decompose import lambda_plus_dual, weyl_dim

    N = n + 2
    out = []
    for s in range(0, d // 2 + 1):
        lam = (d - s, s) if s else (d,)
        out.append(weyl_dim(lambda_plus_dual(lam, N), N))
    return out, sum(out)
