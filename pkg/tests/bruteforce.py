"""Slow reference implementations built straight from the definitions.

Nothing here reuses the package's enumerators; only the polynomial type is
shared, and that is checked against sympy separately.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

import sympy

from lrpoly.polyring import ONE, ZERO, Polynomial, generator


def cells(lam):
    return [(i, j) for i, row in enumerate(lam, 1) for j in range(1, row + 1)]


def col_lengths(lam):
    return [sum(1 for r in lam if r >= j) for j in range(1, (lam[0] if lam else 0) + 1)]


def column_sorted(lam):
    """Column order: left to right, bottom to top."""
    return sorted(cells(lam), key=lambda b: (b[1], -b[0]))


def _fillings(lam, values, row_ok, col_ok):
    """Fill boxes in row-major order, checking each against its left and upper neighbour."""
    boxes = cells(lam)
    t = {}

    def rec(k):
        if k == len(boxes):
            yield dict(t)
            return
        i, j = boxes[k]
        for v in values:
            if j > 1 and not row_ok(t[(i, j - 1)], v):
                continue
            if i > 1 and not col_ok(t[(i - 1, j)], v):
                continue
            t[(i, j)] = v
            yield from rec(k + 1)
            del t[(i, j)]

    yield from rec(0)


def reverse_tableaux(lam, n):
    return list(_fillings(lam, range(1, n + 1), lambda a, b: a >= b, lambda a, b: a > b))


def semistandard_tableaux(lam, n):
    return list(_fillings(lam, range(1, n + 1), lambda a, b: a <= b, lambda a, b: a < b))


def double_schur(lam, n):
    """Sum over reverse tableaux of prod (x_T - a_{T-c})."""
    total = ZERO
    for t in reverse_tableaux(lam, n):
        term = ONE
        for (i, j), v in t.items():
            term = term * (generator("x", v) - generator("a", v - (j - i)))
        total = total + term
    return total


def factorial_schur_u(lam, n):
    """Sum over semistandard tableaux of prod (x_T - u_{T+c})."""
    total = ZERO
    for t in semistandard_tableaux(lam, n):
        term = ONE
        for (i, j), v in t.items():
            term = term * (generator("x", v) - generator("u", v + (j - i)))
        total = total + term
    return total


def classical_schur(lam, n):
    total = ZERO
    for t in semistandard_tableaux(lam, n):
        term = ONE
        for v in t.values():
            term = term * generator("x", v)
        total = total + term
    return total


# -- sympy bridge ----------------------------------------------------------------


def sym(g_family, index):
    return sympy.Symbol(f"{g_family}{index}".replace("-", "m"))


def to_sympy(p: Polynomial):
    expr = sympy.Integer(0)
    for mono, c in p.items():
        term = sympy.Integer(c)
        for g, e in mono:
            term *= sym(g.family, g.index) ** e
        expr += term
    return sympy.expand(expr)


def bialternant_u(lam, n):
    """det[(x_j | u)^{lam_i + n - i}] / Vandermonde, as a sympy expression."""
    xs = [sym("x", j) for j in range(1, n + 1)]
    lam = list(lam) + [0] * (n - len(lam))

    def rising(x, k):
        out = sympy.Integer(1)
        for s in range(1, k + 1):
            out *= x - sym("u", s)
        return out

    num = sympy.Matrix(n, n, lambda i, j: rising(xs[j], lam[i] + n - 1 - i)).det()
    den = sympy.Matrix(n, n, lambda i, j: xs[j] ** (n - 1 - i)).det()
    q, r = sympy.div(sympy.expand(num), sympy.expand(den), *xs)
    assert r == 0
    return sympy.expand(q)


# -- chains and barred tableaux -------------------------------------------------


def is_partition(parts):
    return all(parts[k] >= parts[k + 1] for k in range(len(parts) - 1))


def chains(mu, nu):
    """All Yamanouchi symbols from mu to nu, by trying every row sequence."""
    rows = len(nu)
    l = sum(nu) - sum(mu)
    mu_p = list(mu) + [0] * (rows - len(mu))
    nu_p = list(nu)
    if len(mu) > rows or any(m > v for m, v in zip(mu_p, nu_p)):
        return []
    out = []
    for seq in product(range(1, rows + 1), repeat=l):
        cur = list(mu_p)
        steps = [tuple(cur)]
        ok = True
        for r in seq:
            cur[r - 1] += 1
            if not is_partition(cur) or cur[r - 1] > nu_p[r - 1]:
                ok = False
                break
            steps.append(tuple(cur))
        if ok:
            out.append((seq, steps))
    return out


def standard_skew_count(mu, nu):
    """Standard fillings of nu/mu, counted over permutations."""
    mu_set = set(cells(mu))
    skew = [b for b in cells(nu) if b not in mu_set]
    count = 0
    for perm in permutations(range(len(skew))):
        t = dict(zip(skew, perm))
        if all(t[b] < t[(b[0], b[1] + 1)] for b in skew if (b[0], b[1] + 1) in t) and all(
            t[b] < t[(b[0] + 1, b[1])] for b in skew if (b[0] + 1, b[1]) in t
        ):
            count += 1
    return count


def _part(steps_entry, r):
    return steps_entry[r - 1] if r <= len(steps_entry) else 0


def barred_terms(lam, mu, nu, n=None, bounded=True):
    """Yield (symbol, tableau, barred boxes, factors) for every barred tableau.

    ``bounded`` applies the first-row bound ``T(1, j) <= nu'_j`` with entry cap
    ``len(nu)``; otherwise entries run up to ``n``.
    """
    nu_cols = col_lengths(nu) + [0] * sum(lam)
    cap = len(nu) if bounded else n
    order = column_sorted(lam)
    width = lam[0] if lam else 0
    for seq, steps in chains(mu, nu):
        for t in reverse_tableaux(lam, cap):
            if bounded and any(t[(1, j)] > nu_cols[j - 1] for j in range(1, width + 1)):
                continue
            for pick in combinations(range(len(order)), len(seq)):
                if any(t[order[p]] != r for p, r in zip(pick, seq)):
                    continue
                chosen = set(pick)
                factors = []
                k = 0
                for pos, b in enumerate(order):
                    if pos in chosen:
                        k += 1
                        continue
                    v = t[b]
                    factors.append((v, _part(steps[k], v), b[1] - b[0]))
                yield seq, t, [order[p] for p in pick], factors


def lr(lam, mu, nu):
    total = ZERO
    for *_, factors in barred_terms(lam, mu, nu):
        term = ONE
        for v, rho, c in factors:
            term = term * (generator("a", v - rho) - generator("a", v - c))
        total = total + term
    return total


def lr_ab(lam, mu, nu, n):
    total = ZERO
    for *_, factors in barred_terms(lam, mu, nu, n=n, bounded=False):
        term = ONE
        for v, rho, c in factors:
            term = term * (generator("a", v - rho) - generator("b", v - c))
        total = total + term
    return total


# -- supertableaux ---------------------------------------------------------------


def reverse_supertableaux(lam, n):
    """Fillings by (value, primed) obeying the mixed monotonicity rules."""
    cols = col_lengths(lam)
    boxes = cells(lam)
    choices = []
    for i, j in boxes:
        low = cols[j - 1] - j + 1
        choices.append([(v, False) for v in range(1, n + 1)] + [(v, True) for v in range(low, n + 1)])
    out = []
    for vals in product(*choices):
        t = dict(zip(boxes, vals))
        ok = True
        for (i, j), (v, p) in t.items():
            right = t.get((i, j + 1))
            if right is not None:
                rv, rp = right
                if p and not rp:
                    ok = False
                elif not p and not rp and rv > v:
                    ok = False
                elif p and rp and rv >= v:
                    ok = False
            down = t.get((i + 1, j))
            if down is not None:
                dv, dp = down
                if p and not dp:
                    ok = False
                elif not p and not dp and dv >= v:
                    ok = False
                elif p and dp and dv > v:
                    ok = False
            if not ok:
                break
        if ok:
            out.append(t)
    return out


# -- classical expansion ---------------------------------------------------------


def classical_expand(P: Polynomial, n):
    """Expand a symmetric polynomial in x_1..x_n into Schur polynomials by peeling leading terms."""
    out = {}
    while P:
        best = None
        for mono, c in P.items():
            exps = [0] * n
            for g, e in mono:
                exps[g.index - 1] = e
            if best is None or exps > best[0]:
                best = (exps, c)
        exps, c = best
        lam = tuple(e for e in exps if e)
        out[lam] = c
        P = P - c * classical_schur(lam, n)
    return out
