"""Exterior algebra modulo the relations of a combinatorial type.

Elements are dicts {sorted index tuple: coefficient}; coefficients may be
Fractions or Polynomials, the code only relies on ring operations.  The
quotient has a monomial basis indexed by the subsets that contain no broken
circuit and have a nonempty affine intersection, and os_reduce rewrites any
element into that basis.
"""

from fractions import Fraction
from itertools import combinations


def wedge(t1, t2):
    """Concatenate two strictly increasing tuples: (sorted tuple, sign),
    or None when an index repeats."""
    if set(t1) & set(t2):
        return None
    seq = t1 + t2
    sign = 1
    # count inversions of the concatenation
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                sign = -sign
    return tuple(sorted(seq)), sign


def circuits(t):
    """Minimal dependent subsets of [n] with a common affine point, sorted."""
    out = []
    for size in range(2, min(t.ell + 1, t.n) + 1):
        for S in combinations(range(1, t.n + 1), size):
            if not t.is_dependent(S) or t.has_empty_intersection(S):
                continue
            if any(set(C) < set(S) for C in out):
                continue
            out.append(S)
    return sorted(out)


def broken_circuits(t):
    """Each circuit with its minimum removed, sorted."""
    return sorted({C[1:] for C in circuits(t)})


def nbc_basis(t, q):
    """Degree-q monomial basis: no broken circuit inside, nonempty
    intersection, lexicographic order."""
    if q < 0 or q > t.ell:
        raise ValueError("degree must be between 0 and ell")
    broken = broken_circuits(t)
    out = []
    for S in combinations(range(1, t.n + 1), q):
        if len(S) >= 2 and t.has_empty_intersection(S):
            continue
        if any(set(B) <= set(S) for B in broken):
            continue
        out.append(S)
    return out


def betti_numbers(t):
    return [len(nbc_basis(t, q)) for q in range(t.ell + 1)]


def _reduce_monomial(S, t):
    # memoized rewriting of a single monomial into the nbc basis
    cache = getattr(t, "_reduce_cache", None)
    if cache is None:
        cache = t._reduce_cache = {"broken": broken_circuits(t)}
    if S in cache:
        return cache[S]
    if len(S) > t.ell:
        # every monomial of degree past ell lies in the ideal: a set that
        # large is dependent or has empty intersection, either way it dies
        cache[S] = {}
        return {}
    if len(S) >= 2 and t.has_empty_intersection(S):
        cache[S] = {}
        return {}
    containing = [B for B in cache["broken"] if set(B) <= set(S)]
    if not containing:
        cache[S] = {S: 1}
        return cache[S]
    B = containing[0]  # lexicographically smallest broken circuit inside S
    k = min(j for j in range(1, t.n + 1) if tuple(sorted((j,) + B)) in _circuit_set(t) and j < B[0])
    rest = tuple(j for j in S if j not in B)
    _, outer = wedge(B, rest)
    # circuit relation: e_B = sum over c in B of +/- e_{(k,B) minus c}
    out = {}
    C = (k,) + B
    for i in range(1, len(C)):
        piece = C[:i] + C[i + 1:]
        w = wedge(piece, rest)
        if w is None:
            continue
        M, inner = w
        sgn = (-1) ** (i + 1) * outer * inner
        for U, c in _reduce_monomial(M, t).items():
            s = out.get(U, 0) + sgn * c
            if s:
                out[U] = s
            else:
                out.pop(U, None)
    cache[S] = out
    return out


def _circuit_set(t):
    cache = getattr(t, "_reduce_cache", None)
    if cache is None:
        cache = t._reduce_cache = {"broken": broken_circuits(t)}
    if "circuits" not in cache:
        cache["circuits"] = set(circuits(t))
    return cache["circuits"]


def os_reduce(x, t):
    """Rewrite an element of the free exterior algebra into the nbc basis."""
    out = {}
    for S, coeff in x.items():
        if not coeff:
            continue
        for U, c in _reduce_monomial(tuple(S), t).items():
            s = out.get(U, 0) + coeff * c
            if s:
                out[U] = s
            else:
                out.pop(U, None)
    return out


def multiply(x, y, t):
    """Product in the quotient; degrees past ell truncate to zero."""
    prod = {}
    for S1, c1 in x.items():
        for S2, c2 in y.items():
            if len(S1) + len(S2) > t.ell:
                continue
            w = wedge(tuple(S1), tuple(S2))
            if w is None:
                continue
            M, sgn = w
            c = c1 * c2 * sgn
            s = prod.get(M, 0) + c
            if s:
                prod[M] = s
            else:
                prod.pop(M, None)
    return os_reduce(prod, t)


def projection_matrix(t, q):
    """Matrix of the quotient map in degree q: rows run over all q-subsets
    of [n] in lexicographic order, columns over the nbc basis."""
    basis = nbc_basis(t, q)
    col = {T: i for i, T in enumerate(basis)}
    rows = []
    for S in combinations(range(1, t.n + 1), q):
        row = [Fraction(0)] * len(basis)
        for U, c in _reduce_monomial(S, t).items():
            row[col[U]] = Fraction(c)
        rows.append(row)
    return rows
