"""Connection matrices for one-parameter degenerations of the weighted complex.

A degeneration is recorded either as a pair of combinatorial types (the
special one having strictly more dependent sets) or as a pencil datum (S, r):
the hyperplanes indexed by S fall into a common rank-r subspace while
everything else stays generic.  Each newly dependent set K contributes a
basic endomorphism of the generic weight complex, and their sum, weighted by
how far K drops in rank, commutes with the differential.  Pushing the sum
down to a type's own complex and specializing the weights gives the exact
matrix of the connection on cohomology.

Everything acts on row vectors: a map with matrix M sends x to x @ M, so
composition reads left to right and the chain condition in degree q is
W_q @ D_q == D_q @ W_{q+1}.
"""

from fractions import Fraction
from itertools import combinations
from math import comb

from .aomoto import build_aomoto, os_cohomology
from .arrangement import (
    compare_types,
    dep_star,
    generic_type,
    multiplicity_pencil,
    pencil_starred,
)
from .linalg import (
    identity_matrix,
    kernel_basis,
    mat_add,
    mat_evaluate,
    mat_scale,
    matmul,
    rank,
)
from .orlik_solomon import projection_matrix, wedge
from .poly import Polynomial, format_rational

# the generic complex and the basic endomorphisms only depend on (n, ell),
# and the acceptance sweeps revisit them constantly
_complex_cache = {}
_base_cache = {}
_omega_cache = {}


def _generic_complex(n, ell):
    key = (n, ell)
    if key not in _complex_cache:
        _complex_cache[key] = build_aomoto(generic_type(n, ell))
    return _complex_cache[key]


def _mm(a, b, zero):
    if not a:
        return []
    if not b or not b[0]:
        return [[] for _ in a]
    return matmul(a, b, zero)


def sigma_for(S, n):
    """Order-preserving relabeling of [n+1] carrying 1..|S| onto sorted S."""
    S = tuple(sorted(S))
    inside = set(S)
    rest = tuple(j for j in range(1, n + 2) if j not in inside)
    return S + rest


class SigmaAction:
    """Relabeling of the projective closure acting on the generic complex.

    `images[i-1]` is where index i goes; index n+1 is the extra hyperplane
    at infinity.  The action is semilinear: coefficients transform by the
    substitution y_i -> y_images(i), where y_{n+1} stands for minus the sum
    of the others, and the degree-p monomials transform by mats[p] (row T
    holds the coordinates of the image of e_T).  When the relabeling moves
    some index to n+1, the image generator leaves the affine chart and is
    rewritten through the relation that the n+1 closure classes sum to
    zero, which is where the rational (not just permutation) matrices come
    from.
    """

    def __init__(self, images, n, ell, validate=True):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, n + 2)):
            raise ValueError("images must be a bijection of 1..%d" % (n + 1))
        self.images = images
        self.n = n
        self.ell = ell
        self.subst = {}
        for j in range(1, n + 1):
            m = images[j - 1]
            if m == n + 1:
                self.subst[j] = Polynomial.subset_sum((n + 1,), n)
            else:
                self.subst[j] = Polynomial.variable(m, n)
        self.mats = [self._degree_matrix(p) for p in range(ell + 1)]
        if validate:
            self._check_chain()

    def _gen_image(self, i):
        """Coordinates of the image of e_i in the affine generators."""
        coords = [Fraction(0)] * self.n
        target = self.images[i - 1]
        m_inf = self.images[self.n]
        if m_inf == self.n + 1:
            coords[target - 1] = Fraction(1)
        elif target == self.n + 1:
            coords[m_inf - 1] = Fraction(-1)
        else:
            coords[target - 1] = Fraction(1)
            coords[m_inf - 1] -= Fraction(1)
        return coords

    def _degree_matrix(self, p):
        if p == 0:
            return identity_matrix(1)
        n = self.n
        subsets = list(combinations(range(1, n + 1), p))
        index = {T: k for k, T in enumerate(subsets)}
        gen = [self._gen_image(i) for i in range(1, n + 1)]
        out = []
        for T in subsets:
            acc = {(): Fraction(1)}
            for i in T:
                nxt = {}
                for mono, c in acc.items():
                    for m in range(1, n + 1):
                        cm = gen[i - 1][m - 1]
                        if not cm:
                            continue
                        w = wedge(mono, (m,))
                        if w is None:
                            continue
                        U, sgn = w
                        val = nxt.get(U, Fraction(0)) + c * cm * sgn
                        if val:
                            nxt[U] = val
                        elif U in nxt:
                            del nxt[U]
                acc = nxt
            row = [Fraction(0)] * len(subsets)
            for U, c in acc.items():
                row[index[U]] = c
            out.append(row)
        return out

    def _check_chain(self):
        cx = _generic_complex(self.n, self.ell)
        zero = Polynomial.zero(self.n)
        for p in range(self.ell):
            twisted = self.subst_mat(cx.boundary[p])
            if _mm(twisted, self.mats[p + 1], zero) != _mm(self.mats[p], cx.boundary[p], zero):
                raise AssertionError("relabeling fails to intertwine the differential")

    def substitute(self, f):
        return f.substitute(self.subst)

    def subst_mat(self, m):
        return [[self.substitute(c) for c in row] for row in m]

    def inverse(self):
        inv = [0] * (self.n + 1)
        for i, m in enumerate(self.images, start=1):
            inv[m - 1] = i
        return SigmaAction(tuple(inv), self.n, self.ell, validate=False)


class ChainEndomorphism:
    """Degreewise square matrices over Q[y] commuting with the differential.

    Instances are treated as immutable once built; sums and induced maps
    always allocate fresh matrices, so cached copies can be shared freely.
    """

    def __init__(self, cx, mats, validate=True):
        self.cx = cx
        self.mats = mats
        for q, m in enumerate(mats):
            size = len(cx.bases[q])
            if len(m) != size or any(len(row) != size for row in m):
                raise ValueError("degree-%d matrix is not %dx%d" % (q, size, size))
        if validate:
            self._check_chain()

    def _check_chain(self):
        zero = Polynomial.zero(self.cx.t.n)
        for q in range(len(self.mats) - 1):
            d = self.cx.boundary[q]
            if _mm(self.mats[q], d, zero) != _mm(d, self.mats[q + 1], zero):
                raise ValueError("matrices do not commute with the differential "
                                 "in degree %d" % q)

    def specialize(self, lam):
        """Rational matrices at a concrete weight vector."""
        return [mat_evaluate(m, lam.values) for m in self.mats]


def _boundary_terms(S):
    """Alternating-sign facets of a sorted tuple: [(S minus a spot, sign)]."""
    return [
        (S[:a] + S[a + 1:], 1 if a % 2 == 0 else -1)
        for a in range(len(S))
    ]


def _omega_base(k, n, ell):
    """Matrices of the basic endomorphism for the leading set (1, ..., k).

    Only two degrees can be nonzero: in degree k-1 a monomial one index
    short of the set picks up the missing variable times the boundary of
    the completed monomial, and in degree k the set's own monomial maps to
    the weighted one-form times its boundary.  Sets too large for the
    ambient dimension (or reaching past n) act as zero.
    """
    key = (k, n, ell)
    if key in _base_cache:
        return _base_cache[key]
    cx = _generic_complex(n, ell)
    zero = Polynomial.zero(n)
    mats = []
    for p in range(ell + 1):
        size = len(cx.bases[p])
        mats.append([[zero] * size for _ in range(size)])
    if k <= n:
        s0 = tuple(range(1, k + 1))
        bnd = _boundary_terms(s0)
        if k - 1 <= ell:
            p = k - 1
            index = {T: i for i, T in enumerate(cx.bases[p])}
            for j in s0:
                T = tuple(t for t in s0 if t != j)
                _, sgn = wedge((j,), T)
                yj = Polynomial.variable(j, n)
                row = mats[p][index[T]]
                for V, bsgn in bnd:
                    row[index[V]] = row[index[V]] + yj * (sgn * bsgn)
        if k <= ell:
            p = k
            index = {T: i for i, T in enumerate(cx.bases[p])}
            row = mats[p][index[s0]]
            for U, bsgn in bnd:
                for j in range(1, n + 1):
                    w = wedge((j,), U)
                    if w is None:
                        continue
                    V, sgn = w
                    row[index[V]] = row[index[V]] + Polynomial.variable(j, n) * (bsgn * sgn)
    _base_cache[key] = mats
    return mats


def _clean_subset(S, n):
    S = tuple(int(j) for j in S)
    if len(set(S)) != len(S):
        raise ValueError("repeated index in %r" % (S,))
    if len(S) < 2:
        raise ValueError("a dependence needs at least two hyperplanes")
    if not all(1 <= j <= n + 1 for j in S):
        raise ValueError("indices must lie in 1..%d" % (n + 1))
    return tuple(sorted(S))


def omega_tilde(S, n, ell, sigma=None):
    """Basic endomorphism of the generic complex attached to a subset S.

    Computed by conjugating the leading-set matrices through a relabeling
    that carries 1..|S| onto S.  Any bijection extending that assignment
    gives the same endomorphism; pass `sigma` to use a specific one, else
    the order-preserving extension is chosen (and the result cached).
    """
    S = _clean_subset(S, n)
    k = len(S)
    key = (S, n, ell)
    if sigma is None and key in _omega_cache:
        return _omega_cache[key]
    cx = _generic_complex(n, ell)
    base = _omega_base(k, n, ell)
    if sigma is None:
        images = sigma_for(S, n)
    else:
        images = tuple(int(i) for i in sigma)
        if images[:k] != S:
            raise ValueError("sigma must carry 1..%d onto sorted S" % k)
    if images == tuple(range(1, n + 2)):
        mats = base
    else:
        act = SigmaAction(images, n, ell, validate=False)
        inv = act.inverse()
        zero = Polynomial.zero(n)
        mats = []
        for p in range(ell + 1):
            twisted = act.subst_mat(base[p])
            mats.append(_mm(_mm(inv.mats[p], twisted, zero), act.mats[p], zero))
    e = ChainEndomorphism(cx, mats, validate=True)
    if sigma is None:
        _omega_cache[key] = e
    return e


def pencil_sum_terms(S, r, n, ell):
    """Dependent sets of the pencil type on (S, r) with their multiplicities.

    Keyed by the subsets of [n+1] of size at most ell+1 that the pencil
    forces to be dependent; the value is how far the subset's rank drops.
    """
    S = _clean_subset(S, n)
    if not 1 <= r <= min(ell, len(S) - 1):
        raise ValueError("pencil rank r out of range")
    out = {}
    for q in range(2, min(ell + 1, n + 1) + 1):
        for K in combinations(range(1, n + 2), q):
            if pencil_starred(K, S, r, ell):
                out[K] = multiplicity_pencil(K, S, r, ell, n)
    return out


def _weighted_sum(terms, n, ell):
    cx = _generic_complex(n, ell)
    zero = Polynomial.zero(n)
    mats = []
    for p in range(ell + 1):
        size = len(cx.bases[p])
        mats.append([[zero] * size for _ in range(size)])
    for K in sorted(terms):
        m = terms[K]
        e = omega_tilde(K, n, ell)
        for p in range(ell + 1):
            part = e.mats[p]
            if m != 1:
                part = mat_scale(part, Fraction(m), zero)
            mats[p] = mat_add(mats[p], part)
    return ChainEndomorphism(cx, mats, validate=True)


def omega_tilde_sum(S, r, n, ell):
    """Connection endomorphism of the pencil degeneration on (S, r)."""
    return _weighted_sum(pencil_sum_terms(S, r, n, ell), n, ell)


def _rank_in_type(K, t):
    """Matroid rank of K read off the type's dependent-set data."""
    top = min(len(K), t.ell + 1)
    for size in range(top, 1, -1):
        for J in combinations(K, size):
            if not t.is_dependent(J):
                return size
    return min(len(K), 1)


def relative_multiplicities(t_special, t_general):
    """Sets dependent in the first type but not the second, with their
    rank drop measured in the special type.

    t_special is the degenerate position (more dependent sets); the types
    must be strictly comparable or the pair is rejected.
    """
    if compare_types(t_special, t_general) != "t2_finer":
        raise ValueError("first type must have strictly more dependent sets")
    out = {}
    for q in sorted(t_special.dep):
        gen = set(t_general.dep.get(q, []))
        for K in t_special.dep[q]:
            if K not in gen:
                out[K] = len(K) - _rank_in_type(K, t_special)
    return out


def omega_tilde_pair(t_special, t_general):
    """Connection endomorphism of a degeneration given by two types."""
    n, ell = t_general.n, t_general.ell
    return _weighted_sum(relative_multiplicities(t_special, t_general), n, ell)


def induce_on_type(e, t):
    """Push an endomorphism of the generic complex down to a type's complex.

    The generic monomials map onto the type's basis by rewriting modulo its
    relations; the map descends exactly when it sends every relation back
    into the relation span, which is checked coefficient by coefficient
    (the variables just ride along, so the check is rational linear
    algebra) and reported as an invalid covering when it fails.
    """
    if (t.n, t.ell) != (e.cx.t.n, e.cx.t.ell):
        raise ValueError("type does not live on the endomorphism's (n, ell)")
    n, ell = t.n, t.ell
    cx = build_aomoto(t)
    zero = Polynomial.zero(n)
    gen_bases = e.cx.bases
    mats = []
    for q in range(ell + 1):
        proj = projection_matrix(t, q)
        for v in kernel_basis(proj):
            image = matmul([v], e.mats[q], zero)[0]
            pushed = matmul([image], proj, zero)[0]
            if any(pushed):
                raise ValueError(
                    "not a valid covering datum: degree-%d relations "
                    "are not preserved" % q)
        index = {T: i for i, T in enumerate(gen_bases[q])}
        rows = [matmul([e.mats[q][index[T]]], proj, zero)[0] for T in cx.bases[q]]
        mats.append(rows)
    return ChainEndomorphism(cx, mats, validate=True)


def gm_endomorphism(e, lam, q, h=None):
    """Matrix of the induced action on degree-q cohomology at weights lam.

    Rows give the image of each cohomology class in the class basis; pass a
    precomputed cohomology object to avoid recomputing it per degree.
    """
    if not 0 <= q < len(e.mats):
        raise ValueError("degree out of range")
    if h is None:
        h = os_cohomology(e.cx.t, lam)
    w = mat_evaluate(e.mats[q], lam.values)
    out = []
    for z in h.reps[q]:
        img = matmul([z], w, Fraction(0))[0]
        coords = h.class_coords(q, img)
        if coords is None:
            raise RuntimeError("image of a closed class is not closed in degree %d" % q)
        out.append(coords)
    return out


def _pencil_star_profile(S, r, n, ell):
    out = set()
    for q in range(2, n + 2):
        for K in combinations(range(1, n + 2), q):
            if pencil_starred(K, S, r, ell):
                out.add(K)
    return out


def principal_dependence(t_special, t_general):
    """The unique pencil (S, r) whose new dependences are exactly the
    difference of the two types.

    Both inclusions are enforced: every set the pencil forces must be
    dependent in the special type, and every newly dependent set must be
    forced by the pencil.  Degenerations that fail to come from a single
    pencil are rejected.
    """
    if compare_types(t_special, t_general) != "t2_finer":
        raise ValueError("first type must have strictly more dependent sets")
    n, ell = t_special.n, t_special.ell
    star_sp = dep_star(t_special)
    star_gen = dep_star(t_general)
    sp_all = set()
    for q in star_sp:
        sp_all.update(star_sp[q])
    new = set()
    for q in star_sp:
        new.update(set(star_sp[q]) - set(star_gen.get(q, [])))
    if not new:
        raise ValueError("the types share all projective dependences")
    found = []
    for S in sorted(new):
        for r in range(1, min(ell, len(S) - 1) + 1):
            profile = _pencil_star_profile(S, r, n, ell)
            if profile <= sp_all and new <= profile:
                found.append((S, r))
    if not found:
        raise ValueError("no single pencil accounts for the degeneration")
    if len(found) > 1:
        raise ValueError("principal dependence is not unique: %r" % (found,))
    return found[0]


def eigenspace_dims(n, s, r, q):
    """Predicted multiplicities (d_0, d_S) of the two eigenvalues of the
    pencil endomorphism in degree q, for |S| = s hyperplanes of n falling
    to rank r."""
    if not 2 <= s <= n:
        raise ValueError("s must lie in 2..n")
    if not 1 <= r <= s - 1:
        raise ValueError("r must lie in 1..s-1")
    if q < 0:
        raise ValueError("q must be nonnegative")

    def c(a, b):
        return comb(a, b) if 0 <= b <= a else 0

    cross = c(s - 1, r) * c(n - s, q - r)
    d0 = sum(c(s, p) * c(n - s, q - p) for p in range(0, r + 1)) - cross
    ds = sum(c(s, p) * c(n - s, q - p) for p in range(r + 1, min(q, s) + 1)) + cross
    return d0, ds


def spectrum_check(e, S):
    """Symbolically verify M (M - y_S I) = 0 in each degree.

    y_S is the sum of the variables indexed by S (index n+1 contributing
    minus the total).  Returns (True, None) or (False, witness) with the
    first failing degree and entry.
    """
    n = e.cx.t.n
    ys = Polynomial.subset_sum(tuple(S), n)
    zero = Polynomial.zero(n)
    for q, m in enumerate(e.mats):
        size = len(m)
        shifted = [
            [m[i][j] - ys if i == j else m[i][j] for j in range(size)]
            for i in range(size)
        ]
        prod = _mm(m, shifted, zero)
        for i in range(size):
            for j in range(size):
                if prod[i][j] != zero:
                    return False, {"degree": q, "row": i, "col": j}
    return True, None


def spectrum_report(S, r, lam, n, ell):
    """Specialized eigenvalue summary of the pencil endomorphism at lam.

    Per degree: the two predicted multiplicities and whether the
    specialized matrix actually satisfies the quadratic relation with the
    predicted ranks.  A weight sum of zero collapses the two eigenvalues
    and the prediction does not apply.
    """
    S = _clean_subset(S, n)
    lam_s = lam.subset_sum(S)
    if lam_s == 0:
        return {
            "lambda_S": "0",
            "message": "spectrum theorem inapplicable: lambda_S = 0",
            "degrees": [],
        }
    e = omega_tilde_sum(S, r, n, ell)
    mats = e.specialize(lam)
    degrees = []
    for q, m in enumerate(mats):
        d0, ds = eigenspace_dims(n, len(S), r, q)
        size = len(m)
        shifted = [
            [m[i][j] - (lam_s if i == j else 0) for j in range(size)]
            for i in range(size)
        ]
        quad = _mm(m, shifted, Fraction(0))
        ok = (
            all(not c for row in quad for c in row)
            and rank(m) == ds
            and rank(shifted) == d0
        )
        degrees.append({
            "degree": q,
            "lambda_S": format_rational(lam_s),
            "d0": d0,
            "dS": ds,
            "verified": ok,
        })
    return {"lambda_S": format_rational(lam_s), "degrees": degrees}
