import random
from fractions import Fraction

from osgm.linalg import (
    rank,
    rref,
    kernel_basis,
    coset_reduce,
    solve_row_combination,
    matmul,
    mat_evaluate,
    identity_matrix,
)
from osgm.poly import Polynomial


# ---------------------------------------------------------------------------
# Independent oracle: Bareiss fraction-free elimination over the integers.
# Kept deliberately separate from the library's Fraction-based elimination so
# rank always has two routes.
# ---------------------------------------------------------------------------

def bareiss_rank(m):
    m = [list(map(int, row)) for row in m]
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    prev = 1
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        if r == rows:
            break
    return r


def frac_matrix(rows):
    return [[Fraction(x) for x in row] for row in rows]


def random_int_matrix(rng, nrows, ncols, lo=-4, hi=4):
    return [[rng.randint(lo, hi) for _ in range(ncols)] for _ in range(nrows)]


def test_rank_against_bareiss_oracle():
    rng = random.Random(20240214)
    for _ in range(300):
        nrows = rng.randint(1, 7)
        ncols = rng.randint(1, 7)
        m = random_int_matrix(rng, nrows, ncols)
        assert rank(frac_matrix(m)) == bareiss_rank(m)


def test_rank_selberg_boundary_specialized():
    # 5x6 degree-1 boundary matrix of the Selberg arrangement specialized at
    # weights (1,2,2,1,-3); this weight vector satisfies the four resonance
    # equations, dropping the rank from 4 to 3
    m = frac_matrix(
        [
            [-2, -1, 3, 0, 0, 0],
            [0, 0, 0, -2, -1, 3],
            [-2, 0, 3, 2, 0, 0],
            [0, 1, 0, 0, -1, 3],
            [-2, 0, 3, 0, -1, 3],
        ]
    )
    assert rank(m) == 3
    assert bareiss_rank([[-2, -1, 3, 0, 0, 0], [0, 0, 0, -2, -1, 3], [-2, 0, 3, 2, 0, 0], [0, 1, 0, 0, -1, 3], [-2, 0, 3, 0, -1, 3]]) == 3
    ker = kernel_basis(m)
    assert len(ker) == 2
    # the cocycle e1 - e2 - e3 + e4 lies in the kernel span
    v = [Fraction(1), Fraction(-1), Fraction(-1), Fraction(1), Fraction(0)]
    assert coset_reduce(v, ker) == [Fraction(0)] * 5


def test_kernel_vectors_annihilate_and_are_normalized():
    rng = random.Random(99)
    for _ in range(150):
        nrows = rng.randint(1, 6)
        ncols = rng.randint(1, 6)
        m = frac_matrix(random_int_matrix(rng, nrows, ncols))
        ker = kernel_basis(m)
        assert len(ker) == nrows - rank(m)
        for v in ker:
            prod = [sum((v[i] * m[i][j] for i in range(nrows)), Fraction(0)) for j in range(ncols)]
            assert all(x == 0 for x in prod)
            lead = next(x for x in v if x != 0)
            assert lead == 1
        # basis vectors are independent
        if ker:
            assert rank(ker) == len(ker)


def test_rref_pivots_are_canonical():
    m = frac_matrix([[2, 4, 0], [1, 2, 1]])
    rows, pivots = rref(m)
    assert pivots == [0, 2]
    assert rows == frac_matrix([[1, 2, 0], [0, 0, 1]])


def test_coset_reduce_properties():
    rng = random.Random(5)
    for _ in range(100):
        dim = rng.randint(1, 6)
        base = frac_matrix(random_int_matrix(rng, rng.randint(0, dim), dim))
        v = [Fraction(rng.randint(-4, 4)) for _ in range(dim)]
        red = coset_reduce(v, base)
        # idempotent
        assert coset_reduce(red, base) == red
        # difference lies in the subspace
        diff = [a - b for a, b in zip(v, red)]
        if base:
            assert rank(base + [diff]) == rank(base)
        else:
            assert red == v
        # coset invariance: shifting v by any basis row does not change it
        if base:
            shifted = [a + b for a, b in zip(v, base[0])]
            assert coset_reduce(shifted, base) == red
    # zero exactly on members of the span
    base = frac_matrix([[1, 1, 0], [0, 0, 1]])
    assert coset_reduce([Fraction(3), Fraction(3), Fraction(-2)], base) == [Fraction(0)] * 3
    assert coset_reduce([Fraction(1), Fraction(0), Fraction(0)], base) != [Fraction(0)] * 3


def test_solve_row_combination():
    rng = random.Random(31)
    for _ in range(100):
        dim = rng.randint(1, 6)
        k = rng.randint(1, 4)
        rows = frac_matrix(random_int_matrix(rng, k, dim))
        coeffs = [Fraction(rng.randint(-3, 3)) for _ in range(k)]
        w = [sum((coeffs[i] * rows[i][j] for i in range(k)), Fraction(0)) for j in range(dim)]
        x = solve_row_combination(rows, w)
        assert x is not None
        for j in range(dim):
            assert sum((x[i] * rows[i][j] for i in range(k)), Fraction(0)) == w[j]
    # inconsistent system reports None
    assert solve_row_combination(frac_matrix([[1, 0]]), [Fraction(0), Fraction(1)]) is None


def test_matmul_and_polynomial_evaluation_commute():
    rng = random.Random(44)
    n = 3
    lam = tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n))
    for _ in range(25):
        a = [[Polynomial.random(rng, n, max_deg=1, max_terms=3) for _ in range(3)] for _ in range(2)]
        b = [[Polynomial.random(rng, n, max_deg=1, max_terms=3) for _ in range(2)] for _ in range(3)]
        ab = matmul(a, b, Polynomial.zero(n))
        left = mat_evaluate(ab, lam)
        right = matmul(mat_evaluate(a, lam), mat_evaluate(b, lam), Fraction(0))
        assert left == right


def test_identity_matrix():
    i3 = identity_matrix(3)
    m = frac_matrix([[1, 2, 3], [0, 1, 0], [5, 0, 1]])
    assert matmul(i3, m, Fraction(0)) == m
    assert matmul(m, i3, Fraction(0)) == m
