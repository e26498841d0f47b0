"""Sparse multivariate polynomials over exact rationals.

Coefficients live in Q (stdlib Fraction), variables are y_1..y_n.  The weight
of the projective extra hyperplane never appears as a variable: y_{n+1} is
eliminated everywhere as -(y_1 + ... + y_n), see Polynomial.subset_sum.

Terms are stored sparsely as {exponent tuple: Fraction}; zero coefficients are
dropped eagerly, so equality is dict equality and `bool(p)` tests nonzero.
The canonical term order used for printing and serialization is graded
lexicographic: higher total degree first, ties broken lexicographically.
"""

from fractions import Fraction


def parse_rational(s):
    """Parse "p/q" or "p" into a Fraction; reject everything else."""
    s = s.strip()
    try:
        num, _, den = s.partition("/")
        p = int(num)
        q = int(den) if den else 1
    except ValueError:
        raise ValueError("not a rational literal: %r" % (s,))
    if q == 0:
        raise ValueError("zero denominator in rational literal: %r" % (s,))
    return Fraction(p, q)


def format_rational(q):
    # Fraction.__str__ already gives "p/q" in lowest terms / "p" for integers
    return str(q)


def _grlex_key(expo):
    # graded lex, descending: total degree first, then lexicographically
    # larger exponent vectors first (so y1^2 sorts before y1*y2)
    return (-sum(expo), tuple(-e for e in expo))


class Polynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for expo, c in terms.items():
                if c:
                    self.terms[expo] = self.terms.get(expo, Fraction(0)) + c
                    if not self.terms[expo]:
                        del self.terms[expo]

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def constant(cls, c, nvars):
        c = Fraction(c)
        if not c:
            return cls(nvars)
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, j, nvars):
        """The variable y_j, 1-based, 1 <= j <= nvars."""
        if not 1 <= j <= nvars:
            raise ValueError("variable index %d out of range 1..%d" % (j, nvars))
        expo = [0] * nvars
        expo[j - 1] = 1
        return cls(nvars, {tuple(expo): Fraction(1)})

    @classmethod
    def subset_sum(cls, S, nvars):
        """y_S = sum of y_j over j in S, where j = nvars+1 means the infinity
        weight -(y_1 + ... + y_nvars)."""
        coeffs = [0] * nvars
        for j in S:
            if j == nvars + 1:
                for k in range(nvars):
                    coeffs[k] -= 1
            else:
                coeffs[j - 1] += 1
        p = cls(nvars)
        for k, c in enumerate(coeffs):
            if c:
                expo = [0] * nvars
                expo[k] = 1
                p.terms[tuple(expo)] = Fraction(c)
        return p

    @classmethod
    def random(cls, rng, nvars, max_deg=2, max_terms=4):
        # test helper: a small random polynomial
        p = cls(nvars)
        for _ in range(rng.randint(0, max_terms)):
            expo = tuple(rng.randint(0, max_deg) for _ in range(nvars))
            c = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
            if c:
                p = p + cls(nvars, {expo: c})
        return p

    # ---- ring operations ----------------------------------------------

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError("mixed variable counts: %d vs %d" % (self.nvars, other.nvars))

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.nvars)
        self._check(other)
        terms = dict(self.terms)
        for expo, c in other.terms.items():
            s = terms.get(expo, Fraction(0)) + c
            if s:
                terms[expo] = s
            else:
                terms.pop(expo, None)
        out = Polynomial(self.nvars)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Polynomial(self.nvars)
        out.terms = {expo: -c for expo, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(other, self.nvars)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            out = Polynomial(self.nvars)
            if c:
                out.terms = {expo: c * v for expo, v in self.terms.items()}
            return out
        self._check(other)
        out = Polynomial(self.nvars)
        terms = out.terms
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                expo = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(expo, Fraction(0)) + c1 * c2
                if s:
                    terms[expo] = s
                else:
                    terms.pop(expo, None)
        return out

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        # comparison against a scalar
        return self == Polynomial.constant(other, self.nvars)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # ---- evaluation / substitution -------------------------------------

    def evaluate(self, lam):
        """Evaluate at a point, lam a sequence of nvars Fractions."""
        if len(lam) != self.nvars:
            raise ValueError("expected %d values, got %d" % (self.nvars, len(lam)))
        total = Fraction(0)
        for expo, c in self.terms.items():
            v = c
            for x, e in zip(lam, expo):
                if e:
                    v *= x ** e
            total += v
        return total

    def substitute(self, mapping):
        """Ring homomorphism determined by y_j -> mapping[j] (a Polynomial).
        Variables not in the mapping are left alone."""
        out = Polynomial.zero(self.nvars)
        for expo, c in self.terms.items():
            term = Polynomial.constant(c, self.nvars)
            for k, e in enumerate(expo):
                if not e:
                    continue
                img = mapping.get(k + 1)
                if img is None:
                    img = Polynomial.variable(k + 1, self.nvars)
                for _ in range(e):
                    term = term * img
            out = out + term
        return out

    # ---- presentation ---------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _grlex_key(kv[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for expo, c in self.sorted_terms():
            mono = "*".join(
                "y%d" % (k + 1) if e == 1 else "y%d^%d" % (k + 1, e)
                for k, e in enumerate(expo)
                if e
            )
            if not mono:
                body = format_rational(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = "%s*%s" % (format_rational(abs(c)), mono)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    __repr__ = __str__

    def to_json(self):
        return [
            {"coefficient": format_rational(c), "exponents": list(expo)}
            for expo, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, records, nvars):
        p = cls(nvars)
        for rec in records:
            expo = tuple(rec["exponents"])
            if len(expo) != nvars:
                raise ValueError("exponent tuple of length %d, expected %d" % (len(expo), nvars))
            c = parse_rational(rec["coefficient"])
            if c:
                p.terms[expo] = p.terms.get(expo, Fraction(0)) + c
                if not p.terms[expo]:
                    del p.terms[expo]
        return p
