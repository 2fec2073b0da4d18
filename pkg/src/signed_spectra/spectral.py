"""Exact characteristic polynomials and the two-eigenvalue classification.

Everything here is integer arithmetic; there is no floating point and no
tolerance anywhere.  For a signed graph whose spectrum has all but two
eigenvalues equal to ±1, the characteristic polynomial factors as

    (x^2 - a*x - b) * (x - 1)^f * (x + 1)^g,

and when additionally one root of the quadratic is above 1 and the other
below -1 (equivalently b > |a| + 1), the triple (a, b, n) determines the
whole spectrum.  `classify` sorts a graph into the three tiers and
`triple_of` extracts the triple.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import backend
from .graphs import SignedGraph

__all__ = [
    "CharPoly",
    "CharTriple",
    "GMembership",
    "Membership",
    "NotInGPrimeError",
    "char_poly",
    "classify",
    "extract_pm1",
    "triple_of",
    "INT64_SAFE_ORDER",
]

# Faddeev-LeVerrier intermediates for a {-1,0,1} matrix stay below 2^63 up
# to this order (Hadamard bound on minor sums); larger orders take the
# arbitrary-precision path.
INT64_SAFE_ORDER = 24


@dataclass(frozen=True)
class CharPoly:
    """A monic integer polynomial; `coeffs` ascending from the constant term."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("polynomial needs at least one coefficient")
        if self.coeffs[-1] != 1:
            raise ValueError("polynomial must be monic")
        if any(not isinstance(c, int) for c in self.coeffs):
            raise ValueError("coefficients must be Python ints")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __mul__(self, other: "CharPoly") -> "CharPoly":
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return CharPoly(tuple(out))

    def to_list(self) -> list[int]:
        """JSON form: plain integer list, constant term first."""
        return list(self.coeffs)

    @classmethod
    def from_list(cls, data) -> "CharPoly":
        return cls(tuple(int(c) for c in data))

    @classmethod
    def one(cls) -> "CharPoly":
        return cls((1,))

    @classmethod
    def x_minus(cls, root: int) -> "CharPoly":
        return cls((-root, 1))


def _charpoly_bigint(adj: np.ndarray) -> list[int]:
    """Faddeev-LeVerrier over Python ints; descending coefficients."""
    n = adj.shape[0]
    a = [[int(x) for x in row] for row in adj]
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    c = [1] + [0] * n
    rng = range(n)
    for k in range(1, n + 1):
        am = [[sum(a[i][t] * m[t][j] for t in rng) for j in rng] for i in rng]
        tr = sum(am[i][i] for i in rng)
        assert tr % k == 0
        c[k] = -(tr // k)
        m = [[am[i][j] + (c[k] if i == j else 0) for j in rng] for i in rng]
    assert all(m[i][j] == 0 for i in rng for j in rng), "Cayley-Hamilton residual"
    return c


def char_poly(g: SignedGraph) -> CharPoly:
    """det(xI - A) over the integers."""
    n = g.n
    if n == 0:
        return CharPoly.one()
    if n <= INT64_SAFE_ORDER:
        desc, resid = backend.charpoly_int64(g.adjacency.astype(np.int64))
        if resid:
            raise ArithmeticError("int64 characteristic polynomial overflowed")
        desc = [int(c) for c in desc]
    else:
        desc = _charpoly_bigint(g.adjacency)
    return CharPoly(tuple(reversed(desc)))


def _divide_linear(p: CharPoly, root: int) -> CharPoly:
    """Exact quotient p / (x - root); p(root) must be 0."""
    desc = list(reversed(p.coeffs))
    out = []
    acc = 0
    for c in desc[:-1]:
        acc = acc * root + c
        out.append(acc)
    assert acc * root + desc[-1] == 0, "not a root"
    return CharPoly(tuple(reversed(out)))


def extract_pm1(p: CharPoly) -> tuple[int, int, CharPoly]:
    """Maximal exponents (f, g) with (x-1)^f (x+1)^g dividing p, plus the quotient."""
    plus = 0
    while p.degree > 0 and p(1) == 0:
        p = _divide_linear(p, 1)
        plus += 1
    minus = 0
    while p.degree > 0 and p(-1) == 0:
        p = _divide_linear(p, -1)
        minus += 1
    return plus, minus, p


@dataclass(frozen=True, order=True)
class CharTriple:
    """The (a, b, n) of a factorization (x^2 - a*x - b)(x-1)^f (x+1)^g.

    Within the one-root-each-side class this is a complete cospectrality
    invariant.  The multiplicities follow from the zero trace:
    f = (n - 2 - a) / 2 and g = (n - 2 + a) / 2.
    """

    a: int
    b: int
    n: int

    def __post_init__(self):
        if self.b <= abs(self.a) + 1:
            raise ValueError(f"need b > |a| + 1, got (a={self.a}, b={self.b})")
        if self.n < 2:
            raise ValueError("order must be at least 2")
        if (self.n - self.a) % 2:
            raise ValueError(f"n and a must have equal parity, got {self}")
        if abs(self.a) > self.n - 2:
            raise ValueError(f"|a| cannot exceed n - 2, got {self}")

    @property
    def mult_plus_one(self) -> int:
        return (self.n - 2 - self.a) // 2

    @property
    def mult_minus_one(self) -> int:
        return (self.n - 2 + self.a) // 2

    def as_list(self) -> list[int]:
        return [self.a, self.b, self.n]

    @classmethod
    def from_list(cls, data) -> "CharTriple":
        a, b, n = (int(x) for x in data)
        return cls(a, b, n)

    def quadratic(self) -> CharPoly:
        return CharPoly((-self.b, -self.a, 1))

    def expected_charpoly(self) -> CharPoly:
        """The unique characteristic polynomial a graph with this triple has."""
        p = self.quadratic()
        for _ in range(self.mult_plus_one):
            p = p * CharPoly.x_minus(1)
        for _ in range(self.mult_minus_one):
            p = p * CharPoly.x_minus(-1)
        return p

    def reflected(self) -> "CharTriple":
        """Triple of the negated graph."""
        return CharTriple(-self.a, self.b, self.n)

    def padded(self, count: int) -> "CharTriple":
        """Triple after appending `count` isolated edges."""
        if count < 0:
            raise ValueError("count must be non-negative")
        return CharTriple(self.a, self.b, self.n + 2 * count)


class Membership(enum.Enum):
    NOT_IN_G = "not_in_g"
    IN_G_ONLY = "in_g_only"
    IN_G_PRIME = "in_g_prime"


@dataclass(frozen=True)
class GMembership:
    status: Membership
    triple: CharTriple | None
    detail: str

    def __post_init__(self):
        assert (self.triple is not None) == (self.status is Membership.IN_G_PRIME)


class NotInGPrimeError(ValueError):
    pass


def classify(g: SignedGraph) -> GMembership:
    """Tier of g by how many eigenvalues differ from ±1 and how they straddle.

    NOT_IN_G: more than two eigenvalues off ±1.  IN_G_ONLY: at most two,
    but not one above 1 and one below -1 (these graphs reduce to unions of
    complete graphs up to switching and negation).  IN_G_PRIME: quadratic
    factor x^2 - a*x - b with b > |a| + 1; the triple is attached.
    """
    plus, minus, q = extract_pm1(char_poly(g))
    d = q.degree
    if d > 2:
        return GMembership(Membership.NOT_IN_G, None, f"{d} eigenvalues differ from +-1")
    if d < 2:
        return GMembership(
            Membership.IN_G_ONLY, None, "at most one eigenvalue differs from +-1"
        )
    a = -q.coeffs[1]
    b = -q.coeffs[0]
    if b > abs(a) + 1:
        return GMembership(
            Membership.IN_G_PRIME,
            CharTriple(a, b, g.n),
            "one eigenvalue above 1 and one below -1",
        )
    return GMembership(
        Membership.IN_G_ONLY,
        None,
        "boundary case: two eigenvalues off +-1 on one side",
    )


def triple_of(g: SignedGraph) -> CharTriple:
    m = classify(g)
    if m.status is not Membership.IN_G_PRIME:
        raise NotInGPrimeError(f"graph is {m.status.value}: {m.detail}")
    assert m.triple is not None
    return m.triple
