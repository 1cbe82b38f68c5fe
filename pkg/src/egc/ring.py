"""Prime-field substrate: the deformed difference, Graham-positive sums,
evaluation points, and sparse polynomials with divided differences."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

DEFAULT_PRIME = 2305843009213693951  # 2^61 - 1


class EvaluationError(ArithmeticError):
    """A denominator vanished at the evaluation point; caller resamples."""


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 3317044064679887385961981."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def field_inv(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise EvaluationError("division by zero in the prime field")
    return pow(a, p - 2, p)


def ominus(a: int, b: int, beta: int, p: int) -> int:
    """a (-) b = (a - b) / (1 + beta*b)."""
    den = (1 + beta * b) % p
    if den == 0:
        raise EvaluationError(f"1 + beta*b vanishes (b={b})")
    return (a - b) * field_inv(den, p) % p


def oneg(b: int, beta: int, p: int) -> int:
    """(-) b = 0 (-) b, the additive inverse for the deformed sum."""
    return ominus(0, b, beta, p)


def prec_key(i: int):
    """Sort key realizing the order 1 < 2 < ... < -2 < -1 < 0."""
    return (0, i) if i >= 1 else (1, i)


def prec(i: int, j: int) -> bool:
    return prec_key(i) < prec_key(j)


def factor_type(f: tuple[int, int]) -> int:
    i, j = f
    if not prec(i, j):
        raise ValueError(f"factor {f} violates the positivity order")
    if 0 < i < j:
        return 1
    if i < j <= 0:
        return 2
    return 3  # j <= 0 < i


def factor_sort_key(f: tuple[int, int]):
    return (factor_type(f), f[0], f[1])


def omega1_factor(f: tuple[int, int]) -> tuple[int, int]:
    """(i, j) -> (1-j, 1-i): swaps Types 1 and 2, fixes Type 3."""
    i, j = f
    return (1 - j, 1 - i)


@dataclass(frozen=True)
class GrahamMonomial:
    """A multiset of factors (i, j), each standing for beta*(y_i (-) y_j),
    with an extra beta exponent beyond one per factor."""

    factors: tuple[tuple[int, int], ...] = ()
    beta_shift: int = 0

    def __post_init__(self):
        factors = tuple(sorted((tuple(f) for f in self.factors),
                               key=factor_sort_key))
        for f in factors:
            factor_type(f)  # validates prec(i, j)
        object.__setattr__(self, "factors", factors)

    def types_present(self) -> set[int]:
        return {factor_type(f) for f in self.factors}

    def shifted(self, k: int) -> "GrahamMonomial":
        return GrahamMonomial(self.factors, self.beta_shift + k)

    def __mul__(self, other: "GrahamMonomial") -> "GrahamMonomial":
        return GrahamMonomial(self.factors + other.factors,
                              self.beta_shift + other.beta_shift)


class GrahamSum:
    """Formal nonnegative-integer combination of Graham monomials."""

    def __init__(self, terms: dict[GrahamMonomial, int] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}
        if any(c < 0 for c in self.terms.values()):
            raise ValueError("Graham sums have positive coefficients")

    @classmethod
    def zero(cls) -> "GrahamSum":
        return cls()

    @classmethod
    def one(cls) -> "GrahamSum":
        return cls({GrahamMonomial(): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def add_term(self, mono: GrahamMonomial, coeff: int = 1):
        self.terms[mono] = self.terms.get(mono, 0) + coeff

    def __add__(self, other: "GrahamSum") -> "GrahamSum":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return GrahamSum(out)

    def __mul__(self, other: "GrahamSum") -> "GrahamSum":
        out: dict[GrahamMonomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return GrahamSum(out)

    def shifted(self, k: int) -> "GrahamSum":
        return GrahamSum({m.shifted(k): c for m, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, GrahamSum) and self.terms == other.terms

    def canonical(self) -> list[tuple[GrahamMonomial, int]]:
        return sorted(self.terms.items(),
                      key=lambda mc: ([factor_sort_key(f) for f in mc[0].factors],
                                      mc[0].beta_shift))

    def __repr__(self):
        if self.is_zero():
            return "GrahamSum(0)"
        parts = []
        for m, c in self.canonical():
            fs = "".join(f"b(y{i}-y{j})" for i, j in m.factors) or "1"
            parts.append(f"{c}*{fs}" + (f"*b^{m.beta_shift}" if m.beta_shift else ""))
        return "GrahamSum(" + " + ".join(parts) + ")"

    def to_json(self, normalization_beta_exp: int) -> str:
        monos = []
        for m, c in self.canonical():
            if m.beta_shift != 0:
                raise ValueError("serialize normalized sums only")
            monos.append({"factors": [list(f) for f in m.factors], "mult": c})
        return json.dumps({"normalization_beta_exp": normalization_beta_exp,
                           "monomials": monos})

    @classmethod
    def from_json(cls, text: str) -> tuple["GrahamSum", int]:
        data = json.loads(text)
        terms = {}
        for mono in data["monomials"]:
            m = GrahamMonomial(tuple(tuple(f) for f in mono["factors"]))
            terms[m] = terms.get(m, 0) + mono["mult"]
        return cls(terms), data["normalization_beta_exp"]

    def text_lines(self) -> list[str]:
        if self.is_zero():
            return ["0"]
        lines = []
        for m, c in self.canonical():
            fs = "".join(f"β(y{i}⊖y{j})" for i, j in m.factors) or "1"
            prefix = "" if c == 1 else f"{c}·"
            shift = f" · β^{m.beta_shift}" if m.beta_shift else ""
            lines.append(prefix + fs + shift)
        return lines


def eval_graham(gsum: GrahamSum, point: "EvaluationPoint") -> int:
    p, beta = point.prime, point.beta
    total = 0
    for m, c in gsum.terms.items():
        exp = m.beta_shift + len(m.factors)
        if exp >= 0:
            bpow = pow(beta, exp, p)
        else:
            bpow = pow(field_inv(beta, p), -exp, p)
        val = c % p * bpow % p
        for i, j in m.factors:
            val = val * ominus(point.y_val(i), point.y_val(j), beta, p) % p
        total = (total + val) % p
    return total


@dataclass(frozen=True)
class EvaluationPoint:
    """An assignment of beta and sparse x/y values into F_p.

    Unassigned indices read as 0.  Hashable so evaluations can be cached.
    """

    prime: int
    beta: int
    x: tuple[tuple[int, int], ...] = ()
    y: tuple[tuple[int, int], ...] = ()
    _xd: dict = field(default=None, compare=False, hash=False, repr=False)
    _yd: dict = field(default=None, compare=False, hash=False, repr=False)

    def __post_init__(self):
        if not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")
        x = tuple(sorted((i, v % self.prime) for i, v in dict(self.x).items()
                         if v % self.prime))
        y = tuple(sorted((j, v % self.prime) for j, v in dict(self.y).items()
                         if v % self.prime))
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "beta", self.beta % self.prime)
        object.__setattr__(self, "_xd", dict(x))
        object.__setattr__(self, "_yd", dict(y))
        for _, v in x + y:
            if (1 + self.beta * v) % self.prime == 0:
                raise EvaluationError("1 + beta*value vanishes; resample")

    @classmethod
    def make(cls, prime: int, beta: int, x: dict | None = None,
             y: dict | None = None) -> "EvaluationPoint":
        return cls(prime, beta, tuple((x or {}).items()), tuple((y or {}).items()))

    def x_val(self, i: int) -> int:
        return self._xd.get(i, 0)

    def y_val(self, j: int) -> int:
        return self._yd.get(j, 0)

    @property
    def x_support(self) -> frozenset[int]:
        return frozenset(self._xd)

    @property
    def y_support(self) -> frozenset[int]:
        return frozenset(self._yd)

    def ominus(self, a: int, b: int) -> int:
        return ominus(a, b, self.beta, self.prime)

    def with_x_to_y(self) -> "EvaluationPoint":
        """Replace every x_i by y_i (the x -> y substitution)."""
        return EvaluationPoint(self.prime, self.beta, self.y, self.y)

    def with_x_permuted(self, pi) -> "EvaluationPoint":
        """New point with x'_i = x_{pi(i)}; pi is a Permutation."""
        idx = set(self._xd)
        idx |= {pi.inverse()(i) for i in idx}
        newx = tuple((i, self.x_val(pi(i))) for i in idx)
        return EvaluationPoint(self.prime, self.beta, newx, self.y)

    def omega1(self) -> "EvaluationPoint":
        """x_i -> (-)x_{1-i} and y_i -> (-)y_{1-i}."""
        newx = tuple((1 - i, oneg(v, self.beta, self.prime))
                     for i, v in self._xd.items())
        newy = tuple((1 - j, oneg(v, self.beta, self.prime))
                     for j, v in self._yd.items())
        return EvaluationPoint(self.prime, self.beta, newx, newy)


def sample_point(prime: int, rng, x_indices, y_indices, beta: int | None = None,
                 distinct_x: bool = False, max_tries: int = 100) -> EvaluationPoint:
    """Random point with nonzero values on the given supports; resamples on
    vanishing denominators."""
    for _ in range(max_tries):
        b = beta if beta is not None else rng.randrange(1, prime)
        try:
            xs = {i: rng.randrange(1, prime) for i in x_indices}
            if distinct_x and len(set(xs.values())) != len(xs):
                continue
            ys = {j: rng.randrange(1, prime) for j in y_indices}
            return EvaluationPoint.make(prime, b, xs, ys)
        except EvaluationError:
            continue
    raise EvaluationError("could not sample a valid point")


MAX_VARS = 10


class SparsePoly:
    """Polynomial in x_1..x_n over F_p, stored as exponent-vector -> coeff."""

    __slots__ = ("n", "prime", "terms")

    def __init__(self, n: int, prime: int, terms: dict[tuple, int] | None = None):
        if not 0 <= n <= MAX_VARS:
            raise ValueError(f"variable count {n} outside 0..{MAX_VARS}")
        self.n = n
        self.prime = prime
        self.terms = {e: c % prime for e, c in (terms or {}).items() if c % prime}

    @classmethod
    def const(cls, c: int, n: int, prime: int) -> "SparsePoly":
        return cls(n, prime, {(0,) * n: c})

    @classmethod
    def var(cls, i: int, n: int, prime: int) -> "SparsePoly":
        e = [0] * n
        e[i - 1] = 1
        return cls(n, prime, {tuple(e): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (isinstance(other, SparsePoly) and self.n == other.n
                and self.prime == other.prime and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, self.prime, tuple(sorted(self.terms.items()))))

    def __add__(self, other: "SparsePoly") -> "SparsePoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = (out.get(e, 0) + c) % self.prime
        return SparsePoly(self.n, self.prime, out)

    def __sub__(self, other: "SparsePoly") -> "SparsePoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = (out.get(e, 0) - c) % self.prime
        return SparsePoly(self.n, self.prime, out)

    def __mul__(self, other: "SparsePoly") -> "SparsePoly":
        out: dict[tuple, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = (out.get(e, 0) + c1 * c2) % self.prime
        return SparsePoly(self.n, self.prime, out)

    def scale(self, c: int) -> "SparsePoly":
        return SparsePoly(self.n, self.prime,
                          {e: co * c % self.prime for e, co in self.terms.items()})

    def swap(self, i: int) -> "SparsePoly":
        """Exchange x_i and x_{i+1}."""
        out: dict[tuple, int] = {}
        for e, c in self.terms.items():
            e2 = list(e)
            e2[i - 1], e2[i] = e2[i], e2[i - 1]
            e2 = tuple(e2)
            out[e2] = (out.get(e2, 0) + c) % self.prime
        return SparsePoly(self.n, self.prime, out)

    def evaluate(self, values) -> int:
        """Evaluate at x_i = values[i-1]."""
        total = 0
        for e, c in self.terms.items():
            v = c
            for a, xv in zip(e, values):
                if a:
                    v = v * pow(xv, a, self.prime) % self.prime
            total = (total + v) % self.prime
        return total

    def divided_difference(self, i: int) -> "SparsePoly":
        """d_i f = (f - s_i f) / (x_i - x_{i+1}), computed exactly per monomial."""
        if not 1 <= i < self.n:
            raise ValueError(f"operator index {i} outside 1..{self.n - 1}")
        out: dict[tuple, int] = {}
        p = self.prime
        for e, c in self.terms.items():
            a, b = e[i - 1], e[i]
            if a == b:
                continue
            sign = 1 if a > b else -1
            lo_e, hi_e = min(a, b), max(a, b)
            for t in range(lo_e, hi_e):
                e2 = list(e)
                e2[i - 1], e2[i] = t, a + b - 1 - t
                e2 = tuple(e2)
                out[e2] = (out.get(e2, 0) + sign * c) % p
        return SparsePoly(self.n, p, out)


def divided_difference(f: SparsePoly, i: int) -> SparsePoly:
    return f.divided_difference(i)


def isobaric(f: SparsePoly, i: int, beta: int) -> SparsePoly:
    """pi_i f = d_i((1 + beta*x_i) f); satisfies pi_i^2 = beta*pi_i."""
    factor = SparsePoly.const(1, f.n, f.prime) + \
        SparsePoly.var(i, f.n, f.prime).scale(beta)
    return (factor * f).divided_difference(i)
