"""Linear recurrences, exact quadratic-irrational arithmetic, closed forms.

Every sequence family in the catalog carries an integer linear recurrence,
and most also carry a closed form whose terms live in Q(sqrt(d)). Closed
forms are evaluated exactly: powers are taken in the quadratic ring with
rational coefficients, the irrational parts must cancel, and the rational
remainder must be a nonnegative integer. A failure of either condition
raises, since it can only mean a mistranscribed formula.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt


class ClosedFormCancellationError(ArithmeticError):
    """The irrational part of a closed-form evaluation failed to cancel."""


def _check_radicand(d: int) -> None:
    if d < 2:
        raise ValueError(f"radicand must be >= 2, got {d}")
    for p in range(2, isqrt(d) + 1):
        if d % (p * p) == 0:
            raise ValueError(f"radicand must be square-free, got {d}")


_Rational = (int, Fraction)


@dataclass(frozen=True)
class QuadExpr:
    """Exact element a + b*sqrt(d) of Q(sqrt(d)), d square-free.

    Arithmetic stays in the field: addition, multiplication, integer powers
    and conjugation are closed and exact. Elements over different radicands
    do not mix.
    """

    a: Fraction
    b: Fraction
    d: int

    def __init__(self, a, b=0, d: int = 3) -> None:
        _check_radicand(d)
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "d", d)

    def _coerce(self, other) -> QuadExpr:
        if isinstance(other, QuadExpr):
            if other.d != self.d:
                raise ValueError(f"mixed radicands: sqrt({self.d}) vs sqrt({other.d})")
            return other
        if isinstance(other, _Rational):
            return QuadExpr(other, 0, self.d)
        return NotImplemented

    def __add__(self, other) -> QuadExpr:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadExpr(self.a + other.a, self.b + other.b, self.d)

    __radd__ = __add__

    def __neg__(self) -> QuadExpr:
        return QuadExpr(-self.a, -self.b, self.d)

    def __sub__(self, other) -> QuadExpr:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> QuadExpr:
        return (-self) + other

    def __mul__(self, other) -> QuadExpr:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadExpr(
            self.a * other.a + self.d * self.b * other.b,
            self.a * other.b + self.b * other.a,
            self.d,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> QuadExpr:
        if not isinstance(other, _Rational):
            return NotImplemented
        return QuadExpr(self.a / other, self.b / other, self.d)

    def __pow__(self, exponent: int) -> QuadExpr:
        if exponent < 0:
            raise ValueError(f"exponent must be >= 0, got {exponent}")
        result = QuadExpr(1, 0, self.d)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> QuadExpr:
        return QuadExpr(self.a, -self.b, self.d)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*sqrt({self.d})"


@dataclass(frozen=True)
class ClosedForm:
    """Sum of coeff * base**n terms over a single quadratic field.

    Alternating components are ordinary terms with base -1, so one
    evaluation path covers everything.
    """

    terms: tuple[tuple[QuadExpr, QuadExpr], ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise ValueError("closed form needs at least one term")
        radicands = {q.d for pair in self.terms for q in pair}
        if len(radicands) != 1:
            raise ValueError(f"closed form mixes radicands {sorted(radicands)}")

    @property
    def radicand(self) -> int:
        return self.terms[0][0].d


def closed_eval(cf: ClosedForm, n: int) -> int:
    """Evaluate a closed form at n >= 0, checking exactness on the way out."""
    if n < 0:
        raise ValueError(f"closed forms are evaluated at n >= 0, got {n}")
    total = QuadExpr(0, 0, cf.radicand)
    for coeff, base in cf.terms:
        total = total + coeff * base**n
    if total.b != 0:
        raise ClosedFormCancellationError(
            f"irrational part {total.b}*sqrt({cf.radicand}) left over at n={n}"
        )
    if total.a.denominator != 1 or total.a < 0:
        raise ClosedFormCancellationError(
            f"closed form produced non-count value {total.a} at n={n}"
        )
    return int(total.a)


@dataclass(frozen=True)
class LinearRecurrence:
    """Order-d recurrence a(n) = sum coeffs[i-1] * a(n-i), with initial terms.

    ``initial`` holds a(start), ..., a(start+d-1).
    """

    coeffs: tuple[int, ...]
    initial: tuple[int, ...]
    start: int = 0

    def __post_init__(self) -> None:
        if len(self.coeffs) < 1:
            raise ValueError("recurrence order must be >= 1")
        if len(self.initial) != len(self.coeffs):
            raise ValueError(
                f"need {len(self.coeffs)} initial terms, got {len(self.initial)}"
            )

    @property
    def order(self) -> int:
        return len(self.coeffs)


def rec_eval_iter(rec: LinearRecurrence, n: int) -> int:
    """nth term by straight iteration: O(n * order) big-int additions."""
    if n < rec.start:
        raise ValueError(f"index {n} below starting index {rec.start}")
    idx = n - rec.start
    if idx < rec.order:
        return rec.initial[idx]
    window = list(rec.initial)  # window[-1] is the newest term
    for _ in range(idx - rec.order + 1):
        nxt = sum(c * window[-i] for i, c in enumerate(rec.coeffs, start=1))
        window.pop(0)
        window.append(nxt)
    return window[-1]


def rec_values(rec: LinearRecurrence, lo: int, hi: int) -> list[int]:
    """Terms a(lo), ..., a(hi) in one forward pass."""
    if lo < rec.start:
        raise ValueError(f"index {lo} below starting index {rec.start}")
    if hi < lo:
        return []
    window = list(rec.initial)
    values = list(rec.initial)
    while len(values) < hi - rec.start + 1:
        nxt = sum(c * window[-i] for i, c in enumerate(rec.coeffs, start=1))
        window.pop(0)
        window.append(nxt)
        values.append(nxt)
    return values[lo - rec.start : hi - rec.start + 1]


def _mat_mul(x, y):
    size = len(x)
    return tuple(
        tuple(sum(x[i][t] * y[t][j] for t in range(size)) for j in range(size))
        for i in range(size)
    )


def _mat_pow(m, e: int):
    size = len(m)
    result = tuple(tuple(int(i == j) for j in range(size)) for i in range(size))
    while e:
        if e & 1:
            result = _mat_mul(result, m)
        m = _mat_mul(m, m)
        e >>= 1
    return result


def rec_eval_matpow(rec: LinearRecurrence, n: int) -> int:
    """nth term via companion-matrix exponentiation: O(d^3 log n) multiplies."""
    if n < rec.start:
        raise ValueError(f"index {n} below starting index {rec.start}")
    idx = n - rec.start
    d = rec.order
    if idx < d:
        return rec.initial[idx]
    companion = tuple(
        rec.coeffs if i == 0 else tuple(int(j == i - 1) for j in range(d))
        for i in range(d)
    )
    power = _mat_pow(companion, idx - d + 1)
    # state vector (a(start+d-1), ..., a(start)); row 0 of the power yields a(n)
    state = rec.initial[::-1]
    return sum(power[0][j] * state[j] for j in range(d))


@dataclass(frozen=True)
class Family:
    """A named counting sequence: recurrence plus optional closed form."""

    name: str
    description: str
    recurrence: LinearRecurrence
    closed: ClosedForm | None = None

    @property
    def start(self) -> int:
        return self.recurrence.start

    def eval(self, n: int, method: str = "iter") -> int:
        if method == "iter":
            return rec_eval_iter(self.recurrence, n)
        if method == "matpow":
            return rec_eval_matpow(self.recurrence, n)
        if method == "closed":
            if self.closed is None:
                raise ValueError(f"family {self.name} has no closed form")
            return closed_eval(self.closed, n)
        raise ValueError(f"unknown method {method!r}")


def _conjugate_pair(coeff: QuadExpr, base: QuadExpr):
    return ((coeff, base), (coeff.conjugate(), base.conjugate()))


@lru_cache(maxsize=1)
def catalog() -> dict[str, Family]:
    """All sequence families, keyed by their CLI token."""
    x = QuadExpr(2, 1, 3)  # 2 + sqrt(3), the growth unit shared by A, B, C, T
    sqrt3 = QuadExpr(0, 1, 3)
    minus_one3 = QuadExpr(-1, 0, 3)
    phi2 = QuadExpr(Fraction(3, 2), Fraction(1, 2), 5)  # (3 + sqrt(5)) / 2
    minus_one5 = QuadExpr(-1, 0, 5)

    families = [
        Family(
            name="F",
            description="domino tilings of a 2 x n rectangle (F(0) = F(1) = 1)",
            recurrence=LinearRecurrence((1, 1), (1, 1), start=0),
        ),
        Family(
            name="A",
            description="domino tilings of a 3 x 2n rectangle",
            recurrence=LinearRecurrence((4, -1), (3, 11), start=1),
            closed=ClosedForm(_conjugate_pair(QuadExpr(3, 1, 3) / 6, x)),
        ),
        Family(
            name="B",
            description="domino tilings of a 3 x (2n+1) rectangle minus one corner cell",
            # (1/(2 sqrt 3)) [(2+s3)^(n+1) - (2-s3)^(n+1)], the n+1 folded in
            recurrence=LinearRecurrence((4, -1), (1, 4), start=0),
            closed=ClosedForm(
                (
                    (sqrt3 / 6 * x, x),
                    ((-(sqrt3 / 6)) * x.conjugate(), x.conjugate()),
                )
            ),
        ),
        Family(
            name="C",
            description="domino tilings of a 3 x (2n+2) rectangle minus two corner-row cells",
            recurrence=LinearRecurrence((4, -1), (2, 7), start=0),
            closed=ClosedForm(_conjugate_pair(x / 2, x)),
        ),
        Family(
            name="T",
            description="brick tilings of a 2 x 2 x n tower",
            recurrence=LinearRecurrence((3, 3, -1), (2, 9, 32), start=1),
            closed=ClosedForm(
                _conjugate_pair(x / 6, x)
                + ((QuadExpr(Fraction(1, 3), 0, 3), minus_one3),)
            ),
        ),
        Family(
            name="M",
            description="brick tilings of a 2 x 2 x n tower minus two adjacent top cells",
            recurrence=LinearRecurrence((3, 3, -1), (1, 3, 12), start=1),
        ),
        Family(
            name="L3",
            description="domino tilings of the width-3 right angle with equal arms",
            recurrence=LinearRecurrence((14, -1), (11, 153), start=1),
            closed=ClosedForm(_conjugate_pair(QuadExpr(3, 1, 3) / 6, QuadExpr(7, 4, 3))),
        ),
        Family(
            name="L2D",
            description="domino tilings of the width-2 right angle at arm lengths (n, n-1)",
            recurrence=LinearRecurrence((2, 2, -1), (1, 3, 7), start=1),
            closed=ClosedForm(
                (
                    (QuadExpr(Fraction(2, 5), 0, 5), phi2),
                    (QuadExpr(Fraction(2, 5), 0, 5), phi2.conjugate()),
                    (QuadExpr(Fraction(1, 5), 0, 5), minus_one5),
                )
            ),
        ),
    ]
    return {f.name: f for f in families}


def fibonacci(n: int) -> int:
    """Shifted Fibonacci: F(0) = F(1) = 1, extended backward with F(-1) = 0."""
    if n < -1:
        raise ValueError(f"fibonacci defined for n >= -1, got {n}")
    if n == -1:
        return 0
    return rec_eval_iter(catalog()["F"].recurrence, n)


def l2(n: int, k: int) -> int:
    """Tilings of the width-2 right angle: F(n) F(k-1) + F(n-1) F(k).

    k = 0 is allowed via the backward extension F(-1) = 0, so the diagonal
    l2(n, n-1) matches its alternating closed form from n = 1 onward.
    """
    if n < 1 or k < 0:
        raise ValueError(f"l2 needs n >= 1 and k >= 0, got ({n}, {k})")
    return fibonacci(n) * fibonacci(k - 1) + fibonacci(n - 1) * fibonacci(k)


def l3(n: int, k: int) -> int:
    """Tilings of the width-3 right angle with arms 2n and 2k.

    Product decomposition A(n) A(k) + C(n-1) B(k-1) + B(n-2) B(k-1), where
    B(-1) = 0 is the backward extension forced by 4 B(0) - B(1) = 0.
    """
    if n < 1 or k < 1:
        raise ValueError(f"l3 needs n, k >= 1, got ({n}, {k})")
    fams = catalog()
    a_rec = fams["A"].recurrence
    b_rec = fams["B"].recurrence
    c_rec = fams["C"].recurrence

    def b_val(m: int) -> int:
        return 0 if m == -1 else rec_eval_iter(b_rec, m)

    return (
        rec_eval_iter(a_rec, n) * rec_eval_iter(a_rec, k)
        + rec_eval_iter(c_rec, n - 1) * b_val(k - 1)
        + b_val(n - 2) * b_val(k - 1)
    )
