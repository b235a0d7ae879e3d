from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import gmpy2
import sympy
from sympy import QQ, Poly

from yangso3.exact._rational import Rational, RationalLike, rational

U = sympy.Symbol("u")
V = sympy.Symbol("v")


def to_sympy(x: RationalLike) -> sympy.Rational:
    q = rational(x)
    return sympy.Rational(int(q.numerator), int(q.denominator))


def _from_sympy(x: sympy.Expr) -> Rational:
    r = sympy.Rational(x)
    return gmpy2.mpq(int(r.p), int(r.q))


def poly(coeffs: Sequence[RationalLike], gen: sympy.Symbol = U) -> Poly:
    """
    Build a univariate polynomial over QQ from coefficients indexed by degree.

    >>> poly([1, 0, 2]).as_expr()
    2*u**2 + 1
    """
    rev = [to_sympy(c) for c in reversed(list(coeffs))]
    return Poly.from_list(rev or [sympy.Integer(0)], gen, domain=QQ)


def poly_coeffs(p: Poly) -> list[Rational]:
    """Coefficients of `p` indexed by degree; the zero polynomial gives []."""
    if p.is_zero:
        return []
    return [_from_sympy(c) for c in reversed(p.all_coeffs())]


def degree(p: Poly) -> int:
    """Degree of `p`, with -1 for the zero polynomial."""
    return -1 if p.is_zero else int(p.degree())


def bivariate_terms(expr: sympy.Expr) -> dict[tuple[int, int], Rational]:
    """Nonzero coefficients of a polynomial in `U` and `V`, keyed by the degrees (a, b) of u^a v^b."""
    p = Poly(expr, U, V, domain=QQ)
    return {(int(a), int(b)): _from_sympy(c) for (a, b), c in p.terms() if c != 0}


def difference_polynomial(shifts: Sequence[RationalLike]) -> dict[tuple[int, int], Rational]:
    """
    Expand the product of the factors (u - v - c) for c in `shifts`.

    Returns:
        dict[tuple[int, int], mpq]: Nonzero coefficients keyed by the degrees (a, b) of u^a v^b.
    """
    expr = sympy.Integer(1)
    for c in shifts:
        expr *= U - V - to_sympy(c)
    return bivariate_terms(expr)


@dataclass(frozen=True)
class RatFunc:
    """
    Rational function num/den in u over QQ, stored reduced with a monic denominator.

    Args:
        num (Poly): Numerator in `U` over QQ.
        den (Poly): Nonzero denominator in `U` over QQ.
    """

    num: Poly
    den: Poly

    def __post_init__(self) -> None:
        num = Poly(self.num, U, domain=QQ)
        den = Poly(self.den, U, domain=QQ)
        if den.is_zero:
            raise ValueError("RatFunc denominator must be nonzero")
        g = num.gcd(den)
        if not g.is_zero and degree(g) > 0:
            num = num.exquo(g)
            den = den.exquo(g)
        lc = den.LC()
        object.__setattr__(self, "num", num.mul_ground(1 / lc))
        object.__setattr__(self, "den", den.monic())

    @classmethod
    def constant(cls, c: RationalLike) -> RatFunc:
        return cls(poly([c]), poly([1]))

    @classmethod
    def from_coeffs(cls, num: Sequence[RationalLike], den: Sequence[RationalLike] = (1,)) -> RatFunc:
        return cls(poly(num), poly(den))

    @classmethod
    def inverse_linear(cls, c: RationalLike) -> RatFunc:
        """1/(u - c)."""
        return cls(poly([1]), poly([-rational(c), 1]))

    @property
    def is_zero(self) -> bool:
        return bool(self.num.is_zero)

    def pole_order_at_infinity(self) -> int:
        """deg(num) - deg(den); positive means positive powers of u."""
        if self.is_zero:
            return -degree(self.den)
        return degree(self.num) - degree(self.den)

    def __add__(self, other: RatFunc) -> RatFunc:
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: RatFunc) -> RatFunc:
        return self + (-other)

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.num, self.den)

    def __mul__(self, other: RatFunc | RationalLike) -> RatFunc:
        if isinstance(other, RatFunc):
            return RatFunc(self.num * other.num, self.den * other.den)
        return RatFunc(self.num.mul_ground(to_sympy(other)), self.den)

    __rmul__ = __mul__

    def reflect(self) -> RatFunc:
        """f(-u)."""
        return RatFunc(self.num.compose(Poly(-U, U, domain=QQ)), self.den.compose(Poly(-U, U, domain=QQ)))

    def shift(self, c: RationalLike) -> RatFunc:
        """f(u + c)."""
        s = to_sympy(c)
        return RatFunc(self.num.shift(s), self.den.shift(s))

    def evaluate(self, x: RationalLike) -> Rational:
        """
        Value at an exact rational point.

        Raises:
            ZeroDivisionError: If `x` is a pole.
        """
        s = to_sympy(x)
        d = self.den.eval(s)
        if d == 0:
            raise ZeroDivisionError(f"{self} has a pole at {x}")
        return _from_sympy(self.num.eval(s) / d)

    def __str__(self) -> str:
        return str(sympy.factor(self.num.as_expr() / self.den.as_expr()))
