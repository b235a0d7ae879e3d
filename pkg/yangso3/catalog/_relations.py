from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, replace
from typing import Literal

from yangso3.catalog._verdict import Verdict
from yangso3.exact import (
    ONE,
    BiSeries,
    Rational,
    RationalLike,
    TruncSeries,
    biseries_clear_and_compare,
    difference_polynomial,
    identity,
    rational,
    series_invert,
    series_shift,
)

Method = Literal["clear", "expand"]


@dataclass(frozen=True)
class Factor:
    """A named series evaluated at `var + shift`, optionally inverted."""

    name: str
    var: Literal["u", "v"] = "u"
    shift: Rational = rational(0)
    inverse: bool = False


@dataclass(frozen=True)
class Term:
    """coeff · (ordered product of factors) / prod_c (u - v - c)."""

    coeff: Rational
    factors: tuple[Factor, ...]
    poles: tuple[Rational, ...] = ()

    def __neg__(self) -> Term:
        return replace(self, coeff=-self.coeff)

    def scaled(self, c: RationalLike) -> Term:
        return replace(self, coeff=self.coeff * rational(c))

    def over(self, *poles: RationalLike) -> Term:
        return replace(self, poles=self.poles + tuple(rational(c) for c in poles))


@dataclass(frozen=True)
class Relation:
    """
    An identity lhs = rhs between sums of terms.

    `extra_clearing` lists shifts c of additional factors (u - v - c) applied
    to both sides in cleared form only.
    """

    identity: str
    instance: str
    lhs: tuple[Term, ...]
    rhs: tuple[Term, ...]
    extra_clearing: tuple[Rational, ...] = ()

    @property
    def two_variable(self) -> bool:
        terms = (*self.lhs, *self.rhs)
        return any(t.poles for t in terms) or any(f.var == "v" for t in terms for f in t.factors)

    def clearing(self) -> Counter:
        """Multiset of shifts c whose product of (u - v - c) clears every term."""
        poles: Counter = Counter()
        for t in (*self.lhs, *self.rhs):
            poles |= Counter(t.poles)
        return poles + Counter(self.extra_clearing)


def F(name: str, var: Literal["u", "v"] = "u", shift: RationalLike = 0, inverse: bool = False) -> Factor:
    return Factor(name, var, rational(shift), inverse)


def term(*factors: Factor, coeff: RationalLike = 1) -> Term:
    return Term(rational(coeff), tuple(factors))


def product_terms(left: Sequence[Term], right: Sequence[Term]) -> tuple[Term, ...]:
    """Expand (sum left)(sum right), keeping the order of factors."""
    return tuple(
        Term(a.coeff * b.coeff, a.factors + b.factors, a.poles + b.poles) for a in left for b in right
    )


def commutator(left: Sequence[Term], right: Sequence[Term]) -> tuple[Term, ...]:
    return product_terms(left, right) + tuple(-t for t in product_terms(right, left))


def anticommutator(left: Sequence[Term], right: Sequence[Term]) -> tuple[Term, ...]:
    return product_terms(left, right) + product_terms(right, left)


def scaled(terms: Iterable[Term], c: RationalLike) -> tuple[Term, ...]:
    return tuple(t.scaled(c) for t in terms)


def over(terms: Iterable[Term], *poles: RationalLike) -> tuple[Term, ...]:
    return tuple(t.over(*poles) for t in terms)


class RelationEvaluator:
    """
    Evaluates relations over an environment of named operator series.

    Factor values and ordered products are memoized by prefix, so relations
    sharing products (the 81 entrywise instances of a generating relation, for
    example) reuse them.

    Args:
        env (Mapping[str, TruncSeries]): Named operator series.
        order (int): Validity order K of the environment.
    """

    def __init__(self, env: Mapping[str, TruncSeries], order: int) -> None:
        if not env:
            raise ValueError("RelationEvaluator needs at least one series")
        self.env = dict(env)
        self.order = order
        dims = {s.dim for s in self.env.values() if s.dim is not None}
        if len(dims) != 1:
            raise ValueError(f"Environment series must share one operator dimension, got {sorted(dims)}")
        self.dim: int = dims.pop()
        self._series: dict[tuple[str, Rational, bool], TruncSeries] = {}
        self._products: dict[tuple[Factor, ...], BiSeries] = {}

    def series(self, name: str, shift: Rational = rational(0), inverse: bool = False) -> TruncSeries:
        key = (name, shift, inverse)
        if key not in self._series:
            if name not in self.env:
                raise ValueError(f"Unknown series {name!r}; known: {sorted(self.env)}")
            s = self.env[name]
            if inverse:
                s = series_invert(self.series(name, rational(0), False))
            if shift != 0:
                s = series_shift(self.series(name, rational(0), inverse), shift)
            self._series[key] = s
        return self._series[key]

    def _factor(self, f: Factor) -> BiSeries:
        s = self.series(f.name, f.shift, f.inverse)
        return BiSeries.from_u(s, self.dim) if f.var == "u" else BiSeries.from_v(s, self.dim)

    def product(self, factors: tuple[Factor, ...]) -> BiSeries:
        if factors not in self._products:
            if not factors:
                value = BiSeries.constant(identity(self.dim))
            elif len(factors) == 1:
                value = self._factor(factors[0])
            else:
                value = self.product(factors[:-1]) * self._factor(factors[-1])
            self._products[factors] = value
        return self._products[factors]

    def _side(self, terms: Sequence[Term], method: Method, clearing: Counter) -> BiSeries:
        # division by (u - v - c) is linear, so terms sharing poles are summed first
        groups: dict[tuple[Rational, ...], BiSeries] = {}
        for t in terms:
            x = self.product(t.factors)
            if t.coeff != ONE:
                x = x.scale(t.coeff)
            key = tuple(sorted(t.poles))
            groups[key] = x if key not in groups else groups[key] + x
        acc: BiSeries | None = None
        for poles, x in sorted(groups.items(), key=lambda kv: kv[0]):
            if method == "clear":
                shifts = list((clearing - Counter(poles)).elements())
                if shifts:
                    x = x.mul_poly(difference_polynomial(shifts))
            else:
                for c in poles:
                    x = x.divide_by_difference(c, self.order + 1)
            acc = x if acc is None else acc + x
        if acc is None:
            return BiSeries.constant(identity(self.dim)).scale(0)
        return acc

    def evaluate(self, relation: Relation, method: Method = "clear") -> Verdict:
        """
        Compare both sides of `relation` through their jointly valid window.

        Args:
            relation (Relation): The identity instance.
            method (str):
                "clear" multiplies every term by the pole factors it lacks;
                "expand" expands each 1/(u - v - c) geometrically in u^{-1}.

        Returns:
            Verdict: The comparison outcome, tagged with the method.
        """
        if method not in ("clear", "expand"):
            raise NotImplementedError(f"Unknown comparison method: {method}")
        clearing = relation.clearing() if method == "clear" else Counter()
        lhs = self._side(relation.lhs, method, clearing)
        rhs = self._side(relation.rhs, method, clearing)
        cmp = biseries_clear_and_compare(lhs, rhs)
        return Verdict.from_comparison(relation.identity, relation.instance, cmp, method)

    def verify(self, relation: Relation, oracle: bool = True) -> Verdict:
        """
        Evaluate in cleared form and, for two-variable relations, confirm the
        verdict with the geometric-expansion path.
        """
        primary = self.evaluate(relation, "clear")
        if not (oracle and relation.two_variable):
            return primary
        secondary = self.evaluate(relation, "expand")
        if secondary.passed != primary.passed:
            return replace(
                primary,
                passed=False,
                note=f"clearing says {primary.status}, expansion says {secondary.status}",
            )
        return replace(primary, note=f"{primary.note}; expansion agrees".lstrip("; "))
