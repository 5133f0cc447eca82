"""Sparse multivariate polynomials with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]


class MVPoly:
    """Polynomial in ``nvars`` variables stored as {exponent vector: Fraction}.

    Zero coefficients are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exponent, object] | None = None):
        self.nvars = nvars
        clean = {}
        for exp, coef in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
            coef = Fraction(coef)
            if coef:
                clean[exp] = clean.get(exp, 0) + coef
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def constant(cls, nvars: int, value) -> MVPoly:
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def variable(cls, nvars: int, index: int) -> MVPoly:
        exp = [0] * nvars
        exp[index] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def linear(cls, nvars: int, coefficients: Mapping[int, int]) -> MVPoly:
        """Linear form sum(coefficients[j] * x_j)."""
        terms = {}
        for j, a in coefficients.items():
            exp = [0] * nvars
            exp[j] = 1
            terms[tuple(exp)] = a
        return cls(nvars, terms)

    def __repr__(self):
        return f"MVPoly({self.nvars}, {self.terms!r})"

    def __eq__(self, other):
        if not isinstance(other, MVPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other: MVPoly):
        if self.nvars != other.nvars:
            raise ValueError(f"variable counts differ: {self.nvars} vs {other.nvars}")

    def __add__(self, other: MVPoly) -> MVPoly:
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MVPoly(self.nvars, terms)

    def __neg__(self) -> MVPoly:
        return MVPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: MVPoly) -> MVPoly:
        return self + (-other)

    def scale(self, factor) -> MVPoly:
        factor = Fraction(factor)
        return MVPoly(self.nvars, {e: c * factor for e, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MVPoly):
            return self.scale(other)
        self._check(other)
        terms: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MVPoly(self.nvars, terms)

    __rmul__ = scale

    def __pow__(self, k: int) -> MVPoly:
        out = MVPoly.constant(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def is_homogeneous(self, degree: int) -> bool:
        return self.degrees() <= {degree}

    def coefficient(self, exp: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} coordinates, got {len(point)}")
        point = [Fraction(p) for p in point]
        total = Fraction(0)
        for exp, coef in self.terms.items():
            term = coef
            for x, a in zip(point, exp):
                if a:
                    term *= x**a
            total += term
        return total

    def reversed_variables(self) -> MVPoly:
        return MVPoly(self.nvars, {e[::-1]: c for e, c in self.terms.items()})

    def compose(self, substitutions: Sequence[MVPoly]) -> MVPoly:
        """Substitute ``substitutions[j]`` for variable j.

        Substitutions that are a bare variable only shift exponents; the others
        are expanded through cached integer powers, so all inner arithmetic is
        on ints scaled by a common denominator.
        """
        if len(substitutions) != self.nvars:
            raise ValueError(f"need {self.nvars} substitutions, got {len(substitutions)}")
        if not substitutions:
            return MVPoly(0, self.terms)
        target = substitutions[0].nvars
        if any(s.nvars != target for s in substitutions):
            raise ValueError("substitutions must share a variable count")

        bare: dict[int, int] = {}
        expanded: list[int] = []
        int_subs: dict[int, tuple[int, dict[Exponent, int]]] = {}
        for j, s in enumerate(substitutions):
            if len(s.terms) == 1 and _is_bare_variable(*next(iter(s.terms.items()))):
                bare[j] = next(iter(s.terms)).index(1)
            else:
                expanded.append(j)
                int_subs[j] = _to_int_terms(s.terms)

        powers: dict[tuple[int, int], dict[Exponent, int]] = {}

        def power(j: int, k: int) -> dict[Exponent, int]:
            key = (j, k)
            if key not in powers:
                if k == 0:
                    powers[key] = {(0,) * target: 1}
                else:
                    powers[key] = _int_mul(power(j, k - 1), int_subs[j][1])
            return powers[key]

        self_den, self_int = _to_int_terms(self.terms)
        groups: dict[tuple[int, ...], list[tuple[Exponent, int]]] = {}
        for exp, coef in self_int.items():
            groups.setdefault(tuple(exp[j] for j in expanded), []).append((exp, coef))
        # every expanded power is brought over one shared denominator
        common = 1
        for pos, j in enumerate(expanded):
            common *= int_subs[j][0] ** max((key[pos] for key in groups), default=0)
        acc: dict[Exponent, int] = {}
        for key, members in groups.items():
            prod = {(0,) * target: 1}
            den = 1
            for j, k in zip(expanded, key):
                if k:
                    prod = _int_mul(prod, power(j, k))
                    den *= int_subs[j][0] ** k
            scale = common // den
            for exp, coef in members:
                shift = [0] * target
                for j, v in bare.items():
                    shift[v] += exp[j]
                for e, c in prod.items():
                    out = tuple(a + b for a, b in zip(e, shift))
                    acc[out] = acc.get(out, 0) + coef * c * scale
        return MVPoly(target, {e: Fraction(v, common * self_den) for e, v in acc.items()})

    def antiderivative(self, var: int) -> MVPoly:
        terms = {}
        for exp, coef in self.terms.items():
            e = list(exp)
            e[var] += 1
            terms[tuple(e)] = coef / e[var]
        return MVPoly(self.nvars, terms)

    def integrate(self, var: int, lower: MVPoly, upper: MVPoly) -> MVPoly:
        """Definite integral in ``var`` between polynomial bounds.

        Bounds must not involve ``var``; the result keeps the variable count
        but no longer depends on ``var``.
        """
        for bound in (lower, upper):
            if any(e[var] for e in bound.terms):
                raise ValueError("integration bounds may not depend on the integration variable")
        anti = self.antiderivative(var)
        identity = [MVPoly.variable(self.nvars, j) for j in range(self.nvars)]

        def at(bound: MVPoly) -> MVPoly:
            subs = list(identity)
            subs[var] = bound
            return anti.compose(subs)

        return at(upper) - at(lower)

    def drop_variable(self, var: int) -> MVPoly:
        if any(e[var] for e in self.terms):
            raise ValueError(f"variable {var} still occurs")
        return MVPoly(self.nvars - 1, {e[:var] + e[var + 1:]: c for e, c in self.terms.items()})

    def dump(self) -> list[str]:
        """Lines ``e1,...,en : num/den``, highest power of the first variable first."""
        return [
            f"{','.join(map(str, e))} : {c.numerator}/{c.denominator}"
            for e, c in sorted(self.terms.items(), reverse=True)
        ]

    @classmethod
    def parse_dump(cls, lines: Iterable[str]) -> MVPoly:
        terms = {}
        nvars = None
        for line in lines:
            if not line.strip():
                continue
            exp_text, coef_text = line.split(":")
            exp = tuple(int(x) for x in exp_text.split(","))
            nvars = len(exp) if nvars is None else nvars
            terms[exp] = Fraction(coef_text.strip())
        if nvars is None:
            raise ValueError("empty polynomial dump")
        return cls(nvars, terms)


def _to_int_terms(terms: Mapping[Exponent, Fraction]) -> tuple[int, dict[Exponent, int]]:
    den = lcm(*(c.denominator for c in terms.values())) if terms else 1
    return den, {e: c.numerator * (den // c.denominator) for e, c in terms.items()}


def _int_mul(a: Mapping[Exponent, int], b: Mapping[Exponent, int]) -> dict[Exponent, int]:
    out: dict[Exponent, int] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}



def _is_bare_variable(exp: Exponent, coef: Fraction) -> bool:
    return coef == 1 and sum(exp) == 1
