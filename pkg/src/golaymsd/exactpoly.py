"""Exact multivariate polynomials and rational functions over arbitrary-precision rationals.

Coefficients are `fractions.Fraction` throughout; nothing in this module ever
touches floating point unless explicitly asked to (`Poly.evaluate` with float
arguments, or the float helpers on `RationalFunction`).  Terms are stored
sparsely as a dict from exponent tuples to coefficients, ordered graded-lex
when serialized.
"""
from __future__ import annotations

import json
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence, Union

Scalar = Union[int, Fraction]


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


def _grlex_key(exp):
    return (sum(exp), exp)


class Poly:
    """Sparse multivariate polynomial with exact rational coefficients.

    Immutable: all arithmetic returns new instances.  Variables are a fixed
    ordered tuple of names; exponent tuples index into it.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, Scalar] | None = None):
        object.__setattr__(self, "vars", tuple(variables))
        clean = {}
        nv = len(self.vars)
        if terms:
            for exp, c in terms.items():
                exp = tuple(int(e) for e in exp)
                if len(exp) != nv:
                    raise ValueError(f"exponent {exp} does not match {nv} variables")
                if any(e < 0 for e in exp):
                    raise ValueError(f"negative exponent in {exp}")
                c = _as_fraction(c)
                if c != 0:
                    clean[exp] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    def __reduce__(self):
        return (Poly, (self.vars, self.terms))

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, c: Scalar, variables: Sequence[str] = ()) -> "Poly":
        return cls(variables, {(0,) * len(tuple(variables)): c})

    @classmethod
    def variable(cls, name: str, variables: Sequence[str]) -> "Poly":
        variables = tuple(variables)
        exp = [0] * len(variables)
        exp[variables.index(name)] = 1
        return cls(variables, {tuple(exp): 1})

    @classmethod
    def univariate(cls, name: str, coeffs: Iterable[Scalar]) -> "Poly":
        """Build from ascending coefficients [c0, c1, ...] = c0 + c1*x + ..."""
        return cls((name,), {(i,): c for i, c in enumerate(coeffs)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def coefficient(self, exp: tuple) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def leading(self) -> tuple[tuple, Fraction]:
        """Graded-lex leading (exponent, coefficient); (0-tuple, 0) if zero."""
        if not self.terms:
            return (0,) * len(self.vars), Fraction(0)
        exp = max(self.terms, key=_grlex_key)
        return exp, self.terms[exp]

    def content(self) -> Fraction:
        """gcd of numerators over lcm of denominators; 0 for the zero poly."""
        if not self.terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator))
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]))

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        return Poly.constant(other, self.vars)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, Fraction(0)) + c
        return Poly(self.vars, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = _as_fraction(other)
            return Poly(self.vars, {e: v * c for e, v in self.terms.items()})
        other = self._coerce(other)
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return Poly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        result = Poly.constant(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return self.terms == Poly.constant(other, self.vars).terms
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def evaluate(self, point: Mapping[str, object]):
        """Evaluate at a point; exact for Fraction/int inputs."""
        vals = [point[v] for v in self.vars]
        acc = None
        for exp, c in self.terms.items():
            term = c
            for val, e in zip(vals, exp):
                if e:
                    term = term * val**e
            acc = term if acc is None else acc + term
        return acc if acc is not None else Fraction(0)

    def substitute(self, subs: Mapping[str, "Poly"]) -> "Poly":
        """Substitute polynomials for variables; unmentioned variables must
        be shared by every replacement's variable set."""
        if not subs:
            return self
        target_vars = next(iter(subs.values())).vars
        repl = []
        for v in self.vars:
            if v in subs:
                p = subs[v]
                if p.vars != target_vars:
                    raise ValueError("replacement polynomials must share one variable set")
                repl.append(p)
            else:
                if v not in target_vars:
                    raise ValueError(f"no replacement for variable {v!r}")
                repl.append(Poly.variable(v, target_vars))
        acc = Poly(target_vars)
        for exp, c in self.terms.items():
            term = Poly.constant(c, target_vars)
            for p, e in zip(repl, exp):
                if e:
                    term = term * p**e
            acc = acc + term
        return acc

    def truncate(self, order: int) -> "Poly":
        """Drop all terms of total degree > order."""
        return Poly(self.vars, {e: c for e, c in self.terms.items() if sum(e) <= order})

    def shift_down(self, var: str, k: int) -> "Poly":
        """Exact division by var**k; raises if any term has a lower power."""
        i = self.vars.index(var)
        out = {}
        for exp, c in self.terms.items():
            if exp[i] < k:
                raise ValueError(f"not divisible by {var}^{k}: term {exp}")
            e = list(exp)
            e[i] -= k
            out[tuple(e)] = c
        return Poly(self.vars, out)

    def scale_primitive(self) -> tuple["Poly", Fraction]:
        """Return (primitive integer-coefficient poly, factor) with
        self == primitive * factor and the graded-lex leading coefficient
        of the primitive part positive."""
        if not self.terms:
            return self, Fraction(1)
        factor = self.content()
        _, lead = self.leading()
        if lead < 0:
            factor = -factor
        return Poly(self.vars, {e: c / factor for e, c in self.terms.items()}), factor

    # -- univariate helpers --------------------------------------------------

    def univariate_coeffs(self) -> list[Fraction]:
        """Ascending coefficient list; requires exactly one variable."""
        if len(self.vars) != 1:
            raise ValueError("not univariate")
        n = self.total_degree()
        out = [Fraction(0)] * (n + 1)
        for (e,), c in self.terms.items():
            out[e] = c
        return out

    # -- serialization -------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [
                {"exp": list(exp), "num": str(c.numerator), "den": str(c.denominator)}
                for exp, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Poly":
        terms = {
            tuple(t["exp"]): Fraction(int(t["num"]), int(t["den"]))
            for t in data["terms"]
        }
        return cls(tuple(data["vars"]), terms)

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, text: str) -> "Poly":
        return cls.from_json_dict(json.loads(text))

    def __repr__(self):
        if not self.terms:
            return "Poly(0)"
        bits = []
        for exp, c in self.sorted_terms():
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in zip(self.vars, exp) if e
            )
            bits.append(f"{c}{'*' + mono if mono else ''}")
        return "Poly(" + " + ".join(bits) + ")"


class RationalFunction:
    """Quotient of two Polys, not reduced by polynomial GCD.

    Normalization: the denominator is scaled to primitive integer
    coefficients with positive graded-lex leading coefficient (the numerator
    is scaled to compensate).  Equality is by cross-multiplication, so two
    unreduced representations of the same function compare equal.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if den.is_zero():
            raise ZeroDivisionError("denominator polynomial is zero")
        if num.vars != den.vars:
            raise ValueError("numerator/denominator variable mismatch")
        den_prim, factor = den.scale_primitive()
        object.__setattr__(self, "num", num * (1 / factor))
        object.__setattr__(self, "den", den_prim)

    def __setattr__(self, *a):
        raise AttributeError("RationalFunction is immutable")

    def __reduce__(self):
        return (RationalFunction, (self.num, self.den))

    @property
    def vars(self):
        return self.num.vars

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RationalFunction is unhashable (equality is extensional)")

    def evaluate(self, point: Mapping[str, object]):
        d = self.den.evaluate(point)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at {dict(point)}")
        n = self.num.evaluate(point)
        if isinstance(n, Fraction) and isinstance(d, Fraction):
            return n / d
        return n / d

    def substitute(self, subs: Mapping[str, Poly]) -> "RationalFunction":
        return RationalFunction(self.num.substitute(subs), self.den.substitute(subs))

    def to_json_dict(self) -> dict:
        return {"num": self.num.to_json_dict(), "den": self.den.to_json_dict()}

    @classmethod
    def from_json_dict(cls, data: dict) -> "RationalFunction":
        return cls(Poly.from_json_dict(data["num"]), Poly.from_json_dict(data["den"]))

    def __repr__(self):
        return f"RationalFunction({self.num!r} / {self.den!r})"


def series_truncate(f: RationalFunction, order: int) -> Poly:
    """Exact Taylor expansion of f around the origin up to total degree `order`.

    Requires den(0) != 0.  Works by truncated geometric inversion of the
    denominator, so every returned coefficient is an exact rational.
    """
    c0 = f.den.constant_term()
    if c0 == 0:
        raise ZeroDivisionError("denominator vanishes at the origin; no Taylor series")
    # den = c0 * (1 - r) with r(0) = 0; 1/den = (1/c0) * sum r^k
    r = (Poly.constant(c0, f.den.vars) - f.den) * (1 / c0)
    inv = Poly.constant(1, f.den.vars)
    power = Poly.constant(1, f.den.vars)
    for _ in range(order):
        power = (power * r).truncate(order)
        if power.is_zero():
            break
        inv = inv + power
    return (f.num * inv * (1 / c0)).truncate(order)


def isolate_fixed_point(
    f: RationalFunction,
    lo: Fraction = Fraction(0),
    hi: Fraction = Fraction(1),
    tol: Fraction = Fraction(1, 10**12),
    scan_steps: int = 1024,
) -> tuple[Fraction, Fraction, Fraction]:
    """Locate the smallest solution of f(x) = x in (lo, hi) by exact bisection.

    f must be univariate with f(x) < x just above `lo` and a nonvanishing
    denominator on the interval.  Returns (midpoint, bracket_lo, bracket_hi)
    with exact rational brackets of width <= tol that provably straddle a
    sign change of num(x) - x*den(x).

    Raises ValueError if no sign change exists on the interval.
    """
    if len(f.vars) != 1:
        raise ValueError("fixed-point isolation needs a univariate curve")
    var = f.vars[0]
    g_num = f.num - Poly.variable(var, f.vars) * f.den

    def h(x: Fraction) -> Fraction:
        d = f.den.evaluate({var: x})
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at {x}")
        # sign of f(x) - x, folding in the denominator sign
        return g_num.evaluate({var: x}) * (1 if d > 0 else -1)

    span = hi - lo
    prev_x = lo + span / (10**9)  # just inside the open interval
    prev = h(prev_x)
    if prev >= 0:
        raise ValueError("curve is not below the diagonal near the lower endpoint")
    bracket = None
    for i in range(1, scan_steps):  # interior points only: the interval is open
        x = lo + span * i / scan_steps
        cur = h(x)
        if cur == 0:
            bracket = (x, x)
            break
        if (prev < 0) != (cur < 0):
            bracket = (prev_x, x)
            break
        prev_x, prev = x, cur
    if bracket is None:
        raise ValueError("no threshold in interval")

    a, b = bracket
    ha = h(a) if a != b else Fraction(0)
    while b - a > tol:
        mid = (a + b) / 2
        hm = h(mid)
        if hm == 0:
            a = b = mid
            break
        if (ha < 0) != (hm < 0):
            b = mid
        else:
            a, ha = mid, hm
    return (a + b) / 2, a, b


def univariate_divmod(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Polynomial long division for univariate Polys over the rationals."""
    if num.vars != den.vars or len(num.vars) != 1:
        raise ValueError("univariate division on one shared variable only")
    if den.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    var = num.vars[0]
    r = num
    q = Poly(num.vars)
    dd = den.total_degree()
    dl = den.coefficient((dd,))
    while not r.is_zero() and r.total_degree() >= dd:
        rd = r.total_degree()
        c = r.coefficient((rd,)) / dl
        mono = Poly(num.vars, {(rd - dd,): c})
        q = q + mono
        r = r - mono * den
    return q, r
