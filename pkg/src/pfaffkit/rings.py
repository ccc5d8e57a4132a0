"""Exact scalars and sparse multivariate polynomials.

Every computation in the package runs over arbitrary-precision rationals
(`fractions.Fraction`, aliased ``Scalar``) or over the polynomial ring
``Poly`` built on top of them.  No floats anywhere: all comparisons in the
verification suites are exact equalities.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Scalar = Fraction

ScalarLike = Union[int, Fraction]

# A monomial is a tuple of (name, exponent) pairs, sorted by name, with all
# exponents positive.  The empty tuple is the constant monomial.
Monomial = tuple

_ONE_MONO: Monomial = ()


class PolyParseError(ValueError):
    """Raised on malformed polynomial or rational literals."""

    def __init__(self, message: str, pos: int | None = None):
        super().__init__(message)
        self.pos = pos


class MissingIndeterminateError(KeyError):
    """Raised when evaluation lacks values for some variables."""

    def __init__(self, names: Iterable[str]):
        self.names = tuple(sorted(names))
        super().__init__(f"no value supplied for: {', '.join(self.names)}")


def parse_rational(text: str) -> Fraction:
    """Parse 'p' or 'p/q' into a Fraction."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise PolyParseError(f"bad rational literal {text!r}: {exc}") from None


_GENERATOR_NAME = re.compile(r"^([abc])\[(\d+),(\d+)\]$")

# Display classes for generator-style names; the same ranking drives the
# normal ordering of the enveloping-algebra engine.
LOWERING, CARTAN, RAISING = 0, 1, 2
_KIND_RANK = {"c": 0, "a": 1, "b": 2}


def display_key(name: str):
    """Total order on variable names used when printing monomial factors.

    Names of the shape ``a[i,j]``/``b[i,j]``/``c[i,j]`` sort by root class
    (lowering, then diagonal, then raising) and within a class by
    (kind, i, j) with kind order c < a < b.  Anything else keeps plain
    name order in a middle band.  This makes printed products come out in
    normal order, e.g. ``c[1,2]*b[1,2]`` and ``a[2,1]*a[1,2]``.
    """
    m = _GENERATOR_NAME.match(name)
    if m is None:
        return (CARTAN, 9, 0, 0, name)
    kind, i, j = m.group(1), int(m.group(2)), int(m.group(3))
    if kind == "b":
        cls = RAISING
    elif kind == "c":
        cls = LOWERING
    elif i < j:
        cls = RAISING
    elif i > j:
        cls = LOWERING
    else:
        cls = CARTAN
    return (cls, _KIND_RANK[kind], i, j, name)


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps: dict[str, int] = dict(m1)
    for name, e in m2:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


def _mono_degree(mono: Monomial) -> int:
    return sum(e for _, e in mono)


def _mono_print_key(mono: Monomial):
    # Ascending sort under this key yields graded-lex descending terms:
    # higher total degree first, then lexicographically larger exponent
    # vectors (variables in name order) first.
    return (-_mono_degree(mono), [(name, -e) for name, e in mono])


def format_monomial(mono: Monomial, sep: str = "*") -> str:
    factors = sorted(mono, key=lambda p: display_key(p[0]))
    return sep.join(n if e == 1 else f"{n}^{e}" for n, e in factors)


class Poly:
    """Sparse polynomial with Fraction coefficients.

    ``terms`` maps monomials to nonzero coefficients.  Instances are
    treated as immutable; all arithmetic returns fresh objects.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, ScalarLike] | None = None):
        cleaned: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                c = Fraction(coeff)
                if c:
                    cleaned[mono] = cleaned.get(mono, Fraction(0)) + c
                    if not cleaned[mono]:
                        del cleaned[mono]
        self.terms = cleaned

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def const(cls, c: ScalarLike) -> "Poly":
        return cls({_ONE_MONO: Fraction(c)})

    @classmethod
    def var(cls, name: str) -> "Poly":
        return cls({((name, 1),): Fraction(1)})

    def variables(self) -> set[str]:
        return {name for mono in self.terms for name, _ in mono}

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(_mono_degree(m) for m in self.terms)

    @property
    def constant_term(self) -> Fraction:
        return self.terms.get(_ONE_MONO, Fraction(0))

    def homogeneous_part(self, d: int) -> "Poly":
        """The sum of the terms of total degree exactly d."""
        res = Poly.__new__(Poly)
        res.terms = {m: c for m, c in self.terms.items() if _mono_degree(m) == d}
        return res

    @property
    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and _ONE_MONO in self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    @staticmethod
    def _coerce(other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for mono, c in o.terms.items():
            s = out.get(mono, Fraction(0)) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        res = Poly.__new__(Poly)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = Poly.__new__(Poly)
        res.terms = {m: -c for m, c in self.terms.items()}
        return res

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                mono = _mono_mul(m1, m2)
                s = out.get(mono, Fraction(0)) + c1 * c2
                if s:
                    out[mono] = s
                else:
                    out.pop(mono, None)
        res = Poly.__new__(Poly)
        res.terms = out
        return res

    __rmul__ = __mul__

    def __truediv__(self, other):
        # scalar division only; dividing by a polynomial is not defined here
        if isinstance(other, Poly):
            if not other.is_constant or not other.terms:
                return NotImplemented
            other = other.constant_term
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, exp: int):
        if not isinstance(exp, int) or exp < 0:
            raise ValueError("polynomial powers need a nonnegative integer exponent")
        result = Poly.const(1)
        base = self
        while exp:
            if exp & 1:
                result = result * base
            base = base * base
            exp >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None

    def evaluate(self, assignment: Mapping[str, ScalarLike]) -> Fraction:
        """Evaluate at an exact point; every variable must get a value."""
        missing = self.variables() - set(assignment)
        if missing:
            raise MissingIndeterminateError(missing)
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            val = coeff
            for name, e in mono:
                val *= Fraction(assignment[name]) ** e
            total += val
        return total

    def substitute(self, assignment: Mapping[str, "Poly | ScalarLike"]) -> "Poly":
        """Replace variables by polynomials; unlisted variables stay."""
        total = Poly.zero()
        for mono, coeff in self.terms.items():
            term = Poly.const(coeff)
            for name, e in mono:
                repl = assignment.get(name)
                if repl is None:
                    repl = Poly.var(name)
                elif not isinstance(repl, Poly):
                    repl = Poly.const(repl)
                term = term * repl**e
            total = total + term
        return total

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: _mono_print_key(kv[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces: list[str] = []
        for k, (mono, coeff) in enumerate(self.sorted_terms()):
            neg = coeff < 0
            mag = -coeff if neg else coeff
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = format_monomial(mono)
            else:
                body = f"{mag}*{format_monomial(mono)}"
            if k == 0:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f" - {body}" if neg else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Poly({self})"


def poly_eval(p: Poly, assignment: Mapping[str, ScalarLike]) -> Fraction:
    return p.evaluate(assignment)


# --- shared tokenizer / parser -------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<number>\d+(?:/\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*(?:\[\d+(?:,\d+)*\])?)"
    r"|(?P<op>[*^+\-()]))"
)


def tokenize(text: str) -> list[tuple[str, str, int]]:
    """Split an expression into (kind, lexeme, offset) triples."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:].lstrip()
            if not rest:
                break
            raise PolyParseError(f"unexpected character {rest[0]!r}", pos)
        if m.group("number"):
            tokens.append(("number", m.group("number"), m.start("number")))
        elif m.group("name"):
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    return tokens


class _TokenStream:
    def __init__(self, tokens, text):
        self.tokens = tokens
        self.text = text
        self.k = 0

    def peek(self):
        return self.tokens[self.k] if self.k < len(self.tokens) else (None, None, len(self.text))

    def next(self):
        tok = self.peek()
        self.k += 1
        return tok


def parse_poly(text: str) -> Poly:
    """Parse a plain ASCII polynomial expression.

    Grammar: terms joined by '+'/'-', each term a '*'-separated product of
    rational literals and names with optional '^exponent'.  Matches the
    package's own printing, so str(p) parses back to p.
    """
    stream = _TokenStream(tokenize(text), text)
    result = _parse_sum(stream)
    kind, lex, pos = stream.peek()
    if kind is not None:
        raise PolyParseError(f"trailing input starting at {lex!r}", pos)
    return result


def _parse_sum(stream: _TokenStream) -> Poly:
    total = Poly.zero()
    sign = 1
    kind, lex, pos = stream.peek()
    if kind is None:
        raise PolyParseError("empty expression", pos)
    if kind == "op" and lex in "+-":
        sign = -1 if lex == "-" else 1
        stream.next()
    while True:
        total = total + sign * _parse_term(stream)
        kind, lex, pos = stream.peek()
        if kind == "op" and lex in "+-":
            sign = -1 if lex == "-" else 1
            stream.next()
            continue
        return total


def _parse_term(stream: _TokenStream) -> Poly:
    factor = _parse_factor(stream)
    while True:
        kind, lex, _ = stream.peek()
        if kind == "op" and lex == "*":
            stream.next()
            factor = factor * _parse_factor(stream)
        else:
            return factor


def _parse_factor(stream: _TokenStream) -> Poly:
    kind, lex, pos = stream.next()
    if kind == "number":
        base = Poly.const(parse_rational(lex))
    elif kind == "name":
        base = Poly.var(lex)
    elif kind == "op" and lex == "(":
        base = _parse_sum(stream)
        ck, cl, cpos = stream.next()
        if ck != "op" or cl != ")":
            raise PolyParseError("expected ')'", cpos)
    else:
        raise PolyParseError(f"expected a factor, found {lex!r}" if kind else "unexpected end of input", pos)
    k2, l2, _ = stream.peek()
    if k2 == "op" and l2 == "^":
        stream.next()
        ek, el, epos = stream.next()
        if ek != "number" or "/" in el:
            raise PolyParseError("exponent must be a nonnegative integer", epos)
        return base ** int(el)
    return base
