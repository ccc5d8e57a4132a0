"""PBW engine for the enveloping algebra of the split even orthogonal Lie algebra.

The Lie algebra is realised as the span of signed-index matrix elements
X[i,j] (i, j in {1..n, -n..-1}) subject to X[-j,-i] = -X[i,j] and
X[i,-i] = 0, with the bracket

    [X[i,j], X[k,l]] = d(j,k) X[i,l] + d(i,l) X[-j,-k]
                     - d(j,-l) X[i,-k] - d(i,-k) X[-j,l].

A generator basis is carved out by the coloring a[i,j] = X[i,j],
b[i,j] = X[i,-j] (i < j), c[i,j] = X[-j,i] (i < j); everything else
reduces to these.  Elements are kept in the PBW basis: words weakly
increasing under the order lowering < diagonal < raising, ties broken by
(kind, i, j) with kind order c < a < b, so raising factors sit rightmost.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial
from typing import Iterable, Mapping, Sequence, Union

from .indexing import complement_sign, signed_value
from .linalg import det_leibniz
from .pfaffian import AlternatingMatrix, ShapeError, all_pairings, permutation_sign, pfaffian
from .rings import (
    CARTAN,
    LOWERING,
    RAISING,
    Poly,
    PolyParseError,
    _GENERATOR_NAME,
    display_key,
    parse_rational,
    tokenize,
)

ScalarLike = Union[int, Fraction]

_KINDS = ("a", "b", "c")


@dataclass(frozen=True)
class Generator:
    """One basis generator of the Lie algebra, named kind[i,j]."""

    kind: str
    i: int
    j: int

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.i < 1 or self.j < 1:
            raise ValueError("generator indices are 1-based positive integers")
        if self.kind in ("b", "c") and not self.i < self.j:
            raise ValueError(f"{self.kind}[i,j] generators need i < j, got ({self.i}, {self.j})")

    @property
    def name(self) -> str:
        return f"{self.kind}[{self.i},{self.j}]"

    @property
    def root_class(self) -> int:
        return self.sort_key[0]

    @property
    def is_cartan(self) -> bool:
        return self.kind == "a" and self.i == self.j

    @property
    def sort_key(self) -> tuple[int, int, int, int]:
        return display_key(self.name)[:4]

    def __str__(self) -> str:
        return self.name


Word = tuple[Generator, ...]


def canonical_generators(n: int) -> tuple[Generator, ...]:
    """The n(2n-1) basis generators for half-size n, in PBW order."""
    gens = [Generator("a", i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    gens += [Generator(k, i, j) for k in ("b", "c") for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return tuple(sorted(gens, key=lambda g: g.sort_key))


def _signed_pair(g: Generator) -> tuple[int, int]:
    """The X[i,j] realisation of a generator."""
    if g.kind == "a":
        return g.i, g.j
    if g.kind == "b":
        return g.i, -g.j
    return -g.j, g.i


class UEAElement:
    """Linear combination of PBW words with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, ScalarLike] | None = None):
        cleaned: dict[Word, Fraction] = {}
        if terms:
            for word, coeff in terms.items():
                c = Fraction(coeff)
                if c:
                    s = cleaned.get(word, Fraction(0)) + c
                    if s:
                        cleaned[word] = s
                    else:
                        del cleaned[word]
        self.terms = cleaned

    @classmethod
    def zero(cls) -> "UEAElement":
        return cls()

    @classmethod
    def one(cls) -> "UEAElement":
        return cls({(): Fraction(1)})

    @classmethod
    def from_generator(cls, g: Generator) -> "UEAElement":
        return cls({(g,): Fraction(1)})

    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    @staticmethod
    def _coerce(other) -> "UEAElement | None":
        if isinstance(other, UEAElement):
            return other
        if isinstance(other, (int, Fraction)):
            return UEAElement({(): Fraction(other)})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for w, c in o.terms.items():
            s = out.get(w, Fraction(0)) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        res = UEAElement.__new__(UEAElement)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = UEAElement.__new__(UEAElement)
        res.terms = {w: -c for w, c in self.terms.items()}
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
        if isinstance(other, (int, Fraction)):
            s = Fraction(other)
            res = UEAElement.__new__(UEAElement)
            res.terms = {w: c * s for w, c in self.terms.items()} if s else {}
            return res
        if not isinstance(other, UEAElement):
            return NotImplemented
        total = UEAElement.zero()
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                total = total + normal_order(w1 + w2, c1 * c2)
        return total

    def __rmul__(self, other):
        # only scalars reach here, and they commute with everything
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, exp: int):
        if not isinstance(exp, int) or exp < 0:
            raise ValueError("powers need a nonnegative integer exponent")
        result = UEAElement.one()
        for _ in range(exp):
            result = result * self
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

    def commutator(self, other: "UEAElement") -> "UEAElement":
        return self * other - other * self

    def abelianized(self) -> Poly:
        """Image in the symmetric algebra: each generator to its name variable."""
        total = Poly.zero()
        for word, coeff in self.terms.items():
            term = Poly.const(coeff)
            for g in word:
                term = term * Poly.var(g.name)
            total = total + term
        return total

    @staticmethod
    def _run_lengths(word: Word) -> list[tuple[Generator, int]]:
        runs: list[tuple[Generator, int]] = []
        for g in word:
            if runs and runs[-1][0] == g:
                runs[-1] = (g, runs[-1][1] + 1)
            else:
                runs.append((g, 1))
        return runs

    def sorted_terms(self) -> list[tuple[Word, Fraction]]:
        def key(word: Word):
            return (-len(word), tuple(tuple(-x for x in g.sort_key) for g in word))

        return sorted(self.terms.items(), key=lambda kv: key(kv[0]))

    def to_text(self) -> str:
        """Lossless canonical text: 'coeff * name^e name^e ...' joined by ' + '."""
        if not self.terms:
            return "0"
        pieces = []
        for word, coeff in self.sorted_terms():
            if not word:
                pieces.append(str(coeff))
            else:
                factors = " ".join(f"{g.name}^{e}" for g, e in self._run_lengths(word))
                pieces.append(f"{coeff} * {factors}")
        return " + ".join(pieces)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for k, (word, coeff) in enumerate(self.sorted_terms()):
            neg = coeff < 0
            mag = -coeff if neg else coeff
            if not word:
                body = str(mag)
            else:
                factors = " ".join(
                    g.name if e == 1 else f"{g.name}^{e}" for g, e in self._run_lengths(word)
                )
                body = factors if mag == 1 else f"{mag}*{factors}"
            if k == 0:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f" - {body}" if neg else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"UEAElement({self})"


def signed_generator(i: int, j: int) -> UEAElement:
    """The element X[i,j], reduced to the canonical generator basis."""
    if i == 0 or j == 0:
        raise ValueError("signed indices exclude 0")
    if j == -i:
        return UEAElement.zero()
    if i > 0 and j > 0:
        return UEAElement.from_generator(Generator("a", i, j))
    if i > 0 and j < 0:
        jj = -j
        if i < jj:
            return UEAElement.from_generator(Generator("b", i, jj))
        return -UEAElement.from_generator(Generator("b", jj, i))
    if i < 0 and j > 0:
        ii = -i
        if j < ii:
            return UEAElement.from_generator(Generator("c", j, ii))
        return -UEAElement.from_generator(Generator("c", ii, j))
    return -UEAElement.from_generator(Generator("a", -j, -i))


def bracket(g: Generator, h: Generator) -> UEAElement:
    """Lie bracket of two basis generators, expanded in the basis."""
    i, j = _signed_pair(g)
    k, l = _signed_pair(h)
    total = UEAElement.zero()
    if j == k:
        total = total + signed_generator(i, l)
    if i == l:
        total = total + signed_generator(-j, -k)
    if j == -l:
        total = total - signed_generator(i, -k)
    if i == -k:
        total = total - signed_generator(-j, l)
    return total


def _first_inversion(word: Word) -> int | None:
    for t in range(len(word) - 1):
        if word[t].sort_key > word[t + 1].sort_key:
            return t
    return None


def normal_order(word: Iterable[Generator], coeff: ScalarLike = 1) -> UEAElement:
    """Rewrite a word into the PBW basis.

    Repeatedly swaps the first out-of-order adjacent pair x y into
    y x + [x, y]; the bracket terms are strictly shorter, so the rewrite
    terminates.  Addition of the resulting words is exact and
    order-independent."""
    out: dict[Word, Fraction] = {}
    stack: list[tuple[Word, Fraction]] = [(tuple(word), Fraction(coeff))]
    while stack:
        w, c = stack.pop()
        if not c:
            continue
        pos = _first_inversion(w)
        if pos is None:
            s = out.get(w, Fraction(0)) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
            continue
        x, y = w[pos], w[pos + 1]
        stack.append((w[:pos] + (y, x) + w[pos + 2:], c))
        for bw, bc in bracket(x, y).terms.items():
            stack.append((w[:pos] + bw + w[pos + 2:], c * bc))
    res = UEAElement.__new__(UEAElement)
    res.terms = out
    return res


class UEAMatrix:
    """Matrix of enveloping-algebra entries addressed by signed indices."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int, entries: Mapping[tuple[int, int], UEAElement]):
        self.n = n
        self.entries = dict(entries)
        labels = [s for s in range(-n, n + 1) if s]
        for i in labels:
            for j in labels:
                if (i, j) not in self.entries:
                    raise ShapeError(f"missing entry ({i}, {j})")

    def entry(self, i: int, j: int) -> UEAElement:
        return self.entries[(i, j)]

    def entry_pos(self, r: int, c: int) -> UEAElement:
        return self.entry(signed_value(r, self.n), signed_value(c, self.n))

    # canonical block accessors, all 1-based with i, j in [n]
    def a_block(self, i: int, j: int) -> UEAElement:
        return self.entry(i, j)

    def b_block(self, i: int, j: int) -> UEAElement:
        return self.entry(i, -j)

    def c_block(self, i: int, j: int) -> UEAElement:
        return self.entry(-j, i)

    def is_anti_alternating(self) -> bool:
        labels = [s for s in range(-self.n, self.n + 1) if s]
        return all(self.entry(-j, -i) == -self.entry(i, j) for i in labels for j in labels)


def build_canonical_x(n: int) -> UEAMatrix:
    """The matrix X = (X[i,j]) whose entries generate the Lie algebra."""
    labels = [s for s in range(-n, n + 1) if s]
    return UEAMatrix(n, {(i, j): signed_generator(i, j) for i in labels for j in labels})


def _alternating_times_j(M: UEAMatrix) -> list[list[UEAElement]]:
    size = 2 * M.n
    return [[M.entry_pos(r, size + 1 - c) for c in range(1, size + 1)] for r in range(1, size + 1)]


def nc_pfaffian(M: UEAMatrix) -> UEAElement:
    """Pf X = (1/n!) sum over column-ordered pair sequences of sgn * products.

    The sum runs over permutations with s(2i-1) < s(2i) for every pair;
    factors multiply left to right in pair order.  Input must be
    anti-alternating."""
    if not M.is_anti_alternating():
        raise ShapeError("matrix is not anti-alternating")
    n = M.n
    at = _alternating_times_j(M)
    total = UEAElement.zero()
    for pairs in all_pairings(tuple(range(1, 2 * n + 1))):
        for ordered in permutations(pairs):
            sign = permutation_sign([x for pair in ordered for x in pair])
            prod = UEAElement.one()
            for u, v in ordered:
                prod = prod * at[u - 1][v - 1]
            total = total + (sign * prod if sign == 1 else -prod)
    return total * Fraction(1, factorial(n))


def nc_pfaffian_unrestricted(M: UEAMatrix) -> UEAElement:
    """Same Pfaffian through the full permutation sum with weight 1/(2^n n!)."""
    if not M.is_anti_alternating():
        raise ShapeError("matrix is not anti-alternating")
    n = M.n
    at = _alternating_times_j(M)
    total = UEAElement.zero()
    for perm in permutations(range(1, 2 * n + 1)):
        sign = permutation_sign(perm)
        prod = UEAElement.one()
        for t in range(0, 2 * n, 2):
            prod = prod * at[perm[t] - 1][perm[t + 1] - 1]
        total = total + (prod if sign == 1 else -prod)
    return total * Fraction(1, 2**n * factorial(n))


def column_determinant(rows: Sequence[Sequence[UEAElement]]) -> UEAElement:
    """sum_s sgn(s) M[s(1)][1] M[s(2)][2] ... with factors kept in column order."""
    return det_leibniz(tuple(tuple(row) for row in rows))


def shifted_minor_determinant(M: UEAMatrix, I: Sequence[int], J: Sequence[int], u: ScalarLike = 0) -> UEAElement:
    """Column determinant of the a-block minor rows I, columns J with the
    diagonal shift u + r - t added in column t (r = len(J))."""
    if len(I) != len(J):
        raise ValueError("shifted minors must be square")
    r = len(J)
    rows = []
    for i in I:
        row = []
        for t, j in enumerate(J, start=1):
            entry = M.a_block(i, j)
            if i == j:
                entry = entry + (Fraction(u) + r - t)
            row.append(entry)
        rows.append(row)
    return column_determinant(rows)


def _commuting_block_pfaffian(entry_at, I: Sequence[int]) -> UEAElement:
    """Pfaffian of a skew block of mutually commuting entries."""
    out = AlternatingMatrix.__new__(AlternatingMatrix)
    out.rows = tuple(tuple(entry_at(i, j) for j in I) for i in I)
    return pfaffian(out)


def _b_entry(M: UEAMatrix, i: int, j: int) -> UEAElement:
    return M.b_block(i, j) if i != j else UEAElement.zero()


def _c_entry(M: UEAMatrix, i: int, j: int) -> UEAElement:
    return M.c_block(i, j) if i != j else UEAElement.zero()


def nc_minor_summation_rhs(n: int, M: UEAMatrix | None = None) -> UEAElement:
    """Expansion of Pf X into shifted determinants times commuting Pfaffians.

    Sums over equal-size even subsets I, J of [n]; each term is
    sgn(Ic, I) sgn(Jc, J) det(a-minor on complements, shifted) Pf(c_J) Pf(b_I),
    multiplied in exactly that order."""
    if M is None:
        M = build_canonical_x(n)
    universe = tuple(range(1, n + 1))
    total = UEAElement.zero()
    for size in range(0, n + 1, 2):
        for I in combinations(universe, size):
            sign_i = complement_sign(I, universe)
            comp_i = tuple(k for k in universe if k not in set(I))
            pf_b = _commuting_block_pfaffian(lambda x, y: _b_entry(M, x, y), I)
            for J in combinations(universe, size):
                sign_j = complement_sign(J, universe)
                comp_j = tuple(k for k in universe if k not in set(J))
                pf_c = _commuting_block_pfaffian(lambda x, y: _c_entry(M, x, y), J)
                det = shifted_minor_determinant(M, comp_i, comp_j, 0)
                total = total + (sign_i * sign_j) * (det * pf_c * pf_b)
    return total


def centrality_failures(z: UEAElement, n: int) -> list[Generator]:
    """Generators of the half-size-n algebra that fail to commute with z."""
    failures = []
    for g in canonical_generators(n):
        ge = UEAElement.from_generator(g)
        if ge * z - z * ge:
            failures.append(g)
    return failures


def centrality_check(z: UEAElement, n: int) -> bool:
    return not centrality_failures(z, n)


@dataclass(frozen=True)
class HighestWeight:
    """A weight vector (lam_1, ..., lam_n); values None means symbolic."""

    n: int
    values: tuple[Fraction, ...] | None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("weights need n >= 1")
        if self.values is not None and len(self.values) != self.n:
            raise ValueError(f"expected {self.n} components, got {len(self.values)}")

    @classmethod
    def numeric(cls, values: Iterable[ScalarLike]) -> "HighestWeight":
        vals = tuple(Fraction(v) for v in values)
        return cls(len(vals), vals)

    @classmethod
    def symbolic(cls, n: int) -> "HighestWeight":
        return cls(n, None)

    @property
    def is_symbolic(self) -> bool:
        return self.values is None

    def component(self, i: int):
        if not 1 <= i <= self.n:
            raise ValueError(f"component {i} out of range for n={self.n}")
        if self.values is None:
            return Poly.var(f"lam[{i}]")
        return self.values[i - 1]


def hc_coefficient(z: UEAElement, weight: HighestWeight):
    """Eigenvalue of z on a highest weight vector.

    Words containing any raising or lowering factor act by zero there;
    the remaining words are products of diagonal generators a[i,i], each
    acting by lam_i."""
    total = Poly.zero() if weight.is_symbolic else Fraction(0)
    for word, coeff in z.terms.items():
        if any(not g.is_cartan for g in word):
            continue
        val = coeff if weight.is_symbolic else Fraction(coeff)
        for g in word:
            val = weight.component(g.i) * val
        total = total + val
    return total


def eigenvalue_product(weight: HighestWeight):
    """The closed-form product prod_i (lam_i + n - i)."""
    n = weight.n
    total = Poly.const(1) if weight.is_symbolic else Fraction(1)
    for i in range(1, n + 1):
        total = (weight.component(i) + (n - i)) * total
    return total


def eigenvalue_factored_str(weight: HighestWeight) -> str:
    """Human-readable factored form, e.g. (lam[1]+2)*(lam[2]+1)*lam[3]."""
    if not weight.is_symbolic:
        return str(eigenvalue_product(weight))
    parts = []
    for i in range(1, weight.n + 1):
        shift = weight.n - i
        parts.append(f"(lam[{i}]+{shift})" if shift else f"lam[{i}]")
    return "*".join(parts)


# --- text round-trip -------------------------------------------------------


def _generator_from_name(name: str) -> Generator:
    m = _GENERATOR_NAME.match(name)
    if m is None:
        raise PolyParseError(f"{name!r} is not a generator name (expected kind[i,j])")
    return Generator(m.group(1), int(m.group(2)), int(m.group(3)))


def parse_element(text: str) -> UEAElement:
    """Parse the textual PBW format produced by UEAElement.to_text.

    Terms are joined by '+'/'-'; each term is an optional rational
    coefficient (followed by '*' or whitespace) and a run of factors
    name^exp with '^exp' optional.  Factors multiply left to right and are
    normal ordered, so any factor order is accepted."""
    tokens = tokenize(text)
    total = UEAElement.zero()
    k = 0

    def peek():
        return tokens[k] if k < len(tokens) else (None, None, len(text))

    if peek()[0] is None:
        raise PolyParseError("empty element text")
    while True:
        # fold any run of leading sign tokens into the term's sign, so the
        # lossless form "x + -1 * y" parses
        sign = 1
        kind, lex, pos = peek()
        while kind == "op" and lex in "+-":
            if lex == "-":
                sign = -sign
            k += 1
            kind, lex, pos = peek()
        coeff = Fraction(1)
        factors: list[Generator] = []
        saw_body = False
        if kind == "number":
            coeff = parse_rational(lex)
            saw_body = True
            k += 1
            kind, lex, pos = peek()
            if kind == "op" and lex == "*":
                k += 1
                kind, lex, pos = peek()
        while kind == "name":
            saw_body = True
            g = _generator_from_name(lex)
            k += 1
            e = 1
            kind, lex, pos = peek()
            if kind == "op" and lex == "^":
                k += 1
                ek, el, epos = peek()
                if ek != "number" or "/" in el:
                    raise PolyParseError("exponent must be a nonnegative integer", epos)
                e = int(el)
                k += 1
                kind, lex, pos = peek()
            factors.extend([g] * e)
        if not saw_body:
            raise PolyParseError(f"expected a term, found {lex!r}" if kind else "unexpected end of input", pos)
        total = total + normal_order(tuple(factors), sign * coeff)
        kind, lex, pos = peek()
        if kind is None:
            return total
        if not (kind == "op" and lex in "+-"):
            raise PolyParseError(f"unexpected token {lex!r}", pos)
