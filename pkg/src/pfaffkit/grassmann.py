"""Exterior algebra with matrix-algebra coefficients.

Grassmann generators carry the signed labels of a coloring (p, q): e_i
for i in [p] and e_{-j} for j in [q], laid out in the slot order
1, ..., p, -q, ..., -1.  Coefficients live in a commutative polynomial
ring or in the enveloping algebra; they commute with the generators, and
in products the left factor's coefficient multiplies on the left.

The module builds the canonical 2-forms attached to an (anti-alternating)
matrix and verifies the closed formulas for their powers, including the
top-degree route to the Pfaffian.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterable, Mapping, Sequence

from .pfaffian import AntiAlternatingMatrix, pfaffian, pfaffian_of_anti_alternating
from .rings import Poly
from .uea import (
    UEAElement,
    UEAMatrix,
    build_canonical_x,
    nc_pfaffian,
    shifted_minor_determinant,
    _commuting_block_pfaffian,
    _b_entry,
    _c_entry,
)


def _merge_sign(left_mask: int, right_mask: int) -> int:
    """Sign of interleaving two ascending products into one."""
    count = 0
    b = right_mask
    while b:
        low = b & -b
        idx = low.bit_length() - 1
        count += (left_mask >> (idx + 1)).bit_count()
        b ^= low
    return -1 if count & 1 else 1


class GrassmannElement:
    """Sparse exterior-algebra element over the coloring (p, q).

    ``terms`` maps slot bitmasks to coefficients; a mask encodes the
    ascending product of its slots."""

    __slots__ = ("p", "q", "terms")

    def __init__(self, p: int, q: int, terms: Mapping[int, object] | None = None):
        self.p = p
        self.q = q
        cleaned: dict[int, object] = {}
        if terms:
            for mask, coeff in terms.items():
                if not coeff == 0:
                    cleaned[mask] = coeff
        self.terms = cleaned

    @property
    def slots(self) -> int:
        return self.p + self.q

    def _slot(self, label: int) -> int:
        if label > 0:
            if label > self.p:
                raise ValueError(f"label {label} exceeds row block size {self.p}")
            return label
        if label < 0 and -label <= self.q:
            return self.p + self.q + 1 + label
        raise ValueError(f"label {label} out of range for coloring ({self.p}, {self.q})")

    def _label(self, slot: int) -> int:
        return slot if slot <= self.p else slot - (self.p + self.q + 1)

    @classmethod
    def zero(cls, p: int, q: int) -> "GrassmannElement":
        return cls(p, q)

    @classmethod
    def scalar(cls, p: int, q: int, coeff) -> "GrassmannElement":
        return cls(p, q, {0: coeff})

    @classmethod
    def from_word(cls, p: int, q: int, labels: Sequence[int], coeff) -> "GrassmannElement":
        """coeff times the product of e_label factors, left to right."""
        elt = cls(p, q)
        if coeff == 0:
            return elt
        mask, sign = 0, 1
        for label in labels:
            bit = 1 << (elt._slot(label) - 1)
            if mask & bit:
                return cls(p, q)
            if (mask >> elt._slot(label)).bit_count() % 2:
                sign = -sign
            mask |= bit
        elt.terms[mask] = coeff if sign == 1 else -coeff
        return elt

    def _compatible(self, other: "GrassmannElement"):
        if (self.p, self.q) != (other.p, other.q):
            raise ValueError("mixed colorings")

    def __add__(self, other: "GrassmannElement") -> "GrassmannElement":
        self._compatible(other)
        out = dict(self.terms)
        for mask, c in other.terms.items():
            s = out.get(mask, 0) + c
            if s == 0:
                out.pop(mask, None)
            else:
                out[mask] = s
        res = GrassmannElement.__new__(GrassmannElement)
        res.p, res.q, res.terms = self.p, self.q, out
        return res

    def __neg__(self) -> "GrassmannElement":
        res = GrassmannElement.__new__(GrassmannElement)
        res.p, res.q = self.p, self.q
        res.terms = {m: -c for m, c in self.terms.items()}
        return res

    def __sub__(self, other: "GrassmannElement") -> "GrassmannElement":
        return self + (-other)

    def scale(self, s) -> "GrassmannElement":
        """Multiply every coefficient by the central scalar s (on the left)."""
        res = GrassmannElement.__new__(GrassmannElement)
        res.p, res.q = self.p, self.q
        res.terms = {}
        for m, c in self.terms.items():
            sc = s * c
            if not sc == 0:
                res.terms[m] = sc
        return res

    def __mul__(self, other: "GrassmannElement") -> "GrassmannElement":
        self._compatible(other)
        out: dict[int, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                if m1 & m2:
                    continue
                coeff = c1 * c2
                if _merge_sign(m1, m2) == -1:
                    coeff = -coeff
                mask = m1 | m2
                s = out.get(mask, 0) + coeff
                if s == 0:
                    out.pop(mask, None)
                else:
                    out[mask] = s
        res = GrassmannElement.__new__(GrassmannElement)
        res.p, res.q, res.terms = self.p, self.q, out
        return res

    def power(self, exp: int, one=None) -> "GrassmannElement":
        if exp < 0:
            raise ValueError("negative Grassmann powers do not exist")
        if exp == 0:
            if one is None:
                raise ValueError("power 0 needs the coefficient ring's one")
            return GrassmannElement.scalar(self.p, self.q, one)
        result = self
        for _ in range(exp - 1):
            result = result * self
        return result

    def commutator(self, other: "GrassmannElement") -> "GrassmannElement":
        return self * other - other * self

    def __eq__(self, other):
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        return (self.p, self.q) == (other.p, other.q) and self.terms == other.terms

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def top_coefficient(self):
        """Coefficient of the full ascending product e_1...e_p e_-q...e_-1."""
        return self.terms.get((1 << self.slots) - 1, Fraction(0))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mask in sorted(self.terms, key=lambda m: (m.bit_count(), m)):
            coeff = self.terms[mask]
            labels = [self._label(b + 1) for b in range(self.slots) if mask >> b & 1]
            estr = "".join(f"e[{lab}]" for lab in labels)
            cstr = str(coeff)
            plain = cstr and " " not in cstr and not cstr.startswith("-")
            if mask == 0:
                pieces.append(cstr if plain else f"({cstr})")
            elif cstr == "1":
                pieces.append(estr)
            else:
                pieces.append(f"{cstr} {estr}" if plain else f"({cstr}) {estr}")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"GrassmannElement({self})"


@dataclass
class Forms:
    """The canonical 2-forms of a matrix, plus the data to cross-check them."""

    mode: str
    p: int
    q: int
    omega: GrassmannElement
    xi: GrassmannElement
    theta: GrassmannElement
    theta_prime: GrassmannElement
    tau: GrassmannElement | None
    source: object  # UEAMatrix or AntiAlternatingMatrix
    ring_one: object

    @property
    def half(self) -> int:
        return (self.p + self.q) // 2

    def one(self) -> GrassmannElement:
        return GrassmannElement.scalar(self.p, self.q, self.ring_one)


def build_forms(mode: str = "uea", n: int | None = None, p: int | None = None, q: int | None = None) -> Forms:
    """Construct Omega, Xi, Theta, Theta' (and tau when square) for a
    canonical enveloping-algebra matrix or a generic commutative one."""
    if mode == "uea":
        if n is None:
            raise ValueError("uea mode needs n")
        p = q = n
        M = build_canonical_x(n)
        ring_one: object = UEAElement.one()
        labels = [s for s in range(1, n + 1)] + [s for s in range(-n, 0)]
        omega = GrassmannElement.zero(p, q)
        for i in labels:
            for j in labels:
                omega = omega + GrassmannElement.from_word(p, q, (i, -j), M.entry(i, j))
        xi = GrassmannElement.zero(p, q)
        theta = GrassmannElement.zero(p, q)
        theta_prime = GrassmannElement.zero(p, q)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                xi = xi + GrassmannElement.from_word(p, q, (i, -j), M.a_block(i, j))
                theta = theta + GrassmannElement.from_word(p, q, (i, j), M.entry(i, -j))
                theta_prime = theta_prime + GrassmannElement.from_word(p, q, (-j, -i), M.entry(-j, i))
        source: object = M
    elif mode == "commutative":
        if p is None or q is None:
            if n is None:
                raise ValueError("commutative mode needs (p, q) or n")
            p = q = n
        X = AntiAlternatingMatrix.generic(p, q)
        ring_one = Poly.const(1)
        full = X.full()
        rows = X.row_labels()
        cols = X.col_labels()
        omega = GrassmannElement.zero(p, q)
        for ri, rlab in enumerate(rows):
            for ci, clab in enumerate(cols):
                omega = omega + GrassmannElement.from_word(p, q, (rlab, -clab), full[ri][ci])
        xi = GrassmannElement.zero(p, q)
        for i in range(1, p + 1):
            for j in range(1, q + 1):
                xi = xi + GrassmannElement.from_word(p, q, (i, -j), X.a[i - 1][j - 1])
        theta = GrassmannElement.zero(p, q)
        for i in range(1, p + 1):
            for j in range(1, p + 1):
                theta = theta + GrassmannElement.from_word(p, q, (i, j), X.b[i - 1][j - 1])
        theta_prime = GrassmannElement.zero(p, q)
        for i in range(1, q + 1):
            for j in range(1, q + 1):
                theta_prime = theta_prime + GrassmannElement.from_word(p, q, (-j, -i), X.c[i - 1][j - 1])
        source = X
    else:
        raise ValueError(f"unknown mode {mode!r}")
    tau = None
    if p == q:
        tau = GrassmannElement.zero(p, q)
        for i in range(1, p + 1):
            tau = tau + GrassmannElement.from_word(p, q, (i, -i), ring_one)
    return Forms(mode, p, q, omega, xi, theta, theta_prime, tau, source, ring_one)


def check_structure(forms: Forms) -> bool:
    """Omega decomposes as Theta' + 2 Xi + Theta."""
    two_xi = forms.xi + forms.xi
    return forms.omega == forms.theta_prime + two_xi + forms.theta


def check_sl2(n: int) -> bool:
    """[Theta, Theta'] = 4 tau Xi, [Theta, Xi] = 2 tau Theta,
    [Theta', Xi] = -2 tau Theta'."""
    f = build_forms("uea", n=n)
    tau = f.tau
    ok1 = f.theta.commutator(f.theta_prime) == (tau * f.xi).scale(Fraction(4))
    ok2 = f.theta.commutator(f.xi) == (tau * f.theta).scale(Fraction(2))
    ok3 = f.theta_prime.commutator(f.xi) == (tau * f.theta_prime).scale(Fraction(-2))
    return ok1 and ok2 and ok3


def xi_at(forms: Forms, u) -> GrassmannElement:
    """Xi(u) = Xi + u tau (square colorings only)."""
    if forms.tau is None:
        raise ValueError("Xi(u) needs a square coloring")
    return forms.xi + forms.tau.scale(Fraction(u))


def xi_shifted_power(n_or_forms, u, r: int) -> GrassmannElement:
    """Falling product Xi(u) Xi(u-1) ... Xi(u-r+1) in the uea forms."""
    forms = n_or_forms if isinstance(n_or_forms, Forms) else build_forms("uea", n=n_or_forms)
    result = forms.one()
    for k in range(r):
        result = result * xi_at(forms, Fraction(u) - k)
    return result


def check_xi_power_formula(n: int, u, r: int, forms: Forms | None = None) -> bool:
    """Xi^(r)(u+r-1) = r! sum_{|I|=|J|=r} e_I e_-J cdet(a^I_J + shift(u)).

    The determinant entry in column t carries the extra u + r - t on
    matched indices."""
    if forms is None:
        forms = build_forms("uea", n=n)
    M: UEAMatrix = forms.source
    lhs = xi_shifted_power(forms, Fraction(u) + r - 1, r)
    rhs = GrassmannElement.zero(forms.p, forms.q)
    scale = Fraction(factorial(r))
    for I in combinations(range(1, n + 1), r):
        for J in combinations(range(1, n + 1), r):
            word = list(I) + [-j for j in reversed(J)]
            det = shifted_minor_determinant(M, I, J, u)
            rhs = rhs + GrassmannElement.from_word(forms.p, forms.q, word, scale * det)
    return lhs == rhs


def eta(forms: Forms, j: int, u) -> GrassmannElement:
    """The one-form eta_j(u) = sum_i e_i (a[i,j] + u delta_ij)."""
    M: UEAMatrix = forms.source
    n = forms.p
    out = GrassmannElement.zero(forms.p, forms.q)
    for i in range(1, n + 1):
        coeff = M.a_block(i, j)
        if i == j:
            coeff = coeff + Fraction(u)
        out = out + GrassmannElement.from_word(forms.p, forms.q, (i,), coeff)
    return out


def check_eta_anticommute(n: int, u, forms: Forms | None = None) -> bool:
    """eta_i(u+1) eta_j(u) + eta_j(u+1) eta_i(u) = 0 for all i, j."""
    if forms is None:
        forms = build_forms("uea", n=n)
    shifted = [eta(forms, j, Fraction(u) + 1) for j in range(1, n + 1)]
    plain = [eta(forms, j, Fraction(u)) for j in range(1, n + 1)]
    for i in range(n):
        for j in range(n):
            if shifted[i] * plain[j] + shifted[j] * plain[i]:
                return False
    return True


def _block_pfaffian(forms: Forms, which: str, I: Sequence[int]):
    if forms.mode == "uea":
        M: UEAMatrix = forms.source
        entry = (lambda x, y: _b_entry(M, x, y)) if which == "b" else (lambda x, y: _c_entry(M, x, y))
        return _commuting_block_pfaffian(entry, I)
    X: AntiAlternatingMatrix = forms.source
    return pfaffian(X.b_minor(I) if which == "b" else X.c_minor(I))


def check_theta_powers(n: int, s: int, t: int, mode: str = "uea",
                       p: int | None = None, q: int | None = None,
                       forms: Forms | None = None) -> bool:
    """Theta^s = 2^s s! sum_{|I|=2s} e_I Pf(b_I) and the mirror statement
    Theta'^t = 2^t t! sum_{|J|=2t} e_-J Pf(c_J)."""
    if forms is None:
        forms = build_forms(mode, n=n, p=p, q=q)
    one = forms.ring_one
    lhs_b = forms.theta.power(s, one)
    rhs_b = GrassmannElement.zero(forms.p, forms.q)
    coeff = Fraction(2**s * factorial(s))
    for I in combinations(range(1, forms.p + 1), 2 * s):
        rhs_b = rhs_b + GrassmannElement.from_word(forms.p, forms.q, I, coeff * _block_pfaffian(forms, "b", I))
    if lhs_b != rhs_b:
        return False
    lhs_c = forms.theta_prime.power(t, one)
    rhs_c = GrassmannElement.zero(forms.p, forms.q)
    coeff = Fraction(2**t * factorial(t))
    for J in combinations(range(1, forms.q + 1), 2 * t):
        word = [-j for j in reversed(J)]
        rhs_c = rhs_c + GrassmannElement.from_word(forms.p, forms.q, word, coeff * _block_pfaffian(forms, "c", J))
    return lhs_c == rhs_c


def check_trinomial(n: int, m: int, mode: str = "uea",
                    p: int | None = None, q: int | None = None,
                    forms: Forms | None = None) -> bool:
    """Trinomial expansion of Omega^m.

    uea mode: Omega^m = sum m!/(p! q! r!) 2^r Xi^(r)(q-p+r-1) Theta'^p Theta^q
    over p+q+r = m, with the falling Xi product shifted as shown.
    commutative mode: the unshifted expansion
    Omega^m = sum m!/(h! s! t!) 2^h Xi^h Theta^s Theta'^t."""
    if forms is None:
        forms = build_forms(mode, n=n, p=p, q=q)
    one = forms.ring_one
    lhs = forms.omega.power(m, one)
    rhs = GrassmannElement.zero(forms.p, forms.q)
    if forms.mode == "uea":
        for a in range(m + 1):
            for b in range(m + 1 - a):
                r = m - a - b
                coeff = Fraction(factorial(m) * 2**r, factorial(a) * factorial(b) * factorial(r))
                term = xi_shifted_power(forms, Fraction(b - a + r - 1), r)
                term = term * forms.theta_prime.power(a, one)
                term = term * forms.theta.power(b, one)
                rhs = rhs + term.scale(coeff)
    else:
        for h in range(m + 1):
            for s in range(m + 1 - h):
                t = m - h - s
                coeff = Fraction(factorial(m) * 2**h, factorial(h) * factorial(s) * factorial(t))
                term = forms.xi.power(h, one)
                term = term * forms.theta.power(s, one)
                term = term * forms.theta_prime.power(t, one)
                rhs = rhs + term.scale(coeff)
    return lhs == rhs


def pfaffian_from_top_form(mode: str = "uea", n: int | None = None,
                           p: int | None = None, q: int | None = None,
                           forms: Forms | None = None):
    """Pf X recovered as the top coefficient of Omega^n over 2^n n!."""
    if forms is None:
        forms = build_forms(mode, n=n, p=p, q=q)
    half = forms.half
    top = forms.omega.power(half, forms.ring_one).top_coefficient()
    return top * Fraction(1, 2**half * factorial(half))


def check_top_form_route(mode: str = "uea", n: int | None = None,
                         p: int | None = None, q: int | None = None) -> bool:
    """The top-form route agrees with the direct Pfaffian."""
    forms = build_forms(mode, n=n, p=p, q=q)
    via_top = pfaffian_from_top_form(forms=forms)
    if forms.mode == "uea":
        return via_top == nc_pfaffian(forms.source)
    return via_top == pfaffian_of_anti_alternating(forms.source)
