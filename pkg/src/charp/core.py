"""Exact multivariate polynomial arithmetic over prime fields F_p.

Polynomials are immutable values in canonical form: a sorted tuple of
(monomial, coefficient) pairs with nonzero coefficients in [0, p) and no
duplicate monomials.  Monomials are plain tuples of non-negative integer
exponents, one slot per ring variable.  All operations are pure functions;
values may be freely shared.
"""

from __future__ import annotations

import re
from functools import total_ordering

MAX_PRIME = 65521
MAX_EXPONENT = 2**31 - 1


class AlgebraError(Exception):
    """Base class for all errors raised by this package."""


class RingMismatch(AlgebraError):
    """Operands belong to different rings."""


class UnknownVariableError(AlgebraError):
    """A parsed variable name is not declared in the ring."""


class PolynomialSyntaxError(AlgebraError):
    """Malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ExponentOverflow(AlgebraError):
    """Exponent arithmetic left the 32-bit design envelope."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """The field F_p for a prime p with 2 <= p <= 65521.

    Elements are canonical integer representatives in [0, p).
    """

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or not 2 <= p <= MAX_PRIME:
            raise AlgebraError(f"characteristic must be a prime in [2, {MAX_PRIME}], got {p!r}")
        if not is_prime(p):
            raise AlgebraError(f"characteristic {p} is not prime")
        self.p = p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return pow(a, self.p - 2, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


# ---------------------------------------------------------------------------
# Monomials: plain exponent tuples.

def mono_mul(a: tuple, b: tuple) -> tuple:
    out = tuple(x + y for x, y in zip(a, b))
    if any(e > MAX_EXPONENT for e in out):
        raise ExponentOverflow(f"exponent overflow in monomial product {a} * {b}")
    return out


def mono_divides(a: tuple, b: tuple) -> bool:
    """True iff monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: tuple, a: tuple) -> tuple:
    """b / a; raises unless a divides b (exponents stay non-negative)."""
    out = tuple(y - x for x, y in zip(a, b))
    if any(e < 0 for e in out):
        raise ExponentOverflow(f"monomial {a} does not divide {b}")
    return out


def mono_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a: tuple) -> int:
    return sum(a)


def mono_pow(a: tuple, n: int) -> tuple:
    out = tuple(e * n for e in a)
    if any(e > MAX_EXPONENT for e in out):
        raise ExponentOverflow(f"exponent overflow in monomial power {a}^{n}")
    return out


class MonomialOrder:
    """A total multiplicative monomial order, given by a sort key.

    Larger key means larger monomial.  Kinds: lex, grevlex, and a two-block
    elimination order (first ``nelim`` variables lex, compared before the
    grevlex-ordered tail).
    """

    __slots__ = ("kind", "nelim")

    def __init__(self, kind: str, nelim: int = 0):
        if kind not in ("lex", "grevlex", "block"):
            raise AlgebraError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.nelim = nelim

    @staticmethod
    def lex() -> "MonomialOrder":
        return MonomialOrder("lex")

    @staticmethod
    def grevlex() -> "MonomialOrder":
        return MonomialOrder("grevlex")

    @staticmethod
    def block(nelim: int) -> "MonomialOrder":
        return MonomialOrder("block", nelim)

    def key(self, exps: tuple):
        if self.kind == "grevlex":
            return (sum(exps), tuple(-e for e in reversed(exps)))
        if self.kind == "lex":
            return exps
        head = exps[: self.nelim]
        tail = exps[self.nelim:]
        return (head, sum(tail), tuple(-e for e in reversed(tail)))

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and other.kind == self.kind
            and other.nelim == self.nelim
        )

    def __hash__(self):
        return hash(("MonomialOrder", self.kind, self.nelim))

    def __repr__(self):
        if self.kind == "block":
            return f"MonomialOrder('block', {self.nelim})"
        return f"MonomialOrder({self.kind!r})"


GREVLEX = MonomialOrder.grevlex()


class PolyRing:
    """The polynomial ring F_p[x_1, ..., x_n] with named variables."""

    __slots__ = ("field", "variables", "_varindex")

    def __init__(self, p, variables):
        self.field = p if isinstance(p, PrimeField) else PrimeField(p)
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise AlgebraError("duplicate variable names")
        for v in variables:
            if not re.fullmatch(r"[a-zA-Z][a-zA-Z0-9_]*", v):
                raise AlgebraError(f"bad variable name {v!r}")
        self.variables = variables
        self._varindex = {v: i for i, v in enumerate(variables)}

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.field == self.field
            and other.variables == self.variables
        )

    def __hash__(self):
        return hash((self.field, self.variables))

    def __repr__(self):
        return f"PolyRing(F_{self.field.p}[{', '.join(self.variables)}])"

    # -- element constructors ------------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.const(1)

    def const(self, c: int) -> "Polynomial":
        c %= self.field.p
        if c == 0:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, name_or_index) -> "Polynomial":
        if isinstance(name_or_index, str):
            if name_or_index not in self._varindex:
                raise UnknownVariableError(f"unknown variable {name_or_index!r}")
            i = self._varindex[name_or_index]
        else:
            i = name_or_index
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, {tuple(exps): 1})

    def monomial(self, exps, coeff: int = 1) -> "Polynomial":
        c = coeff % self.field.p
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise AlgebraError("exponent vector arity mismatch")
        if c == 0:
            return self.zero()
        return Polynomial(self, {exps: c})

    def from_terms(self, terms) -> "Polynomial":
        acc: dict = {}
        p = self.field.p
        for exps, c in terms:
            c = (acc.get(exps, 0) + c) % p
            if c:
                acc[exps] = c
            else:
                acc.pop(exps, None)
        return Polynomial(self, acc)

    def parse(self, text: str) -> "Polynomial":
        return parse_polynomial(text, self)

    def extend(self, extra_variables) -> "PolyRing":
        return PolyRing(self.field, self.variables + tuple(extra_variables))


@total_ordering
class Polynomial:
    """An element of a PolyRing, canonically stored.

    ``terms`` maps exponent tuples to nonzero coefficients in [0, p).
    The canonical (grevlex-descending) term tuple backs hashing, equality
    and printing, so equal polynomials have identical representations.
    """

    __slots__ = ("ring", "terms", "_canon")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._canon = None

    # -- canonical form -------------------------------------------------------

    def canonical_terms(self) -> tuple:
        if self._canon is None:
            self._canon = tuple(
                sorted(self.terms.items(), key=lambda t: GREVLEX.key(t[0]), reverse=True)
            )
        return self._canon

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(mono_deg(m) == 0 for m in self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(mono_deg(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {mono_deg(m) for m in self.terms}
        return len(degs) <= 1

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> tuple:
        if not self.terms:
            raise AlgebraError("zero polynomial has no leading term")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = GREVLEX) -> int:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        if not self.terms:
            return self
        inv = self.ring.field.inv(self.leading_coefficient(order))
        return self.scale(inv)

    def scale(self, c: int) -> "Polynomial":
        p = self.ring.field.p
        c %= p
        if c == 0:
            return self.ring.zero()
        if c == 1:
            return self
        return Polynomial(self.ring, {m: (a * c) % p for m, a in self.terms.items()})

    def mul_monomial(self, exps: tuple, coeff: int = 1) -> "Polynomial":
        p = self.ring.field.p
        coeff %= p
        if coeff == 0:
            return self.ring.zero()
        return Polynomial(
            self.ring,
            {mono_mul(m, exps): (a * coeff) % p for m, a in self.terms.items()},
        )

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other) -> "Polynomial":
        if isinstance(other, int):
            return self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatch(f"operands in different rings: {self.ring} vs {other.ring}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.ring.field.p
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = (out.get(m, 0) + c) % p
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.field.p
        return Polynomial(self.ring, {m: (-c) % p for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._check(other)
        if other is NotImplemented:
            return other
        p = self.ring.field.p
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = (out.get(m, 0) + c1 * c2) % p
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise AlgebraError("negative exponents are not supported")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def derivative(self, var) -> "Polynomial":
        i = self.ring._varindex[var] if isinstance(var, str) else var
        p = self.ring.field.p
        out: dict = {}
        for m, c in self.terms.items():
            if m[i] == 0:
                continue
            nc = (c * m[i]) % p
            if nc == 0:
                continue
            nm = m[:i] + (m[i] - 1,) + m[i + 1:]
            out[nm] = (out.get(nm, 0) + nc) % p
            if out[nm] == 0:
                del out[nm]
        return Polynomial(self.ring, out)

    # -- comparisons ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __lt__(self, other):
        # canonical comparison used only for deterministic sorting
        other = self._check(other)
        return self.canonical_terms() < other.canonical_terms()

    def __hash__(self):
        return hash((self.ring, self.canonical_terms()))

    def __bool__(self):
        return bool(self.terms)

    # -- printing -------------------------------------------------------------

    def __str__(self):
        return format_polynomial(self)

    def __repr__(self):
        return f"<{format_polynomial(self)}>"


def format_polynomial(f: Polynomial) -> str:
    """Canonical text form: grevlex-descending terms joined by '+'.

    Coefficients are printed only when != 1, except for the constant term;
    '*' separates variables (never coefficient and monomial).
    """
    if f.is_zero():
        return "0"
    pieces = []
    names = f.ring.variables
    for exps, c in f.canonical_terms():
        vars_part = "*".join(
            name if e == 1 else f"{name}^{e}" for name, e in zip(names, exps) if e
        )
        if not vars_part:
            pieces.append(str(c))
        elif c == 1:
            pieces.append(vars_part)
        else:
            pieces.append(f"{c}{vars_part}")
    return "+".join(pieces)


_TOKEN = re.compile(
    r"\s*(?:(?P<nat>\d+)|(?P<var>[a-zA-Z][a-zA-Z0-9_]*)|(?P<op>[-+*^()]))"
)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise PolynomialSyntaxError(f"unexpected character {stripped[0]!r}", pos)
        if m.lastgroup == "nat":
            tokens.append(("nat", int(m.group("nat")), m.start("nat")))
        elif m.lastgroup == "var":
            tokens.append(("var", m.group("var"), m.start("var")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    return tokens


def parse_polynomial(text: str, ring) -> Polynomial:
    """Parse `poly := term (('+'|'-') term)*` over the given ring.

    `term := coeff? ('*'? var ('^' nat)?)*` with integer coefficients
    reduced mod p.  Raises PolynomialSyntaxError / UnknownVariableError.
    """
    if isinstance(ring, PolyRing):
        pring = ring
    else:
        pring = ring.poly  # RingContext duck-typing
    tokens = _tokenize(text)
    if not tokens:
        raise PolynomialSyntaxError("empty polynomial", 0)
    n = pring.nvars
    p = pring.field.p
    i = 0

    def parse_term(sign: int):
        nonlocal i
        coeff = sign
        exps = [0] * n
        saw_factor = False
        expect_factor = True  # a factor must follow a '*'
        while i < len(tokens):
            kind, val, pos = tokens[i]
            if kind == "nat":
                coeff = (coeff * val) % p
                saw_factor = True
                expect_factor = False
                i += 1
            elif kind == "var":
                if val not in pring._varindex:
                    raise UnknownVariableError(f"unknown variable {val!r} at position {pos}")
                idx = pring._varindex[val]
                e = 1
                i += 1
                if i < len(tokens) and tokens[i][:2] == ("op", "^"):
                    i += 1
                    if i >= len(tokens) or tokens[i][0] != "nat":
                        raise PolynomialSyntaxError("expected exponent after '^'",
                                                    tokens[i - 1][2])
                    e = tokens[i][1]
                    if e > MAX_EXPONENT:
                        raise ExponentOverflow(f"exponent {e} too large")
                    i += 1
                exps[idx] += e
                if exps[idx] > MAX_EXPONENT:
                    raise ExponentOverflow("exponent overflow in term")
                saw_factor = True
                expect_factor = False
            elif kind == "op" and val == "*":
                if expect_factor:
                    raise PolynomialSyntaxError("unexpected '*'", pos)
                expect_factor = True
                i += 1
            else:
                break
        if not saw_factor:
            pos = tokens[i][2] if i < len(tokens) else len(text)
            raise PolynomialSyntaxError("expected a term", pos)
        if expect_factor:
            raise PolynomialSyntaxError("dangling '*'", tokens[i - 1][2])
        return tuple(exps), coeff % p

    terms = []
    sign = 1
    # optional leading sign
    if tokens[0][:2] == ("op", "-"):
        sign = p - 1
        i = 1
    elif tokens[0][:2] == ("op", "+"):
        i = 1
    terms.append(parse_term(sign))
    while i < len(tokens):
        kind, val, pos = tokens[i]
        if kind != "op" or val not in "+-":
            raise PolynomialSyntaxError(f"expected '+' or '-', got {val!r}", pos)
        i += 1
        terms.append(parse_term(1 if val == "+" else p - 1))
    return pring.from_terms(terms)
