"""Ring contexts and the ideal calculus: sum, product, intersection, colon,
height, unmixedness, and randomized parameter-ideal search.

A RingContext models either a polynomial ring S = F_p[vars] or a graded
hypersurface quotient R = S/(f) with f homogeneous.  Every ideal computation
runs on the lift (generators + f) in S; two ideals of R are equal iff their
lifted reduced Groebner bases coincide.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import reduce

from .core import (
    GREVLEX,
    AlgebraError,
    PolyRing,
    Polynomial,
    PrimeField,
    RingMismatch,
    mono_deg,
)
from .groebner import (
    INFINITE,
    UnitIdeal,
    buchberger,
    colength as _gb_colength,
    divide_exact,
    eliminate,
    krull_dimension,
    normal_form,
    remap_polynomial,
)


class ParameterSearchFailed(AlgebraError):
    """Randomized parameter/height search exhausted its tries."""


class DivisionWitnessFailure(AlgebraError):
    """Internal consistency error in a colon computation."""


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd in F_p[vars], via lcm = generator of (f) cap (g)."""
    if f.is_zero():
        return g.monic() if not g.is_zero() else g
    if g.is_zero():
        return f.monic()
    ring = f.ring
    inter = _intersect_gens([f], [g], ring)
    gb = buchberger(inter, GREVLEX, ring)
    if len(gb) != 1:
        raise AlgebraError("intersection of principal ideals is not principal")
    lcm = gb[0]
    q = divide_exact(f * g, lcm)
    if q is None:
        raise DivisionWitnessFailure("lcm does not divide the product")
    return q.monic()


def _fresh_var(names) -> str:
    t = "t_"
    while t in names:
        t += "_"
    return t


def _intersect_gens(gens_a, gens_b, ring: PolyRing):
    """Generators of ideal(gens_a) cap ideal(gens_b) in a polynomial ring."""
    aux = ring.extend([_fresh_var(ring.variables)])
    n = ring.nvars
    ident = list(range(n))
    t = aux.var(n)
    one_minus_t = aux.one() - t
    mixed = [t * remap_polynomial(g, aux, ident) for g in gens_a]
    mixed += [one_minus_t * remap_polynomial(g, aux, ident) for g in gens_b]
    elim = eliminate(mixed, [n], aux)
    back = ident + [None]
    return [remap_polynomial(g, ring, back[: n + 1]) for g in elim]


def _colon_gens(gens_a, gens_b, ring: PolyRing):
    """Generators of (gens_a) : (gens_b) in a polynomial ring."""
    nonzero = [b for b in gens_b if not b.is_zero()]
    if not nonzero:
        return [ring.one()]
    result = None
    for b in nonzero:
        inter = _intersect_gens(gens_a, [b], ring)
        quotient = []
        for g in inter:
            q = divide_exact(g, b)
            if q is None:
                raise DivisionWitnessFailure(
                    f"{g} in intersection with ({b}) but not divisible by it")
            quotient.append(q)
        result = quotient if result is None else _intersect_gens(result, quotient, ring)
    return buchberger(result, GREVLEX, ring)


class RingContext:
    """Ambient ring: char p, ordered variables, optional hypersurface relation.

    With a relation f, the context models R = S/(f) with dim R = nvars - 1;
    f must be nonzero, nonunit, homogeneous and not a p-th power.  The
    ``reduced`` flag records whether gcd(f, all partials) is a unit.
    """

    def __init__(self, p, variables, relation=None):
        self.field = p if isinstance(p, PrimeField) else PrimeField(p)
        self.poly = PolyRing(self.field, variables)
        self.reduced = None
        if isinstance(relation, str):
            relation = self.poly.parse(relation)
        if relation is not None:
            if relation.ring != self.poly:
                raise RingMismatch("relation belongs to a different polynomial ring")
            if relation.is_zero() or relation.is_constant():
                raise AlgebraError("relation must be a nonzero nonunit")
            if not relation.is_homogeneous():
                raise AlgebraError("relation must be homogeneous")
            relation = relation.monic()
            partials = [relation.derivative(i) for i in range(self.poly.nvars)]
            if all(d.is_zero() for d in partials):
                raise AlgebraError("relation is a p-th power (all partials vanish)")
            g = relation
            for d in partials:
                g = poly_gcd(g, d)
            self.reduced = g.is_constant()
        self.relation = relation
        self._test_ideal = None  # write-once cache used by charp.singularity

    @property
    def variables(self):
        return self.poly.variables

    @property
    def dim(self) -> int:
        return self.poly.nvars - (1 if self.relation is not None else 0)

    def polynomial_ring(self) -> "RingContext":
        if self.relation is None:
            return self
        return RingContext(self.field, self.variables)

    def parse(self, text: str) -> Polynomial:
        return self.poly.parse(text)

    def ideal(self, *gens) -> "Ideal":
        parsed = [self.parse(g) if isinstance(g, str) else g for g in gens]
        return Ideal(self, parsed)

    def zero_ideal(self) -> "Ideal":
        return Ideal(self, [])

    def maximal_ideal(self) -> "Ideal":
        return Ideal(self, [self.poly.var(i) for i in range(self.poly.nvars)])

    def __eq__(self, other):
        return (
            isinstance(other, RingContext)
            and other.poly == self.poly
            and other.relation == self.relation
        )

    def __hash__(self):
        return hash((self.poly, None if self.relation is None
                     else self.relation.canonical_terms()))

    def __repr__(self):
        base = f"F_{self.field.p}[{','.join(self.variables)}]"
        if self.relation is not None:
            return f"RingContext({base}/({self.relation}))"
        return f"RingContext({base})"


class Ideal:
    """An ideal of a RingContext, with a cached lifted reduced GB.

    All computations happen on the lift (generators + relation) in the
    ambient polynomial ring; projection back is implicit (the relation is
    always a member, so carrying it among generators is harmless).
    """

    __slots__ = ("ring", "gens", "_gb", "_height")

    def __init__(self, ring: RingContext, gens):
        self.ring = ring
        checked = []
        for g in gens:
            if isinstance(g, str):
                g = ring.parse(g)
            if g.ring != ring.poly:
                raise RingMismatch("generator from a different ring")
            if not g.is_zero():
                checked.append(g)
        self.gens = tuple(checked)
        self._gb = None
        self._height = None

    # -- canonical basis ------------------------------------------------------

    def lift_gens(self):
        if self.ring.relation is not None:
            return list(self.gens) + [self.ring.relation]
        return list(self.gens)

    @property
    def gb(self):
        """Reduced grevlex GB of the lift; computed once, deterministic."""
        if self._gb is None:
            self._gb = buchberger(self.lift_gens(), GREVLEX, self.ring.poly)
        return self._gb

    def key(self):
        return tuple(g.canonical_terms() for g in self.gb)

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatch("comparing ideals of different rings")
        return self.key() == other.key()

    def __hash__(self):
        return hash((self.ring, self.key()))

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.gens) or '0'})"

    def gb_strings(self):
        return [str(g) for g in self.gb]

    # -- predicates -----------------------------------------------------------

    def contains(self, f) -> bool:
        if isinstance(f, str):
            f = self.ring.parse(f)
        if f.ring != self.ring.poly:
            raise RingMismatch("element from a different ring")
        return normal_form(f, self.gb).is_zero()

    def reduce(self, f: Polynomial) -> Polynomial:
        """Normal form of f against the lifted GB (canonical representative)."""
        return normal_form(f, self.gb)

    def contains_ideal(self, other: "Ideal") -> bool:
        self._same_ring(other)
        return all(self.contains(g) for g in other.gens)

    def is_zero(self) -> bool:
        return not self.gb

    def is_unit(self) -> bool:
        return len(self.gb) == 1 and self.gb[0].is_constant()

    def is_proper(self) -> bool:
        return not self.is_unit()

    def colength(self):
        """Vector-space dimension of R/I (counted on the lift), or INFINITE."""
        return _gb_colength(self.gb, self.ring.poly.nvars)

    def is_m_primary(self) -> bool:
        return self.colength() is not INFINITE

    def height(self) -> int:
        """ht(I); in a quotient context ht_R = ht_S(lift) - 1."""
        if self._height is None:
            if self.is_unit():
                raise UnitIdeal("height of the unit ideal is undefined")
            n = self.ring.poly.nvars
            ht = n - krull_dimension(self.gb, n)
            if self.ring.relation is not None:
                ht -= 1
            self._height = ht
        return self._height

    def minimal_generators(self):
        """Greedily prune generators contained in the span of the others."""
        gens = sorted(set(self.gens), key=lambda g: (g.degree(), g.canonical_terms()))
        kept: list[Polynomial] = []
        for i, g in enumerate(gens):
            rest = kept + gens[i + 1:]
            if not Ideal(self.ring, rest).contains(g):
                kept.append(g)
        return kept

    # -- operations -----------------------------------------------------------

    def _same_ring(self, other: "Ideal"):
        if not isinstance(other, Ideal):
            raise TypeError("expected an Ideal")
        if other.ring != self.ring:
            raise RingMismatch("ideals of different rings")

    def __add__(self, other: "Ideal") -> "Ideal":
        self._same_ring(other)
        return Ideal(self.ring, list(self.gens) + list(other.gens))

    def __mul__(self, other: "Ideal") -> "Ideal":
        self._same_ring(other)
        prods = [a * b for a in self.gens for b in other.gens]
        return Ideal(self.ring, prods)

    def intersect(self, other: "Ideal") -> "Ideal":
        self._same_ring(other)
        gens = _intersect_gens(self.lift_gens(), other.lift_gens(), self.ring.poly)
        return Ideal(self.ring, gens)

    def colon(self, other: "Ideal") -> "Ideal":
        """A : B = {u : uB in A}, computed on lifts."""
        self._same_ring(other)
        gens = _colon_gens(self.lift_gens(), list(other.gens), self.ring.poly)
        return Ideal(self.ring, gens)

    def colon_element(self, f: Polynomial) -> "Ideal":
        return self.colon(Ideal(self.ring, [f]))


def ideal_op(a: Ideal, b: Ideal, op: str) -> Ideal:
    if op == "sum":
        return a + b
    if op == "product":
        return a * b
    raise AlgebraError(f"unknown ideal op {op!r}")


# ---------------------------------------------------------------------------
# Randomized search: parameter ideals and m-primary extensions.

def _random_homogeneous(ring: PolyRing, degree: int, rng: random.Random) -> Polynomial:
    import itertools
    p = ring.field.p
    terms = []
    for exps in itertools.product(range(degree + 1), repeat=ring.nvars):
        if sum(exps) == degree:
            c = rng.randrange(p)
            if c:
                terms.append((exps, c))
    return ring.from_terms(terms)


def _random_element_of(I: Ideal, bump: int, rng: random.Random) -> Polynomial:
    """Random homogeneous-ish combination sum r_i * g_i of the generators.

    With homogeneous generators the result is homogeneous of degree
    max(deg g_i) + bump, which keeps the graded/local dictionary intact.
    """
    ring = I.ring.poly
    gens = list(I.gens)
    if not gens:
        raise ParameterSearchFailed("cannot sample inside the zero ideal")
    target = max(g.degree() for g in gens) + bump
    out = ring.zero()
    for g in gens:
        d = target - g.degree()
        if d < 0:
            continue
        r = _random_homogeneous(ring, d, rng)
        out = out + r * g
    return out


def find_parameter_ideal(I: Ideal, rng: random.Random, max_tries: int = 60,
                         height: int | None = None,
                         min_bump: int = 0) -> Ideal:
    """A parameter ideal a inside I: exactly g generators with ht(a) = g.

    In the Cohen-Macaulay ambient (polynomial ring or hypersurface) this
    certifies a regular sequence, hence a Gorenstein ideal of finite
    projective dimension.  Degree bumps escalate 0 -> 1 -> 2 when plain
    F_p-combinations are degenerate (common over F_2); ``min_bump`` raises
    the floor, which callers use to avoid sampling I itself.
    """
    if I.is_unit() or I.is_zero():
        raise ParameterSearchFailed("need a proper nonzero ideal")
    g = height if height is not None else I.height()
    if g < 1:
        raise ParameterSearchFailed("height must be >= 1")
    for trial in range(max_tries):
        bump = min(trial * 3 // max_tries, 2) if max_tries >= 3 else 0
        bump = max(bump, min_bump)
        elems = []
        ok = True
        for _ in range(g):
            e = _random_element_of(I, bump, rng)
            if e.is_zero():
                ok = False
                break
            elems.append(e)
        if not ok:
            continue
        cand = Ideal(I.ring, elems)
        if len(cand.minimal_generators()) != g:
            continue
        try:
            if cand.is_unit() or cand.height() != g:
                continue
        except UnitIdeal:
            continue
        return cand
    raise ParameterSearchFailed(
        f"no parameter ideal of height {g} found in {max_tries} tries")


def extend_to_m_primary(b: Ideal, rng: random.Random, max_tries: int = 80):
    """d - g elements whose addition to b makes it m-primary.

    Greedy randomized height raising; deterministic under the caller's rng.
    Returns [] when b is already m-primary.
    """
    d = b.ring.dim
    g = b.height()
    extras: list[Polynomial] = []
    current = b
    while g + len(extras) < d:
        for trial in range(max_tries):
            # escalate degree: low-degree forms can all vanish on the
            # (many) curve components of a composite starting ideal
            degree = 1 + min(trial // max(1, max_tries // 5), 4)
            x = _random_homogeneous(b.ring.poly, degree, rng)
            if x.is_zero():
                continue
            cand = current + Ideal(b.ring, [x])
            try:
                if cand.is_unit():
                    continue
                if cand.height() == current.height() + 1:
                    extras.append(x)
                    current = cand
                    break
            except UnitIdeal:
                continue
        else:
            raise ParameterSearchFailed("could not raise height to m-primary")
    if not current.is_m_primary():
        raise ParameterSearchFailed("extension is not m-primary")
    return extras


def unmixed_part(I: Ideal, rng: random.Random | None = None, samples: int = 3) -> Ideal:
    """a : (a : I) for a sampled parameter ideal a in I of the same height.

    The value is independent of the choice of a; ``samples`` independent
    draws are cross-checked before returning.
    """
    if rng is None:
        rng = random.Random(0xA11CE)
    if I.is_unit():
        raise UnitIdeal("unmixed part of the unit ideal is undefined")
    results = []
    for _ in range(max(1, samples)):
        a = find_parameter_ideal(I, rng)
        results.append(a.colon(a.colon(I)))
    first = results[0]
    if any(r != first for r in results[1:]):
        raise AlgebraError("unmixed part disagreed across parameter samples")
    return first


def is_unmixed(I: Ideal, rng: random.Random | None = None) -> bool:
    """True iff all associated primes of I have height ht(I)."""
    if I.is_m_primary():
        return True
    return unmixed_part(I, rng) == I
