"""Buchberger's algorithm, reduced Groebner bases, elimination, dimension.

Reduced bases are canonical for a fixed order, which makes them the ideal
equality oracle used throughout the package.  Pure functions over immutable
inputs; desk-scale inputs only (no F4/F5, no Hilbert-driven variants).
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass

from .core import (
    GREVLEX,
    AlgebraError,
    MonomialOrder,
    PolyRing,
    Polynomial,
    mono_deg,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)


class UnitIdeal(AlgebraError):
    """Raised when an operation needs a proper ideal but got (1)."""


INFINITE = float("inf")


def normal_form(f: Polynomial, basis, order: MonomialOrder = GREVLEX) -> Polynomial:
    """Remainder of f under multivariate division by ``basis``.

    normal_form(f, G) == 0 iff f lies in the ideal of G, provided G is a
    Groebner basis for ``order``.
    """
    basis = [g for g in basis if not g.is_zero()]
    if not basis or f.is_zero():
        return f
    ring = f.ring
    p = ring.field.p
    inv = ring.field.inv
    leads = [(g.leading_monomial(order), g.leading_coefficient(order), g) for g in basis]
    work = dict(f.terms)
    remainder: dict = {}
    key = order.key
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for lm, lc, g in leads:
            if mono_divides(lm, m):
                factor = (c * inv(lc)) % p
                shift = mono_div(m, lm)
                for gm, gc in g.terms.items():
                    t = mono_mul(gm, shift)
                    if t == m:
                        continue  # lead term cancels against c exactly
                    s = (work.get(t, 0) - factor * gc) % p
                    if s:
                        work[t] = s
                    else:
                        work.pop(t, None)
                break
        else:
            remainder[m] = c
    return Polynomial(ring, remainder)


def _s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    lf = f.leading_monomial(order)
    lg = g.leading_monomial(order)
    lcm = mono_lcm(lf, lg)
    cf = f.leading_coefficient(order)
    cg = g.leading_coefficient(order)
    field = f.ring.field
    a = f.mul_monomial(mono_div(lcm, lf), field.inv(cf))
    b = g.mul_monomial(mono_div(lcm, lg), field.inv(cg))
    return a - b


def buchberger(gens, order: MonomialOrder = GREVLEX, ring: PolyRing | None = None):
    """Canonical reduced Groebner basis of the ideal generated by ``gens``.

    Returns a list of monic polynomials, auto-reduced and sorted by
    ascending leading monomial.  Deterministic and independent of the
    generator order.  Empty input (or all zero) yields [].
    """
    gens = [g for g in gens if g is not None and not g.is_zero()]
    if not gens:
        return []
    if ring is None:
        ring = gens[0].ring
    # deterministic starting point
    basis = sorted({g.monic(order) for g in gens},
                   key=lambda g: sorted((order.key(m), c) for m, c in g.terms.items()))
    G: list[Polynomial] = []
    leads: list[tuple] = []
    pending: set[tuple] = set()
    heap: list = []

    def add_poly(h: Polynomial):
        j = len(G)
        G.append(h)
        lm = h.leading_monomial(order)
        leads.append(lm)
        for i in range(j):
            lcm = mono_lcm(leads[i], lm)
            pending.add((i, j))
            heapq.heappush(heap, (order.key(lcm), i, j))

    for g in basis:
        g = normal_form(g, G, order)
        if not g.is_zero():
            add_poly(g.monic(order))

    while heap:
        _, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        li, lj = leads[i], leads[j]
        lcm = mono_lcm(li, lj)
        # product criterion: coprime leads
        if lcm == mono_mul(li, lj):
            continue
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if mono_divides(leads[k], lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pending and pjk not in pending:
                    skip = True
                    break
        if skip:
            continue
        h = normal_form(_s_polynomial(G[i], G[j], order), G, order)
        if not h.is_zero():
            add_poly(h.monic(order))

    # minimalize: drop elements whose lead is divisible by another lead
    keep = []
    for i, lm in enumerate(leads):
        if any(mono_divides(leads[j], lm) for j in keep):
            continue
        keep = [j for j in keep if not mono_divides(lm, leads[j])]
        keep.append(i)
    minimal = [G[i] for i in keep]
    # interreduce tails
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = normal_form(g, others, order)
        if not r.is_zero():
            reduced.append(r.monic(order))
    reduced.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return reduced


def is_groebner(basis, order: MonomialOrder = GREVLEX) -> bool:
    """Every S-polynomial reduces to zero (used by tests, not hot paths)."""
    for f, g in itertools.combinations(basis, 2):
        if not normal_form(_s_polynomial(f, g, order), basis, order).is_zero():
            return False
    return True


# ---------------------------------------------------------------------------
# Variable remapping and elimination.

def remap_polynomial(f: Polynomial, target: PolyRing, slot_map) -> Polynomial:
    """Move f into ``target``, sending source variable i to slot slot_map[i].

    slot_map[i] may be None only if variable i does not occur in f.
    """
    n = target.nvars
    terms = {}
    for m, c in f.terms.items():
        exps = [0] * n
        for i, e in enumerate(m):
            if e == 0:
                continue
            j = slot_map[i]
            if j is None:
                raise AlgebraError("remap drops a variable that occurs in the polynomial")
            exps[j] = e
        terms[tuple(exps)] = c
    return Polynomial(target, terms)


def eliminate(gens, drop_indices, ring: PolyRing):
    """Generators of ideal(gens) intersected with F_p[kept variables].

    Returns reduced-GB generators as polynomials of ``ring`` with zero
    exponents in the dropped slots (computed with a two-block order).
    """
    drop = sorted(set(drop_indices))
    if not drop:
        return buchberger(gens, GREVLEX, ring)
    n = ring.nvars
    keep = [i for i in range(n) if i not in drop]
    perm = drop + keep  # permuted ring: dropped variables first
    reordered = PolyRing(ring.field, tuple(ring.variables[i] for i in perm))
    slot_of = {src: dst for dst, src in enumerate(perm)}
    fwd = [slot_of[i] for i in range(n)]
    moved = [remap_polynomial(g, reordered, fwd) for g in gens]
    gb = buchberger(moved, MonomialOrder.block(len(drop)), reordered)
    back = [perm[j] for j in range(n)]
    out = []
    for g in gb:
        if all(m[i] == 0 for m in g.terms for i in range(len(drop))):
            out.append(remap_polynomial(g, ring, back))
    return out


def krull_dimension(gb, nvars: int) -> int:
    """Krull dimension of S/I from the reduced GB of I in S.

    Maximal size of a variable subset U with no leading monomial supported
    inside U.  Raises UnitIdeal for the unit ideal.
    """
    if any(g.is_constant() and not g.is_zero() for g in gb):
        raise UnitIdeal("dimension of the zero ring is undefined")
    leads = [g.leading_monomial(GREVLEX) for g in gb]
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in leads]
    best = 0
    for r in range(nvars, 0, -1):
        for combo in itertools.combinations(range(nvars), r):
            u = set(combo)
            if all(not s <= u for s in supports):
                return r
    return best


def colength(gb, nvars: int):
    """Number of standard monomials of the lead-term ideal, or INFINITE.

    Finite iff every variable has a pure power among the leading monomials.
    """
    if any(g.is_constant() and not g.is_zero() for g in gb):
        return 0
    leads = [g.leading_monomial(GREVLEX) for g in gb]
    bounds = [None] * nvars
    for m in leads:
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or m[i] < bounds[i]:
                bounds[i] = m[i]
    if any(b is None for b in bounds):
        return INFINITE
    count = 0
    for exps in itertools.product(*(range(b) for b in bounds)):
        if not any(mono_divides(m, exps) for m in leads):
            count += 1
    return count


def standard_monomials(gb, nvars: int):
    """All monomials outside the lead-term ideal (finite colength required)."""
    if any(g.is_constant() and not g.is_zero() for g in gb):
        return []
    leads = [g.leading_monomial(GREVLEX) for g in gb]
    bounds = [None] * nvars
    for m in leads:
        support = [i for i, e in enumerate(m) if e]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or m[i] < bounds[i]:
                bounds[i] = m[i]
    if any(b is None for b in bounds):
        raise AlgebraError("infinite colength: no pure power for some variable")
    out = []
    for exps in itertools.product(*(range(b) for b in bounds)):
        if not any(mono_divides(m, exps) for m in leads):
            out.append(exps)
    return out


def divide_exact(f: Polynomial, g: Polynomial):
    """Quotient f/g when g divides f exactly, else None."""
    if g.is_zero():
        return None
    if f.is_zero():
        return f
    order = GREVLEX
    ring = f.ring
    p = ring.field.p
    lg = g.leading_monomial(order)
    cg_inv = ring.field.inv(g.leading_coefficient(order))
    work = dict(f.terms)
    quotient: dict = {}
    while work:
        m = max(work, key=order.key)
        c = work.pop(m)
        if not mono_divides(lg, m):
            return None
        shift = mono_div(m, lg)
        factor = (c * cg_inv) % p
        quotient[shift] = factor
        for gm, gc in g.terms.items():
            t = mono_mul(gm, shift)
            if t == m:
                continue
            s = (work.get(t, 0) - factor * gc) % p
            if s:
                work[t] = s
            else:
                work.pop(t, None)
    return Polynomial(ring, quotient)
