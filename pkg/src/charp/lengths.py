"""Hilbert-Kunz style length tables for bracket and corner powers.

Lengths in quotient contexts are colengths of lifts (the lift carries the
relation, so a single staircase-counting path suffices).  The leading
coefficient estimate colength/q^d is reported, never asserted against
outside values.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass
from fractions import Fraction

from .core import AlgebraError
from .frobenius import bracket_power, frobenius_q
from .linkage import corner_power
from .rings import Ideal, find_parameter_ideal


class NotMPrimary(AlgebraError):
    """Length tables need finite colengths at every level."""


@dataclass(frozen=True)
class LengthRow:
    e: int
    q: int
    colength_bracket: int
    colength_corner: int | None


@dataclass(frozen=True)
class LengthTable:
    ideal: Ideal
    rows: tuple
    leading_coefficient_estimate: Fraction

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["e", "q", "len_bracket", "len_corner"])
        for row in self.rows:
            writer.writerow([row.e, row.q, row.colength_bracket,
                             "" if row.colength_corner is None else row.colength_corner])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({
            "ideal": self.ideal.gb_strings(),
            "rows": [
                {"e": r.e, "q": r.q, "len_bracket": r.colength_bracket,
                 "len_corner": r.colength_corner}
                for r in self.rows
            ],
            "leading_coefficient_estimate": str(self.leading_coefficient_estimate),
        }, sort_keys=True)


def hk_table(I: Ideal, e_max: int, include_corner: bool = False,
             rng: random.Random | None = None) -> LengthTable:
    """Colengths of I^[q] (and I^<q> on request) for e = 0..e_max."""
    if not I.is_m_primary():
        raise NotMPrimary("length table needs an m-primary ideal")
    if rng is None:
        rng = random.Random(0x1E57)
    rows = []
    for e in range(e_max + 1):
        q = frobenius_q(I.ring, e)
        lb = bracket_power(I, e).colength()
        lc = None
        if include_corner:
            lc = corner_power(I, e, samples=1, rng=rng).value.colength()
        rows.append(LengthRow(e, q, lb, lc))
    d = I.ring.dim
    top = rows[-1]
    estimate = Fraction(top.colength_bracket, top.q ** d)
    return LengthTable(I, tuple(rows), estimate)


@dataclass(frozen=True)
class CornerLengthIdentity:
    equal: bool
    lhs: int
    rhs: int
    linking: Ideal
    linked: Ideal


def corner_length_identity(J: Ideal, e: int,
                           rng: random.Random | None = None) -> CornerLengthIdentity:
    """l(R/J^<q>) versus l(R/a^[q]) - l(R/I^[q]) for a sampled parameter
    ideal a inside J and I = a : J.  Both sides and the verdict are returned.
    """
    if not J.is_m_primary():
        raise NotMPrimary("corner length identity needs an m-primary ideal")
    if rng is None:
        rng = random.Random(0xC0FE)
    a = find_parameter_ideal(J, rng)
    I = a.colon(J)
    corner = bracket_power(a, e).colon(bracket_power(I, e))
    lhs = corner.colength()
    ra = bracket_power(a, e).colength()
    ri = bracket_power(I, e).colength()
    rhs = ra - ri
    return CornerLengthIdentity(lhs == rhs, lhs, rhs, a, I)
