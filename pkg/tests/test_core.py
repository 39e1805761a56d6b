import pytest
from hypothesis import given, settings, strategies as st

from charp.core import (
    GREVLEX,
    AlgebraError,
    ExponentOverflow,
    MonomialOrder,
    PolyRing,
    Polynomial,
    PolynomialSyntaxError,
    PrimeField,
    UnknownVariableError,
    format_polynomial,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    parse_polynomial,
)

R2 = PolyRing(2, ["x", "y", "z"])
R5 = PolyRing(5, ["x", "y"])


def poly_strategy(ring, max_deg=4, max_terms=5):
    exps = st.tuples(*[st.integers(0, max_deg) for _ in range(ring.nvars)])
    term = st.tuples(exps, st.integers(1, ring.field.p - 1))
    return st.lists(term, max_size=max_terms).map(
        lambda ts: ring.from_terms(ts))


class TestPrimeField:
    def test_rejects_composite(self):
        with pytest.raises(AlgebraError):
            PrimeField(6)

    def test_rejects_one_and_zero(self):
        for bad in (0, 1, -7):
            with pytest.raises(AlgebraError):
                PrimeField(bad)

    def test_rejects_large(self):
        with pytest.raises(AlgebraError):
            PrimeField(65537)

    def test_max_allowed(self):
        assert PrimeField(65521).p == 65521

    @given(st.integers(1, 4))
    def test_inverse(self, a):
        f = PrimeField(5)
        assert (f.inv(a) * a) % 5 == 1


class TestMonomials:
    def test_mul_div(self):
        a, b = (1, 2, 0), (0, 1, 3)
        assert mono_mul(a, b) == (1, 3, 3)
        assert mono_div(mono_mul(a, b), b) == a
        assert mono_divides(b, mono_mul(a, b))
        assert not mono_divides((2, 0, 0), (1, 5, 5))
        assert mono_lcm(a, b) == (1, 2, 3)

    def test_div_underflow(self):
        with pytest.raises(AlgebraError):
            mono_div((1, 0, 0), (2, 0, 0))


class TestMonomialOrder:
    @given(st.tuples(st.integers(0, 5), st.integers(0, 5)),
           st.tuples(st.integers(0, 5), st.integers(0, 5)),
           st.tuples(st.integers(0, 5), st.integers(0, 5)))
    def test_multiplicative(self, u, v, w):
        for order in (MonomialOrder.lex(), MonomialOrder.grevlex(),
                      MonomialOrder.block(1)):
            if order.key(u) < order.key(v):
                assert order.key(mono_mul(u, w)) < order.key(mono_mul(v, w))

    @given(st.tuples(st.integers(0, 5), st.integers(0, 5)))
    def test_one_minimal(self, u):
        for order in (MonomialOrder.lex(), MonomialOrder.grevlex()):
            if u != (0, 0):
                assert order.key((0, 0)) < order.key(u)

    def test_grevlex_classic(self):
        # x^2 y z > x y^3 in grevlex? deg 4 vs 4; compare reversed negatives
        k = GREVLEX.key
        assert k((1, 1, 1)) < k((3, 0, 0)) or k((3, 0, 0)) < k((1, 1, 1))
        # x > y > z
        assert k((1, 0, 0)) > k((0, 1, 0)) > k((0, 0, 1))

    def test_block_eliminates_first_variables(self):
        order = MonomialOrder.block(1)
        # any monomial containing the first variable beats any that does not
        assert order.key((1, 0, 0)) > order.key((0, 5, 5))


class TestPolynomialArithmetic:
    @settings(max_examples=60, deadline=None)
    @given(poly_strategy(R5), poly_strategy(R5), poly_strategy(R5))
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + R5.zero() == a
        assert a * R5.one() == a
        assert a - a == R5.zero()

    @settings(max_examples=40, deadline=None)
    @given(poly_strategy(R5, max_deg=3), poly_strategy(R5, max_deg=3))
    def test_frobenius_is_additive(self, a, b):
        p = R5.field.p
        assert (a + b) ** p == a ** p + b ** p

    @settings(max_examples=40, deadline=None)
    @given(poly_strategy(R5, max_deg=3))
    def test_p_power_termwise(self, f):
        p = R5.field.p
        expect = Polynomial(
            R5, {tuple(e * p for e in m): c for m, c in f.terms.items()})
        assert f ** p == expect

    def test_derivative_product_rule(self):
        f, g = R5.parse("x^2+y"), R5.parse("x*y+3")
        for i in range(2):
            assert (f * g).derivative(i) == \
                f.derivative(i) * g + f * g.derivative(i)

    def test_pow_zero_one(self):
        f = R5.parse("x+y")
        assert f ** 0 == R5.one()
        assert f ** 1 == f

    def test_exponent_overflow(self):
        with pytest.raises(ExponentOverflow):
            R5.parse("x^9999999999")


class TestParseFormat:
    @settings(max_examples=60, deadline=None)
    @given(poly_strategy(R5))
    def test_roundtrip(self, f):
        assert parse_polynomial(format_polynomial(f), R5) == f

    def test_basic_forms(self):
        assert R2.parse("x^2 + 2*x*y + y^2") == R2.parse("x^2+y^2")
        assert R5.parse("7") == R5.const(2)
        assert R5.parse("3x") == R5.parse("3*x")
        assert R2.parse("x - y") == R2.parse("x+y")

    def test_zero_formats_as_zero(self):
        assert format_polynomial(R2.zero()) == "0"
        assert R2.parse("0").is_zero()

    def test_unknown_variable(self):
        with pytest.raises(UnknownVariableError):
            R5.parse("x+w")

    def test_syntax_error_has_position(self):
        with pytest.raises(PolynomialSyntaxError) as err:
            R5.parse("x++y")
        assert isinstance(err.value.position, int)

    def test_rejects_garbage(self):
        for bad in ("", "x^", "^2", "x**2", "(x+y)"):
            with pytest.raises(AlgebraError):
                R5.parse(bad)


class TestPolyRing:
    def test_ring_mismatch(self):
        from charp.core import RingMismatch
        other = PolyRing(5, ["x", "y", "z"])
        with pytest.raises(RingMismatch):
            R5.parse("x") + other.parse("x")

    def test_duplicate_variables_rejected(self):
        with pytest.raises(AlgebraError):
            PolyRing(5, ["x", "x"])

    def test_var_lookup(self):
        assert R5.var("y") == R5.var(1)
        with pytest.raises(UnknownVariableError):
            R5.var("q")
