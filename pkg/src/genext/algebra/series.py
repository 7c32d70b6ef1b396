"""
Exact integer polynomials in t, used as Hilbert series.

Arithmetic runs in sympy's sparse polynomial ring ZZ[t]; truncated products and
power-series inverses go through ``sympy.polys.ring_series``. The facade keeps
the ascending coefficient tuple with trailing zeros stripped for indexing,
comparison and rendering; the empty tuple is the zero series.
"""

from collections.abc import Iterable, Sequence
from itertools import zip_longest

from sympy.polys.domains import ZZ
from sympy.polys.ring_series import rs_mul, rs_series_inversion, rs_trunc
from sympy.polys.rings import PolyElement, ring

from ..exceptions import SeriesError
from .combinatorics import binomial

_RING, _T = ring("t", ZZ)


def _to_poly(coeffs: Sequence[int]) -> PolyElement:
    return _RING.from_dict({(k,): c for k, c in enumerate(coeffs) if c})


def _from_poly(poly: PolyElement) -> "IntSeries":
    terms = {k: int(c) for (k,), c in poly.items()}
    if not terms:
        return IntSeries()
    return IntSeries(terms.get(k, 0) for k in range(max(terms) + 1))


class IntSeries:
    """Immutable integer polynomial with head and tail truncation brackets."""

    __slots__ = ("_coeffs", "_poly")

    def __init__(self, coeffs: Iterable[int] = ()):
        values = [int(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self._coeffs: tuple[int, ...] = tuple(values)
        self._poly: PolyElement | None = None

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls) -> "IntSeries":
        return cls()

    @classmethod
    def one(cls) -> "IntSeries":
        return cls((1,))

    @classmethod
    def monomial(cls, k: int, coefficient: int = 1) -> "IntSeries":
        """coefficient * t^k."""
        if k < 0:
            raise SeriesError("non-polynomial shift")
        return cls([0] * k + [coefficient])

    @classmethod
    def binom_pow(cls, n: int) -> "IntSeries":
        """(1 + t)^n."""
        if n < 0:
            raise SeriesError(f"negative exponent {n}")
        return cls(binomial(n, k) for k in range(n + 1))

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> "IntSeries":
        """Build from a {degree: coefficient} mapping."""
        if not terms:
            return cls()
        if min(terms) < 0:
            raise SeriesError("non-polynomial shift")
        values = [0] * (max(terms) + 1)
        for k, c in terms.items():
            values[k] += c
        return cls(values)

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def poly(self) -> PolyElement:
        """The series as an element of ZZ[t]."""
        if self._poly is None:
            self._poly = _to_poly(self._coeffs)
        return self._poly

    @property
    def degree(self) -> int:
        """Degree of the polynomial, -1 for the zero series."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return 0

    def to_list(self) -> list[int]:
        return list(self._coeffs)

    def order(self) -> int:
        """Smallest degree carrying a nonzero coefficient."""
        for k, c in enumerate(self._coeffs):
            if c:
                return k
        raise SeriesError("order undefined")

    # ------------------------------------------------------------------
    # ring operations
    # ------------------------------------------------------------------

    def __add__(self, other: "IntSeries") -> "IntSeries":
        return _from_poly(self.poly + other.poly)

    def __sub__(self, other: "IntSeries") -> "IntSeries":
        return _from_poly(self.poly - other.poly)

    def __neg__(self) -> "IntSeries":
        return _from_poly(-self.poly)

    def __mul__(self, other: "IntSeries | int") -> "IntSeries":
        if isinstance(other, int):
            return _from_poly(self.poly * other)
        return _from_poly(self.poly * other.poly)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "IntSeries":
        if exponent < 0:
            raise SeriesError(f"negative exponent {exponent}")
        return _from_poly(self.poly**exponent)

    def mul_trunc(self, other: "IntSeries", cap: int) -> "IntSeries":
        """Product modulo t^(cap+1)."""
        if cap < 0:
            return IntSeries()
        return _from_poly(rs_mul(self.poly, other.poly, _T, cap + 1))

    def shift(self, k: int) -> "IntSeries":
        """Multiply by t^k; a negative k must not push a nonzero term below t^0."""
        if self.is_zero():
            return self
        if k >= 0:
            return _from_poly(self.poly * _T**k)
        if self.order() < -k:
            raise SeriesError("non-polynomial shift")
        return IntSeries(self._coeffs[-k:])

    def truncate(self, cap: int) -> "IntSeries":
        """Drop every term of degree above ``cap``."""
        if cap < 0:
            return IntSeries()
        return _from_poly(rs_trunc(self.poly, _T, cap + 1))

    def divmod(self, divisor: "IntSeries") -> tuple["IntSeries", "IntSeries"]:
        """Euclidean division by a divisor with leading coefficient ±1."""
        if divisor.is_zero():
            raise SeriesError("division by the zero series")
        if divisor._coeffs[-1] not in (1, -1):
            raise SeriesError("divisor must have leading coefficient ±1")
        quotient, remainder = self.poly.div(divisor.poly)
        return _from_poly(quotient), _from_poly(remainder)

    def inverse(self, cap: int) -> "IntSeries":
        """Power-series inverse modulo t^(cap+1); needs a constant term of ±1."""
        c0 = self[0]
        if c0 not in (1, -1):
            raise SeriesError("power-series inverse needs constant term ±1")
        if c0 == -1:
            return -((-self).inverse(cap))
        return _from_poly(rs_series_inversion(self.poly, _T, cap + 1))

    # ------------------------------------------------------------------
    # order, max and the truncation brackets
    # ------------------------------------------------------------------

    def geq(self, other: "IntSeries") -> bool:
        """Coefficientwise f >= g, missing coefficients read as 0."""
        return all(a >= b for a, b in zip_longest(self._coeffs, other._coeffs, fillvalue=0))

    def coeff_max(self, other: "IntSeries") -> "IntSeries":
        pairs = zip_longest(self._coeffs, other._coeffs, fillvalue=0)
        return IntSeries(max(a, b) for a, b in pairs)

    def coeff_min(self, other: "IntSeries") -> "IntSeries":
        pairs = zip_longest(self._coeffs, other._coeffs, fillvalue=0)
        return IntSeries(min(a, b) for a, b in pairs)

    def head_truncate(self) -> "IntSeries":
        """⟨f⟩: keep the initial run of strictly positive coefficients."""
        end = next((k for k, c in enumerate(self._coeffs) if c <= 0), len(self._coeffs))
        return _from_poly(rs_trunc(self.poly, _T, end))

    def tail_truncate(self) -> "IntSeries":
        """⟩f⟨: keep the final run of strictly positive coefficients, up to the degree."""
        start = len(self._coeffs)
        while start > 0 and self._coeffs[start - 1] > 0:
            start -= 1
        return _from_poly(self.poly - rs_trunc(self.poly, _T, start))

    # ------------------------------------------------------------------
    # dunder plumbing and rendering
    # ------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"IntSeries({list(self._coeffs)})"

    def __str__(self) -> str:
        return self.render()

    def render(self) -> str:
        """Descending human form, e.g. ``5t^2+4t+1``; zero renders as ``0``."""
        parts: list[str] = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "t" if k == 1 else f"t^{k}"
                body = power if mag == 1 else f"{mag}{power}"
            parts.append(f"{sign}{body}")
        if not parts:
            return "0"
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text


def coeffwise_min(series: Sequence[IntSeries]) -> IntSeries:
    """Coefficientwise minimum of a nonempty list."""
    if not series:
        raise SeriesError("minimum of an empty list")
    out = series[0]
    for s in series[1:]:
        out = out.coeff_min(s)
    return out
