"""Truncated formal power series in q^(1/24) over exact scalars.

Exponents are always tracked in grade-24 units: the stored exponent e
stands for q^(e/24), so integer powers of q live at multiples of 24.
Truncation is data carried by every series: coefficients at exponents
at or beyond `trunc` are unknown (not zero), and every operation
computes the exact truncation it can honestly guarantee.

The same engine runs over int, Fraction and NumberFieldElement
coefficients; nothing here ever touches floating point.
"""

from fractions import Fraction

from .etaq import EtaQuotient

GRADE = 24


class QSeries:
    """A series sum_{e >= val} c_e q^(e/24), known for e < trunc.

    The all-zero representation uses val == trunc with no stored
    coefficients; otherwise the coefficient at val is nonzero.
    """

    __slots__ = ("val", "coeffs", "trunc")

    def __init__(self, val: int, coeffs, trunc: int):
        coeffs = list(coeffs)
        # strip leading zeros (they are known zeros below the valuation)
        i = 0
        while i < len(coeffs) and not coeffs[i]:
            i += 1
        if i:
            val += i
            coeffs = coeffs[i:]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        if not coeffs:
            val = trunc
        if len(coeffs) > trunc - val:
            raise ValueError("coefficients extend past the truncation")
        if trunc < val:
            raise ValueError("truncation below valuation")
        self.val = val
        self.coeffs = tuple(coeffs)
        self.trunc = trunc

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, trunc: int) -> "QSeries":
        return cls(trunc, (), trunc)

    @classmethod
    def constant(cls, c, trunc: int) -> "QSeries":
        return cls(0, (c,), trunc)

    @classmethod
    def monomial(cls, c, e: int, trunc: int) -> "QSeries":
        return cls(e, (c,), trunc)

    @classmethod
    def from_terms(cls, terms, trunc: int) -> "QSeries":
        """terms: iterable of (grade-24 exponent, coefficient)."""
        terms = sorted((e, c) for e, c in terms if c)
        if not terms:
            return cls.zero(trunc)
        val = terms[0][0]
        coeffs = [0] * (terms[-1][0] - val + 1)
        for e, c in terms:
            coeffs[e - val] = coeffs[e - val] + c
        return cls(val, coeffs, trunc)

    # -- coefficient access -------------------------------------------

    def coeff(self, e: int):
        """Coefficient at grade-24 exponent e; errors past the truncation."""
        if e >= self.trunc:
            raise IndexError("exponent %d at or beyond truncation %d" % (e, self.trunc))
        if e < self.val or e >= self.val + len(self.coeffs):
            return 0
        return self.coeffs[e - self.val]

    def qcoeff(self, n: int):
        """Coefficient of q^n (integer exponent)."""
        return self.coeff(GRADE * n)

    def qprecision(self) -> int:
        """Largest P such that all of q^0 .. q^(P-1) are known."""
        return (self.trunc + GRADE - 1) // GRADE

    def terms(self):
        """Nonzero (grade-24 exponent, coefficient) pairs in order."""
        for i, c in enumerate(self.coeffs):
            if c:
                yield self.val + i, c

    def is_integer_q(self) -> bool:
        """True when valuation and all nonzero exponents sit at multiples of 24."""
        if not self.coeffs:
            return self.val % GRADE == 0
        return self.val % GRADE == 0 and all(e % GRADE == 0 for e, _ in self.terms())

    def is_zero(self) -> bool:
        return not self.coeffs

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        trunc = min(self.trunc, other.trunc)
        lo = min(self.val, other.val, trunc)
        out = [0] * (trunc - lo)
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                e = s.val + i
                if e < trunc and c:
                    out[e - lo] = out[e - lo] + c
        return QSeries(lo, out, trunc)

    def __neg__(self):
        return QSeries(self.val, tuple(-c for c in self.coeffs), self.trunc)

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "QSeries":
        """Multiply by one scalar."""
        if not c:
            return QSeries.zero(self.trunc)
        return QSeries(self.val, tuple(c * a for a in self.coeffs), self.trunc)

    def shift(self, e: int) -> "QSeries":
        """Multiply by q^(e/24)."""
        return QSeries(self.val + e, self.coeffs, self.trunc + e)

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        trunc = min(self.trunc + other.val, other.trunc + self.val)
        if self.is_zero() or other.is_zero():
            vz = self.val + other.val
            return QSeries.zero(trunc) if trunc <= vz else QSeries(vz, (), trunc)
        val = self.val + other.val
        n = trunc - val
        if n <= 0:
            return QSeries(trunc, (), trunc)
        out = [0] * n
        # iterate nonzeros of the sparser factor
        f, g = (self, other) if _nnz(self) <= _nnz(other) else (other, self)
        glen = len(g.coeffs)
        for i, a in enumerate(f.coeffs):
            if not a:
                continue
            base = i  # exponent offset relative to val
            top = min(glen, n - base)
            for j in range(top):
                b = g.coeffs[j]
                if b:
                    out[base + j] = out[base + j] + a * b
        return QSeries(val, out, trunc)

    def inverse(self) -> "QSeries":
        """Exact series inverse; leading coefficient must be invertible."""
        if self.is_zero():
            raise ZeroDivisionError("cannot invert a series with no known nonzero term")
        c0 = self.coeffs[0]
        n = self.trunc - self.val  # relative precision of the unit part
        if isinstance(c0, int):
            if c0 in (1, -1):
                inv0 = c0
            else:
                inv0 = Fraction(1, c0)
        else:
            inv0 = 1 / c0
        out = [0] * n
        out[0] = inv0
        a = self.coeffs
        alen = len(a)
        for k in range(1, n):
            acc = 0
            for j in range(1, min(k, alen - 1) + 1):
                if a[j] and out[k - j]:
                    acc = acc + a[j] * out[k - j]
            if acc:
                out[k] = -(inv0 * acc) if inv0 != 1 else -acc
        return QSeries(-self.val, out, self.trunc - 2 * self.val)

    def __pow__(self, e: int):
        if not isinstance(e, int):
            raise TypeError("series powers must be integers")
        if e == 0:
            return QSeries.constant(1, max(self.trunc - self.val, 1))
        base = self if e > 0 else self.inverse()
        e = abs(e)
        out = None
        while e:
            if e & 1:
                out = base if out is None else out * base
            e >>= 1
            if e:
                base = base * base
        return out

    # -- comparison helpers ---------------------------------------------

    def agrees_with(self, other: "QSeries", through: int | None = None) -> bool:
        """Coefficient equality on the commonly known range.

        `through` (grade-24, exclusive) caps the range; defaults to the
        smaller truncation.
        """
        bound = min(self.trunc, other.trunc)
        if through is not None:
            bound = min(bound, through)
        lo = min(self.val, other.val, bound)
        for e in range(lo, bound):
            a = self.coeff(e) if e >= self.val else 0
            b = other.coeff(e) if e >= other.val else 0
            if a != b:
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            self.val == other.val
            and self.trunc == other.trunc
            and len(self.coeffs) == len(other.coeffs)
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __hash__(self):
        return hash((self.val, self.trunc, self.coeffs))

    def __repr__(self):
        head = ", ".join(
            "q^(%d/24)*%r" % (e, c) for e, c in list(self.terms())[:4]
        )
        return "QSeries(%s%s; trunc=%d)" % (head, "..." if _nnz(self) > 4 else "", self.trunc)


def _nnz(f: QSeries) -> int:
    return sum(1 for c in f.coeffs if c)


def series_add(f: QSeries, g: QSeries) -> QSeries:
    return f + g


def series_mul(f: QSeries, g: QSeries) -> QSeries:
    return f * g


def series_pow(f: QSeries, e: int) -> QSeries:
    return f**e


# ---------------------------------------------------------------------------
# integer polynomial kernel (plain q exponents, dense int lists)
# ---------------------------------------------------------------------------

def _poly_mul_trunc(a, b, L):
    """(a * b) mod q^L for dense int coefficient lists."""
    if len(a) > len(b):
        a, b = b, a
    out = [0] * min(L, len(a) + len(b) - 1)
    n = len(out)
    for i, x in enumerate(a):
        if not x or i >= n:
            continue
        top = min(len(b), n - i)
        for j in range(top):
            y = b[j]
            if y:
                out[i + j] += x * y
    return out


def _poly_inverse_trunc(a, L):
    """1/a mod q^L; requires a[0] in {1, -1} (integer-exact branch)."""
    c0 = a[0]
    if c0 not in (1, -1):
        raise ValueError("integer series inversion needs unit leading coefficient")
    out = [0] * L
    out[0] = c0
    for k in range(1, L):
        acc = 0
        for j in range(1, min(k, len(a) - 1) + 1):
            if a[j] and out[k - j]:
                acc += a[j] * out[k - j]
        if acc:
            out[k] = -acc * c0
    return out


def _poly_pow_trunc(a, e, L):
    """a^e mod q^L over the integers; negative e allowed for unit a[0]."""
    if e < 0:
        a = _poly_inverse_trunc(a, L)
        e = -e
    out = None
    base = a[:L]
    while e:
        if e & 1:
            out = base[:] if out is None else _poly_mul_trunc(out, base, L)
        e >>= 1
        if e:
            base = _poly_mul_trunc(base, base, L)
    if out is None:
        out = [1]
    if len(out) < L:
        out = out + [0] * (L - len(out))
    return out


def euler_coeffs(L: int):
    """prod_{n>=1} (1 - q^n) mod q^L by the pentagonal number theorem."""
    out = [0] * L
    if L > 0:
        out[0] = 1
    m = 1
    while True:
        g1 = m * (3 * m - 1) // 2
        g2 = m * (3 * m + 1) // 2
        if g1 >= L and g2 >= L:
            break
        s = 1 if m % 2 == 0 else -1
        if g1 < L:
            out[g1] = s
        if g2 < L:
            out[g2] = s
        m += 1
    return out


_EULER_POW_CACHE: dict[int, list] = {}


def euler_power(e: int, L: int):
    """prod (1 - q^n)^e mod q^L, cached per exponent."""
    cached = _EULER_POW_CACHE.get(e)
    if cached is not None and len(cached) >= L:
        return cached[:L]
    out = _poly_pow_trunc(euler_coeffs(L), e, L)
    _EULER_POW_CACHE[e] = out
    return out[:L]


def eta_unit_coeffs(exponents_by_divisor, L: int):
    """Unit part of an eta quotient in integer-q steps.

    exponents_by_divisor: iterable of (delta, r_delta); returns the dense
    int coefficient list of prod_delta (prod_n (1 - q^(delta n)))^{r_delta}
    mod q^L.
    """
    out = [1] + [0] * (L - 1)
    for delta, r in exponents_by_divisor:
        if not r:
            continue
        need = (L + delta - 1) // delta
        p = euler_power(r, need)
        # inflate q -> q^delta
        factor = [0] * min(L, (need - 1) * delta + 1)
        for j, c in enumerate(p):
            if c and j * delta < L:
                factor[j * delta] = c
        out = _poly_mul_trunc(out, factor, L)
        if len(out) < L:
            out += [0] * (L - len(out))
    return out


# ---------------------------------------------------------------------------
# eta expansions
# ---------------------------------------------------------------------------

def eta_expansion(delta: int, precision: int) -> QSeries:
    """q^(delta/24) prod_{n>=1} (1 - q^(delta n)), truncated at grade-24
    exponent `precision` (exclusive)."""
    if delta < 1:
        raise ValueError("delta must be a positive integer")
    if precision <= delta:
        raise ValueError("precision must exceed the valuation delta")
    L = (precision - delta + GRADE * delta - 1) // (GRADE * delta)
    pent = euler_coeffs(L)
    coeffs = [0] * (precision - delta)
    for j, c in enumerate(pent):
        e = GRADE * delta * j
        if c and e < len(coeffs):
            coeffs[e] = c
    return QSeries(delta, coeffs, precision)


def eta_quotient_expansion(f: EtaQuotient, precision: int) -> QSeries:
    """Expansion of prod eta^{r_delta}(delta z) to grade-24 exponent
    `precision` (exclusive); valuation is sum(delta * r_delta)."""
    val = sum(d * r for d, r in f.items())
    if precision <= val:
        raise ValueError("precision %d does not exceed the valuation %d" % (precision, val))
    L = (precision - val + GRADE - 1) // GRADE
    unit = eta_unit_coeffs(f.items(), L)
    coeffs = [0] * (precision - val)
    for j, c in enumerate(unit):
        if c and GRADE * j < len(coeffs):
            coeffs[GRADE * j] = c
    return QSeries(val, coeffs, precision)
