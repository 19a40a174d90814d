"""Kronecker-symbol characters, generalized Bernoulli numbers, twisted sums.

Only the real characters chi_t for the eight quadratic discriminants

    t in {1, -3, -4, 8, -8, 12, 24, -24}

are supported; these are exactly the primitive characters of conductor
dividing 24 (plus the trivial one), and everything downstream lives on
Gamma_0(24).
"""

from fractions import Fraction
from functools import lru_cache

# discriminant -> conductor
CONDUCTOR = {1: 1, -3: 3, -4: 4, 8: 8, -8: 8, 12: 12, 24: 24, -24: 24}

KNOWN_DISCRIMINANTS = tuple(sorted(CONDUCTOR))


def kronecker(t: int, n: int) -> int:
    """Kronecker symbol (t/n), extended to all integer pairs.

    Conventions: (t/0) = 1 iff t = +-1 else 0; (t/-1) = -1 iff t < 0;
    (t/2) = 0, 1, -1 for t even, t = +-1 mod 8, t = +-3 mod 8.
    """
    if n == 0:
        return 1 if t in (1, -1) else 0
    k = 1
    if n < 0:
        n = -n
        if t < 0:
            k = -k
    if n % 2 == 0:
        if t % 2 == 0:
            return 0
        # strip factors of 2, each contributing (t/2)
        twos = 0
        while n % 2 == 0:
            n //= 2
            twos += 1
        if twos % 2 == 1 and t % 8 in (3, 5):
            k = -k
    # now n odd positive: Jacobi symbol (t/n) by reciprocity
    t %= n
    while t:
        while t % 2 == 0:
            t //= 2
            if n % 8 in (3, 5):
                k = -k
        t, n = n, t
        if t % 4 == 3 and n % 4 == 3:
            k = -k
        t %= n
    return k if n == 1 else 0


class DirichletChar:
    """Real character chi_t(n) = (t/n) for a quadratic discriminant t."""

    __slots__ = ("discriminant", "conductor")

    def __init__(self, discriminant: int):
        if discriminant not in CONDUCTOR:
            raise ValueError("unsupported discriminant %r" % (discriminant,))
        self.discriminant = discriminant
        self.conductor = CONDUCTOR[discriminant]

    def __call__(self, n: int) -> int:
        return kronecker(self.discriminant, n)

    def is_odd(self) -> bool:
        return self(-1) == -1

    def __eq__(self, other):
        return isinstance(other, DirichletChar) and self.discriminant == other.discriminant

    def __hash__(self):
        return hash(self.discriminant)

    def __repr__(self):
        return "chi(%d)" % self.discriminant


@lru_cache(maxsize=None)
def chi(t: int) -> DirichletChar:
    return DirichletChar(t)


def char_eval(char: DirichletChar, n: int) -> int:
    return char(n)


# row order of the reference table of all primitive characters with
# conductor dividing 24, and its evaluation columns
TABLE_ROW_ORDER = (1, -24, -4, 24, 8, -3, -8, 12)
TABLE_COLUMNS = (1, 5, 7, 11, 13, 17, 19, 23)


def character_table():
    """The 8x8 grid char_eval(chi_t, u) for the standard row/column order."""
    return tuple(
        tuple(char_eval(chi(t), u) for u in TABLE_COLUMNS) for t in TABLE_ROW_ORDER
    )


@lru_cache(maxsize=None)
def gen_bernoulli3(char: DirichletChar) -> Fraction:
    """Generalized Bernoulli number B_{3,chi}.

    Extracted as 6 [x^3] sum_{a=1..L} chi(a) x e^{ax} / (e^{Lx} - 1) by
    exact series expansion; the denominator is divided out as the unit
    series (e^{Lx} - 1)/x.
    """
    L = char.conductor
    # numerator / x = sum_a chi(a) e^{ax}, to x^3
    PREC = 4
    num = [Fraction(0)] * PREC
    for a in range(1, L + 1):
        ca = char(a)
        if ca:
            fact = 1
            for j in range(PREC):
                if j:
                    fact *= j
                num[j] += Fraction(ca * a**j, fact)
    # (e^{Lx} - 1)/x = L + L^2 x/2! + L^3 x^2/3! + ...
    fact = 1
    den = []
    for j in range(1, PREC + 1):
        fact *= j
        den.append(Fraction(L**j, fact))
    # series division num/den to x^3; den[0] = L != 0
    quot = [Fraction(0)] * PREC
    for j in range(PREC):
        acc = num[j]
        for i in range(j):
            acc -= quot[i] * den[j - i]
        quot[j] = acc / den[0]
    return 6 * quot[3]


def sigma_twisted(k: int, char: DirichletChar, psi: DirichletChar, n) -> int:
    """sum over d | n of chi(d) psi(n/d) d^k; zero off the positive integers."""
    if not isinstance(n, int) or n <= 0:
        return 0
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            e = n // d
            total += char(d) * psi(e) * d**k
            if e != d:
                total += char(e) * psi(d) * e**k
        d += 1
    return total
