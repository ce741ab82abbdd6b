"""Exact ground fields: the rationals, prime fields and simple extensions.

Elements are plain Python values so that hot loops can bind the field
operations locally:

* ``QQ``            -- :class:`fractions.Fraction`
* ``GF(p)``         -- ``int`` in ``range(p)``
* ``base[t]/(m)``   -- ``tuple`` of ``d`` base-field elements (coefficients of
  ``1, t, ..., t^(d-1)``)

A field object (the *handle*) carries the arithmetic.  Handles are immutable
and compare equal when they describe the same field.
"""

from __future__ import annotations

import itertools
import math
import re
from fractions import Fraction
from functools import lru_cache

from .errors import (
    BadParams,
    FieldDivisionByZero,
    FieldMismatch,
    NotExtensionField,
    NotPrime,
    ReducibleModulus,
    ReducibleModulusUnknown,
    UnsupportedTower,
)

__all__ = [
    "Field",
    "RationalField",
    "PrimeField",
    "ExtensionField",
    "QQ",
    "GF",
    "make_field",
    "parse_field",
    "is_prime",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    r = math.isqrt(n)
    f = 3
    while f <= r:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """Common interface; subclasses fill in the arithmetic."""

    kind: str = ""
    characteristic: int = 0
    order: int | None = None  # None for infinite fields
    degree: int = 1  # degree over the prime field / QQ

    zero = None
    one = None

    @property
    def is_finite(self) -> bool:
        return self.order is not None

    # arithmetic ---------------------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def power(self, a, e: int):
        if e < 0:
            return self.power(self.inv(a), -e)
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def arith(self, a, b, op: str):
        """Dispatch by operator name: ``add``, ``sub``, ``mul`` or ``div``."""
        self.check(a)
        self.check(b)
        try:
            fn = {"add": self.add, "sub": self.sub, "mul": self.mul, "div": self.div}[op]
        except KeyError:
            raise BadParams(f"unknown operation {op!r}") from None
        return fn(a, b)

    # conversion ---------------------------------------------------------
    def from_int(self, n: int):
        raise NotImplementedError

    def coerce(self, x):
        """Accept ints, Fractions and canonical elements."""
        raise NotImplementedError

    def check(self, a):
        """Raise FieldMismatch unless ``a`` is a canonical element."""
        if not self.contains(a):
            raise FieldMismatch(f"{a!r} is not an element of {self}")

    def contains(self, a) -> bool:
        raise NotImplementedError

    def parse(self, s: str):
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError

    def random(self, rng):
        raise NotImplementedError

    def elements(self):
        """Iterate over all elements (finite fields only)."""
        raise FieldMismatch(f"{self} is infinite")

    def distinct_elements(self, count: int) -> list:
        """``count`` distinct elements in a fixed order; 0 and 1 come first."""
        if self.order is not None and count > self.order:
            raise BadParams(f"{self} has fewer than {count} elements")
        out = []
        if self.order is None:
            return [self.from_int(i) for i in range(count)]
        for x in self.elements():
            if len(out) == count:
                break
            out.append(x)
        return out

    def desc(self) -> dict:
        raise NotImplementedError

    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())


class RationalField(Field):
    kind = "rational"
    characteristic = 0
    order = None

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise FieldDivisionByZero("division by zero in QQ")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise FieldDivisionByZero("division by zero in QQ")
        return a / b

    def from_int(self, n):
        return Fraction(n)

    def coerce(self, x):
        if isinstance(x, str):
            return self.parse(x)
        return Fraction(x)

    def contains(self, a):
        return isinstance(a, Fraction)

    def parse(self, s):
        s = str(s).strip()
        if not re.fullmatch(r"[+-]?\d+(/\d+)?", s):
            raise BadParams(f"bad rational literal {s!r}")
        value = Fraction(s)
        return value

    def format(self, a):
        return str(a)

    def random(self, rng, bound: int = 5):
        return Fraction(rng.randint(-bound, bound), rng.randint(1, 3))

    def desc(self):
        return {"kind": "rational"}

    def _key(self):
        return ("rational",)

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    kind = "prime"

    def __init__(self, p: int):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise FieldDivisionByZero(f"division by zero in GF({self.p})")
        return pow(a, -1, self.p)

    def from_int(self, n):
        return n % self.p

    def coerce(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            return x.numerator * self.inv(x.denominator % self.p) % self.p
        return int(x) % self.p

    def contains(self, a):
        return isinstance(a, int) and not isinstance(a, bool) and 0 <= a < self.p

    def parse(self, s):
        s = str(s).strip()
        if not re.fullmatch(r"[+-]?\d+", s):
            raise BadParams(f"bad GF({self.p}) literal {s!r}")
        return int(s) % self.p

    def format(self, a):
        return str(a)

    def random(self, rng):
        return rng.randrange(self.p)

    def elements(self):
        return iter(range(self.p))

    def desc(self):
        return {"kind": "prime", "p": self.p}

    def _key(self):
        return ("prime", self.p)

    def __repr__(self):
        return f"GF({self.p})"


# polynomial helpers over a base field; coefficient lists, lowest degree first


def _trim(f, F):
    f = list(f)
    while f and F.is_zero(f[-1]):
        f.pop()
    return f


def _poly_mul(f, g, F):
    if not f or not g:
        return []
    out = [F.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if F.is_zero(a):
            continue
        for j, b in enumerate(g):
            out[i + j] = F.add(out[i + j], F.mul(a, b))
    return _trim(out, F)


def _poly_divmod(f, g, F):
    f = _trim(f, F)
    g = _trim(g, F)
    if not g:
        raise FieldDivisionByZero("polynomial division by zero")
    q = [F.zero] * max(len(f) - len(g) + 1, 0)
    inv_lead = F.inv(g[-1])
    r = list(f)
    while len(r) >= len(g):
        c = F.mul(r[-1], inv_lead)
        shift = len(r) - len(g)
        q[shift] = c
        for i, b in enumerate(g):
            r[shift + i] = F.sub(r[shift + i], F.mul(c, b))
        r = _trim(r, F)
    return _trim(q, F), r


def _poly_sub(f, g, F):
    n = max(len(f), len(g))
    f = list(f) + [F.zero] * (n - len(f))
    g = list(g) + [F.zero] * (n - len(g))
    return _trim([F.sub(a, b) for a, b in zip(f, g)], F)


def _poly_gcd(f, g, F):
    f, g = _trim(f, F), _trim(g, F)
    while g:
        f, g = g, _poly_divmod(f, g, F)[1]
    if f:
        lead = F.inv(f[-1])
        f = [F.mul(c, lead) for c in f]
    return f


def _poly_powmod(f, e, m, F):
    result = [F.one]
    base = _poly_divmod(f, m, F)[1]
    while e:
        if e & 1:
            result = _poly_divmod(_poly_mul(result, base, F), m, F)[1]
        base = _poly_divmod(_poly_mul(base, base, F), m, F)[1]
        e >>= 1
    return result


def _irreducible_mod_p(modulus, F: PrimeField) -> bool:
    # Ben-Or: no irreducible factor of degree <= d/2
    d = len(modulus) - 1
    x = [F.zero, F.one]
    xp = x
    for _ in range(d // 2):
        xp = _poly_powmod(xp, F.p, modulus, F)
        if len(_poly_gcd(_poly_sub(xp, x, F), modulus, F)) > 1:
            return False
    return True


def _rational_roots_exist(modulus) -> bool:
    den = 1
    for c in modulus:
        den = den * c.denominator // math.gcd(den, c.denominator)
    coeffs = [int(c * den) for c in modulus]
    if coeffs[0] == 0:
        return True
    a0, an = abs(coeffs[0]), abs(coeffs[-1])

    def divisors(n):
        return [k for k in range(1, n + 1) if n % k == 0]

    for num in divisors(a0):
        for den_ in divisors(an):
            for sign in (1, -1):
                r = Fraction(sign * num, den_)
                if sum(c * r**i for i, c in enumerate(coeffs)) == 0:
                    return True
    return False


def _irreducible_over_q(modulus) -> bool:
    d = len(modulus) - 1
    if d <= 3:
        return not _rational_roots_exist(modulus)
    try:
        import sympy
    except ImportError:  # pragma: no cover - sympy is a declared dependency
        raise ReducibleModulusUnknown("no factoring backend for degree >= 4") from None
    t = sympy.Symbol("t")
    poly = sympy.Poly(
        [sympy.Rational(c.numerator, c.denominator) for c in reversed(modulus)], t, domain="QQ"
    )
    return bool(poly.is_irreducible)


class ExtensionField(Field):
    """``base[t] / (modulus)`` with ``modulus`` monic and irreducible."""

    kind = "extension"

    def __init__(self, base: Field, modulus):
        if isinstance(base, ExtensionField):
            raise UnsupportedTower("extension towers are not supported")
        modulus = [base.coerce(c) for c in modulus]
        modulus = _trim(modulus, base)
        d = len(modulus) - 1
        if d < 2:
            raise BadParams("extension modulus must have degree >= 2")
        if modulus[-1] != base.one:
            raise BadParams("extension modulus must be monic")
        if isinstance(base, PrimeField):
            ok = _irreducible_mod_p(modulus, base)
        else:
            ok = _irreducible_over_q(modulus)
        if not ok:
            raise ReducibleModulus(f"modulus {modulus} is reducible over {base}")
        self.base = base
        self.modulus = tuple(modulus)
        self.d = d
        self.degree = d
        self.characteristic = base.characteristic
        self.order = None if base.order is None else base.order**d
        self.zero = tuple([base.zero] * d)
        self.one = tuple([base.one] + [base.zero] * (d - 1))
        self.theta = tuple([base.zero, base.one] + [base.zero] * (d - 2))
        # t^k mod m for k < 2d - 1, used by multiplication
        self._powers = self._reduction_table()

    def _reduction_table(self):
        B, d = self.base, self.d
        table = []
        cur = list(self.one)
        for _ in range(2 * d - 1):
            table.append(tuple(cur))
            # multiply by t
            top = cur[-1]
            shifted = [B.zero] + cur[:-1]
            cur = [B.sub(shifted[i], B.mul(top, self.modulus[i])) for i in range(d)]
        return table

    def add(self, a, b):
        add = self.base.add
        return tuple(add(x, y) for x, y in zip(a, b))

    def sub(self, a, b):
        sub = self.base.sub
        return tuple(sub(x, y) for x, y in zip(a, b))

    def neg(self, a):
        neg = self.base.neg
        return tuple(neg(x) for x in a)

    def mul(self, a, b):
        B, d = self.base, self.d
        badd, bmul, zero = B.add, B.mul, B.zero
        prod = [zero] * (2 * d - 1)
        for i, x in enumerate(a):
            if x == zero:
                continue
            for j, y in enumerate(b):
                if y == zero:
                    continue
                prod[i + j] = badd(prod[i + j], bmul(x, y))
        out = list(prod[:d])
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c == zero:
                continue
            row = self._powers[k]
            for i in range(d):
                out[i] = badd(out[i], bmul(c, row[i]))
        return tuple(out)

    def inv(self, a):
        B = self.base
        f = _trim(a, B)
        if not f:
            raise FieldDivisionByZero(f"division by zero in {self}")
        # extended Euclid: s*f + t*m = 1
        r0, r1 = list(self.modulus), f
        s0, s1 = [], [B.one]
        while r1:
            q, r = _poly_divmod(r0, r1, B)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1, B), B)
        # r0 is a nonzero constant, s0 * f = r0 mod m
        c = B.inv(r0[0])
        s = [B.mul(c, x) for x in s0]
        s = _poly_divmod(s, self.modulus, B)[1]
        return tuple(s + [B.zero] * (self.d - len(s)))

    def from_int(self, n):
        return self.from_base(self.base.from_int(n))

    def from_base(self, b):
        return tuple([b] + [self.base.zero] * (self.d - 1))

    def coerce(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, (tuple, list)):
            if len(x) != self.d:
                raise FieldMismatch(f"expected {self.d} coordinates")
            return tuple(self.base.coerce(c) for c in x)
        return self.from_base(self.base.coerce(x))

    def contains(self, a):
        return (
            isinstance(a, tuple)
            and len(a) == self.d
            and all(self.base.contains(c) for c in a)
        )

    def parse(self, s):
        s = str(s).strip()
        if s.startswith("["):
            if not s.endswith("]"):
                raise BadParams(f"bad extension literal {s!r}")
            parts = [p for p in s[1:-1].split(",")]
            if len(parts) != self.d:
                raise BadParams(f"extension literal {s!r} needs {self.d} coordinates")
            return tuple(self.base.parse(p) for p in parts)
        return self.from_base(self.base.parse(s))

    def format(self, a):
        return "[" + ",".join(self.base.format(c) for c in a) + "]"

    def random(self, rng):
        return tuple(self.base.random(rng) for _ in range(self.d))

    def elements(self):
        if self.order is None:
            raise FieldMismatch(f"{self} is infinite")
        for coords in itertools.product(range(self.base.order), repeat=self.d):
            yield tuple(reversed(coords))

    def distinct_elements(self, count):
        if self.order is None:
            B = self.base
            return [self.from_base(B.from_int(i)) for i in range(count)]
        return super().distinct_elements(count)

    # base-field structure ----------------------------------------------
    def prime_coordinates(self, x):
        """Coordinates of ``x`` in the basis ``1, t, ..., t^(d-1)`` over the base."""
        return tuple(x)

    def from_coordinates(self, coords):
        return tuple(coords)

    def scalar_action_matrix(self, x):
        """d x d base-field matrix of ``y -> x*y``; column ``t`` holds ``x*t^t``."""
        cols = [self.mul(x, self._basis(t)) for t in range(self.d)]
        return [[cols[t][i] for t in range(self.d)] for i in range(self.d)]

    def _basis(self, t):
        B = self.base
        return tuple(B.one if i == t else B.zero for i in range(self.d))

    def trace(self, x):
        """Field trace down to the base: trace of the scalar action matrix."""
        M = self.scalar_action_matrix(x)
        B = self.base
        acc = B.zero
        for i in range(self.d):
            acc = B.add(acc, M[i][i])
        return acc

    def default_trace_map(self):
        """Values on the basis ``t^0..t^(d-1)`` of the default nonzero base-linear map.

        Finite fields use the field trace; extensions of QQ project onto the
        constant coefficient.
        """
        B = self.base
        if self.base.order is not None:
            vals = tuple(self.trace(self._basis(t)) for t in range(self.d))
            if all(B.is_zero(v) for v in vals):  # pragma: no cover - separable extensions
                raise NotExtensionField("field trace vanishes")
            return vals
        return tuple(B.one if t == 0 else B.zero for t in range(self.d))

    def desc(self):
        return {
            "kind": "extension",
            "base": self.base.desc(),
            "modulus": [self.base.format(c) for c in self.modulus],
        }

    def _key(self):
        return ("extension", self.base._key(), self.modulus)

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.modulus):
            if self.base.is_zero(c):
                continue
            mono = "1" if i == 0 else ("t" if i == 1 else f"t^{i}")
            coef = self.base.format(c)
            terms.append(mono if coef == "1" and i else (coef if i == 0 else f"{coef}*{mono}"))
        return f"{self.base!r}[t]/({' + '.join(reversed(terms))})"


QQ = RationalField()


def _first_irreducible(base: PrimeField, e: int):
    for tail in itertools.product(range(base.p), repeat=e):
        modulus = list(reversed(tail)) + [1]
        if modulus[0] == 0:
            continue
        if _irreducible_mod_p(modulus, base):
            return modulus
    raise BadParams(f"no irreducible polynomial of degree {e} over {base}")  # pragma: no cover


@lru_cache(maxsize=None)
def GF(p: int, e: int = 1) -> Field:
    """Finite field of order ``p**e``; extensions use the first irreducible modulus."""
    base = PrimeField(p)
    if e == 1:
        return base
    return ExtensionField(base, _first_irreducible(base, e))


def make_field(desc) -> Field:
    """Build a field handle from a descriptor dict (see :meth:`Field.desc`)."""
    if isinstance(desc, Field):
        return desc
    if isinstance(desc, str):
        return parse_field(desc)
    kind = desc.get("kind")
    if kind == "rational":
        return QQ
    if kind == "prime":
        return PrimeField(int(desc["p"]))
    if kind == "extension":
        base = make_field(desc["base"])
        if isinstance(base, ExtensionField):
            raise UnsupportedTower("extension towers are not supported")
        return ExtensionField(base, [base.parse(str(c)) for c in desc["modulus"]])
    raise BadParams(f"unknown field kind {kind!r}")


def parse_field(text: str) -> Field:
    """Parse ``QQ``, ``GF(7)``, ``GF(49)`` or ``GF(7)[t]/(1,0,1)`` / ``QQ[t]/(1,0,1)``."""
    s = text.replace(" ", "")
    m = re.fullmatch(r"(QQ|Q|GF\(\d+\))\[t\]/\(([^)]*)\)", s)
    if m:
        base = parse_field(m.group(1))
        return ExtensionField(base, [base.parse(c) for c in m.group(2).split(",")])
    if s in ("QQ", "Q"):
        return QQ
    m = re.fullmatch(r"GF\((\d+)\)", s) or re.fullmatch(r"F(\d+)", s)
    if m:
        q = int(m.group(1))
        if q < 2:
            raise NotPrime(f"{q} is not a prime power")
        for p in range(2, q + 1):
            if q % p == 0:
                break
        e = 0
        r = q
        while r % p == 0:
            r //= p
            e += 1
        if r != 1:
            raise NotPrime(f"{q} is not a prime power")
        return GF(p, e)
    raise BadParams(f"cannot parse field {text!r}")
