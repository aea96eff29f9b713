"""
Exact arithmetic in GF(p^m).

Elements are plain integers in ``[0, q)``.  The integer ``v`` encodes the
polynomial whose coefficients are the base-``p`` digits of ``v``, least
significant digit first, reduced modulo the field's defining polynomial.
That integer is also the wire format used by every JSON file in the package.

Prime fields (``m == 1``) use modular arithmetic directly and work for any
prime ``p``; this is the path used for large sampling fields.  Extension
fields build log/antilog tables on construction, so they are meant for
desk-scale orders.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

from sympy import isprime, nextprime, perfect_power

__all__ = [
    "FieldSpec",
    "FieldElement",
    "field_new",
    "field_of_order",
    "is_prime_power",
    "prime_powers",
    "next_prime",
]

_MAX_TABLE_ORDER = 1 << 16


def next_prime(n: int) -> int:
    """Smallest prime strictly greater than ``n``."""
    return int(nextprime(n))


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    if isprime(q):
        return True
    pp = perfect_power(q)
    return bool(pp) and isprime(pp[0])


def prime_powers(lo: int, hi: int) -> list[int]:
    """All prime powers ``q`` with ``lo <= q <= hi``, ascending."""
    return [q for q in range(max(lo, 2), hi + 1) if is_prime_power(q)]


# ---------------------------------------------------------------------------
# polynomials over GF(p), little-endian coefficient lists
# ---------------------------------------------------------------------------

def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], f: list[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``f``."""
    a = _poly_trim(list(a))
    d = len(f) - 1
    while len(a) - 1 >= d:
        c = a[-1]
        shift = len(a) - 1 - d
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        _poly_trim(a)
    return a


def _is_irreducible(f: list[int], p: int) -> bool:
    # trial division by every monic polynomial of degree <= deg(f) / 2
    m = len(f) - 1
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(f, list(low) + [1], p):
                return False
    return True


def _smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    # lexicographic order on the little-endian coefficient list
    for low in itertools.product(range(p), repeat=m):
        f = list(low) + [1]
        if f[0] != 0 and _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError(f"no irreducible polynomial of degree {m} over GF({p})")


# ---------------------------------------------------------------------------
# the field
# ---------------------------------------------------------------------------

class FieldSpec:
    """The finite field GF(p^m) with elements encoded as integers.

    Use :func:`field_new` rather than calling the constructor directly; it
    validates the parameters and caches instances.

    The arithmetic methods (``add``, ``sub``, ``mul``, ``neg``, ``inv``,
    ``pow``, ``div``) take and return canonical integers.  Wrap a value with
    :meth:`element` for operator syntax.
    """

    def __init__(self, p: int, m: int = 1, modulus: tuple[int, ...] | None = None):
        self.p = p
        self.m = m
        self.modulus = modulus
        self.q = p**m
        if m == 1:
            self._setup_prime()
        else:
            self._setup_extension()

    # -- construction helpers ------------------------------------------------

    def _setup_prime(self) -> None:
        p = self.p
        self.add = lambda a, b: (a + b) % p
        self.sub = lambda a, b: (a - b) % p
        self.mul = lambda a, b: (a * b) % p
        self.neg = lambda a: (-a) % p
        self.add_table = None
        self.mul_table = None

    def _setup_extension(self) -> None:
        p, m, q = self.p, self.m, self.q
        if q > _MAX_TABLE_ORDER:
            raise ValueError(f"extension field of order {q} is beyond desk scale")
        f = list(self.modulus)

        def to_poly(v):
            out = []
            for _ in range(m):
                v, r = divmod(v, p)
                out.append(r)
            return out

        def from_poly(c):
            v = 0
            for coef in reversed(c):
                v = v * p + coef
            return v

        def poly_mul(a, b):
            prod = [0] * (2 * m - 1)
            for i, ai in enumerate(a):
                if ai:
                    for j, bj in enumerate(b):
                        prod[i + j] = (prod[i + j] + ai * bj) % p
            r = _poly_mod(prod, f, p)
            return from_poly(r + [0] * (m - len(r)))

        self._to_poly = to_poly
        self._from_poly = from_poly

        polys = [to_poly(v) for v in range(q)]
        if p == 2:
            self.add_table = None
            self.add = lambda a, b: a ^ b
            self.sub = self.add
            self.neg = lambda a: a
        else:
            add_table = [0] * (q * q)
            neg_table = [0] * q
            for a in range(q):
                pa = polys[a]
                neg_table[a] = from_poly([(-c) % p for c in pa])
                for b in range(q):
                    pb = polys[b]
                    add_table[a * q + b] = from_poly([(x + y) % p for x, y in zip(pa, pb)])
            self.add_table = add_table
            self.add = lambda a, b: add_table[a * q + b]
            self.neg = lambda a: neg_table[a]
            self.sub = lambda a, b: add_table[a * q + neg_table[b]]

        # log/antilog tables from the smallest primitive element
        for g in range(2, q):
            exp = [1]
            x = 1
            for _ in range(q - 2):
                x = poly_mul(polys[x], polys[g])
                if x == 1:
                    break
                exp.append(x)
            if len(exp) == q - 1:
                break
        else:
            raise AssertionError("no primitive element found")
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp + exp
        self._log = log
        order = q - 1
        e2 = self._exp

        def mul(a, b):
            if a == 0 or b == 0:
                return 0
            return e2[log[a] + log[b]]

        self.mul = mul
        self.mul_table = None
        self._order = order

    # -- arithmetic ------------------------------------------------------------

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.q})")
        if self.m == 1:
            return pow(a, -1, self.p)
        return self._exp[(self._order - self._log[a]) % self._order]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if self.m == 1:
            if e < 0:
                return pow(self.inv(a), -e, self.p)
            return pow(a, e, self.p)
        if e < 0:
            a, e = self.inv(a), -e
        if a == 0:
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % self._order]

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` under the ring map Z -> GF(q)."""
        return n % self.p

    # -- encoding --------------------------------------------------------------

    def encode(self, coeffs) -> int:
        """Canonical integer of a little-endian coefficient sequence."""
        coeffs = list(coeffs)
        if self.m == 1:
            if len(coeffs) > 1 and any(coeffs[1:]):
                raise ValueError("prime field elements have a single coefficient")
            return coeffs[0] % self.p if coeffs else 0
        r = _poly_mod([c % self.p for c in coeffs], list(self.modulus), self.p)
        return self._from_poly(r + [0] * (self.m - len(r)))

    def decode(self, value: int) -> list[int]:
        """Little-endian coefficient list (length ``m``) of an element."""
        self.check(value)
        out = []
        for _ in range(self.m):
            value, r = divmod(value, self.p)
            out.append(r)
        return out

    def check(self, value: int) -> int:
        if not isinstance(value, int) or not 0 <= value < self.q:
            raise ValueError(f"{value!r} is not an element of GF({self.q})")
        return value

    def elements(self) -> range:
        return range(self.q)

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, self.check(value))

    # -- identity / serialization ----------------------------------------------

    @property
    def characteristic(self) -> int:
        return self.p

    def _key(self):
        return (self.p, self.m, self.modulus)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __reduce__(self):
        return (field_new, (self.p, self.m, self.modulus))

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"

    def to_json(self) -> dict:
        d = {"p": self.p, "m": self.m}
        if self.m > 1:
            d["modulus"] = list(self.modulus)
        return d

    @classmethod
    def from_json(cls, d: dict) -> "FieldSpec":
        return field_new(d["p"], d.get("m", 1), d.get("modulus"))


class FieldElement:
    """An element bound to its field, with operator overloading.

    Integers on the right-hand side of an operator are mapped into the field
    through the ring map Z -> GF(q), except for ``**`` where they are
    exponents.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: int):
        self.field = field
        self.value = value

    def _other(self, b) -> int:
        if isinstance(b, FieldElement):
            if b.field != self.field:
                raise ValueError(f"mixed-field operands: {self.field} and {b.field}")
            return b.value
        if isinstance(b, int):
            return self.field.from_int(b)
        return NotImplemented

    def _wrap(self, v: int) -> "FieldElement":
        return FieldElement(self.field, v)

    def __add__(self, b):
        return self._wrap(self.field.add(self.value, self._other(b)))

    __radd__ = __add__

    def __sub__(self, b):
        return self._wrap(self.field.sub(self.value, self._other(b)))

    def __rsub__(self, b):
        return self._wrap(self.field.sub(self._other(b), self.value))

    def __mul__(self, b):
        return self._wrap(self.field.mul(self.value, self._other(b)))

    __rmul__ = __mul__

    def __truediv__(self, b):
        return self._wrap(self.field.div(self.value, self._other(b)))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e: int):
        return self._wrap(self.field.pow(self.value, e))

    def inv(self) -> "FieldElement":
        return self._wrap(self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value}@{self.field!r}"


@lru_cache(maxsize=None)
def _field_cached(p: int, m: int, modulus: tuple[int, ...] | None) -> FieldSpec:
    return FieldSpec(p, m, modulus)


def field_new(p: int, m: int = 1, modulus=None) -> FieldSpec:
    """Validated GF(p^m).

    When ``m > 1`` and no modulus is given, the lexicographically smallest
    monic irreducible polynomial of degree ``m`` (compared as little-endian
    coefficient lists) is used.

    Raises
    ------
    ValueError
        ``p`` not prime, ``m < 1``, or a modulus that is not a monic
        irreducible polynomial of degree ``m``.
    """
    if not isinstance(p, int) or not isprime(p):
        raise ValueError(f"characteristic {p} is not prime")
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    if m == 1:
        # a monic linear modulus is harmless; anything else is a mistake
        if modulus is not None and (len(modulus) != 2 or modulus[-1] != 1):
            raise ValueError("prime fields take no modulus")
        return _field_cached(p, 1, None)
    if modulus is None:
        modulus = _smallest_irreducible(p, m)
    else:
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != m + 1:
            raise ValueError(f"modulus {list(modulus)} does not have degree {m}")
        if modulus[-1] != 1:
            raise ValueError(f"modulus {list(modulus)} is not monic")
        if any(not 0 <= c < p for c in modulus):
            raise ValueError(f"modulus coefficients must lie in [0, {p})")
        if not _is_irreducible(list(modulus), p):
            raise ValueError(f"modulus {list(modulus)} is reducible over GF({p})")
    return _field_cached(p, m, modulus)


def field_of_order(q: int) -> FieldSpec:
    """GF(q) with the default modulus; ``q`` must be a prime power."""
    if isprime(q):
        return field_new(q)
    pp = perfect_power(q)
    if not pp or not isprime(pp[0]):
        raise ValueError(f"{q} is not a prime power")
    return field_new(int(pp[0]), int(pp[1]))
