"""Prime fields and their extensions F_q = Z_p[y]/(m(y)).

Field elements are stored as small integers: the coefficient vector
``(c_0, ..., c_{r-1})`` of ``c_0 + c_1 y + ... + c_{r-1} y^{r-1}`` is encoded
as ``sum(c_k * p**k)``.  Addition and multiplication go through precomputed
tables (or plain modular arithmetic when ``r == 1``) so that every other module
can work with numpy integer arrays of field elements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .errors import DomainError, PreconditionError

# Tables are q x q; beyond this the package is no longer "desk scale".
MAX_FIELD_ORDER = 1024


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q`` into ``(p, r)`` with ``q == p**r``; raise if impossible."""
    if q < 2:
        raise PreconditionError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    r, m = 0, q
    while m % p == 0:
        m //= p
        r += 1
    if m != 1:
        raise PreconditionError(f"{q} is not a prime power")
    return p, r


# -- polynomials over Z_p, coefficient tuples low -> high ---------------------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def zp_polymod(f, g, p: int) -> list[int]:
    """Remainder of ``f`` modulo ``g`` over Z_p (``g`` need not be monic)."""
    f = _trim([x % p for x in f])
    g = _trim([x % p for x in g])
    if not g:
        raise DomainError("division by the zero polynomial")
    lead_inv = pow(g[-1], -1, p)
    while len(f) >= len(g):
        c = (f[-1] * lead_inv) % p
        off = len(f) - len(g)
        for k, gk in enumerate(g):
            f[off + k] = (f[off + k] - c * gk) % p
        f = _trim(f)
    return f


def _monic_polys(p: int, d: int):
    """Monic degree-``d`` polynomials over Z_p in ascending base-p order.

    The order is that of the integer ``a_0 + a_1 p + ... + a_{d-1} p^{d-1}``.
    """
    for low in itertools.product(range(p), repeat=d):
        yield tuple(reversed(low)) + (1,)


def is_irreducible(f, p: int) -> bool:
    """Trial division by every monic polynomial of degree ``1..deg(f)//2``."""
    f = _trim([x % p for x in f])
    d = len(f) - 1
    if d < 1:
        return False
    for e in range(1, d // 2 + 1):
        for g in _monic_polys(p, e):
            if not zp_polymod(f, g, p):
                return False
    return True


@lru_cache(maxsize=None)
def find_irreducible(p: int, d: int) -> tuple[int, ...]:
    """First monic irreducible polynomial of degree ``d`` over Z_p.

    Candidates are scanned with ``(a_0, ..., a_{d-1})`` read as a base-p
    integer, least significant digit first, so ``find_irreducible(2, 3)`` is
    ``y^3 + y + 1``.  Returns coefficients low -> high.
    """
    if not is_prime(p):
        raise PreconditionError(f"p={p} is not prime")
    if d < 1:
        raise PreconditionError("degree must be >= 1")
    for f in _monic_polys(p, d):
        if is_irreducible(f, p):
            return f
    raise AssertionError("unreachable: irreducibles exist in every degree")


def format_zp_poly(coeffs, var: str = "y") -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
            continue
        mono = var if k == 1 else f"{var}^{k}"
        terms.append(mono if c == 1 else f"{c}*{mono}")
    return "+".join(terms) or "0"


# -- the field ----------------------------------------------------------------

class FieldCtx:
    """The finite field F_{p^r} built on a monic irreducible ``modulus``.

    Instances are immutable.  Use :func:`field` for a cached instance with the
    default (first irreducible) modulus.
    """

    def __init__(self, p: int, r: int = 1, modulus=None):
        if not is_prime(p):
            raise PreconditionError(f"p={p} is not prime")
        if r < 1:
            raise PreconditionError("extension degree r must be >= 1")
        if p**r > MAX_FIELD_ORDER:
            raise PreconditionError(
                f"field order {p**r} exceeds MAX_FIELD_ORDER={MAX_FIELD_ORDER}"
            )
        if modulus is None:
            modulus = find_irreducible(p, r)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != r + 1 or modulus[-1] != 1:
            raise PreconditionError(f"modulus must be monic of degree {r}")
        if r >= 2 and any(
            sum(c * pow(x, k, p) for k, c in enumerate(modulus)) % p == 0
            for x in range(p)
        ):
            raise PreconditionError("modulus has a root in Z_p")
        if not is_irreducible(modulus, p):
            raise PreconditionError("modulus is not irreducible")
        self.p = p
        self.r = r
        self.q = p**r
        self.modulus = modulus
        self._build_tables()

    def _build_tables(self) -> None:
        p, r, q = self.p, self.r, self.q
        digits = np.array(
            [[(v // p**k) % p for k in range(r)] for v in range(q)], dtype=np.int64
        )
        weights = p ** np.arange(r, dtype=np.int64)
        self.digits = digits
        add = (digits[:, None, :] + digits[None, :, :]) % p
        self.add_t = add @ weights
        self.neg_t = ((-digits) % p) @ weights
        prod = np.zeros((q, q, 2 * r - 1), dtype=np.int64)
        for i in range(r):
            for j in range(r):
                prod[:, :, i + j] += digits[:, None, i] * digits[None, :, j]
        prod %= p
        m = np.array(self.modulus, dtype=np.int64)
        for k in range(2 * r - 2, r - 1, -1):
            c = prod[:, :, k].copy()
            prod[:, :, k] = 0
            for t in range(r):
                prod[:, :, k - r + t] = (prod[:, :, k - r + t] - c * m[t]) % p
        self.mul_t = prod[:, :, :r] @ weights
        self.sub_t = self.add_t[:, self.neg_t]
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = int(np.flatnonzero(self.mul_t[a] == 1)[0])
        self.inv_t = inv
        for t in (self.add_t, self.neg_t, self.mul_t, self.sub_t, self.inv_t):
            t.setflags(write=False)

    # identity / equality --------------------------------------------------

    @property
    def key(self) -> tuple:
        return (self.p, self.r, self.modulus)

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldCtx) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, r={self.r}, modulus={format_zp_poly(self.modulus)})"

    @property
    def descriptor(self) -> str:
        return f"Fq[p={self.p},r={self.r}]"

    # vectorised arithmetic on encoded elements -----------------------------
    # Prime fields use modular arithmetic directly (bit operations for F_2);
    # both are much faster than 2-d fancy indexing into the tables.

    def vadd(self, a, b):
        if self.q == 2:
            return np.bitwise_xor(a, b)
        if self.r == 1:
            return (np.asarray(a) + b) % self.p
        return self.add_t[a, b]

    def vsub(self, a, b):
        if self.q == 2:
            return np.bitwise_xor(a, b)
        if self.r == 1:
            return (np.asarray(a) - b) % self.p
        return self.sub_t[a, b]

    def vneg(self, a):
        if self.q == 2:
            return np.array(a, copy=True)
        if self.r == 1:
            return (-np.asarray(a)) % self.p
        return self.neg_t[a]

    def vmul(self, a, b):
        if self.q == 2:
            return np.bitwise_and(a, b)
        if self.r == 1:
            return (np.asarray(a) * b) % self.p
        return self.mul_t[a, b]

    def vinv(self, a):
        a = np.asarray(a)
        if np.any(a == 0):
            raise DomainError("inverse of zero in a field")
        return self.inv_t[a]

    # scalar arithmetic on plain ints --------------------------------------

    def add(self, a: int, b: int) -> int:
        return int(self.add_t[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.sub_t[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_t[a])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_t[a, b])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainError("inverse of zero in a field")
        return int(self.inv_t[a])

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        result, base = 1, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def from_int(self, n: int) -> int:
        """Image of the integer ``n`` in the prime subfield."""
        return n % self.p

    def encode(self, coeffs) -> int:
        coeffs = list(coeffs)
        if len(coeffs) > self.r:
            raise DomainError("too many coefficients for this field")
        return sum((int(c) % self.p) * self.p**k for k, c in enumerate(coeffs))

    def decode(self, a: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.digits[a])

    @cached_property
    def generator(self) -> int:
        """Class of ``y`` (printed ``w``); equals 0 in a prime field."""
        if self.r == 1:
            return (-self.modulus[0]) % self.p
        return self.p

    def elements(self):
        return range(self.q)

    def elem(self, value) -> FieldElem:
        if isinstance(value, (list, tuple)):
            value = self.encode(value)
        return FieldElem(self, int(value))

    def format(self, a: int) -> str:
        if self.r == 1:
            return str(a)
        return format_zp_poly(self.decode(a), "w")


@lru_cache(maxsize=None)
def field(p: int, r: int = 1) -> FieldCtx:
    """Cached field with the deterministic default modulus."""
    return FieldCtx(p, r)


def field_of_order(q: int) -> FieldCtx:
    return field(*prime_power(q))


@dataclass(frozen=True)
class FieldElem:
    """A single element of a :class:`FieldCtx`, with operator overloading."""

    ctx: FieldCtx
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.ctx.q:
            raise DomainError(f"{self.value} is not an element of F_{self.ctx.q}")

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.decode(self.value)

    def _other(self, other) -> int:
        if isinstance(other, FieldElem):
            if other.ctx != self.ctx:
                raise DomainError("operands belong to different fields")
            return other.value
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return NotImplemented

    def __add__(self, other):
        return FieldElem(self.ctx, self.ctx.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElem(self.ctx, self.ctx.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElem(self.ctx, self.ctx.sub(self._other(other), self.value))

    def __neg__(self):
        return FieldElem(self.ctx, self.ctx.neg(self.value))

    def __mul__(self, other):
        return FieldElem(self.ctx, self.ctx.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * FieldElem(self.ctx, self._other(other)).inv()

    def __pow__(self, e: int):
        return FieldElem(self.ctx, self.ctx.pow(self.value, e))

    def inv(self) -> FieldElem:
        return FieldElem(self.ctx, self.ctx.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return self.ctx.format(self.value)


def field_arith(ctx: FieldCtx, op: str, *operands):
    """Dispatch ``add|sub|mul|neg|inv|pow`` on :class:`FieldElem` operands."""
    if op == "add":
        a, b = operands
        return a + b
    if op == "sub":
        a, b = operands
        return a - b
    if op == "mul":
        a, b = operands
        return a * b
    if op == "neg":
        (a,) = operands
        return -a
    if op == "inv":
        (a,) = operands
        return a.inv()
    if op == "pow":
        a, e = operands
        return a**e
    raise ValueError(f"unknown field operation {op!r}")
