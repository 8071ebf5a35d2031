"""Residue rings Z_{p^r}, Galois rings GR(p^r, n) and Hensel lifting."""

from __future__ import annotations

import itertools
from functools import lru_cache

from .errors import CapExceeded, DomainError, PreconditionError
from .fields import find_irreducible, format_zp_poly, is_irreducible, is_prime
from .report import Report, verdict

DEFAULT_MAX_ENUM = 2**20


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise PreconditionError(f"p={p} is not prime")


class ZModCtx:
    """Integers modulo ``p**r``."""

    def __init__(self, p: int, r: int = 1):
        _check_prime(p)
        if r < 1:
            raise PreconditionError("r must be >= 1")
        self.p, self.r = p, r
        self.modulus = p**r

    def __repr__(self) -> str:
        return f"ZModCtx(Z_{self.modulus})"

    def __eq__(self, other) -> bool:
        return isinstance(other, ZModCtx) and (self.p, self.r) == (other.p, other.r)

    def __hash__(self) -> int:
        return hash((self.p, self.r))

    def elements(self):
        return range(self.modulus)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.modulus

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.modulus

    def neg(self, a: int) -> int:
        return (-a) % self.modulus

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.modulus

    def is_unit(self, a: int) -> bool:
        return a % self.p != 0

    def inv(self, a: int) -> int:
        if not self.is_unit(a):
            raise DomainError(f"{a} is not a unit mod {self.modulus}")
        return pow(a, -1, self.modulus)


def _poly_eval(f, x: int, m: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % m
    return acc


def _poly_derivative(f) -> list[int]:
    return [k * c for k, c in enumerate(f)][1:]


def hensel_lift_root(p: int, t: int, f, rho: int) -> int:
    """Lift a simple root ``rho`` of ``f`` mod ``p**t`` to a root mod ``p**(t+1)``.

    ``f`` holds integer coefficients, lowest degree first.  The returned
    ``sigma`` satisfies ``sigma = rho (mod p**t)`` and ``f(sigma) = 0
    (mod p**(t+1))``; both are re-checked before returning.
    """
    _check_prime(p)
    if t < 1:
        raise PreconditionError("lifting level t must be >= 1")
    lo, hi = p**t, p ** (t + 1)
    if _poly_eval(f, rho, lo) != 0:
        raise PreconditionError(f"f({rho}) is not 0 mod {lo}")
    slope = _poly_eval(_poly_derivative(f), rho, hi)
    if slope % p == 0:
        raise DomainError("non-simple root, lift undefined")
    sigma = (rho - _poly_eval(f, rho, hi) * pow(slope, -1, hi)) % hi
    if (sigma - rho) % lo != 0 or _poly_eval(f, sigma, hi) != 0:
        raise AssertionError("Hensel step failed its own postcondition")
    return sigma


def hensel_lift(p: int, f, rho: int, levels: int) -> int:
    """Lift a simple root mod ``p`` to a root mod ``p**levels``."""
    sigma = rho % p
    for t in range(1, levels):
        sigma = hensel_lift_root(p, t, f, sigma)
    return sigma


class GaloisRingCtx:
    """GR(p^r, n) = Z_{p^r}[x]/(f) with f monic and irreducible mod p.

    Elements are tuples ``(a_0, ..., a_{n-1})`` standing for
    ``a_0 + a_1 θ + ... + a_{n-1} θ^{n-1}`` with θ the class of x.
    """

    def __init__(self, p: int, r: int, n: int, modulus=None):
        _check_prime(p)
        if r < 1 or n < 1:
            raise PreconditionError("r and n must be >= 1")
        self.p, self.r, self.n = p, r, n
        self.base = ZModCtx(p, r)
        m = p**r
        if modulus is None:
            modulus = find_irreducible(p, n)
        modulus = tuple(int(c) % m for c in modulus)
        if len(modulus) != n + 1 or modulus[-1] != 1:
            raise PreconditionError(f"modulus must be monic of degree {n}")
        if not is_irreducible([c % p for c in modulus], p):
            raise PreconditionError("modulus is not irreducible mod p")
        self.modulus = modulus

    def __repr__(self) -> str:
        return (
            f"GaloisRingCtx(GR({self.p}^{self.r}, {self.n}), "
            f"modulus={format_zp_poly(self.modulus, 'x')})"
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, GaloisRingCtx) and (
            self.p, self.r, self.n, self.modulus
        ) == (other.p, other.r, other.n, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.r, self.n, self.modulus))

    @property
    def descriptor(self) -> str:
        return f"GR[p={self.p},r={self.r},n={self.n}]"

    @property
    def size(self) -> int:
        return self.p ** (self.r * self.n)

    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * self.n

    @property
    def one(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.n - 1)

    @property
    def theta(self) -> tuple[int, ...]:
        if self.n == 1:
            return ((-self.modulus[0]) % self.base.modulus,)
        return (0, 1) + (0,) * (self.n - 2)

    def elements(self, max_enum: int = DEFAULT_MAX_ENUM):
        if self.size > max_enum:
            raise CapExceeded(f"enumerate {self.descriptor}", self.size, max_enum)
        return itertools.product(range(self.base.modulus), repeat=self.n)

    def add(self, a, b):
        m = self.base.modulus
        return tuple((x + y) % m for x, y in zip(a, b))

    def neg(self, a):
        m = self.base.modulus
        return tuple((-x) % m for x in a)

    def mul(self, a, b):
        m, n = self.base.modulus, self.n
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        f = self.modulus
        for k in range(2 * n - 2, n - 1, -1):
            c = prod[k] % m
            prod[k] = 0
            if c:
                for t in range(n):
                    prod[k - n + t] -= c * f[t]
        return tuple(c % m for c in prod[:n])

    def pow(self, a, e: int):
        result, base = self.one, a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def is_unit(self, a) -> bool:
        # Units are exactly the elements whose reduction mod p is nonzero.
        return any(x % self.p for x in a)

    def format(self, a) -> str:
        return format_zp_poly(a, "θ")


@lru_cache(maxsize=None)
def gr_construct(p: int, r: int, n: int) -> GaloisRingCtx:
    """GR(p^r, n) over the coefficientwise lift of ``find_irreducible(p, n)``."""
    return GaloisRingCtx(p, r, n)


def gr_basis_check(ctx: GaloisRingCtx, max_enum: int = DEFAULT_MAX_ENUM) -> Report:
    """Check that {1, θ, ..., θ^(n-1)} is a free Z_{p^r}-basis by enumeration.

    Every coefficient tuple is evaluated through the ring's own multiplication
    (powers of θ), and the images must be pairwise distinct and exhaust the
    ring.
    """
    if ctx.size > max_enum:
        raise CapExceeded(f"basis check of {ctx.descriptor}", ctx.size, max_enum)
    powers = [ctx.one]
    for _ in range(1, ctx.n):
        powers.append(ctx.mul(powers[-1], ctx.theta))
    m = ctx.base.modulus
    images = set()
    collision = None
    for coeffs in itertools.product(range(m), repeat=ctx.n):
        v = ctx.zero
        for a, t in zip(coeffs, powers):
            v = ctx.add(v, ctx.mul((a,) + (0,) * (ctx.n - 1), t))
        if v in images and collision is None:
            collision = {"coefficients": list(coeffs), "element": ctx.format(v)}
        images.add(v)
    all_elems = set(ctx.elements(max_enum))
    ok = collision is None and images == all_elems and len(images) == ctx.size
    witness = {
        "basis": [ctx.format(t) for t in powers],
        "representations": len(images),
        "modulus": format_zp_poly(ctx.modulus, "x"),
    }
    if collision is not None:
        witness["collision"] = collision
    return Report(
        claim="galois-ring-free-basis",
        params={"p": ctx.p, "r": ctx.r, "n": ctx.n, "size": ctx.size},
        verdict=verdict(ok),
        witness=witness,
    )
