"""Polynomials over a :class:`RingSpec` and the quotients R[x]/(x^n - 1).

A :class:`RingPoly` keeps its coefficients as an ``(len, s)`` integer array
(row ``k`` is the coefficient of ``x^k``), trimmed so the last row is nonzero.
Quotient elements are flattened position-major into F_q^(n*s): coordinate
``k*s + m`` is the F_q-coefficient of ``basis[m] * x^k``.
"""

from __future__ import annotations

import itertools
from functools import cached_property

import numpy as np

from .errors import CapExceeded, DomainError, ParseError, PreconditionError
from .grammar import parse_expression
from .linalg import batch_rank, left_kernel_vector, solve_left
from .rings import DEFAULT_MAX_ENUM, RingElem, RingSpec, _all_vectors, format_elem, parse_elem

# Degree of the zero polynomial.
ZERO_DEGREE = float("-inf")


class RingPoly:
    __slots__ = ("spec", "data")

    def __init__(self, spec: RingSpec, data):
        data = np.array(data, dtype=np.int64).reshape(-1, spec.s)
        nz = np.flatnonzero(data.any(axis=1))
        data = data[: nz[-1] + 1] if nz.size else data[:0]
        data.setflags(write=False)
        self.spec = spec
        self.data = data

    # constructors -------------------------------------------------------------

    @classmethod
    def zero(cls, spec: RingSpec) -> RingPoly:
        return cls(spec, np.zeros((0, spec.s)))

    @classmethod
    def constant(cls, c: RingElem) -> RingPoly:
        return cls(c.spec, [c.coeffs])

    @classmethod
    def from_elems(cls, spec: RingSpec, coeffs) -> RingPoly:
        """From ring elements (or anything :meth:`RingElem._coerce` accepts), low degree first."""
        one = spec.one()
        rows = [one._coerce(c).coeffs for c in coeffs]
        return cls(spec, np.array(rows, dtype=np.int64).reshape(-1, spec.s))

    @classmethod
    def monomial(cls, spec: RingSpec, k: int, c: RingElem | None = None) -> RingPoly:
        data = np.zeros((k + 1, spec.s), dtype=np.int64)
        data[k] = (c if c is not None else spec.one()).coeffs
        return cls(spec, data)

    @classmethod
    def x_n_minus_one(cls, spec: RingSpec, n: int) -> RingPoly:
        data = np.zeros((n + 1, spec.s), dtype=np.int64)
        data[n, 0] = 1
        data[0, 0] = spec.field.neg(1)
        return cls(spec, data)

    # basic properties -----------------------------------------------------------

    @property
    def degree(self):
        return len(self.data) - 1 if len(self.data) else ZERO_DEGREE

    def coeff(self, k: int) -> RingElem:
        if 0 <= k < len(self.data):
            return self.spec.from_vector(self.data[k])
        return self.spec.zero()

    @property
    def coeffs(self) -> list[RingElem]:
        return [self.spec.from_vector(row) for row in self.data]

    @property
    def leading(self) -> RingElem:
        if not len(self.data):
            return self.spec.zero()
        return self.spec.from_vector(self.data[-1])

    def is_monic(self) -> bool:
        return len(self.data) > 0 and self.leading == self.spec.one()

    def __bool__(self) -> bool:
        return len(self.data) > 0

    def __eq__(self, other) -> bool:
        if isinstance(other, RingPoly):
            return self.spec == other.spec and np.array_equal(self.data, other.data)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.spec, self.data.tobytes(), self.data.shape))

    def __repr__(self) -> str:
        return f"RingPoly({format_poly(self)!r}, {self.spec.descriptor})"

    def __str__(self) -> str:
        return format_poly(self)

    # arithmetic ---------------------------------------------------------------

    def _coerce(self, other) -> RingPoly:
        if isinstance(other, RingPoly):
            if other.spec != self.spec:
                raise DomainError("operands have different coefficient rings")
            return other
        try:
            c = self.spec.one()._coerce(other)
        except DomainError:
            raise
        if c is NotImplemented:
            return NotImplemented
        return RingPoly.constant(c)

    def _padded(self, length: int) -> np.ndarray:
        out = np.zeros((length, self.spec.s), dtype=np.int64)
        out[: len(self.data)] = self.data
        return out

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.data), len(other.data))
        return RingPoly(self.spec, self.spec.field.vadd(self._padded(n), other._padded(n)))

    __radd__ = __add__

    def __neg__(self):
        return RingPoly(self.spec, self.spec.field.vneg(self.data))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.data), len(other.data))
        return RingPoly(self.spec, self.spec.field.vsub(self._padded(n), other._padded(n)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RingPoly(self.spec, _convolve(self.spec, self.data, other.data))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative powers of polynomials are not supported")
        result = RingPoly.constant(self.spec.one())
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: RingElem) -> RingPoly:
        return RingPoly(self.spec, self.spec.mul_arrays(self.data, c.vector[None, :]))

    def shift(self, k: int) -> RingPoly:
        """Multiply by ``x^k`` in R[x] (no reduction)."""
        if not len(self.data):
            return self
        return RingPoly(self.spec, np.concatenate([np.zeros((k, self.spec.s), dtype=np.int64), self.data]))


def _convolve(spec: RingSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if not len(a) or not len(b):
        return np.zeros((0, spec.s), dtype=np.int64)
    f = spec.field
    out = np.zeros((len(a) + len(b) - 1, spec.s), dtype=np.int64)
    for i, row in enumerate(a):
        if row.any():
            prod = spec.mul_arrays(row[None, :], b)
            out[i : i + len(b)] = f.vadd(out[i : i + len(b)], prod)
    return out


def poly_arith(op: str, f: RingPoly, g: RingPoly) -> RingPoly:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_divmod_monic(f: RingPoly, h: RingPoly) -> tuple[RingPoly, RingPoly]:
    """``(quot, rem)`` with ``f = quot*h + rem`` and ``deg rem < deg h``.

    Only monic divisors are accepted: division by anything else is not
    well defined over rings with zero divisors.
    """
    if f.spec != h.spec:
        raise DomainError("operands have different coefficient rings")
    if not h.is_monic():
        raise DomainError(f"divisor {h} is not monic")
    spec, fld = f.spec, f.spec.field
    dh = len(h.data) - 1
    rem = np.array(f.data, copy=True)
    if len(rem) <= dh:
        return RingPoly.zero(spec), f
    quot = np.zeros((len(rem) - dh, spec.s), dtype=np.int64)
    for k in range(len(rem) - 1, dh - 1, -1):
        c = rem[k].copy()
        if not c.any():
            continue
        quot[k - dh] = c
        prod = spec.mul_arrays(c[None, :], h.data)
        rem[k - dh : k + 1] = fld.vsub(rem[k - dh : k + 1], prod)
    return RingPoly(spec, quot), RingPoly(spec, rem[:dh])


def divides_monic(h: RingPoly, f: RingPoly) -> bool:
    return not poly_divmod_monic(f, h)[1]


def monic_divisors(spec: RingSpec, n: int, max_candidates: int = 2**16) -> list[RingPoly]:
    """Every monic h with h | x^n - 1 over ``spec``, by exhaustive search.

    Candidates of degree 0..n are scanned; the count ``sum(|R|^d)`` is capped.
    """
    total = sum(spec.size**d for d in range(n + 1))
    if total > max_candidates:
        raise CapExceeded(f"monic divisors of x^{n}-1 over {spec.descriptor}", total, max_candidates)
    target = RingPoly.x_n_minus_one(spec, n)
    elems = _all_vectors(spec.field.q, spec.s)
    one = spec.one_vector()
    found = []
    for d in range(n + 1):
        for idx in itertools.product(range(len(elems)), repeat=d):
            data = np.vstack([elems[list(idx)].reshape(d, spec.s), one[None, :]])
            h = RingPoly(spec, data)
            if divides_monic(h, target):
                found.append(h)
    return found


# -- the quotient R[x]/(x^n - 1) --------------------------------------------------

class QuotientCtx:
    """R[x]/(x^n - 1) for a ring ``R`` and length ``n``; an F_q-space of dim s*n."""

    def __init__(self, ring: RingSpec, n: int):
        if n < 1:
            raise PreconditionError("code length n must be >= 1")
        self.ring = ring
        self.n = n

    @property
    def field(self):
        return self.ring.field

    @property
    def dim(self) -> int:
        return self.ring.s * self.n

    @property
    def size(self) -> int:
        return self.field.q**self.dim

    @property
    def key(self) -> tuple:
        return (self.ring.key, self.n)

    def __eq__(self, other) -> bool:
        return isinstance(other, QuotientCtx) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    @property
    def descriptor(self) -> str:
        return f"{self.ring.descriptor}[x]/(x^{self.n}-1)"

    def __repr__(self) -> str:
        return f"QuotientCtx({self.descriptor})"

    @cached_property
    def modulus(self) -> RingPoly:
        return RingPoly.x_n_minus_one(self.ring, self.n)

    def reduce(self, f: RingPoly) -> RingPoly:
        """Fold exponents mod n (the remainder of division by x^n - 1)."""
        if len(f.data) <= self.n:
            return f
        s, fld = self.ring.s, self.field
        out = np.zeros((self.n, s), dtype=np.int64)
        for start in range(0, len(f.data), self.n):
            chunk = f.data[start : start + self.n]
            out[: len(chunk)] = fld.vadd(out[: len(chunk)], chunk)
        return RingPoly(self.ring, out)

    def _check(self, f: RingPoly) -> None:
        if f.spec != self.ring:
            raise DomainError("polynomial has the wrong coefficient ring")
        if len(f.data) > self.n:
            raise DomainError(f"degree {f.degree} is not < n={self.n}")

    def mul(self, f: RingPoly, g: RingPoly) -> RingPoly:
        self._check(f)
        self._check(g)
        return self.from_vector(self.mul_vectors(self.to_vector(f), self.to_vector(g)))

    def add(self, f: RingPoly, g: RingPoly) -> RingPoly:
        return f + g

    def shift(self, c: RingPoly) -> RingPoly:
        self._check(c)
        return self.from_vector(np.roll(self._array(c), 1, axis=0).reshape(-1))

    def x_power(self, k: int) -> RingPoly:
        return RingPoly.monomial(self.ring, k % self.n)

    def one(self) -> RingPoly:
        return RingPoly.constant(self.ring.one())

    def zero(self) -> RingPoly:
        return RingPoly.zero(self.ring)

    # vector form ----------------------------------------------------------------

    def _array(self, f: RingPoly) -> np.ndarray:
        out = np.zeros((self.n, self.ring.s), dtype=np.int64)
        out[: len(f.data)] = f.data
        return out

    def to_vector(self, f: RingPoly) -> np.ndarray:
        self._check(f)
        return self._array(f).reshape(-1)

    def from_vector(self, v) -> RingPoly:
        return RingPoly(self.ring, np.asarray(v, dtype=np.int64).reshape(self.n, self.ring.s))

    def one_vector(self) -> np.ndarray:
        return self.to_vector(self.one())

    def vector_array(self, max_enum: int = DEFAULT_MAX_ENUM) -> np.ndarray:
        if self.size > max_enum:
            raise CapExceeded(f"enumerate {self.descriptor}", self.size, max_enum)
        return _all_vectors(self.field.q, self.dim)

    def basis_vectors(self) -> np.ndarray:
        return np.eye(self.dim, dtype=np.int64)

    def basis_elements(self) -> list[RingPoly]:
        """The F_q-basis ``basis[m] * x^k``, in vector-coordinate order."""
        return [self.from_vector(row) for row in self.basis_vectors()]

    def mul_vectors(self, a, b) -> np.ndarray:
        """Batched product on vectors of shape ``(..., n*s)``."""
        n, s, fld = self.n, self.ring.s, self.field
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        shape = a.shape
        a = a.reshape(-1, n, s)
        b = b.reshape(-1, n, s)
        out = np.zeros_like(a)
        for i in range(n):
            ai = a[:, i : i + 1, :]
            if not ai.any():
                continue
            prod = self.ring.mul_arrays(ai, b)
            out = fld.vadd(out, np.roll(prod, i, axis=1))
        return out.reshape(shape)

    def mult_matrices(self, vecs) -> np.ndarray:
        """Row ``k*s + m`` of ``out[t]`` is ``vecs[t] * basis[m] * x^k``."""
        vecs = np.asarray(vecs, dtype=np.int64)
        n, s = self.n, self.ring.s
        arr = vecs.reshape(-1, n, s)
        out = np.zeros((arr.shape[0], n, s, n, s), dtype=np.int64)
        for m in range(s):
            src, dst = self.ring.monomial_map(m)
            prod = np.zeros_like(arr)
            prod[:, :, dst] = arr[:, :, src]
            for k in range(n):
                out[:, k, m] = np.roll(prod, k, axis=1)
        return out.reshape(arr.shape[0], n * s, n * s)

    def unit_mask(self, vecs, chunk: int = 4096) -> np.ndarray:
        """Unit test by rank of the multiplication map (bijective iff unit)."""
        vecs = np.asarray(vecs, dtype=np.int64).reshape(-1, self.dim)
        out = np.empty(len(vecs), dtype=bool)
        for start in range(0, len(vecs), chunk):
            mats = self.mult_matrices(vecs[start : start + chunk])
            out[start : start + chunk] = batch_rank(self.field, mats) == self.dim
        return out

    def inverse(self, f: RingPoly) -> RingPoly | None:
        """Solve f*g = 1 over F_q; ``None`` when f is not a unit."""
        m = self.mult_matrices(self.to_vector(f)[None, :])[0]
        # row e of m is f*e, so g @ m == vec(f*g)
        g = solve_left(self.field, m, self.one_vector())
        return None if g is None else self.from_vector(g)

    def annihilator(self, f: RingPoly) -> RingPoly | None:
        """A nonzero g with f*g = 0, or ``None`` when f is not a zero divisor."""
        m = self.mult_matrices(self.to_vector(f)[None, :])[0]
        g = left_kernel_vector(self.field, m)
        return None if g is None else self.from_vector(g)

    def is_unit(self, f: RingPoly) -> bool:
        return bool(self.unit_mask(self.to_vector(f)[None, :])[0])

    def parse(self, text: str) -> RingPoly:
        return self.reduce(parse_poly(self.ring, text))

    def format(self, f: RingPoly) -> str:
        return format_poly(f)


def quotient_mul(ctx: QuotientCtx, f: RingPoly, g: RingPoly) -> RingPoly:
    return ctx.mul(f, g)


def cyclic_shift(ctx: QuotientCtx, c: RingPoly) -> RingPoly:
    """(c_0, ..., c_{n-1}) -> (c_{n-1}, c_0, ..., c_{n-2})."""
    return ctx.shift(c)


# -- text grammar -------------------------------------------------------------------

def parse_poly(spec: RingSpec, text: str) -> RingPoly:
    """Parse ``{1+u}*x^3 + {u}*x + {1}``; bare ring expressions like ``x-1`` also work."""

    def number(n: int) -> RingPoly:
        return RingPoly.constant(spec.scalar(spec.field.from_int(n)))

    def ident(name: str) -> RingPoly:
        if name == "x":
            return RingPoly.monomial(spec, 1)
        return RingPoly.constant(parse_elem(spec, name))

    def brace(body: str) -> RingPoly:
        return RingPoly.constant(parse_elem(spec, body))

    result = parse_expression(text, number, ident, brace)
    if not isinstance(result, RingPoly):
        raise ParseError(f"not a polynomial: {text!r}")
    return result


def format_poly(f: RingPoly) -> str:
    """Canonical form: descending powers, ``{coeff}*x^k`` terms joined by `` + ``."""
    terms = []
    for k in range(len(f.data) - 1, -1, -1):
        row = f.data[k]
        if not row.any():
            continue
        c = "{" + format_elem(f.spec.from_vector(row)) + "}"
        terms.append(c if k == 0 else (f"{c}*x" if k == 1 else f"{c}*x^{k}"))
    return " + ".join(terms) or "0"
