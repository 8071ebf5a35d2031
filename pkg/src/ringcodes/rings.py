"""The local F_q-algebras R_i, S_i and T_(i,j) on monomial bases.

* ``R_i = F_q[u]/(u^i)``, basis ``1, u, ..., u^(i-1)``;
* ``S_i = F_q[u_1..u_i]/(u_k^2)``, squarefree monomials ordered by bitmask
  (``u_1`` is bit 0);
* ``T_(i,j) = F_q[u, v]/(u^i, v^j)``, basis ``u^a v^b`` at index ``a*j + b``.

All three share one kernel: the product of two basis monomials is either a
basis monomial or zero, recorded in ``RingSpec.table`` (``-1`` for zero).
Elements are coefficient vectors of encoded F_q elements.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .errors import CapExceeded, DomainError, ParseError, PreconditionError
from .fields import FieldCtx, FieldElem, field as default_field
from .grammar import parse_expression

DEFAULT_MAX_ENUM = 2**20
MAX_S_VARIABLES = 16
MAX_TABLE_DIM = 4096


class RingSpec:
    """One of the rings R_i, S_i, T_(i,j) over a field."""

    def __init__(self, family: str, i: int, j: int | None = None, field: FieldCtx | None = None):
        family = family.upper()
        if family not in ("R", "S", "T"):
            raise PreconditionError(f"unknown ring family {family!r}")
        if i < 1:
            raise PreconditionError("i must be >= 1")
        if family == "T":
            if j is None or j < 1:
                raise PreconditionError("T_(i,j) needs j >= 1")
        elif j is not None:
            raise PreconditionError(f"family {family} takes no j parameter")
        if family == "S" and i > MAX_S_VARIABLES:
            raise CapExceeded("S_i basis", 2**i, 2**MAX_S_VARIABLES)
        self.family = family
        self.i = i
        self.j = j
        self.field = field if field is not None else default_field(2)
        if family == "R":
            self.basis = tuple((a,) for a in range(i))
        elif family == "S":
            self.basis = tuple(
                tuple((m >> k) & 1 for k in range(i)) for m in range(2**i)
            )
        else:
            self.basis = tuple((a, b) for a in range(i) for b in range(j))
        self.s = len(self.basis)
        self.labels = tuple(self._label(e) for e in self.basis)
        self._index = {e: k for k, e in enumerate(self.basis)}

    def _label(self, e) -> str:
        if self.family == "R":
            (a,) = e
            return "1" if a == 0 else ("u" if a == 1 else f"u^{a}")
        if self.family == "S":
            names = [f"u{k + 1}" for k, bit in enumerate(e) if bit]
            return "*".join(names) or "1"
        a, b = e
        parts = []
        if a:
            parts.append("u" if a == 1 else f"u^{a}")
        if b:
            parts.append("v" if b == 1 else f"v^{b}")
        return "*".join(parts) or "1"

    # identity ---------------------------------------------------------------

    @property
    def key(self) -> tuple:
        return (self.family, self.i, self.j, self.field.key)

    def __eq__(self, other) -> bool:
        return isinstance(other, RingSpec) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    @property
    def descriptor(self) -> str:
        q = self.field.q
        if self.family == "T":
            return f"T[i={self.i},j={self.j},q={q}]"
        return f"{self.family}[i={self.i},q={q}]"

    def __repr__(self) -> str:
        return f"RingSpec({self.descriptor})"

    @property
    def dim(self) -> int:
        """Dimension over F_q (the ``s`` of the cardinality bound)."""
        return self.s

    @property
    def size(self) -> int:
        return self.field.q**self.s

    # multiplication table -----------------------------------------------------

    def _mono_product(self, e1, e2):
        if self.family == "R":
            a = e1[0] + e2[0]
            return (a,) if a < self.i else None
        if self.family == "S":
            if any(x and y for x, y in zip(e1, e2)):
                return None
            return tuple(x | y for x, y in zip(e1, e2))
        a, b = e1[0] + e2[0], e1[1] + e2[1]
        return (a, b) if a < self.i and b < self.j else None

    @cached_property
    def table(self) -> np.ndarray:
        if self.s > MAX_TABLE_DIM:
            raise CapExceeded(f"multiplication table of {self.descriptor}", self.s, MAX_TABLE_DIM)
        t = np.full((self.s, self.s), -1, dtype=np.int64)
        for a, ea in enumerate(self.basis):
            for b, eb in enumerate(self.basis):
                prod = self._mono_product(ea, eb)
                if prod is not None:
                    t[a, b] = self._index[prod]
        t.setflags(write=False)
        return t

    @cached_property
    def _left(self) -> list[tuple[np.ndarray, np.ndarray]]:
        # For a fixed left monomial the map right -> product is injective,
        # which lets one vectorised assignment handle a whole row.
        rows = []
        for a in range(self.s):
            js = np.flatnonzero(self.table[a] >= 0)
            rows.append((js, self.table[a, js]))
        return rows

    def mul_arrays(self, a, b) -> np.ndarray:
        """Elementwise ring product of coefficient arrays of shape ``(..., s)``."""
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
        f = self.field
        out = np.zeros(a.shape, dtype=np.int64)
        for k, (js, ks) in enumerate(self._left):
            ak = a[..., k : k + 1]
            if not ak.any():
                continue
            out[..., ks] = f.vadd(out[..., ks], f.vmul(ak, b[..., js]))
        return out

    def monomial_map(self, m: int) -> tuple[np.ndarray, np.ndarray]:
        """``(src, dst)`` with ``(a * basis[m])[dst] == a[src]`` and zeros elsewhere."""
        src = np.flatnonzero(self.table[:, m] >= 0)
        return src, self.table[src, m]

    # elements -----------------------------------------------------------------

    def elem(self, coeffs) -> RingElem:
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != self.s:
            raise DomainError(f"expected {self.s} coefficients, got {len(coeffs)}")
        return RingElem(self, coeffs)

    def zero(self) -> RingElem:
        return RingElem(self, (0,) * self.s)

    def one(self) -> RingElem:
        return RingElem(self, (1,) + (0,) * (self.s - 1))

    def scalar(self, c) -> RingElem:
        if isinstance(c, FieldElem):
            c = c.value
        return RingElem(self, (int(c),) + (0,) * (self.s - 1))

    def monomial(self, m: int) -> RingElem:
        coeffs = [0] * self.s
        coeffs[m] = 1
        return RingElem(self, tuple(coeffs))

    def monomials(self) -> list[RingElem]:
        return [self.monomial(m) for m in range(self.s)]

    def variable(self, name: str) -> RingElem:
        """``u``/``v`` (R and T) or ``u1..ui`` (S)."""
        if self.family == "R" and name == "u":
            return self._from_exponents((1,))
        if self.family == "T" and name in ("u", "v"):
            return self._from_exponents((1, 0) if name == "u" else (0, 1))
        if self.family == "S" and name.startswith("u") and name[1:].isdigit():
            k = int(name[1:])
            if 1 <= k <= self.i:
                e = [0] * self.i
                e[k - 1] = 1
                return self._from_exponents(tuple(e))
        raise ParseError(f"{name!r} is not a variable of {self.descriptor}")

    def _from_exponents(self, e) -> RingElem:
        # Exponents past the nilpotency bound give zero.
        if e in self._index:
            return self.monomial(self._index[e])
        return self.zero()

    def to_vector(self, a: RingElem) -> np.ndarray:
        return np.array(a.coeffs, dtype=np.int64)

    def from_vector(self, v) -> RingElem:
        return RingElem(self, tuple(int(c) for c in v))

    def one_vector(self) -> np.ndarray:
        return self.to_vector(self.one())

    def vector_array(self, max_enum: int = DEFAULT_MAX_ENUM) -> np.ndarray:
        """All elements as an ``(q^s, s)`` array, coefficient vectors ascending."""
        if self.size > max_enum:
            raise CapExceeded(f"enumerate {self.descriptor}", self.size, max_enum)
        return _all_vectors(self.field.q, self.s)

    def mul_vectors(self, a, b) -> np.ndarray:
        return self.mul_arrays(a, b)

    def mult_matrices(self, vecs) -> np.ndarray:
        """Stack of multiplication maps: row ``m`` of ``out[k]`` is ``vecs[k] * basis[m]``."""
        vecs = np.asarray(vecs, dtype=np.int64)
        out = np.zeros((vecs.shape[0], self.s, self.s), dtype=np.int64)
        for m in range(self.s):
            src, dst = self.monomial_map(m)
            out[:, m, dst] = vecs[:, src]
        return out

    def basis_vectors(self) -> np.ndarray:
        return np.eye(self.s, dtype=np.int64)

    def unit_mask(self, vecs) -> np.ndarray:
        return np.asarray(vecs)[..., 0] != 0

    def parse(self, text: str) -> RingElem:
        return parse_elem(self, text)

    def format(self, a: RingElem) -> str:
        return format_elem(a)


def _all_vectors(q: int, s: int) -> np.ndarray:
    # Lexicographic order, first coordinate most significant.
    idx = np.arange(q**s, dtype=np.int64)
    out = np.empty((q**s, s), dtype=np.int64)
    for k in range(s - 1, -1, -1):
        out[:, k] = idx % q
        idx //= q
    return out


@lru_cache(maxsize=None)
def ring_construct(family: str, i: int, j: int | None = None, field: FieldCtx | None = None) -> RingSpec:
    """Cached :class:`RingSpec`; ``field`` defaults to F_2."""
    return RingSpec(family, i, j, field)


@dataclass(frozen=True)
class RingElem:
    spec: RingSpec
    coeffs: tuple[int, ...]

    def _coerce(self, other) -> RingElem:
        if isinstance(other, RingElem):
            if other.spec != self.spec:
                raise DomainError("operands belong to different rings")
            return other
        if isinstance(other, FieldElem):
            return self.spec.scalar(other.value)
        if isinstance(other, int):
            return self.spec.scalar(self.spec.field.from_int(other))
        return NotImplemented

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.int64)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.spec.from_vector(self.spec.field.vadd(self.vector, other.vector))

    __radd__ = __add__

    def __neg__(self):
        return self.spec.from_vector(self.spec.field.vneg(self.vector))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.spec.from_vector(self.spec.field.vsub(self.vector, other.vector))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.spec.from_vector(self.spec.mul_arrays(self.vector, other.vector))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return elem_inverse(self.spec, self) ** (-e)
        result, base = self.spec.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __bool__(self) -> bool:
        return any(self.coeffs)

    @property
    def constant(self) -> int:
        """Coefficient of the monomial 1 (its image in the residue field)."""
        return self.coeffs[0]

    def __str__(self) -> str:
        return format_elem(self)


def elem_arith(spec: RingSpec, op: str, a: RingElem, b: RingElem | None = None) -> RingElem:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown ring operation {op!r}")


def elem_is_unit(spec: RingSpec, a: RingElem) -> bool:
    """Units are exactly the elements with a nonzero constant coefficient."""
    return a.coeffs[0] != 0


def elem_inverse(spec: RingSpec, a: RingElem) -> RingElem:
    """Inverse via a = c(1 + m), a^-1 = c^-1 (1 - m + m^2 - ...) with m nilpotent."""
    if not elem_is_unit(spec, a):
        raise DomainError(f"{a} is not a unit of {spec.descriptor}")
    # scalar() embeds the encoded field element; a bare int would be read as n*1
    c_inv = spec.scalar(spec.field.inv(a.constant))
    m = a * c_inv - 1
    term, total = spec.one(), spec.one()
    for _ in range(spec.s + 1):
        term = term * -m
        if not term:
            break
        total = total + term
    inv = total * c_inv
    if a * inv != spec.one():
        raise AssertionError("Neumann-series inverse failed its check")
    return inv


def enumerate_elements(spec: RingSpec, max_enum: int = DEFAULT_MAX_ENUM):
    """All q^s elements, coefficient vectors ascending."""
    if spec.size > max_enum:
        raise CapExceeded(f"enumerate {spec.descriptor}", spec.size, max_enum)
    for coeffs in itertools.product(range(spec.field.q), repeat=spec.s):
        yield RingElem(spec, coeffs)


def nilpotency_index(spec: RingSpec, a: RingElem) -> int | None:
    """Smallest t with a^t = 0, or ``None`` when ``a`` is not nilpotent."""
    power = a
    for t in range(1, spec.s + 2):
        if not power:
            return t
        power = power * a
    return None


# -- text grammar -----------------------------------------------------------------

def parse_elem(spec: RingSpec, text: str) -> RingElem:
    """Parse e.g. ``1+u``, ``(w+1)*u*v``, ``u1*u2`` into an element of ``spec``."""
    f = spec.field

    def number(n: int) -> RingElem:
        return spec.scalar(f.from_int(n))

    def ident(name: str) -> RingElem:
        if name == "w":
            if f.r == 1:
                raise ParseError(f"'w' is undefined over the prime field F_{f.p}")
            return spec.scalar(f.generator)
        return spec.variable(name)

    return parse_expression(text, number, ident)


def format_elem(a: RingElem) -> str:
    spec, f = a.spec, a.spec.field
    terms = []
    for c, label in zip(a.coeffs, spec.labels):
        if c == 0:
            continue
        if label == "1":
            terms.append(f.format(c))
        elif c == 1:
            terms.append(label)
        else:
            cs = f.format(c)
            terms.append(f"({cs})*{label}" if "+" in cs else f"{cs}*{label}")
    return "+".join(terms) or "0"
