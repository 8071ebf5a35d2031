"""Exhaustive structural checks: augmentation, ideals, locality, chains, factorizations.

"Parents" are either a :class:`~ringcodes.rings.RingSpec` or a
:class:`~ringcodes.poly.QuotientCtx`.  Both expose the same small vector
interface (``dim``, ``size``, ``to_vector``, ``from_vector``,
``vector_array``, ``mult_matrices``, ``unit_mask``, ``format``), which is all
the code below relies on.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CapExceeded, PreconditionError
from .linalg import (
    batch_rank,
    in_row_space,
    reduce_against,
    row_basis,
    solve_left,
    span_chunks,
)
from .poly import QuotientCtx, RingPoly, format_poly, poly_divmod_monic
from .report import FAILS, HOLDS, Report, verdict
from .rings import RingElem, RingSpec

DEFAULT_MAX_ENUM = 2**20
DEFAULT_MAX_DIM = 4096
# Pair checks are exhaustive up to this many elements, sampled above it.
EXHAUSTIVE_PAIR_LIMIT = 2**12
# Ideal lattices are only enumerated for rings up to this size.
CHAIN_LIMIT = 2**12


def _vec(parent, x) -> np.ndarray:
    if isinstance(parent, QuotientCtx) and isinstance(x, RingPoly):
        x = parent.reduce(x)
    return parent.to_vector(x)


def _params(parent) -> dict:
    if isinstance(parent, QuotientCtx):
        return {"ring": parent.ring.descriptor, "n": parent.n}
    return {"ring": parent.descriptor}


# -- augmentation -----------------------------------------------------------------

def augmentation(ctx: QuotientCtx, f: RingPoly) -> RingElem:
    """Coefficient sum c_0 + c_1 + ... + c_{n-1}."""
    total = ctx.ring.zero()
    for c in ctx.reduce(f).coeffs:
        total = total + c
    return total


def _augment_vectors(ctx: QuotientCtx, vecs: np.ndarray) -> np.ndarray:
    arr = vecs.reshape(len(vecs), ctx.n, ctx.ring.s)
    out = arr[:, 0]
    for k in range(1, ctx.n):
        out = ctx.field.vadd(out, arr[:, k])
    return out


def augmentation_check(ctx: QuotientCtx, samples: int = 20000, seed: int = 0) -> Report:
    """Check φ(fg) = φ(f)φ(g), φ(f+g) = φ(f)+φ(g) and surjectivity.

    Exhaustive over all pairs when the quotient has at most
    ``EXHAUSTIVE_PAIR_LIMIT`` elements, random pairs otherwise.
    """
    ring, fld = ctx.ring, ctx.field
    exhaustive = ctx.size <= EXHAUSTIVE_PAIR_LIMIT
    violations = 0
    example = None
    checked = 0

    def check(a, b):
        nonlocal violations, example, checked
        pa, pb = _augment_vectors(ctx, a), _augment_vectors(ctx, b)
        bad_mul = np.any(_augment_vectors(ctx, ctx.mul_vectors(a, b)) != ring.mul_arrays(pa, pb), axis=1)
        bad_add = np.any(_augment_vectors(ctx, fld.vadd(a, b)) != fld.vadd(pa, pb), axis=1)
        bad = bad_mul | bad_add
        checked += len(a)
        if bad.any():
            violations += int(bad.sum())
            if example is None:
                i = int(np.flatnonzero(bad)[0])
                example = {"f": format_poly(ctx.from_vector(a[i])), "g": format_poly(ctx.from_vector(b[i]))}

    if exhaustive:
        allv = ctx.vector_array()
        step = max(1, 2**20 // len(allv))
        for start in range(0, len(allv), step):
            a = np.repeat(allv[start : start + step], len(allv), axis=0)
            b = np.tile(allv, (len(allv[start : start + step]), 1))
            check(a, b)
    else:
        rng = np.random.default_rng(seed)
        a = rng.integers(0, fld.q, size=(samples, ctx.dim))
        b = rng.integers(0, fld.q, size=(samples, ctx.dim))
        check(a, b)
    # constants c map to c, so φ is onto R
    consts = np.zeros((ring.s, ctx.dim), dtype=np.int64)
    consts[:, : ring.s] = np.eye(ring.s, dtype=np.int64)
    surjective = bool(np.array_equal(_augment_vectors(ctx, consts), np.eye(ring.s, dtype=np.int64)))
    ok = violations == 0 and surjective
    witness = {"pairs_checked": checked, "violations": violations, "exhaustive": exhaustive,
               "surjective": surjective}
    if example:
        witness["counterexample"] = example
    return Report("augmentation-homomorphism", _params(ctx), verdict(ok), witness)


# -- ideals --------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class IdealSet:
    parent: object
    fq_basis: np.ndarray
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def size(self) -> int:
        return self.parent.field.q**self.rank

    @property
    def key(self) -> bytes:
        return self.fq_basis.tobytes() + bytes(str(self.fq_basis.shape), "ascii")

    def __eq__(self, other) -> bool:
        return isinstance(other, IdealSet) and self.rank == other.rank and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def contains(self, x) -> bool:
        return bool(in_row_space(self.parent.field, self.fq_basis, list(self.pivots), _vec(self.parent, x)))

    def contains_vectors(self, vecs) -> np.ndarray:
        return in_row_space(self.parent.field, self.fq_basis, list(self.pivots), vecs)

    def issubset(self, other: IdealSet) -> bool:
        if self.rank == 0:
            return True
        return bool(np.all(other.contains_vectors(self.fq_basis)))

    def element_vectors(self, max_enum: int = DEFAULT_MAX_ENUM) -> np.ndarray:
        if self.size > max_enum:
            raise CapExceeded("enumerate ideal", self.size, max_enum)
        if self.rank == 0:
            return np.zeros((1, self.parent.dim), dtype=np.int64)
        return np.concatenate(list(span_chunks(self.parent.field, self.fq_basis)))

    def elements(self, max_enum: int = DEFAULT_MAX_ENUM) -> list:
        return [self.parent.from_vector(v) for v in self.element_vectors(max_enum)]

    def describe(self) -> str:
        if self.rank == 0:
            return "0"
        return "span{" + ", ".join(self.parent.format(self.parent.from_vector(r)) for r in self.fq_basis) + "}"


def _span_rows(parent, vecs: np.ndarray) -> np.ndarray:
    if len(vecs) == 0:
        return np.zeros((0, parent.dim), dtype=np.int64)
    return parent.mult_matrices(vecs).reshape(-1, parent.dim)


def ideal_from_vectors(parent, vecs, max_dim: int = DEFAULT_MAX_DIM) -> IdealSet:
    if parent.dim > max_dim:
        raise CapExceeded("ideal span", parent.dim, max_dim)
    vecs = np.asarray(vecs, dtype=np.int64).reshape(-1, parent.dim)
    basis, pivots = row_basis(parent.field, _span_rows(parent, vecs))
    return IdealSet(parent, basis.reshape(-1, parent.dim), tuple(pivots))


def ideal_span(parent, generators, max_dim: int = DEFAULT_MAX_DIM) -> IdealSet:
    """Smallest ideal containing ``generators``: F_q-span of every basis multiple."""
    vecs = [_vec(parent, g) for g in generators]
    return ideal_from_vectors(parent, np.array(vecs, dtype=np.int64).reshape(-1, parent.dim), max_dim)


def principal_generator(ideal: IdealSet, max_enum: int = DEFAULT_MAX_ENUM) -> np.ndarray | None:
    """First element g (enumeration order) with (g) = ideal, else ``None``."""
    if ideal.rank == 0:
        return np.zeros(ideal.parent.dim, dtype=np.int64)
    if ideal.size > max_enum:
        raise CapExceeded("principal generator search", ideal.size, max_enum)
    parent = ideal.parent
    # (g) is always inside the ideal, so equality is a rank comparison.
    for block in span_chunks(parent.field, ideal.fq_basis):
        for start in range(0, len(block), 2048):
            cand = block[start : start + 2048]
            hit = np.flatnonzero(batch_rank(parent.field, parent.mult_matrices(cand)) == ideal.rank)
            if hit.size:
                return cand[hit[0]]
    return None


def is_principal(parent, ideal: IdealSet, max_enum: int = DEFAULT_MAX_ENUM) -> Report:
    if parent.size > max_enum:
        raise CapExceeded("principality check parent", parent.size, max_enum)
    g = principal_generator(ideal, max_enum)
    params = {**_params(parent), "ideal": ideal.describe(), "ideal_size": ideal.size}
    if g is None:
        return Report("principal-ideal", params, FAILS,
                      {"generator": None, "reason": "no single generator", "candidates_searched": ideal.size})
    return Report("principal-ideal", params, HOLDS, {"generator": parent.format(parent.from_vector(g))})


# -- locality ------------------------------------------------------------------------

def _independent_subset(field, vecs: np.ndarray, target_rank: int) -> np.ndarray:
    """Greedily pick rows of ``vecs`` that are linearly independent."""
    chosen: list[np.ndarray] = []
    basis = np.zeros((0, vecs.shape[1]), dtype=np.int64)
    pivots: list[int] = []
    while len(chosen) < target_rank:
        res = reduce_against(field, basis, pivots, vecs)
        i = int(np.flatnonzero(res.any(axis=1))[0])
        chosen.append(vecs[i])
        basis, pivots = row_basis(field, np.array(chosen))
    return np.array(chosen)


def _non_unit_pair(parent, nonunits: np.ndarray, units: np.ndarray):
    """Two non-units whose sum is a unit, or ``None`` if non-units are additive.

    A unit ``w`` in the span of the non-units is written as ``sum c_k e_k``
    over independent non-units; the first partial sum that is a unit splits
    into the required pair.
    """
    fld = parent.field
    basis, pivots = row_basis(fld, nonunits)
    if len(pivots) == 0:
        return None
    inside = np.flatnonzero(in_row_space(fld, basis, pivots, units))
    if inside.size == 0:
        return None
    w = units[inside[0]]
    gens = _independent_subset(fld, nonunits, len(pivots))
    coeffs = solve_left(fld, gens, w)
    partial = np.zeros(parent.dim, dtype=np.int64)
    for c, e in zip(coeffs, gens):
        if c == 0:
            continue
        term = fld.vmul(int(c), e)
        nxt = fld.vadd(partial, term)
        if parent.unit_mask(nxt[None, :])[0]:
            return partial, term
        partial = nxt
    raise AssertionError("unit in the span of non-units was not reached")


def _pair_witness(parent, a: np.ndarray, b: np.ndarray) -> dict:
    fld = parent.field
    s = fld.vadd(a, b)
    witness = {
        "a": parent.format(parent.from_vector(a)),
        "b": parent.format(parent.from_vector(b)),
        "a_plus_b": parent.format(parent.from_vector(s)),
    }
    if isinstance(parent, QuotientCtx):
        for name, v in (("a", a), ("b", b)):
            ann = parent.annihilator(parent.from_vector(v))
            witness[f"annihilator_of_{name}"] = parent.format(ann)
        inv = parent.inverse(parent.from_vector(s))
        witness["inverse_of_sum"] = parent.format(inv)
    return witness


def is_local(parent, max_enum: int = DEFAULT_MAX_ENUM) -> Report:
    """Local iff the non-units form an ideal, checked over every element.

    Quotient units are detected by the rank of their multiplication map; ring
    units by their constant coefficient.  A quotient too large to enumerate
    can still be shown non-local by a certified witness pair drawn from the
    subring F_q[x]/(x^n - 1); locality itself is never asserted without
    exhaustion.
    """
    params = _params(parent)
    fld = parent.field
    deviations: list[str] = []
    if parent.size <= max_enum:
        allv = parent.vector_array(max_enum)
        unit = parent.unit_mask(allv)
        nonunits, units = allv[~unit], allv[unit]
        basis, pivots = row_basis(fld, nonunits)
        additive = fld.q ** len(pivots) == len(nonunits)
        absorbs = True
        if additive and len(pivots):
            prods = _span_rows(parent, basis)
            absorbs = bool(np.all(in_row_space(fld, basis, pivots, prods)))
        stats = {"elements": len(allv), "units": int(unit.sum()), "non_units": len(nonunits),
                 "exhaustive": True}
        if additive and absorbs:
            ideal = IdealSet(parent, basis, tuple(pivots))
            return Report("local-ring", params, HOLDS,
                          {**stats, "maximal_ideal": ideal.describe()})
        pair = _non_unit_pair(parent, nonunits, units)
        if pair is None:
            raise AssertionError("non-units fail to absorb products in a commutative ring")
        return Report("local-ring", params, FAILS, {**stats, **_pair_witness(parent, *pair)})
    if not isinstance(parent, QuotientCtx):
        raise CapExceeded(f"locality of {parent.descriptor}", parent.size, max_enum)
    sub_size = fld.q**parent.n
    if sub_size > max_enum:
        raise CapExceeded(f"locality of {parent.descriptor}", parent.size, max_enum)
    # constant-coefficient polynomials: F_q[x]/(x^n-1) inside R[x]/(x^n-1)
    sub = np.zeros((sub_size, parent.n, parent.ring.s), dtype=np.int64)
    from .rings import _all_vectors

    sub[:, :, 0] = _all_vectors(fld.q, parent.n)
    sub = sub.reshape(sub_size, parent.dim)
    unit = parent.unit_mask(sub)
    pair = _non_unit_pair(parent, sub[~unit], sub[unit])
    if pair is None:
        raise CapExceeded(f"locality of {parent.descriptor}", parent.size, max_enum)
    deviations.append(
        f"{parent.size} elements exceed the cap {max_enum}; non-locality certified by an "
        "explicit witness pair from the subring F_q[x]/(x^n-1) instead of exhaustion"
    )
    witness = {"exhaustive": False, "searched": sub_size, **_pair_witness(parent, *pair)}
    return Report("local-ring", params, FAILS, witness, deviations)


# -- chain rings ------------------------------------------------------------------

def all_ideals(parent, max_enum: int = CHAIN_LIMIT) -> list[IdealSet]:
    """Every ideal, by closing I + (e) over all ideals I found and elements e.

    Elements with equal residue modulo I give the same I + (e), so only one
    representative per residue class is tried.
    """
    if parent.size > max_enum:
        raise CapExceeded("ideal enumeration", parent.size, max_enum)
    fld = parent.field
    allv = parent.vector_array(max_enum)
    zero = IdealSet(parent, np.zeros((0, parent.dim), dtype=np.int64), ())
    seen = {zero.key: zero}
    queue = [zero]
    while queue:
        ideal = queue.pop()
        res = reduce_against(fld, ideal.fq_basis, list(ideal.pivots), allv)
        res = np.unique(res[res.any(axis=1)], axis=0)
        for e in res:
            rows = np.concatenate([ideal.fq_basis, _span_rows(parent, e[None, :])])
            basis, pivots = row_basis(fld, rows)
            new = IdealSet(parent, basis, tuple(pivots))
            if new.key not in seen:
                seen[new.key] = new
                queue.append(new)
    return sorted(seen.values(), key=lambda i: (i.rank, i.key))


def _ideal_label(ideal: IdealSet) -> str:
    g = principal_generator(ideal)
    if g is None:
        return ideal.describe()
    if ideal.rank == 0:
        return "0"
    if ideal.rank == ideal.parent.dim:
        return "R"
    return f"({ideal.parent.format(ideal.parent.from_vector(g))})"


def chain_check(parent, max_enum: int = CHAIN_LIMIT) -> Report:
    """Are the ideals totally ordered by inclusion?"""
    ideals = all_ideals(parent, max_enum)
    labels = [_ideal_label(i) for i in ideals]
    for x in range(len(ideals)):
        for y in range(x + 1, len(ideals)):
            a, b = ideals[x], ideals[y]
            if not (a.issubset(b) or b.issubset(a)):
                return Report("chain-ring", _params(parent), FAILS, {
                    "ideal_count": len(ideals), "ideals": labels,
                    "incomparable": [labels[x], labels[y]],
                })
    return Report("chain-ring", _params(parent), HOLDS, {
        "ideal_count": len(ideals), "chain": " ⊂ ".join(labels),
    })


# -- factorizations of x^n - 1 ------------------------------------------------------

def _product(spec: RingSpec, factors) -> RingPoly:
    out = RingPoly.constant(spec.one())
    for f in factors:
        out = out * f
    return out


def factorization_witness(spec: RingSpec, n: int, candidates) -> Report:
    """Verify each candidate factor list multiplies to x^n - 1 exactly in R[x]."""
    target = RingPoly.x_n_minus_one(spec, n)
    verified, failed = [], []
    distinct: list[tuple] = []
    deviations = []
    for k, factors in enumerate(candidates):
        factors = list(factors)
        text = [format_poly(f) for f in factors]
        prod = _product(spec, factors)
        if prod == target:
            key = tuple(sorted(text))
            if key in distinct:
                deviations.append(
                    f"candidate {k} coincides with an earlier factorization once reduced in {spec.descriptor}"
                )
            else:
                distinct.append(key)
            verified.append(text)
        else:
            failed.append({"factors": text, "product": format_poly(prod)})
    ok = bool(candidates) and not failed
    witness = {
        "target": format_poly(target),
        "verified": verified,
        "failed": failed,
        "distinct_factorizations": len(distinct),
        "non_unique": len(distinct) > 1,
    }
    return Report("non-unique-factorization", {"ring": spec.descriptor, "n": n},
                  verdict(ok), witness, deviations)


def factorization_search(spec: RingSpec, n: int, max_enum: int = DEFAULT_MAX_ENUM) -> Report:
    """Find every monic linear factor x - (1 + m), m nilpotent, of x^n - 1."""
    if spec.size > max_enum:
        raise CapExceeded(f"factor search over {spec.descriptor}", spec.size, max_enum)
    target = RingPoly.x_n_minus_one(spec, n)
    found = []
    for v in spec.vector_array(max_enum):
        if v[0] != 0:
            continue  # only nilpotent m
        root = spec.one() + spec.from_vector(v)
        h = RingPoly.monomial(spec, 1) - RingPoly.constant(root)
        quot, rem = poly_divmod_monic(target, h)
        if not rem:
            found.append([h, quot])
    report = factorization_witness(spec, n, found)
    report.claim = "non-unique-factorization-search"
    report.witness["searched"] = int(spec.size // spec.field.q)
    return report


def non_principal_check(parent, generators, max_enum: int = DEFAULT_MAX_ENUM) -> Report:
    """Convenience wrapper: span ``generators`` and test principality."""
    if not generators:
        raise PreconditionError("need at least one generator")
    return is_principal(parent, ideal_span(parent, generators), max_enum)
