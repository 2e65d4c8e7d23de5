"""Quotient witnesses, weak equivalences, and the canonical decomposition.

Over a divisibility monoid every morphism (x_n) -> (y_m) determines unique
elements r_n with r_n * x_n equal to the n-th fiber product, and a total
witness r = prod r_n with r * prod x = prod y; cancellativity makes both
unique.  A morphism is a weak equivalence when its codomain is the empty
tuple or every r_n is invertible (equivalently, r is invertible).

Every morphism between non-empty tuples factors as drop-units, then a
divisibility step, then a refactoring step; the middle step is an
isomorphism exactly for the weak equivalences.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapabilityError, InvalidMorphismError
from .monoids import Element
from .category import (
    FactorTuple,
    IndexFunction,
    Morphism,
    compose,
    validate_morphism,
)

WEAK_EQUIVALENCE = "weak_equivalence"
PROPER = "proper"


def _require_divisibility(m: Morphism, what: str) -> None:
    if not m.monoid.is_divisibility:
        raise CapabilityError(f"{what} is only available over divisibility monoids")


@dataclass(frozen=True)
class QuotientWitness:
    """The per-index elements r_n and their product r.

    For a morphism into the empty tuple the per-index part is empty and the
    total is the inverse of the domain product, which is invertible because
    the morphism exists.
    """

    per_index: tuple
    total: Element


def quotient_witnesses(m: Morphism) -> QuotientWitness:
    _require_divisibility(m, "quotient_witnesses")
    monoid = m.monoid
    if len(m.codomain) == 0:
        total = monoid.exact_divide(m.domain.product(), monoid.identity())
        return QuotientWitness((), total)
    n = len(m.domain)
    fibers = [monoid.identity()] * n
    for pos, target in enumerate(m.values):
        fibers[target - 1] = monoid.op(fibers[target - 1], m.codomain.entries[pos])
    per = tuple(
        monoid.exact_divide(x, fibers[i]) for i, x in enumerate(m.domain.entries)
    )
    return QuotientWitness(per, monoid.product(per))


def total_witness(m: Morphism) -> Element:
    """The unique r with r * prod(domain) == prod(codomain)."""
    return quotient_witnesses(m).total


def is_weak_equivalence(m: Morphism) -> bool:
    _require_divisibility(m, "is_weak_equivalence")
    if len(m.codomain) == 0:
        return True
    w = quotient_witnesses(m)
    return all(m.monoid.is_invertible(r) for r in w.per_index)


@dataclass(frozen=True)
class EIPDecomposition:
    """Drop-units / divisibility / refactor decomposition of a morphism.

    ``epsilon`` drops the domain entries outside the image (all invertible)
    keeping the rest in order, ``delta`` multiplies coordinate p by the
    ratio a_p, and ``phi`` refactors onto the original codomain.  The
    composite phi o delta o epsilon equals the decomposed morphism, and
    the total witness equals dropped_unit * prod(ratios).
    """

    epsilon: Morphism
    delta: Morphism
    phi: Morphism
    ratios: tuple
    dropped_unit: Element

    def composed(self) -> Morphism:
        return compose(self.phi, compose(self.delta, self.epsilon))


def decompose_eip(m: Morphism) -> EIPDecomposition:
    _require_divisibility(m, "decompose_eip")
    if len(m.domain) == 0 or len(m.codomain) == 0:
        raise ValueError("the decomposition needs non-empty domain and codomain")
    monoid = m.monoid
    values = m.values
    image = sorted(set(values))  # n_1 < ... < n_P
    p_count = len(image)
    xs = m.domain.entries
    kept = FactorTuple(monoid, tuple(xs[n - 1] for n in image))
    epsilon = Morphism(
        m.domain, kept, IndexFunction(p_count, len(m.domain), tuple(image))
    )
    position = {n: p for p, n in enumerate(image, start=1)}
    fibers = [monoid.identity()] * p_count
    for pos, target in enumerate(values):
        p = position[target] - 1
        fibers[p] = monoid.op(fibers[p], m.codomain.entries[pos])
    ratios = tuple(
        monoid.exact_divide(kept.entries[p], fibers[p]) for p in range(p_count)
    )
    scaled = FactorTuple(
        monoid, tuple(monoid.op(ratios[p], kept.entries[p]) for p in range(p_count))
    )
    delta = Morphism(kept, scaled, IndexFunction.identity(p_count))
    phi_values = tuple(position[v] for v in values)
    phi = Morphism(
        scaled, m.codomain, IndexFunction(len(m.codomain), p_count, phi_values)
    )
    dropped = monoid.product(xs[n - 1] for n in range(1, len(xs) + 1) if n not in position)
    return EIPDecomposition(epsilon, delta, phi, ratios, dropped)


def classify_by_delta(m: Morphism) -> str:
    """'weak_equivalence' when every ratio of the middle divisibility step is
    invertible (i.e. the step is an isomorphism), else 'proper'.  Always
    agrees with is_weak_equivalence."""
    d = decompose_eip(m)
    monoid = m.monoid
    if all(monoid.is_invertible(a) for a in d.ratios):
        return WEAK_EQUIVALENCE
    return PROPER


def ore_square(f: Morphism, g: Morphism) -> tuple[Morphism, Morphism]:
    """Complete the cospan f: (x_n)->(y_m) in W, g: (z_p)->(y_m) to a
    commuting square over the 1-tuple (prod z).

    Returns (f', g') with f': (prod z) -> (z_p) a factorization morphism in
    W and g': (prod z) -> (x_n); commutativity f o g' == g o f' is verified
    and an internal failure raises RuntimeError.
    """
    if f.monoid != g.monoid:
        raise ValueError("both morphisms must live over the same monoid")
    if not is_weak_equivalence(f):
        raise ValueError("the first morphism must be a weak equivalence")
    if f.codomain != g.codomain:
        raise InvalidMorphismError("the cospan legs must share a codomain")
    monoid = f.monoid
    apex = FactorTuple(monoid, (g.domain.product(),))
    f_prime = validate_morphism(apex, g.domain, [1] * len(g.domain))
    g_prime = validate_morphism(apex, f.domain, [1] * len(f.domain))
    if compose(f, g_prime) != compose(g, f_prime):
        raise RuntimeError("internal: completed square does not commute")
    return f_prime, g_prime


def right_cancel_witness(f: Morphism, f2: Morphism, g: Morphism) -> Morphism:
    """Given parallel f, f2 and a weak equivalence g with g o f == g o f2,
    return the factorization morphism h: (prod x) -> (x_n), which is in W
    and satisfies f o h == f2 o h."""
    if f.domain != f2.domain or f.codomain != f2.codomain:
        raise InvalidMorphismError("the first two morphisms must be parallel")
    if not is_weak_equivalence(g):
        raise ValueError("the cancelling morphism must be a weak equivalence")
    if compose(g, f) != compose(g, f2):
        raise ValueError("the composites with the weak equivalence differ")
    monoid = f.monoid
    apex = FactorTuple(monoid, (f.domain.product(),))
    h = validate_morphism(apex, f.domain, [1] * len(f.domain))
    if compose(f, h) != compose(f2, h):
        raise RuntimeError("internal: right cancellation witness failed")
    return h
