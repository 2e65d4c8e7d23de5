"""Objects and morphisms of the factorization category of a monoid.

An object is a finite tuple of monoid elements; the empty tuple is written
() and acts as the unit object.  A morphism (x_1..x_N) -> (y_1..y_M) is an
index function [M] -> [N] that is order-constrained: for every n, x_n is
below the product of the codomain entries mapped to n (the empty product
being the identity).  Note the reversal: the index function runs from
codomain positions to domain positions, and composition composes index
functions the opposite way round.

Index values are 1-based throughout, matching the wire format.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Mapping, Sequence

from .errors import CapabilityError, GuardError, InvalidMorphismError
from .monoids import Element, Monoid, ZX

HOM_ENUMERATION_GUARD = 10**7


@dataclass(frozen=True)
class FactorTuple:
    """An ordered tuple of monoid elements; length 0 is the unit object."""

    monoid: Monoid
    entries: tuple = ()

    def __post_init__(self):
        normalized = tuple(self.monoid.validate(e) for e in self.entries)
        object.__setattr__(self, "entries", normalized)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self) -> str:
        return "(" + ",".join(str(self.monoid.encode(e)) for e in self.entries) + ")"

    def product(self) -> Element:
        """Product of the entries; this is the product functor on objects."""
        return self.monoid.product(self.entries)


def empty_tuple(monoid: Monoid) -> FactorTuple:
    return FactorTuple(monoid, ())


def embed(monoid: Monoid, a: Element) -> FactorTuple:
    """The 1-tuple (a); this is the embedding functor on objects."""
    return FactorTuple(monoid, (a,))


def tuple_product(t: FactorTuple) -> Element:
    return t.product()


@dataclass(frozen=True)
class IndexFunction:
    """A total function [dom_size] -> [cod_size], stored 1-based.

    dom_size > 0 with cod_size == 0 is unrepresentable: there is no
    function from a non-empty index set into the empty one.
    """

    dom_size: int
    cod_size: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if self.dom_size < 0 or self.cod_size < 0:
            raise InvalidMorphismError("index set sizes must be non-negative")
        if self.dom_size > 0 and self.cod_size == 0:
            raise InvalidMorphismError("no function from a non-empty index set to the empty one")
        if len(self.values) != self.dom_size:
            raise InvalidMorphismError(
                f"expected {self.dom_size} values, got {len(self.values)}"
            )
        for v in self.values:
            if not isinstance(v, int) or not 1 <= v <= self.cod_size:
                raise InvalidMorphismError(
                    f"value {v!r} outside the 1-based range [{self.cod_size}]"
                )

    @staticmethod
    def identity(n: int) -> "IndexFunction":
        return IndexFunction(n, n, tuple(range(1, n + 1)))

    def is_injective(self) -> bool:
        return len(set(self.values)) == self.dom_size

    def is_surjective(self) -> bool:
        return len(set(self.values)) == self.cod_size

    def is_bijective(self) -> bool:
        return self.dom_size == self.cod_size and self.is_injective()


@dataclass(frozen=True)
class Morphism:
    """A validated morphism domain -> codomain.

    ``index_fn`` maps codomain positions to domain positions.  Construction
    checks the order constraint fiber by fiber and reports the first failing
    domain index, so every Morphism in existence is valid.  Two morphisms are
    equal when their tuples agree element-wise and their index functions agree.
    """

    domain: FactorTuple
    codomain: FactorTuple
    index_fn: IndexFunction

    def __post_init__(self):
        if self.domain.monoid != self.codomain.monoid:
            raise InvalidMorphismError("domain and codomain live in different monoids")
        n, m = len(self.domain), len(self.codomain)
        fn = self.index_fn
        if fn.dom_size != m or fn.cod_size != n:
            raise InvalidMorphismError(
                f"index function sizes [{fn.dom_size}]->[{fn.cod_size}] do not match "
                f"tuple lengths {m} and {n}"
            )
        monoid = self.domain.monoid
        fibers = [monoid.identity()] * n
        for pos, target in enumerate(fn.values):
            fibers[target - 1] = monoid.op(fibers[target - 1], self.codomain.entries[pos])
        for i, x in enumerate(self.domain.entries):
            if not monoid.leq(x, fibers[i]):
                raise InvalidMorphismError(
                    f"order constraint fails at domain index {i + 1}: "
                    f"{monoid.encode(x)} is not below the fiber product "
                    f"{monoid.encode(fibers[i])}"
                )

    @property
    def monoid(self) -> Monoid:
        return self.domain.monoid

    @property
    def values(self) -> tuple[int, ...]:
        return self.index_fn.values

    def __str__(self) -> str:
        return f"{self.domain} -> {self.codomain} via {list(self.values)}"


def validate_morphism(
    domain: FactorTuple,
    codomain: FactorTuple,
    index_values: IndexFunction | Sequence[int],
) -> Morphism:
    """Build the morphism for the given 1-based map, checking the order
    constraint; raises InvalidMorphismError naming the first failing index."""
    if isinstance(index_values, IndexFunction):
        fn = index_values
    else:
        fn = IndexFunction(len(codomain), len(domain), tuple(index_values))
    return Morphism(domain, codomain, fn)


def identity_morphism(t: FactorTuple) -> Morphism:
    return Morphism(t, t, IndexFunction.identity(len(t)))


def compose(g: Morphism, f: Morphism) -> Morphism:
    """The composite g after f; f's codomain must equal g's domain.

    On index functions this is composition the other way round: the result
    sends a position k of g's codomain to f.values[g.values[k]].
    """
    if f.codomain != g.domain:
        raise InvalidMorphismError(
            "cannot compose: codomain of the first-applied morphism differs "
            "from the domain of the second"
        )
    fv = f.values
    values = tuple(fv[v - 1] for v in g.values)
    return Morphism(
        f.domain, g.codomain, IndexFunction(len(g.codomain), len(f.domain), values)
    )


@lru_cache(maxsize=None)
def hom_index_tuples(domain: FactorTuple, codomain: FactorTuple) -> tuple[tuple[int, ...], ...]:
    """All order-constrained index-value tuples domain <- codomain, in
    lexicographic order of the value sequence.

    Enumerates the N^M candidate functions depth-first, pruning a branch as
    soon as some fiber can no longer satisfy its constraint.  Requests with
    N^M above the 10^7 guard are rejected.  Results are cached.
    """
    monoid = domain.monoid
    if codomain.monoid != monoid:
        raise InvalidMorphismError("hom sets need both tuples over the same monoid")
    n, m = len(domain), len(codomain)
    if n == 0:
        # no functions into the empty index set except from itself
        return ((),) if m == 0 else ()
    if n > 1 and n**m > HOM_ENUMERATION_GUARD:
        raise GuardError(f"hom enumeration over {n}^{m} candidates exceeds the 10^7 guard")
    xs, ys = domain.entries, codomain.entries
    one = monoid.identity()
    suffix = [one] * (m + 1)
    for pos in range(m - 1, -1, -1):
        suffix[pos] = monoid.op(ys[pos], suffix[pos + 1])
    feasible = monoid.fiber_feasible
    leq = monoid.leq
    out: list[tuple[int, ...]] = []
    assign: list[int] = []
    fibers = [one] * n

    def walk(pos: int) -> None:
        if pos == m:
            if all(leq(xs[i], fibers[i]) for i in range(n)):
                out.append(tuple(assign))
            return
        rest = suffix[pos]
        for i in range(n):
            if not feasible(xs[i], fibers[i], rest):
                return
        y = ys[pos]
        for target in range(n):
            before = fibers[target]
            fibers[target] = monoid.op(before, y)
            assign.append(target + 1)
            walk(pos + 1)
            assign.pop()
            fibers[target] = before

    walk(0)
    return tuple(out)


def hom_set(domain: FactorTuple, codomain: FactorTuple) -> list[Morphism]:
    """All morphisms domain -> codomain, ordered lexicographically by map."""
    m, n = len(codomain), len(domain)
    return [
        Morphism(domain, codomain, IndexFunction(m, n, values))
        for values in hom_index_tuples(domain, codomain)
    ]


def _require_divisibility(monoid: Monoid, what: str) -> None:
    if not monoid.is_divisibility:
        raise CapabilityError(f"{what} is only available over divisibility monoids")


def is_epic(m: Morphism) -> bool:
    """Epic exactly when the index function is injective (divisibility only)."""
    _require_divisibility(m.monoid, "is_epic")
    return m.index_fn.is_injective()


def is_monic(m: Morphism) -> bool:
    """Monic exactly when the index function is surjective (divisibility only)."""
    _require_divisibility(m.monoid, "is_monic")
    return m.index_fn.is_surjective()


def is_isomorphism(m: Morphism) -> bool:
    """Iso iff the tuples have equal length, the index function is a
    bijection, and matched entries are associates."""
    _require_divisibility(m.monoid, "is_isomorphism")
    fn = m.index_fn
    if not fn.is_bijective():
        return False
    monoid = m.monoid
    xs, ys = m.domain.entries, m.codomain.entries
    return all(
        monoid.are_associates(xs[target - 1], ys[pos])
        for pos, target in enumerate(fn.values)
    )


def inverse(m: Morphism) -> Morphism | None:
    """The inverse morphism when m is an isomorphism, else None."""
    if not is_isomorphism(m):
        return None
    n = len(m.domain)
    inv = [0] * n
    for pos, target in enumerate(m.values, start=1):
        inv[target - 1] = pos
    return Morphism(
        m.codomain, m.domain, IndexFunction(n, len(m.codomain), tuple(inv))
    )


def is_initial(t: FactorTuple) -> bool:
    """Initial objects are exactly the 1-tuples on an invertible element."""
    _require_divisibility(t.monoid, "is_initial")
    return len(t) == 1 and t.monoid.is_invertible(t.entries[0])


def refute_terminal(t: FactorTuple) -> FactorTuple:
    """A 1-tuple (a) with no morphism (a) -> t, witnessing that t is not
    terminal.  For the integers, a is the smallest prime exceeding |prod t|;
    for free monoids it is one more copy of the first generator than the
    product holds."""
    _require_divisibility(t.monoid, "refute_terminal")
    witness = t.monoid.fresh_non_divisor(t.product())
    return FactorTuple(t.monoid, (witness,))


def underlying_function(m: Morphism) -> IndexFunction:
    """The index function of a morphism (the presheaf of index sets on maps)."""
    return m.index_fn


class MonoidHom:
    """An order-respecting monoid homomorphism between shipped instances.

    Supported maps: the identity on any instance, the inclusion of the
    positive integers into the nonzero integers, and free-monoid maps that
    assign a prime integer to each generator.  Applying one to a morphism
    maps both tuples entry-wise and keeps the index function.
    """

    def __init__(self, source: Monoid, target: Monoid, elem_map: Callable, label: str):
        self.source = source
        self.target = target
        self._elem_map = elem_map
        self.label = label

    def __repr__(self) -> str:
        return f"MonoidHom({self.label})"

    def __call__(self, a: Element) -> Element:
        return self.target.validate(self._elem_map(self.source.validate(a)))

    @classmethod
    def identity(cls, monoid: Monoid) -> "MonoidHom":
        return cls(monoid, monoid, lambda a: a, f"id[{monoid.name}]")

    @classmethod
    def naturals_into_integers(cls) -> "MonoidHom":
        from .monoids import NAT

        return cls(NAT, ZX, lambda a: a, "nat->zx")

    @classmethod
    def primes_for_generators(cls, source: Monoid, assignment: Mapping[str, int]) -> "MonoidHom":
        """Free monoid into the integers, sending each generator to a prime."""
        generators = getattr(source, "generators", None)
        if generators is None:
            raise ValueError("primes_for_generators needs a free monoid source")
        for g in generators:
            if g not in assignment:
                raise ValueError(f"no image assigned to generator {g!r}")
            if not ZX.is_prime(assignment[g]):
                raise ValueError(f"image of {g!r} must be a prime integer")

        def apply(a):
            out = 1
            for g in a:
                out *= assignment[g]
            return out

        label = source.name + "->zx[" + ",".join(f"{g}:{assignment[g]}" for g in generators) + "]"
        return cls(source, ZX, apply, label)


def map_tuple(hom: MonoidHom, t: FactorTuple) -> FactorTuple:
    if t.monoid != hom.source:
        raise ValueError(f"tuple lives in {t.monoid.name}, not {hom.source.name}")
    return FactorTuple(hom.target, tuple(hom(a) for a in t.entries))


def map_morphism(hom: MonoidHom, m: Morphism) -> Morphism:
    """Apply a monoid homomorphism to a morphism; the image is validated in
    the target category on construction."""
    return Morphism(map_tuple(hom, m.domain), map_tuple(hom, m.codomain), m.index_fn)
