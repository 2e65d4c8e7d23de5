"""Weak divisibility, weak irreducibility/primality, and atomic chains.

A morphism f weakly divides g when the total witness of f divides the total
witness of g; this single division is decidable, and the tensored square
exhibiting the relation is produced separately as a checkable witness.
Classification of a morphism as weakly irreducible or weakly prime reduces
to irreducibility or primality of its total witness, and counting
irreducible factors of witnesses yields the additive length functions used
by the factorization-property probes.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import CapabilityError, GuardError, InvalidMorphismError
from .monoids import Element, Monoid, FreeCommutative
from .category import (
    FactorTuple,
    IndexFunction,
    Morphism,
    compose,
    identity_morphism,
    validate_morphism,
)
from .monoidal import tensor_objects, tensor_morphisms
from .weq import decompose_eip, is_weak_equivalence, total_witness

WEQ_TAG = "weak_equivalence"
WIRR_TAG = "weakly_irreducible"

FACTORIZATION_ENUMERATION_BOUND = 10**6


def _same_monoid(f: Morphism, g: Morphism) -> None:
    if f.monoid != g.monoid:
        raise ValueError("both morphisms must live over the same monoid")


def weakly_divides(f: Morphism, g: Morphism) -> bool:
    """Whether f weakly divides g: with s, r the total witnesses of f and g,
    decide s | r."""
    _same_monoid(f, g)
    s = total_witness(f)
    r = total_witness(g)
    return f.monoid.leq(s, r)


@dataclass(frozen=True)
class WeakDivDiagram:
    """The tensored square exhibiting f weakly dividing g.

    With a = prod(dom f) and b = prod(dom g), mu and eta are factorization
    morphisms in W out of the 1-tuples (a * prod dom g) and
    (b * prod cod f); alpha and beta are the other horizontals, and
    left/right are the tensored verticals (a) (x) g and (b) (x) f.
    """

    a: Element
    b: Element
    mu: Morphism
    alpha: Morphism
    beta: Morphism
    eta: Morphism
    left: Morphism
    right: Morphism


def weak_div_diagram(f: Morphism, g: Morphism) -> WeakDivDiagram:
    if not weakly_divides(f, g):
        raise ValueError("no diagram: f does not weakly divide g")
    monoid = f.monoid
    a = f.domain.product()
    b = g.domain.product()
    a_t = FactorTuple(monoid, (a,))
    b_t = FactorTuple(monoid, (b,))
    top_mid = FactorTuple(monoid, (monoid.op(a, b),))
    bot_mid = FactorTuple(monoid, (monoid.op(b, f.codomain.product()),))
    mu = validate_morphism(top_mid, tensor_objects(a_t, g.domain), [1] * (1 + len(g.domain)))
    alpha = validate_morphism(top_mid, tensor_objects(b_t, f.domain), [1] * (1 + len(f.domain)))
    beta = validate_morphism(bot_mid, tensor_objects(a_t, g.codomain), [1] * (1 + len(g.codomain)))
    eta = validate_morphism(bot_mid, tensor_objects(b_t, f.codomain), [1] * (1 + len(f.codomain)))
    left = tensor_morphisms(identity_morphism(a_t), g)
    right = tensor_morphisms(identity_morphism(b_t), f)
    if not (is_weak_equivalence(mu) and is_weak_equivalence(eta)):
        raise RuntimeError("internal: diagram rows are not weak equivalences")
    return WeakDivDiagram(a, b, mu, alpha, beta, eta, left, right)


def weakly_associate(f: Morphism, g: Morphism) -> bool:
    """Mutual weak divisibility: the total witnesses are associates."""
    _same_monoid(f, g)
    return f.monoid.are_associates(total_witness(f), total_witness(g))


def is_weakly_irreducible(m: Morphism) -> bool:
    """Whether the total witness is irreducible in the monoid."""
    return m.monoid.is_irreducible(total_witness(m))


def is_weakly_prime(m: Morphism) -> bool:
    """Whether the total witness is prime; implies weakly irreducible."""
    return m.monoid.is_prime(total_witness(m))


def _unit_source_morphism(t: FactorTuple) -> Morphism:
    one = FactorTuple(t.monoid, (t.monoid.identity(),))
    return validate_morphism(one, t, [1] * len(t))


def is_weakly_irreducible_tuple(t: FactorTuple) -> bool:
    """Classify the morphism (1) -> t; equals irreducibility of prod t,
    and the empty tuple is never weakly irreducible."""
    return is_weakly_irreducible(_unit_source_morphism(t))


def is_weakly_prime_tuple(t: FactorTuple) -> bool:
    return is_weakly_prime(_unit_source_morphism(t))


@dataclass(frozen=True)
class AtomicChain:
    """A decomposition into weak equivalences and weakly irreducible steps.

    The steps compose left to right to the decomposed morphism, each tag
    names the class of its step, and irr_count is the number of weakly
    irreducible steps (the length of the morphism's witness).
    """

    steps: tuple[Morphism, ...]
    tags: tuple[str, ...]
    irr_count: int

    def composed(self) -> Morphism:
        out = self.steps[0]
        for step in self.steps[1:]:
            out = compose(step, out)
        return out


def atomic_chain(m: Morphism) -> AtomicChain:
    """Decompose a morphism between non-empty tuples into weak equivalences
    and weakly irreducible divisibility steps.

    A weak equivalence stays a single step.  Otherwise the chain is the
    drop-units step, one divisibility step per irreducible factor of each
    ratio (coordinates ascending, factors in canonical order), and a final
    weak equivalence that folds the leftover units into the refactoring
    step.  Identity steps at either end are omitted.
    """
    if len(m.domain) == 0 or len(m.codomain) == 0:
        raise ValueError("atomic chains need non-empty domain and codomain")
    if is_weak_equivalence(m):
        return AtomicChain((m,), (WEQ_TAG,), 0)
    monoid = m.monoid
    d = decompose_eip(m)
    steps: list[Morphism] = []
    tags: list[str] = []
    if d.epsilon != identity_morphism(m.domain):
        steps.append(d.epsilon)
        tags.append(WEQ_TAG)
    current = list(d.epsilon.codomain.entries)
    ident = IndexFunction.identity(len(current))
    for p, ratio in enumerate(d.ratios):
        _, factors = monoid.factor_irreducibles(ratio)
        for q in factors:
            scaled = list(current)
            scaled[p] = monoid.op(q, current[p])
            step = Morphism(
                FactorTuple(monoid, tuple(current)),
                FactorTuple(monoid, tuple(scaled)),
                ident,
            )
            steps.append(step)
            tags.append(WIRR_TAG)
            current = scaled
    tail_dom = FactorTuple(monoid, tuple(current))
    tail = Morphism(tail_dom, m.codomain, d.phi.index_fn)
    if tail != identity_morphism(tail_dom):
        steps.append(tail)
        tags.append(WEQ_TAG)
    return AtomicChain(tuple(steps), tuple(tags), tags.count(WIRR_TAG))


def zeta_elt(monoid: Monoid, a: Element) -> int:
    """Number of irreducible factors of a; zero exactly on the units."""
    _, factors = monoid.factor_irreducibles(a)
    return len(factors)


def zeta_mor(m: Morphism) -> int:
    """Irreducible-factor count of the total witness.  Additive under
    composition; zero iff weak equivalence, one iff weakly irreducible."""
    return zeta_elt(m.monoid, total_witness(m))


def zeta_obj(t: FactorTuple) -> int:
    """Irreducible-factor count of the tuple product; additive under tensor."""
    return zeta_elt(t.monoid, t.product())


def divisor_class_representatives(monoid: Monoid, r: Element) -> list:
    """One canonical representative per associate class of divisors of r:
    positive divisors ascending over the integers, sub-multisets ordered by
    size then name over free monoids."""
    if isinstance(monoid, FreeCommutative):
        subsets: list[tuple] = [()]
        for g in sorted(set(r)):
            count = r.count(g)
            subsets = [s + (g,) * k for s in subsets for k in range(count + 1)]
        return sorted(set(tuple(sorted(s)) for s in subsets), key=lambda s: (len(s), s))
    if not monoid.is_divisibility:
        raise CapabilityError("divisor classes need a divisibility monoid")
    n = abs(r)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def weak_divisor_classes(m: Morphism) -> list:
    """Representatives of the weak divisors of m up to weak associates,
    i.e. the divisor classes of its total witness."""
    return divisor_class_representatives(m.monoid, total_witness(m))


def chain_stabilizes(chain) -> int | None:
    """First 1-based index from which every later morphism in the chain is a
    weak equivalence, or None if the given finite prefix never stabilizes.

    The chain is oriented with arrows pointing left: entry i maps into the
    domain of entry i-1, so consecutive entries must compose.
    """
    steps = list(chain)
    if not steps:
        raise ValueError("chain must contain at least one morphism")
    for i in range(len(steps) - 1):
        if steps[i].domain != steps[i + 1].codomain:
            raise InvalidMorphismError(f"chain break between entries {i + 1} and {i + 2}")
    index = 1
    for i, step in enumerate(steps, start=1):
        if not is_weak_equivalence(step):
            index = i + 1
    return index if index <= len(steps) else None


@dataclass(frozen=True)
class IrreducibleFactorizations:
    """Factorizations into irreducibles, one per class up to associates and
    reordering, with a flag marking truncation at the requested cap."""

    classes: tuple[tuple, ...]
    truncated: bool


def _scan_irreducible_int(d: int) -> bool:
    return d >= 2 and all(d % e for e in range(2, isqrt(d) + 1))


def _int_factorizations(n: int, start: int):
    if n == 1:
        yield ()
        return
    d = start
    while d <= n:
        if n % d == 0 and _scan_irreducible_int(d):
            for rest in _int_factorizations(n // d, d):
                yield (d,) + rest
        d += 1


def _multiset_factorizations(rest: tuple, start: str):
    if not rest:
        yield ()
        return
    for g in sorted(set(rest)):
        if g >= start:
            reduced = list(rest)
            reduced.remove(g)
            for tail in _multiset_factorizations(tuple(reduced), g):
                yield ((g,),) + tail


def enumerate_irreducible_factorizations(
    monoid: Monoid, a: Element, max_count: int = 10_000
) -> IrreducibleFactorizations:
    """All factorizations of a into irreducibles, up to associates and
    reordering, by brute-force divisor recursion.

    This is deliberately independent of factor_irreducibles so it can serve
    as a ground-truth oracle; on the shipped instances it always finds
    exactly one class.  Units have the single empty factorization.  Integer
    inputs beyond 10**6 in absolute value are rejected rather than scanned.
    """
    if not monoid.is_ufd:
        raise CapabilityError(
            "factorization enumeration is shipped for the UFD instances only"
        )
    a = monoid.validate(a)
    if isinstance(monoid, FreeCommutative):
        source = _multiset_factorizations(a, "")
    else:
        n = abs(a)
        if n > FACTORIZATION_ENUMERATION_BOUND:
            raise GuardError(
                f"divisor recursion bound 10^6 exceeded by |{monoid.encode(a)}|"
            )
        source = _int_factorizations(n, 2)
    classes: list[tuple] = []
    truncated = False
    for item in source:
        if len(classes) >= max_count:
            truncated = True
            break
        classes.append(item)
    return IrreducibleFactorizations(tuple(classes), truncated)


@dataclass(frozen=True)
class WedgeDiagram:
    """The wedge through the 1-tuple on the product of two non-associate
    irreducible cores: both legs into the apex are weakly irreducible and
    the apex maps on into the shared target."""

    apex: FactorTuple
    from_left: Morphism
    from_right: Morphism
    to_target: Morphism


def _irreducible_core_index(monoid: Monoid, entries: tuple) -> int:
    for i, e in enumerate(entries):
        if not monoid.is_invertible(e):
            return i
    raise ValueError("no non-invertible entry found")


def ufd_wedge(f: Morphism, g: Morphism):
    """Resolve two weakly irreducible sources over a shared target.

    When the irreducible cores of the source tuples are associates, returns
    the weak equivalence (v_i) -> (w_j) routed through the cores.  Otherwise
    returns the WedgeDiagram on the 1-tuple of the cores' product, whose
    membership in the target is guaranteed over a UFD and asserted here.
    """
    _same_monoid(f, g)
    monoid = f.monoid
    if not monoid.is_ufd:
        raise CapabilityError("the wedge construction is shipped for UFD instances only")
    if f.codomain != g.codomain:
        raise InvalidMorphismError("both morphisms must share a codomain")
    if not is_weakly_irreducible_tuple(f.domain) or not is_weakly_irreducible_tuple(g.domain):
        raise ValueError("both domains must be weakly irreducible tuples")
    v = f.domain.entries
    w = g.domain.entries
    i0 = _irreducible_core_index(monoid, v)
    j0 = _irreducible_core_index(monoid, w)
    if monoid.are_associates(v[i0], w[j0]):
        link = validate_morphism(f.domain, g.domain, [i0 + 1] * len(g.domain))
        if not is_weak_equivalence(link):
            raise RuntimeError("internal: associate cores gave a non-equivalence")
        return link
    apex = FactorTuple(monoid, (monoid.op(v[i0], w[j0]),))
    from_left = validate_morphism(f.domain, apex, [i0 + 1])
    from_right = validate_morphism(g.domain, apex, [j0 + 1])
    try:
        to_target = validate_morphism(apex, f.codomain, [1] * len(f.codomain))
    except InvalidMorphismError as exc:  # impossible over a UFD
        raise RuntimeError(f"internal: wedge apex does not divide the target: {exc}")
    if not (is_weakly_irreducible(from_left) and is_weakly_irreducible(from_right)):
        raise RuntimeError("internal: wedge legs are not weakly irreducible")
    return WedgeDiagram(apex, from_left, from_right, to_target)
