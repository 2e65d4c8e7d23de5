"""Brute-force law verification over bounded universes of tuples.

Each suite cross-checks a fast predicate against an independent formulation:
counting formulas against raw hom-set enumeration, the epic/monic
predicates against cancellation probes built by appending a unit entry,
the isomorphism predicate against a brute-force inverse search, weak
divisibility against the product-divisibility criterion, and so on.
Failures are reported in-band with serialized counterexamples that can be
re-run through :func:`recheck`.

Suites are exhaustive while the case count stays within the universe's
limit and fall back to seeded sampling beyond it, so every report is
deterministic for a given UniverseSpec.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as iter_product
from typing import Callable, Iterable, Mapping

from .errors import CapabilityError, GuardError
from .monoids import ZX, NAT, Monoid, monoid_by_name
from .category import (
    FactorTuple,
    IndexFunction,
    Morphism,
    compose,
    empty_tuple,
    embed,
    hom_index_tuples,
    hom_set,
    identity_morphism,
    inverse,
    is_epic,
    is_isomorphism,
    is_monic,
)
from .monoidal import (
    braiding,
    braiding_involution_holds,
    braiding_is_natural,
    hexagon_holds,
    tensor_morphisms,
    tensor_objects,
    tensor_respects_composition,
)
from .weq import is_weak_equivalence
from .divisibility import weak_div_diagram, weakly_divides
from .encoding import decode_morphism, decode_tuple, encode_morphism, encode_tuple

DEFAULT_POOL = (-1, 1, 2, 3, 5, 6)

UNIVERSE_OBJECT_GUARD = 2000


@dataclass(frozen=True)
class UniverseSpec:
    """A bounded universe: a pool of elements, a tuple-length cap, and the
    determinism knobs (seed, exhaustive limit, sample size)."""

    monoid: Monoid = ZX
    pool: tuple = DEFAULT_POOL
    max_len: int = 3
    max_chain: int = 3
    seed: int = 0
    exhaustive_limit: int = 1_000_000
    sample_size: int = 20_000

    def __post_init__(self):
        seen = []
        for e in self.pool:
            v = self.monoid.validate(e)
            if v not in seen:
                seen.append(v)
        object.__setattr__(self, "pool", tuple(seen))
        if self.max_len < 0 or self.max_chain < 1:
            raise ValueError("universe bounds must be positive")
        if self.exhaustive_limit < 1 or self.sample_size < 1:
            raise ValueError("universe limits must be positive")


@dataclass
class SuiteReport:
    """Outcome of one suite: cases run and counterexample payloads."""

    suite: str
    monoid: str
    cases: int = 0
    failures: list = field(default_factory=list)

    MAX_STORED = 50

    def check(self, ok: bool, law: str, payload: Callable[[], dict]) -> None:
        self.cases += 1
        if not ok and len(self.failures) < self.MAX_STORED:
            entry = {"law": law, "monoid": self.monoid}
            entry.update(payload())
            self.failures.append(entry)

    @property
    def passed(self) -> bool:
        return not self.failures


# -- universe enumeration (cached per universe) ------------------------------


@lru_cache(maxsize=16)
def universe_objects(u: UniverseSpec) -> tuple[FactorTuple, ...]:
    count = sum(len(u.pool) ** k for k in range(u.max_len + 1))
    if count > UNIVERSE_OBJECT_GUARD:
        raise GuardError(
            f"universe has {count} objects; the guard is {UNIVERSE_OBJECT_GUARD}"
        )
    out = [empty_tuple(u.monoid)]
    for k in range(1, u.max_len + 1):
        for combo in iter_product(u.pool, repeat=k):
            out.append(FactorTuple(u.monoid, combo))
    return tuple(out)


@lru_cache(maxsize=16)
def universe_homs(u: UniverseSpec) -> dict:
    """Map (domain, codomain) -> index tuples, for non-empty hom sets only."""
    objs = universe_objects(u)
    homs = {}
    for a in objs:
        for b in objs:
            fns = hom_index_tuples(a, b)
            if fns:
                homs[(a, b)] = fns
    return homs


def _mk(a: FactorTuple, b: FactorTuple, values: tuple[int, ...]) -> Morphism:
    return Morphism(a, b, IndexFunction(len(b), len(a), values))


@lru_cache(maxsize=16)
def universe_morphisms(u: UniverseSpec) -> tuple[Morphism, ...]:
    out = []
    for (a, b), fns in universe_homs(u).items():
        out.extend(_mk(a, b, v) for v in fns)
    return tuple(out)


@lru_cache(maxsize=16)
def _morphisms_by_domain(u: UniverseSpec) -> dict:
    by_dom = defaultdict(list)
    for m in universe_morphisms(u):
        by_dom[m.domain].append(m)
    return dict(by_dom)


def _rng(u: UniverseSpec, suite: str) -> random.Random:
    return random.Random(f"{u.seed}:{suite}")


def _pairs(items, u: UniverseSpec, rng: random.Random):
    """All ordered pairs when within the limit, else a seeded sample."""
    if len(items) ** 2 <= u.exhaustive_limit:
        for x in items:
            for y in items:
                yield x, y
    else:
        size = len(items)
        for _ in range(u.sample_size):
            yield items[rng.randrange(size)], items[rng.randrange(size)]


def _triples(items, u: UniverseSpec, rng: random.Random):
    if len(items) ** 3 <= u.exhaustive_limit:
        for x in items:
            for y in items:
                for z in items:
                    yield x, y, z
    else:
        size = len(items)
        for _ in range(u.sample_size):
            yield (
                items[rng.randrange(size)],
                items[rng.randrange(size)],
                items[rng.randrange(size)],
            )


def _composable_pairs(u: UniverseSpec, rng: random.Random):
    """Pairs (f, g) with g composable after f, exhaustive or sampled."""
    morphs = universe_morphisms(u)
    by_dom = _morphisms_by_domain(u)
    total = sum(len(by_dom.get(m.codomain, ())) for m in morphs)
    if total <= u.exhaustive_limit:
        for f in morphs:
            for g in by_dom.get(f.codomain, ()):
                yield f, g
    else:
        size = len(morphs)
        for _ in range(u.sample_size):
            f = morphs[rng.randrange(size)]
            outs = by_dom[f.codomain]  # never empty: the identity is there
            yield f, outs[rng.randrange(len(outs))]


def _require_divisibility(u: UniverseSpec, suite: str) -> None:
    if not u.monoid.is_divisibility:
        raise CapabilityError(f"suite {suite!r} needs a divisibility universe")


# -- law predicates (shared by the suites and recheck) -----------------------


def _count_from_empty_ok(monoid: Monoid, t: FactorTuple) -> bool:
    count = len(hom_index_tuples(empty_tuple(monoid), t))
    return count == (1 if len(t) == 0 else 0)


def _count_into_empty_ok(monoid: Monoid, t: FactorTuple) -> bool:
    count = len(hom_index_tuples(t, empty_tuple(monoid)))
    if count > 1:
        return False
    one = monoid.identity()
    expected = 1 if all(monoid.leq(x, one) for x in t.entries) else 0
    return count == expected


def _count_interval_into_empty_ok(monoid: Monoid, t: FactorTuple) -> bool:
    # over the unit interval every tuple maps to the empty tuple, exactly once
    return len(hom_index_tuples(t, empty_tuple(monoid))) == 1


def _count_singleton_source_ok(monoid: Monoid, y, t: FactorTuple) -> bool:
    count = len(hom_index_tuples(embed(monoid, y), t))
    return count == (1 if monoid.leq(y, t.product()) else 0)


def _count_singleton_target_ok(monoid: Monoid, t: FactorTuple, y) -> bool:
    count = len(hom_index_tuples(t, embed(monoid, y)))
    bound = sum(1 for x in t.entries if monoid.leq(x, y))
    if count > bound:
        return False
    if not monoid.is_divisibility:
        return True
    expected = 0
    for pivot, x in enumerate(t.entries):
        others_invertible = all(
            monoid.is_invertible(e) for i, e in enumerate(t.entries) if i != pivot
        )
        if others_invertible and monoid.leq(x, y):
            expected += 1
    return count == expected


def _epic_by_cancellation(m: Morphism) -> bool:
    """No distinct post-compositions collide on the probe target obtained by
    appending a unit entry to the codomain."""
    one_t = embed(m.monoid, m.monoid.identity())
    target = tensor_objects(m.codomain, one_t)
    values = m.values
    seen = set()
    for gv in hom_index_tuples(m.codomain, target):
        c = tuple(values[x - 1] for x in gv)
        if c in seen:
            return False
        seen.add(c)
    return True


def _monic_by_cancellation(m: Morphism) -> bool:
    one_t = embed(m.monoid, m.monoid.identity())
    source = tensor_objects(m.domain, one_t)
    values = m.values
    seen = set()
    for gv in hom_index_tuples(source, m.domain):
        c = tuple(gv[x - 1] for x in values)
        if c in seen:
            return False
        seen.add(c)
    return True


def _epic_agreement_ok(m: Morphism) -> bool:
    return _epic_by_cancellation(m) == is_epic(m)


def _monic_agreement_ok(m: Morphism) -> bool:
    return _monic_by_cancellation(m) == is_monic(m)


def _iso_by_bruteforce(m: Morphism) -> bool:
    id_dom = identity_morphism(m.domain)
    id_cod = identity_morphism(m.codomain)
    for g in hom_set(m.codomain, m.domain):
        if compose(g, m) == id_dom and compose(m, g) == id_cod:
            return True
    return False


def _iso_agreement_ok(m: Morphism) -> bool:
    return is_isomorphism(m) == _iso_by_bruteforce(m)


def _inverse_ok(m: Morphism) -> bool:
    g = inverse(m)
    if not is_isomorphism(m):
        return g is None
    return (
        g is not None
        and compose(g, m) == identity_morphism(m.domain)
        and compose(m, g) == identity_morphism(m.codomain)
    )


def _two_of_three_ok(f: Morphism, g: Morphism) -> bool:
    wf = is_weak_equivalence(f)
    wg = is_weak_equivalence(g)
    wgf = is_weak_equivalence(compose(g, f))
    if wf and wg and not wgf:
        return False
    if wf and wgf and not wg:
        return False
    if wg and wgf and not wf:
        return False
    return True


def _iso_in_w_ok(m: Morphism) -> bool:
    return not is_isomorphism(m) or is_weak_equivalence(m)


def _tensor_unit_object_ok(t: FactorTuple) -> bool:
    o = empty_tuple(t.monoid)
    return tensor_objects(t, o) == t == tensor_objects(o, t)


def _tensor_assoc_ok(x: FactorTuple, y: FactorTuple, z: FactorTuple) -> bool:
    return tensor_objects(tensor_objects(x, y), z) == tensor_objects(x, tensor_objects(y, z))


def _tensor_length_ok(x: FactorTuple, y: FactorTuple) -> bool:
    return len(tensor_objects(x, y)) == len(x) + len(y)


def _braiding_involution_ok(x: FactorTuple, y: FactorTuple) -> bool:
    return braiding_involution_holds(x, y)


def _braiding_iso_ok(x: FactorTuple, y: FactorTuple) -> bool:
    return is_isomorphism(braiding(x, y))


def _hexagon_ok(x: FactorTuple, y: FactorTuple, z: FactorTuple) -> bool:
    return hexagon_holds(x, y, z)


def _tensor_unit_morphism_ok(m: Morphism) -> bool:
    id_o = identity_morphism(empty_tuple(m.monoid))
    return tensor_morphisms(m, id_o) == m == tensor_morphisms(id_o, m)


def _bifunctoriality_ok(f: Morphism, h: Morphism, g: Morphism, k: Morphism) -> bool:
    return tensor_respects_composition(h, k, f, g)


def _naturality_ok(f: Morphism, g: Morphism) -> bool:
    return braiding_is_natural(f, g)


def _weakdiv_agreement_ok(f: Morphism, g: Morphism) -> bool:
    # independent route: prod(dom g) * prod(cod f) divides prod(dom f) * prod(cod g)
    monoid = f.monoid
    lhs = monoid.op(g.domain.product(), f.codomain.product())
    rhs = monoid.op(f.domain.product(), g.codomain.product())
    return weakly_divides(f, g) == monoid.leq(lhs, rhs)


def _weakdiv_reflexive_ok(f: Morphism) -> bool:
    return weakly_divides(f, f)


def _weakdiv_transitive_ok(f: Morphism, g: Morphism, h: Morphism) -> bool:
    if weakly_divides(f, g) and weakly_divides(g, h):
        return weakly_divides(f, h)
    return True


def _weakdiv_weq_minimal_ok(f: Morphism) -> bool:
    # dividing the identity (a weak equivalence) characterizes the weak equivalences
    return weakly_divides(f, identity_morphism(f.domain)) == is_weak_equivalence(f)


def _weakdiv_diagram_ok(f: Morphism, g: Morphism) -> bool:
    if not weakly_divides(f, g):
        return True
    try:
        weak_div_diagram(f, g)  # construction validates all six morphisms
    except Exception:
        return False
    return True


def _adjunction_count_ok(monoid: Monoid, y, t: FactorTuple) -> bool:
    lhs = len(hom_index_tuples(embed(monoid, y), t))
    rhs = 1 if monoid.leq(y, t.product()) else 0
    return lhs == rhs and lhs in (0, 1)


def _adjunction_roundtrip_ok(monoid: Monoid, y) -> bool:
    return embed(monoid, y).product() == y


# -- suites ------------------------------------------------------------------


def verify_homset_formulas(u: UniverseSpec) -> SuiteReport:
    """Counting formulas for hom sets in and out of the empty tuple and the
    1-tuples, checked against raw enumeration."""
    rep = SuiteReport("homset_formulas", u.monoid.name)
    monoid = u.monoid
    objs = universe_objects(u)
    for t in objs:
        rep.check(
            _count_from_empty_ok(monoid, t),
            "hom_count_from_empty",
            lambda t=t: {"tuple": encode_tuple(t)},
        )
        rep.check(
            _count_into_empty_ok(monoid, t),
            "hom_count_into_empty",
            lambda t=t: {"tuple": encode_tuple(t)},
        )
        if monoid.name == "interval":
            rep.check(
                _count_interval_into_empty_ok(monoid, t),
                "hom_count_interval_into_empty",
                lambda t=t: {"tuple": encode_tuple(t)},
            )
    for y in u.pool:
        for t in objs:
            rep.check(
                _count_singleton_source_ok(monoid, y, t),
                "hom_count_singleton_source",
                lambda y=y, t=t: {"element": monoid.encode(y), "tuple": encode_tuple(t)},
            )
            rep.check(
                _count_singleton_target_ok(monoid, t, y),
                "hom_count_singleton_target",
                lambda y=y, t=t: {"element": monoid.encode(y), "tuple": encode_tuple(t)},
            )
    return rep


def verify_epic_monic(u: UniverseSpec) -> SuiteReport:
    """Cancellation-based epic/monic decisions, probed on the universe
    extended by one unit entry, against the injective/surjective predicates."""
    _require_divisibility(u, "epic_monic")
    rep = SuiteReport("epic_monic", u.monoid.name)
    for m in universe_morphisms(u):
        rep.check(
            _epic_agreement_ok(m),
            "epic_agreement",
            lambda m=m: {"morphism": encode_morphism(m)},
        )
        rep.check(
            _monic_agreement_ok(m),
            "monic_agreement",
            lambda m=m: {"morphism": encode_morphism(m)},
        )
    return rep


def verify_iso(u: UniverseSpec) -> SuiteReport:
    """The isomorphism predicate against brute-force two-sided inverse search."""
    _require_divisibility(u, "iso")
    rep = SuiteReport("iso", u.monoid.name)
    for m in universe_morphisms(u):
        rep.check(
            _iso_agreement_ok(m),
            "iso_agreement",
            lambda m=m: {"morphism": encode_morphism(m)},
        )
        rep.check(
            _inverse_ok(m),
            "inverse_roundtrip",
            lambda m=m: {"morphism": encode_morphism(m)},
        )
    return rep


def _chain_membership_ok(steps: list[Morphism]) -> bool:
    composite = steps[0]
    for step in steps[1:]:
        composite = compose(step, composite)
    return is_weak_equivalence(composite) == all(is_weak_equivalence(s) for s in steps)


def verify_two_of_three(u: UniverseSpec) -> SuiteReport:
    """The 2-of-3 property of the weak equivalence class on composable
    pairs, membership of every isomorphism, and membership consistency
    along sampled composition chains up to the universe's chain depth."""
    _require_divisibility(u, "two_of_three")
    rep = SuiteReport("two_of_three", u.monoid.name)
    rng = _rng(u, "two_of_three")
    for f, g in _composable_pairs(u, rng):
        rep.check(
            _two_of_three_ok(f, g),
            "two_of_three",
            lambda f=f, g=g: {"f": encode_morphism(f), "g": encode_morphism(g)},
        )
    for m in universe_morphisms(u):
        rep.check(
            _iso_in_w_ok(m),
            "iso_in_w",
            lambda m=m: {"morphism": encode_morphism(m)},
        )
    morphs = universe_morphisms(u)
    by_dom = _morphisms_by_domain(u)
    chain_rng = _rng(u, "two_of_three:chains")
    for _ in range(min(u.sample_size, 2000)):
        steps = [morphs[chain_rng.randrange(len(morphs))]]
        for _ in range(u.max_chain - 1):
            outs = by_dom[steps[-1].codomain]
            steps.append(outs[chain_rng.randrange(len(outs))])
        rep.check(
            _chain_membership_ok(steps),
            "chain_membership",
            lambda steps=steps: {"steps": [encode_morphism(s) for s in steps]},
        )
    return rep


def verify_monoidal_laws(u: UniverseSpec) -> SuiteReport:
    """Strict associativity and units, length additivity, braiding
    involution/isomorphism/naturality, the hexagon, and bifunctoriality."""
    rep = SuiteReport("monoidal_laws", u.monoid.name)
    rng = _rng(u, "monoidal_laws")
    objs = universe_objects(u)
    monoid = u.monoid
    for t in objs:
        rep.check(
            _tensor_unit_object_ok(t),
            "tensor_unit_object",
            lambda t=t: {"tuple": encode_tuple(t)},
        )
    for x, y in _pairs(objs, u, rng):
        rep.check(
            _tensor_length_ok(x, y),
            "tensor_length",
            lambda x=x, y=y: {"x": encode_tuple(x), "y": encode_tuple(y)},
        )
        rep.check(
            _braiding_involution_ok(x, y),
            "braiding_involution",
            lambda x=x, y=y: {"x": encode_tuple(x), "y": encode_tuple(y)},
        )
        if monoid.is_divisibility:
            rep.check(
                _braiding_iso_ok(x, y),
                "braiding_iso",
                lambda x=x, y=y: {"x": encode_tuple(x), "y": encode_tuple(y)},
            )
    for x, y, z in _triples(objs, u, rng):
        rep.check(
            _tensor_assoc_ok(x, y, z),
            "tensor_assoc_objects",
            lambda x=x, y=y, z=z: {
                "x": encode_tuple(x), "y": encode_tuple(y), "z": encode_tuple(z)
            },
        )
        rep.check(
            _hexagon_ok(x, y, z),
            "hexagon",
            lambda x=x, y=y, z=z: {
                "x": encode_tuple(x), "y": encode_tuple(y), "z": encode_tuple(z)
            },
        )
    morphs = universe_morphisms(u)
    for m in morphs:
        rep.check(
            _tensor_unit_morphism_ok(m),
            "tensor_unit_morphism",
            lambda m=m: {"morphism": encode_morphism(m)},
        )
    for f, g in _pairs(morphs, u, rng):
        rep.check(
            _naturality_ok(f, g),
            "braiding_naturality",
            lambda f=f, g=g: {"f": encode_morphism(f), "g": encode_morphism(g)},
        )
    pair_stream = _composable_pairs(u, rng)
    pair_stream_2 = _composable_pairs(u, _rng(u, "monoidal_laws:second"))
    budget = min(u.sample_size, u.exhaustive_limit)
    for _ in range(budget):
        try:
            f, h = next(pair_stream)
            g, k = next(pair_stream_2)
        except StopIteration:
            break
        rep.check(
            _bifunctoriality_ok(f, h, g, k),
            "bifunctoriality",
            lambda f=f, h=h, g=g, k=k: {
                "f": encode_morphism(f),
                "h": encode_morphism(h),
                "g": encode_morphism(g),
                "k": encode_morphism(k),
            },
        )
    return rep


def verify_weakdiv(u: UniverseSpec) -> SuiteReport:
    """Weak divisibility: witness-division against the product-divisibility
    criterion, pre-order laws, minimality of the weak equivalences, and
    well-formedness of the produced squares."""
    _require_divisibility(u, "weakdiv")
    rep = SuiteReport("weakdiv", u.monoid.name)
    rng = _rng(u, "weakdiv")
    morphs = universe_morphisms(u)
    diagram_budget = 200
    for f, g in _pairs(morphs, u, rng):
        rep.check(
            _weakdiv_agreement_ok(f, g),
            "weakdiv_agreement",
            lambda f=f, g=g: {"f": encode_morphism(f), "g": encode_morphism(g)},
        )
        if diagram_budget and weakly_divides(f, g):
            diagram_budget -= 1
            rep.check(
                _weakdiv_diagram_ok(f, g),
                "weakdiv_diagram",
                lambda f=f, g=g: {"f": encode_morphism(f), "g": encode_morphism(g)},
            )
    sample = morphs[:: max(1, len(morphs) // 500)]
    for f in sample:
        rep.check(
            _weakdiv_reflexive_ok(f),
            "weakdiv_reflexive",
            lambda f=f: {"f": encode_morphism(f)},
        )
        rep.check(
            _weakdiv_weq_minimal_ok(f),
            "weakdiv_weq_minimal",
            lambda f=f: {"f": encode_morphism(f)},
        )
    for _ in range(min(u.sample_size, 2000)):
        f = morphs[rng.randrange(len(morphs))]
        g = morphs[rng.randrange(len(morphs))]
        h = morphs[rng.randrange(len(morphs))]
        rep.check(
            _weakdiv_transitive_ok(f, g, h),
            "weakdiv_transitive",
            lambda f=f, g=g, h=h: {
                "f": encode_morphism(f),
                "g": encode_morphism(g),
                "h": encode_morphism(h),
            },
        )
    return rep


def verify_adjunction(u: UniverseSpec) -> SuiteReport:
    """Adjunction cardinalities: hom from a 1-tuple matches the order
    relation of the underlying monoid, and product-after-embed is the identity."""
    rep = SuiteReport("adjunction", u.monoid.name)
    monoid = u.monoid
    objs = universe_objects(u)
    for y in u.pool:
        rep.check(
            _adjunction_roundtrip_ok(monoid, y),
            "adjunction_roundtrip",
            lambda y=y: {"element": monoid.encode(y)},
        )
        for t in objs:
            rep.check(
                _adjunction_count_ok(monoid, y, t),
                "adjunction_count",
                lambda y=y, t=t: {"element": monoid.encode(y), "tuple": encode_tuple(t)},
            )
    return rep


SUITES: dict[str, Callable[[UniverseSpec], SuiteReport]] = {
    "homset_formulas": verify_homset_formulas,
    "epic_monic": verify_epic_monic,
    "iso": verify_iso,
    "two_of_three": verify_two_of_three,
    "monoidal_laws": verify_monoidal_laws,
    "weakdiv": verify_weakdiv,
    "adjunction": verify_adjunction,
}

_DIVISIBILITY_ONLY = frozenset({"epic_monic", "iso", "two_of_three", "weakdiv"})


def run_suite(u: UniverseSpec, names: Iterable[str] | None = None) -> list[SuiteReport]:
    """Run the named suites (all capability-compatible ones by default) and
    return their reports in order.  Unknown names raise ValueError."""
    if names is None:
        selected = [
            n for n in SUITES
            if u.monoid.is_divisibility or n not in _DIVISIBILITY_ONLY
        ]
    else:
        selected = list(names)
        for n in selected:
            if n not in SUITES:
                raise ValueError(f"unknown suite {n!r}")
    return [SUITES[n](u) for n in selected]


def all_passed(reports: Iterable[SuiteReport]) -> bool:
    return all(r.passed for r in reports)


# -- counterexample re-validation --------------------------------------------


def _t(monoid: Monoid, payload: Mapping, key: str) -> FactorTuple:
    return decode_tuple(monoid, payload[key])


def _m(payload: Mapping, key: str) -> Morphism:
    return decode_morphism(payload[key])


_RECHECKS: dict[str, Callable[[Monoid, Mapping], bool]] = {
    "hom_count_from_empty": lambda mo, p: _count_from_empty_ok(mo, _t(mo, p, "tuple")),
    "hom_count_into_empty": lambda mo, p: _count_into_empty_ok(mo, _t(mo, p, "tuple")),
    "hom_count_interval_into_empty": lambda mo, p: _count_interval_into_empty_ok(
        mo, _t(mo, p, "tuple")
    ),
    "hom_count_singleton_source": lambda mo, p: _count_singleton_source_ok(
        mo, mo.decode(p["element"]), _t(mo, p, "tuple")
    ),
    "hom_count_singleton_target": lambda mo, p: _count_singleton_target_ok(
        mo, _t(mo, p, "tuple"), mo.decode(p["element"])
    ),
    "epic_agreement": lambda mo, p: _epic_agreement_ok(_m(p, "morphism")),
    "monic_agreement": lambda mo, p: _monic_agreement_ok(_m(p, "morphism")),
    "iso_agreement": lambda mo, p: _iso_agreement_ok(_m(p, "morphism")),
    "inverse_roundtrip": lambda mo, p: _inverse_ok(_m(p, "morphism")),
    "two_of_three": lambda mo, p: _two_of_three_ok(_m(p, "f"), _m(p, "g")),
    "chain_membership": lambda mo, p: _chain_membership_ok(
        [decode_morphism(s) for s in p["steps"]]
    ),
    "iso_in_w": lambda mo, p: _iso_in_w_ok(_m(p, "morphism")),
    "tensor_unit_object": lambda mo, p: _tensor_unit_object_ok(_t(mo, p, "tuple")),
    "tensor_assoc_objects": lambda mo, p: _tensor_assoc_ok(
        _t(mo, p, "x"), _t(mo, p, "y"), _t(mo, p, "z")
    ),
    "tensor_length": lambda mo, p: _tensor_length_ok(_t(mo, p, "x"), _t(mo, p, "y")),
    "braiding_involution": lambda mo, p: _braiding_involution_ok(
        _t(mo, p, "x"), _t(mo, p, "y")
    ),
    "braiding_iso": lambda mo, p: _braiding_iso_ok(_t(mo, p, "x"), _t(mo, p, "y")),
    "hexagon": lambda mo, p: _hexagon_ok(_t(mo, p, "x"), _t(mo, p, "y"), _t(mo, p, "z")),
    "tensor_unit_morphism": lambda mo, p: _tensor_unit_morphism_ok(_m(p, "morphism")),
    "bifunctoriality": lambda mo, p: _bifunctoriality_ok(
        _m(p, "f"), _m(p, "h"), _m(p, "g"), _m(p, "k")
    ),
    "braiding_naturality": lambda mo, p: _naturality_ok(_m(p, "f"), _m(p, "g")),
    "weakdiv_agreement": lambda mo, p: _weakdiv_agreement_ok(_m(p, "f"), _m(p, "g")),
    "weakdiv_diagram": lambda mo, p: _weakdiv_diagram_ok(_m(p, "f"), _m(p, "g")),
    "weakdiv_reflexive": lambda mo, p: _weakdiv_reflexive_ok(_m(p, "f")),
    "weakdiv_weq_minimal": lambda mo, p: _weakdiv_weq_minimal_ok(_m(p, "f")),
    "weakdiv_transitive": lambda mo, p: _weakdiv_transitive_ok(
        _m(p, "f"), _m(p, "g"), _m(p, "h")
    ),
    "adjunction_count": lambda mo, p: _adjunction_count_ok(
        mo, mo.decode(p["element"]), _t(mo, p, "tuple")
    ),
    "adjunction_roundtrip": lambda mo, p: _adjunction_roundtrip_ok(
        mo, mo.decode(p["element"])
    ),
}


def recheck(failure: Mapping) -> bool:
    """Deserialize a reported counterexample and re-run its law; returns
    True when the failure reproduces."""
    monoid = monoid_by_name(failure["monoid"])
    return not _RECHECKS[failure["law"]](monoid, failure)


# -- seeded morphism sampling (used by probes and acceptance checks) ---------

_SAMPLE_PRIMES = (2, 3, 5, 7)
_SAMPLE_ENTRIES = (1, 2, 3, 4, 5, 6, 7, 9, 10)


def _random_fibering(rng: random.Random, monoid: Monoid, xs, witness_bound: int):
    """Random codomain entries and fiber owners for the given domain entries:
    each x_i is multiplied by a random witness and the product refactored."""
    n = len(xs)
    mult = [1] * n
    total = 1
    for _ in range(rng.randint(0, 5)):
        p = rng.choice(_SAMPLE_PRIMES)
        if total * p > witness_bound:
            break
        total *= p
        mult[rng.randrange(n)] *= p
    signed = monoid is ZX
    if signed:
        for i in range(n):
            if rng.random() < 0.3:
                mult[i] = -mult[i]
    entries: list[int] = []
    owners: list[int] = []
    for i in range(n):
        v = mult[i] * xs[i]
        parts = rng.randint(1, 3)
        _, factors = monoid.factor_irreducibles(v)
        vals = [1] * parts
        for q in factors:
            vals[rng.randrange(parts)] *= q
        if v < 0:
            vals[0] = -vals[0]
        if signed and parts > 1 and rng.random() < 0.5:
            i1, i2 = rng.randrange(parts), rng.randrange(parts)
            vals[i1], vals[i2] = -vals[i1], -vals[i2]
        entries.extend(vals)
        owners.extend([i + 1] * parts)
    paired = list(zip(entries, owners))
    rng.shuffle(paired)
    return [e for e, _ in paired], [o for _, o in paired]


def sample_extension(rng: random.Random, t: FactorTuple, witness_bound: int = 10_000) -> Morphism:
    """A random valid morphism out of the given non-empty integer tuple."""
    monoid = t.monoid
    if monoid not in (ZX, NAT):
        raise CapabilityError("sampling is shipped for the integer instances")
    if len(t) == 0:
        raise ValueError("need a non-empty domain")
    entries, owners = _random_fibering(rng, monoid, t.entries, witness_bound)
    codomain = FactorTuple(monoid, tuple(entries))
    return Morphism(t, codomain, IndexFunction(len(entries), len(t), tuple(owners)))


def sample_morphism(rng: random.Random, monoid: Monoid = ZX, max_len: int = 3,
                    witness_bound: int = 10_000) -> Morphism:
    """A random valid morphism over the integers, mixing divisibility steps,
    refactoring, dropped units, and codomain shuffling."""
    if monoid not in (ZX, NAT):
        raise CapabilityError("sampling is shipped for the integer instances")
    n = rng.randint(1, max_len)
    sign = (lambda: rng.choice((1, -1))) if monoid is ZX else (lambda: 1)
    xs = [sign() * rng.choice(_SAMPLE_ENTRIES) for _ in range(n)]
    entries, owners = _random_fibering(rng, monoid, xs, witness_bound)
    # splice unused unit entries into the domain
    extra = rng.randint(0, 2)
    for _ in range(extra):
        at = rng.randrange(len(xs) + 1)
        xs.insert(at, sign())
        owners = [o + 1 if o > at else o for o in owners]
    domain = FactorTuple(monoid, tuple(xs))
    codomain = FactorTuple(monoid, tuple(entries))
    return Morphism(domain, codomain, IndexFunction(len(entries), len(xs), tuple(owners)))
