"""
Axiom suite for an elaborated (H, H', pairing) triplet.

Every axiom is checked on all PBW basis monomials of degree <= D. Internal
arithmetic runs at the guarded working degree and both sides are compared
after truncation to D, so truncation never produces a spurious failure.
"""
from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field
from typing import Iterable, List, Optional

from freealg.services.algebra import accumulate
from freealg.services.elements import AlgebraElement, TensorElement
from freealg.services.monomials import degree, enumerate_basis, multi_factorial, render_monomial
from hopf.services.structure import (
    antipode,
    coproduct,
    counit,
    counit_monomial,
    pair,
    pair_tensor,
)
from presentation.services.structures import HopfPresentation, HopfTriplet

logger = logging.getLogger(__name__)

PASS = 'pass'
FAIL = 'fail'


@dataclass(frozen=True)
class AxiomEntry:
    axiom: str
    degree: int
    status: str
    counterexample: str = ''

    @property
    def passed(self) -> bool:
        return self.status == PASS


@dataclass
class AxiomReport:
    entries: List[AxiomEntry] = field(default_factory=list)

    def add(self, entry: AxiomEntry) -> None:
        self.entries.append(entry)

    def extend(self, entries: Iterable[AxiomEntry]) -> None:
        self.entries.extend(entries)

    @property
    def passed(self) -> bool:
        return all(entry.passed for entry in self.entries)

    @property
    def failures(self) -> List[AxiomEntry]:
        return [entry for entry in self.sorted() if not entry.passed]

    def sorted(self) -> List[AxiomEntry]:
        return sorted(self.entries, key=lambda entry: (entry.axiom, entry.counterexample))

    def entry(self, axiom: str) -> Optional[AxiomEntry]:
        for candidate in self.entries:
            if candidate.axiom == axiom:
                return candidate
        return None

    def to_list(self) -> list:
        return [asdict(entry) for entry in self.sorted()]

    def to_json(self) -> str:
        return json.dumps(self.to_list(), indent=2)

    def summary(self) -> str:
        failed = len(self.failures)
        return f'{len(self.entries) - failed}/{len(self.entries)} axioms pass'


class AxiomCheck:
    """Collects the first counterexample of one axiom."""

    def __init__(self, axiom: str, degree: int):
        self.axiom = axiom
        self.degree = degree
        self.counterexample = ''

    def expect(self, condition: bool, label: str) -> bool:
        if not condition and not self.counterexample:
            self.counterexample = label
        return bool(condition)

    @property
    def failed(self) -> bool:
        return bool(self.counterexample)

    def entry(self) -> AxiomEntry:
        status = FAIL if self.counterexample else PASS
        logger.debug(f'{self.axiom} at D={self.degree}: {status} {self.counterexample}'.rstrip())
        return AxiomEntry(self.axiom, self.degree, status, self.counterexample)


# Helpers on tensors

def _map_legs(tensor: TensorElement, left, right) -> dict:
    """Apply a map to each leg; keys are concatenated, so a coproduct leg yields a triple tensor."""
    terms: dict = {}
    for (m1, m2), coefficient in tensor.terms.items():
        first = left(m1)
        second = right(m2)
        for key1, c1 in first.items():
            for key2, c2 in second.items():
                key = key1 + key2
                value = coefficient * c1 * c2
                if value:
                    total = terms[key] + value if key in terms else value
                    if total:
                        terms[key] = total
                    else:
                        terms.pop(key, None)
    return terms


def _truncate_keys(terms: dict, bound: int) -> dict:
    return {key: value for key, value in terms.items() if all(degree(m) <= bound for m in key)}


def _multiply_legs(algebra: HopfPresentation, terms: dict, cap: int) -> AlgebraElement:
    result: dict = {}
    for (m1, m2), coefficient in terms.items():
        accumulate(result, algebra.multiply_terms({m1: coefficient}, {m2: algebra.scalar(1)}, cap), algebra.scalar(1), None)
    return AlgebraElement(algebra, result)


# Single-algebra axioms

def check_algebra(algebra: HopfPresentation, bound: int) -> List[AxiomEntry]:
    """Coassociativity, counit, antipode and relation-compatibility axioms of one algebra."""
    name = algebra.name
    names = algebra.generators
    cap = algebra.internal_cap(bound)
    one = algebra.scalar(1)
    basis = enumerate_basis(algebra.size, bound)

    def single(m):
        return {(m,): one}

    def delta_of(m):
        return {(k1, k2): c for (k1, k2), c in coproduct(algebra.monomial(m), bound).terms.items()}

    def counit_leg(m):
        value = counit_monomial(algebra, m)
        return {(): algebra.scalar(value)} if value else {}

    def antipode_leg(m):
        return {(k,): c for k, c in antipode(algebra.monomial(m), cap).terms.items()}

    coassociativity = AxiomCheck(f'{name}:coassociativity', bound)
    counit_check = AxiomCheck(f'{name}:counit', bound)
    antipode_left = AxiomCheck(f'{name}:antipode-left', bound)
    antipode_right = AxiomCheck(f'{name}:antipode-right', bound)

    for monomial in basis:
        label = render_monomial(monomial, names)
        delta = coproduct(algebra.monomial(monomial), cap)

        if not coassociativity.failed:
            left = _truncate_keys(_map_legs(delta.truncate(cap, bound), delta_of, single), bound)
            right = _truncate_keys(_map_legs(delta.truncate(bound, cap), single, delta_of), bound)
            coassociativity.expect(left == right, label)

        if not counit_check.failed:
            target = {(monomial,): one}
            first = _truncate_keys(_map_legs(delta, counit_leg, single), bound)
            second = _truncate_keys(_map_legs(delta, single, counit_leg), bound)
            counit_check.expect(first == target and second == target, label)

        expected = algebra.constant(counit_monomial(algebra, monomial))
        if not antipode_left.failed:
            product = _multiply_legs(algebra, _map_legs(delta, antipode_leg, single), cap).truncate(bound)
            antipode_left.expect(product == expected, label)
        if not antipode_right.failed:
            product = _multiply_legs(algebra, _map_legs(delta, single, antipode_leg), cap).truncate(bound)
            antipode_right.expect(product == expected, label)

    entries = [coassociativity.entry(), counit_check.entry(), antipode_left.entry(), antipode_right.entry()]
    entries.extend(_check_relations(algebra, bound, cap))
    return entries


def _check_relations(algebra: HopfPresentation, bound: int, cap: int) -> List[AxiomEntry]:
    """Delta, epsilon and S applied to both sides of every commutation relation."""
    name = algebra.name
    names = algebra.generators
    delta_check = AxiomCheck(f'{name}:relations-coproduct', bound)
    counit_check = AxiomCheck(f'{name}:relations-counit', bound)
    antipode_check = AxiomCheck(f'{name}:relations-antipode', bound)
    for j in range(algebra.size):
        for i in range(j):
            label = f'[{names[j]}, {names[i]}]'
            gj, gi = algebra.generator(j), algebra.generator(i)
            relation = algebra.commutator(j, i)

            dj, di = coproduct(gj, cap), coproduct(gi, cap)
            lhs = TensorElement(
                algebra,
                algebra.multiply_tensor_terms(dj.terms, di.terms, cap, cap),
            ) - TensorElement(algebra, algebra.multiply_tensor_terms(di.terms, dj.terms, cap, cap))
            delta_check.expect(
                lhs.truncate(bound) == coproduct(relation, bound), label
            )

            counit_check.expect(not counit(relation), label)

            sj, si = antipode(gj, cap), antipode(gi, cap)
            lhs = AlgebraElement(algebra, algebra.multiply_terms(si.terms, sj.terms, cap)) - AlgebraElement(
                algebra, algebra.multiply_terms(sj.terms, si.terms, cap)
            )
            antipode_check.expect(lhs.truncate(bound) == antipode(relation, bound), label)
    return [delta_check.entry(), counit_check.entry(), antipode_check.entry()]


# Pairing axioms

def check_pairing(triplet: HopfTriplet, bound: int) -> List[AxiomEntry]:
    algebra, dual, _ = triplet
    entries = []
    entries.append(_product_coproduct(algebra, dual, bound, 'pairing:product-coproduct'))
    entries.append(_product_coproduct(dual, algebra, bound, 'pairing:coproduct-product'))

    unit_counit = AxiomCheck('pairing:unit-counit', bound)
    for f in enumerate_basis(dual.size, bound):
        unit_counit.expect(
            pair(algebra.one(), dual.monomial(f)) == counit(dual.monomial(f)),
            render_monomial(f, dual.generators),
        )
    counit_unit = AxiomCheck('pairing:counit-unit', bound)
    for h in enumerate_basis(algebra.size, bound):
        counit_unit.expect(
            pair(algebra.monomial(h), dual.one()) == counit(algebra.monomial(h)),
            render_monomial(h, algebra.generators),
        )
    entries.extend([unit_counit.entry(), counit_unit.entry()])

    antipode_check = AxiomCheck('pairing:antipode', bound)
    dual_basis = AxiomCheck('pairing:dual-basis', bound)
    images = {f: antipode(dual.monomial(f), bound) for f in enumerate_basis(dual.size, bound)}
    for h in enumerate_basis(algebra.size, bound):
        sh = antipode(algebra.monomial(h), bound)
        for f, sf in images.items():
            label = f'{render_monomial(h, algebra.generators)} ; {render_monomial(f, dual.generators)}'
            if not antipode_check.failed:
                antipode_check.expect(pair(sh, dual.monomial(f)) == pair(algebra.monomial(h), sf), label)
            value = pair(algebra.monomial(h), dual.monomial(f))
            expected = algebra.scalar(0)
            if h == f:
                expected = algebra.scalar(multi_factorial(h))
            dual_basis.expect(value == expected, label)
    entries.extend([antipode_check.entry(), dual_basis.entry()])
    return entries


def _product_coproduct(left_algebra, right_algebra, bound: int, axiom: str) -> AxiomEntry:
    """<h h', f> = <h (x) h', Delta f> for basis h, h' of left_algebra and f of right_algebra."""
    check = AxiomCheck(axiom, bound)
    basis = enumerate_basis(left_algebra.size, bound)
    targets = enumerate_basis(right_algebra.size, bound)
    names, dual_names = left_algebra.generators, right_algebra.generators
    for h1 in basis:
        for h2 in basis:
            if degree(h1) + degree(h2) > bound or check.failed:
                continue
            product = left_algebra.monomial(h1) * left_algebra.monomial(h2)
            legs = TensorElement.from_pair(left_algebra.monomial(h1), left_algebra.monomial(h2))
            for f in targets:
                delta = coproduct(right_algebra.monomial(f), degree(h1), degree(h2))
                lhs = pair(product.truncate(bound), right_algebra.monomial(f))
                rhs = pair_tensor(legs, delta)
                if not check.expect(
                    lhs == rhs,
                    f'{render_monomial(h1, names)}*{render_monomial(h2, names)} ; {render_monomial(f, dual_names)}',
                ):
                    break
    return check.entry()


def verify_axioms(triplet: HopfTriplet, degree_bound: Optional[int] = None) -> AxiomReport:
    """
    Run the full axiom suite of a triplet at degree D (default: its run degree).

    Failures are report entries, never exceptions.
    """
    bound = triplet.context.degree if degree_bound is None else degree_bound
    if bound > triplet.context.degree:
        triplet = triplet.with_truncation(bound, triplet.context.zorder)
    report = AxiomReport()
    algebra, dual, _ = triplet
    report.extend(check_algebra(algebra, bound))
    report.extend(check_algebra(dual, bound))
    report.extend(check_pairing(triplet, bound))
    logger.info(f'Axioms of {algebra.name}/{dual.name} at D={bound}: {report.summary()}')
    for failure in report.failures:
        logger.warning(f'{failure.axiom} fails on {failure.counterexample}')
    return report
