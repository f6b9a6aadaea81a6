"""Exhaustive property decisions on finite strong bimonoids.

Each property is the universally quantified "iff" from its definition; both
directions are checked literally (one direction is usually trivial, but the
checker encodes no reasoning). Verdicts carry the first violating tuple in
carrier enumeration order, so reports are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .algebra import WeightAlgebra


class BimonoidProperty(Enum):
    ZERO_SUM_FREE = "zero-sum-free"
    STRONGLY_ZSF = "strongly-zero-sum-free"
    BI_STRONGLY_ZSF = "bi-strongly-zero-sum-free"
    ZERO_DIVISOR_FREE = "zero-divisor-free"
    POSITIVE = "positive"
    ZERO_RIGHT_DISTRIBUTIVE = "zero-right-distributive"
    RIGHT_DISTRIBUTIVE = "right-distributive"
    LEFT_DISTRIBUTIVE = "left-distributive"
    DISTRIBUTIVE = "distributive"
    COMMUTATIVE = "commutative"


class HalfCondition(Enum):
    """One-sided support conditions; the word forms quantify (a,b,c), the tree
    forms (a,b,b',c)."""

    RUN_TO_INIT = "run-to-init"            # a*c != 0  =>  (a+b)*c != 0
    INIT_TO_RUN = "init-to-run"            # (a+b)*c != 0  =>  a*c != 0 or b*c != 0
    TREE_RUN_TO_INIT = "tree-run-to-init"  # a*b*c != 0  =>  a*(b+b')*c != 0
    TREE_INIT_TO_RUN = "tree-init-to-run"  # a*(b+b')*c != 0  =>  a*b*c != 0 or a*b'*c != 0


class HierarchyInconsistencyError(AssertionError):
    """Computed verdicts contradict a proven implication: an implementation bug."""


@dataclass(frozen=True)
class PropertyVerdict:
    property: object  # BimonoidProperty or HalfCondition
    holds: bool
    witness: Optional[tuple] = None
    witness_labels: Optional[tuple] = None

    def __str__(self):
        if self.holds:
            return f"{self.property.value}: holds"
        return f"{self.property.value}: fails at ({', '.join(self.witness_labels)})"


def _verdict(alg, prop, witness):
    if witness is None:
        return PropertyVerdict(prop, True)
    return PropertyVerdict(prop, False, tuple(witness), tuple(alg.describe(x) for x in witness))


def _first(alg, arity, violates):
    elems = list(alg.elements())
    for tup in itertools.product(elems, repeat=arity):
        if violates(*tup):
            return tup
    return None


def check(alg: WeightAlgebra, prop: BimonoidProperty) -> PropertyVerdict:
    """Decide one property by exhaustive search; witness on failure."""
    z = alg.is_zero
    add, mul = alg.add, alg.mul
    eq = alg.equal

    if prop is BimonoidProperty.ZERO_SUM_FREE:
        witness = _first(alg, 2, lambda a, b: z(add(a, b)) != (z(a) and z(b)))
    elif prop is BimonoidProperty.STRONGLY_ZSF:
        witness = _first(
            alg, 3, lambda a, b, c: z(mul(add(a, b), c)) != (z(mul(a, c)) and z(mul(b, c)))
        )
    elif prop is BimonoidProperty.BI_STRONGLY_ZSF:
        witness = _first(
            alg,
            4,
            lambda a, b, bp, c: z(mul(mul(a, add(b, bp)), c))
            != (z(mul(mul(a, b), c)) and z(mul(mul(a, bp), c))),
        )
    elif prop is BimonoidProperty.ZERO_DIVISOR_FREE:
        witness = _first(alg, 2, lambda a, b: z(mul(a, b)) != (z(a) or z(b)))
    elif prop is BimonoidProperty.POSITIVE:
        for part in (BimonoidProperty.ZERO_SUM_FREE, BimonoidProperty.ZERO_DIVISOR_FREE):
            sub = check(alg, part)
            if not sub.holds:
                return PropertyVerdict(prop, False, sub.witness, sub.witness_labels)
        witness = None
    elif prop is BimonoidProperty.ZERO_RIGHT_DISTRIBUTIVE:
        witness = _first(
            alg, 3, lambda a, b, c: z(mul(add(a, b), c)) != z(add(mul(a, c), mul(b, c)))
        )
    elif prop is BimonoidProperty.RIGHT_DISTRIBUTIVE:
        witness = _first(
            alg, 3, lambda a, b, c: not eq(mul(add(a, b), c), add(mul(a, c), mul(b, c)))
        )
    elif prop is BimonoidProperty.LEFT_DISTRIBUTIVE:
        witness = _first(
            alg, 3, lambda a, b, c: not eq(mul(c, add(a, b)), add(mul(c, a), mul(c, b)))
        )
    elif prop is BimonoidProperty.DISTRIBUTIVE:
        for part in (BimonoidProperty.RIGHT_DISTRIBUTIVE, BimonoidProperty.LEFT_DISTRIBUTIVE):
            sub = check(alg, part)
            if not sub.holds:
                return PropertyVerdict(prop, False, sub.witness, sub.witness_labels)
        witness = None
    elif prop is BimonoidProperty.COMMUTATIVE:
        witness = _first(alg, 2, lambda a, b: not eq(mul(a, b), mul(b, a)))
    else:
        raise ValueError(f"unknown property {prop!r}")
    return _verdict(alg, prop, witness)


def check_half(alg: WeightAlgebra, half: HalfCondition) -> PropertyVerdict:
    """Decide one one-sided support condition; witness violates the implication."""
    z = alg.is_zero
    add, mul = alg.add, alg.mul

    if half is HalfCondition.RUN_TO_INIT:
        witness = _first(alg, 3, lambda a, b, c: not z(mul(a, c)) and z(mul(add(a, b), c)))
    elif half is HalfCondition.INIT_TO_RUN:
        witness = _first(
            alg, 3, lambda a, b, c: not z(mul(add(a, b), c)) and z(mul(a, c)) and z(mul(b, c))
        )
    elif half is HalfCondition.TREE_RUN_TO_INIT:
        witness = _first(
            alg,
            4,
            lambda a, b, bp, c: not z(mul(mul(a, b), c)) and z(mul(mul(a, add(b, bp)), c)),
        )
    elif half is HalfCondition.TREE_INIT_TO_RUN:
        witness = _first(
            alg,
            4,
            lambda a, b, bp, c: not z(mul(mul(a, add(b, bp)), c))
            and z(mul(mul(a, b), c))
            and z(mul(mul(a, bp), c)),
        )
    else:
        raise ValueError(f"unknown half condition {half!r}")
    return _verdict(alg, half, witness)


@dataclass(frozen=True)
class PropertyReport:
    algebra: str
    verdicts: dict
    halves: dict

    def holds(self, prop) -> bool:
        table = self.halves if isinstance(prop, HalfCondition) else self.verdicts
        return table[prop].holds

    def rows(self):
        for prop in BimonoidProperty:
            yield self.verdicts[prop]
        for half in HalfCondition:
            yield self.halves[half]

    def __str__(self):
        width = max(len(p.value) for p in list(BimonoidProperty) + list(HalfCondition))
        lines = [f"properties of {self.algebra}"]
        for v in self.rows():
            status = "holds" if v.holds else f"fails  witness ({', '.join(v.witness_labels)})"
            lines.append(f"  {v.property.value:<{width}}  {status}")
        return "\n".join(lines)

    def to_dict(self):
        def entry(v):
            d = {"holds": v.holds}
            if v.witness_labels is not None:
                d["witness"] = list(v.witness_labels)
            return d

        return {
            "algebra": self.algebra,
            "properties": {p.value: entry(v) for p, v in self.verdicts.items()},
            "half_conditions": {h.value: entry(v) for h, v in self.halves.items()},
        }


def classify(alg: WeightAlgebra) -> PropertyReport:
    """All verdicts plus internal consistency of the implication hierarchy.

    A hierarchy violation can only come from an implementation bug, so it
    raises instead of being reported as a result.
    """
    verdicts = {prop: check(alg, prop) for prop in BimonoidProperty}
    halves = {half: check_half(alg, half) for half in HalfCondition}

    def h(prop):
        return verdicts[prop].holds

    chain = (
        BimonoidProperty.POSITIVE,
        BimonoidProperty.BI_STRONGLY_ZSF,
        BimonoidProperty.STRONGLY_ZSF,
        BimonoidProperty.ZERO_SUM_FREE,
    )
    for stronger, weaker in zip(chain, chain[1:]):
        if h(stronger) and not h(weaker):
            raise HierarchyInconsistencyError(
                f"{alg.name}: {stronger.value} holds but {weaker.value} fails"
            )
    expected_strongly = h(BimonoidProperty.ZERO_SUM_FREE) and h(
        BimonoidProperty.ZERO_RIGHT_DISTRIBUTIVE
    )
    if h(BimonoidProperty.STRONGLY_ZSF) != expected_strongly:
        raise HierarchyInconsistencyError(
            f"{alg.name}: strongly-zsf verdict disagrees with zsf & zero-right-distributive"
        )
    if (
        h(BimonoidProperty.COMMUTATIVE)
        and h(BimonoidProperty.STRONGLY_ZSF)
        and not h(BimonoidProperty.BI_STRONGLY_ZSF)
    ):
        raise HierarchyInconsistencyError(
            f"{alg.name}: commutative and strongly-zsf but not bi-strongly-zsf"
        )
    return PropertyReport(alg.name, verdicts, halves)
