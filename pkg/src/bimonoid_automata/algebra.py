"""Strong bimonoids: the weight structures all automata in this package run over.

A strong bimonoid (B, add, mul, zero, one) is a semiring that need not be
distributive: (B, add, zero) is a commutative monoid, (B, mul, one) is a
monoid, and zero annihilates under mul. Every evaluation routine in this
package is parameterized by a ``WeightAlgebra`` instance; elements are opaque
values owned by the algebra (table indices, integers, function tables,
polynomials, ...).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Iterable, Iterator, Optional, Sequence


class UnknownAlgebraError(LookupError):
    """Raised by builtin() for names outside the bundled set."""


class InfiniteCarrierError(ValueError):
    """Raised when element enumeration is requested on an infinite carrier."""


class MalformedTableError(ValueError):
    """Structural defect in an operation table (shape or index range).

    Distinct from axiom failures: a malformed table cannot even be checked.
    """


class Semantics(Enum):
    """Which of the two automaton semantics to evaluate."""

    RUN = "run"
    INIT = "init"


class WeightAlgebra:
    """Base interface: add/mul/zero/one plus decidable equality and labels.

    Subclasses set ``self.zero`` and ``self.one`` and implement ``add`` and
    ``mul``. Values are immutable and shareable; the one mutable exception is
    :class:`CountingAlgebra`.
    """

    name = "algebra"

    zero: Any
    one: Any

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def equal(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return self.equal(a, self.zero)

    def describe(self, a) -> str:
        """Human-readable label of an element, also used in file formats."""
        return str(a)

    def parse(self, value):
        """Inverse of describe, tolerant of the JSON value space."""
        raise NotImplementedError(f"{self.name} cannot parse {value!r}")

    @property
    def is_finite(self) -> bool:
        return False

    def elements(self) -> Iterator:
        """Every carrier element exactly once, in a fixed enumeration order."""
        raise InfiniteCarrierError(
            f"cannot enumerate the infinite carrier of {self.name}"
        )

    # Folds shared by all evaluators. An empty sum is zero and an empty
    # product is one; a k-element fold costs exactly k-1 operations, which is
    # what the counting wrapper and all cost formulas rely on.
    def sum(self, items: Iterable):
        acc = None
        for x in items:
            acc = x if acc is None else self.add(acc, x)
        return self.zero if acc is None else acc

    def product(self, items: Iterable):
        acc = None
        for x in items:
            acc = x if acc is None else self.mul(acc, x)
        return self.one if acc is None else acc

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


class FiniteTableAlgebra(WeightAlgebra):
    """A strong bimonoid presented by explicit n x n operation tables.

    Elements are indices into ``names``. The constructor checks only
    structure (squareness, index ranges); whether the tables satisfy the
    strong-bimonoid axioms is the business of :func:`validate_axioms`.
    """

    def __init__(self, name, names, add_table, mul_table, zero_index, one_index):
        n = len(names)
        if n == 0:
            raise MalformedTableError("empty carrier")
        if len(set(names)) != n:
            raise MalformedTableError("duplicate element names")
        for label, table in (("add", add_table), ("mul", mul_table)):
            if len(table) != n:
                raise MalformedTableError(f"{label} table has {len(table)} rows, expected {n}")
            for i, row in enumerate(table):
                if len(row) != n:
                    raise MalformedTableError(f"{label} table row {i} has {len(row)} entries")
                for j, v in enumerate(row):
                    if not isinstance(v, int) or not 0 <= v < n:
                        raise MalformedTableError(
                            f"{label} table entry [{i}][{j}] = {v!r} out of range [0,{n})"
                        )
        for label, idx in (("zero", zero_index), ("one", one_index)):
            if not isinstance(idx, int) or not 0 <= idx < n:
                raise MalformedTableError(f"{label} index {idx!r} out of range [0,{n})")
        self.name = name
        self.names = tuple(names)
        self.add_table = tuple(tuple(row) for row in add_table)
        self.mul_table = tuple(tuple(row) for row in mul_table)
        self.zero_index = zero_index
        self.one_index = one_index
        self.zero = zero_index
        self.one = one_index

    def add(self, a, b):
        return self.add_table[a][b]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def describe(self, a):
        return self.names[a]

    def parse(self, value):
        if isinstance(value, int) and not isinstance(value, bool):
            if 0 <= value < len(self.names):
                return value
        text = str(value)
        if text in self.names:
            return self.names.index(text)
        raise ValueError(f"{text!r} is not an element of {self.name} (elements: {', '.join(self.names)})")

    @property
    def is_finite(self):
        return True

    def elements(self):
        return iter(range(len(self.names)))

    def index_of(self, name: str) -> int:
        return self.parse(name)


class CountingAlgebra(WeightAlgebra):
    """Transparent wrapper that counts add/mul invocations on another algebra.

    Single-owner: the counters are mutable state, so do not share one wrapper
    across threads; merge per-thread counts instead.
    """

    def __init__(self, inner: WeightAlgebra):
        self.inner = inner
        self.name = f"counting({inner.name})"
        self.zero = inner.zero
        self.one = inner.one
        self.add_count = 0
        self.mul_count = 0

    def reset_counts(self):
        self.add_count = 0
        self.mul_count = 0

    def read_counts(self):
        return (self.add_count, self.mul_count)

    def add(self, a, b):
        self.add_count += 1
        return self.inner.add(a, b)

    def mul(self, a, b):
        self.mul_count += 1
        return self.inner.mul(a, b)

    def equal(self, a, b):
        return self.inner.equal(a, b)

    def describe(self, a):
        return self.inner.describe(a)

    def parse(self, value):
        return self.inner.parse(value)

    @property
    def is_finite(self):
        return self.inner.is_finite

    def elements(self):
        return self.inner.elements()


def wrap_counting(alg: WeightAlgebra) -> CountingAlgebra:
    return CountingAlgebra(alg)


# --------------------------------------------------------------------------
# Axiom validation


@dataclass(frozen=True)
class AxiomCheck:
    axiom: str
    holds: bool
    witness: Optional[tuple] = None
    witness_labels: Optional[tuple] = None


@dataclass(frozen=True)
class ValidationReport:
    algebra: str
    ok: bool
    checks: tuple

    def failures(self):
        return tuple(c for c in self.checks if not c.holds)

    def __str__(self):
        lines = [f"{self.algebra}: {'pass' if self.ok else 'FAIL'}"]
        for c in self.checks:
            mark = "ok " if c.holds else "VIOLATED"
            w = f"  witness {c.witness_labels}" if c.witness_labels else ""
            lines.append(f"  {c.axiom:<20} {mark}{w}")
        return "\n".join(lines)


def validate_axioms(alg: WeightAlgebra) -> ValidationReport:
    """Exhaustively check the strong-bimonoid axioms on a finite algebra.

    Returns one verdict per axiom with the first violating tuple in carrier
    enumeration order. Structural problems (malformed tables) surface as
    MalformedTableError from the algebra constructor, never as axiom
    failures here.
    """
    elems = list(alg.elements())
    checks = []

    def record(axiom, witness):
        if witness is None:
            checks.append(AxiomCheck(axiom, True))
        else:
            labels = tuple(alg.describe(x) for x in witness)
            checks.append(AxiomCheck(axiom, False, tuple(witness), labels))

    def first_triple(violates):
        for triple in itertools.product(elems, repeat=3):
            if violates(*triple):
                return triple
        return None

    def first_pair(violates):
        for pair in itertools.product(elems, repeat=2):
            if violates(*pair):
                return pair
        return None

    record(
        "add-associativity",
        first_triple(lambda a, b, c: not alg.equal(alg.add(alg.add(a, b), c), alg.add(a, alg.add(b, c)))),
    )
    record(
        "add-commutativity",
        first_pair(lambda a, b: not alg.equal(alg.add(a, b), alg.add(b, a))),
    )
    record(
        "add-identity",
        next(
            (
                (a,)
                for a in elems
                if not alg.equal(alg.add(alg.zero, a), a) or not alg.equal(alg.add(a, alg.zero), a)
            ),
            None,
        ),
    )
    record(
        "mul-associativity",
        first_triple(lambda a, b, c: not alg.equal(alg.mul(alg.mul(a, b), c), alg.mul(a, alg.mul(b, c)))),
    )
    record(
        "mul-identity",
        next(
            (
                (a,)
                for a in elems
                if not alg.equal(alg.mul(alg.one, a), a) or not alg.equal(alg.mul(a, alg.one), a)
            ),
            None,
        ),
    )
    record(
        "zero-annihilation",
        next(
            (
                (a,)
                for a in elems
                if not alg.is_zero(alg.mul(alg.zero, a)) or not alg.is_zero(alg.mul(a, alg.zero))
            ),
            None,
        ),
    )
    return ValidationReport(alg.name, all(c.holds for c in checks), tuple(checks))


# --------------------------------------------------------------------------
# Bounded lattices from an order relation


def lattice_algebra(name, names, leq_pairs) -> FiniteTableAlgebra:
    """Bounded lattice as a strong bimonoid: add = join, mul = meet.

    ``leq_pairs`` lists the <= relation (reflexive-transitive closure is taken
    here); the order must have unique lubs/glbs and a bottom and top.
    """
    names = tuple(names)
    n = len(names)
    idx = {x: i for i, x in enumerate(names)}
    leq = [[i == j for j in range(n)] for i in range(n)]
    for a, b in leq_pairs:
        leq[idx[a]][idx[b]] = True
    for k in range(n):  # transitive closure
        for i in range(n):
            for j in range(n):
                if leq[i][k] and leq[k][j]:
                    leq[i][j] = True

    def extremum(candidates, below):
        # below=True: greatest element of candidates; else least.
        for c in candidates:
            if all((leq[d][c] if below else leq[c][d]) for d in candidates):
                return c
        return None

    def join(i, j):
        ub = [c for c in range(n) if leq[i][c] and leq[j][c]]
        m = extremum(ub, below=False)
        if m is None:
            raise ValueError(f"{name}: no unique join for {names[i]}, {names[j]}")
        return m

    def meet(i, j):
        lb = [c for c in range(n) if leq[c][i] and leq[c][j]]
        m = extremum(lb, below=True)
        if m is None:
            raise ValueError(f"{name}: no unique meet for {names[i]}, {names[j]}")
        return m

    add = [[join(i, j) for j in range(n)] for i in range(n)]
    mul = [[meet(i, j) for j in range(n)] for i in range(n)]
    bottom = extremum(list(range(n)), below=False)  # least element
    top = extremum(list(range(n)), below=True)  # greatest element
    if bottom is None or top is None:
        raise ValueError(f"{name}: order is not bounded")
    return FiniteTableAlgebra(name, names, add, mul, bottom, top)


# --------------------------------------------------------------------------
# Infinite carriers: naturals with adjoined infinity / adjoined zero


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"


INFINITY = _Infinity()


class NatPlusMinAlgebra(WeightAlgebra):
    """(N u {inf}, +, min, 0, inf); exact integers, inf is a tagged sentinel."""

    name = "NatPlusMin"

    def __init__(self):
        self.zero = 0
        self.one = INFINITY

    def add(self, a, b):
        if a is INFINITY or b is INFINITY:
            return INFINITY
        return a + b

    def mul(self, a, b):
        if a is INFINITY:
            return b
        if b is INFINITY:
            return a
        return a if a <= b else b

    def describe(self, a):
        return "inf" if a is INFINITY else str(a)

    def parse(self, value):
        if value is INFINITY or value in ("inf", "infinity"):
            return INFINITY
        n = int(value)
        if n < 0:
            raise ValueError(f"{self.name} elements are naturals or 'inf', got {value!r}")
        return n


class _AdjoinedZero:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "zero"


ADJOINED_ZERO = _AdjoinedZero()


class NatPlusPlusAlgebra(WeightAlgebra):
    """Naturals with a fresh absorbing zero; both operations act as + on N.

    add is + on N with the fresh element neutral; mul is + on N with the
    fresh element absorbing; one is the natural number 0.
    """

    name = "NatPlusPlus"

    def __init__(self):
        self.zero = ADJOINED_ZERO
        self.one = 0

    def add(self, a, b):
        if a is ADJOINED_ZERO:
            return b
        if b is ADJOINED_ZERO:
            return a
        return a + b

    def mul(self, a, b):
        if a is ADJOINED_ZERO or b is ADJOINED_ZERO:
            return ADJOINED_ZERO
        return a + b

    def describe(self, a):
        return "zero" if a is ADJOINED_ZERO else str(a)

    def parse(self, value):
        if value is ADJOINED_ZERO or value == "zero":
            return ADJOINED_ZERO
        n = int(value)
        if n < 0:
            raise ValueError(f"{self.name} elements are naturals or 'zero', got {value!r}")
        return n


# --------------------------------------------------------------------------
# Truncated function algebra: pointwise saturating sum / composition


class TruncFunAlgebra(WeightAlgebra):
    """All f: [0,m] -> [0,m] with f(0)=0; add pointwise saturating, mul composition.

    This is the finite function-space construction over the saturating
    monoid on [0,m]: right-distributive and zero-sum-free, but (for m >= 2)
    not bi-strongly zero-sum-free. Elements are (m+1)-tuples (f(0),...,f(m)).
    """

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("TruncFun needs m >= 1")
        self.m = m
        self.name = f"TruncFun({m})"
        self.zero = (0,) * (m + 1)
        self.one = tuple(range(m + 1))

    def _check(self, f):
        if (
            not isinstance(f, tuple)
            or len(f) != self.m + 1
            or f[0] != 0
            or any(not (0 <= v <= self.m) for v in f)
        ):
            raise ValueError(f"{f!r} is not a valid {self.name} element")
        return f

    def add(self, a, b):
        m = self.m
        return tuple(min(m, x + y) for x, y in zip(a, b))

    def mul(self, a, b):
        # (a mul b)(c) = a(b(c))
        return tuple(a[v] for v in b)

    def describe(self, a):
        return "[" + ",".join(str(v) for v in a) + "]"

    def parse(self, value):
        if isinstance(value, str):
            value = [int(t) for t in re.findall(r"-?\d+", value)]
        return self._check(tuple(value))

    @property
    def is_finite(self):
        return True

    def elements(self):
        span = range(self.m + 1)
        for tail in itertools.product(span, repeat=self.m):
            yield (0,) + tail


# --------------------------------------------------------------------------
# Polynomials over the naturals with the monome-split product


@dataclass(frozen=True)
class Polynomial:
    """Coefficient sequence, index = degree, normalized (no trailing zeros)."""

    coeffs: tuple

    @staticmethod
    def of(coeffs: Sequence[int]) -> "Polynomial":
        coeffs = list(coeffs)
        if any(c < 0 for c in coeffs):
            raise ValueError("coefficients must be nonnegative")
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return Polynomial(tuple(coeffs))

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def is_monome(self):
        """At most one nonzero coefficient (the zero polynomial counts)."""
        return sum(1 for c in self.coeffs if c != 0) <= 1

    def at_zero(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def plus(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Polynomial.of(
            [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
        )

    def times(self, other: "Polynomial") -> "Polynomial":
        """Ordinary polynomial product."""
        if self.is_zero or other.is_zero:
            return Polynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial.of(out)

    def scale(self, k: int) -> "Polynomial":
        return Polynomial.of([k * c for c in self.coeffs])

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for deg in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[deg]
            if c == 0:
                continue
            if deg == 0:
                terms.append(str(c))
            else:
                x = "x" if deg == 1 else f"x^{deg}"
                terms.append(x if c == 1 else f"{c}{x}")
        return "+".join(terms)


POLY_X = Polynomial((0, 1))


class PolyMonomeAlgebra(WeightAlgebra):
    """Polynomials over N: coefficientwise add; mul splits on the right factor.

    p mul q is the ordinary product when q is a monome, and p(0)*q otherwise.
    Right-distributive but not bi-strongly zero-sum-free (x mul (1+x) = 0).
    """

    name = "PolyMonome"

    def __init__(self):
        self.zero = Polynomial(())
        self.one = Polynomial((1,))

    def add(self, a: Polynomial, b: Polynomial) -> Polynomial:
        return a.plus(b)

    def mul(self, a: Polynomial, b: Polynomial) -> Polynomial:
        if b.is_monome:
            return a.times(b)
        return b.scale(a.at_zero())

    def describe(self, a):
        return str(a)

    def parse(self, value):
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, int):
            return Polynomial.of([value])
        if isinstance(value, (list, tuple)):
            return Polynomial.of(value)
        text = str(value).replace(" ", "")
        if not re.fullmatch(r"[0-9x^+]+", text):
            raise ValueError(f"cannot parse polynomial {value!r}")
        coeffs: dict = {}
        for term in text.split("+"):
            m = re.fullmatch(r"(?:(\d+))?(x(?:\^(\d+))?)?", term)
            if not m or not term:
                raise ValueError(f"cannot parse polynomial term {term!r}")
            c = int(m.group(1)) if m.group(1) else (1 if m.group(2) else 0)
            deg = 0 if not m.group(2) else (int(m.group(3)) if m.group(3) else 1)
            coeffs[deg] = coeffs.get(deg, 0) + c
        size = max(coeffs, default=-1) + 1
        return Polynomial.of([coeffs.get(d, 0) for d in range(size)])


# --------------------------------------------------------------------------
# Bundled instances


def boole() -> FiniteTableAlgebra:
    return FiniteTableAlgebra(
        "Boole",
        ("0", "1"),
        ((0, 1), (1, 1)),
        ((0, 0), (0, 1)),
        zero_index=0,
        one_index=1,
    )


def pentagon() -> FiniteTableAlgebra:
    # bottom=0, top=1, chain p < q on one side, r alone on the other
    return lattice_algebra(
        "PentagonN5",
        ("0", "p", "q", "r", "1"),
        [("0", "p"), ("p", "q"), ("q", "1"), ("0", "r"), ("r", "1")],
    )


def hexagon() -> FiniteTableAlgebra:
    # two incomparable 2-chains p < q and r < s between bottom and top
    return lattice_algebra(
        "Hexagon",
        ("0", "p", "q", "r", "s", "1"),
        [("0", "p"), ("p", "q"), ("q", "1"), ("0", "r"), ("r", "s"), ("s", "1")],
    )


def diamond() -> FiniteTableAlgebra:
    """The 4-element distributive lattice (2 x 2): join/meet of two incomparables."""
    return lattice_algebra(
        "Diamond",
        ("0", "p", "q", "1"),
        [("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")],
    )


def b4() -> FiniteTableAlgebra:
    # 2+2=3 collapses sums of the "big" elements; 2*2=0 creates a zero divisor
    return FiniteTableAlgebra(
        "B4",
        ("0", "1", "2", "3"),
        (
            (0, 1, 2, 3),
            (1, 1, 3, 3),
            (2, 3, 3, 3),
            (3, 3, 3, 3),
        ),
        (
            (0, 0, 0, 0),
            (0, 1, 2, 3),
            (0, 2, 0, 2),
            (0, 3, 2, 3),
        ),
        zero_index=0,
        one_index=1,
    )


def b3prime() -> FiniteTableAlgebra:
    return FiniteTableAlgebra(
        "B3prime",
        ("0'", "1'", "2'"),
        (
            (0, 1, 2),
            (1, 2, 2),
            (2, 2, 2),
        ),
        (
            (0, 0, 0),
            (0, 1, 2),
            (0, 2, 0),
        ),
        zero_index=0,
        one_index=1,
    )


def nat_plus_min() -> NatPlusMinAlgebra:
    return NatPlusMinAlgebra()


def nat_plus_plus() -> NatPlusPlusAlgebra:
    return NatPlusPlusAlgebra()


def nat_plus_plus_table(cap: int = 3) -> FiniteTableAlgebra:
    """Finite truncation of the plus-plus algebra: naturals 0..cap under
    saturating addition (for both operations) plus the fresh absorbing zero.
    Positive, hence usable wherever a finite strongly zero-sum-free instance
    is needed."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    names = ("zero",) + tuple(str(i) for i in range(cap + 1))

    def add_idx(i, j):
        if i == 0:
            return j
        if j == 0:
            return i
        return min(cap, (i - 1) + (j - 1)) + 1

    def mul_idx(i, j):
        if i == 0 or j == 0:
            return 0
        return min(cap, (i - 1) + (j - 1)) + 1

    n = cap + 2
    add = [[add_idx(i, j) for j in range(n)] for i in range(n)]
    mul = [[mul_idx(i, j) for j in range(n)] for i in range(n)]
    return FiniteTableAlgebra(f"NatPlusPlus[{cap}]", names, add, mul, 0, 1)


def trunc_fun(m: int = 2) -> TruncFunAlgebra:
    return TruncFunAlgebra(m)


def poly_monome() -> PolyMonomeAlgebra:
    return PolyMonomeAlgebra()


_BUILTINS: dict = {
    "boole": boole,
    "natplusmin": nat_plus_min,
    "natplusplus": nat_plus_plus,
    "pentagonn5": pentagon,
    "pentagon": pentagon,
    "hexagon": hexagon,
    "b4": b4,
    "b3prime": b3prime,
    "polymonome": poly_monome,
}

BUILTIN_NAMES = (
    "Boole",
    "NatPlusMin",
    "NatPlusPlus",
    "PentagonN5",
    "Hexagon",
    "B4",
    "B3prime",
    "TruncFun(m)",
    "PolyMonome",
)


def builtin(name: str) -> WeightAlgebra:
    """Look up a bundled algebra by name (case-insensitive; TruncFun(m) parameterized)."""
    key = name.strip().lower()
    m = re.fullmatch(r"truncfun\((\d+)\)", key)
    if m:
        return trunc_fun(int(m.group(1)))
    if key == "truncfun":
        return trunc_fun()
    if key in _BUILTINS:
        return _BUILTINS[key]()
    raise UnknownAlgebraError(
        f"unknown algebra {name!r}; valid names: {', '.join(BUILTIN_NAMES)}"
    )


def bundled_finite_algebras() -> tuple:
    """The finite bundled algebras, in a fixed order (used by checks and demos)."""
    return (boole(), pentagon(), hexagon(), b4(), b3prime(), trunc_fun(2))
