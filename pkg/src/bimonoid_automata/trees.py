"""Ranked trees, cuts, and weighted tree automata over a strong bimonoid.

Positions are tuples of 1-based child indices, the root being ``()``. Runs
label every position with a state. Cuts are maximal antichains of positions:
the sweep machinery behind the support theorems rewrites a cut either toward
the leaves (expand) or toward the root (merge).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Dict, Iterator, Optional, Sequence, Tuple

from .algebra import Semantics, WeightAlgebra

Position = Tuple[int, ...]
Cut = Tuple[Position, ...]


class RankedAlphabet:
    """Finite symbol set with a rank (arity) per symbol; some symbol has rank 0."""

    def __init__(self, ranks: dict):
        if not ranks:
            raise ValueError("alphabet must be nonempty")
        for sym, k in ranks.items():
            if not isinstance(k, int) or k < 0:
                raise ValueError(f"rank of {sym!r} must be a natural number, got {k!r}")
        if all(k != 0 for k in ranks.values()):
            raise ValueError("alphabet needs at least one rank-0 symbol")
        self._ranks = dict(ranks)
        self.symbols = tuple(ranks)

    def rank(self, symbol: str) -> int:
        try:
            return self._ranks[symbol]
        except KeyError:
            raise ValueError(
                f"unknown symbol {symbol!r} (alphabet: {', '.join(self.symbols)})"
            ) from None

    def __contains__(self, symbol):
        return symbol in self._ranks

    def __iter__(self):
        return iter(self.symbols)

    def of_rank(self, k: int) -> tuple:
        return tuple(s for s in self.symbols if self._ranks[s] == k)

    @property
    def max_rank(self) -> int:
        return max(self._ranks.values())

    def to_dict(self) -> dict:
        return dict(self._ranks)

    def __eq__(self, other):
        return isinstance(other, RankedAlphabet) and self._ranks == other._ranks

    def __repr__(self):
        inner = ", ".join(f"{s}:{k}" for s, k in self._ranks.items())
        return f"RankedAlphabet({{{inner}}})"


@dataclass(frozen=True)
class AlphabetClass:
    trivial: bool
    monadic: bool
    string_ranked: bool
    branching: bool


def classify_alphabet(alphabet: RankedAlphabet) -> AlphabetClass:
    ranks = [alphabet.rank(s) for s in alphabet.symbols]
    trivial = all(k == 0 for k in ranks)
    monadic = all(k <= 1 for k in ranks)
    string_ranked = monadic and len(alphabet.of_rank(0)) == 1 and bool(alphabet.of_rank(1))
    return AlphabetClass(trivial, monadic, string_ranked, branching=not monadic)


@dataclass(frozen=True)
class Tree:
    """A term: a symbol with exactly rank-many child trees."""

    symbol: str
    children: Tuple["Tree", ...] = ()

    def __str__(self):
        if not self.children:
            return self.symbol
        return f"{self.symbol}({','.join(str(c) for c in self.children)})"


def tree(symbol: str, *children: Tree) -> Tree:
    return Tree(symbol, tuple(children))


_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z_0-9']*|[(),])")


def parse(text: str, alphabet: Optional[RankedAlphabet] = None) -> Tree:
    """Parse a term string like ``sigma(alpha,sigma(alpha,alpha))``.

    Whitespace is insignificant; symbols are identifiers. With an alphabet,
    membership and arity are enforced.
    """
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError(f"cannot tokenize tree text at {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    cursor = 0

    def peek():
        return tokens[cursor] if cursor < len(tokens) else None

    def take(expected=None):
        nonlocal cursor
        if cursor >= len(tokens):
            raise ValueError(f"unexpected end of tree text {text!r}")
        tok = tokens[cursor]
        if expected is not None and tok != expected:
            raise ValueError(f"expected {expected!r}, found {tok!r} in {text!r}")
        cursor += 1
        return tok

    def node():
        sym = take()
        if sym in "(),":
            raise ValueError(f"expected a symbol, found {sym!r} in {text!r}")
        children = []
        if peek() == "(":
            take("(")
            children.append(node())
            while peek() == ",":
                take(",")
                children.append(node())
            take(")")
        if alphabet is not None:
            k = alphabet.rank(sym)
            if k != len(children):
                raise ValueError(
                    f"symbol {sym!r} has rank {k} but {len(children)} children in {text!r}"
                )
        return Tree(sym, tuple(children))

    result = node()
    if cursor != len(tokens):
        raise ValueError(f"trailing input {tokens[cursor:]} in {text!r}")
    return result


def positions(t: Tree) -> list:
    """All positions in lexicographic order (root first, then each subtree)."""
    out = [()]
    for i, child in enumerate(t.children, start=1):
        out.extend((i,) + p for p in positions(child))
    return out


def postorder(t: Tree) -> list:
    """All positions in depth-first post-order (children blocks, then root)."""
    out = []
    for i, child in enumerate(t.children, start=1):
        out.extend((i,) + p for p in postorder(child))
    out.append(())
    return out


def subtree_at(t: Tree, pos: Position) -> Tree:
    for i in pos:
        if not 1 <= i <= len(t.children):
            raise ValueError(f"invalid position {pos}")
        t = t.children[i - 1]
    return t


def label_at(t: Tree, pos: Position) -> str:
    return subtree_at(t, pos).symbol


def leaves(t: Tree) -> list:
    """Leaf positions in left-to-right order."""
    return [p for p in positions(t) if not subtree_at(t, p).children]


def size(t: Tree) -> int:
    return 1 + sum(size(c) for c in t.children)


def is_prefix(p: Position, q: Position) -> bool:
    return len(p) <= len(q) and q[: len(p)] == p


def left_of(p: Position, q: Position) -> bool:
    """Strictly left in the tree: the positions diverge and p takes the
    smaller branch at the divergence point."""
    for a, b in zip(p, q):
        if a != b:
            return a < b
    return False


def enumerate_trees(alphabet: RankedAlphabet, max_size: int) -> Iterator[Tree]:
    """All trees with at most max_size nodes, by size then symbol order."""
    by_size: Dict[int, list] = {}

    def of_size(s):
        if s in by_size:
            return by_size[s]
        found = []
        for sym in alphabet.symbols:
            k = alphabet.rank(sym)
            if k == 0:
                if s == 1:
                    found.append(Tree(sym))
                continue
            if s < k + 1:
                continue
            for parts in _compositions(s - 1, k):
                for combo in itertools.product(*(of_size(p) for p in parts)):
                    found.append(Tree(sym, combo))
        by_size[s] = found
        return found

    for s in range(1, max_size + 1):
        yield from of_size(s)


def _compositions(total: int, parts: int) -> Iterator[tuple]:
    """Ordered compositions of total into `parts` positive summands."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


# --------------------------------------------------------------------------
# Weighted tree automata


class TreeAutomaton:
    """States, transition weights per (state word, symbol, state), root weights.

    Transitions are stored sparsely: a missing entry means zero. Input may be
    a mapping (state_word, symbol) -> {state: weight} or an iterable of
    (state_word, symbol, state, weight) quadruples, with states given by name.
    """

    def __init__(self, algebra: WeightAlgebra, alphabet: RankedAlphabet, states, transitions, root_weights):
        if not states:
            raise ValueError("state set must be nonempty")
        self.algebra = algebra
        self.alphabet = alphabet
        self.states = tuple(states)
        if len(set(self.states)) != len(self.states):
            raise ValueError("duplicate state names")
        if any(s in alphabet for s in self.states):
            raise ValueError("state names must be disjoint from the alphabet")
        self._state_index = {s: i for i, s in enumerate(self.states)}
        self.root_weights = self._vector(root_weights)
        self._delta: Dict[tuple, dict] = {}
        if isinstance(transitions, dict):
            quads = [
                (sw, sym, q, w)
                for (sw, sym), row in transitions.items()
                for q, w in row.items()
            ]
        else:
            quads = list(transitions)
        for sw, sym, q, w in quads:
            k = self.alphabet.rank(sym)
            word = tuple(self.state_index(p) for p in sw)
            if len(word) != k:
                raise ValueError(
                    f"state word {sw!r} has length {len(word)} but {sym!r} has rank {k}"
                )
            self._delta.setdefault((word, sym), {})[self.state_index(q)] = w

    def _vector(self, data):
        n = len(self.states)
        if isinstance(data, dict):
            vec = [self.algebra.zero] * n
            for name, w in data.items():
                vec[self.state_index(name)] = w
            return tuple(vec)
        vec = tuple(data)
        if len(vec) != n:
            raise ValueError(f"root weight vector has {len(vec)} entries, expected {n}")
        return vec

    def state_index(self, name) -> int:
        if isinstance(name, int):
            if 0 <= name < len(self.states):
                return name
            raise ValueError(f"state index {name} out of range")
        try:
            return self._state_index[name]
        except KeyError:
            raise ValueError(f"unknown state {name!r}") from None

    def delta(self, state_word: tuple, symbol: str, state: int):
        row = self._delta.get((tuple(state_word), symbol))
        if row is None:
            return self.algebra.zero
        return row.get(state, self.algebra.zero)

    def delta_row(self, state_word: tuple, symbol: str) -> dict:
        """Stored target-state weights for one (state word, symbol); sparse."""
        return self._delta.get((tuple(state_word), symbol), {})

    def stored_transitions(self) -> Iterator[tuple]:
        for (sw, sym) in sorted(self._delta, key=lambda key: (key[1], key[0])):
            row = self._delta[(sw, sym)]
            for q in sorted(row):
                yield sw, sym, q, row[q]

    def check_tree(self, t: Tree) -> Tree:
        k = self.alphabet.rank(t.symbol)
        if k != len(t.children):
            raise ValueError(
                f"symbol {t.symbol!r} has rank {k} but {len(t.children)} children"
            )
        for c in t.children:
            self.check_tree(c)
        return t

    def with_algebra(self, algebra: WeightAlgebra) -> "TreeAutomaton":
        quads = [
            (tuple(self.states[p] for p in sw), sym, self.states[q], w)
            for sw, sym, q, w in self.stored_transitions()
        ]
        return TreeAutomaton(algebra, self.alphabet, self.states, quads, self.root_weights)

    def __repr__(self):
        return (
            f"<TreeAutomaton |Q|={len(self.states)} alphabet={self.alphabet.to_dict()} "
            f"over {self.algebra.name}>"
        )


def _normalize_run(automaton: TreeAutomaton, t: Tree, run) -> dict:
    pos = positions(t)
    mapped = {p: automaton.state_index(q) for p, q in run.items()}
    if set(mapped) != set(pos):
        raise ValueError("run domain does not match the tree's position set")
    return mapped


def enumerate_runs(automaton: TreeAutomaton, t: Tree) -> Iterator[dict]:
    """All state labelings: positions in lexicographic order, states odometer-style."""
    pos = positions(automaton.check_tree(t))
    for combo in itertools.product(range(len(automaton.states)), repeat=len(pos)):
        yield dict(zip(pos, combo))


def run_weight(automaton: TreeAutomaton, t: Tree, run) -> object:
    """Inductive weight of a run: child weights multiplied, then the local
    transition weight (empty products are one)."""
    alg = automaton.algebra
    run = _normalize_run(automaton, automaton.check_tree(t), run)

    def wt(node, pos):
        factors = []
        for i, child in enumerate(node.children, start=1):
            factors.append(wt(child, pos + (i,)))
        child_states = tuple(run[pos + (i,)] for i in range(1, len(node.children) + 1))
        factors.append(automaton.delta(child_states, node.symbol, run[pos]))
        return alg.product(factors)

    return wt(t, ())


def run_weight_postorder(automaton: TreeAutomaton, t: Tree, run) -> object:
    """The same run weight written as one flat product of local transition
    weights in post-order; computed independently of run_weight."""
    alg = automaton.algebra
    checked = automaton.check_tree(t)
    run = _normalize_run(automaton, checked, run)
    factors = []
    for u in postorder(checked):
        node = subtree_at(checked, u)
        child_states = tuple(run[u + (i,)] for i in range(1, len(node.children) + 1))
        factors.append(automaton.delta(child_states, node.symbol, run[u]))
    return alg.product(factors)


def run_semantics(automaton: TreeAutomaton, t: Tree, prune: bool = False):
    """Sum of run weight times root weight over all runs.

    Default: full odometer enumeration (cost baseline). With ``prune``, a
    depth-first assignment over post-order positions abandons zero prefixes;
    same value, far fewer operations on sparse automata.
    """
    alg = automaton.algebra
    t = automaton.check_tree(t)
    if not prune:
        return alg.sum(
            alg.mul(run_weight(automaton, t, run), automaton.root_weights[run[()]])
            for run in enumerate_runs(automaton, t)
        )

    po = postorder(t)
    nodes = {u: subtree_at(t, u) for u in po}
    assigned: dict = {}
    total = None

    def descend(i, acc):
        nonlocal total
        if i == len(po):
            final = alg.mul(acc, automaton.root_weights[assigned[()]]) if acc is not None else None
            if final is not None and not alg.is_zero(final):
                total = final if total is None else alg.add(total, final)
            return
        u = po[i]
        node = nodes[u]
        child_states = tuple(assigned[u + (j,)] for j in range(1, len(node.children) + 1))
        row = automaton.delta_row(child_states, node.symbol)
        for q in sorted(row):
            w = row[q]
            step = w if acc is None else alg.mul(acc, w)
            if alg.is_zero(step):
                continue
            assigned[u] = q
            descend(i + 1, step)
            del assigned[u]

    descend(0, None)
    return alg.zero if total is None else total


def state_vector(automaton: TreeAutomaton, t: Tree) -> tuple:
    """Bottom-up evolved weight vector (the initial-algebra recursion).

    Only stored transitions are visited; absent entries would contribute a
    zero factor and change nothing.
    """
    alg = automaton.algebra
    t = automaton.check_tree(t)
    nq = len(automaton.states)
    memo: dict = {}

    def h(node):
        if node in memo:
            return memo[node]
        child_vecs = [h(c) for c in node.children]
        k = len(node.children)
        sums: list = [None] * nq
        for sw in sorted(
            word for (word, sym) in automaton._delta if sym == node.symbol and len(word) == k
        ):
            row = automaton._delta[(sw, node.symbol)]
            prod = None
            for i, qi in enumerate(sw):
                v = child_vecs[i][qi]
                prod = v if prod is None else alg.mul(prod, v)
            for q in sorted(row):
                term = row[q] if prod is None else alg.mul(prod, row[q])
                sums[q] = term if sums[q] is None else alg.add(sums[q], term)
        vec = tuple(alg.zero if s is None else s for s in sums)
        memo[node] = vec
        return vec

    return h(t)


def initial_semantics(automaton: TreeAutomaton, t: Tree):
    alg = automaton.algebra
    vec = state_vector(automaton, t)
    return alg.sum(alg.mul(vec[q], automaton.root_weights[q]) for q in range(len(vec)))


def evaluate(automaton: TreeAutomaton, t: Tree, semantics: Semantics, prune: bool = False):
    if semantics is Semantics.RUN:
        return run_semantics(automaton, t, prune=prune)
    return initial_semantics(automaton, t)


def in_support(automaton: TreeAutomaton, t: Tree, semantics: Semantics) -> bool:
    return not automaton.algebra.is_zero(evaluate(automaton, t, semantics, prune=True))


def image_up_to(automaton: TreeAutomaton, max_size: int, semantics: Semantics) -> list:
    """Exact value set over all trees with <= max_size nodes (deterministic
    enumeration), deduplicated by algebra equality in first-seen order."""
    if max_size < 1:
        raise ValueError("max_size must be >= 1")
    alg = automaton.algebra
    values: list = []
    for t in enumerate_trees(automaton.alphabet, max_size):
        v = evaluate(automaton, t, semantics, prune=True)
        if not any(alg.equal(v, seen) for seen in values):
            values.append(v)
    return values


# --------------------------------------------------------------------------
# Cuts: maximal antichains and the two rewrite directions


def validate_cut(t: Tree, cut: Cut) -> Cut:
    """Check the three cut conditions: independent, ordered, complete."""
    cut = tuple(tuple(p) for p in cut)
    if not cut:
        raise ValueError("a cut is nonempty")
    pos = set(positions(t))
    for p in cut:
        if p not in pos:
            raise ValueError(f"position {p} is not in the tree")
    for i, p in enumerate(cut):
        for q in cut[i + 1 :]:
            if is_prefix(p, q) or is_prefix(q, p):
                raise ValueError(f"cut positions {p} and {q} are not independent")
    for p, q in zip(cut, cut[1:]):
        if not left_of(p, q):
            raise ValueError(f"cut positions {p}, {q} are not in left-to-right order")
    for leaf in leaves(t):
        if not any(is_prefix(p, leaf) for p in cut):
            raise ValueError(f"cut does not cover leaf {leaf}")
    return cut


def leaves_cut(t: Tree) -> Cut:
    return tuple(leaves(t))


def all_cuts(t: Tree) -> list:
    """Every cut through the tree (finite; includes the root cut and leaves cut)."""

    def rec(node):
        out = [((),)]
        if node.children:
            child_cuts = [rec(c) for c in node.children]
            for combo in itertools.product(*child_cuts):
                merged = tuple(
                    (i,) + p for i, part in enumerate(combo, start=1) for p in part
                )
                out.append(merged)
        return out

    return rec(t)


def expand(t: Tree, cut: Cut, i: int) -> Cut:
    """One step toward the leaves: replace cut[i] by its children."""
    cut = tuple(tuple(p) for p in cut)
    if not 0 <= i < len(cut):
        raise ValueError(f"cut index {i} out of range")
    w = cut[i]
    k = len(subtree_at(t, w).children)
    if k == 0:
        raise ValueError(f"position {w} is a leaf and cannot be expanded")
    return cut[:i] + tuple(w + (j,) for j in range(1, k + 1)) + cut[i + 1 :]


def merge(t: Tree, cut: Cut, i: int) -> Cut:
    """One step toward the root: replace the full children block starting at
    cut[i] by the common parent."""
    cut = tuple(tuple(p) for p in cut)
    if not 0 <= i < len(cut):
        raise ValueError(f"cut index {i} out of range")
    w = cut[i]
    if not w or w[-1] != 1:
        raise ValueError(f"position {w} does not start a children block")
    parent = w[:-1]
    k = len(subtree_at(t, parent).children)
    block = tuple(parent + (j,) for j in range(1, k + 1))
    if cut[i : i + k] != block:
        raise ValueError(
            f"cut positions at index {i} are not exactly the children of {parent}"
        )
    return cut[:i] + (parent,) + cut[i + k :]


def expandable_indices(t: Tree, cut: Cut) -> list:
    return [i for i, w in enumerate(cut) if subtree_at(t, w).children]


def mergeable_indices(t: Tree, cut: Cut) -> list:
    found = []
    for i, w in enumerate(cut):
        if not w or w[-1] != 1:
            continue
        parent = w[:-1]
        k = len(subtree_at(t, parent).children)
        if cut[i : i + k] == tuple(parent + (j,) for j in range(1, k + 1)):
            found.append(i)
    return found


def is_normal_form(t: Tree, cut: Cut, relation: str) -> bool:
    """No rewrite step applies: relation 'expand' (toward leaves) or 'merge'."""
    if relation == "expand":
        return not expandable_indices(t, cut)
    if relation == "merge":
        return not mergeable_indices(t, cut)
    raise ValueError("relation must be 'expand' or 'merge'")


def cut_partial_product(automaton: TreeAutomaton, t: Tree, run, cut: Cut):
    """The sweep invariant: a post-order product over positions not strictly
    below the cut, taking the evolved-vector entry on cut positions and the
    local transition weight elsewhere, times the root weight.

    At the leaves cut this equals run_weight * root weight; at the root cut it
    equals h(t)_{run(root)} * root weight.
    """
    alg = automaton.algebra
    checked = automaton.check_tree(t)
    run = _normalize_run(automaton, checked, run)
    cut = validate_cut(checked, cut)
    cutset = set(cut)
    included = [
        u
        for u in postorder(checked)
        if not any(len(c) < len(u) and is_prefix(c, u) for c in cutset)
    ]
    h_memo: dict = {}

    def h_at(pos):
        if pos not in h_memo:
            h_memo[pos] = state_vector(automaton, subtree_at(checked, pos))
        return h_memo[pos]

    factors = []
    for u in included:
        if u in cutset:
            factors.append(h_at(u)[run[u]])
        else:
            node = subtree_at(checked, u)
            child_states = tuple(run[u + (i,)] for i in range(1, len(node.children) + 1))
            factors.append(automaton.delta(child_states, node.symbol, run[u]))
    return alg.mul(alg.product(factors), automaton.root_weights[run[()]])


# --------------------------------------------------------------------------
# The branching probe automaton and nullary restriction


def branching_probe_automaton(
    algebra: WeightAlgebra,
    a,
    b,
    bp,
    c,
    alphabet: RankedAlphabet,
    sigma: Optional[str] = None,
    alpha: Optional[str] = None,
) -> TreeAutomaton:
    """Six-state automaton separating the two semantics over a branching alphabet.

    On the doubled tree sigma(alpha,...,alpha,sigma(alpha,...,alpha)) its
    initial-algebra value is a*(b+b')*c while the run value is a*b*c + a*b'*c.
    The two b-seeded states are distinct even when b equals b'.
    """
    if sigma is None:
        candidates = [s for s in alphabet.symbols if alphabet.rank(s) >= 2]
        if not candidates:
            raise ValueError("alphabet has no symbol of rank >= 2")
        sigma = candidates[0]
    if alpha is None:
        alpha = alphabet.of_rank(0)[0]
    k = alphabet.rank(sigma)
    if k < 2:
        raise ValueError(f"symbol {sigma!r} has rank {k}, need >= 2")
    if alphabet.rank(alpha) != 0:
        raise ValueError(f"symbol {alpha!r} is not nullary")
    one, zero = algebra.one, algebra.zero
    states = ("seed_a", "seed_b1", "seed_b2", "unit", "q1", "q2")
    quads = [
        ((), alpha, "seed_a", a),
        ((), alpha, "seed_b1", b),
        ((), alpha, "seed_b2", bp),
        ((), alpha, "unit", one),
        (("seed_b1",) + ("unit",) * (k - 1), sigma, "q1", one),
        (("seed_b2",) + ("unit",) * (k - 1), sigma, "q1", one),
        (("seed_a",) + ("unit",) * (k - 2) + ("q1",), sigma, "q2", one),
    ]
    final = {"q2": c}
    return TreeAutomaton(algebra, alphabet, states, quads, final)


def doubled_probe_tree(alphabet: RankedAlphabet, sigma: Optional[str] = None, alpha: Optional[str] = None) -> Tree:
    """sigma(alpha,...,alpha,sigma(alpha,...,alpha)): the input the probe singles out."""
    if sigma is None:
        sigma = [s for s in alphabet.symbols if alphabet.rank(s) >= 2][0]
    if alpha is None:
        alpha = alphabet.of_rank(0)[0]
    k = alphabet.rank(sigma)
    inner = Tree(sigma, (Tree(alpha),) * k)
    return Tree(sigma, (Tree(alpha),) * (k - 1) + (inner,))


def restrict_to_nullary(automaton: TreeAutomaton, alpha: str) -> TreeAutomaton:
    """Shrink a monadic non-trivial automaton to the alphabet {alpha} + unary part.

    States and all retained weights are unchanged, so on trees over the
    restricted alphabet both semantics agree with the original automaton's.
    """
    cls = classify_alphabet(automaton.alphabet)
    if not cls.monadic or cls.trivial:
        raise ValueError("restriction needs a monadic, non-trivial alphabet")
    if alpha not in automaton.alphabet or automaton.alphabet.rank(alpha) != 0:
        raise ValueError(f"{alpha!r} is not a nullary symbol of the alphabet")
    ranks = {alpha: 0}
    ranks.update({s: 1 for s in automaton.alphabet.of_rank(1)})
    restricted = RankedAlphabet(ranks)
    quads = [
        (tuple(automaton.states[p] for p in sw), sym, automaton.states[q], w)
        for sw, sym, q, w in automaton.stored_transitions()
        if sym in restricted
    ]
    return TreeAutomaton(
        automaton.algebra, restricted, automaton.states, quads, automaton.root_weights
    )
