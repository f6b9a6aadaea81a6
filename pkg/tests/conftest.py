"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately re-derive expected values by brute force
(subset-construction NFA simulation, dense state-word enumeration, pointwise
function evaluation) so the library code paths they check are never trusted
to test themselves.
"""

import itertools
import random

import pytest

import bimonoid_automata as ba
from bimonoid_automata import trees as T
from bimonoid_automata import words as W


@pytest.fixture(scope="session")
def finite_algebras():
    return ba.bundled_finite_algebras()


@pytest.fixture(scope="session")
def branching_alphabet():
    return T.RankedAlphabet({"alpha": 0, "sigma": 2})


# --------------------------------------------------------------------------
# NFA oracle: textbook subset-construction simulation


def nfa_accepts(initial, finals, arcs, word):
    current = set(initial)
    for a in word:
        current = {q2 for q in current for (p, sym, q2) in arcs if p == q and sym == a}
    return bool(current & set(finals))


def nfa_as_boole_automaton(alphabet, states, initial, finals, arcs):
    alg = ba.boole()
    return W.WordAutomaton(
        alg,
        alphabet,
        states,
        {q: 1 for q in initial},
        {q: 1 for q in finals},
        [(p, a, q, 1) for (p, a, q) in arcs],
    )


# --------------------------------------------------------------------------
# Dense oracle for the bottom-up state vector (enumerates every state word)


def dense_state_vector(automaton, t):
    alg = automaton.algebra
    nq = len(automaton.states)
    child_vecs = [dense_state_vector(automaton, c) for c in t.children]
    k = len(t.children)
    out = []
    for q in range(nq):
        total = alg.zero
        for sw in itertools.product(range(nq), repeat=k):
            term = alg.one
            for i, qi in enumerate(sw):
                term = alg.mul(term, child_vecs[i][qi])
            term = alg.mul(term, automaton.delta(sw, t.symbol, q))
            total = alg.add(total, term)
        out.append(total)
    return tuple(out)


# --------------------------------------------------------------------------
# Random trees and runs


def random_tree(rng: random.Random, alphabet: T.RankedAlphabet, max_depth: int) -> T.Tree:
    nullary = alphabet.of_rank(0)
    if max_depth <= 1:
        return T.Tree(nullary[rng.randrange(len(nullary))])
    sym = alphabet.symbols[rng.randrange(len(alphabet.symbols))]
    k = alphabet.rank(sym)
    return T.Tree(sym, tuple(random_tree(rng, alphabet, max_depth - 1) for _ in range(k)))


def random_run(rng: random.Random, automaton, t):
    return {p: rng.randrange(len(automaton.states)) for p in T.positions(t)}


# --------------------------------------------------------------------------
# Cut-rewrite endpoint sets, computed over the whole rewrite DAG. The memoized
# union over successors covers the endpoint of *every* maximal chain without
# enumerating chains one by one; every produced cut is validated on the way.


def expand_normal_forms(t, cut, memo):
    if cut in memo:
        return memo[cut]
    succs = []
    for i in T.expandable_indices(t, cut):
        nxt = T.expand(t, cut, i)
        T.validate_cut(t, nxt)
        succs.append(nxt)
    result = (
        frozenset([cut])
        if not succs
        else frozenset().union(*(expand_normal_forms(t, s, memo) for s in succs))
    )
    memo[cut] = result
    return result


def merge_normal_forms(t, cut, memo):
    if cut in memo:
        return memo[cut]
    succs = []
    for i in T.mergeable_indices(t, cut):
        nxt = T.merge(t, cut, i)
        T.validate_cut(t, nxt)
        succs.append(nxt)
    result = (
        frozenset([cut])
        if not succs
        else frozenset().union(*(merge_normal_forms(t, s, memo) for s in succs))
    )
    memo[cut] = result
    return result
