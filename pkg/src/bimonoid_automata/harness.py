"""Desk-scale verification of the support and image theorems.

Each check decides the algebra-side hypothesis exhaustively, then either
sweeps random automata over bounded inputs expecting agreement, or builds the
probe automaton from the property checker's witness and confirms the
predicted one-sided support failure. A check never concludes that a theorem
is false: an unexpected outcome is reported as inconsistent and treated as an
implementation bug signal by callers.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Optional

from . import trees as T
from . import words as W
from .algebra import CountingAlgebra, Semantics, WeightAlgebra
from .properties import BimonoidProperty, HalfCondition, check, check_half
from .trees import RankedAlphabet, Tree, TreeAutomaton, classify_alphabet
from .words import WordAutomaton

DEFAULT_WORD_ALPHABET = ("a", "b")
DEFAULT_TREE_ALPHABET = {"alpha": 0, "sigma": 2}


@dataclass
class TheoremCheckConfig:
    """Bounds, trial counts and seeding for one theorem check."""

    algebra: WeightAlgebra
    word_alphabet: tuple = DEFAULT_WORD_ALPHABET
    tree_alphabet: Optional[RankedAlphabet] = None
    max_word_len: int = 4
    max_tree_size: int = 7
    num_automata: int = 100
    max_states: int = 3
    seed: int = 42

    def __post_init__(self):
        if self.tree_alphabet is None:
            self.tree_alphabet = RankedAlphabet(dict(DEFAULT_TREE_ALPHABET))
        if min(self.max_word_len, self.max_tree_size, self.num_automata, self.max_states) < 1:
            raise ValueError("bounds and trial counts must be >= 1")


@dataclass
class CheckWitness:
    automaton: object
    input: object
    run_value: str
    init_value: str
    direction: str  # "run-only" | "init-only" | "values-differ"
    params: Optional[tuple] = None

    def to_dict(self):
        label = str(self.input) if isinstance(self.input, Tree) else " ".join(self.input) or "<empty>"
        d = {
            "input": label,
            "run": self.run_value,
            "init": self.init_value,
            "direction": self.direction,
        }
        if self.params is not None:
            d["params"] = list(self.params)
        return d


@dataclass
class CheckReport:
    theorem: str
    algebra: str
    verdict: str  # "consistent" | "counterexample"
    as_predicted: bool
    hypothesis: dict
    witness: Optional[CheckWitness] = None
    stats: dict = field(default_factory=dict)
    seed: Optional[int] = None

    def to_dict(self):
        d = {
            "theorem": self.theorem,
            "algebra": self.algebra,
            "verdict": self.verdict,
            "as_predicted": self.as_predicted,
            "hypothesis": self.hypothesis,
            "stats": self.stats,
        }
        if self.seed is not None:
            d["seed"] = self.seed
        if self.witness is not None:
            d["witness"] = self.witness.to_dict()
        return d

    def __str__(self):
        lines = [f"{self.theorem} on {self.algebra}: {self.verdict}"
                 + ("" if self.as_predicted else "  ** NOT AS PREDICTED **")]
        for k, v in self.hypothesis.items():
            lines.append(f"  hypothesis {k}: {v}")
        if self.witness is not None:
            w = self.witness.to_dict()
            lines.append(
                f"  witness input={w['input']} run={w['run']} init={w['init']} ({w['direction']})"
            )
            if "params" in w:
                lines.append(f"  witness params: {', '.join(w['params'])}")
        for k, v in self.stats.items():
            lines.append(f"  {k}: {v}")
        if self.seed is not None:
            lines.append(f"  seed: {self.seed}")
        return "\n".join(lines)


# --------------------------------------------------------------------------
# Random automata (zero-biased weights make support differences findable)


def random_weight(rng: random.Random, carrier, zero, zero_bias: float = 0.5):
    if rng.random() < zero_bias:
        return zero
    return carrier[rng.randrange(len(carrier))]


def random_word_automaton(
    rng: random.Random,
    algebra: WeightAlgebra,
    alphabet,
    max_states: int = 3,
    zero_bias: float = 0.5,
) -> WordAutomaton:
    carrier = list(algebra.elements())
    n = rng.randint(1, max_states)
    states = tuple(f"q{i}" for i in range(n))
    draw = lambda: random_weight(rng, carrier, algebra.zero, zero_bias)
    initial = tuple(draw() for _ in states)
    final = tuple(draw() for _ in states)
    matrices = {
        a: [[draw() for _ in states] for _ in states] for a in alphabet
    }
    return WordAutomaton(algebra, alphabet, states, initial, final, matrices)


def random_tree_automaton(
    rng: random.Random,
    algebra: WeightAlgebra,
    alphabet: RankedAlphabet,
    max_states: int = 3,
    zero_bias: float = 0.5,
) -> TreeAutomaton:
    carrier = list(algebra.elements())
    n = rng.randint(1, max_states)
    states = tuple(f"q{i}" for i in range(n))
    draw = lambda: random_weight(rng, carrier, algebra.zero, zero_bias)
    quads = []
    for sym in alphabet.symbols:
        k = alphabet.rank(sym)
        for sw in itertools.product(states, repeat=k):
            for q in states:
                w = draw()
                if not algebra.is_zero(w):
                    quads.append((sw, sym, q, w))
    final = tuple(draw() for _ in states)
    return TreeAutomaton(algebra, alphabet, states, quads, final)


def random_tree_run(rng: random.Random, automaton: TreeAutomaton, t: Tree) -> dict:
    return {p: rng.randrange(len(automaton.states)) for p in T.positions(t)}


# --------------------------------------------------------------------------
# Support theorems


def _word_half_failure(alg):
    """First failing word half-condition, checked in a fixed order."""
    for half in (HalfCondition.RUN_TO_INIT, HalfCondition.INIT_TO_RUN):
        verdict = check_half(alg, half)
        if not verdict.holds:
            return half, verdict
    return None, None


def _tree_half_failure(alg):
    for half in (HalfCondition.TREE_RUN_TO_INIT, HalfCondition.TREE_INIT_TO_RUN):
        verdict = check_half(alg, half)
        if not verdict.holds:
            return half, verdict
    return None, None


def check_support_theorem_words(config: TheoremCheckConfig) -> CheckReport:
    """Supports of the two word semantics coincide iff the algebra is strongly
    zero-sum-free: sweep when the hypothesis holds, probe when it fails."""
    alg = config.algebra
    strongly = check(alg, BimonoidProperty.STRONGLY_ZSF)
    hypothesis = {"strongly-zero-sum-free": strongly.holds}

    if strongly.holds:
        rng = random.Random(config.seed)
        inputs = 0
        for trial in range(config.num_automata):
            automaton = random_word_automaton(rng, alg, config.word_alphabet, config.max_states)
            for word in W.all_words(config.word_alphabet, config.max_word_len):
                inputs += 1
                run_in = W.in_support(automaton, word, Semantics.RUN)
                init_in = W.in_support(automaton, word, Semantics.INIT)
                if run_in != init_in:
                    witness = CheckWitness(
                        automaton,
                        word,
                        alg.describe(W.run_semantics(automaton, word, prune=True)),
                        alg.describe(W.initial_semantics(automaton, word)),
                        "run-only" if run_in else "init-only",
                    )
                    return CheckReport(
                        "supports-words", alg.name, "counterexample", False,
                        hypothesis, witness,
                        {"automata_checked": trial + 1, "inputs_checked": inputs},
                        config.seed,
                    )
        return CheckReport(
            "supports-words", alg.name, "consistent", True, hypothesis, None,
            {"automata_checked": config.num_automata, "inputs_checked": inputs},
            config.seed,
        )

    half, verdict = _word_half_failure(alg)
    a, b, c = verdict.witness
    gamma = config.word_alphabet[0]
    automaton = W.probe_automaton(alg, a, b, c, gamma, config.word_alphabet)
    word = (gamma,)
    run_val = W.run_semantics(automaton, word)
    init_val = W.initial_semantics(automaton, word)
    run_in, init_in = not alg.is_zero(run_val), not alg.is_zero(init_val)
    if half is HalfCondition.RUN_TO_INIT:
        as_predicted = run_in and not init_in
        direction = "run-only"
    else:
        as_predicted = init_in and not run_in
        direction = "init-only"
    witness = CheckWitness(
        automaton, word, alg.describe(run_val), alg.describe(init_val),
        direction, verdict.witness_labels,
    )
    return CheckReport(
        "supports-words", alg.name, "counterexample", as_predicted,
        {**hypothesis, "failing-half": half.value}, witness,
        {"automata_checked": 1, "inputs_checked": 1}, config.seed,
    )


def check_support_theorem_trees(config: TheoremCheckConfig) -> CheckReport:
    """Tree-support analogue, sensitive to the alphabet class: trivial
    alphabets are always consistent, monadic ones test the word condition,
    branching ones test bi-strong zero-sum-freeness."""
    alg = config.algebra
    alphabet = config.tree_alphabet
    cls = classify_alphabet(alphabet)

    if cls.trivial:
        rng = random.Random(config.seed)
        inputs = 0
        for trial in range(config.num_automata):
            automaton = random_tree_automaton(rng, alg, alphabet, config.max_states)
            for sym in alphabet.symbols:
                t = Tree(sym)
                inputs += 1
                run_val = T.run_semantics(automaton, t, prune=True)
                init_val = T.initial_semantics(automaton, t)
                if not alg.equal(run_val, init_val):
                    witness = CheckWitness(
                        automaton, t, alg.describe(run_val), alg.describe(init_val),
                        "values-differ",
                    )
                    return CheckReport(
                        "supports-trees", alg.name, "counterexample", False,
                        {"alphabet-class": "trivial"}, witness,
                        {"automata_checked": trial + 1, "inputs_checked": inputs},
                        config.seed,
                    )
        return CheckReport(
            "supports-trees", alg.name, "consistent", True,
            {"alphabet-class": "trivial"}, None,
            {"automata_checked": config.num_automata, "inputs_checked": inputs},
            config.seed,
        )

    if cls.monadic:
        hypothesis_prop = BimonoidProperty.STRONGLY_ZSF
        label = "monadic"
    else:
        hypothesis_prop = BimonoidProperty.BI_STRONGLY_ZSF
        label = "branching"
    hyp = check(alg, hypothesis_prop)
    hypothesis = {"alphabet-class": label, hypothesis_prop.value: hyp.holds}

    if hyp.holds:
        rng = random.Random(config.seed)
        inputs = 0
        test_trees = list(T.enumerate_trees(alphabet, config.max_tree_size))
        for trial in range(config.num_automata):
            automaton = random_tree_automaton(rng, alg, alphabet, config.max_states)
            for t in test_trees:
                inputs += 1
                run_in = T.in_support(automaton, t, Semantics.RUN)
                init_in = T.in_support(automaton, t, Semantics.INIT)
                if run_in != init_in:
                    witness = CheckWitness(
                        automaton, t,
                        alg.describe(T.run_semantics(automaton, t, prune=True)),
                        alg.describe(T.initial_semantics(automaton, t)),
                        "run-only" if run_in else "init-only",
                    )
                    return CheckReport(
                        "supports-trees", alg.name, "counterexample", False,
                        hypothesis, witness,
                        {"automata_checked": trial + 1, "inputs_checked": inputs},
                        config.seed,
                    )
        return CheckReport(
            "supports-trees", alg.name, "consistent", True, hypothesis, None,
            {"automata_checked": config.num_automata, "inputs_checked": inputs},
            config.seed,
        )

    if cls.monadic:
        # word-style failure lifted through the unary spine
        half, verdict = _word_half_failure(alg)
        a, b, c = verdict.witness
        gamma = alphabet.of_rank(1)[0]
        alpha = alphabet.of_rank(0)[0]
        states = ("p", "q", "r")
        quads = [
            ((), alpha, "p", a),
            ((), alpha, "q", b),
            (("p",), gamma, "r", alg.one),
            (("q",), gamma, "r", alg.one),
        ]
        automaton = TreeAutomaton(alg, alphabet, states, quads, {"r": c})
        t = Tree(gamma, (Tree(alpha),))
        expect_run_only = half is HalfCondition.RUN_TO_INIT
    else:
        half, verdict = _tree_half_failure(alg)
        a, b, bp, c = verdict.witness
        automaton = T.branching_probe_automaton(alg, a, b, bp, c, alphabet)
        t = T.doubled_probe_tree(alphabet)
        expect_run_only = half is HalfCondition.TREE_RUN_TO_INIT

    run_val = T.run_semantics(automaton, t, prune=True)
    init_val = T.initial_semantics(automaton, t)
    run_in, init_in = not alg.is_zero(run_val), not alg.is_zero(init_val)
    as_predicted = (run_in and not init_in) if expect_run_only else (init_in and not run_in)
    witness = CheckWitness(
        automaton, t, alg.describe(run_val), alg.describe(init_val),
        "run-only" if expect_run_only else "init-only", verdict.witness_labels,
    )
    return CheckReport(
        "supports-trees", alg.name, "counterexample", as_predicted,
        {**hypothesis, "failing-half": half.value}, witness,
        {"automata_checked": 1, "inputs_checked": 1}, config.seed,
    )


# --------------------------------------------------------------------------
# Image theorem


def _sets_equal(alg, xs, ys):
    return all(any(alg.equal(x, y) for y in ys) for x in xs) and all(
        any(alg.equal(y, x) for x in xs) for y in ys
    )


def check_image_theorem(alg: WeightAlgebra, mode: str) -> CheckReport:
    """Image equality of the two semantics across the probe family matches the
    distributivity verdicts: right-distributivity for words; right and left
    for trees over a branching alphabet (the tree probe, taken with c = one,
    pins down the left law)."""
    carrier = list(alg.elements())
    if mode == "words":
        lhs = check(alg, BimonoidProperty.RIGHT_DISTRIBUTIVE)
        hypothesis = {"right-distributive": lhs.holds}
        lhs_holds = lhs.holds
        differing = None
        checked = 0
        for a, b, c in itertools.product(carrier, repeat=3):
            automaton = W.probe_automaton(alg, a, b, c)
            im_run = W.image_up_to(automaton, 1, Semantics.RUN)
            im_init = W.image_up_to(automaton, 1, Semantics.INIT)
            checked += 1
            if not _sets_equal(alg, im_run, im_init):
                differing = ((a, b, c), im_run, im_init, automaton, ("gamma",))
                break
        theorem = "images-words"
    elif mode == "trees":
        rd = check(alg, BimonoidProperty.RIGHT_DISTRIBUTIVE)
        ld = check(alg, BimonoidProperty.LEFT_DISTRIBUTIVE)
        hypothesis = {"right-distributive": rd.holds, "left-distributive": ld.holds}
        lhs_holds = rd.holds and ld.holds
        alphabet = RankedAlphabet(dict(DEFAULT_TREE_ALPHABET))
        probe_tree = T.doubled_probe_tree(alphabet)
        differing = None
        checked = 0
        for a, b, bp in itertools.product(carrier, repeat=3):
            automaton = T.branching_probe_automaton(alg, a, b, bp, alg.one, alphabet)
            im_run = T.image_up_to(automaton, T.size(probe_tree), Semantics.RUN)
            im_init = T.image_up_to(automaton, T.size(probe_tree), Semantics.INIT)
            checked += 1
            if not _sets_equal(alg, im_run, im_init):
                differing = ((a, b, bp), im_run, im_init, automaton, probe_tree)
                break
        theorem = "images-trees"
    else:
        raise ValueError("mode must be 'words' or 'trees'")

    images_all_equal = differing is None
    as_predicted = lhs_holds == images_all_equal
    witness = None
    if differing is not None:
        params, im_run, im_init, automaton, inp = differing
        witness = CheckWitness(
            automaton,
            inp,
            "{" + ", ".join(alg.describe(v) for v in im_run) + "}",
            "{" + ", ".join(alg.describe(v) for v in im_init) + "}",
            "values-differ",
            tuple(alg.describe(p) for p in params),
        )
    return CheckReport(
        theorem,
        alg.name,
        "consistent" if images_all_equal else "counterexample",
        as_predicted,
        hypothesis,
        witness,
        {"tuples_checked": checked},
    )


# --------------------------------------------------------------------------
# Cost profiling


def word_run_cost(n_states: int, length: int) -> dict:
    """Closed-form operation counts for the unpruned run enumeration."""
    runs = n_states ** (length + 1)
    return {"muls": runs * (length + 1), "adds": runs - 1}


def word_init_cost(n_states: int, length: int) -> dict:
    """Exact counts for the vector-matrix evolution plus the final fold."""
    return {
        "muls": length * n_states * n_states + n_states,
        "adds": length * n_states * (n_states - 1) + (n_states - 1),
    }


def tree_init_cost_bound(n_states: int, max_rank: int, tree_size: int) -> int:
    """Linear upper bound on total operations of the bottom-up recursion."""
    return (max_rank + 5) * n_states ** (max_rank + 1) * tree_size


@dataclass
class CostProfile:
    kind: str  # "word" | "tree"
    input_label: str
    n_states: int
    input_size: int
    run_counts: dict
    init_counts: dict
    run_value: str
    init_value: str
    predicted: dict

    def to_dict(self):
        return {
            "kind": self.kind,
            "input": self.input_label,
            "states": self.n_states,
            "size": self.input_size,
            "run": self.run_counts,
            "init": self.init_counts,
            "run_value": self.run_value,
            "init_value": self.init_value,
            "predicted": self.predicted,
        }

    def __str__(self):
        lines = [
            f"cost profile ({self.kind}, |Q|={self.n_states}, input {self.input_label})",
            f"  run : {self.run_counts['adds']} adds, {self.run_counts['muls']} muls -> {self.run_value}",
            f"  init: {self.init_counts['adds']} adds, {self.init_counts['muls']} muls -> {self.init_value}",
        ]
        for k, v in self.predicted.items():
            lines.append(f"  predicted {k}: {v}")
        return "\n".join(lines)


def cost_profile(automaton, inp) -> CostProfile:
    """Evaluate both semantics under a counting wrapper and report totals next
    to the closed-form predictions (words) or the linear bound (trees)."""
    counting = CountingAlgebra(automaton.algebra)
    shadow = automaton.with_algebra(counting)
    n_states = len(automaton.states)

    if isinstance(automaton, WordAutomaton):
        word = shadow.check_word(inp)
        counting.reset_counts()
        run_val = W.run_semantics(shadow, word)
        run_counts = dict(zip(("adds", "muls"), counting.read_counts()))
        counting.reset_counts()
        init_val = W.initial_semantics(shadow, word)
        init_counts = dict(zip(("adds", "muls"), counting.read_counts()))
        predicted = {
            "run": word_run_cost(n_states, len(word)),
            "init": word_init_cost(n_states, len(word)),
        }
        return CostProfile(
            "word", " ".join(word) or "<empty>", n_states, len(word),
            run_counts, init_counts,
            automaton.algebra.describe(run_val), automaton.algebra.describe(init_val),
            predicted,
        )

    t = shadow.check_tree(inp)
    counting.reset_counts()
    run_val = T.run_semantics(shadow, t)
    run_counts = dict(zip(("adds", "muls"), counting.read_counts()))
    counting.reset_counts()
    init_val = T.initial_semantics(shadow, t)
    init_counts = dict(zip(("adds", "muls"), counting.read_counts()))
    predicted = {
        "runs_enumerated": n_states ** len(T.positions(t)),
        "init_ops_bound": tree_init_cost_bound(
            n_states, automaton.alphabet.max_rank, T.size(t)
        ),
    }
    return CostProfile(
        "tree", str(t), n_states, T.size(t),
        run_counts, init_counts,
        automaton.algebra.describe(run_val), automaton.algebra.describe(init_val),
        predicted,
    )
