import random

import pytest

import bimonoid_automata as ba
from bimonoid_automata import harness as H
from bimonoid_automata import trees as T
from bimonoid_automata import words as W
from bimonoid_automata.algebra import Semantics


def config(alg, **kw):
    kw.setdefault("num_automata", 15)
    return H.TheoremCheckConfig(algebra=alg, **kw)


def revalidate(report):
    """A stored counterexample must reproduce its recorded values."""
    w = report.witness
    alg = w.automaton.algebra
    if isinstance(w.automaton, W.WordAutomaton):
        run_val = W.run_semantics(w.automaton, w.input, prune=True)
        init_val = W.initial_semantics(w.automaton, w.input)
    else:
        run_val = T.run_semantics(w.automaton, w.input, prune=True)
        init_val = T.initial_semantics(w.automaton, w.input)
    assert alg.describe(run_val) == w.run_value
    assert alg.describe(init_val) == w.init_value


def test_words_consistent_on_strongly_zsf():
    for alg in (ba.pentagon(), ba.boole()):
        report = H.check_support_theorem_words(config(alg))
        assert report.verdict == "consistent" and report.as_predicted
        assert report.stats["automata_checked"] == 15


def test_words_counterexample_on_b4():
    report = H.check_support_theorem_words(config(ba.b4()))
    assert report.verdict == "counterexample" and report.as_predicted
    assert report.hypothesis["failing-half"] == "init-to-run"
    assert report.witness.direction == "init-only"
    assert report.witness.run_value == "0" and report.witness.init_value == "2"
    assert report.witness.params == ("2", "2", "2")
    revalidate(report)


def test_words_counterexample_on_b3prime():
    report = H.check_support_theorem_words(config(ba.b3prime()))
    assert report.verdict == "counterexample" and report.as_predicted
    assert report.hypothesis["failing-half"] == "run-to-init"
    assert report.witness.direction == "run-only"
    assert report.witness.run_value == "2'" and report.witness.init_value == "0'"
    revalidate(report)


def test_trees_trivial_alphabet_always_consistent():
    alph = T.RankedAlphabet({"alpha": 0, "beta": 0})
    for alg in (ba.b4(), ba.trunc_fun(2)):
        report = H.check_support_theorem_trees(config(alg, tree_alphabet=alph))
        assert report.verdict == "consistent" and report.as_predicted


def test_trees_branching_consistent_on_pentagon():
    report = H.check_support_theorem_trees(config(ba.pentagon()))
    assert report.verdict == "consistent" and report.as_predicted
    assert report.hypothesis["bi-strongly-zero-sum-free"] is True


def test_trees_branching_counterexample_on_trunc_fun():
    report = H.check_support_theorem_trees(config(ba.trunc_fun(2)))
    assert report.verdict == "counterexample" and report.as_predicted
    assert report.hypothesis["failing-half"] == "tree-run-to-init"
    assert report.witness.direction == "run-only"
    alg = ba.trunc_fun(2)
    assert report.witness.init_value == alg.describe(alg.zero)
    assert report.witness.run_value != alg.describe(alg.zero)
    revalidate(report)


def test_trees_monadic_counterexample_on_b4():
    alph = T.RankedAlphabet({"alpha": 0, "beta": 0, "gamma": 1})
    report = H.check_support_theorem_trees(config(ba.b4(), tree_alphabet=alph))
    assert report.verdict == "counterexample" and report.as_predicted
    assert report.hypothesis["alphabet-class"] == "monadic"
    assert report.witness.direction == "init-only"
    revalidate(report)


def test_determinism_under_fixed_seed():
    r1 = H.check_support_theorem_words(config(ba.hexagon(), seed=7))
    r2 = H.check_support_theorem_words(config(ba.hexagon(), seed=7))
    assert r1.to_dict() == r2.to_dict()


def test_image_theorem_words():
    boole = H.check_image_theorem(ba.boole(), "words")
    assert boole.verdict == "consistent" and boole.as_predicted
    pent = H.check_image_theorem(ba.pentagon(), "words")
    assert pent.verdict == "counterexample" and pent.as_predicted
    assert pent.witness is not None
    # the two recorded image sets genuinely differ
    assert pent.witness.run_value != pent.witness.init_value


def test_image_theorem_trees_matches_distributivity(finite_algebras):
    from bimonoid_automata.properties import BimonoidProperty as P
    from bimonoid_automata.properties import check

    for alg in finite_algebras:
        for mode in ("words", "trees"):
            report = H.check_image_theorem(alg, mode)
            assert report.as_predicted, (alg.name, mode, str(report))
            if mode == "words":
                expected = check(alg, P.RIGHT_DISTRIBUTIVE).holds
            else:
                expected = (
                    check(alg, P.RIGHT_DISTRIBUTIVE).holds
                    and check(alg, P.LEFT_DISTRIBUTIVE).holds
                )
            assert (report.verdict == "consistent") == expected


def test_cost_profile_word_closed_forms():
    rng = random.Random(103)
    automaton = H.random_word_automaton(rng, ba.pentagon(), ("a",), 3)
    while len(automaton.states) != 3:
        automaton = H.random_word_automaton(rng, ba.pentagon(), ("a",), 3)
    ratios = []
    for n in range(1, 9):
        profile = H.cost_profile(automaton, ("a",) * n)
        assert profile.init_counts["muls"] == 9 * n + 3
        assert profile.init_counts == profile.predicted["init"]
        assert profile.run_counts["muls"] == 3 ** (n + 1) * (n + 1)
        assert profile.run_counts["adds"] == 3 ** (n + 1) - 1
        ratios.append(profile.run_counts["muls"] / profile.init_counts["muls"])
    assert all(a < b for a, b in zip(ratios, ratios[1:]))  # exponential vs linear


def test_cost_profile_zero_length_word():
    rng = random.Random(107)
    automaton = H.random_word_automaton(rng, ba.b4(), ("a",), 3)
    profile = H.cost_profile(automaton, ())
    n_states = len(automaton.states)
    assert profile.run_counts["muls"] == n_states
    assert profile.init_counts["muls"] == n_states


def test_cost_profile_tree_linear_bound():
    rng = random.Random(109)
    alph = T.RankedAlphabet({"alpha": 0, "sigma": 2})
    automaton = H.random_tree_automaton(rng, ba.pentagon(), alph, 3)
    spine = T.Tree("alpha")
    sizes, totals = [], []
    for _ in range(4):
        spine = T.Tree("sigma", (spine, T.Tree("alpha")))
        profile = H.cost_profile(automaton, spine)
        total = profile.init_counts["adds"] + profile.init_counts["muls"]
        assert total <= profile.predicted["init_ops_bound"]
        sizes.append(profile.input_size)
        totals.append(total)
    # growth is linear in tree size: per-node cost stays bounded
    per_node = [t / s for t, s in zip(totals, sizes)]
    assert max(per_node) <= 2 * min(per_node) + 1


def test_random_generation_respects_bounds():
    rng = random.Random(113)
    for _ in range(20):
        automaton = H.random_word_automaton(rng, ba.b4(), ("a", "b"), 3)
        assert 1 <= len(automaton.states) <= 3
    tree_automaton = H.random_tree_automaton(
        rng, ba.b4(), T.RankedAlphabet({"alpha": 0, "sigma": 2}), 3
    )
    assert 1 <= len(tree_automaton.states) <= 3


def test_config_validation():
    with pytest.raises(ValueError):
        H.TheoremCheckConfig(algebra=ba.b4(), num_automata=0)


def test_unexpected_counterexample_is_flagged():
    # Z2 is a field, not zero-sum-free: the probe's predicted direction fails,
    # which the harness must surface as not-as-predicted rather than hide.
    z2 = ba.FiniteTableAlgebra(
        "Z2", ("0", "1"), ((0, 1), (1, 0)), ((0, 0), (0, 1)), 0, 1
    )
    assert ba.validate_axioms(z2).ok
    report = H.check_support_theorem_words(config(z2))
    assert report.verdict == "counterexample"
    assert not report.as_predicted
