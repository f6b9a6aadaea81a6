"""The theorem-checking harness, and why the support question pays off.

Each check decides the algebra-side hypothesis exhaustively, then either
sweeps random automata (expecting agreement) or builds the probe automaton
from the property checker's own witness (expecting a one-sided failure).
The payoff is algorithmic: deciding membership in the run support naively
costs exponentially many operations, but whenever the supports provably
coincide, the linear-cost initial-algebra evaluation answers the same
question.
"""

import random

import bimonoid_automata as ba
from bimonoid_automata import harness as H

print("== support checks on words ==")
for name in ("PentagonN5", "Boole", "B4", "B3prime"):
    report = H.check_support_theorem_words(
        H.TheoremCheckConfig(algebra=ba.builtin(name), num_automata=40)
    )
    print(f"--- {name}")
    print("   " + str(report).replace("\n", "\n   "))

print()
print("== support checks on trees (branching alphabet) ==")
for name in ("Hexagon", "TruncFun(2)"):
    report = H.check_support_theorem_trees(
        H.TheoremCheckConfig(algebra=ba.builtin(name), num_automata=40)
    )
    print(f"--- {name}")
    print("   " + str(report).replace("\n", "\n   "))

print()
print("== image checks ==")
for name in ("Boole", "PentagonN5", "TruncFun(2)"):
    for mode in ("words", "trees"):
        report = H.check_image_theorem(ba.builtin(name), mode)
        print(f"  {name:<12} {mode:<6} {report.verdict:<15} "
              f"(as predicted: {report.as_predicted})")

print()
print("== exponential vs linear: operation counts, |Q| = 3 ==")
rng = random.Random(1)
automaton = H.random_word_automaton(rng, ba.pentagon(), ("a",), 3)
while len(automaton.states) != 3:
    automaton = H.random_word_automaton(rng, ba.pentagon(), ("a",), 3)
print(f"  {'n':>3} {'run muls':>10} {'init muls':>10} {'ratio':>9}")
for n in (1, 2, 4, 6, 8):
    profile = H.cost_profile(automaton, ("a",) * n)
    run_muls = profile.run_counts["muls"]
    init_muls = profile.init_counts["muls"]
    print(f"  {n:>3} {run_muls:>10} {init_muls:>10} {run_muls / init_muls:>9.1f}")
print("  (run muls follow |Q|^(n+1)*(n+1); init muls follow 9n+3)")
