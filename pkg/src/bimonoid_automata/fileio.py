"""JSON file formats for algebras and automata.

Algebra file: ``names`` (array), ``add``/``mul`` (n x n arrays of names),
``zero``/``one`` (names). Automaton file: ``algebra`` (builtin name or inline
algebra object), ``alphabet`` (array of symbols for word automata, mapping
symbol -> rank for tree automata), ``states``, ``initial``/``final`` or
``final`` alone for trees (mappings state -> element label; omissions mean
zero), ``transitions`` (array of {from, symbol, to, weight}; omissions mean
zero; ``from`` is a state name for words, an array of state names for trees).
"""

from __future__ import annotations

import json
from typing import Union

from .algebra import FiniteTableAlgebra, WeightAlgebra, builtin, validate_axioms
from .trees import RankedAlphabet, TreeAutomaton
from .words import WordAutomaton


class FileFormatError(ValueError):
    def __init__(self, source, message):
        super().__init__(f"{source}: {message}")
        self.source = source


def _require(obj, key, source):
    if key not in obj:
        raise FileFormatError(source, f"missing key {key!r}")
    return obj[key]


def algebra_from_dict(obj: dict, source: str = "<algebra>", allow_invalid: bool = False) -> FiniteTableAlgebra:
    names = _require(obj, "names", source)
    add_names = _require(obj, "add", source)
    mul_names = _require(obj, "mul", source)
    zero = _require(obj, "zero", source)
    one = _require(obj, "one", source)
    index = {x: i for i, x in enumerate(names)}

    def table(rows, label):
        out = []
        for i, row in enumerate(rows):
            try:
                out.append([index[v] for v in row])
            except KeyError as exc:
                raise FileFormatError(
                    source, f"{label} table row {i} uses unknown element {exc.args[0]!r}"
                ) from None
        return out

    for x in (zero, one):
        if x not in index:
            raise FileFormatError(source, f"unknown element {x!r} for zero/one")
    alg = FiniteTableAlgebra(
        obj.get("name", source),
        names,
        table(add_names, "add"),
        table(mul_names, "mul"),
        index[zero],
        index[one],
    )
    if not allow_invalid:
        report = validate_axioms(alg)
        if not report.ok:
            first = report.failures()[0]
            raise FileFormatError(
                source,
                f"axioms fail: {first.axiom} at ({', '.join(first.witness_labels)})"
                " (use --allow-invalid to load anyway)",
            )
    return alg


def algebra_to_dict(alg: FiniteTableAlgebra) -> dict:
    return {
        "name": alg.name,
        "names": list(alg.names),
        "add": [[alg.names[v] for v in row] for row in alg.add_table],
        "mul": [[alg.names[v] for v in row] for row in alg.mul_table],
        "zero": alg.names[alg.zero_index],
        "one": alg.names[alg.one_index],
    }


def load_algebra(source: Union[str, dict], allow_invalid: bool = False) -> WeightAlgebra:
    """Resolve an algebra from a builtin name, an inline dict, or a JSON file path."""
    if isinstance(source, dict):
        return algebra_from_dict(source, allow_invalid=allow_invalid)
    try:
        return builtin(source)
    except LookupError as builtin_error:
        lookup_message = str(builtin_error)
    try:
        with open(source) as fh:
            obj = json.load(fh)
    except OSError:
        raise FileFormatError(source, f"not a readable algebra file, and {lookup_message}") from None
    except json.JSONDecodeError as exc:
        raise FileFormatError(source, f"invalid JSON at line {exc.lineno}") from None
    return algebra_from_dict(obj, source=source, allow_invalid=allow_invalid)


def automaton_from_dict(obj: dict, source: str = "<automaton>", allow_invalid: bool = False):
    alg = load_algebra(_require(obj, "algebra", source), allow_invalid=allow_invalid)
    alphabet = _require(obj, "alphabet", source)
    states = _require(obj, "states", source)
    transitions = obj.get("transitions", [])
    final = {s: alg.parse(w) for s, w in obj.get("final", {}).items()}

    if isinstance(alphabet, dict):
        try:
            ranked = RankedAlphabet(alphabet)
            quads = []
            for i, tr in enumerate(transitions):
                src = tr.get("from", [])
                if isinstance(src, str):
                    src = [src]
                quads.append(
                    (
                        tuple(src),
                        _require(tr, "symbol", f"{source} transition {i}"),
                        _require(tr, "to", f"{source} transition {i}"),
                        alg.parse(_require(tr, "weight", f"{source} transition {i}")),
                    )
                )
            return TreeAutomaton(alg, ranked, states, quads, final)
        except ValueError as exc:
            raise FileFormatError(source, str(exc)) from None

    try:
        initial = {s: alg.parse(w) for s, w in obj.get("initial", {}).items()}
        quads = []
        for i, tr in enumerate(transitions):
            quads.append(
                (
                    _require(tr, "from", f"{source} transition {i}"),
                    _require(tr, "symbol", f"{source} transition {i}"),
                    _require(tr, "to", f"{source} transition {i}"),
                    alg.parse(_require(tr, "weight", f"{source} transition {i}")),
                )
            )
        return WordAutomaton(alg, alphabet, states, initial, final, quads)
    except ValueError as exc:
        raise FileFormatError(source, str(exc)) from None


def automaton_to_dict(automaton) -> dict:
    alg = automaton.algebra
    obj: dict = {}
    obj["algebra"] = (
        algebra_to_dict(alg) if isinstance(alg, FiniteTableAlgebra) else alg.name
    )
    obj["states"] = list(automaton.states)
    if isinstance(automaton, TreeAutomaton):
        obj["alphabet"] = automaton.alphabet.to_dict()
        obj["final"] = {
            s: alg.describe(w)
            for s, w in zip(automaton.states, automaton.root_weights)
            if not alg.is_zero(w)
        }
        obj["transitions"] = [
            {
                "from": [automaton.states[p] for p in sw],
                "symbol": sym,
                "to": automaton.states[q],
                "weight": alg.describe(w),
            }
            for sw, sym, q, w in automaton.stored_transitions()
        ]
        return obj
    obj["alphabet"] = list(automaton.alphabet)
    obj["initial"] = {
        s: alg.describe(w)
        for s, w in zip(automaton.states, automaton.initial)
        if not alg.is_zero(w)
    }
    obj["final"] = {
        s: alg.describe(w)
        for s, w in zip(automaton.states, automaton.final)
        if not alg.is_zero(w)
    }
    obj["transitions"] = [
        {"from": src, "symbol": a, "to": dst, "weight": alg.describe(w)}
        for a in automaton.alphabet
        for src_i, src in enumerate(automaton.states)
        for dst_i, dst in enumerate(automaton.states)
        for w in [automaton.matrix(a)[src_i][dst_i]]
        if not alg.is_zero(w)
    ]
    return obj


def load_automaton(path: str, allow_invalid: bool = False):
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise FileFormatError(path, str(exc)) from None
    except json.JSONDecodeError as exc:
        raise FileFormatError(path, f"invalid JSON at line {exc.lineno}") from None
    return automaton_from_dict(obj, source=path, allow_invalid=allow_invalid)


def save_automaton(automaton, path: str):
    with open(path, "w") as fh:
        json.dump(automaton_to_dict(automaton), fh, indent=2)
        fh.write("\n")


def parse_word_input(automaton: WordAutomaton, text: str) -> tuple:
    """A word from CLI text: whitespace/comma-separated symbol names, or a
    string of single-character symbols; empty text is the empty word."""
    text = text.strip()
    if not text:
        return ()
    parts = [p for p in text.replace(",", " ").split() if p]
    if all(p in automaton.transitions for p in parts):
        return tuple(parts)
    if all(ch in automaton.transitions for ch in text):
        return tuple(text)
    raise ValueError(
        f"cannot read {text!r} as a word over alphabet {', '.join(automaton.alphabet)}"
    )
