"""Command-line entry point: one subcommand per operation family.

Exit status: 0 for logical-true/success, 1 for logical-false, 2 for usage,
input, or resource errors.  Patterns travel via files so that `#` never
needs shell escaping.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from .core import (
    BudgetExceededError,
    Mode,
    PatternSyntaxError,
    parse_document,
    print_relational_pattern,
)
from .relations import TOKEN_TO_KIND, relation_holds
from . import equivalence, inclusion, machines, matcher, reductions, semantics


def _read_pattern(path: str) -> tuple:
    text = Path(path).read_text(encoding="utf-8")
    return parse_document(text)


def _mode(token: str) -> Mode:
    return Mode(token.lower())


def _automaton(path: str) -> machines.TwoCounterAutomaton:
    return machines.parse_automaton(Path(path).read_text(encoding="utf-8"))


def _utm_config(text: str) -> machines.UtmConfiguration:
    parts = [p for p in text.replace(",", " ").split() if p]
    if len(parts) != 3:
        raise ValueError("initial configuration must be 'state,left_code,right_code'")
    state = int(parts[0][1:]) if parts[0].startswith("q") else int(parts[0])
    return machines.UtmConfiguration(state, int(parts[1]), int(parts[2]))


def _cmd_rel(args: argparse.Namespace) -> int:
    kind = TOKEN_TO_KIND.get(args.name)
    if kind is None:
        raise ValueError(f"unknown relation {args.name!r}; choose from {sorted(TOKEN_TO_KIND)}")
    verdict = relation_holds(kind, args.u, args.v)
    print("true" if verdict else "false")
    return 0 if verdict else 1


def _cmd_member(args: argparse.Namespace) -> int:
    rp, file_mode = _read_pattern(args.pattern)
    mode = _mode(args.mode) if args.mode else (file_mode or Mode.NE)
    witness = matcher.match(args.word, rp, mode)
    if witness is None:
        print("false")
        return 1
    print("true")
    if args.witness:
        rendered = " ".join(f"x{var}={witness[var]}" for var in sorted(witness))
        print(rendered)
    return 0


def _cmd_enum(args: argparse.Namespace) -> int:
    rp, file_mode = _read_pattern(args.pattern)
    mode = _mode(args.mode) if args.mode else (file_mode or Mode.NE)
    language = semantics.enumerate_language(rp, mode, args.max_len)
    for word in sorted(language.words, key=lambda w: (len(w), w)):
        print(word)
    return 0


def _cmd_bincl(args: argparse.Namespace) -> int:
    a, _ = _read_pattern(args.a)
    b, _ = _read_pattern(args.b)
    mode = _mode(args.mode)
    counterexample = semantics.inclusion_counterexample(a, b, mode, args.max_len)
    if counterexample is None:
        print("true")
        return 0
    print("false")
    print(f"counterexample: {counterexample}")
    return 1


def _cmd_beq(args: argparse.Namespace) -> int:
    a, _ = _read_pattern(args.a)
    b, _ = _read_pattern(args.b)
    mode = _mode(args.mode)
    for first, second in ((a, b), (b, a)):
        counterexample = semantics.inclusion_counterexample(first, second, mode, args.max_len)
        if counterexample is not None:
            print("false")
            print(f"counterexample: {counterexample}")
            return 1
    print("true")
    return 0


def _cmd_equiv(args: argparse.Namespace) -> int:
    a, _ = _read_pattern(args.a)
    b, _ = _read_pattern(args.b)
    try:
        verdict = equivalence.ne_equivalent(a, b)
    except equivalence.EquivalencePreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 2
    print("true" if verdict else "false")
    return 0 if verdict else 1


def _reduction_kind(args: argparse.Namespace):
    return TOKEN_TO_KIND[args.kind] if args.kind else None


def _cmd_reduce(args: argparse.Namespace) -> int:
    phi = reductions.read_dimacs(Path(args.cnf).read_text(encoding="utf-8"))
    variant = reductions.ReductionVariant(args.variant)
    kind = _reduction_kind(args)
    if args.action == "verify":
        ok = reductions.verify_reduction(variant, phi, kind)
        print("true" if ok else "false")
        return 0 if ok else 1
    inst = reductions.generate(variant, phi, kind)
    print(inst.word)
    if args.out:
        Path(args.out).write_text(
            print_relational_pattern(inst.rp, inst.mode) + "\n", encoding="utf-8"
        )
    if args.word_out:
        Path(args.word_out).write_text(inst.word + "\n", encoding="utf-8")
    return 0


def _cmd_machine(args: argparse.Namespace) -> int:
    if args.machine_cmd == "ca-run":
        automaton = _automaton(args.automaton)
        run = machines.ca_find_accepting_run(automaton, args.max_steps)
        if run is None:
            print("absent")
            return 1
        for config in run:
            print(f"q{config.state} {config.counter1} {config.counter2}")
        return 0
    if args.machine_cmd == "ca-encode":
        automaton = _automaton(args.automaton)
        run = machines.ca_find_accepting_run(automaton, args.max_steps)
        if run is None:
            print("absent")
            return 1
        print(machines.ca_encode(run, _params(args)))
        return 0
    if args.machine_cmd == "ca-validate":
        automaton = _automaton(args.automaton)
        verdict = machines.ca_validate(args.word, automaton, _params(args))
        print("true" if verdict else "false")
        return 0 if verdict else 1
    if args.machine_cmd == "utm-validate":
        initial = _utm_config(args.initial)
        verdict = machines.utm_validate(args.word, initial)
        print("true" if verdict else "false")
        return 0 if verdict else 1
    raise ValueError(f"unknown machine subcommand {args.machine_cmd!r}")


def _params(args: argparse.Namespace) -> machines.EncodingParams:
    if not getattr(args, "params", None):
        return machines.EncodingParams()
    x, c1, c2, y2 = (int(p) for p in args.params.split(","))
    return machines.EncodingParams(x, c1, c2, y2)


def _cmd_thm3(args: argparse.Namespace) -> int:
    automaton = _automaton(args.automaton)
    if args.thm3_cmd == "build":
        beta = inclusion.build_beta_A(automaton)
        Path(args.out).write_text(print_relational_pattern(beta) + "\n", encoding="utf-8")
        if args.alpha_out:
            alpha = inclusion.build_alpha_A()
            Path(args.alpha_out).write_text(
                print_relational_pattern(alpha) + "\n", encoding="utf-8"
            )
        print(f"predicates: {len(inclusion.build_predicates(automaton))}")
        return 0
    if args.thm3_cmd == "eval":
        sigma = inclusion.SigmaAssignment(args.sigma_x, args.sigma_y)
        triples = inclusion.build_predicates(automaton)
        indices = inclusion.satisfied_predicates(sigma, triples)
        print(" ".join(str(i) for i in indices))
        return 0
    raise ValueError(f"unknown thm3 subcommand {args.thm3_cmd!r}")


# -- report ------------------------------------------------------------------


def _suite_relation_laws() -> tuple[int, int]:
    from .relations import (
        RelationKind,
        is_subsequence,
        length_profile,
        LengthProfile,
        primitive_root,
    )
    import itertools

    words = [""]
    for n in range(1, 5):
        words += ["".join(t) for t in itertools.product("ab", repeat=n)]
    cases = passed = 0

    def canon(kind: RelationKind, w: str):
        if kind is RelationKind.EQ:
            return w
        if kind is RelationKind.LEN_EQ:
            return len(w)
        if kind is RelationKind.ABELIAN_EQ:
            return (w.count("a"), w.count("b"))
        first = {}
        return tuple(first.setdefault(ch, len(first)) for ch in w)

    for kind in (RelationKind.EQ, RelationKind.LEN_EQ, RelationKind.ABELIAN_EQ, RelationKind.ALPHA_PERM):
        for u in words:
            for v in words:
                cases += 1
                expected = canon(kind, u) == canon(kind, v)
                passed += relation_holds(kind, u, v) == expected
    nonempty = [w for w in words if w]
    for u in nonempty:
        for v in nonempty:
            cases += 1
            expected = primitive_root(u) == primitive_root(v)
            passed += relation_holds(RelationKind.COM_PLUS, u, v) == expected
    for u in words:
        for v in words:
            cases += 1
            passed += relation_holds(RelationKind.REVERSAL, u, v) == relation_holds(
                RelationKind.REVERSAL, v, u
            )
            for kind in (RelationKind.SUBSEQ, RelationKind.STAR):
                cases += 1
                both = relation_holds(kind, u, v) and relation_holds(kind, v, u)
                passed += both == (u == v)
            for kind in RelationKind:
                if not relation_holds(kind, u, v):
                    continue
                cases += 1
                profile = length_profile(kind)
                if profile is LengthProfile.EQUAL_LENGTHS:
                    ok = len(u) == len(v)
                elif profile is LengthProfile.LEFT_AT_MOST_RIGHT:
                    ok = len(u) <= len(v)
                elif profile is LengthProfile.LEFT_MULTIPLE_OF_RIGHT:
                    ok = len(v) == 0 or len(u) % len(v) == 0
                else:
                    ok = True
                passed += ok
    cases += 1
    passed += is_subsequence("ab", "acb")
    return cases, passed


def _random_pattern(rng: random.Random, kinds) -> "object":
    from .core import Alphabet, Constraint, RelationalPattern

    alphabet = Alphabet.of("ab")
    num_vars = rng.randint(1, 3)
    symbols: list = []
    queue = list(range(1, num_vars + 1))
    length = rng.randint(num_vars, num_vars + 3)
    while queue or len(symbols) < length:
        if queue and (len(symbols) >= length or rng.random() < 0.5):
            symbols.append(queue.pop(0))
        else:
            symbols.append(rng.choice("ab"))
    kind = rng.choice(kinds)
    constraints = set()
    if num_vars >= 2:
        for _ in range(rng.randint(0, 2)):
            left, right = rng.sample(range(1, num_vars + 1), 2)
            constraints.add(Constraint(kind, left, right))
    return RelationalPattern(alphabet, tuple(symbols), frozenset(constraints))


def _suite_matcher_oracle(rng: random.Random) -> tuple[int, int]:
    import itertools

    kinds = list(TOKEN_TO_KIND.values())
    words = [""]
    for n in range(1, 7):
        words += ["".join(t) for t in itertools.product("ab", repeat=n)]
    cases = passed = 0
    for _ in range(40):
        rp = _random_pattern(rng, kinds)
        mode = rng.choice([Mode.E, Mode.NE])
        language = semantics.enumerate_language(rp, mode, 6).words
        for word in words:
            cases += 1
            passed += (matcher.match(word, rp, mode) is not None) == (word in language)
    return cases, passed


def _suite_reductions() -> tuple[int, int]:
    from .reductions import CnfFormula, ReductionVariant, verify_reduction
    from .relations import RelationKind

    sat = CnfFormula(2, ((1, -2, 2),))
    unsat = CnfFormula(1, ((1, 1, 1), (-1, -1, -1)))
    commute_sat = CnfFormula(2, ((1, -1, 2),))
    commute_unsat = CnfFormula(2, ((1, 2, -2), (-1, 2, -2)))
    cases = passed = 0
    for kind in (RelationKind.EQ, RelationKind.REVERSAL, RelationKind.STAR):
        for phi in (sat, unsat):
            for variant in (ReductionVariant.ANGLUIN_NE, ReductionVariant.JIANG_E):
                cases += 1
                passed += verify_reduction(variant, phi, kind)
    for variant, kind in (
        (ReductionVariant.COMMUTE_NE, RelationKind.COM_STAR),
        (ReductionVariant.COMMUTE_NE, RelationKind.COM_PLUS),
        (ReductionVariant.COM_PLUS_E, None),
        (ReductionVariant.COM_STAR_E, None),
    ):
        for phi in (commute_sat, commute_unsat):
            cases += 1
            passed += verify_reduction(variant, phi, kind)
    for variant in (
        ReductionVariant.ONE_SIDED_STAR_E,
        ReductionVariant.ONE_SIDED_SUBSEQ_E,
        ReductionVariant.ONE_SIDED_STAR_NE,
        ReductionVariant.ONE_SIDED_SUBSEQ_NE,
    ):
        for phi in (sat, unsat):
            cases += 1
            passed += verify_reduction(variant, phi)
    return cases, passed


def _suite_equivalence(rng: random.Random) -> tuple[int, int]:
    from .relations import RelationKind

    kinds = [RelationKind.EQ, RelationKind.ABELIAN_EQ, RelationKind.COM_PLUS]
    cases = passed = 0
    for _ in range(60):
        kind = rng.choice(kinds)
        a = _random_pattern(rng, [kind])
        b = _random_pattern(rng, [kind]) if rng.random() < 0.6 else a
        bound = max(len(a.symbols), len(b.symbols)) + 3
        cases += 1
        passed += equivalence.ne_equivalent(a, b) == semantics.bounded_equal(
            a, b, Mode.NE, bound
        )
    return cases, passed


def _report_automaton() -> machines.TwoCounterAutomaton:
    return machines.TwoCounterAutomaton(
        2,
        frozenset({1}),
        {
            (0, 0, 0): frozenset({(0, 1, 0), (1, 0, 0)}),
            (0, 1, 0): frozenset({(1, -1, 0)}),
        },
    )


def _suite_machines(rng: random.Random) -> tuple[int, int]:
    cases = passed = 0
    automaton = _report_automaton()
    run = machines.ca_find_accepting_run(automaton, 6)
    cases += 1
    passed += run is not None and machines.ca_validate(machines.ca_encode(run), automaton)
    word = machines.ca_encode(run)
    for corrupted in (word[2:], word + "#", word.replace("##", "#", 1)):
        cases += 1
        passed += not machines.ca_validate(corrupted, automaton)
    for _ in range(200):
        config = machines.UtmConfiguration(
            rng.randint(1, 15), rng.randint(0, 255), rng.randint(0, 255)
        )
        tape = machines.TapeUtm.from_config(config)
        stepped = machines.utm_step(config)
        cases += 1
        if stepped is None:
            passed += not tape.step()
        else:
            tape.step()
            passed += tape.to_config() == stepped
    halting = machines.UtmConfiguration(10, 1, 0)
    word = machines.utm_encode_computation([halting])
    cases += 1
    passed += machines.utm_validate(word, halting)
    cases += 1
    passed += not machines.utm_validate(word, machines.UtmConfiguration(10, 3, 0))
    return cases, passed


def _suite_inclusion(rng: random.Random) -> tuple[int, int]:
    automaton = _report_automaton()
    triples = inclusion.build_predicates(automaton)
    cases = passed = 0
    run = machines.ca_find_accepting_run(automaton, 6)
    encodings = [machines.ca_encode(run)]
    candidates = set(encodings)
    for base in encodings:
        for _ in range(8):
            pos = rng.randrange(len(base))
            mutated = base[:pos] + rng.choice("0#") + base[pos + 1 :]
            candidates.add(mutated)
    candidates.update(["", "##", "##0#0#0##", "0#0"])
    for word in sorted(candidates):
        sigma = inclusion.SigmaAssignment(word, "0" * (len(word) + 1))
        if not inclusion.good_form(sigma):
            continue
        cases += 1
        none_satisfied = not inclusion.satisfied_predicates(sigma, triples)
        passed += none_satisfied == machines.ca_validate(word, automaton)
    return cases, passed


def run_report(seed: int, timings: bool) -> list[dict]:
    rng = random.Random(seed)
    suites = [
        ("relation-laws", lambda: _suite_relation_laws()),
        ("matcher-oracle", lambda: _suite_matcher_oracle(rng)),
        ("reductions", lambda: _suite_reductions()),
        ("equivalence", lambda: _suite_equivalence(rng)),
        ("machines", lambda: _suite_machines(rng)),
        ("inclusion-constructions", lambda: _suite_inclusion(rng)),
    ]
    report = []
    for name, runner in suites:
        started = time.perf_counter()
        cases, passed = runner()
        elapsed = time.perf_counter() - started
        report.append(
            {
                "suite": name,
                "cases": cases,
                "passed": passed,
                "failed": cases - passed,
                # Timing is suppressed by default so reports are reproducible.
                "seconds": round(elapsed, 3) if timings else 0.0,
            }
        )
    return report


def _cmd_report(args: argparse.Namespace) -> int:
    report = run_report(args.seed, args.timings)
    payload = json.dumps(report, indent=2, sort_keys=True) + "\n"
    Path(args.out).write_text(payload, encoding="utf-8")
    total_failed = sum(suite["failed"] for suite in report)
    for suite in report:
        print(f"{suite['suite']}: {suite['passed']}/{suite['cases']} passed")
    print(f"report written to {args.out}")
    return 0 if total_failed == 0 else 1


# -- argument parsing ---------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="relpat", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rel", help="probe one relation on two words")
    p.add_argument("name", help="relation name (eq, len, ssq, ab, perm, rev, comstar, composplus, star)")
    p.add_argument("u")
    p.add_argument("v")
    p.set_defaults(func=_cmd_rel)

    p = sub.add_parser("member", help="decide word membership")
    p.add_argument("--pattern", required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--mode", choices=["e", "ne"], default=None)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=_cmd_member)

    p = sub.add_parser("enum", help="enumerate the bounded language")
    p.add_argument("--pattern", required=True)
    p.add_argument("--mode", choices=["e", "ne"], default=None)
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=_cmd_enum)

    for name, func in (("bincl", _cmd_bincl), ("beq", _cmd_beq)):
        p = sub.add_parser(name, help=f"bounded language {'inclusion' if name == 'bincl' else 'equality'}")
        p.add_argument("--a", required=True)
        p.add_argument("--b", required=True)
        p.add_argument("--mode", choices=["e", "ne"], required=True)
        p.add_argument("--max-len", type=int, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("equiv", help="polynomial non-erasing equivalence")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("reduce", help="generate or verify a 3-SAT reduction instance")
    p.add_argument("action", nargs="?", choices=["verify"], default=None)
    p.add_argument("--variant", required=True, choices=[v.value for v in reductions.ReductionVariant])
    p.add_argument("--kind", choices=sorted(TOKEN_TO_KIND), default=None)
    p.add_argument("--cnf", required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--word-out", default=None)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("machine", help="counter-automaton and Turing-machine tools")
    msub = p.add_subparsers(dest="machine_cmd", required=True)
    q = msub.add_parser("ca-run")
    q.add_argument("--automaton", required=True)
    q.add_argument("--max-steps", type=int, default=50)
    q = msub.add_parser("ca-encode")
    q.add_argument("--automaton", required=True)
    q.add_argument("--max-steps", type=int, default=50)
    q.add_argument("--params", default=None, help="x,c1,c2,y2 (all >= 1)")
    q = msub.add_parser("ca-validate")
    q.add_argument("--automaton", required=True)
    q.add_argument("--word", required=True)
    q.add_argument("--params", default=None)
    q = msub.add_parser("utm-validate")
    q.add_argument("--initial", required=True, help="state,left_code,right_code")
    q.add_argument("--word", required=True)
    p.set_defaults(func=_cmd_machine)

    p = sub.add_parser("thm3", help="inclusion-construction builders and evaluation")
    tsub = p.add_subparsers(dest="thm3_cmd", required=True)
    q = tsub.add_parser("build")
    q.add_argument("--automaton", required=True)
    q.add_argument("--out", required=True)
    q.add_argument("--alpha-out", default=None)
    q = tsub.add_parser("eval")
    q.add_argument("--automaton", required=True)
    q.add_argument("--sigma-x", required=True)
    q.add_argument("--sigma-y", required=True)
    p.set_defaults(func=_cmd_thm3)

    p = sub.add_parser("report", help="run the deterministic acceptance-style suites")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", default="report.json")
    p.add_argument("--timings", action="store_true", help="record wall times (breaks byte-reproducibility)")
    p.set_defaults(func=_cmd_report)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return 2
    except (PatternSyntaxError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
