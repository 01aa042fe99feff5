#!/usr/bin/env python3
# The pattern pairs behind undecidable inclusion, at desk scale.

from relpat import (
    SigmaAssignment,
    UtmConfiguration,
    build_alpha_A,
    build_alpha_prop6,
    build_beta_A,
    build_beta_prop6,
    build_predicates,
    ca_encode,
    ca_find_accepting_run,
    ca_validate,
    good_form,
    good_structure,
    parse_automaton,
    print_relational_pattern,
    satisfied_predicates,
)

# The small erasing-side pattern is fixed: two variables between frame blocks.
alpha = build_alpha_A()
print("alpha:", print_relational_pattern(alpha))

automaton = parse_automaton(
    """
states: 2
accept: q1
q0 0 0 -> q0 +1 0
q0 1 0 -> q1 -1 0
"""
)

# The companion pattern carries one predicate triple per failure mode of an
# encoded computation; its size tracks the automaton's transition table.
triples = build_predicates(automaton)
beta = build_beta_A(automaton)
print(f"predicates: {len(triples)}, companion pattern size: {len(beta.symbols)} symbols")

# A substitution image avoids every predicate exactly when it encodes an
# accepting run.  Predicate indices explain any rejection.
run = ca_find_accepting_run(automaton, 6)
encoding = ca_encode(run)
for word in (encoding, "##0#0#0##", "##0#00#0##" + encoding[2:]):
    sigma = SigmaAssignment(word, "0" * (len(word) + 1))
    if not good_form(sigma):
        continue
    hits = satisfied_predicates(sigma, triples)
    labels = [triples[i - 1].label for i in hits[:3]]
    print(
        f"{word[:34]:<36} structure={good_structure(word)} "
        f"accepting={ca_validate(word, automaton)} predicates={labels or 'none'}"
    )

# The non-erasing pair embeds the machine's start configuration directly.
initial = UtmConfiguration(1, 0, 0)
ne_alpha = build_alpha_prop6(initial)
ne_beta = build_beta_prop6(initial)
print()
print(f"non-erasing pair sizes: {len(ne_alpha.symbols)} and {len(ne_beta.symbols)} symbols")
