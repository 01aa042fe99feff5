#!/usr/bin/env python3
# Nondeterministic 2-counter automata: runs, encodings, and validation.

from relpat import (
    ca_encode,
    ca_find_accepting_run,
    ca_validate,
    parse_automaton,
    print_automaton,
)

# Pump counter 1, then drain one step into the accepting state.
automaton = parse_automaton(
    """
states: 2
accept: q1
q0 0 0 -> q0 +1 0
q0 1 0 -> q0 +1 0
q0 1 0 -> q1 -1 0
"""
)
print(print_automaton(automaton))

run = ca_find_accepting_run(automaton, max_steps=6)
for config in run:
    print(f"q{config.state}  counters=({config.counter1},{config.counter2})")

# Configurations become 0-blocks, computations get ##-framed.
word = ca_encode(run)
print()
print("encoded:", word)
print("validates:", ca_validate(word, automaton))

# Any tampering is caught: a dropped frame, a skipped configuration, a
# counter jumping by two.
for label, corrupted in [
    ("frame dropped", word[2:]),
    ("block dropped", word.replace("##" + word[2 : word.index("##", 2)], "", 1)),
    ("counter jump", word[:-2] + "0#000#0##"),
]:
    print(f"{label:>14}: {ca_validate(corrupted, automaton)}")
