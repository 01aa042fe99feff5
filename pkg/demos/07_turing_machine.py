#!/usr/bin/env python3
# The 15-state, 2-symbol universal machine: two simulators and one encoding.

from relpat import (
    TapeUtm,
    UtmConfiguration,
    utm_delta,
    utm_encode_computation,
    utm_run,
    utm_step,
    utm_validate,
)

# Tape sides are positional codes: bit i of the left code is the cell i steps
# left of the head (head cell included); code mod 2 is the scanned symbol.
config = UtmConfiguration(state=7, left_code=12, right_code=1)
print("delta(0, q7) =", utm_delta(0, 7))

trajectory = utm_run(config, max_steps=50)
for step, current in enumerate(trajectory):
    print(f"step {step}: q{current.state:<2} left={current.left_code:<4} right={current.right_code}")
print(f"halted after {len(trajectory) - 1} steps" if utm_step(trajectory[-1]) is None else "still running")

# The code-arithmetic simulator is cross-checked against an explicit tape.
tape = TapeUtm.from_config(config)
tape.step()
print("tape simulator agrees:", tape.to_config() == trajectory[1])

# Halting computations round-trip through the word encoding.
word = utm_encode_computation(trajectory)
print()
print("encoded computation:", word[:70] + ("..." if len(word) > 70 else ""))
print("validates from the start configuration:", utm_validate(word, config))
print("validates from a different start:      ",
      utm_validate(word, UtmConfiguration(1, 0, 0)))
