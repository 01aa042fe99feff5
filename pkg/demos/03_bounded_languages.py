#!/usr/bin/env python3
# Bounded language slices and the desk-scale inclusion/equality oracles.

from relpat import (
    Mode,
    bounded_equal,
    enumerate_language,
    inclusion_counterexample,
    parse_relational_pattern,
)

beta = parse_relational_pattern("alphabet:abc; pattern: x1 c c x2; rel: rev(x1,x2)")

# All members up to length 6, computed by exhausting image-length splits.
for bound in (4, 5, 6):
    words = sorted(enumerate_language(beta, Mode.NE, bound).words, key=lambda w: (len(w), w))
    print(f"length <= {bound}: {words}")

# Relating two variables by subsequence in both directions forces equality,
# so these two patterns generate the same language.
ssq_both = parse_relational_pattern(
    "alphabet:ab; pattern: x1 x2; rel: ssq(x1,x2), ssq(x2,x1)"
)
eq = parse_relational_pattern("alphabet:ab; pattern: x1 x2; rel: eq(x1,x2)")
print()
print("both-direction ssq == eq (bounded):", bounded_equal(ssq_both, eq, Mode.NE, 6))

# Dropping a constraint grows the language; the oracle reports a separating word.
free = parse_relational_pattern("alphabet:ab; pattern: x1 x2")
print("counterexample to free <= eq:", inclusion_counterexample(free, eq, Mode.NE, 4))
