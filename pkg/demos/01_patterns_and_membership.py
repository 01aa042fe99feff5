#!/usr/bin/env python3
# Patterns with relation-constrained variables, and exact membership solving.

from relpat import Mode, count_witnesses, match, parse_relational_pattern, print_relational_pattern

# A pattern is terminals plus once-occurring variables; constraints relate
# variable images.  Here x1 and x2 must be reversals of each other.
beta = parse_relational_pattern("alphabet:abc; pattern: x1 c c x2; rel: rev(x1,x2)")
print("pattern:", print_relational_pattern(beta))

# Membership with a witness: "abccba" splits as ab|cc|ba with ba = reverse(ab).
print("abccba ->", match("abccba", beta, Mode.NE))

# "abccab" forces x2 = ab, which is not the reversal of ab.
print("abccab ->", match("abccab", beta, Mode.NE))

# Equality between two positions is itself a relation constraint.  This is the
# usual way repeated classical variables are written here.
alpha = parse_relational_pattern("alphabet:ab; pattern: x1 a a x2 b x3; rel: eq(x1,x2)")
print()
print("pattern:", print_relational_pattern(alpha))
print("bbaabbba (non-erasing) ->", match("bbaabbba", alpha, Mode.NE))

# Erasing mode lets every variable vanish; non-erasing mode does not.
print("aab erasing     ->", match("aab", alpha, Mode.E))
print("aab non-erasing ->", match("aab", alpha, Mode.NE))

# Witnesses can be counted (up to a cap); x1 x2 over "aa" splits three ways.
two_vars = parse_relational_pattern("alphabet:ab; pattern: x1 x2")
print()
print('witnesses for "aa" under x1 x2:', count_witnesses("aa", two_vars, Mode.E, cap=10))
