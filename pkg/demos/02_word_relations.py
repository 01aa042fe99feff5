#!/usr/bin/env python3
# The nine binary word relations and their search metadata.

from relpat import RelationKind, is_letter_antisymmetric_equivalence, length_profile, relation_holds

SAMPLES = {
    RelationKind.EQ: [("ab", "ab"), ("ab", "ba")],
    RelationKind.LEN_EQ: [("ab", "ba"), ("ab", "b")],
    RelationKind.SUBSEQ: [("ab", "acb"), ("ba", "acb")],
    RelationKind.ABELIAN_EQ: [("ab", "ba"), ("aab", "abb")],
    RelationKind.ALPHA_PERM: [("aab", "bba"), ("aab", "bab")],
    RelationKind.REVERSAL: [("ab", "ba"), ("ab", "ab")],
    RelationKind.COM_STAR: [("", "abc"), ("ab", "ba")],
    RelationKind.COM_PLUS: [("aa", "a"), ("", "a")],
    RelationKind.STAR: [("abab", "ab"), ("aba", "ab")],
}

for kind, pairs in SAMPLES.items():
    shown = "  ".join(f"({u!r},{v!r})={relation_holds(kind, u, v)}" for u, v in pairs)
    print(f"{kind.value:>11}: {shown}")

# Each relation carries a sound length profile, used by the matcher to prune
# candidate segment lengths.
print()
for kind in RelationKind:
    print(f"{kind.value:>11}: profile={length_profile(kind).value:>22}, "
          f"letter-antisymmetric equivalence={is_letter_antisymmetric_equivalence(kind)}")

# Commutation in one picture: two non-empty words commute exactly when they
# are powers of one common word.
from relpat import primitive_root

print()
for u, v in [("abab", "ab"), ("aba", "ab"), ("aaaa", "aa")]:
    print(f"{u} ~com~ {v}: {relation_holds(RelationKind.COM_PLUS, u, v)}"
          f"  (roots {primitive_root(u)!r}, {primitive_root(v)!r})")
