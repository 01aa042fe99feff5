#!/usr/bin/env python3
# 3-SAT instances turned into membership instances, and machine-checked back.

from relpat import (
    CnfFormula,
    Mode,
    ReductionVariant,
    RelationKind,
    generate,
    match,
    print_relational_pattern,
    sat_brute_force,
    verify_reduction,
    write_dimacs,
)

# (X1 or not X2 or X2) is satisfiable; (X1)(not X1) as padded clauses is not.
sat = CnfFormula(2, ((1, -2, 2),))
unsat = CnfFormula(1, ((1, 1, 1), (-1, -1, -1)))
print(write_dimacs(sat))

# The non-erasing construction: one 1^3 block per variable, a 1^7 block per
# clause, and a 1^4 slack block per clause.
inst = generate(ReductionVariant.ANGLUIN_NE, sat, RelationKind.EQ)
print("word:   ", inst.word)
print("pattern:", print_relational_pattern(inst.rp))
print("member: ", match(inst.word, inst.rp, inst.mode) is not None,
      "| satisfiable:", sat_brute_force(sat))

# The same construction runs over any relation that can simulate equality on
# the blocks; commutation needs its own word shape.
print()
for variant, kind in [
    (ReductionVariant.ANGLUIN_NE, RelationKind.REVERSAL),
    (ReductionVariant.JIANG_E, RelationKind.STAR),
    (ReductionVariant.ONE_SIDED_STAR_NE, None),
    (ReductionVariant.ONE_SIDED_SUBSEQ_E, None),
]:
    for phi, name in ((sat, "sat"), (unsat, "unsat")):
        ok = verify_reduction(variant, phi, kind)
        print(f"{variant.value:>18} on {name:>5}: membership == satisfiability? {ok}")

commute = CnfFormula(2, ((1, -1, 2),))
inst = generate(ReductionVariant.COMMUTE_NE, commute, RelationKind.COM_STAR)
print()
print("commutation word:", inst.word)
print("verified:", verify_reduction(ReductionVariant.COMMUTE_NE, commute, RelationKind.COM_STAR))
