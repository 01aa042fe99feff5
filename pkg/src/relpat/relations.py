"""The nine binary word relations and their per-relation metadata.

All predicates work on plain strings.  The metadata (length profiles,
equivalence flags) drives search pruning in the matcher and the
precondition checks of the non-erasing equivalence decider.
"""

from __future__ import annotations

from collections import Counter
from enum import Enum


class RelationKind(Enum):
    """One of the nine supported binary word relations.

    Enum values double as the stable serialization tokens used by the
    pattern text format and the CLI.
    """

    EQ = "eq"
    LEN_EQ = "len"
    SUBSEQ = "ssq"
    ABELIAN_EQ = "ab"
    ALPHA_PERM = "perm"
    REVERSAL = "rev"
    COM_STAR = "comstar"
    COM_PLUS = "composplus"
    STAR = "star"

    def __repr__(self) -> str:  # keeps constraint sets readable in test output
        return f"RelationKind.{self.name}"


TOKEN_TO_KIND = {kind.value: kind for kind in RelationKind}


class LengthProfile(Enum):
    """Sound length relation implied by a RelationKind on any related pair."""

    EQUAL_LENGTHS = "equal"
    LEFT_AT_MOST_RIGHT = "left-at-most-right"
    LEFT_MULTIPLE_OF_RIGHT = "left-multiple-of-right"
    UNCONSTRAINED = "unconstrained"


_PROFILES = {
    RelationKind.EQ: LengthProfile.EQUAL_LENGTHS,
    RelationKind.LEN_EQ: LengthProfile.EQUAL_LENGTHS,
    RelationKind.ABELIAN_EQ: LengthProfile.EQUAL_LENGTHS,
    RelationKind.ALPHA_PERM: LengthProfile.EQUAL_LENGTHS,
    RelationKind.REVERSAL: LengthProfile.EQUAL_LENGTHS,
    RelationKind.SUBSEQ: LengthProfile.LEFT_AT_MOST_RIGHT,
    RelationKind.STAR: LengthProfile.LEFT_MULTIPLE_OF_RIGHT,
    RelationKind.COM_STAR: LengthProfile.UNCONSTRAINED,
    RelationKind.COM_PLUS: LengthProfile.UNCONSTRAINED,
}


def length_profile(kind: RelationKind) -> LengthProfile:
    return _PROFILES[kind]


def is_letter_antisymmetric_equivalence(kind: RelationKind) -> bool:
    """True for the kinds that are equivalence relations with equality on letters.

    This is the precondition gate for the polynomial non-erasing
    equivalence decider.
    """
    return kind in (RelationKind.EQ, RelationKind.ABELIAN_EQ, RelationKind.COM_PLUS)


def parikh_vector(word: str) -> Counter[str]:
    """Per-letter occurrence counts of ``word``."""
    return Counter(word)


def is_subsequence(u: str, v: str) -> bool:
    """True iff u is a (scattered) subsequence of v."""
    it = iter(v)
    return all(ch in it for ch in u)


def primitive_root(word: str) -> str:
    """Shortest z with word in {z}+.  Undefined (ValueError) for the empty word."""
    n = len(word)
    if n == 0:
        raise ValueError("empty word has no primitive root")
    for d in range(1, n + 1):
        if n % d == 0 and word == word[:d] * (n // d):
            return word[:d]
    raise AssertionError("unreachable")


def _alpha_perm(u: str, v: str) -> bool:
    # Injective letter map on alph(v) sending v to u letterwise; any such
    # partial injection extends to a bijection of the finite alphabet.
    if len(u) != len(v):
        return False
    mapping: dict[str, str] = {}
    for a, b in zip(v, u):
        if mapping.setdefault(a, b) != b:
            return False
    return len(set(mapping.values())) == len(mapping)


def relation_holds(kind: RelationKind, u: str, v: str) -> bool:
    """Decide whether the ordered pair (u, v) belongs to the relation."""
    if kind is RelationKind.EQ:
        return u == v
    if kind is RelationKind.LEN_EQ:
        return len(u) == len(v)
    if kind is RelationKind.SUBSEQ:
        return is_subsequence(u, v)
    if kind is RelationKind.ABELIAN_EQ:
        return Counter(u) == Counter(v)
    if kind is RelationKind.ALPHA_PERM:
        return _alpha_perm(u, v)
    if kind is RelationKind.REVERSAL:
        return u == v[::-1]
    if kind is RelationKind.COM_STAR:
        # Holds iff some z has u, v in {z}*; with u, v non-empty that is
        # exactly uv = vu, and the empty word commutes with everything.
        return not u or not v or u + v == v + u
    if kind is RelationKind.COM_PLUS:
        # As COM_STAR but the empty word is never a member of {z}+.
        return bool(u) and bool(v) and u + v == v + u
    if kind is RelationKind.STAR:
        if not v:
            return not u
        q, r = divmod(len(u), len(v))
        return r == 0 and u == v * q
    raise ValueError(f"unknown relation kind: {kind!r}")
