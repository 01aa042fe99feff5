"""Exact membership decision and simultaneous multi-equation matching.

The solver runs a depth-first search over per-variable segment assignments,
processing equations left to right.  Terminal symbols are consumed by exact
comparison; variable segments are tried shortest first (length 1 first in
NE mode, 0 first in E mode), so the first witness found is the all-minimal
one and results are deterministic.

Pruning (switchable, never verdict-changing):
  * equal-length constraint classes share one forced length,
  * subsequence / star constraints restrict candidate lengths against
    already-bound partners,
  * remaining-suffix length and per-letter terminal counts must fit.

Failed search states are memoized keyed on the bindings that can still
influence the remaining suffix, which makes the anchored blocks of the
SAT-reduction instances independent of each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .core import (
    BudgetExceededError,
    Constraint,
    Mode,
    PatternSymbol,
    RelationalPattern,
    Substitution,
)
from .relations import LengthProfile, RelationKind, length_profile, relation_holds

DEFAULT_NODE_BUDGET = 20_000_000


@lru_cache(maxsize=65536)
def _root(word: str) -> str:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word == word[:d] * (n // d):
            return word[:d]
    raise AssertionError("unreachable for non-empty words")


@lru_cache(maxsize=65536)
def _letter_counts(word: str) -> dict[str, int]:
    counts: dict[str, int] = {}
    for ch in word:
        counts[ch] = counts.get(ch, 0) + 1
    return counts


@dataclass(frozen=True)
class MatchEquation:
    """One pattern = word equation; pattern and target share the alphabet."""

    pattern: tuple[PatternSymbol, ...]
    target: str

    def __post_init__(self) -> None:
        object.__setattr__(self, "pattern", tuple(self.pattern))


@dataclass(frozen=True)
class MatchProblem:
    equations: tuple[MatchEquation, ...]
    constraints: frozenset[Constraint]
    mode: Mode

    def __post_init__(self) -> None:
        object.__setattr__(self, "equations", tuple(self.equations))
        object.__setattr__(self, "constraints", frozenset(self.constraints))
        if not self.equations:
            raise ValueError("a match problem needs at least one equation")
        occurring = {s for eq in self.equations for s in eq.pattern if isinstance(s, int)}
        for kind, left, right in self.constraints:
            for var in (left, right):
                if var not in occurring:
                    raise ValueError(f"constrained variable x{var} occurs in no equation")


# Compiled equation item kinds.
_TERM = 0
_VAR = 1


class _Solver:
    def __init__(self, problem: MatchProblem, node_budget: int, length_pruning: bool):
        self.mode_min = problem.mode.min_len
        self.budget = node_budget
        self.length_pruning = length_pruning
        self.bindings: dict[int, str] = {}

        # Compile each equation into merged terminal runs and variable items.
        self.items: list[list[tuple[int, object]]] = []
        self.targets: list[str] = []
        for eq in problem.equations:
            compiled: list[tuple[int, object]] = []
            run: list[str] = []
            for sym in eq.pattern:
                if isinstance(sym, str):
                    run.append(sym)
                else:
                    if run:
                        compiled.append((_TERM, "".join(run)))
                        run = []
                    compiled.append((_VAR, sym))
            if run:
                compiled.append((_TERM, "".join(run)))
            self.items.append(compiled)
            self.targets.append(eq.target)

        all_vars = sorted({s for eq in problem.equations for s in eq.pattern if isinstance(s, int)})
        self.cons_of: dict[int, list[Constraint]] = {v: [] for v in all_vars}
        for con in problem.constraints:
            self.cons_of[con.left].append(con)
            if con.right != con.left:
                self.cons_of[con.right].append(con)

        # Equal-length classes (union-find over EQUAL_LENGTHS-profile constraints).
        parent = {v: v for v in all_vars}

        def find(v: int) -> int:
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for kind, left, right in problem.constraints:
            if length_profile(kind) is LengthProfile.EQUAL_LENGTHS:
                rl, rr = find(left), find(right)
                if rl != rr:
                    parent[rl] = rr
        self.class_root = {v: find(v) for v in all_vars}
        class_members: dict[int, set[int]] = {}
        for v in all_vars:
            class_members.setdefault(self.class_root[v], set()).add(v)
        self.class_len: dict[int, Optional[int]] = {root: None for root in class_members}

        # Per (equation, item) suffix tables and memo-relevant variable lists.
        self.suffix_min: list[list[int]] = []
        self.suffix_counts: list[list[dict[str, int]]] = []
        self.relevant: list[list[tuple[int, ...]]] = []
        future: set[int] = set()
        rel_by_eq_item: list[list[tuple[int, ...]]] = []
        for ei in reversed(range(len(self.items))):
            compiled = self.items[ei]
            mins = [0] * (len(compiled) + 1)
            counts: list[dict[str, int]] = [dict() for _ in range(len(compiled) + 1)]
            rels: list[tuple[int, ...]] = [()] * (len(compiled) + 1)
            running: dict[str, int] = {}
            for j in reversed(range(len(compiled))):
                tag, payload = compiled[j]
                if tag == _TERM:
                    text = payload  # type: ignore[assignment]
                    mins[j] = mins[j + 1] + len(text)  # type: ignore[arg-type]
                    running = dict(running)
                    for ch in text:  # type: ignore[union-attr]
                        running[ch] = running.get(ch, 0) + 1
                else:
                    mins[j] = mins[j + 1] + self.mode_min
                    future.add(payload)  # type: ignore[arg-type]
                counts[j] = running
                rel: set[int] = set(future)
                for v in future:
                    for con in self.cons_of[v]:
                        rel.add(con.left)
                        rel.add(con.right)
                    rel.update(class_members[self.class_root[v]])
                rels[j] = tuple(sorted(rel))
            counts[len(compiled)] = {}
            rels[len(compiled)] = tuple(sorted(
                {v for v in future}
                | {u for v in future for con in self.cons_of[v] for u in (con.left, con.right)}
                | {m for v in future for m in class_members[self.class_root[v]]}
            ))
            self.suffix_min.append(mins)
            self.suffix_counts.append(counts)
            rel_by_eq_item.append(rels)
        self.suffix_min.reverse()
        self.suffix_counts.reverse()
        rel_by_eq_item.reverse()
        self.relevant = rel_by_eq_item

        # Suffix terminal lengths, plus the suffix variables that can carry
        # letter obligations (constrained or shared across equations).
        occurrences: dict[int, int] = {}
        for eq in problem.equations:
            for sym in eq.pattern:
                if isinstance(sym, int):
                    occurrences[sym] = occurrences.get(sym, 0) + 1
        interesting = {
            v for v in all_vars if self.cons_of[v] or occurrences.get(v, 0) > 1
        }
        self.suffix_term_len: list[list[int]] = []
        self.suffix_need_vars: list[list[tuple[int, ...]]] = []
        self.suffix_plain_count: list[list[int]] = []
        for compiled in self.items:
            size = len(compiled)
            term_lens = [0] * (size + 1)
            need_vars: list[tuple[int, ...]] = [()] * (size + 1)
            plain = [0] * (size + 1)
            for j in reversed(range(size)):
                tag, payload = compiled[j]
                if tag == _TERM:
                    term_lens[j] = term_lens[j + 1] + len(payload)  # type: ignore[arg-type]
                    need_vars[j] = need_vars[j + 1]
                    plain[j] = plain[j + 1]
                else:
                    term_lens[j] = term_lens[j + 1]
                    if payload in interesting:
                        need_vars[j] = (payload,) + need_vars[j + 1]  # type: ignore[operator]
                        plain[j] = plain[j + 1]
                    else:
                        need_vars[j] = need_vars[j + 1]
                        plain[j] = plain[j + 1] + 1
            self.suffix_term_len.append(term_lens)
            self.suffix_need_vars.append(need_vars)
            self.suffix_plain_count.append(plain)

        # Cumulative per-letter counts of each target, for suffix feasibility.
        self.target_cum: list[dict[str, list[int]]] = []
        for target in self.targets:
            cum: dict[str, list[int]] = {}
            letters = set(target)
            for ch in letters:
                arr = [0] * (len(target) + 1)
                for i, c in enumerate(target):
                    arr[i + 1] = arr[i] + (1 if c == ch else 0)
                cum[ch] = arr
            self.target_cum.append(cum)

        self.fail_memo: set[tuple] = set()
        self.needs_cache: dict[tuple, tuple[int, dict[str, int]]] = {}
        self.var_needs_cache: dict[tuple, tuple[int, dict[str, int]]] = {}

    # -- feasibility helpers ------------------------------------------------

    def _candidate_context(
        self, key: tuple, ei: int, item: int, t: int
    ) -> tuple[int, Optional[list[tuple[list[int], int]]]]:
        """Upper length bound and per-letter count checks for one choice point.

        Returns (hi, checks); checks is None when some needed letter does not
        occur in the target at all, so no candidate can succeed.
        """
        target = self.targets[ei]
        hi = len(target) - t - self.suffix_min[ei][item + 1]
        counts = self.suffix_counts[ei][item + 1]
        if self.length_pruning:
            cached = self.needs_cache.get(key)
            if cached is None:
                cached = self._dynamic_suffix_needs(ei, item + 1)
                self.needs_cache[key] = cached
            dyn_len, extra = cached
            hi = min(hi, len(target) - t - self.suffix_term_len[ei][item + 1] - dyn_len)
            if extra:
                merged = dict(counts)
                for ch, n in extra.items():
                    merged[ch] = merged.get(ch, 0) + n
                counts = merged
        cum = self.target_cum[ei]
        checks: list[tuple[list[int], int]] = []
        for ch, need in counts.items():
            arr = cum.get(ch)
            if arr is None:
                return hi, None
            checks.append((arr, need))
        return hi, checks

    def _min_letter_needs(self, var: int) -> tuple[int, dict[str, int]]:
        """Letters any image of ``var`` must contain, from bound constraint partners."""
        cons = self.cons_of[var]
        cache_key = (var, tuple(self.bindings.get(c.left) for c in cons) + tuple(self.bindings.get(c.right) for c in cons))
        cached = self.var_needs_cache.get(cache_key)
        if cached is not None:
            return cached
        needs: dict[str, int] = {}
        forced_len = self.mode_min
        nonempty = self.mode_min

        def bump(counts: dict[str, int]) -> None:
            for ch, n in counts.items():
                if n > needs.get(ch, 0):
                    needs[ch] = n

        for kind, left, right in cons:
            other = right if left == var else left
            if other == var:
                continue
            other_img = self.bindings.get(other)
            if other_img is None:
                continue
            profile = length_profile(kind)
            if profile is LengthProfile.EQUAL_LENGTHS:
                forced_len = max(forced_len, len(other_img))
                if kind in (RelationKind.EQ, RelationKind.REVERSAL, RelationKind.ABELIAN_EQ):
                    bump(_letter_counts(other_img))
            elif kind is RelationKind.COM_PLUS and other_img:
                nonempty = 1
                bump(_letter_counts(_root(other_img)))
            elif kind is RelationKind.COM_STAR and other_img and self.mode_min:
                bump(_letter_counts(_root(other_img)))
            elif kind is RelationKind.SUBSEQ and right == var:
                bump(_letter_counts(other_img))
            elif kind is RelationKind.STAR:
                if left == var and other_img and self.mode_min:
                    bump(_letter_counts(other_img))
                elif right == var and other_img:
                    nonempty = 1
                    bump({ch: 1 for ch in set(other_img)})
        min_len = max(forced_len, nonempty, sum(needs.values()))
        self.var_needs_cache[cache_key] = (min_len, needs)
        return min_len, needs

    def _dynamic_suffix_needs(self, ei: int, item: int) -> tuple[int, dict[str, int]]:
        """Length and per-letter floor over the remaining variable items,
        using bound images and bound constraint partners."""
        total = self.mode_min * self.suffix_plain_count[ei][item]
        counts: dict[str, int] = {}
        for var in self.suffix_need_vars[ei][item]:
            image = self.bindings.get(var)
            if image is not None:
                total += len(image)
                for ch in image:
                    counts[ch] = counts.get(ch, 0) + 1
                continue
            min_len, needs = self._min_letter_needs(var)
            total += min_len
            for ch, n in needs.items():
                counts[ch] = counts.get(ch, 0) + n
        return total, counts

    def _check_bound_constraints(self, var: int) -> bool:
        img = self.bindings[var]
        for kind, left, right in self.cons_of[var]:
            li = img if left == var else self.bindings.get(left)
            ri = img if right == var else self.bindings.get(right)
            if li is None or ri is None:
                continue
            if not relation_holds(kind, li, ri):
                return False
        return True

    def _length_candidates(self, var: int, lo: int, hi: int) -> list[int]:
        """Candidate segment lengths for ``var`` within [lo, hi], ascending."""
        if hi < lo:
            return []
        if self.length_pruning:
            root = self.class_root[var]
            forced = self.class_len[root]
            if forced is not None:
                return [forced] if lo <= forced <= hi else []
            multiples_of: list[int] = []
            divisors_of: list[int] = []
            for kind, left, right in self.cons_of[var]:
                other = right if left == var else left
                if other == var:
                    continue
                other_img = self.bindings.get(other)
                if other_img is None:
                    continue
                if kind is RelationKind.SUBSEQ:
                    if left == var:
                        hi = min(hi, len(other_img))
                    else:
                        lo = max(lo, len(other_img))
                elif kind is RelationKind.STAR:
                    if left == var:
                        # var's image must lie in {other}^*.
                        if not other_img:
                            hi = min(hi, 0)
                        else:
                            multiples_of.append(len(other_img))
                    else:
                        # other's image must lie in {var}^*.
                        if other_img:
                            lo = max(lo, 1)
                            divisors_of.append(len(other_img))
                elif kind is RelationKind.COM_PLUS:
                    lo = max(lo, 1)
            if hi < lo:
                return []
            if multiples_of or divisors_of:
                out = []
                for ell in range(lo, hi + 1):
                    if any(ell % m for m in multiples_of):
                        continue
                    if divisors_of and (ell == 0 or any(d % ell for d in divisors_of)):
                        continue
                    out.append(ell)
                return out
        return list(range(lo, hi + 1))

    # -- search -------------------------------------------------------------

    def solve(self) -> Optional[Substitution]:
        return self._match(0, 0, 0)

    def _match(self, ei: int, item: int, t: int) -> Optional[Substitution]:
        if ei == len(self.items):
            return dict(self.bindings)
        compiled = self.items[ei]
        target = self.targets[ei]
        if item == len(compiled):
            if t == len(target):
                return self._match(ei + 1, 0, 0)
            return None
        tag, payload = compiled[item]
        if tag == _TERM:
            text: str = payload  # type: ignore[assignment]
            if target.startswith(text, t):
                return self._match(ei, item + 1, t + len(text))
            return None

        var: int = payload  # type: ignore[assignment]
        bound = self.bindings.get(var)
        if bound is not None:
            if target.startswith(bound, t):
                return self._match(ei, item + 1, t + len(bound))
            return None

        key = (
            ei,
            item,
            t,
            tuple((v, self.bindings[v]) for v in self.relevant[ei][item] if v in self.bindings),
        )
        if key in self.fail_memo:
            return None

        hi, checks = self._candidate_context(key, ei, item, t)
        if checks is not None:
            tlen = len(target)
            root = self.class_root[var]
            fixed_before = self.class_len[root]
            for ell in self._length_candidates(var, self.mode_min, hi):
                self.budget -= 1
                if self.budget < 0:
                    raise BudgetExceededError("matcher node budget exhausted")
                end = t + ell
                feasible = True
                for arr, need in checks:
                    if arr[tlen] - arr[end] < need:
                        feasible = False
                        break
                if not feasible:
                    continue
                self.bindings[var] = target[t:end]
                if self.length_pruning and fixed_before is None:
                    self.class_len[root] = ell
                if self._check_bound_constraints(var):
                    result = self._match(ei, item + 1, end)
                    if result is not None:
                        return result
                del self.bindings[var]
                if self.length_pruning and fixed_before is None:
                    self.class_len[root] = None
        self.fail_memo.add(key)
        return None

    def count(self, cap: int) -> int:
        return self._count(0, 0, 0, cap)

    def _count(self, ei: int, item: int, t: int, cap: int) -> int:
        if cap <= 0:
            return 0
        if ei == len(self.items):
            return 1
        compiled = self.items[ei]
        target = self.targets[ei]
        if item == len(compiled):
            if t == len(target):
                return self._count(ei + 1, 0, 0, cap)
            return 0
        tag, payload = compiled[item]
        if tag == _TERM:
            text: str = payload  # type: ignore[assignment]
            if target.startswith(text, t):
                return self._count(ei, item + 1, t + len(text), cap)
            return 0
        var: int = payload  # type: ignore[assignment]
        bound = self.bindings.get(var)
        if bound is not None:
            if target.startswith(bound, t):
                return self._count(ei, item + 1, t + len(bound), cap)
            return 0
        key = (
            ei,
            item,
            t,
            tuple((v, self.bindings[v]) for v in self.relevant[ei][item] if v in self.bindings),
        )
        if key in self.fail_memo:
            return 0
        total = 0
        hi, checks = self._candidate_context(key, ei, item, t)
        if checks is not None:
            tlen = len(target)
            root = self.class_root[var]
            fixed_before = self.class_len[root]
            for ell in self._length_candidates(var, self.mode_min, hi):
                self.budget -= 1
                if self.budget < 0:
                    raise BudgetExceededError("matcher node budget exhausted")
                end = t + ell
                feasible = True
                for arr, need in checks:
                    if arr[tlen] - arr[end] < need:
                        feasible = False
                        break
                if not feasible:
                    continue
                self.bindings[var] = target[t:end]
                if self.length_pruning and fixed_before is None:
                    self.class_len[root] = ell
                if self._check_bound_constraints(var):
                    total += self._count(ei, item + 1, end, cap - total)
                del self.bindings[var]
                if self.length_pruning and fixed_before is None:
                    self.class_len[root] = None
                if total >= cap:
                    return cap
        if total == 0:
            self.fail_memo.add(key)
        return total


def solve_system(
    problem: MatchProblem,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
    length_pruning: bool = True,
) -> Optional[Substitution]:
    """Find one assignment satisfying all equations and constraints, or None.

    Complete: returns None only when no solution exists (within the node
    budget; exceeding it raises BudgetExceededError instead of guessing).
    """
    witness = _Solver(problem, node_budget, length_pruning).solve()
    if witness is not None:
        _assert_solution(problem, witness)
    return witness


def _assert_solution(problem: MatchProblem, witness: Substitution) -> None:
    for eq in problem.equations:
        image = "".join(witness[s] if isinstance(s, int) else s for s in eq.pattern)
        assert image == eq.target, "solver produced a non-solution"
    for kind, left, right in problem.constraints:
        assert relation_holds(kind, witness[left], witness[right])
    if problem.mode is Mode.NE:
        assert all(witness[v] for v in witness)


def match(
    word: str,
    rp: RelationalPattern,
    mode: Mode,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
    length_pruning: bool = True,
) -> Optional[Substitution]:
    """Decide word membership; returns a valid witness substitution or None."""
    rp.alphabet.validate_word(word)
    if not rp.variables:
        return {} if rp.terminal_text() == word else None
    problem = MatchProblem((MatchEquation(rp.symbols, word),), rp.constraints, mode)
    return solve_system(problem, node_budget=node_budget, length_pruning=length_pruning)


def count_witnesses(
    word: str,
    rp: RelationalPattern,
    mode: Mode,
    cap: int,
    *,
    node_budget: int = DEFAULT_NODE_BUDGET,
    length_pruning: bool = True,
) -> int:
    """Number of distinct valid witnesses for the word, truncated at cap."""
    if cap < 1:
        raise ValueError("cap must be positive")
    rp.alphabet.validate_word(word)
    if not rp.variables:
        return 1 if rp.terminal_text() == word else 0
    problem = MatchProblem((MatchEquation(rp.symbols, word),), rp.constraints, mode)
    return _Solver(problem, node_budget, length_pruning).count(cap)
