"""Normalization of symbol words and the bridge to nesting forests.

The rewriting algorithm turns any valid symbol word into a word of
(-2,0) and (2,0) symbols only, i.e. a balanced-parentheses description
of a nesting forest of circles:

  step 1  move every (-2,*) left of every (2,*): rewrite the LEFTMOST
          adjacent (2,a)(-2,b) pair, via R3.2 when a <= b and via
          R3.1 backward when b <= a-2 (d's are even, so the two cases
          are exhaustive and overlap nowhere);
  step 2  sort each same-sign block to non-increasing d by rewriting
          the leftmost ascending adjacent pair with R2 / R4;
  step 3  delete the leftmost (-2,k)(2,k+2) pair (R1) and restart at
          step 1;
  step 4  rewrite the leftmost (-2,k)(2,l) pair with k <= l-4 via
          R3.1 forward, then retry step 3;
  step 5  stop when no (-2,k)(2,l) pair with k <= l-2 remains.

All rewrites go through words.apply_relation, so the recorded trace
replays exactly.  Termination is watched two ways: a global rewrite cap
(an implementation-bug tripwire, CLI-configurable), and the invariant
that the sort potential strictly decreases between consecutive step-3
visits with no step-1 pass in between.

Every choice here is deterministic (leftmost match everywhere) so the
trace is stable enough for golden tests.

Forests are nested tuples: a tree is the tuple of its child trees, a
forest is a tuple of trees.  The canonical form orders siblings by
their parenthesis strings, shorter first then lexicographic; it is
chosen independently of the numeric invariants so the two can
cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InternalInvariantError
from .words import SymWord, apply_relation, check_validity, format_sym, require_valid

DEFAULT_MAX_REWRITES = 10**6

Tree = tuple
Forest = tuple


# -- potentials ----------------------------------------------------------

def rewrite_potential(sym) -> tuple[int, int]:
    """Lexicographic termination measure: (sum of 1-based positions of
    the (2,*) symbols, sum of cup d's minus sum of cap d's)."""
    pos_sum = 0
    d_balance = 0
    for i, (c, d) in enumerate(sym, start=1):
        if c == 2:
            pos_sum += i
            d_balance -= d
        else:
            d_balance += d
    return (pos_sum, d_balance)


def gap_potential(sym) -> float:
    """Largest d-growth between consecutive same-sign symbols, adjusted
    for how far apart they sit; non-positive exactly when each sign
    class is 'sorted enough'.  -inf when neither class has two symbols."""
    best = float("-inf")
    for sign in (2, -2):
        idx = [i for i, (c, _) in enumerate(sym) if c == sign]
        for a, b in zip(idx, idx[1:]):
            gap = sym[b][1] - sym[a][1] - 2 * (b - a - 1)
            if gap > best:
                best = gap
    return best


# -- the algorithm --------------------------------------------------------

@dataclass(frozen=True)
class RewriteStep:
    step: int                 # algorithm step that fired (1..4)
    rule: str                 # R1 / R2 / R3.1 / R3.2 / R4
    forward: bool
    pos: int                  # 0-based left index of the rewritten pair
    word: SymWord             # word after the rewrite
    potential: tuple[int, int]

    def describe(self) -> str:
        mark = "" if self.forward else "'"
        return f"step{self.step} {self.rule}{mark} @{self.pos + 1} {format_sym(self.word)}"


class _Watchdog:
    def __init__(self, limit: int):
        self.limit = limit
        self.count = 0

    def tick(self) -> None:
        self.count += 1
        if self.count > self.limit:
            raise InternalInvariantError(
                f"rewrite watchdog tripped after {self.limit} rewrites"
            )


def normalize(sym, max_rewrites: int = DEFAULT_MAX_REWRITES) -> tuple[SymWord, list[RewriteStep]]:
    """Rewrite to a word of (+-2, 0) symbols; returns (word, trace)."""
    require_valid(sym)
    word = tuple(sym)
    trace: list[RewriteStep] = []
    dog = _Watchdog(max_rewrites)

    def record(step: int, rule: str, forward: bool, pos: int, new_word: SymWord) -> SymWord:
        dog.tick()
        trace.append(
            RewriteStep(step, rule, forward, pos, new_word, rewrite_potential(new_word))
        )
        return new_word

    def step1(w: SymWord) -> SymWord:
        while True:
            for i in range(len(w) - 1):
                (c1, d1), (c2, d2) = w[i], w[i + 1]
                if c1 == 2 and c2 == -2:
                    if d1 <= d2:
                        w = record(1, "R3.2", True, i, apply_relation(w, "R3.2", i))
                    else:
                        w = record(1, "R3.1", False, i, apply_relation(w, "R3.1", i, forward=False))
                    break
            else:
                return w

    def step2(w: SymWord) -> SymWord:
        while True:
            for i in range(len(w) - 1):
                (c1, d1), (c2, d2) = w[i], w[i + 1]
                if c1 == c2 and d1 < d2:
                    rule = "R2" if c1 == 2 else "R4"
                    w = record(2, rule, True, i, apply_relation(w, rule, i))
                    break
            else:
                return w

    word = step2(step1(word))
    last_e3: tuple[int, int] | None = rewrite_potential(word)
    while True:
        deleted = False
        for i in range(len(word) - 1):
            (c1, d1), (c2, d2) = word[i], word[i + 1]
            if c1 == -2 and c2 == 2 and d2 == d1 + 2:
                word = record(3, "R1", True, i, apply_relation(word, "R1", i))
                word = step2(step1(word))
                last_e3 = rewrite_potential(word)
                deleted = True
                break
        if deleted:
            continue
        moved = False
        for i in range(len(word) - 1):
            (c1, d1), (c2, d2) = word[i], word[i + 1]
            if c1 == -2 and c2 == 2 and d1 <= d2 - 4:
                word = record(4, "R3.1", True, i, apply_relation(word, "R3.1", i))
                here = rewrite_potential(word)
                if last_e3 is not None and here >= last_e3:
                    raise InternalInvariantError(
                        "sort potential failed to decrease between step-3 visits"
                    )
                last_e3 = here
                moved = True
                break
        if not moved:
            break

    for c, d in word:
        if d != 0:
            raise InternalInvariantError(
                f"normalization left a nonzero symbol in {format_sym(word)}"
            )
    return word, trace


# -- composition structure -------------------------------------------------

def factorize(sym) -> list[SymWord]:
    """Maximal split of a normal word into indivisible factors: cut
    wherever the running symbol sum returns to zero."""
    require_valid(sym)
    if any(d != 0 for _, d in sym):
        raise ValueError("factorize needs a normal word of (+-2,0) symbols")
    out = []
    run = 0
    start = 0
    for i, (c, _) in enumerate(sym):
        run += c
        if run == 0:
            out.append(tuple(sym[start:i + 1]))
            start = i + 1
    return out


def encircle(sym) -> SymWord:
    """Surround the system with one new circle: prepend (-2,0), append
    (2,0).  Works on any valid word, normal or not."""
    require_valid(sym)
    return ((-2, 0),) + tuple(sym) + ((2, 0),)


# -- forests ----------------------------------------------------------------

def to_forest(sym) -> Forest:
    """Parse a normal word as nesting structure: (-2,0) opens a circle,
    (2,0) closes it; nesting of the parentheses is containment."""
    require_valid(sym)
    if any(d != 0 for _, d in sym):
        raise ValueError("to_forest needs a normal word of (+-2,0) symbols")
    stack: list[list] = [[]]
    for c, _ in sym:
        if c == -2:
            stack.append([])
        else:
            children = stack.pop()
            if not stack:
                raise ValueError("unbalanced word")
            stack[-1].append(tuple(children))
    if len(stack) != 1:
        raise ValueError("unbalanced word")
    return tuple(stack[0])


def _tree_key(s: str) -> tuple[int, str]:
    return (len(s), s)


def tree_string(tree: Tree) -> str:
    return "(" + "".join(sorted((tree_string(c) for c in tree), key=_tree_key)) + ")"


def forest_string(forest: Forest) -> str:
    """Canonical parenthesis string: equal strings iff isotopic systems."""
    return "".join(sorted((tree_string(t) for t in forest), key=_tree_key))


def canonicalize(forest: Forest) -> Forest:
    """Reorder all siblings into canonical order."""
    canon_trees = [canonicalize_tree(t) for t in forest]
    return tuple(sorted(canon_trees, key=lambda t: _tree_key(tree_string(t))))


def canonicalize_tree(tree: Tree) -> Tree:
    kids = [canonicalize_tree(c) for c in tree]
    return tuple(sorted(kids, key=lambda t: _tree_key(tree_string(t))))


def from_forest(forest: Forest) -> SymWord:
    """Normal word of a forest, children emitted in canonical order."""
    out: list = []

    def emit(tree: Tree) -> None:
        out.append((-2, 0))
        for child in tree:
            emit(child)
        out.append((2, 0))

    for tree in canonicalize(forest):
        emit(tree)
    return tuple(out)


def forest_size(forest: Forest) -> int:
    return sum(1 + forest_size(t) for t in forest)
