"""Elementary operators on states.

`cap(state, k)` composes the diagram with a local maximum at slot k
(width n -> n+2); `cup(state, k)` composes with a local minimum (width
n+2 -> n).  Slots are 1-based with 2 <= k <= n+1, so the new or closed
region always has an interval on each side.

cap:  R' = M R M' + D,        v' = M * v
cup:  R' = (M' R M)^2,        v' = R' * [(M' * v) (+) (e_{k-1} * x)]

where M is the insertion map for slot k, D marks the new region's
diagonal entry, and x is the cup value: if the two intervals flanking
the cup already share a region, the region between them is being sealed
off and x = phi(value inside); otherwise two regions merge and
x = meet of their values (their join is already present, and
join (+) meet = (+) of both).

A word of generators is evaluated right-to-left: the rightmost factor
is the topmost piece of the diagram and is applied first.

Set `STRICT_VALIDATE = True` to re-validate every operator output
(slow; both operators provably preserve validity, and the test suite
exercises exactly that).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import boolmat
from .boolmat import BitMatrix
from .lomonoid import MonoidSpec, Value, act, oplus_arrays
from .states import TangleState, ends_connected, trivial, validate

STRICT_VALIDATE = False


def _result(region: BitMatrix, values, spec: MonoidSpec) -> TangleState:
    if STRICT_VALIDATE:
        return validate(region, values, spec)
    return TangleState(region.rows, region, tuple(values), spec)


@dataclass(frozen=True)
class Generator:
    """A cap or cup reference: kind, width parameter n, slot k.

    A cap with parameter n maps width n to n+2; a cup with parameter n
    maps width n+2 down to n.  Both require 2 <= k <= n+1.
    """

    kind: str
    n: int
    k: int

    def __post_init__(self):
        if self.kind not in ("cap", "cup"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.n < 1:
            raise ValueError(f"generator width parameter {self.n} must be >= 1")
        if not 2 <= self.k <= self.n + 1:
            raise ValueError(
                f"slot k={self.k} outside 2..{self.n + 1} for width parameter {self.n}"
            )

    @property
    def in_width(self) -> int:
        return self.n if self.kind == "cap" else self.n + 2

    @property
    def out_width(self) -> int:
        return self.n + 2 if self.kind == "cap" else self.n

    def symbol(self) -> tuple[int, int]:
        """(+-2, d) code: d is strands-left minus strands-right."""
        c = 2 if self.kind == "cap" else -2
        return (c, 2 * self.k - self.n - 3)

    def text(self) -> str:
        letter = "H" if self.kind == "cap" else "U"
        return f"{letter}({self.n},{self.k})"


def cap(state: TangleState, k: int) -> TangleState:
    """Insert a new region at slot k: width n -> n+2."""
    n = state.n
    if not 2 <= k <= n + 1:
        raise ValueError(f"cap slot k={k} outside 2..{n + 1} for width {n}")
    m = boolmat.insert_map(n, k)
    region = m @ state.region @ m.transpose() + boolmat.single_diag(n + 2, k)
    values = act(m, state.values, state.spec)
    return _result(region, values, state.spec)


def cup_value(state: TangleState, k: int) -> Value:
    """The value injected at a cup at slot k of this state."""
    n = state.n
    if not (n >= 3 and 2 <= k <= n - 1):
        raise ValueError(f"cup slot k={k} outside 2..{n - 1} for width {n}")
    v = state.values
    if state.region.entry(k - 2, k):  # flanking intervals share a region
        return state.spec.phi(v[k - 1])
    return state.spec.meet(v[k - 2], v[k])


def cup(state: TangleState, k: int) -> TangleState:
    """Close the region at slot k: width n+2 -> n."""
    m_in = state.n
    if m_in < 3:
        raise ValueError(f"cup needs width >= 3, got {m_in}")
    n = m_in - 2
    if not 2 <= k <= n + 1:
        raise ValueError(f"cup slot k={k} outside 2..{n + 1} for width {m_in}")
    spec = state.spec
    m = boolmat.insert_map(n, k)
    mt = m.transpose()
    folded = mt @ state.region @ m
    region = folded @ folded
    x = cup_value(state, k)
    injected = list(act(mt, state.values, spec))
    injected[k - 2] = spec.oplus(injected[k - 2], x)
    values = act(region, injected, spec)
    return _result(region, values, spec)


def mirror(state: TangleState) -> TangleState:
    """Left-right reflection; an involution."""
    s = boolmat.reversal(state.n)
    region = s @ state.region @ s
    values = act(s, state.values, state.spec)
    return _result(region, values, state.spec)


def add_value(state: TangleState, m: Value) -> TangleState:
    """Add m into the region of the first interval (and therefore into
    every interval of that region)."""
    spec = state.spec
    bumped = (spec.oplus(m, state.values[0]),) + state.values[1:]
    values = act(state.region, bumped, spec)
    return _result(state.region, values, spec)


def encircle_state(state: TangleState) -> TangleState:
    """Surround the whole picture with one new curve: width n -> n+2.

    Requires the first and last intervals to share a region (true for
    everything reachable from trivial()); preserves that property.
    """
    if not ends_connected(state):
        raise ValueError("encircle_state needs the outer intervals connected")
    n = state.n
    e = boolmat.inner_embed(n)
    region = e @ state.region @ e.transpose() + boolmat.outer_corners(n + 2)
    values = act(e, state.values, state.spec)
    return _result(region, values, state.spec)


def shift(gen: Generator) -> Generator:
    """Reindex a generator for evaluation inside one extra circle:
    (kind, n, k) -> (kind, n+2, k+1).  Its symbol code is unchanged."""
    return Generator(gen.kind, gen.n + 2, gen.k + 1)


def shift_word(word) -> tuple[Generator, ...]:
    return tuple(shift(g) for g in word)


def apply_generator(state: TangleState, gen: Generator) -> TangleState:
    if gen.in_width != state.n:
        raise ValueError(
            f"generator {gen.text()} expects width {gen.in_width}, state has {state.n}"
        )
    if gen.kind == "cap":
        return cap(state, gen.k)
    return cup(state, gen.k)


def eval_word(word, start: TangleState) -> TangleState:
    """Apply a composition-ordered word (leftmost = bottom of diagram):
    fold right-to-left, so the rightmost generator acts first."""
    state = start
    for pos in range(len(word) - 1, -1, -1):
        gen = word[pos]
        if gen.in_width != state.n:
            raise ValueError(
                f"arity mismatch at position {pos + 1}: {gen.text()} expects "
                f"width {gen.in_width}, state has width {state.n}"
            )
        state = apply_generator(state, gen)
    return state


def eval_closed(word, spec: MonoidSpec) -> Value:
    """Evaluate a closed word on the trivial state and return the one
    value of the resulting width-1 state."""
    final = eval_word(word, trivial(spec))
    if final.n != 1:
        raise ValueError(f"word is not closed: final width {final.n}")
    return final.values[0]
