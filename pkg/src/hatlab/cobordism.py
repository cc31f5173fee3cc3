"""A certified rewriting DSL for braid moves that induce symplectic cobordisms.

Each move either preserves the braid closure (conjugation, cyclic
permutation, certified rewriting, positive Markov moves) or attaches bands
to it (inserting a positive generator, switching a negative crossing to a
positive one, negative stabilization).  Replaying a script keeps a ledger of
the attached bands and the induced Euler-characteristic / self-linking /
genus accounting.

Moves are applied to the literal letter sequence; nothing is simplified
implicitly.  A ``RewriteEqual`` step is certified against the Garside
normal form and replay fails loudly on an uncertifiable step, so a script
that replays is a proof of every equality it uses.

Script files are line-oriented text::

    strands: 3
    start: xy^2x^2y^7
    ins 4 y
    cc 0 x
    conj xyx
    cyc 13
    eq yxy^2xy^2xy^6
    stab +
    destab
    end: xyxyxyxyxyxyxyxyxyxyxy

Positions are 0-based indices into the current letter sequence.  Blank
lines and ``#`` comments are ignored when reading.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .braid import (
    BraidError,
    BraidWord,
    braid_text,
    closure_components,
    conjugate,
    cyclic_permute,
    equal,
    exponent_sum,
    free_reduce,
    full_twist,
    inverse,
    markov_destabilize,
    markov_stabilize,
    parse_braid,
    self_linking,
    underlying_permutation,
)


class ScriptError(ValueError):
    """A move failed to apply or certify during replay."""


@dataclass(frozen=True)
class InsertPositive:
    """Insert sigma_index at the given position: one attached band."""

    position: int
    index: int


@dataclass(frozen=True)
class CrossingChange:
    """Switch the negative letter at position to its positive mate.

    Models a positive crossing change of the closure and counts as two
    inserted crossings in the ledger.
    """

    position: int
    index: int


@dataclass(frozen=True)
class Conjugate:
    word: BraidWord


@dataclass(frozen=True)
class CyclicPermute:
    k: int


@dataclass(frozen=True)
class RewriteEqual:
    """Replace the word by an equal one; certified via normal forms."""

    target: BraidWord


@dataclass(frozen=True)
class MarkovStabilize:
    """sign=+1 keeps the transverse closure; sign=-1 is the transverse
    stabilization (flagged in the ledger, self-linking drops by 2)."""

    sign: int


@dataclass(frozen=True)
class MarkovDestabilize:
    pass


def negative_stabilize() -> MarkovStabilize:
    """The transverse stabilization: MarkovStabilize(-1), flagged in ledgers."""
    return MarkovStabilize(-1)


Move = Union[
    InsertPositive,
    CrossingChange,
    Conjugate,
    CyclicPermute,
    RewriteEqual,
    MarkovStabilize,
    MarkovDestabilize,
]


@dataclass(frozen=True)
class MoveScript:
    start: BraidWord
    moves: tuple[Move, ...] = ()
    declared_end: Optional[BraidWord] = None
    name: str = ""


@dataclass
class CobordismLedger:
    """Band and self-linking bookkeeping for one replayed script.

    ``bands`` counts inserted single positive generators (a crossing change
    contributes 2), so ``euler == -bands``.  When both ends are knots the
    cobordism genus is ``bands/2``, which also equals
    ``(slk_end - slk_start)/2`` in the absence of negative stabilizations.
    """

    bands: int = 0
    crossing_changes: int = 0
    insertions: int = 0
    negative_stabilizations: int = 0
    slk_start: Optional[int] = None
    slk_end: Optional[int] = None
    component_trace: list[int] = field(default_factory=list)

    @property
    def euler(self) -> int:
        return -self.bands

    @property
    def stabilized(self) -> bool:
        return self.negative_stabilizations > 0

    @property
    def genus(self) -> Optional[int]:
        if self.slk_start is None or self.slk_end is None:
            return None
        if self.bands % 2:
            raise ScriptError("odd band count on a knot-to-knot script")
        return self.bands // 2

    def check_consistency(self) -> None:
        if self.slk_start is not None and self.slk_end is not None:
            expect = self.bands - 2 * self.negative_stabilizations
            if self.slk_end - self.slk_start != expect:
                raise ScriptError(
                    "ledger mismatch: slk delta "
                    f"{self.slk_end - self.slk_start} != bands {expect}"
                )


def apply_move(w: BraidWord, move: Move) -> BraidWord:
    """Apply a single move to a word; raises ScriptError on any violation."""
    if isinstance(move, InsertPositive):
        if not (0 <= move.position <= len(w.letters)):
            raise ScriptError(f"insert position {move.position} out of range")
        if not (1 <= move.index < w.strands):
            raise ScriptError(f"insert index {move.index} out of range")
        letters = w.letters[:move.position] + (move.index,) + w.letters[move.position:]
        return BraidWord(w.strands, letters)
    if isinstance(move, CrossingChange):
        if not (0 <= move.position < len(w.letters)):
            raise ScriptError(f"crossing-change position {move.position} out of range")
        if w.letters[move.position] != -move.index:
            raise ScriptError(
                f"crossing change expects sigma_{move.index}^-1 at position "
                f"{move.position}, found letter {w.letters[move.position]}"
            )
        letters = list(w.letters)
        letters[move.position] = move.index
        return BraidWord(w.strands, tuple(letters))
    if isinstance(move, Conjugate):
        return conjugate(w, move.word)
    if isinstance(move, CyclicPermute):
        return cyclic_permute(w, move.k)
    if isinstance(move, RewriteEqual):
        if move.target.strands != w.strands:
            raise ScriptError("rewrite target has wrong strand count")
        if not equal(w, move.target):
            raise ScriptError(
                f"uncertifiable rewrite: {braid_text(w)} != {braid_text(move.target)}"
            )
        return move.target
    if isinstance(move, MarkovStabilize):
        return markov_stabilize(w, move.sign)
    if isinstance(move, MarkovDestabilize):
        return markov_destabilize(w)
    raise ScriptError(f"unknown move {move!r}")


def run_script(script: MoveScript) -> tuple[BraidWord, CobordismLedger]:
    """Replay a script, certifying every step, and return (end, ledger).

    Raises ScriptError (with the step index) rather than skipping an
    uncertifiable step.  The ledger's genus is populated only when both
    ends are knots.
    """
    w = script.start
    ledger = CobordismLedger()
    if closure_components(w) == 1:
        ledger.slk_start = self_linking(w)
    ledger.component_trace.append(closure_components(w))
    for step, move in enumerate(script.moves):
        try:
            w = apply_move(w, move)
        except (ScriptError, BraidError) as e:
            raise ScriptError(f"step {step} ({move!r}): {e}") from e
        if isinstance(move, InsertPositive):
            ledger.bands += 1
            ledger.insertions += 1
        elif isinstance(move, CrossingChange):
            ledger.bands += 2
            ledger.crossing_changes += 1
        elif isinstance(move, MarkovStabilize) and move.sign == -1:
            ledger.negative_stabilizations += 1
        ledger.component_trace.append(closure_components(w))
    if closure_components(w) == 1:
        ledger.slk_end = self_linking(w)
    if script.declared_end is not None:
        if script.declared_end.strands != w.strands:
            raise ScriptError(
                f"declared end lives in B_{script.declared_end.strands}, "
                f"script ends in B_{w.strands}"
            )
        if not equal(w, script.declared_end):
            raise ScriptError(
                f"final word {braid_text(w)} not equal to declared end "
                f"{braid_text(script.declared_end)}"
            )
    ledger.check_consistency()
    return w, ledger


# ---------------------------------------------------------------------------
# Script file format
# ---------------------------------------------------------------------------

def _gen_index(token: str, strands: int) -> int:
    w = parse_braid(token, strands)
    if len(w.letters) != 1 or w.letters[0] < 0:
        raise ScriptError(f"expected a single positive generator, got {token!r}")
    return w.letters[0]


def parse_script(text: str, name: str = "") -> MoveScript:
    strands: Optional[int] = None
    start: Optional[BraidWord] = None
    end: Optional[BraidWord] = None
    moves: list[Move] = []
    cur_strands = 0
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("strands:"):
            strands = int(line.split(":", 1)[1])
            cur_strands = strands
            continue
        if line.startswith("start:"):
            if strands is None:
                raise ScriptError("strands must come before start")
            start = parse_braid(line.split(":", 1)[1], strands)
            continue
        if line.startswith("end:"):
            end = parse_braid(line.split(":", 1)[1], cur_strands)
            continue
        parts = line.split()
        op = parts[0]
        if op == "ins":
            moves.append(InsertPositive(int(parts[1]), _gen_index(parts[2], cur_strands)))
        elif op == "cc":
            moves.append(CrossingChange(int(parts[1]), _gen_index(parts[2], cur_strands)))
        elif op == "conj":
            moves.append(Conjugate(parse_braid(parts[1], cur_strands)))
        elif op == "cyc":
            moves.append(CyclicPermute(int(parts[1])))
        elif op == "eq":
            moves.append(RewriteEqual(parse_braid(parts[1], cur_strands)))
        elif op == "stab":
            sign = 1 if parts[1] == "+" else -1
            moves.append(MarkovStabilize(sign))
            cur_strands += 1
        elif op == "destab":
            moves.append(MarkovDestabilize())
            cur_strands -= 1
        else:
            raise ScriptError(f"unknown script line {raw!r}")
    if strands is None or start is None:
        raise ScriptError("script needs 'strands:' and 'start:' headers")
    return MoveScript(start=start, moves=tuple(moves), declared_end=end, name=name)


def serialize_script(script: MoveScript) -> str:
    lines = [f"strands: {script.start.strands}", f"start: {braid_text(script.start)}"]
    for move in script.moves:
        if isinstance(move, InsertPositive):
            lines.append(f"ins {move.position} {braid_text(BraidWord(move.index + 1, (move.index,)))}")
        elif isinstance(move, CrossingChange):
            lines.append(f"cc {move.position} {braid_text(BraidWord(move.index + 1, (move.index,)))}")
        elif isinstance(move, Conjugate):
            lines.append(f"conj {braid_text(move.word)}")
        elif isinstance(move, CyclicPermute):
            lines.append(f"cyc {move.k}")
        elif isinstance(move, RewriteEqual):
            lines.append(f"eq {braid_text(move.target)}")
        elif isinstance(move, MarkovStabilize):
            lines.append(f"stab {'+' if move.sign == 1 else '-'}")
        elif isinstance(move, MarkovDestabilize):
            lines.append("destab")
        else:
            raise ScriptError(f"cannot serialize {move!r}")
    if script.declared_end is not None:
        lines.append(f"end: {braid_text(script.declared_end)}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Torus-target scripts: comb a knot braid up to (s1...s_{n-1}) Delta^{2m}
# ---------------------------------------------------------------------------

def _moving_word(n: int, s: int) -> list[int]:
    # M_s = s_{n-1} s_{n-2} ... s_s: carries the last strand to position s.
    return list(range(n - 1, s - 1, -1))


def comb_pure(w: BraidWord) -> list[tuple[int, ...]]:
    """Factor a pure-braid word into conjugates of squares of generators.

    Returns letter tuples, each of the form ``u + (k, k) + u^-1`` or
    ``u + (-k, -k) + u^-1``, whose concatenation equals the input in B_n.
    The factorization unweaves one strand at a time: walking the word while
    the last strand sits parked at the right edge, a crossing that carries
    it over a neighbour emits one square conjugated by the processed prefix,
    and a crossing that carries it under is free.  The strand-free residue
    is combed recursively.

    The result is certified against the Garside normal form; a convention
    bug cannot silently corrupt a factorization.
    """
    if not underlying_permutation(w).is_identity():
        raise BraidError("comb_pure needs a pure braid word")
    factors = _comb(w.strands, list(free_reduce(w).letters))
    produced = BraidWord(w.strands, tuple(g for f in factors for g in f))
    if not equal(produced, w):
        raise BraidError("internal error: combing failed certification")
    return factors


def _comb(n: int, letters: list[int]) -> list[tuple[int, ...]]:
    if n <= 1 or not letters:
        return []
    out: list[tuple[int, ...]] = []
    d: list[int] = []  # processed residue, strand-free, indices in B_{n-1}
    s = n
    for g in letters:
        i = abs(g)
        pos = 1 if g > 0 else -1
        if i + 1 < s:
            d.append(g)
        elif i > s:
            d.append(pos * (i - 1))
        elif i == s:
            if pos > 0:
                u = d + _moving_word(n, s + 1)
                out.append(tuple(u + [s, s] + [-x for x in reversed(u)]))
            s += 1
        else:  # i == s - 1
            if pos < 0:
                u = d + _moving_word(n, s - 1)
                out.append(tuple(u + [-(s - 1), -(s - 1)] + [-x for x in reversed(u)]))
            s -= 1
    if s != n:
        raise BraidError("internal error: strand did not return home")
    reduced = free_reduce(BraidWord(n, tuple(d)))
    out.extend(_comb(n - 1, list(reduced.letters)))
    return out


def to_torus_script(w: BraidWord) -> MoveScript:
    """Build a certified script from a knot braid to a positive torus braid.

    The output rewrites ``w`` (after a conjugation aligning its permutation
    with the cycle of ``beta0 = s1 s2 ... s_{n-1}``) into ``beta0`` times an
    explicit product of conjugated squares, cancels the negative squares by
    inserting their positive mates, grows every positive square into a full
    twist, and ends at a word equal to ``beta0 * Delta^{2m}``, whose closure
    is the torus knot T(n, mn+1).
    """
    if closure_components(w) != 1:
        raise BraidError("torus scripts need a knot closure")
    n = w.strands
    beta0 = BraidWord(n, tuple(range(1, n)))
    moves: list[Move] = []
    cur = w
    c = _aligning_conjugator(w, beta0)
    if c.letters:
        moves.append(Conjugate(c))
        cur = conjugate(cur, c)

    gamma = free_reduce(BraidWord(n, tuple(inverse(beta0).letters) + cur.letters))
    factors = comb_pure(gamma)

    flat = list(beta0.letters)
    spans: list[tuple[int, tuple[int, ...]]] = []  # (offset, factor letters)
    for f in factors:
        spans.append((len(flat), f))
        flat.extend(f)
    stage1 = BraidWord(n, tuple(flat))
    if not equal(cur, stage1):
        raise BraidError("internal error: factored form not equal to input")
    moves.append(RewriteEqual(stage1))

    # Work right to left so earlier offsets survive the insertions.
    positive = 0
    for off, f in reversed(spans):
        k = (len(f) - 2) // 2  # conjugator length
        mid = off + k
        if f[k] < 0:
            # u s^-2 u^-1: insert the cancelling square right after it.
            idx = -f[k]
            moves.append(InsertPositive(mid + 2, idx))
            moves.append(InsertPositive(mid + 2, idx))
        else:
            # u s^2 u^-1: grow the square into a full twist in place.
            positive += 1
            for pos, j in delta_square_insertion_moves(n, f[k], mid):
                moves.append(InsertPositive(pos, j))
                moves.append(InsertPositive(pos, j))

    m = positive
    end = BraidWord(n, beta0.letters + full_twist(n).letters * m)
    moves.append(RewriteEqual(end))
    script = MoveScript(start=w, moves=tuple(moves), declared_end=end)
    run_script(script)  # certify before handing out
    return script


def delta_square_insertion_moves(n: int, index: int, offset: int) -> list[tuple[int, int]]:
    """delta_square_script positions shifted to a square sitting at ``offset``."""
    from .braid import delta_square_script

    return [(offset + pos, j) for pos, j in delta_square_script(n, index)]


def _aligning_conjugator(w: BraidWord, beta0: BraidWord) -> BraidWord:
    """A braid word c with perm(c w c^-1) == perm(beta0)."""
    n = w.strands
    pw = underlying_permutation(w)
    p0 = underlying_permutation(beta0)
    if pw.images == p0.images:
        return BraidWord(n)
    cyc_w = pw.cycles()[0]
    cyc_0 = p0.cycles()[0]
    if len(cyc_w) != n or len(cyc_0) != n:
        raise BraidError("not an n-cycle")
    # rho maps the w-cycle onto the beta0-cycle pointwise.
    rho = [0] * n
    for a, b in zip(cyc_w, cyc_0):
        rho[a - 1] = b
    c = _permutation_braid_word(n, rho)
    got = underlying_permutation(conjugate(w, c))
    if got.images != p0.images:
        c = inverse(c)
        got = underlying_permutation(conjugate(w, c))
        if got.images != p0.images:
            raise BraidError("internal error: conjugator alignment failed")
    return c


def _permutation_braid_word(n: int, images: Sequence[int]) -> BraidWord:
    """The positive permutation-braid word realizing the given images."""
    target = list(images)
    state = list(range(1, n + 1))
    letters: list[int] = []
    # Bubble the strand ending at each position into place, rightmost first.
    for dest in range(n, 0, -1):
        src = state.index(next(s for s in range(1, n + 1) if target[s - 1] == dest)) + 1
        for q in range(src, dest):
            state[q - 1], state[q] = state[q], state[q - 1]
            letters.append(q)
    w = BraidWord(n, tuple(letters))
    got = underlying_permutation(w).images
    if list(got) != list(images):
        raise BraidError("internal error: permutation braid construction failed")
    return w
