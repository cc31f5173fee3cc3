"""Braid words in B_n and a complete solution to their word problem.

A braid word is a flat sequence of signed generator indices: the letter
``+i`` is sigma_i (a positive half twist of strands i, i+1) and ``-i`` its
inverse, for 1 <= i <= n-1.  Words are never freely reduced on
construction, so rewriting scripts can refer to letter positions stably;
all simplification happens inside explicit normalization calls.

Equality of words is decided through the left Garside normal form: every
element of B_n factors uniquely as ``Delta^k A_1 ... A_m`` where Delta is
the positive half twist, each A_j is a permutation braid (a positive braid
in which any two strands cross at most once, identified with its underlying
permutation), each adjacent pair (A_j, A_{j+1}) is left-weighted (every
generator starting A_{j+1} also finishes A_j), and no A_j is the identity
or Delta.  Two words represent the same element iff their normal forms
coincide, which also makes the normal form a canonical dictionary key.

Conventions: words act on strand positions top to bottom with letters read
left to right, and the permutation of a word maps the starting position of
a strand to its ending position.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Sequence


class BraidError(ValueError):
    """Raised for malformed words, bad indices, or unmet preconditions."""


_LETTERS = "xyzw"


@dataclass(frozen=True)
class Generator:
    """A single Artin generator sigma_index^sign with sign = +1 or -1."""

    index: int
    sign: int

    def __post_init__(self):
        if self.index < 1:
            raise BraidError(f"generator index must be >= 1, got {self.index}")
        if self.sign not in (1, -1):
            raise BraidError(f"generator sign must be +1 or -1, got {self.sign}")

    @property
    def letter(self) -> int:
        return self.index * self.sign


@dataclass(frozen=True)
class BraidWord:
    """A word in B_n: a strand count plus a sequence of signed letters.

    The empty sequence is the identity braid.  Instances are immutable and
    hashable; all operations return new words.
    """

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise BraidError(f"strand count must be >= 1, got {self.strands}")
        if not isinstance(self.letters, tuple):
            object.__setattr__(self, "letters", tuple(self.letters))
        for g in self.letters:
            if g == 0 or abs(g) >= self.strands:
                raise BraidError(
                    f"letter {g} out of range for {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return braid_text(self)

    def generators(self) -> tuple[Generator, ...]:
        return tuple(Generator(abs(g), 1 if g > 0 else -1) for g in self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if not isinstance(other, BraidWord):
            return NotImplemented
        if other.strands != self.strands:
            raise BraidError("cannot multiply words with different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1, ..., n}, stored as the tuple of images of 1..n."""

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise BraidError(f"not a permutation of 1..{n}: {self.images}")

    def __call__(self, p: int) -> int:
        return self.images[p - 1]

    def cycles(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            p = self(start)
            while p != start:
                cyc.append(p)
                seen.add(p)
                p = self(p)
            out.append(tuple(cyc))
        return out

    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.images))


def identity(strands: int) -> BraidWord:
    return BraidWord(strands)


def word(strands: int, letters: Iterable[int]) -> BraidWord:
    return BraidWord(strands, tuple(letters))


# ---------------------------------------------------------------------------
# Parsing and printing
# ---------------------------------------------------------------------------

def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse braid text into a word in B_strands.

    Grammar: ``word := term*``, ``term := letter ('^' int)?``; whitespace is
    ignored.  Letters are x, y, z, w for sigma_1..sigma_4 with capitals for
    inverses, or the numeric forms ``s<k>`` / ``S<k>`` for any index.
    Negative powers invert the letter, so ``x^-3`` equals ``X^3``.
    """
    letters: list[int] = []
    i = 0
    text = text.strip()
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "sS":
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise BraidError(f"numeric generator needs digits at column {i}: {text!r}")
            index = int(text[i + 1:j])
            sign = 1 if ch == "s" else -1
            i = j
        elif ch.lower() in _LETTERS:
            index = _LETTERS.index(ch.lower()) + 1
            sign = 1 if ch.islower() else -1
            i += 1
        else:
            raise BraidError(f"unknown letter {ch!r} at column {i} in {text!r}")
        power = 1
        if i < len(text) and text[i] == "^":
            j = i + 1
            if j < len(text) and text[j] == "-":
                j += 1
            k = j
            while k < len(text) and text[k].isdigit():
                k += 1
            if k == j:
                raise BraidError(f"malformed power at column {i} in {text!r}")
            power = int(text[i + 1:k])
            i = k
        if index < 1 or index >= strands:
            raise BraidError(
                f"letter index {index} needs strands >= {index + 1}, have {strands}"
            )
        if power < 0:
            sign, power = -sign, -power
        letters.extend([sign * index] * power)
    return BraidWord(strands, tuple(letters))


def _letter_name(index: int, positive: bool) -> str:
    if index <= 4:
        name = _LETTERS[index - 1]
        return name if positive else name.upper()
    return f"s{index}" if positive else f"S{index}"


def braid_text(w: BraidWord) -> str:
    """Print a word in letter form with positive powers folded.

    Round-trips through :func:`parse_braid`; indices above 4 fall back to
    the numeric ``s<k>`` form.
    """
    out: list[str] = []
    run_letter = 0
    run_len = 0

    def flush():
        if run_len == 0:
            return
        name = _letter_name(abs(run_letter), run_letter > 0)
        out.append(name if run_len == 1 else f"{name}^{run_len}")

    for g in w.letters:
        if g == run_letter:
            run_len += 1
        else:
            flush()
            run_letter, run_len = g, 1
    flush()
    return "".join(out)


# ---------------------------------------------------------------------------
# Elementary operations
# ---------------------------------------------------------------------------

def exponent_sum(w: BraidWord) -> int:
    """Sum of letter signs; the writhe of the closure diagram."""
    return sum(1 if g > 0 else -1 for g in w.letters)


def inverse(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple(-g for g in reversed(w.letters)))


def underlying_permutation(w: BraidWord) -> Permutation:
    """The permutation sending each strand's start position to its end."""
    n = w.strands
    at_pos = list(range(n))  # at_pos[q] = strand currently at position q
    for g in w.letters:
        i = abs(g)
        at_pos[i - 1], at_pos[i] = at_pos[i], at_pos[i - 1]
    images = [0] * n
    for q, s in enumerate(at_pos):
        images[s] = q + 1
    return Permutation(tuple(images))


def closure_components(w: BraidWord) -> int:
    """Number of components of the closure: cycles of the permutation."""
    return len(underlying_permutation(w).cycles())


def self_linking(w: BraidWord) -> int:
    """Self-linking number of the transverse closure: exponent sum minus strands.

    Only defined when the closure is a knot.
    """
    if closure_components(w) != 1:
        raise BraidError("self-linking requires the closure to be a knot")
    return exponent_sum(w) - w.strands


def conjugate(w: BraidWord, c: BraidWord) -> BraidWord:
    """Return c * w * c^-1."""
    if w.strands != c.strands:
        raise BraidError("conjugation requires equal strand counts")
    return BraidWord(w.strands, c.letters + w.letters + inverse(c).letters)


def cyclic_permute(w: BraidWord, k: int) -> BraidWord:
    """Move the first k letters to the end; conjugation by that prefix's inverse."""
    if not w.letters:
        return w
    k %= len(w.letters)
    return BraidWord(w.strands, w.letters[k:] + w.letters[:k])


def markov_stabilize(w: BraidWord, sign: int) -> BraidWord:
    """Send B_n to B_{n+1} by appending sigma_n^sign.

    A positive stabilization preserves the transverse closure; a negative
    one is the transverse stabilization and lowers self-linking by 2.
    """
    if sign not in (1, -1):
        raise BraidError("stabilization sign must be +1 or -1")
    n = w.strands
    return BraidWord(n + 1, w.letters + (sign * n,))


def markov_destabilize(w: BraidWord) -> BraidWord:
    """Remove a strand when sigma_{n-1} occurs exactly once, positively.

    The occurrence is rotated to the end (a conjugation, invisible to the
    closure) and dropped.
    """
    n = w.strands
    if n < 2:
        raise BraidError("cannot destabilize a 1-strand braid")
    top = n - 1
    hits = [j for j, g in enumerate(w.letters) if abs(g) == top]
    if len(hits) != 1:
        raise BraidError(
            f"destabilization needs exactly one sigma_{top} letter, found {len(hits)}"
        )
    j = hits[0]
    if w.letters[j] < 0:
        raise BraidError("destabilization needs the last-strand letter to be positive")
    rotated = w.letters[j + 1:] + w.letters[:j]
    return BraidWord(n - 1, rotated)


def half_twist(n: int) -> BraidWord:
    """The Garside half twist Delta_n = (s1..s_{n-1})(s1..s_{n-2})...(s1)."""
    if n < 1:
        raise BraidError("strand count must be >= 1")
    letters: list[int] = []
    for top in range(n - 1, 0, -1):
        letters.extend(range(1, top + 1))
    return BraidWord(n, tuple(letters))


def full_twist(n: int) -> BraidWord:
    """The full twist Delta_n^2 = (s1 ... s_{n-1})^n, the generator of the center."""
    if n < 1:
        raise BraidError("strand count must be >= 1")
    return BraidWord(n, tuple(range(1, n)) * n)


def delta_square_script(n: int, i: int) -> list[tuple[int, int]]:
    """Square insertions growing sigma_i^2 into a word equal to the full twist.

    Returns a list of (position, index) pairs; each pair inserts the square
    of sigma_index at the given position of the current word.  Applied in
    order to the two-letter word sigma_i^2 via
    :func:`apply_square_insertions`, the final word equals ``full_twist(n)``.

    The construction follows the recursion
    ``Delta_{k+1}^2 = Delta_k^2 * (s_k ... s_2 s_1^2 s_2 ... s_k)``:
    the starting square is nested out to the bracketed factor it sits in,
    the earlier factors are built up in front, and the later ones appended.
    """
    if n < 2:
        raise BraidError("full twist scripts need n >= 2")
    if not (1 <= i <= n - 1):
        raise BraidError(f"generator index {i} out of range for B_{n}")
    script: list[tuple[int, int]] = []
    length = 2

    # Nest sigma_i^2 out to F_i = s_i ... s_2 s_1^2 s_2 ... s_i.
    for j in range(i - 1, 0, -1):
        script.append((i - j, j))
        length += 2

    # Build s_1^2, F_2, ..., F_{i-1} in front, left to right.
    off = 0
    for blk in range(1, i):
        if blk == 1:
            script.append((0, 1))
        else:
            for j in range(blk, 0, -1):
                script.append((off + (blk - j), j))
        off += 2 * blk
        length += 2 * blk

    # Append F_{i+1}, ..., F_{n-1}.
    for blk in range(i + 1, n):
        base = length
        for j in range(blk, 0, -1):
            script.append((base + (blk - j), j))
        length += 2 * blk
    return script


def apply_square_insertions(w: BraidWord, script: Sequence[tuple[int, int]]) -> BraidWord:
    letters = list(w.letters)
    for pos, j in script:
        if not (0 <= pos <= len(letters)):
            raise BraidError(f"insertion position {pos} out of range")
        letters[pos:pos] = [j, j]
    return BraidWord(w.strands, tuple(letters))


# ---------------------------------------------------------------------------
# Garside normal form
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NormalForm:
    """Left Garside normal form Delta^power A_1 ... A_m.

    Factors are permutation braids stored as 0-based image tuples.  Normal
    forms are canonical: words are equal in B_n iff their normal forms are
    identical, so instances double as dictionary keys for braid elements.
    """

    strands: int
    power: int
    factors: tuple[tuple[int, ...], ...]

    def canonical_length(self) -> int:
        return len(self.factors)


def _descents(p: tuple[int, ...]) -> set[int]:
    # Generator indices i with p[i-1] > p[i]: the simple starting letters.
    return {i for i in range(1, len(p)) if p[i - 1] > p[i]}


def _invert_perm(p: tuple[int, ...]) -> tuple[int, ...]:
    q = [0] * len(p)
    for a, b in enumerate(p):
        q[b] = a
    return tuple(q)


def _mul_sigma_right(p: tuple[int, ...], i: int) -> tuple[int, ...]:
    # A * sigma_i: swap the values i-1 and i in the image tuple.
    q = list(p)
    a, b = q.index(i - 1), q.index(i)
    q[a], q[b] = q[b], q[a]
    return tuple(q)


def _strip_sigma_left(p: tuple[int, ...], i: int) -> tuple[int, ...]:
    # sigma_i^-1 * B: swap the entries at positions i-1 and i.
    q = list(p)
    q[i - 1], q[i] = q[i], q[i - 1]
    return tuple(q)


def _flip(p: tuple[int, ...]) -> tuple[int, ...]:
    # Conjugation by Delta: w0 o p o w0.
    n = len(p)
    return tuple(n - 1 - p[n - 1 - q] for q in range(n))


def _fix_pair(a: tuple[int, ...], b: tuple[int, ...]):
    """Left-weight the pair (a, b) by sliding starting letters of b into a."""
    while True:
        move = _descents(b) - _descents(_invert_perm(a))
        if not move:
            return a, b
        i = min(move)
        a = _mul_sigma_right(a, i)
        b = _strip_sigma_left(b, i)


@functools.lru_cache(maxsize=200_000)
def _normal_form(strands: int, letters: tuple[int, ...]) -> NormalForm:
    n = strands
    if n == 1:
        return NormalForm(1, 0, ())
    idp = tuple(range(n))
    w0 = tuple(range(n - 1, -1, -1))
    power = 0
    fac: list[tuple[int, ...]] = []

    def append_simple(s: tuple[int, ...]):
        while fac and fac[-1] == idp:
            fac.pop()
        if s == idp:
            return
        fac.append(s)
        j = len(fac) - 2
        while j >= 0:
            a2, b2 = _fix_pair(fac[j], fac[j + 1])
            if a2 == fac[j]:
                break
            fac[j], fac[j + 1] = a2, b2
            j -= 1

    for g in letters:
        i = abs(g)
        if g > 0:
            s = _strip_sigma_left(idp, i)  # the transposition tau_i
            append_simple(s)
        else:
            # sigma_i^-1 = Delta^-1 * C with C the right complement of sigma_i.
            power -= 1
            for j in range(len(fac)):
                fac[j] = _flip(fac[j])
            c = _mul_sigma_right(w0, i)
            append_simple(c)

    # Final sweeps: drop identities, absorb mid-list Deltas to the front.
    changed = True
    while changed:
        changed = False
        kept = [a for a in fac if a != idp]
        if len(kept) != len(fac):
            fac = kept
            changed = True
        for j in range(len(fac) - 1):
            a2, b2 = _fix_pair(fac[j], fac[j + 1])
            if a2 != fac[j]:
                fac[j], fac[j + 1] = a2, b2
                changed = True
    while fac and fac[0] == w0:
        power += 1
        fac.pop(0)
    while fac and fac[-1] == idp:
        fac.pop()
    return NormalForm(n, power, tuple(fac))


def normal_form(w: BraidWord) -> NormalForm:
    """Canonical left Garside normal form of the word."""
    return _normal_form(w.strands, w.letters)


def equal(w1: BraidWord, w2: BraidWord) -> bool:
    """Decide whether two words represent the same element of B_n.

    Sound and complete: reduces to identity of Garside normal forms.
    """
    if w1.strands != w2.strands:
        raise BraidError("cannot compare words with different strand counts")
    return normal_form(w1) == normal_form(w2)


def is_trivial(w: BraidWord) -> bool:
    nf = normal_form(w)
    return nf.power == 0 and not nf.factors


def free_reduce(w: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs; a word-level cleanup, not a normal form."""
    out: list[int] = []
    for g in w.letters:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return BraidWord(w.strands, tuple(out))
