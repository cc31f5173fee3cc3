"""Euler-characteristic and intersection-form bookkeeping for cyclic
branched covers used in the K3 cap constructions.

The ramification formula for an r-fold cyclic cover branched over a curve B
in a surface S reads chi = r*chi(S) - (r-1)*chi(B).  A cover of the plane
or the quadric is a K3 surface exactly when its canonical class vanishes
and chi = 24; four presentations qualify and are listed in
``K3_PRESENTATIONS``.

Signatures of fillings are inputs here (recorded facts), never computed
from Seifert matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .bounds import plane_curve_genus


class CoverError(ValueError):
    pass


K3_B2 = 22
K3_SIGNATURE = -16


def branched_cover_euler(r: int, chi_base: int, chi_branch: int) -> int:
    """chi of the r-fold cyclic cover: r*chi_base - (r-1)*chi_branch."""
    if r < 1:
        raise CoverError("need r >= 1")
    return r * chi_base - (r - 1) * chi_branch


def bidegree_genus(a: int, b: int) -> int:
    """Genus (a-1)(b-1) of a smooth (a,b) curve on the quadric."""
    if a < 1 or b < 1:
        raise CoverError("bidegree entries must be >= 1")
    return (a - 1) * (b - 1)


Degree = Union[int, tuple[int, int]]


def cy_cover_test(r: int, surface: str, degree: Degree) -> bool:
    """True iff the r-fold cover branched over a smooth curve of the given
    (bi)degree has vanishing canonical class and chi = 24, i.e. is a K3.

    Existence of the cyclic cover needs the (bi)degree divisible by r;
    indivisible input is an error, not a False.
    """
    if r < 2:
        raise CoverError("need r >= 2")
    if surface == "CP2":
        if not isinstance(degree, int):
            raise CoverError("CP2 takes a single degree")
        d = degree
        if d % r:
            raise CoverError(f"no cyclic {r}-fold cover: {r} does not divide {d}")
        canonical_vanishes = d * (r - 1) == 3 * r
        g = plane_curve_genus(d)
        chi = branched_cover_euler(r, 3, 2 - 2 * g)
    elif surface == "P1xP1":
        if isinstance(degree, int):
            raise CoverError("P1xP1 takes a bidegree pair")
        a, b = degree
        if a % r or b % r:
            raise CoverError(f"no cyclic {r}-fold cover: {r} does not divide ({a},{b})")
        canonical_vanishes = (a == b) and a * (r - 1) == 2 * r
        g = bidegree_genus(a, b)
        chi = branched_cover_euler(r, 4, 2 - 2 * g)
    else:
        raise CoverError(f"unknown surface {surface!r}")
    return canonical_vanishes and chi == 24


K3_PRESENTATIONS: tuple[tuple[int, str, Degree], ...] = (
    (2, "CP2", 6),
    (4, "CP2", 4),
    (2, "P1xP1", (4, 4)),
    (3, "P1xP1", (3, 3)),
)


_FORM_TABLE = {
    (12, -8): "E8+2H",
    (10, -8): "E8+H",
    (8, -8): "E8",
    (4, 0): "2H",
    (2, 0): "H",
    (0, 0): "0",
}


def form_label(rank: int, signature: int) -> str:
    """Label of the unimodular form with this rank and signature, when the
    pair appears in the recorded constructions; otherwise 'undetermined'."""
    if abs(signature) > rank or (rank - signature) % 2:
        raise CoverError(f"no unimodular form has rank {rank}, signature {signature}")
    if (rank, signature) in _FORM_TABLE:
        return _FORM_TABLE[(rank, signature)]
    if rank >= 1 and signature == -rank:
        return f"<-1>^{rank}"
    return "undetermined"


@dataclass(frozen=True)
class DoubleCoverBooks:
    b2_filling: int
    b2_cap: int
    sigma_cap: int
    form: str


def double_cover_books(g_s: int, sigma_filling: int) -> DoubleCoverBooks:
    """Second Betti numbers and forms when the closed double cover is a K3.

    The double cover of the 4-ball branched over a genus-g quasipositive
    surface has b2 = 2g; inside the K3 (b2 = 22, signature -16) the cap
    takes up the rest, and for integral homology sphere boundaries both
    pieces carry unimodular forms.
    """
    if g_s < 0:
        raise CoverError("slice genus must be >= 0")
    b2_filling = 2 * g_s
    b2_cap = K3_B2 - b2_filling
    if b2_cap < 0:
        raise CoverError("filling rank exceeds the K3 lattice")
    sigma_cap = K3_SIGNATURE - sigma_filling
    return DoubleCoverBooks(b2_filling, b2_cap, sigma_cap, form_label(b2_cap, sigma_cap))


FILLING_SIGNATURES = {
    # recorded input facts: signatures of the branched double covers of the
    # 4-ball over the named quasipositive surfaces
    "12n_242": -8,      # genus-5 surface; Brieskorn-type filling
    "T(3,7)": -8,       # Milnor fiber of the (3,7) singularity
}


def cover_line(name: str, g_s: int, r: int) -> str:
    """Human bookkeeping line for the r-fold cover of a knot's double branch."""
    if r == 2:
        sigma = FILLING_SIGNATURES.get(name)
        if sigma is None:
            b2 = 2 * g_s
            return (f"{name}\tr=2\tfilling b2={b2}\tcap b2={K3_B2 - b2}\t"
                    "sigma undetermined")
        books = double_cover_books(g_s, sigma)
        return (f"{name}\tr=2\tfilling b2={books.b2_filling} sigma={sigma}\t"
                f"cap b2={books.b2_cap} sigma={books.sigma_cap}\tform {books.form}")
    if r in (3, 4):
        b2 = 2 * g_s * (r - 1)
        return (f"{name}\tr={r}\tfilling b2={b2}\tcap b2={K3_B2 - b2}\t"
                f"spin rational homology ball expected iff b2=0")
    raise CoverError("r must be 2, 3, or 4")
