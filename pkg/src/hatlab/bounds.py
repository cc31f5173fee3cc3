"""Closed-form calculators and lower bounds for projective hat genus/degree.

For a transverse knot with self-linking number ``slk``, a degree-d
projective hat has genus exactly

    g_hat(d) = (d^2 - 3d + 2)/2 - (slk + 1)/2,

equivalently ``slk = (d^2 - 3d + 1) - 2 g_hat``, so genus and degree
determine each other.  Everything here is exact integer arithmetic;
quadratic solves go through discriminant tests, never floats.

Upper bounds come from recorded witness constructions (external curves and
crossing-change upgrades of them); those are declarative data with
provenance strings, loaded from ``data/witnesses.json`` and checked against
the degree/genus relation on load.  The bounds code never hard-codes a
witness.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from math import gcd
from typing import Optional


class BoundsError(ValueError):
    pass


def slice_genus_qp(slk: int) -> int:
    """Slice genus of a quasipositive closure from its self-linking number."""
    if slk % 2 == 0 or slk < -1:
        raise BoundsError(f"self-linking {slk} is not odd and >= -1")
    return (slk + 1) // 2


def hat_genus_at_degree(slk: int, d: int) -> int:
    """The genus of a degree-d projective hat for a knot with given slk."""
    if d < 1:
        raise BoundsError("degree must be >= 1")
    if slk % 2 == 0:
        raise BoundsError("self-linking numbers of knots are odd")
    g2 = (d * d - 3 * d + 2) - (slk + 1)
    if g2 < 0:
        raise BoundsError(f"degree {d} is below the minimum for slk {slk}")
    return g2 // 2


def slk_from_hat(d: int, genus: int) -> int:
    """Inverse relation: the self-linking number a degree-d genus-g hat forces."""
    return (d * d - 3 * d + 1) - 2 * genus


def min_hat_degree(slk: int) -> int:
    """Smallest degree admitting a non-negative hat genus for this slk."""
    d = 1
    while (d * d - 3 * d + 2) - (slk + 1) < 0:
        d += 1
    return d


def triangular_lb(g_s: int) -> tuple[int, int, int]:
    """(m, d, genus_lb): least m = (d-2)(d-1)/2 >= g_s and the bound m - g_s.

    For a quasipositive knot of slice genus g_s, every projective hat has
    degree >= d and genus >= m - g_s.
    """
    if g_s < 0:
        raise BoundsError("slice genus must be >= 0")
    d = 1
    while (d - 2) * (d - 1) // 2 < g_s:
        d += 1
    m = (d - 2) * (d - 1) // 2
    return m, d, m - g_s


def negbraid_hat_genus(slk: int) -> int:
    """Hat genus -(slk+1)/2 (at degree 1) for knots that unknot through
    positive crossing changes, e.g. closures of negative braids."""
    if slk > -1 or slk % 2 == 0:
        raise BoundsError("requires an odd self-linking number <= -1")
    return -(slk + 1) // 2


def negative_torus_max_slk(p: int, q: int) -> int:
    """Maximal self-linking number -pq + q - p of T(p,-q), for 2 <= p < q."""
    if not (2 <= p < q):
        raise BoundsError("need 2 <= p < q")
    return -p * q + q - p


def twist_knot_max_slk(n: int) -> int:
    """Maximal self-linking number of the n-twist knot (n != 0, -1, -2)."""
    if n in (0, -1, -2):
        raise BoundsError("not a twist knot for n in {0, -1, -2}")
    if n < 0:
        if n % 2:
            return -3
        raise BoundsError("maximal slk representatives are not unique for "
                          "negative even twists")
    return -(n + 4) if n % 2 else -(n + 1)


def twist_knot_hat_genus(n: int) -> int:
    return negbraid_hat_genus(twist_knot_max_slk(n))


def semigroup_lb(p: int, q: int) -> int:
    """Third-smallest element of the numerical semigroup <p, q>.

    The semigroup starts 0, p, min(2p, q), so this is min(2p, q); it lower
    bounds the hat degree of the maximal-slk torus knot T(p,q).
    """
    if gcd(p, q) != 1:
        raise BoundsError("p and q must be coprime")
    if not (2 <= p < q):
        raise BoundsError("need 2 <= p < q")
    return min(2 * p, q)


def semigroup_elements(p: int, q: int, up_to: int) -> list[int]:
    """Brute-force enumeration of <p, q> up to a bound (the oracle route)."""
    out = set()
    for i in range(0, up_to // p + 1):
        for j in range(0, (up_to - i * p) // q + 1):
            out.add(i * p + j * q)
    return sorted(out)


def milnor_genus(p: int, q: int) -> int:
    """Genus (p-1)(q-1)/2 of the Milnor fiber of the T(p,q) singularity."""
    if gcd(p, q) != 1:
        raise BoundsError("p and q must be coprime")
    return (p - 1) * (q - 1) // 2


def plane_curve_genus(d: int) -> int:
    """Genus (d-1)(d-2)/2 of a smooth degree-d plane curve."""
    if d < 1:
        raise BoundsError("degree must be >= 1")
    return (d - 1) * (d - 2) // 2


def singular_genus_budget(d: int, sing_genera: list[int]) -> int:
    """Smooth genus left for a degree-d curve whose cusps absorb the given genera."""
    g = plane_curve_genus(d) - sum(sing_genera)
    if g < 0:
        raise BoundsError(
            f"cusp genera {sum(sing_genera)} exceed the degree-{d} budget "
            f"{plane_curve_genus(d)}"
        )
    return g


# ---------------------------------------------------------------------------
# Witness database and the T(2,2k+1) table
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Witness:
    degree: int
    genus: int
    source: str


@dataclass(frozen=True)
class WitnessDB:
    t2_witnesses: dict[int, Witness]            # k -> best recorded hat
    t2_lower_upgrades: dict[int, tuple[int, str]]  # k -> (bound, source)
    cusp_curves: list[dict]                     # recorded singular curves
    hirzebruch_hats: list[dict]                 # stored facts, never derived
    cover_targets: list[dict]                   # K3 presentations vs targets
    curve_exclusions: list[dict]                # classes excluded by recorded
                                                # filling obstructions
    open_flags: list[str]


def load_witnesses() -> WitnessDB:
    payload = json.loads(
        resources.files("hatlab").joinpath("data", "witnesses.json").read_text()
    )
    t2 = {}
    for row in payload["t2_witnesses"]:
        k = row["k"]
        w = Witness(row["degree"], row["genus"], row["source"])
        slk = 2 * k - 1
        if hat_genus_at_degree(slk, w.degree) != w.genus:
            raise BoundsError(
                f"t2 witness for k={k} violates the degree/genus relation"
            )
        t2[k] = w
    ups = {
        row["k"]: (row["bound"], row["source"])
        for row in payload["t2_lower_bound_upgrades"]
    }
    return WitnessDB(
        t2_witnesses=t2,
        t2_lower_upgrades=ups,
        cusp_curves=payload.get("cusp_curves", []),
        hirzebruch_hats=payload.get("hirzebruch_hats", []),
        cover_targets=payload.get("cover_targets", []),
        curve_exclusions=payload.get("curve_class_exclusions", []),
        open_flags=payload.get("open_flags", []),
    )


def t2_lower_bound(k: int, db: Optional[WitnessDB] = None) -> int:
    """Lower bound for the hat genus of the maximal-slk T(2,2k+1).

    Writes k = d(d-1)/2 + l with 1 <= l <= d and bounds by d - l; recorded
    obstruction upgrades (stored with provenance) may raise it.
    """
    if k < 1:
        raise BoundsError("need k >= 1")
    d = 1
    while d * (d + 1) // 2 < k:
        d += 1
    l = k - d * (d - 1) // 2
    bound = d - l
    db = db if db is not None else load_witnesses()
    if k in db.t2_lower_upgrades:
        bound = max(bound, db.t2_lower_upgrades[k][0])
    return bound


@dataclass(frozen=True)
class T2Row:
    k: int
    lower_bound: int
    witness_genus: Optional[int]
    witness: Optional[Witness]

    @property
    def value(self) -> Optional[int]:
        """The hat genus when the bound meets a witness, else None."""
        if self.witness_genus is not None and self.witness_genus == self.lower_bound:
            return self.lower_bound
        return None


def t2_table(k_max: int) -> list[T2Row]:
    if k_max < 1:
        raise BoundsError("need k_max >= 1")
    db = load_witnesses()
    rows = []
    for k in range(1, k_max + 1):
        lb = t2_lower_bound(k, db)
        w = db.t2_witnesses.get(k)
        if w is not None and w.genus < lb:
            raise BoundsError(f"k={k}: witness genus {w.genus} below bound {lb}")
        rows.append(T2Row(k, lb, w.genus if w else None, w))
    return rows


@dataclass(frozen=True)
class HatBoundReport:
    slk: int
    slice_genus: Optional[int]
    degree_lb: int
    genus_lb: int
    genus_by_degree: dict[int, int] = field(default_factory=dict)
    witnesses: list[tuple[int, int, str]] = field(default_factory=list)


def bounds_report(slk: int, slice_genus: Optional[int] = None,
                  degrees: int = 6) -> HatBoundReport:
    """Per-knot hat bounds from slk (and slice genus when quasipositive)."""
    if slk % 2 == 0:
        raise BoundsError("self-linking numbers of knots are odd")
    if slice_genus is None and slk >= -1:
        slice_genus = slice_genus_qp(slk)
    d0 = min_hat_degree(slk)
    if slice_genus is not None:
        m, d_tri, g_lb = triangular_lb(slice_genus)
        d0 = max(d0, d_tri)
        genus_lb = g_lb
    else:
        genus_lb = max(0, negbraid_hat_genus(slk)) if slk <= -1 else 0
    table = {d: hat_genus_at_degree(slk, d) for d in range(d0, d0 + degrees)}
    for d, g in table.items():
        if slk_from_hat(d, g) != slk:
            raise BoundsError("internal error: degree/genus relation broken")
    return HatBoundReport(slk, slice_genus, d0, genus_lb, table)
