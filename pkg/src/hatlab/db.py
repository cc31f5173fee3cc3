"""The built-in knot corpus: quasipositive braid words with their invariants.

Knot names follow the usual tables but are opaque labels here; braid words
are the ground truth for every computation (naming conventions elsewhere may
agree only up to mirroring).  Each record is invariant-checked on load: the
closure must be a knot and the self-linking number of the braid must equal
2 * slice_genus - 1, which is the adjunction identity for quasipositive
braid closures.

The database lives in ``data/knots.json`` and round-trips through
:func:`serialize_db` byte-identically.  Set ``HATLAB_DB`` to point at an
external file with the same layout.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .braid import BraidWord, braid_text, closure_components, parse_braid, self_linking


class DatabaseError(ValueError):
    pass


@dataclass(frozen=True)
class KnotRecord:
    name: str
    braid: BraidWord
    slice_genus: int
    determinant_one: bool
    script_ref: Optional[str] = None   # file name under data/scripts/
    target: Optional[tuple[str, int]] = None  # (torus/singularity label, hat degree)
    note: str = ""

    @property
    def slk(self) -> int:
        return self_linking(self.braid)


def _data_text(name: str) -> str:
    return resources.files("hatlab").joinpath("data", name).read_text()


def _record_from_json(obj: dict) -> KnotRecord:
    braid = parse_braid(obj["braid"], obj["strands"])
    target = None
    if obj.get("target"):
        target = (obj["target"]["label"], obj["target"]["degree"])
    return KnotRecord(
        name=obj["name"],
        braid=braid,
        slice_genus=obj["slice_genus"],
        determinant_one=obj["determinant_one"],
        script_ref=obj.get("script"),
        target=target,
        note=obj.get("note", ""),
    )


def _record_to_json(rec: KnotRecord) -> dict:
    obj = {
        "name": rec.name,
        "strands": rec.braid.strands,
        "braid": braid_text(rec.braid),
        "slice_genus": rec.slice_genus,
        "determinant_one": rec.determinant_one,
        "script": rec.script_ref,
        "target": None,
        "note": rec.note,
    }
    if rec.target is not None:
        obj["target"] = {"label": rec.target[0], "degree": rec.target[1]}
    return obj


def serialize_db(records: list[KnotRecord]) -> str:
    payload = {"knots": [_record_to_json(r) for r in records]}
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def check_record(rec: KnotRecord) -> None:
    if closure_components(rec.braid) != 1:
        raise DatabaseError(f"{rec.name}: braid closure is not a knot")
    if rec.slk != 2 * rec.slice_genus - 1:
        raise DatabaseError(
            f"{rec.name}: slk {rec.slk} != 2*{rec.slice_genus} - 1 "
            "(quasipositive adjunction violated)"
        )


def load_db(path: Optional[str] = None) -> list[KnotRecord]:
    """Load and invariant-check the knot database.

    Resolution order: explicit ``path`` argument, the ``HATLAB_DB``
    environment variable, then the embedded database.  Any record failing
    its invariant aborts the load with the record's name.
    """
    if path is None:
        path = os.environ.get("HATLAB_DB")
    if path is not None:
        with open(path) as fh:
            text = fh.read()
    else:
        text = _data_text("knots.json")
    payload = json.loads(text)
    records = [_record_from_json(obj) for obj in payload["knots"]]
    for rec in records:
        check_record(rec)
    return records


def get_knot(name: str, records: Optional[list[KnotRecord]] = None) -> KnotRecord:
    records = records if records is not None else load_db()
    for rec in records:
        if rec.name == name:
            return rec
    raise DatabaseError(f"no knot named {name!r} in the database")
