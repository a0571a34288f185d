"""Family, pair and partition files.

JSON family: ``{"n": int, "k": int | null, "sets": [[ids...], ...]}`` with sets
in mask order.  The compact form is a header line ``n=<n> k=<k>`` followed
by one lowercase hex mask per line (``k=none`` when there is no split).
Pairs use ``"first"``/``"second"`` instead of ``"sets"``; partitions are
``{"n": int, "classes": [{"label": str, "sets": [...]}, ...]}``.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .core import (
    FamilyPair,
    InvalidInputError,
    LabeledPartition,
    SetFamily,
    elements_of,
    mask_of,
    normalize_family,
)
from .constructions import UNUSED


class FormatError(InvalidInputError):
    pass


def family_to_json(family: SetFamily, k: int | None = None) -> dict[str, Any]:
    return {"n": family.n, "k": k, "sets": family.as_lists()}


def pair_to_json(pair: FamilyPair, k: int | None = None) -> dict[str, Any]:
    return {"n": pair.n, "k": k, "first": pair.first.as_lists(), "second": pair.second.as_lists()}


def partition_to_json(part: LabeledPartition) -> dict[str, Any]:
    return {
        "n": part.n,
        "classes": [{"label": label, "sets": fam.as_lists()} for label, fam in part.classes],
        "complete": part.complete,
    }


def family_to_hex(family: SetFamily, k: int | None = None) -> str:
    head = f"n={family.n} k={'none' if k is None else k}"
    return "\n".join([head] + [format(m, "x") for m in family.masks]) + "\n"


def _sets(raw: Any, n: int) -> SetFamily:
    if not isinstance(raw, list):
        raise FormatError("'sets' must be a list of element lists")
    masks = []
    for s in raw:
        if not isinstance(s, list) or not all(isinstance(e, int) for e in s):
            raise FormatError(f"bad set entry {s!r}")
        if any(e >= n for e in s):
            raise FormatError(f"set {s} has elements outside [0, {n})")
        masks.append(mask_of(s))
    return normalize_family(masks, n)


def parse_text(text: str) -> tuple[str, Any, int | None]:
    """Parse any supported file; returns ``(kind, value, k)``.

    ``kind`` is ``"family"``, ``"pair"`` or ``"partition"``.
    """
    stripped = text.lstrip()
    if not stripped:
        raise FormatError("empty input")
    if stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from exc
        return _from_doc(doc)
    return "family", *_parse_hex(text)


def _from_doc(doc: dict) -> tuple[str, Any, int | None]:
    n = doc.get("n")
    if not isinstance(n, int) or n < 0:
        raise FormatError("'n' must be a nonnegative integer")
    k = doc.get("k")
    if k is not None and not isinstance(k, int):
        raise FormatError("'k' must be an integer or null")
    if "classes" in doc:
        classes = []
        for entry in doc["classes"]:
            classes.append((str(entry["label"]), _sets(entry["sets"], n)))
        labels = {label for label, _ in classes}
        covered = sum(len(f) for _, f in classes)
        complete = doc.get("complete", covered == 1 << n and UNUSED not in labels)
        return "partition", LabeledPartition(n, tuple(classes), complete=bool(complete)), None
    if "first" in doc or "second" in doc:
        pair = FamilyPair(_sets(doc.get("first", []), n), _sets(doc.get("second", []), n))
        return "pair", pair, k
    if "sets" not in doc:
        raise FormatError("JSON input needs 'sets', 'first'/'second' or 'classes'")
    return "family", _sets(doc["sets"], n), k


def _parse_hex(text: str) -> tuple[SetFamily, int | None]:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    head = dict(part.split("=", 1) for part in lines[0].split() if "=" in part)
    try:
        n = int(head["n"])
        k_raw = head.get("k", "none")
        k = None if k_raw.lower() in ("none", "null", "") else int(k_raw)
        masks = [int(ln, 16) for ln in lines[1:]]
    except (KeyError, ValueError) as exc:
        raise FormatError(f"bad hex family file: {exc}") from exc
    return normalize_family(masks, n), k


def read_file(path: str | Path) -> tuple[str, Any, int | None]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    return parse_text(text)


def dumps(obj: Any, kind: str, k: int | None = None, style: str = "json") -> str:
    if kind == "family" and style == "hex":
        return family_to_hex(obj, k)
    if kind == "family":
        doc = family_to_json(obj, k)
    elif kind == "pair":
        doc = pair_to_json(obj, k)
    elif kind == "partition":
        doc = partition_to_json(obj)
    else:
        raise ValueError(kind)
    return json.dumps(doc) + "\n"


def set_label(mask: int) -> str:
    return "{" + ",".join(str(e) for e in elements_of(mask)) + "}"
