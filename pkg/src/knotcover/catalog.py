"""Knot catalog files: UTF-8, one JSON object per line, '#' starts a comment."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Iterable

from .knotmodel import Genus1, Genus2, KnotRecord

DEFAULT = "default"
_FIELDS = {"name", "genus", "a", "b", "slope", "source"}


class CatalogError(ValueError):
    def __init__(self, message: str, line: int | None = None, origin: str = "<catalog>"):
        self.line = line
        self.origin = origin
        where = f"{origin}:{line}: " if line is not None else f"{origin}: "
        super().__init__(where + message)


def _int_field(obj: dict, key: str) -> int:
    value = obj.get(key)
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"field {key!r} must be an integer, got {value!r}")
    return value


def record_from_dict(obj: dict) -> KnotRecord:
    if not isinstance(obj, dict):
        raise ValueError("record must be a JSON object")
    extra = set(obj) - _FIELDS
    if extra:
        raise ValueError(f"unknown fields {sorted(extra)}")
    name = obj.get("name")
    if not isinstance(name, str) or not name:
        raise ValueError("field 'name' must be a nonempty string")
    genus = obj.get("genus")
    if genus == 1:
        if "a" in obj:
            raise ValueError("genus-1 record must not carry 'a'")
        poly = Genus1(_int_field(obj, "b"))
    elif genus == 2:
        poly = Genus2(_int_field(obj, "a"), _int_field(obj, "b"))
    else:
        raise ValueError(f"field 'genus' must be 1 or 2, got {genus!r}")
    for key in ("slope", "source"):
        if key in obj and not isinstance(obj[key], str):
            raise ValueError(f"field {key!r} must be a string")
    return KnotRecord(name, poly, obj.get("slope"), obj.get("source"))


def record_to_dict(rec: KnotRecord) -> dict:
    out: dict = {"name": rec.name, "genus": rec.poly.genus}
    if isinstance(rec.poly, Genus2):
        out["a"] = rec.poly.a
    out["b"] = rec.poly.b
    if rec.slope is not None:
        out["slope"] = rec.slope
    if rec.source is not None:
        out["source"] = rec.source
    return out


def format_record(rec: KnotRecord) -> str:
    return json.dumps(record_to_dict(rec), ensure_ascii=False)


def parse_catalog(lines: Iterable[str], origin: str = "<catalog>") -> list[KnotRecord]:
    records = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rec = record_from_dict(json.loads(line))
        except (ValueError, json.JSONDecodeError) as exc:
            raise CatalogError(str(exc), lineno, origin) from None
        if rec.name in seen:
            raise CatalogError(
                f"duplicate name {rec.name!r} (first defined on line {seen[rec.name]})",
                lineno,
                origin,
            )
        seen[rec.name] = lineno
        records.append(rec)
    return records


def default_catalog_text() -> str:
    return resources.files("knotcover").joinpath("data/catalog.jsonl").read_text(encoding="utf-8")


def load_catalog(path: str | Path = DEFAULT) -> list[KnotRecord]:
    if str(path) == DEFAULT:
        return parse_catalog(default_catalog_text().splitlines(), "default catalog")
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CatalogError(f"cannot read catalog: {exc.strerror}", origin=str(path)) from None
    return parse_catalog(text.splitlines(), str(path))


def append_record(path: str | Path, rec: KnotRecord) -> None:
    """Validate against the existing file, then append ``rec`` as one line."""
    path = Path(path)
    existing = load_catalog(path) if path.exists() else []
    if any(r.name == rec.name for r in existing):
        raise CatalogError(f"duplicate name {rec.name!r}", origin=str(path))
    prefix = ""
    if path.exists():
        text = path.read_text(encoding="utf-8")
        if text and not text.endswith("\n"):
            prefix = "\n"
    with path.open("a", encoding="utf-8") as fh:
        fh.write(prefix + format_record(rec) + "\n")


def find(records: Iterable[KnotRecord], name: str) -> KnotRecord:
    for rec in records:
        if rec.name == name:
            return rec
    raise KeyError(name)
