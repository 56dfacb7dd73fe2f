"""Data model and ingestion for the searchable item collection.

Catalog files are UTF-8 JSON lines, one item per line, with keys:
id, title, snippet, description, type, location ({lat, lon}) and
bbox ([west, south, east, north]). Unknown keys are ignored.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Optional

from .errors import FormatError

TEXT_FIELDS = ("title", "snippet", "description", "item_type")


@dataclass(frozen=True)
class GeoPoint:
    lat: float
    lon: float

    def __post_init__(self):
        if not -90.0 <= self.lat <= 90.0:
            raise ValueError(f"latitude out of range: {self.lat}")
        # normalize longitude to [-180, 180)
        lon = math.fmod(self.lon + 180.0, 360.0)
        if lon < 0:
            lon += 360.0
        object.__setattr__(self, "lon", lon - 180.0)


@dataclass(frozen=True)
class BoundingBox:
    west: float
    south: float
    east: float
    north: float

    def __post_init__(self):
        if self.south > self.north:
            raise ValueError(f"south {self.south} > north {self.north}")

    @property
    def crosses_antimeridian(self) -> bool:
        return self.west > self.east

    def center(self) -> GeoPoint:
        lat = (self.south + self.north) / 2.0
        if self.crosses_antimeridian:
            span = (self.east + 360.0) - self.west
            lon = self.west + span / 2.0
        else:
            lon = (self.west + self.east) / 2.0
        return GeoPoint(lat, lon)


@dataclass(frozen=True)
class CatalogItem:
    id: str
    title: str = ""
    snippet: str = ""
    description: str = ""
    item_type: str = ""
    location: Optional[GeoPoint] = None
    bbox: Optional[BoundingBox] = None

    def __post_init__(self):
        if not self.id:
            raise ValueError("item id must be non-empty")

    def representative_point(self) -> Optional[GeoPoint]:
        """Bbox center when present, else the point location."""
        if self.bbox is not None:
            return self.bbox.center()
        return self.location


def item_field_text(item: CatalogItem, field_name: str) -> str:
    """Raw text of one metadata field; total over the field enum."""
    if field_name not in TEXT_FIELDS:
        raise ValueError(f"unknown field: {field_name}")
    return getattr(item, field_name)


@dataclass
class Catalog:
    items: list[CatalogItem] = field(default_factory=list)
    by_id: dict[str, int] = field(default_factory=dict)
    skipped: int = 0

    def insert(self, item: CatalogItem) -> None:
        if item.id in self.by_id:
            raise ValueError(f"duplicate item id: {item.id}")
        self.by_id[item.id] = len(self.items)
        self.items.append(item)

    def lookup(self, item_id: str) -> Optional[CatalogItem]:
        idx = self.by_id.get(item_id)
        return None if idx is None else self.items[idx]

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[CatalogItem]:
        return iter(self.items)


def _parse_record(record: dict) -> CatalogItem:
    item_id = record.get("id")
    if not item_id or not isinstance(item_id, str):
        raise ValueError("missing or empty 'id'")
    location = None
    loc = record.get("location")
    if isinstance(loc, dict) and "lat" in loc and "lon" in loc:
        location = GeoPoint(float(loc["lat"]), float(loc["lon"]))
    bbox = None
    raw_bbox = record.get("bbox")
    if isinstance(raw_bbox, (list, tuple)) and len(raw_bbox) == 4:
        bbox = BoundingBox(*(float(v) for v in raw_bbox))
    return CatalogItem(
        id=item_id,
        title=str(record.get("title") or ""),
        snippet=str(record.get("snippet") or ""),
        description=str(record.get("description") or ""),
        item_type=str(record.get("type") or ""),
        location=location,
        bbox=bbox,
    )


def load_catalog(path: str | Path, strict: bool = False) -> Catalog:
    """Load a JSON-lines catalog file.

    Lenient mode (default) skips bad lines and counts them in
    ``Catalog.skipped``; strict mode raises FormatError with the line number.
    """
    catalog = Catalog()
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
                if not isinstance(record, dict):
                    raise ValueError("record is not an object")
                catalog.insert(_parse_record(record))
            except (ValueError, TypeError) as exc:
                if strict:
                    raise FormatError(str(exc), line_no) from exc
                catalog.skipped += 1
    return catalog


def save_catalog(catalog: Catalog, path: str | Path) -> None:
    """Write a catalog back out in the same JSON-lines format."""
    with open(path, "w", encoding="utf-8") as fh:
        for item in catalog:
            record: dict = {
                "id": item.id,
                "title": item.title,
                "snippet": item.snippet,
                "description": item.description,
                "type": item.item_type,
            }
            if item.location is not None:
                record["location"] = {"lat": item.location.lat, "lon": item.location.lon}
            if item.bbox is not None:
                b = item.bbox
                record["bbox"] = [b.west, b.south, b.east, b.north]
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")
