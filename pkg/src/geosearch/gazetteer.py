"""Place knowledge: name resolution, partonomy traversal, and the
knowledge-graph enrichment client.

The offline gazetteer file is the primary source; the SPARQL client mirrors
the DBpedia enrichment step and is optional (off by default, network).
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import requests

from .catalog import BoundingBox, GeoPoint
from .errors import (
    CycleDetectedError,
    DanglingReferenceError,
    FormatError,
    InvalidIriError,
)
from .text import tokenize

# scheme ":" non-space remainder, no angle brackets or quotes
_IRI_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.-]*://[^\s<>\"{}|\\^`]+$")


@dataclass
class Place:
    place_id: str
    canonical_name: str
    aliases: set[str] = field(default_factory=set)
    center: Optional[GeoPoint] = None
    bbox: Optional[BoundingBox] = None
    area_km2: Optional[float] = None
    parent: Optional[str] = None
    children: list[str] = field(default_factory=list)
    external_ids: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        self.aliases = {normalize_phrase(a) for a in self.aliases}
        self.aliases.add(normalize_phrase(self.canonical_name))


def normalize_phrase(phrase: str) -> str:
    """Lowercased tokens joined by single spaces; stopwords retained."""
    return " ".join(tokenize(phrase))


@dataclass
class Gazetteer:
    places: dict[str, Place] = field(default_factory=dict)
    name_index: dict[str, list[str]] = field(default_factory=dict)

    def get(self, place_id: str) -> Place:
        return self.places[place_id]

    def __len__(self) -> int:
        return len(self.places)

    def max_phrase_tokens(self) -> int:
        return max((len(p.split()) for p in self.name_index), default=0)


def _area_sort_key(place: Place) -> tuple:
    # absent area sorts last; ties broken by place_id
    return (0, -place.area_km2, place.place_id) if place.area_km2 is not None else (
        1,
        0.0,
        place.place_id,
    )


def resolve(gaz: Gazetteer, phrase: str) -> list[Place]:
    """All places with an alias equal to the normalized phrase, ordered by
    descending area then place_id."""
    ids = gaz.name_index.get(normalize_phrase(phrase), [])
    found = [gaz.places[pid] for pid in ids]
    found.sort(key=_area_sort_key)
    return found


def subdivisions(gaz: Gazetteer, place: Place, k: int) -> list[Place]:
    """Up to k direct children, largest area first."""
    children = [gaz.places[cid] for cid in place.children]
    children.sort(key=_area_sort_key)
    return children[: max(k, 0)]


def ancestors(gaz: Gazetteer, place: Place) -> list[Place]:
    chain = []
    current = place
    while current.parent is not None:
        current = gaz.places[current.parent]
        chain.append(current)
    return chain


def _parse_place(record: dict) -> Place:
    place_id = record.get("place_id")
    name = record.get("name")
    if not place_id or not name:
        raise ValueError("place record needs 'place_id' and 'name'")
    center = None
    if record.get("lat") is not None and record.get("lon") is not None:
        center = GeoPoint(float(record["lat"]), float(record["lon"]))
    bbox = None
    raw_bbox = record.get("bbox")
    if isinstance(raw_bbox, (list, tuple)) and len(raw_bbox) == 4:
        bbox = BoundingBox(*(float(v) for v in raw_bbox))
    external_ids = {}
    if record.get("geonames_id"):
        external_ids["geonames"] = str(record["geonames_id"])
    return Place(
        place_id=place_id,
        canonical_name=name,
        aliases=set(record.get("aliases") or []),
        center=center,
        bbox=bbox,
        area_km2=float(record["area_km2"]) if record.get("area_km2") is not None else None,
        parent=record.get("parent") or None,
        children=list(record.get("children") or []),
        external_ids=external_ids,
    )


def load_gazetteer(path: str | Path) -> Gazetteer:
    """Load a JSON-lines gazetteer and validate the partonomy."""
    gaz = Gazetteer()
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                record = json.loads(line)
                place = _parse_place(record)
            except (ValueError, TypeError) as exc:
                raise FormatError(str(exc), line_no) from exc
            if place.place_id in gaz.places:
                raise FormatError(f"duplicate place_id {place.place_id}", line_no)
            gaz.places[place.place_id] = place

    # referential integrity
    for place in gaz.places.values():
        if place.parent is not None and place.parent not in gaz.places:
            raise DanglingReferenceError(place.parent)
        for child_id in place.children:
            if child_id not in gaz.places:
                raise DanglingReferenceError(child_id)

    # acyclicity of parent chains
    for place in gaz.places.values():
        seen = {place.place_id}
        current = place
        while current.parent is not None:
            if current.parent in seen:
                raise CycleDetectedError(f"parent cycle through {current.parent}")
            seen.add(current.parent)
            current = gaz.places[current.parent]

    # parent/children mutual consistency: fill in whichever side is missing
    for place in gaz.places.values():
        for child_id in place.children:
            child = gaz.places[child_id]
            if child.parent is None:
                child.parent = place.place_id
            elif child.parent != place.place_id:
                raise FormatError(
                    f"{child_id} listed as child of {place.place_id} "
                    f"but has parent {child.parent}"
                )
    for place in gaz.places.values():
        if place.parent is not None:
            parent = gaz.places[place.parent]
            if place.place_id not in parent.children:
                parent.children.append(place.place_id)

    for place in gaz.places.values():
        for alias in place.aliases:
            gaz.name_index.setdefault(alias, []).append(place.place_id)
    for ids in gaz.name_index.values():
        ids.sort()
    return gaz


ENRICHMENT_QUERY_TEMPLATE = """\
PREFIX geo: <http://www.w3.org/2003/01/geo/wgs84_pos#>
PREFIX rdfs: <http://www.w3.org/2000/01/rdf-schema#>
PREFIX owl: <http://www.w3.org/2002/07/owl#>
select ?place ?lat ?long ?label ?area ?geoid {{
OPTIONAL {{
    ?place geo:lat ?lat.
    ?place geo:long ?long.
}}
OPTIONAL {{
    ?place rdfs:label ?label.
    FILTER(lang(?label) = "en")
}}
OPTIONAL {{
    ?place <http://dbpedia.org/ontology/PopulatedPlace/areaTotal> ?area.
}}
OPTIONAL {{
    ?place owl:sameAs ?geoid .
    FILTER(CONTAINS(str(?geoid), 'geonames'))
}}
VALUES ?place {{
    <{iri}>
}}
}}
"""


def build_enrichment_query(place_uri: str) -> str:
    """SPARQL SELECT pulling coordinates, English label, total area and the
    GeoNames sameAs link for one knowledge-graph entity."""
    if not _IRI_RE.match(place_uri):
        raise InvalidIriError(place_uri)
    return ENRICHMENT_QUERY_TEMPLATE.format(iri=place_uri)


@dataclass(frozen=True)
class PlaceEnrichment:
    lat: Optional[float] = None
    lon: Optional[float] = None
    label: Optional[str] = None
    area: Optional[float] = None
    geonames_id: Optional[str] = None


def parse_enrichment_response(body: str | dict) -> PlaceEnrichment:
    """Map the first binding row of a SPARQL JSON results document."""
    try:
        doc = json.loads(body) if isinstance(body, str) else body
        bindings = doc["results"]["bindings"]
    except (ValueError, KeyError, TypeError) as exc:
        raise FormatError(f"not a SPARQL JSON results document: {exc}") from exc
    if not bindings:
        return PlaceEnrichment()
    row = bindings[0]

    def value(var: str) -> Optional[str]:
        cell = row.get(var)
        return cell.get("value") if isinstance(cell, dict) else None

    try:
        lat = float(value("lat")) if value("lat") is not None else None
        lon = float(value("long")) if value("long") is not None else None
        area = float(value("area")) if value("area") is not None else None
    except ValueError as exc:
        raise FormatError(f"non-numeric binding: {exc}") from exc
    return PlaceEnrichment(
        lat=lat, lon=lon, label=value("label"), area=area, geonames_id=value("geoid")
    )


class EnrichmentClient:
    """Synchronous SPARQL-protocol client for the GeoEnrichment step."""

    def __init__(self, endpoint_url: str, timeout: float = 10.0):
        self.endpoint_url = endpoint_url
        self.timeout = timeout

    def enrich(self, place_uri: str) -> PlaceEnrichment:
        query = build_enrichment_query(place_uri)
        response = requests.get(
            self.endpoint_url,
            params={"query": query},
            headers={"Accept": "application/sparql-results+json"},
            timeout=self.timeout,
        )
        response.raise_for_status()
        return parse_enrichment_response(response.text)

    def apply(self, place: Place, place_uri: str) -> Place:
        """Fetch enrichment and fill in any missing fields on the place."""
        enrichment = self.enrich(place_uri)
        if place.center is None and enrichment.lat is not None and enrichment.lon is not None:
            place.center = GeoPoint(enrichment.lat, enrichment.lon)
        if place.area_km2 is None and enrichment.area is not None:
            place.area_km2 = enrichment.area / 1e6  # areaTotal is in m^2
        if enrichment.geonames_id and "geonames" not in place.external_ids:
            place.external_ids["geonames"] = enrichment.geonames_id
        return place
