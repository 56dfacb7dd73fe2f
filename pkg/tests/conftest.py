from __future__ import annotations

import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from geosearch.catalog import BoundingBox, Catalog, CatalogItem, GeoPoint
from geosearch.service import assemble_engine, load_config
from geosearch.text import AnalyzerConfig

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

WORDS = [
    "traffic", "fire", "flood", "map", "water", "census", "school",
    "road", "park", "crime", "health", "energy", "climate", "storm",
    "transit", "rail", "forest", "river", "housing", "police",
    "chicago", "california", "boston", "houston", "miami",
]


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def engine():
    return assemble_engine(load_config(FIXTURES / "config.txt"))


@pytest.fixture(scope="session")
def analyzer() -> AnalyzerConfig:
    return AnalyzerConfig()


def random_item(rng: random.Random, item_id: str) -> CatalogItem:
    def text(lo: int, hi: int) -> str:
        return " ".join(rng.choice(WORDS) for _ in range(rng.randint(lo, hi)))

    location = None
    bbox = None
    if rng.random() < 0.8:
        lat = rng.uniform(-60, 60)
        lon = rng.uniform(-170, 170)
        location = GeoPoint(lat, lon)
        if rng.random() < 0.7:
            dlat = rng.uniform(0.1, 3.0)
            dlon = rng.uniform(0.1, 3.0)
            bbox = BoundingBox(lon - dlon, lat - dlat, lon + dlon, lat + dlat)
    return CatalogItem(
        id=item_id,
        title=text(1, 6),
        snippet=text(0, 8),
        description=text(0, 15),
        item_type=rng.choice(["Web Map", "Feature Layer", ""]),
        location=location,
        bbox=bbox,
    )


def random_catalog(rng: random.Random, max_items: int = 30) -> Catalog:
    catalog = Catalog()
    for i in range(rng.randint(1, max_items)):
        catalog.insert(random_item(rng, f"item-{i:03d}"))
    return catalog
