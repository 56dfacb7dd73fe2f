"""Semantically-enriched geographic search engine.

Ranks catalog items against free-text queries by combining a Lucene-style
lexical baseline with four semantic components: place-hierarchy matching,
Gaussian distance-decay spatial similarity, embedding-based concept
expansion, and embedding-space document similarity.
"""

from .catalog import BoundingBox, Catalog, CatalogItem, GeoPoint, load_catalog
from .evaluation import dcg_at_k
from .index import FieldWeights, baseline_search, build_index
from .scoring import Lambdas, semantic_search
from .service import Engine, assemble_engine, load_config

__all__ = [
    "BoundingBox",
    "Catalog",
    "CatalogItem",
    "Engine",
    "FieldWeights",
    "GeoPoint",
    "Lambdas",
    "assemble_engine",
    "baseline_search",
    "build_index",
    "dcg_at_k",
    "load_catalog",
    "load_config",
    "semantic_search",
]

__version__ = "0.1.0"
