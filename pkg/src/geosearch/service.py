"""Engine assembly and configuration.

The config file is flat "key = value" text; relative paths resolve against
the config file's directory.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from . import catalog as catalog_mod
from . import embeddings as emb_mod
from .errors import FormatError
from .expansion import PlatialExpansion, ThematicExpansion, expand_place, expand_term
from .gazetteer import Gazetteer, load_gazetteer
from .index import FieldWeights, InvertedIndex, baseline_search, build_index
from .query import ParsedQuery, parse_query
from .scoring import Lambdas, ScoreBreakdown, ScoringContext, semantic_search
from .text import AnalyzerConfig, load_lemma_exceptions, load_stopwords

_FLOAT_KEYS = {
    "weight_title", "weight_snippet", "weight_description", "weight_item_type",
    "lambda_platial", "lambda_spatial", "lambda_concept", "lambda_doc",
    "self_mass", "min_cos", "bandwidth_scale", "default_radius_km",
}
_INT_KEYS = {"k_subdiv", "k_neighbors", "candidate_pool", "port"}


@dataclass
class EngineConfig:
    catalog_path: Path
    gazetteer_path: Path
    embeddings_path: Path
    stopwords_path: Optional[Path] = None
    lemma_exceptions_path: Optional[Path] = None
    weight_title: float = 0.4
    weight_snippet: float = 0.25
    weight_description: float = 0.25
    weight_item_type: float = 0.1
    lambda_platial: float = 0.25
    lambda_spatial: float = 0.25
    lambda_concept: float = 0.25
    lambda_doc: float = 0.25
    k_subdiv: int = 10
    self_mass: float = 0.5
    k_neighbors: int = 5
    min_cos: float = 0.4
    bandwidth_scale: float = 1.0
    default_radius_km: float = 10.0
    candidate_pool: int = 200
    host: str = "127.0.0.1"
    port: int = 8080

    def field_weights(self) -> FieldWeights:
        return FieldWeights(
            title=self.weight_title,
            snippet=self.weight_snippet,
            description=self.weight_description,
            item_type=self.weight_item_type,
        )

    def lambdas(self) -> Lambdas:
        return Lambdas(
            platial=self.lambda_platial,
            spatial=self.lambda_spatial,
            concept=self.lambda_concept,
            doc=self.lambda_doc,
        )


def load_config(path: str | Path) -> EngineConfig:
    path = Path(path)
    base = path.parent
    values: dict[str, object] = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise FormatError(f"expected 'key = value', got {line!r}", line_no)
            key, value = key.strip(), value.strip()
            if key.endswith("_path"):
                values[key] = (base / value).resolve()
            elif key in _FLOAT_KEYS:
                values[key] = float(value)
            elif key in _INT_KEYS:
                values[key] = int(value)
            elif key == "host":
                values[key] = value
            else:
                raise FormatError(f"unknown config key {key!r}", line_no)
    for required in ("catalog_path", "gazetteer_path", "embeddings_path"):
        if required not in values:
            raise FormatError(f"missing required config key {required!r}")
        if not Path(values[required]).exists():  # type: ignore[arg-type]
            raise FileNotFoundError(f"{required} does not exist: {values[required]}")
    return EngineConfig(**values)  # type: ignore[arg-type]


@dataclass
class Engine:
    """Immutable bundle of everything a search needs."""

    config: EngineConfig
    analyzer: AnalyzerConfig
    catalog: catalog_mod.Catalog
    index: InvertedIndex
    gazetteer: Gazetteer
    table: emb_mod.EmbeddingTable
    ctx: ScoringContext
    lambdas: Lambdas = field(default_factory=Lambdas)

    def parse(self, q: str) -> ParsedQuery:
        return parse_query(q, self.gazetteer, self.analyzer)

    def expansions(
        self, pq: ParsedQuery
    ) -> tuple[dict[str, PlatialExpansion], dict[str, ThematicExpansion]]:
        platial = {
            place.place_id: expand_place(
                place, self.gazetteer, self.config.k_subdiv, self.config.self_mass
            )
            for place, _ in pq.places
        }
        thematic = {
            token.surface: expand_term(
                token, self.table, self.config.k_neighbors, self.config.min_cos
            )
            for token, _ in pq.thematic_terms
        }
        return platial, thematic

    def semantic_search(
        self, q: str, k: int, explain: bool = False
    ) -> tuple[ParsedQuery, list[ScoreBreakdown]]:
        pq = self.parse(q)
        platial, thematic = self.expansions(pq)
        results = semantic_search(
            self.ctx, pq, platial, thematic, self.lambdas, k, explain=explain
        )
        return pq, results

    def baseline_search(self, q: str, k: int) -> list[tuple[str, float]]:
        return baseline_search(
            self.index, self.catalog, q, k, self.ctx.field_weights
        )


def assemble_engine(config: EngineConfig) -> Engine:
    """Build the full immutable engine from config paths."""
    stopwords = (
        load_stopwords(config.stopwords_path)
        if config.stopwords_path
        else AnalyzerConfig().stopwords
    )
    lemma_exceptions = (
        load_lemma_exceptions(config.lemma_exceptions_path)
        if config.lemma_exceptions_path
        else {}
    )
    analyzer = AnalyzerConfig(stopwords=stopwords, lemma_exceptions=lemma_exceptions)
    catalog = catalog_mod.load_catalog(config.catalog_path)
    index = build_index(catalog, analyzer)
    gazetteer = load_gazetteer(config.gazetteer_path)
    table = emb_mod.load_embeddings(config.embeddings_path)
    doc_embeddings = [
        emb_mod.doc_embedding(table, index, ordinal, item.id)
        for ordinal, item in enumerate(catalog)
    ]
    ctx = ScoringContext(
        catalog=catalog,
        index=index,
        table=table,
        doc_embeddings=doc_embeddings,
        field_weights=config.field_weights(),
        bandwidth_scale=config.bandwidth_scale,
        default_radius_km=config.default_radius_km,
        candidate_pool=config.candidate_pool,
    )
    return Engine(
        config=config,
        analyzer=analyzer,
        catalog=catalog,
        index=index,
        gazetteer=gazetteer,
        table=table,
        ctx=ctx,
        lambdas=config.lambdas(),
    )
