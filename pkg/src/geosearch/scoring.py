"""Similarity components and their weighted combination.

Platial and concept similarities are weighted phrase-match sums over the
expanded query; spatial similarity is a Gaussian distance-decay kernel
(with an area-overlap scorer kept as the classic alternative); document
similarity is cosine in embedding space. The combined score is a weighted
sum of per-query max-normalized components.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import Mapping, Optional, Sequence

from .catalog import BoundingBox, Catalog, CatalogItem, GeoPoint, TEXT_FIELDS
from .embeddings import DocEmbedding, EmbeddingTable, cosine, query_embedding
from .errors import DegenerateBoxError, NoGeometryError
from .expansion import PlatialExpansion, ThematicExpansion
from .gazetteer import Place
from .geo import bbox_area_km2, bbox_diagonal_km, bbox_intersection, haversine_km
from .index import FieldWeights, InvertedIndex, match_count
from .query import ParsedQuery

COMPONENTS = ("platial", "spatial", "concept", "doc")


@dataclass(frozen=True)
class Lambdas:
    platial: float = 0.25
    spatial: float = 0.25
    concept: float = 0.25
    doc: float = 0.25

    def __post_init__(self):
        values = [self.platial, self.spatial, self.concept, self.doc]
        if any(v < 0 for v in values):
            raise ValueError("lambdas must be non-negative")
        total = sum(values)
        if total <= 0:
            raise ValueError("at least one lambda must be positive")
        object.__setattr__(self, "platial", self.platial / total)
        object.__setattr__(self, "spatial", self.spatial / total)
        object.__setattr__(self, "concept", self.concept / total)
        object.__setattr__(self, "doc", self.doc / total)

    def renormalized(self, active: Sequence[str]) -> dict[str, float]:
        """Redistribute mass over the structurally-active components."""
        mass = sum(getattr(self, name) for name in active)
        if mass <= 0:
            # active components all have zero lambda; split uniformly
            return {name: 1.0 / len(active) for name in active}
        return {name: getattr(self, name) / mass for name in active}


@dataclass(frozen=True)
class GaussianKernel:
    center: GeoPoint
    sigma_km: float

    def __post_init__(self):
        if self.sigma_km <= 0:
            raise ValueError(f"sigma must be positive: {self.sigma_km}")


@dataclass
class ScoreBreakdown:
    item_id: str
    platial: float = 0.0
    spatial: float = 0.0
    concept: float = 0.0
    doc: float = 0.0
    platial_n: float = 0.0
    spatial_n: float = 0.0
    concept_n: float = 0.0
    doc_n: float = 0.0
    lambdas: dict[str, float] = dc_field(default_factory=dict)
    combined: float = 0.0
    matched_terms: dict[str, list[str]] = dc_field(default_factory=dict)
    kernel_distances_km: dict[str, float] = dc_field(default_factory=dict)


def sim_platial(
    pq: ParsedQuery,
    expansions: Mapping[str, PlatialExpansion],
    index: InvertedIndex,
    item: int,
    wf: FieldWeights,
) -> float:
    """Triple sum over places, expansion phrases, and fields of weighted
    phrase-match counts."""
    score = 0.0
    for place, w_geo in pq.places:
        expansion = expansions[place.place_id]
        for term in expansion.terms:
            for field_name in TEXT_FIELDS:
                matches = match_count(index, term.phrase, item, field_name)
                if matches:
                    score += w_geo * term.weight * wf.get(field_name) * matches
    return score


def sim_concept(
    pq: ParsedQuery,
    expansions: Mapping[str, ThematicExpansion],
    index: InvertedIndex,
    item: int,
    wf: FieldWeights,
) -> float:
    """Triple sum over thematic terms, their neighbors, and fields."""
    score = 0.0
    for token, w_thematic in pq.thematic_terms:
        expansion = expansions[token.surface]
        for term in expansion.terms:
            for field_name in TEXT_FIELDS:
                matches = match_count(index, [term.word], item, field_name)
                if matches:
                    score += w_thematic * term.weight * wf.get(field_name) * matches
    return score


def place_kernel(
    place: Place,
    bandwidth_scale: float = 1.0,
    default_radius_km: float = 10.0,
) -> GaussianKernel:
    """Kernel at the place's bbox center with bandwidth half the bbox
    diagonal; falls back to the place center and a default radius."""
    if place.bbox is not None:
        center = place.bbox.center()
        sigma = bandwidth_scale * bbox_diagonal_km(place.bbox) / 2.0
        if sigma <= 0.0:  # degenerate (point) box
            sigma = bandwidth_scale * default_radius_km
        return GaussianKernel(center, sigma)
    if place.center is not None:
        return GaussianKernel(place.center, bandwidth_scale * default_radius_km)
    raise NoGeometryError(f"place {place.place_id} has no bbox or center")


def gauss_score(kernel: GaussianKernel, item: CatalogItem) -> float:
    """exp(-d^2 / (2 sigma^2)) over great-circle distance; 0 when the item
    has no geometry."""
    point = item.representative_point()
    if point is None:
        return 0.0
    d = haversine_km(kernel.center, point)
    return math.exp(-(d * d) / (2.0 * kernel.sigma_km**2))


def sim_spatial(
    pq: ParsedQuery,
    item: CatalogItem,
    bandwidth_scale: float = 1.0,
    default_radius_km: float = 10.0,
) -> float:
    """Place-weighted sum of Gaussian kernel scores; 0 with no places."""
    score = 0.0
    for place, w_geo in pq.places:
        try:
            kernel = place_kernel(place, bandwidth_scale, default_radius_km)
        except NoGeometryError:
            continue
        score += w_geo * gauss_score(kernel, item)
    return score


def sim_spatial_overlap(query_bbox: BoundingBox, item_bbox: BoundingBox) -> float:
    """Classic area-overlap similarity:
    0.5 * (A(q∩d)/A(q) + A(q∩d)/A(d)); 0 when footprints are disjoint."""
    if query_bbox.crosses_antimeridian or item_bbox.crosses_antimeridian:
        raise DegenerateBoxError("antimeridian-crossing boxes unsupported for overlap")
    area_q = bbox_area_km2(query_bbox)
    area_d = bbox_area_km2(item_bbox)
    if area_q <= 0.0 or area_d <= 0.0:
        raise DegenerateBoxError("both boxes must have positive area")
    overlap = bbox_intersection(query_bbox, item_bbox)
    if overlap is None:
        return 0.0
    area_i = bbox_area_km2(overlap)
    return 0.5 * (area_i / area_q + area_i / area_d)


def sim_doc(pq: ParsedQuery, table: EmbeddingTable, doc: DocEmbedding) -> float:
    """Cosine of the summed query embedding and the document embedding."""
    return cosine(query_embedding(table, pq.thematic_tokens), doc.vector)


@dataclass
class ScoringContext:
    """Everything semantic_search needs, prebuilt and immutable."""

    catalog: Catalog
    index: InvertedIndex
    table: EmbeddingTable
    doc_embeddings: list[DocEmbedding]
    field_weights: FieldWeights
    bandwidth_scale: float = 1.0
    default_radius_km: float = 10.0
    candidate_pool: int = 200


def _lexical_candidates(
    ctx: ScoringContext,
    platial_exp: Mapping[str, PlatialExpansion],
    thematic_exp: Mapping[str, ThematicExpansion],
) -> set[int]:
    candidates: set[int] = set()
    phrases: list[str | list[str]] = []
    for expansion in platial_exp.values():
        phrases.extend(term.phrase for term in expansion.terms)
    for expansion in thematic_exp.values():
        phrases.extend([term.word] for term in expansion.terms)
    for phrase in phrases:
        for ordinal in range(len(ctx.catalog)):
            for field_name in TEXT_FIELDS:
                if match_count(ctx.index, phrase, ordinal, field_name):
                    candidates.add(ordinal)
                    break
    return candidates


def _spatial_candidates(ctx: ScoringContext, pq: ParsedQuery) -> set[int]:
    candidates: set[int] = set()
    for place, _ in pq.places:
        try:
            kernel = place_kernel(place, ctx.bandwidth_scale, ctx.default_radius_km)
        except NoGeometryError:
            continue
        scored = [
            (gauss_score(kernel, item), ordinal)
            for ordinal, item in enumerate(ctx.catalog)
            if item.representative_point() is not None
        ]
        scored.sort(key=lambda pair: (-pair[0], pair[1]))
        candidates.update(ordinal for _, ordinal in scored[: ctx.candidate_pool])
    return candidates


def _doc_candidates(ctx: ScoringContext, pq: ParsedQuery) -> set[int]:
    qvec = query_embedding(ctx.table, pq.thematic_tokens)
    if not qvec.any():
        return set()
    scored = [
        (cosine(qvec, doc.vector), ordinal)
        for ordinal, doc in enumerate(ctx.doc_embeddings)
    ]
    scored.sort(key=lambda pair: (-pair[0], pair[1]))
    return {ordinal for sim, ordinal in scored[: ctx.candidate_pool] if sim > 0.0}


def _matched_terms(
    ctx: ScoringContext,
    ordinal: int,
    platial_exp: Mapping[str, PlatialExpansion],
    thematic_exp: Mapping[str, ThematicExpansion],
) -> dict[str, list[str]]:
    matched: dict[str, list[str]] = {}
    terms: list[tuple[str, str | list[str]]] = []
    for expansion in platial_exp.values():
        terms.extend((term.phrase, term.phrase) for term in expansion.terms)
    for expansion in thematic_exp.values():
        terms.extend((term.word, [term.word]) for term in expansion.terms)
    for field_name in TEXT_FIELDS:
        hits = sorted(
            {
                label
                for label, phrase in terms
                if match_count(ctx.index, phrase, ordinal, field_name)
            }
        )
        if hits:
            matched[field_name] = hits
    return matched


def score_item(
    ctx: ScoringContext,
    pq: ParsedQuery,
    platial_exp: Mapping[str, PlatialExpansion],
    thematic_exp: Mapping[str, ThematicExpansion],
    ordinal: int,
    explain: bool = False,
) -> ScoreBreakdown:
    """Raw (un-normalized) component scores for one item."""
    item = ctx.catalog.items[ordinal]
    breakdown = ScoreBreakdown(item_id=item.id)
    breakdown.platial = sim_platial(pq, platial_exp, ctx.index, ordinal, ctx.field_weights)
    breakdown.concept = sim_concept(pq, thematic_exp, ctx.index, ordinal, ctx.field_weights)
    breakdown.spatial = sim_spatial(pq, item, ctx.bandwidth_scale, ctx.default_radius_km)
    raw_doc = sim_doc(pq, ctx.table, ctx.doc_embeddings[ordinal])
    breakdown.doc = max(raw_doc, 0.0)  # anti-correlated docs are irrelevant, not penalized
    if explain:
        breakdown.matched_terms = _matched_terms(ctx, ordinal, platial_exp, thematic_exp)
        point = item.representative_point()
        if point is not None:
            for place, _ in pq.places:
                try:
                    kernel = place_kernel(place, ctx.bandwidth_scale, ctx.default_radius_km)
                except NoGeometryError:
                    continue
                breakdown.kernel_distances_km[place.place_id] = haversine_km(
                    kernel.center, point
                )
    return breakdown


def combine(
    breakdowns: list[ScoreBreakdown], pq: ParsedQuery, lambdas: Lambdas
) -> None:
    """Max-normalize each component over the candidates and fill in the
    combined score, with lambda mass redistributed to active components."""
    active = []
    if pq.places:
        active.extend(["platial", "spatial"])
    if pq.thematic_terms:
        active.extend(["concept", "doc"])
    effective = lambdas.renormalized(active) if active else {}
    maxima = {
        name: max((getattr(b, name) for b in breakdowns), default=0.0)
        for name in COMPONENTS
    }
    for breakdown in breakdowns:
        combined = 0.0
        for name in COMPONENTS:
            raw = getattr(breakdown, name)
            normalized = raw / maxima[name] if maxima[name] > 0.0 else 0.0
            setattr(breakdown, f"{name}_n", normalized)
            combined += effective.get(name, 0.0) * normalized
        breakdown.lambdas = dict(effective)
        breakdown.combined = combined


def semantic_search(
    ctx: ScoringContext,
    pq: ParsedQuery,
    platial_exp: Mapping[str, PlatialExpansion],
    thematic_exp: Mapping[str, ThematicExpansion],
    lambdas: Lambdas,
    k: int,
    explain: bool = False,
    exhaustive: bool = False,
) -> list[ScoreBreakdown]:
    """Top-k score breakdowns, combined descending, ties by item id.

    The candidate union (lexical matches + spatial ring + embedding
    neighbors) is exact whenever the corpus fits in the candidate pool;
    exhaustive=True forces scoring of every item (the test oracle path).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if exhaustive:
        candidates = set(range(len(ctx.catalog)))
    else:
        candidates = _lexical_candidates(ctx, platial_exp, thematic_exp)
        candidates |= _spatial_candidates(ctx, pq)
        candidates |= _doc_candidates(ctx, pq)
    breakdowns = [
        score_item(ctx, pq, platial_exp, thematic_exp, ordinal, explain=explain)
        for ordinal in sorted(candidates)
    ]
    combine(breakdowns, pq, lambdas)
    breakdowns.sort(key=lambda b: (-b.combined, b.item_id))
    return breakdowns[:k]
