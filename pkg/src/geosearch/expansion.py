"""Expanded query construction: place-hierarchy term sets and
embedding-neighbor term sets, each with normalized weights."""
from __future__ import annotations

from dataclasses import dataclass

from .embeddings import EmbeddingTable, neighbors
from .gazetteer import Gazetteer, Place, normalize_phrase, subdivisions
from .text import Token


@dataclass(frozen=True)
class PlatialTerm:
    phrase: str
    weight: float
    kind: str  # "self" | "subdivision"


@dataclass(frozen=True)
class PlatialExpansion:
    source: Place
    terms: list[PlatialTerm]


@dataclass(frozen=True)
class ThematicTerm:
    word: str
    weight: float
    cosine: float


@dataclass(frozen=True)
class ThematicExpansion:
    source: Token
    terms: list[ThematicTerm]


def expand_place(
    place: Place, gaz: Gazetteer, k_subdiv: int, self_mass: float
) -> PlatialExpansion:
    """The place itself (weight self_mass) plus its top-k subdivisions
    splitting the remaining mass uniformly; self-only when it has no
    subdivisions or self_mass is 1."""
    if not 0.0 < self_mass <= 1.0:
        raise ValueError(f"self_mass must be in (0, 1]: {self_mass}")
    subs = subdivisions(gaz, place, k_subdiv)
    self_phrase = normalize_phrase(place.canonical_name)
    if not subs or self_mass == 1.0:
        return PlatialExpansion(place, [PlatialTerm(self_phrase, 1.0, "self")])
    share = (1.0 - self_mass) / len(subs)
    terms = [PlatialTerm(self_phrase, self_mass, "self")]
    terms.extend(
        PlatialTerm(normalize_phrase(sub.canonical_name), share, "subdivision")
        for sub in subs
    )
    return PlatialExpansion(place, terms)


def expand_term(
    term: Token, table: EmbeddingTable, k_neighbors: int, min_cos: float
) -> ThematicExpansion:
    """Neighbor set weighted by cosine / (1 + sum of neighbor cosines),
    with the source term itself at cosine 1."""
    found = neighbors(table, term.surface, k_neighbors, min_cos)
    denom = 1.0 + sum(sim for _, sim in found)
    terms = [ThematicTerm(term.surface, 1.0 / denom, 1.0)]
    terms.extend(ThematicTerm(word, sim / denom, sim) for word, sim in found)
    return ThematicExpansion(term, terms)
