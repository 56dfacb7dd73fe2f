"""Query preprocessing: toponym recognition via gazetteer longest-match,
geo/thematic split, and uniform weight assignment."""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import EmptyQueryError
from .gazetteer import Gazetteer, Place, resolve
from .text import AnalyzerConfig, Token, analyze, tokenize


@dataclass(frozen=True)
class ParsedQuery:
    raw: str
    places: list[tuple[Place, float]] = field(default_factory=list)
    thematic_terms: list[tuple[Token, float]] = field(default_factory=list)

    @property
    def thematic_tokens(self) -> list[Token]:
        return [token for token, _ in self.thematic_terms]


def parse_query(raw: str, gaz: Gazetteer, analyzer: AnalyzerConfig) -> ParsedQuery:
    """Greedy left-to-right longest-match against gazetteer phrases.

    Stopwords stay in during place matching ("isle of man"); leftover
    tokens pass through the analyzer to become thematic terms. Weights are
    uniform within each aspect.
    """
    tokens = tokenize(raw)
    max_len = gaz.max_phrase_tokens()
    places: list[Place] = []
    leftover: list[str] = []
    i = 0
    while i < len(tokens):
        match: Place | None = None
        match_len = 0
        for length in range(min(max_len, len(tokens) - i), 0, -1):
            phrase = " ".join(tokens[i : i + length])
            candidates = resolve(gaz, phrase)
            if candidates:
                match = candidates[0]
                match_len = length
                break
        if match is not None:
            places.append(match)
            i += match_len
        else:
            leftover.append(tokens[i])
            i += 1

    thematic = analyze(" ".join(leftover), analyzer)
    if not places and not thematic:
        raise EmptyQueryError(f"nothing searchable in query: {raw!r}")

    w_geo = 1.0 / len(places) if places else 0.0
    w_thematic = 1.0 / len(thematic) if thematic else 0.0
    return ParsedQuery(
        raw=raw,
        places=[(p, w_geo) for p in places],
        thematic_terms=[(t, w_thematic) for t in thematic],
    )
