"""Deterministic text analysis: tokenization, stopwords, light lemmatization.

Shared by indexing, embeddings and query parsing so that every component
sees the same token stream.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping

# maximal runs of Unicode letters/digits; hyphens and apostrophes split
_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)

_ES_ENDINGS = ("xes", "ches", "shes", "sses", "zzes")
# -s words that are not plurals ("census", "analysis", "glass")
_S_GUARDS = ("ss", "us", "is")


@dataclass(frozen=True)
class Token:
    surface: str
    position: int


def _load_default_stopwords() -> frozenset[str]:
    data = resources.files("geosearch.data").joinpath("stopwords_en.txt").read_text("utf-8")
    return frozenset(w.strip() for w in data.splitlines() if w.strip())


@dataclass(frozen=True)
class AnalyzerConfig:
    stopwords: frozenset[str] = field(default_factory=_load_default_stopwords)
    lemma_exceptions: Mapping[str, str] = field(default_factory=dict)
    enable_lemmatization: bool = True


def load_stopwords(path: str | Path) -> frozenset[str]:
    """One lowercase word per line."""
    with open(path, encoding="utf-8") as fh:
        return frozenset(line.strip().lower() for line in fh if line.strip())


def load_lemma_exceptions(path: str | Path) -> dict[str, str]:
    """Lines of "surface<TAB>lemma"."""
    exceptions: dict[str, str] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            surface, _, lemma = line.partition("\t")
            if lemma:
                exceptions[surface.lower()] = lemma.lower()
    return exceptions


def tokenize(text: str) -> list[str]:
    """Lowercased token surfaces with no filtering (used for phrase matching)."""
    return [m.group(0).lower() for m in _TOKEN_RE.finditer(text)]


def lemmatize(word: str, exceptions: Mapping[str, str]) -> str:
    """Exception lookup followed by conservative English plural stripping."""
    mapped = exceptions.get(word)
    if mapped is not None:
        return mapped
    if word.endswith("ies") and len(word) > 4:
        return word[:-3] + "y"
    if word.endswith(_ES_ENDINGS):
        return word[:-2]
    if word.endswith("s") and not word.endswith(_S_GUARDS) and len(word) > 3:
        return word[:-1]
    return word


def analyze(text: str, config: AnalyzerConfig) -> list[Token]:
    """Tokenize, lowercase, drop stopwords, lemmatize.

    Positions are ordinals in the pre-removal token sequence, so phrase
    adjacency survives stopword removal as position gaps.
    """
    tokens: list[Token] = []
    for position, surface in enumerate(tokenize(text)):
        if surface in config.stopwords:
            continue
        if config.enable_lemmatization:
            surface = lemmatize(surface, config.lemma_exceptions)
            # lemmas that collapse onto a stopword ("wills" -> "will") are dropped
            if surface in config.stopwords:
                continue
        if surface:
            tokens.append(Token(surface, position))
    return tokens


def analyze_surfaces(text: str, config: AnalyzerConfig) -> list[str]:
    return [t.surface for t in analyze(text, config)]


def unique_terms(texts: Iterable[str], config: AnalyzerConfig) -> set[str]:
    terms: set[str] = set()
    for text in texts:
        terms.update(analyze_surfaces(text, config))
    return terms
