import math
import random

import numpy as np
import pytest

from geosearch.catalog import BoundingBox, Catalog, CatalogItem, GeoPoint
from geosearch.embeddings import DocEmbedding, EmbeddingTable, doc_embedding
from geosearch.errors import DegenerateBoxError, NoGeometryError
from geosearch.expansion import expand_place, expand_term
from geosearch.gazetteer import Place
from geosearch.geo import haversine_km
from geosearch.index import FieldWeights, build_index
from geosearch.query import ParsedQuery, parse_query
from geosearch.scoring import (
    GaussianKernel,
    Lambdas,
    ScoringContext,
    combine,
    gauss_score,
    place_kernel,
    score_item,
    semantic_search,
    sim_concept,
    sim_doc,
    sim_platial,
    sim_spatial,
    sim_spatial_overlap,
)
from geosearch.text import AnalyzerConfig, Token
from conftest import random_catalog
from oracles import naive_sim_concept, naive_sim_platial

CONFIG = AnalyzerConfig()
EVEN = FieldWeights()
TITLE_HALF = FieldWeights(title=0.5, snippet=0.25, description=0.25, item_type=0.0)


def make_place(pid, name, lat=None, lon=None, bbox=None, area=None):
    return Place(
        place_id=pid,
        canonical_name=name,
        center=GeoPoint(lat, lon) if lat is not None else None,
        bbox=BoundingBox(*bbox) if bbox else None,
        area_km2=area,
    )


def make_pq(places=(), terms=(), raw="q"):
    w_geo = 1.0 / len(places) if places else 0.0
    w_th = 1.0 / len(terms) if terms else 0.0
    return ParsedQuery(
        raw=raw,
        places=[(p, w_geo) for p in places],
        thematic_terms=[(Token(t, i), w_th) for i, t in enumerate(terms)],
    )


def self_only_platial(place):
    from geosearch.expansion import PlatialExpansion, PlatialTerm
    from geosearch.gazetteer import normalize_phrase

    return PlatialExpansion(place, [PlatialTerm(normalize_phrase(place.canonical_name), 1.0, "self")])


def self_only_thematic(word):
    from geosearch.expansion import ThematicExpansion, ThematicTerm

    return ThematicExpansion(Token(word, 0), [ThematicTerm(word, 1.0, 1.0)])


class TestSimPlatial:
    def test_no_places_is_zero(self):
        catalog = Catalog()
        catalog.insert(CatalogItem(id="a", title="Chicago"))
        index = build_index(catalog, CONFIG)
        pq = make_pq(terms=["traffic"])
        assert sim_platial(pq, {}, index, 0, EVEN) == 0.0

    def test_hand_computed(self):
        # one place (w=1), self-only expansion (w=1), title weight 0.5,
        # two title matches -> 1 * 1 * 0.5 * 2 = 1.0
        catalog = Catalog()
        catalog.insert(CatalogItem(id="a", title="Chicago Chicago"))
        index = build_index(catalog, CONFIG)
        place = make_place("chicago", "Chicago")
        pq = make_pq(places=[place])
        expansions = {"chicago": self_only_platial(place)}
        assert sim_platial(pq, expansions, index, 0, TITLE_HALF) == pytest.approx(1.0)

    def test_matches_brute_force(self, engine):
        rng = random.Random(31)
        pq = parse_query("traffic in Chicago and Boston", engine.gazetteer, CONFIG)
        expansions = {
            p.place_id: expand_place(p, engine.gazetteer, 3, 0.5) for p, _ in pq.places
        }
        for ordinal, item in enumerate(engine.catalog.items[:5]):
            expected = naive_sim_platial(pq, expansions, engine.catalog, item, EVEN, CONFIG)
            actual = sim_platial(pq, expansions, engine.index, ordinal, EVEN)
            assert actual == pytest.approx(expected, abs=1e-9)


class TestSimConcept:
    def test_no_terms_is_zero(self):
        catalog = Catalog()
        catalog.insert(CatalogItem(id="a", title="traffic"))
        index = build_index(catalog, CONFIG)
        pq = make_pq(places=[make_place("x", "X")])
        assert sim_concept(pq, {}, index, 0, EVEN) == 0.0

    def test_hand_computed(self):
        catalog = Catalog()
        catalog.insert(CatalogItem(id="a", title="traffic jam"))
        index = build_index(catalog, CONFIG)
        pq = make_pq(terms=["traffic"])
        expansions = {"traffic": self_only_thematic("traffic")}
        assert sim_concept(pq, expansions, index, 0, TITLE_HALF) == pytest.approx(0.5)

    def test_matches_brute_force(self, engine):
        pq = parse_query("fire and flood emergency", engine.gazetteer, CONFIG)
        expansions = {
            t.surface: expand_term(t, engine.table, 4, 0.3) for t, _ in pq.thematic_terms
        }
        for ordinal, item in enumerate(engine.catalog.items[:8]):
            expected = naive_sim_concept(pq, expansions, engine.catalog, item, EVEN, CONFIG)
            actual = sim_concept(pq, expansions, engine.index, ordinal, EVEN)
            assert actual == pytest.approx(expected, abs=1e-9)


class TestKernel:
    def test_point_bbox_falls_back_to_default_radius(self):
        place = make_place("p", "P", bbox=[10, 10, 10, 10])
        kernel = place_kernel(place, bandwidth_scale=2.0, default_radius_km=10.0)
        assert kernel.sigma_km == pytest.approx(20.0)

    def test_one_degree_lat_box_at_equator(self):
        # 1 degree of latitude is ~111.19 km; sigma is half the diagonal
        place = make_place("p", "P", bbox=[0, 0, 0, 1])
        kernel = place_kernel(place, bandwidth_scale=1.0)
        expected = math.pi * 6371.0 / 180.0 / 2.0
        assert kernel.sigma_km == pytest.approx(expected, abs=0.01)
        assert kernel.sigma_km == pytest.approx(55.60, abs=0.01)

    def test_center_only_place(self):
        place = make_place("p", "P", lat=10.0, lon=20.0)
        kernel = place_kernel(place, bandwidth_scale=1.0, default_radius_km=10.0)
        assert kernel.center == GeoPoint(10.0, 20.0)
        assert kernel.sigma_km == pytest.approx(10.0)

    def test_no_geometry_raises(self):
        with pytest.raises(NoGeometryError):
            place_kernel(make_place("p", "P"))


class TestGaussScore:
    def test_at_center_is_one(self):
        kernel = GaussianKernel(GeoPoint(10, 10), 50.0)
        item = CatalogItem(id="a", location=GeoPoint(10, 10))
        assert gauss_score(kernel, item) == pytest.approx(1.0)

    def test_at_one_sigma(self):
        kernel = GaussianKernel(GeoPoint(0, 0), haversine_km(GeoPoint(0, 0), GeoPoint(0, 1)))
        item = CatalogItem(id="a", location=GeoPoint(0, 1))
        assert gauss_score(kernel, item) == pytest.approx(math.exp(-0.5), abs=1e-9)

    def test_no_geometry_is_zero(self):
        kernel = GaussianKernel(GeoPoint(0, 0), 10.0)
        assert gauss_score(kernel, CatalogItem(id="a")) == 0.0

    def test_strictly_decreasing_in_distance(self):
        kernel = GaussianKernel(GeoPoint(0, 0), 100.0)
        scores = [
            gauss_score(kernel, CatalogItem(id="a", location=GeoPoint(0, lon)))
            for lon in (0.0, 0.5, 1.0, 2.0, 5.0, 20.0)
        ]
        assert all(a > b for a, b in zip(scores, scores[1:]))
        assert all(0.0 < s <= 1.0 for s in scores)


class TestSimSpatial:
    def test_no_places_zero(self):
        pq = make_pq(terms=["fire"])
        assert sim_spatial(pq, CatalogItem(id="a", location=GeoPoint(0, 0))) == 0.0

    def test_item_at_place_center(self):
        place = make_place("p", "P", lat=5.0, lon=5.0)
        pq = make_pq(places=[place])
        item = CatalogItem(id="a", location=GeoPoint(5.0, 5.0))
        assert sim_spatial(pq, item) == pytest.approx(1.0)

    def test_two_places_far_and_near(self):
        near = make_place("n", "N", lat=0.0, lon=0.0)
        far = make_place("f", "F", lat=0.0, lon=90.0)
        pq = make_pq(places=[near, far])
        item = CatalogItem(id="a", location=GeoPoint(0.0, 0.0))
        assert sim_spatial(pq, item) == pytest.approx(0.5, abs=1e-6)


class TestSimSpatialOverlap:
    def test_identical_boxes(self):
        box = BoundingBox(0, 0, 10, 10)
        assert sim_spatial_overlap(box, box) == pytest.approx(1.0)

    def test_disjoint_boxes(self):
        assert sim_spatial_overlap(BoundingBox(0, 0, 1, 1), BoundingBox(5, 5, 6, 6)) == 0.0

    def test_planar_ratio_fixture(self):
        # thin equatorial boxes so the equirectangular areas behave planar:
        # A(q)=10 units, A(d)=20, A(q∩d)=5 -> (0.5 + 0.25) * 0.5 = 0.375
        q = BoundingBox(0.0, 0.0, 10.0, 0.001)
        d = BoundingBox(5.0, 0.0, 25.0, 0.001)
        assert sim_spatial_overlap(q, d) == pytest.approx(0.375, abs=1e-6)

    def test_degenerate_box_raises(self):
        with pytest.raises(DegenerateBoxError):
            sim_spatial_overlap(BoundingBox(0, 0, 0, 10), BoundingBox(0, 0, 1, 1))

    def test_bounded(self):
        rng = random.Random(2)
        for _ in range(100):
            def box():
                w = rng.uniform(-100, 100)
                s = rng.uniform(-60, 60)
                return BoundingBox(w, s, w + rng.uniform(0.1, 40), s + rng.uniform(0.1, 20))

            value = sim_spatial_overlap(box(), box())
            assert 0.0 <= value <= 1.0 + 1e-12


class TestSimDoc:
    def table(self):
        return EmbeddingTable(2, {"fire": np.array([1.0, 2.0]), "flood": np.array([1.0, 0.0])})

    def test_oov_query_zero(self):
        pq = make_pq(terms=["zzz"])
        doc = DocEmbedding("a", np.array([1.0, 1.0]), math.sqrt(2))
        assert sim_doc(pq, self.table(), doc) == 0.0

    def test_parallel_vectors(self):
        pq = make_pq(terms=["fire"])
        doc = DocEmbedding("a", np.array([2.0, 4.0]), math.sqrt(20))
        assert sim_doc(pq, self.table(), doc) == pytest.approx(1.0)

    def test_hand_cosine(self):
        pq = make_pq(terms=["flood"])
        doc = DocEmbedding("a", np.array([1.0, 1.0]), math.sqrt(2))
        assert sim_doc(pq, self.table(), doc) == pytest.approx(0.70711, abs=1e-5)


def build_ctx(catalog, table, **kwargs):
    index = build_index(catalog, CONFIG)
    docs = [doc_embedding(table, index, i, item.id) for i, item in enumerate(catalog)]
    return ScoringContext(
        catalog=catalog, index=index, table=table, doc_embeddings=docs,
        field_weights=EVEN, **kwargs,
    )


class TestSemanticSearch:
    def test_lambda_scaling_leaves_ranking_and_scores(self, engine):
        pq = parse_query("Chicago traffic", engine.gazetteer, CONFIG)
        platial, thematic = engine.expansions(pq)
        a = semantic_search(engine.ctx, pq, platial, thematic, Lambdas(1, 1, 1, 1), 10)
        b = semantic_search(engine.ctx, pq, platial, thematic, Lambdas(7, 7, 7, 7), 10)
        assert [x.item_id for x in a] == [x.item_id for x in b]
        for x, y in zip(a, b):
            assert x.combined == pytest.approx(y.combined, abs=1e-12)

    def test_doc_only_lambdas_sort_by_sim_doc(self, engine):
        pq = parse_query("fire hazard zones", engine.gazetteer, CONFIG)
        platial, thematic = engine.expansions(pq)
        results = semantic_search(
            engine.ctx, pq, platial, thematic,
            Lambdas(0.0, 0.0, 0.0, 1.0), 10, exhaustive=True,
        )
        docs = [max(sim_doc(pq, engine.table, engine.ctx.doc_embeddings[engine.catalog.by_id[b.item_id]]), 0.0)
                for b in results]
        assert docs == sorted(docs, reverse=True)

    def test_breakdown_recombines(self, engine):
        pq, results = engine.semantic_search("natural disaster in California", 10)
        for b in results:
            recombined = sum(b.lambdas.get(name, 0.0) * getattr(b, f"{name}_n")
                             for name in ("platial", "spatial", "concept", "doc"))
            assert b.combined == pytest.approx(recombined, abs=1e-9)
            for name in ("platial_n", "spatial_n", "concept_n", "doc_n"):
                assert -1e-12 <= getattr(b, name) <= 1.0 + 1e-12

    def test_candidate_union_matches_exhaustive(self, engine):
        for query in ("Chicago traffic", "natural disaster in California", "census data"):
            pq = parse_query(query, engine.gazetteer, CONFIG)
            platial, thematic = engine.expansions(pq)
            fast = semantic_search(engine.ctx, pq, platial, thematic, engine.lambdas, 10)
            slow = semantic_search(engine.ctx, pq, platial, thematic, engine.lambdas, 10,
                                   exhaustive=True)
            assert [b.item_id for b in fast] == [b.item_id for b in slow]
            for f, s in zip(fast, slow):
                assert f.combined == pytest.approx(s.combined, abs=1e-9)

    def test_component_monotonicity(self):
        # raising one raw component of one item never lowers its rank
        table = EmbeddingTable(2, {"fire": np.array([1.0, 0.0])})
        base = Catalog()
        base.insert(CatalogItem(id="a", title="fire", location=GeoPoint(0, 0)))
        base.insert(CatalogItem(id="b", title="fire fire", location=GeoPoint(0, 0)))
        boosted = Catalog()
        boosted.insert(CatalogItem(id="a", title="fire fire fire", location=GeoPoint(0, 0)))
        boosted.insert(CatalogItem(id="b", title="fire fire", location=GeoPoint(0, 0)))
        pq = make_pq(terms=["fire"])
        expansions = ({}, {"fire": self_only_thematic("fire")})
        rank_base = [b.item_id for b in semantic_search(
            build_ctx(base, table), pq, *expansions, Lambdas(), 2, exhaustive=True)]
        rank_boost = [b.item_id for b in semantic_search(
            build_ctx(boosted, table), pq, *expansions, Lambdas(), 2, exhaustive=True)]
        assert rank_base.index("a") >= rank_boost.index("a")

    def test_zero_overlap_contrast(self, engine):
        # area-ratio overlap cannot order items whose boxes are disjoint
        # from the query footprint, while the decay kernel can.
        la = engine.gazetteer.get("los-angeles")
        oxnard = engine.catalog.lookup("oxnard-temp")
        safrica = engine.catalog.lookup("safrica-temp")
        assert sim_spatial_overlap(la.bbox, oxnard.bbox) == 0.0
        assert sim_spatial_overlap(la.bbox, safrica.bbox) == 0.0
        pq = parse_query("weather in Los Angeles", engine.gazetteer, CONFIG)
        assert sim_spatial(pq, oxnard) > sim_spatial(pq, safrica)


class TestLambdas:
    def test_stored_normalized(self):
        lam = Lambdas(1, 1, 1, 1)
        assert lam.platial == pytest.approx(0.25)

    def test_rejects_all_zero(self):
        with pytest.raises(ValueError):
            Lambdas(0, 0, 0, 0)

    def test_renormalized_subset(self):
        lam = Lambdas(0.25, 0.25, 0.25, 0.25)
        eff = lam.renormalized(["concept", "doc"])
        assert eff == {"concept": 0.5, "doc": 0.5}
