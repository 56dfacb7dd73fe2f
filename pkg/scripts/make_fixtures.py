#!/usr/bin/env python3
"""Regenerate the bundled fixture corpus under fixtures/.

Everything is deterministic (seeded) so the fixture files are bit-stable.
Run from the repo root: python3 scripts/make_fixtures.py
"""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"

# ---------------------------------------------------------------- embeddings

CLUSTERS = {
    "disaster": ["disaster", "fire", "wildfire", "flood", "earthquake",
                 "hurricane", "storm", "emergency", "natural"],
    "traffic": ["traffic", "congestion", "transit", "transportation",
                "road", "highway", "rail", "train"],
    "weather": ["weather", "temperature", "climate", "rainfall",
                "forecast", "wind"],
    "health": ["hospital", "health", "clinic", "medical", "disease"],
    "water": ["water", "river", "lake", "coastline", "ocean"],
    "parks": ["park", "trail", "recreation", "forest"],
    "crime": ["crime", "police", "safety"],
    "population": ["population", "census", "demographic", "household"],
}

# deliberately far from every cluster (and from each other)
MISC = {
    "map": [-1, -1, 0, 0, 0, 0, 0, 0],
    "data": [0, 0, -1, -1, 0, 0, 0, 0],
    "school": [0, 0, 0, 0, -1, -1, 0, 0],
    "energy": [0, 0, 0, 0, 0, 0, -1, -1],
    "election": [-1, 0, 0, 1, 0, -1, 1, 0],
    "housing": [0, -1, 1, 0, -1, 0, 0, 1],
}

DIM = 8


def make_embeddings() -> dict[str, np.ndarray]:
    rng = np.random.RandomState(20190431 % (2**31))
    vectors: dict[str, np.ndarray] = {}
    for axis, (_, words) in enumerate(CLUSTERS.items()):
        base = np.zeros(DIM)
        base[axis] = 1.0
        for i, word in enumerate(words):
            noise = rng.normal(0.0, 1.0, DIM)
            noise[axis] = 0.0
            noise /= np.linalg.norm(noise)
            # the cluster head sits almost on the axis; members fan out
            spread = 0.15 if i == 0 else 0.35
            v = base + spread * noise
            vectors[word] = v / np.linalg.norm(v)
    for word, raw in MISC.items():
        v = np.array(raw, dtype=float)
        vectors[word] = v / np.linalg.norm(v)
    return vectors


def write_embeddings() -> None:
    vectors = make_embeddings()
    assert len(vectors) == 50, len(vectors)
    lines = []
    for word, v in vectors.items():
        lines.append(word + " " + " ".join(f"{x:.4f}" for x in v))
    (FIXTURES / "embeddings.txt").write_text("\n".join(lines) + "\n", "utf-8")


# ----------------------------------------------------------------- gazetteer

PLACES = [
    # place_id, name, aliases, lat, lon, bbox[w,s,e,n], area_km2, parent, children
    ("usa", "United States", ["USA", "US", "United States of America"],
     39.8, -98.6, [-125.0, 24.0, -66.0, 49.0], 9833520, None,
     ["california", "illinois", "massachusetts", "new-york", "texas", "florida"]),
    ("california", "California", [], 36.78, -119.42,
     [-124.4, 32.5, -114.1, 42.0], 423967, "usa",
     ["sonoma-county", "los-angeles", "san-diego", "oxnard"]),
    ("sonoma-county", "Sonoma County", [], 38.53, -122.95,
     [-123.54, 38.11, -122.35, 38.85], 4579, "california", []),
    ("los-angeles", "Los Angeles", ["LA"], 34.05, -118.24,
     [-118.67, 33.70, -118.15, 34.34], 1302, "california", []),
    ("san-diego", "San Diego", [], 32.72, -117.16,
     [-117.28, 32.53, -116.98, 33.08], 964, "california", []),
    ("oxnard", "Oxnard", [], 34.20, -119.18,
     [-119.25, 34.14, -119.12, 34.26], 70, "california", []),
    ("illinois", "Illinois", [], 40.63, -89.40,
     [-91.5, 36.97, -87.5, 42.51], 149995, "usa", ["chicago", "springfield-il"]),
    ("chicago", "Chicago", [], 41.88, -87.63,
     [-87.94, 41.64, -87.52, 42.02], 606, "illinois",
     ["belmont-cragin", "englewood", "lincoln-park"]),
    ("belmont-cragin", "Belmont Cragin", [], 41.93, -87.76,
     [-87.80, 41.91, -87.74, 41.94], 10, "chicago", []),
    ("englewood", "Englewood", [], 41.78, -87.64,
     [-87.68, 41.76, -87.62, 41.80], 8, "chicago", []),
    ("lincoln-park", "Lincoln Park", [], 41.92, -87.65,
     [-87.68, 41.90, -87.62, 41.93], 6, "chicago", []),
    ("springfield-il", "Springfield", [], 39.78, -89.65,
     [-89.75, 39.70, -89.55, 39.87], 155, "illinois", []),
    ("massachusetts", "Massachusetts", [], 42.41, -71.38,
     [-73.5, 41.2, -69.9, 42.9], 27336, "usa", ["boston", "springfield-ma"]),
    ("boston", "Boston", [], 42.36, -71.06,
     [-71.19, 42.23, -70.92, 42.40], 232, "massachusetts", []),
    ("springfield-ma", "Springfield", [], 42.10, -72.59,
     [-72.62, 42.06, -72.47, 42.16], 84, "massachusetts", []),
    ("new-york", "New York", [], 42.95, -75.53,
     [-79.76, 40.48, -71.85, 45.01], 141297, "usa", ["new-york-city"]),
    ("new-york-city", "New York City", ["NYC"], 40.71, -74.01,
     [-74.26, 40.49, -73.70, 40.92], 778, "new-york", ["brooklyn", "manhattan"]),
    ("brooklyn", "Brooklyn", [], 40.65, -73.95,
     [-74.04, 40.57, -73.83, 40.74], 180, "new-york-city", []),
    ("manhattan", "Manhattan", [], 40.78, -73.97,
     [-74.02, 40.70, -73.91, 40.88], 59, "new-york-city", []),
    ("texas", "Texas", [], 31.0, -99.0,
     [-106.6, 25.8, -93.5, 36.5], 695662, "usa", ["houston", "austin"]),
    ("houston", "Houston", [], 29.76, -95.37,
     [-95.79, 29.52, -95.01, 30.11], 1651, "texas", []),
    ("austin", "Austin", [], 30.27, -97.74,
     [-97.94, 30.10, -97.56, 30.52], 830, "texas", []),
    ("florida", "Florida", [], 27.66, -81.52,
     [-87.63, 24.5, -80.0, 31.0], 170312, "usa", ["miami"]),
    ("miami", "Miami", [], 25.76, -80.19,
     [-80.32, 25.70, -80.13, 25.86], 143, "florida", []),
    ("southern-africa", "Southern Africa", [], -25.0, 25.0,
     [10.0, -35.0, 41.0, -15.0], 6600000, None, []),
]


def write_gazetteer() -> None:
    assert len(PLACES) == 25, len(PLACES)
    lines = []
    for pid, name, aliases, lat, lon, bbox, area, parent, children in PLACES:
        record = {
            "place_id": pid, "name": name, "aliases": aliases,
            "lat": lat, "lon": lon, "bbox": bbox, "area_km2": area,
            "parent": parent, "children": children,
        }
        lines.append(json.dumps(record, ensure_ascii=False))
    (FIXTURES / "gazetteer.jsonl").write_text("\n".join(lines) + "\n", "utf-8")


# ------------------------------------------------------------------- catalog

ITEMS = [
    # id, title, snippet, description, type, (lat, lon), bbox
    ("kincade-fire", "Kincade Fire Perimeter",
     "Burn perimeter of the Kincade Fire",
     "Perimeter of the Kincade Fire that burned in Sonoma County in October 2019",
     "Feature Layer", (38.70, -122.78), [-122.95, 38.55, -122.60, 38.85]),
    ("ca-wildfire", "California Wildfire Risk",
     "Statewide wildfire hazard severity zones",
     "Wildfire risk zones across California published by the state fire agency",
     "Web Map", (36.78, -119.42), [-124.4, 32.5, -114.1, 42.0]),
    ("chi-traffic", "Chicago Traffic Counts",
     "Average daily traffic counts",
     "Traffic counts collected at arterial streets in Chicago",
     "Feature Layer", (41.88, -87.63), [-87.94, 41.64, -87.52, 42.02]),
    ("belmont-congestion", "Street Congestion in Belmont Cragin",
     "Peak hour congestion on local streets",
     "Congestion measurements for the Belmont Cragin community area",
     "Feature Layer", (41.93, -87.76), [-87.80, 41.91, -87.74, 41.94]),
    ("englewood-roads", "Englewood Road Closures",
     "Current road closures",
     "Road closure notices for the Englewood community area",
     "Feature Layer", (41.78, -87.64), [-87.68, 41.76, -87.62, 41.80]),
    ("oxnard-temp", "Temperature in Oxnard",
     "Daily surface temperature",
     "Observed surface temperature readings around Oxnard",
     "Map Service", (34.20, -119.18), [-119.25, 34.14, -119.12, 34.26]),
    ("safrica-temp", "Temperature in Southern Africa",
     "Regional surface temperature",
     "Gridded surface temperature for the Southern Africa region",
     "Map Service", (-25.0, 25.0), [10.0, -35.0, 41.0, -15.0]),
    ("la-climate", "Los Angeles Climate Zones",
     "Building climate zones",
     "Climate zone boundaries used for construction standards in Los Angeles",
     "Web Map", (34.05, -118.24), [-118.67, 33.70, -118.15, 34.34]),
    ("houston-flood", "Houston Flood Zones",
     "Mapped flood hazard areas",
     "Flood zones for the city of Houston derived from insurance rate maps",
     "Feature Layer", (29.76, -95.37), [-95.79, 29.52, -95.01, 30.11]),
    ("houston-hurricane", "Hurricane Damage near Houston",
     "Assessed structure damage",
     "Structure damage assessments after the last hurricane season near Houston",
     "Feature Layer", (29.60, -95.20), [-95.60, 29.40, -94.90, 29.90]),
    ("boston-medical", "Boston Medical Facilities",
     "Licensed medical facilities",
     "Locations of licensed medical and clinic facilities in Boston",
     "Feature Layer", (42.36, -71.06), [-71.19, 42.23, -70.92, 42.40]),
    ("ma-health", "Massachusetts Health Centers",
     "Community health centers",
     "Community health center locations across Massachusetts",
     "Feature Layer", (42.41, -71.38), [-73.5, 41.2, -69.9, 42.9]),
    ("brooklyn-police", "Brooklyn Police Incidents",
     "Reported police incidents",
     "Police incident reports aggregated by precinct in Brooklyn",
     "Feature Layer", (40.65, -73.95), [-74.04, 40.57, -73.83, 40.74]),
    ("manhattan-crime", "Manhattan Crime Map",
     "Reported crime locations",
     "Crime complaints mapped for Manhattan",
     "Web Map", (40.78, -73.97), [-74.02, 40.70, -73.91, 40.88]),
    ("miami-recreation", "Miami Recreation Areas",
     "Parks and recreation areas",
     "Recreation areas and park facilities maintained by the city of Miami",
     "Feature Layer", (25.76, -80.19), [-80.32, 25.70, -80.13, 25.86]),
    ("fl-trails", "Florida Trail Network",
     "Statewide hiking trail network",
     "The Florida trail network with trailheads and segments",
     "Feature Layer", (27.66, -81.52), [-87.63, 24.5, -80.0, 31.0]),
    ("tx-census", "Texas Census Blocks",
     "Census block boundaries",
     "Census block boundaries and counts for Texas",
     "Feature Layer", (31.0, -99.0), [-106.6, 25.8, -93.5, 36.5]),
    ("austin-demo", "Austin Demographics",
     "Neighborhood demographic profiles",
     "Demographic profiles by neighborhood for Austin",
     "Web Map", (30.27, -97.74), [-97.94, 30.10, -97.56, 30.52]),
    ("sd-earthquake", "Earthquake Faults in San Diego",
     "Mapped earthquake fault lines",
     "Known earthquake fault traces in the San Diego region",
     "Feature Layer", (32.72, -117.16), [-117.28, 32.53, -116.98, 33.08]),
    ("ca-shelters", "California Emergency Shelters",
     "Emergency shelter locations",
     "Emergency shelter sites available during disasters in California",
     "Feature Layer", (36.78, -119.42), [-124.4, 32.5, -114.1, 42.0]),
    ("brooklyn-rail", "Brooklyn Rail Network",
     "Rail lines and stations",
     "Rail lines, stations and yards across Brooklyn",
     "Feature Layer", (40.65, -73.95), [-74.04, 40.57, -73.83, 40.74]),
    ("nyc-transport", "New York City Transportation",
     "Multimodal transportation layers",
     "Transportation infrastructure layers for New York City",
     "Web Map", (40.71, -74.01), [-74.26, 40.49, -73.70, 40.92]),
    ("miami-hurricane", "Miami Hurricane Tracks",
     "Historical hurricane tracks",
     "Historical hurricane tracks passing near Miami",
     "Map Service", (25.76, -80.19), [-80.32, 25.70, -80.13, 25.86]),
    ("austin-schools", "Austin School Locations",
     "Public school locations",
     "School campus locations for the Austin district",
     "Feature Layer", (30.27, -97.74), [-97.94, 30.10, -97.56, 30.52]),
    ("chi-river", "Chicago River Water Quality",
     "Water quality sampling",
     "Water quality sampling results along the Chicago river",
     "Feature Layer", (41.89, -87.64), [-87.94, 41.64, -87.52, 42.02]),
    ("ma-census", "Massachusetts Census Tracts",
     "Census tract boundaries",
     "Census tract boundaries with population counts for Massachusetts",
     "Feature Layer", (42.41, -71.38), [-73.5, 41.2, -69.9, 42.9]),
    ("springfield-ma-demo", "Springfield Demographic Summary",
     "Neighborhood demographic summary",
     "Demographic summary tables for Springfield neighborhoods",
     "Web Map", (42.10, -72.59), [-72.62, 42.06, -72.47, 42.16]),
    ("houston-energy", "Houston Energy Consumption",
     "Energy consumption by sector",
     "Energy consumption estimates by sector for Houston",
     "Web Map", (29.76, -95.37), [-95.79, 29.52, -95.01, 30.11]),
    ("manhattan-housing", "Manhattan Housing Density",
     "Housing unit density",
     "Housing unit density by block for Manhattan",
     "Feature Layer", (40.78, -73.97), [-74.02, 40.70, -73.91, 40.88]),
    ("us-climate", "United States Climate Normals",
     "Thirty year climate normals",
     "Climate normals station data covering the United States",
     "Map Service", (39.8, -98.6), [-125.0, 24.0, -66.0, 49.0]),
]


def write_catalog() -> None:
    assert len(ITEMS) == 30, len(ITEMS)
    lines = []
    for item_id, title, snippet, description, item_type, (lat, lon), bbox in ITEMS:
        record = {
            "id": item_id, "title": title, "snippet": snippet,
            "description": description, "type": item_type,
            "location": {"lat": lat, "lon": lon}, "bbox": bbox,
        }
        lines.append(json.dumps(record, ensure_ascii=False))
    (FIXTURES / "catalog.jsonl").write_text("\n".join(lines) + "\n", "utf-8")


# ----------------------------------------------------------------- benchmark

QUERIES = [
    ("q01", "natural disaster in California"),
    ("q02", "Chicago traffic"),
    ("q03", "weather in Los Angeles"),
    ("q04", "flood in Houston"),
    ("q05", "hospitals in Boston"),
    ("q06", "crime in New York City"),
    ("q07", "parks in Miami"),
    ("q08", "population of Texas"),
    ("q09", "earthquake in San Diego"),
    ("q10", "transit in Brooklyn"),
    ("q11", "wildfire in Sonoma County"),
    ("q12", "traffic in Illinois"),
    ("q13", "storm damage in Florida"),
    ("q14", "school districts in Austin"),
    ("q15", "river water quality in Illinois"),
    ("q16", "census data in Massachusetts"),
    ("q17", "energy usage in Houston"),
    ("q18", "forest fire risk in California"),
    ("q19", "housing in Manhattan"),
    ("q20", "climate change in USA"),
]

JUDGMENTS = [
    ("q01", "kincade-fire", 4), ("q01", "ca-wildfire", 3), ("q01", "ca-shelters", 2),
    ("q02", "chi-traffic", 4), ("q02", "belmont-congestion", 4), ("q02", "englewood-roads", 3),
    ("q03", "la-climate", 4), ("q03", "oxnard-temp", 3), ("q03", "safrica-temp", 0),
    ("q04", "houston-flood", 4), ("q04", "houston-hurricane", 3),
    ("q05", "boston-medical", 4), ("q05", "ma-health", 3),
    ("q06", "brooklyn-police", 4), ("q06", "manhattan-crime", 4),
    ("q07", "miami-recreation", 4), ("q07", "fl-trails", 2),
    ("q08", "tx-census", 4), ("q08", "austin-demo", 3),
    ("q09", "sd-earthquake", 4), ("q09", "ca-shelters", 2),
    ("q10", "brooklyn-rail", 4), ("q10", "nyc-transport", 3),
    ("q11", "kincade-fire", 4), ("q11", "ca-wildfire", 2),
    ("q12", "chi-traffic", 4), ("q12", "belmont-congestion", 3),
    ("q13", "miami-hurricane", 4), ("q13", "fl-trails", 0),
    ("q14", "austin-schools", 4),
    ("q15", "chi-river", 4),
    ("q16", "ma-census", 4), ("q16", "springfield-ma-demo", 3),
    ("q17", "houston-energy", 4),
    ("q18", "ca-wildfire", 4), ("q18", "kincade-fire", 3),
    ("q19", "manhattan-housing", 4),
    ("q20", "us-climate", 4),
]


def write_benchmark() -> None:
    lines = [f"{qid}\t{text}" for qid, text in QUERIES]
    (FIXTURES / "queries.tsv").write_text("\n".join(lines) + "\n", "utf-8")
    lines = [f"{qid}\t{item}\t{grade}" for qid, item, grade in JUDGMENTS]
    (FIXTURES / "judgments.tsv").write_text("\n".join(lines) + "\n", "utf-8")


CONFIG = """\
catalog_path = catalog.jsonl
gazetteer_path = gazetteer.jsonl
embeddings_path = embeddings.txt
weight_title = 0.4
weight_snippet = 0.25
weight_description = 0.25
weight_item_type = 0.1
lambda_platial = 0.25
lambda_spatial = 0.25
lambda_concept = 0.25
lambda_doc = 0.25
k_subdiv = 10
self_mass = 0.5
k_neighbors = 5
min_cos = 0.4
bandwidth_scale = 1.0
default_radius_km = 10.0
candidate_pool = 200
host = 127.0.0.1
port = 8080
"""


def main() -> None:
    FIXTURES.mkdir(exist_ok=True)
    write_embeddings()
    write_gazetteer()
    write_catalog()
    write_benchmark()
    (FIXTURES / "config.txt").write_text(CONFIG, "utf-8")
    print(f"fixtures written to {FIXTURES}")


if __name__ == "__main__":
    main()
