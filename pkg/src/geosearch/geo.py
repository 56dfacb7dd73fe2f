"""Great-circle distance and spherical-rectangle area helpers."""
from __future__ import annotations

import math

from .catalog import BoundingBox, GeoPoint

EARTH_RADIUS_KM = 6371.0


def haversine_km(a: GeoPoint, b: GeoPoint) -> float:
    """Great-circle distance between two points in kilometers."""
    lat1, lon1, lat2, lon2 = map(math.radians, (a.lat, a.lon, b.lat, b.lon))
    dlat = lat2 - lat1
    dlon = lon2 - lon1
    h = math.sin(dlat / 2) ** 2 + math.cos(lat1) * math.cos(lat2) * math.sin(dlon / 2) ** 2
    return 2.0 * EARTH_RADIUS_KM * math.asin(min(1.0, math.sqrt(h)))


def bbox_diagonal_km(bbox: BoundingBox) -> float:
    """Great-circle length of the box diagonal (south-west to north-east)."""
    sw = GeoPoint(bbox.south, bbox.west)
    ne = GeoPoint(bbox.north, bbox.east)
    return haversine_km(sw, ne)


def bbox_area_km2(bbox: BoundingBox) -> float:
    """Equirectangular area at the box's mean latitude, in km^2."""
    dlat = math.radians(bbox.north - bbox.south)
    if bbox.crosses_antimeridian:
        dlon = math.radians((bbox.east + 360.0) - bbox.west)
    else:
        dlon = math.radians(bbox.east - bbox.west)
    mean_lat = math.radians((bbox.south + bbox.north) / 2.0)
    return EARTH_RADIUS_KM**2 * dlat * dlon * math.cos(mean_lat)


def bbox_intersection(a: BoundingBox, b: BoundingBox) -> BoundingBox | None:
    """Axis-aligned intersection; None when the boxes are disjoint.

    Antimeridian-crossing boxes are not supported here (callers reject
    them before area scoring).
    """
    west = max(a.west, b.west)
    east = min(a.east, b.east)
    south = max(a.south, b.south)
    north = min(a.north, b.north)
    if west >= east or south >= north:
        return None
    return BoundingBox(west, south, east, north)
