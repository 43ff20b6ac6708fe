"""taut: shortest homotopic paths, smoothed paths, and convex hulls by
iteratively tightening a string of processors among point obstacles."""

from .geometry import (Point, Triangle, centroid, convex_hull,
                       in_adjacent_partition, orient, point_in_triangle,
                       polyline_length, segments_intersect)
from .homotopy import (HomotopyViolationError, PathThroughObstacleError,
                       Signature, homotopic, loop_signature, signature)
from .insertion import (MultiResolution, adjacent_obstacles, insertion_points,
                        resolve_multi)
from .oracle import (ShortestPathResult, oracle_hull,
                     oracle_query_triangle, oracle_shortest_homotopic)
from .sampling import default_spacing, min_obstacle_distance, resample
from .scene import Scene, SceneError, load_scene, scene_from_dict, scene_to_dict
from .spatial_index import ObstacleSet, build, query_triangle
from .tightening import (CONVERGED, SWEEP_LIMIT, Feature, SparseSamplingError,
                         StringConfig, SweepRecord, TightenParams,
                         TightenResult, alpha, compute_feature, phi,
                         resolve_epsilon, sweep, tighten, update_weight)

__version__ = "0.1.0"

__all__ = [
    "Point", "Triangle", "orient", "point_in_triangle", "convex_hull",
    "centroid", "polyline_length", "in_adjacent_partition",
    "segments_intersect",
    "ObstacleSet", "build", "query_triangle",
    "min_obstacle_distance", "resample", "default_spacing",
    "Signature", "signature", "homotopic", "loop_signature",
    "PathThroughObstacleError", "HomotopyViolationError",
    "StringConfig", "Feature", "TightenParams", "SweepRecord",
    "TightenResult", "phi", "alpha", "compute_feature", "update_weight",
    "sweep", "tighten", "resolve_epsilon", "CONVERGED", "SWEEP_LIMIT",
    "SparseSamplingError",
    "MultiResolution", "adjacent_obstacles", "insertion_points",
    "resolve_multi",
    "ShortestPathResult", "oracle_shortest_homotopic", "oracle_hull",
    "oracle_query_triangle",
    "Scene", "SceneError", "load_scene", "scene_from_dict", "scene_to_dict",
]
