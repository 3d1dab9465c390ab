"""Scene files: named points, parabolas and triangles, plus constructions
to apply and theorem campaigns to run.

Scene JSON shape::

    {
      "gauge": {"origin": ["0","0"], "reference_direction": ["1","0"],
                "projective_direction": ["0","1"]},        # optional
      "points": {"A": ["0","0"], "B": ["1","1"]},
      "parabolas": {"G": {"kappa": "1", "beta": "0", "gamma": "0"}},
      "triangles": {"T1": ["A", "B", "C"]},
      "construct": ["centers(T1)", "circumparabola(A,B,C)"],
      "verify": ["ptolemy", "dabct"]
    }

Scalars are strings in the kernel text format (``"n"``, ``"p/q"`` or a
finite decimal).  When a gauge is present, all points are normalized into
its chart before any construction runs.  Names must be unique across all
namespaces, and every referenced name must be defined.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .gauge import Gauge, Line, Point, identity_gauge, line_through
from .parabola import Parabola, circumparabola, iso_angle_locus
from .theorems import CompleteQuadrilateral, miquel_quadrilateral, miquel_triangle
from .triangle import DATriangle, VERTICES, bisector_at, centers, dabct, simson
from .scalar import format_scalar, parse_scalar


class SceneError(ValueError):
    """Malformed scene file or dangling reference."""


def _parse_point(raw) -> Point:
    if not (isinstance(raw, list) and len(raw) == 2):
        raise SceneError(f"point must be a [x, y] pair, got {raw!r}")
    return Point(parse_scalar(raw[0]), parse_scalar(raw[1]))


def _parse_parabola(raw) -> Parabola:
    try:
        return Parabola(parse_scalar(raw["kappa"]), parse_scalar(raw["beta"]),
                        parse_scalar(raw["gamma"]))
    except (KeyError, TypeError) as exc:
        raise SceneError(f"parabola needs kappa/beta/gamma: {raw!r}") from exc


@dataclass
class Scene:
    gauge: Gauge | None = None
    points: dict[str, Point] = field(default_factory=dict)
    parabolas: dict[str, Parabola] = field(default_factory=dict)
    triangles: dict[str, DATriangle] = field(default_factory=dict)
    construct: list[str] = field(default_factory=list)
    verify: list[str] = field(default_factory=list)

    @classmethod
    def from_dict(cls, data: dict) -> "Scene":
        if not isinstance(data, dict):
            raise SceneError("scene must be a JSON object")
        gauge = None
        if "gauge" in data:
            g = data["gauge"]
            try:
                gauge = Gauge(
                    _parse_point(g["origin"]),
                    tuple(parse_scalar(v) for v in g["reference_direction"]),
                    tuple(parse_scalar(v) for v in g["projective_direction"]),
                )
            except (KeyError, TypeError) as exc:
                raise SceneError(f"malformed gauge: {g!r}") from exc

        points = {name: _parse_point(raw)
                  for name, raw in data.get("points", {}).items()}
        if gauge is not None and gauge != identity_gauge():
            names = list(points)
            chart = gauge.normalize_chart([points[n] for n in names])
            points = dict(zip(names, chart))

        parabolas = {name: _parse_parabola(raw)
                     for name, raw in data.get("parabolas", {}).items()}

        triangles = {}
        for name, labels in data.get("triangles", {}).items():
            if not (isinstance(labels, list) and len(labels) == 3):
                raise SceneError(f"triangle {name!r} needs 3 point names")
            try:
                pts = [points[lbl] for lbl in labels]
            except KeyError as exc:
                raise SceneError(f"triangle {name!r} references undefined "
                                 f"point {exc.args[0]!r}") from None
            triangles[name] = DATriangle(*pts)

        all_names = list(points) + list(parabolas) + list(triangles)
        if len(all_names) != len(set(all_names)):
            raise SceneError("names must be unique across the scene")

        return cls(gauge, points, parabolas, triangles,
                   list(data.get("construct", [])),
                   list(data.get("verify", [])))


# ---------------------------------------------------------------------------
# Constructions.
# ---------------------------------------------------------------------------

@dataclass
class Drawables:
    """Primitives a construction contributes to a figure."""
    points: dict[str, Point] = field(default_factory=dict)
    lines: dict[str, Line] = field(default_factory=dict)
    parabolas: dict[str, Parabola] = field(default_factory=dict)
    ideal: list[str] = field(default_factory=list)    # labels of ideal points
    angle_labels: dict[str, tuple[Point, Fraction]] = field(default_factory=dict)


_CALL_RE = re.compile(r"^\s*(\w+)\s*\(\s*([^()]*)\s*\)\s*$")


def _resolve(scene: Scene, token: str):
    token = token.strip()
    if token in scene.points:
        return scene.points[token]
    if token in scene.parabolas:
        return scene.parabolas[token]
    if token in scene.triangles:
        return scene.triangles[token]
    try:
        return parse_scalar(token)
    except ValueError:
        raise SceneError(f"undefined name {token!r}") from None


def apply_construction(scene: Scene, call: str) -> tuple[dict, Drawables]:
    """Evaluate one construction call against the scene's named objects.

    Returns the JSON-able result payload and the drawable primitives for
    figure rendering.
    """
    from .harness import jsonable

    match = _CALL_RE.match(call)
    if not match:
        raise SceneError(f"malformed construction call {call!r}")
    name, arg_text = match.groups()
    args = [_resolve(scene, tok) for tok in arg_text.split(",")] \
        if arg_text.strip() else []

    draw = Drawables()

    def expect(kinds):
        if len(args) != len(kinds) or \
                not all(isinstance(a, k) for a, k in zip(args, kinds)):
            raise SceneError(f"{name} expects {kinds}, got {call!r}")

    if name == "centers":
        expect([DATriangle])
        t: DATriangle = args[0]
        cs = centers(t)
        for lbl in VERTICES:
            draw.points[lbl] = t.vertex(lbl)
            draw.lines[f"bisector_{lbl}"] = bisector_at(t, lbl, "interior")
        draw.points["incenter"] = cs.incenter
        draw.points["excenter_a"] = cs.excenter_a
        draw.points["excenter_c"] = cs.excenter_c
        draw.points["centroid"] = cs.centroid
        draw.ideal.append("excenter_ideal")
        draw.parabolas["circumparabola"] = t.parabola
        result = {
            "incenter": cs.incenter,
            "excenter_a": cs.excenter_a,
            "excenter_c": cs.excenter_c,
            "excenter_ideal": cs.excenter_ideal,
            "centroid": cs.centroid,
            "tangent_centroid": cs.tangent_centroid,
            "bisector_centroid": cs.bisector_centroid,
            "tangent_triangle": cs.tangent_triangle,
        }
    elif name == "circumparabola":
        expect([Point, Point, Point])
        curve = circumparabola(*args)
        draw.parabolas["circumparabola"] = curve
        for lbl, pt in zip(("P1", "P2", "P3"), args):
            draw.points[lbl] = pt
        result = {"parabola": curve}
    elif name == "iso_angle_locus":
        expect([Point, Point, Fraction])
        curve = iso_angle_locus(*args)
        draw.parabolas["locus"] = curve
        result = {"parabola": curve}
    elif name == "interior_angles":
        expect([DATriangle])
        t = args[0]
        angles = t.interior_angles()
        for lbl, theta in zip(VERTICES, angles):
            draw.points[lbl] = t.vertex(lbl)
            draw.angle_labels[lbl] = (t.vertex(lbl), theta)
        result = {"angles": dict(zip(VERTICES, angles))}
    elif name == "simson":
        expect([DATriangle, Fraction])
        t, m = args
        res = simson(t, m)
        for lbl in VERTICES:
            draw.points[lbl] = t.vertex(lbl)
            draw.points[f"K_{lbl}"] = res.chord_points[lbl]
            draw.points[f"H_{lbl}"] = res.feet[lbl]
        draw.lines["simson_line"] = res.line
        draw.parabolas["circumparabola"] = t.parabola
        result = {"chord_points": res.chord_points, "feet": res.feet,
                  "line": res.line}
    elif name == "dabct":
        expect([DATriangle])
        t = args[0]
        res = dabct(t)
        for lbl in VERTICES:
            draw.points[lbl] = t.vertex(lbl)
            draw.points[f"L_{lbl}"] = res.l_points[lbl]
            draw.lines[f"bisector_{lbl}"] = bisector_at(t, lbl, "positive")
        result = {"l_points": res.l_points, "feet": res.feet,
                  "det_residual": res.det_residual}
    elif name == "miquel_triangle":
        expect([DATriangle, Point, Point, Point])
        t, d, e, f = args
        res = miquel_triangle(t, d, e, f)
        for lbl in VERTICES:
            draw.points[lbl] = t.vertex(lbl)
        for lbl, pt in zip(("D", "E", "F"), (d, e, f)):
            draw.points[lbl] = pt
        for name2, pts in (("C_AEF", (t.a, e, f)), ("C_BFD", (t.b, f, d)),
                           ("C_CDE", (t.c, d, e))):
            draw.parabolas[name2] = circumparabola(*pts)
        if res.point.is_finite:
            draw.points["M"] = res.point.point
        else:
            draw.ideal.append("M")
        result = {"miquel_point": res.point, "kind": res.kind,
                  "memberships": res.memberships}
    elif name == "miquel_quadrilateral":
        expect([Point, Point, Point, Point])
        a, b, c, d = args
        quad = CompleteQuadrilateral(
            *(line_through(p, q)
              for p, q in ((a, b), (b, c), (c, d), (d, a))))
        res = miquel_quadrilateral(quad)
        for lbl, pt in quad.points().items():
            draw.points[lbl] = pt
        for name2, pts in quad.defining_triples().items():
            draw.parabolas[name2] = circumparabola(*pts)
        if res.point.is_finite:
            draw.points["M"] = res.point.point
        else:
            draw.ideal.append("M")
        result = {"miquel_point": res.point, "kind": res.kind,
                  "memberships": res.memberships}
    else:
        raise SceneError(f"unknown construction {name!r}")

    return {"construction": call.strip(), "result": jsonable(result)}, draw


def run_scene(scene: Scene, trials: int = 100, seed: int = 42,
              bound: int = 50, verify: bool = True) -> tuple[dict, Drawables]:
    """Apply every construction and run every requested theorem campaign.

    Returns the result document plus the merged drawables of all
    constructions (scene-level points and parabolas included).
    ``verify=False`` skips the campaigns (used when only a figure is
    wanted).
    """
    from .harness import CampaignConfig, jsonable, run_campaign

    merged = Drawables()
    merged.points.update(scene.points)
    merged.parabolas.update(scene.parabolas)

    constructions = []
    for call in scene.construct:
        payload, draw = apply_construction(scene, call)
        constructions.append(payload)
        merged.points.update(draw.points)
        merged.lines.update(draw.lines)
        merged.parabolas.update(draw.parabolas)
        merged.ideal.extend(draw.ideal)
        merged.angle_labels.update(draw.angle_labels)

    reports = []
    for theorem_id in scene.verify if verify else ():
        cfg = CampaignConfig(theorem_id, trials=trials, seed=seed, bound=bound)
        reports.append(run_campaign(cfg).to_json())

    document = {
        "points": {n: jsonable(p) for n, p in scene.points.items()},
        "constructions": constructions,
        "verified": [json.loads(r) for r in reports],
    }
    return document, merged


def scene_scalar(value: Fraction) -> str:
    return format_scalar(value)
