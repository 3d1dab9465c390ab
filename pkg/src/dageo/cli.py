"""Command-line front end.

Subcommands::

    dageo verify --theorem <id> --trials N --seed S [--bound B] [--json out]
    dageo list-theorems
    dageo construct --scene scene.json --out result.json
    dageo plot --scene scene.json --svg out.svg
    dageo euclid-export --trials N --tol 1e-9 [--seed S] [--json out]

Exit codes: 0 all pass, 1 counterexample found, 2 invalid input or scene,
3 generator exhaustion.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import GeneratorExhaustedError
from .euclid import run_euclid_campaign
from .harness import CampaignConfig, list_theorems, run_campaign
from .scene import Scene, SceneError, run_scene
from .svg import EmptySceneError, render_svg

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INVALID = 2
EXIT_EXHAUSTED = 3


def _load_scene(path: str) -> Scene:
    with open(path, encoding="utf-8") as handle:
        return Scene.from_dict(json.load(handle))


def _cmd_verify(args) -> int:
    try:
        cfg = CampaignConfig(args.theorem, trials=args.trials, seed=args.seed,
                             bound=args.bound)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    try:
        report = run_campaign(cfg)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_INVALID
    except GeneratorExhaustedError as exc:
        print(f"error: generator exhausted: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    text = report.to_json()
    if args.json:
        with open(args.json, "w", encoding="utf-8") as handle:
            handle.write(text)
    status = "PASS" if report.failures == 0 else "FAIL"
    print(f"{status} {report.theorem}: trials={report.trials} "
          f"failures={report.failures} skipped={report.skipped} "
          f"seed={report.seed}")
    if report.failures and report.first_counterexample is not None:
        print(json.dumps(report.first_counterexample, sort_keys=True,
                         indent=2))
    return EXIT_OK if report.failures == 0 else EXIT_COUNTEREXAMPLE


def _cmd_list(_args) -> int:
    for theorem_id, description in list_theorems():
        print(f"{theorem_id:24s} {description}")
    return EXIT_OK


def _cmd_construct(args) -> int:
    try:
        scene = _load_scene(args.scene)
        document, _ = run_scene(scene, trials=args.trials, seed=args.seed)
    except (SceneError, OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except GeneratorExhaustedError as exc:
        print(f"error: generator exhausted: {exc}", file=sys.stderr)
        return EXIT_EXHAUSTED
    text = json.dumps(document, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        print(text, end="")
    failures = sum(r.get("failures", 0) for r in document["verified"])
    return EXIT_OK if failures == 0 else EXIT_COUNTEREXAMPLE


def _cmd_plot(args) -> int:
    try:
        scene = _load_scene(args.scene)
        _, drawables = run_scene(scene, seed=args.seed, verify=False)
        svg = render_svg(drawables)
    except (SceneError, EmptySceneError, OSError, json.JSONDecodeError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    with open(args.svg, "w", encoding="utf-8") as handle:
        handle.write(svg)
    print(f"wrote {args.svg}")
    return EXIT_OK


def _cmd_euclid(args) -> int:
    report = run_euclid_campaign(args.trials, args.seed, args.tol)
    text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if args.json:
        with open(args.json, "w", encoding="utf-8") as handle:
            handle.write(text)
    status = "PASS" if report["failures"] == 0 else "FAIL"
    print(f"{status} euclid_export: trials={report['trials']} "
          f"failures={report['failures']} "
          f"max_residual={max(report['max_collinearity_residual'], report['max_concurrency_residual']):.3e}")
    return EXIT_OK if report["failures"] == 0 else EXIT_COUNTEREXAMPLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dageo",
        description="exact difference-angle geometry kernel and "
                    "theorem-verification harness")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a randomized theorem campaign")
    p.add_argument("--theorem", required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--bound", type=int, default=50)
    p.add_argument("--json", help="write the report JSON here")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("list-theorems", help="list registered theorem ids")
    p.set_defaults(func=_cmd_list)

    p = sub.add_parser("construct", help="apply a scene's constructions")
    p.add_argument("--scene", required=True)
    p.add_argument("--out", help="write the result JSON here")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("plot", help="render a scene to SVG")
    p.add_argument("--scene", required=True)
    p.add_argument("--svg", required=True)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=_cmd_plot)

    p = sub.add_parser("euclid-export",
                       help="float-tolerance Euclidean collinearity suite")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--json", help="write the report JSON here")
    p.set_defaults(func=_cmd_euclid)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
