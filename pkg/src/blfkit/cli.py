"""Command line interface.

Subcommands::

    blfkit list-scenarios
    blfkit verify SCENARIO [--json FILE]
    blfkit dump-scenario SCENARIO
    blfkit generate-family N
    blfkit handle-sim [--genus G | --localized]
    blfkit oracle-crosscheck [--count N] [--seed S] [--max-length L]
    blfkit render SCENARIO -o FILE.svg

Exit status: 0 when all checks pass, 1 when a verification fails, 2 on
usage errors.  All output is deterministic; the cross-check seed defaults
to the ``BLFKIT_SEED`` environment variable (or 0).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import handles, oracle, render, scenarios


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _cmd_list(_args) -> int:
    for name in sorted(scenarios.SCENARIOS):
        sc = scenarios.get_scenario(name)
        print(f"{name}: {sc.description}")
    return 0


def _cmd_verify(args) -> int:
    sc = scenarios.get_scenario(args.scenario)
    report = scenarios.run_scenario(sc)
    for r in report["reports"]:
        status = "ok" if r["ok"] else "FAIL"
        print(f"[{status}] {r['check']} ({sc.name})")
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(_dump(report))
    return 0 if report["ok"] else 1


def _cmd_dump(args) -> int:
    sc = scenarios.get_scenario(args.scenario)
    sys.stdout.write(_dump(sc.to_json()))
    return 0


def _cmd_family(args) -> int:
    sc = scenarios.family_scenario(args.n)
    sys.stdout.write(_dump(sc.to_json()))
    return 0


def _cmd_handles(args) -> int:
    if args.localized:
        pres = handles.localized_presentation()
        trace = handles.run_script(pres, [])
        profile = pres.homology_profile()
        ok = handles.is_ball_profile(profile)
        out = {"presentation": "localized", "trace": trace, "ball": ok}
    else:
        pres = handles.fibration_presentation(args.genus)
        trace = handles.run_script(pres, handles.simplification_script())
        profiles = [t["profile"] for t in trace]
        constant = all(p == profiles[0] for p in profiles)
        standard = handles.is_standard_form(pres, args.genus)
        ok = constant and standard and profiles[0] == handles.expected_final_profile(args.genus)
        out = {
            "presentation": f"fibration-genus-{args.genus}",
            "trace": trace,
            "profile_constant": constant,
            "standard_form": standard,
        }
    out["ok"] = ok
    sys.stdout.write(_dump(out))
    return 0 if ok else 1


def _cmd_oracle(args) -> int:
    report = oracle.run_agreement_suite(args.count, args.seed, args.max_length)
    sys.stdout.write(_dump(report.to_json()))
    return 0 if report.ok else 1


def _cmd_render(args) -> int:
    sc = scenarios.get_scenario(args.scenario)
    items = dict(sc.curves)
    if sc.arc is not None:
        items["A"] = sc.arc
    svg = render.render_svg(sc.scheme, items)
    with open(args.output, "w") as fh:
        fh.write(svg)
    return 0


def _default_seed() -> int:
    return int(os.environ.get("BLFKIT_SEED", "0"))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blfkit",
        description="verification engine for round-handle modifications of fibrations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list-scenarios", help="list the built-in scenarios").set_defaults(fn=_cmd_list)

    p = sub.add_parser("verify", help="run every check of a scenario")
    p.add_argument("scenario", choices=sorted(scenarios.SCENARIOS))
    p.add_argument("--json", help="also write the full report to this file")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("dump-scenario", help="print a scenario as JSON")
    p.add_argument("scenario", choices=sorted(scenarios.SCENARIOS))
    p.set_defaults(fn=_cmd_dump)

    p = sub.add_parser("generate-family", help="print the n-th family member as JSON")
    p.add_argument("n", type=int)
    p.set_defaults(fn=_cmd_family)

    p = sub.add_parser("handle-sim", help="run the handle simplification script")
    p.add_argument("--genus", type=int, default=1)
    p.add_argument("--localized", action="store_true",
                   help="trace the localized piece instead of the full picture")
    p.set_defaults(fn=_cmd_handles)

    p = sub.add_parser("oracle-crosscheck", help="engine vs fundamental-group oracle")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.add_argument("--max-length", type=int, default=5)
    p.set_defaults(fn=_cmd_oracle)

    p = sub.add_parser("render", help="draw a scenario as SVG")
    p.add_argument("scenario", choices=sorted(scenarios.SCENARIOS))
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(fn=_cmd_render)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
