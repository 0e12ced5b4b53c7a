"""Batch command-line interface.

Four commands: `validate` parses space/map documents and reports the
first structural error per file; `classify` emits the full morphism
classification; `theorem-check` runs the three compression computations
and demands exact agreement; `functor-check` certifies contravariance
and compression submultiplicativity for a composable pair.

Reports are deterministic: identical inputs and flags give byte-identical
output. Exit codes: 0 clean, 1 law violation, 2 input error, 3 budget
exceeded.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .errors import BudgetExceeded, MalgError
from .formats import (
    dumps_canonical,
    element_to_obj,
    map_to_obj,
    metric_space_to_obj,
    obj_to_map,
    parse_space_document,
    space_to_obj,
)
from .instances import random_instance
from .maps import (
    MeasurableMap,
    compose,
    compression,
    lipschitz_bruteforce,
    lipschitz_fast,
)
from .metric import (
    FiniteMetricMeasureSpace,
    MorphismClassification,
    classify,
    compression_submultiplicativity,
    contravariance_check,
)

DEFAULT_BUDGET = 12


@dataclass
class RunReport:
    command: str
    inputs: dict = field(default_factory=dict)
    results: object = None
    violations: list = field(default_factory=list)
    exit_code: int = 0

    def to_obj(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "violations": self.violations,
            "exit_code": self.exit_code,
        }


class _Loader:
    """Reads JSON files, remembering a digest of every file touched."""

    def __init__(self):
        self.digests: dict[str, str] = {}

    def read_obj(self, path: str):
        data = Path(path).read_bytes()
        self.digests[path] = hashlib.sha256(data).hexdigest()
        try:
            return json.loads(data)
        except json.JSONDecodeError as exc:
            raise MalgError(f"invalid JSON: {exc}") from exc

    def load_map(self, path: str):
        obj = self.read_obj(path)
        base_dir = Path(path).parent

        def resolver(ref: str):
            return self.read_obj(str((base_dir / ref)))

        return obj_to_map(obj, resolver)


def _error_entry(path: Optional[str], exc: Exception) -> dict:
    entry = {"error": type(exc).__name__, "detail": str(exc)}
    if path is not None:
        entry["file"] = path
    return entry


def _space_entry(parsed) -> dict:
    if isinstance(parsed, FiniteMetricMeasureSpace):
        return {
            "kind": "metric_space",
            "sigma_finite": parsed.base.is_sigma_finite,
            "canonical": metric_space_to_obj(parsed),
        }
    return {
        "kind": "space",
        "sigma_finite": parsed.is_sigma_finite,
        "canonical": space_to_obj(parsed),
    }


def cmd_validate(args) -> RunReport:
    loader = _Loader()
    entries = []
    failed = False
    for path in args.paths:
        try:
            obj = loader.read_obj(path)
            if isinstance(obj, dict) and "fn" in obj:
                phi, sm, tm = obj_to_map(
                    obj, lambda ref, p=path: loader.read_obj(str(Path(p).parent / ref))
                )
                entries.append(
                    {"file": path, "kind": "map", "canonical": map_to_obj(phi, sm, tm)}
                )
            else:
                entry = _space_entry(parse_space_document(obj))
                entries.append({"file": path, **entry})
        except (MalgError, OSError) as exc:
            failed = True
            entries.append(_error_entry(path, exc))
    return RunReport(
        command="validate",
        inputs=loader.digests,
        results={"files": entries},
        exit_code=2 if failed else 0,
    )


def _classification_obj(mc: MorphismClassification) -> dict:
    out = {
        "measurable": mc.measurable,
        "inp": mc.inverse_nil_preserving,
        "compression": str(mc.compression),
        "degenerate": mc.compression.degenerate,
    }
    if mc.lipschitz_point is not None:
        out["lipschitz"] = str(mc.lipschitz_point)
        out["short"] = mc.short
        out["bounded_deformation"] = mc.bounded_deformation
        if mc.rescale_source_to_short is not None:
            out["rescale_source_to_short"] = str(mc.rescale_source_to_short)
            out["rescale_target_to_short"] = str(mc.rescale_target_to_short)
    return out


def cmd_classify(args) -> RunReport:
    loader = _Loader()
    try:
        phi, source_metric, target_metric = loader.load_map(args.map)
    except (MalgError, OSError) as exc:
        return RunReport(
            command="classify",
            inputs=loader.digests,
            results=_error_entry(args.map, exc),
            exit_code=2,
        )
    mc = classify(phi, source_metric, target_metric)
    return RunReport(
        command="classify",
        inputs=loader.digests,
        results={
            "classification": _classification_obj(mc),
            "sigma_finite": {
                "source": phi.source.is_sigma_finite,
                "target": phi.target.is_sigma_finite,
            },
        },
    )


def _theorem_record(index: int, phi: MeasurableMap, budget: int) -> dict:
    comp = compression(phi)
    fast = lipschitz_fast(phi)
    brute = lipschitz_bruteforce(phi, budget=budget)
    agree = comp == fast == brute.result
    witness = None
    if brute.witness is not None:
        witness = {
            "pair": [element_to_obj(brute.witness[0]), element_to_obj(brute.witness[1])],
            "attained_at_empty": brute.attained_at_empty,
        }
    return {
        "index": index,
        "compression": str(comp),
        "degenerate": comp.degenerate,
        "lipschitz_fast": str(fast),
        "lipschitz_bruteforce": str(brute.result),
        "agree": agree,
        "witness": witness,
    }


def cmd_theorem_check(args) -> RunReport:
    loader = _Loader()
    budget = args.budget
    instances: list[tuple[int, MeasurableMap]] = []
    if args.map is not None:
        try:
            phi, _, _ = loader.load_map(args.map)
        except (MalgError, OSError) as exc:
            return RunReport(
                command="theorem-check",
                inputs=loader.digests,
                results=_error_entry(args.map, exc),
                exit_code=2,
            )
        instances.append((0, phi))
    else:
        for i in range(args.trials):
            instances.append((i, random_instance(args.seed, i)))

    records = []
    violations = []
    for index, phi in instances:
        try:
            record = _theorem_record(index, phi, budget)
        except BudgetExceeded as exc:
            return RunReport(
                command="theorem-check",
                inputs=loader.digests,
                results={
                    "seed": args.seed,
                    "trials": args.trials,
                    "budget": budget,
                    "error": _error_entry(None, exc),
                },
                exit_code=3,
            )
        records.append(record)
        if not record["agree"]:
            violations.append(
                {
                    "law": "compression-lipschitz-agreement",
                    "witness": {
                        "index": index,
                        "instance": map_to_obj(phi),
                        "compression": record["compression"],
                        "lipschitz_fast": record["lipschitz_fast"],
                        "lipschitz_bruteforce": record["lipschitz_bruteforce"],
                    },
                }
            )
    results = {
        "seed": args.seed,
        "trials": args.trials,
        "budget": budget,
        "checked": len(records),
        "agreements": sum(1 for r in records if r["agree"]),
        "instances": records,
    }
    return RunReport(
        command="theorem-check",
        inputs=loader.digests,
        results=results,
        violations=violations,
        exit_code=1 if violations else 0,
    )


def cmd_functor_check(args) -> RunReport:
    loader = _Loader()
    try:
        f, _, _ = loader.load_map(args.f)
        g, _, _ = loader.load_map(args.g)
        report = contravariance_check(f, g)
        submult = compression_submultiplicativity(f, g)
    except (MalgError, OSError) as exc:
        return RunReport(
            command="functor-check",
            inputs=loader.digests,
            results=_error_entry(None, exc),
            exit_code=2,
        )
    violations = [
        {"law": v.law, "witness": v.witness} for v in report.violations
    ]
    comp_f = compression(f)
    comp_g = compression(g)
    comp_gf = compression(compose(g, f))
    if not submult:
        violations.append(
            {
                "law": "compression-submultiplicativity",
                "witness": {
                    "compression_f": str(comp_f),
                    "compression_g": str(comp_g),
                    "compression_gf": str(comp_gf),
                },
            }
        )
    return RunReport(
        command="functor-check",
        inputs=loader.digests,
        results={
            "compression_f": str(comp_f),
            "compression_g": str(comp_g),
            "compression_gf": str(comp_gf),
            "submultiplicative": submult,
        },
        violations=violations,
        exit_code=1 if violations else 0,
    )


def render(report: RunReport, fmt: str) -> str:
    if fmt == "json":
        return dumps_canonical(report.to_obj())
    lines = [f"command: {report.command}", f"exit_code: {report.exit_code}"]
    for path, digest in report.inputs.items():
        lines.append(f"input: {path} sha256={digest}")
    if report.violations:
        lines.append(f"violations: {len(report.violations)}")
        for v in report.violations:
            lines.append(f"  - {v['law']}: {json.dumps(v['witness'])}")
    else:
        lines.append("violations: none")
    lines.append("results:")
    lines.append(json.dumps(report.results, indent=2))
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="malg",
        description="Exact measure-algebra computations on finite measure spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--output", default=None, help="write the report to this path")

    p_validate = sub.add_parser("validate", help="parse and validate documents")
    p_validate.add_argument("paths", nargs="+")
    add_common(p_validate)
    p_validate.set_defaults(handler=cmd_validate)

    p_classify = sub.add_parser("classify", help="classify one map document")
    p_classify.add_argument("map")
    add_common(p_classify)
    p_classify.set_defaults(handler=cmd_classify)

    p_theorem = sub.add_parser(
        "theorem-check",
        help="check compression == fast Lipschitz == brute-force Lipschitz",
    )
    p_theorem.add_argument("map", nargs="?", default=None)
    p_theorem.add_argument("--trials", type=int, default=0)
    p_theorem.add_argument("--seed", type=int, default=0)
    p_theorem.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    add_common(p_theorem)
    p_theorem.set_defaults(handler=cmd_theorem_check)

    p_functor = sub.add_parser(
        "functor-check", help="contravariance and submultiplicativity for a pair"
    )
    p_functor.add_argument("f")
    p_functor.add_argument("g")
    add_common(p_functor)
    p_functor.set_defaults(handler=cmd_functor_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "theorem-check" and args.map is None and args.trials <= 0:
        build_parser().error("theorem-check needs a map path or --trials N")
    report = args.handler(args)
    text = render(report, args.format)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
