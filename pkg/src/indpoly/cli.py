"""Command-line front end: ``indpoly {poly,classify,verify,family}``.

Exit codes: 0 ok, 1 verification failure or closed-form disagreement,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Sequence

from . import closed_forms as cf
from . import families as fam
from .chordal import is_chordal, is_cochordal
from .engine import GuardExceeded, report
from .graph import Graph, GraphFormatError, encode_graph6, format_edge_list, parse_edge_list, parse_graph6
from .poly import IntPolynomial, render, to_json
from .verify import SUITES, SuiteResult

SCHEMA = 1


class UsageError(Exception):
    pass


# -- family parameters ------------------------------------------------------

def _ints(params: Sequence[str]) -> tuple[int, ...]:
    out = []
    for p in params:
        for tok in p.replace(",", " ").split():
            try:
                out.append(int(tok))
            except ValueError:
                raise UsageError(f"expected an integer, got {tok!r}") from None
    return tuple(out)


def _exactly(name: str, params: Sequence[str], k: int) -> tuple[int, ...]:
    vals = _ints(params)
    if len(vals) != k:
        raise UsageError(f"family {name} takes {k} integer parameter(s), got {len(vals)}")
    return vals


@dataclass
class FamilyInstance:
    name: str
    graph: Graph
    params: Any
    summary: str


def build_family(name: str, params: Sequence[str]) -> FamilyInstance:
    try:
        return _build_family(name, list(params))
    except (ValueError, GraphFormatError) as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(f"invalid parameters for {name}: {exc}") from None


def _build_family(name: str, params: list[str]) -> FamilyInstance:
    summary = f"family {name} {' '.join(params)}".strip()
    if name in ("path", "complete", "complete-minus-edge", "exp-witness"):
        (n,) = _exactly(name, params, 1)
        ctor: Callable[[int], Graph] = {
            "path": fam.path,
            "complete": fam.complete,
            "complete-minus-edge": fam.complete_minus_edge,
            "exp-witness": fam.exponential_witness,
        }[name]
        return FamilyInstance(name, ctor(n), n, summary)
    if name == "big-star":
        p = fam.BigStarParams(_ints(params))
        return FamilyInstance(name, fam.big_star(p), p, summary)
    if name == "bouquet":
        p = fam.BouquetParams(_ints(params))
        return FamilyInstance(name, fam.clique_bouquet(p), p, summary)
    if name == "two-clique":
        p = fam.TwoCliqueParams(*_exactly(name, params, 3))
        return FamilyInstance(name, fam.two_clique(p), p, summary)
    if name == "cochordal-witness":
        d, m = _exactly(name, params, 2)
        return FamilyInstance(name, fam.cochordal_symmetric_witness(d, m), (d, m), summary)
    if name == "caterpillar":
        if not params:
            raise UsageError("caterpillar takes the spine length then the leaf counts")
        (n,) = _ints(params[:1])
        p = fam.CaterpillarSpec(n, _ints(params[1:]))
        return FamilyInstance(name, fam.caterpillar(p), p, summary)
    if name == "whisker":
        if not params:
            raise UsageError("whisker takes a graph6 base graph then the leaf counts")
        p = fam.WhiskerSpec(parse_graph6(params[0]), _ints(params[1:]))
        return FamilyInstance(name, fam.whisker(p), p, summary)
    raise UsageError(f"unknown family {name!r}; choose from {', '.join(FAMILY_NAMES)}")


FAMILY_NAMES = (
    "path",
    "complete",
    "complete-minus-edge",
    "big-star",
    "whisker",
    "caterpillar",
    "two-clique",
    "bouquet",
    "cochordal-witness",
    "exp-witness",
)


# -- payload helpers --------------------------------------------------------

def _jsonable(x: Any) -> Any:
    if isinstance(x, IntPolynomial):
        return to_json(x)
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        # keep huge values exact for downstream JSON parsers
        return x if abs(x) < 2**53 else str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def report_payload(g: Graph, brute_force: bool = False) -> dict[str, Any]:
    r = report(g, brute_force=brute_force)
    return {
        "n": g.n,
        "edges": g.num_edges(),
        "polynomial": r.poly,
        "polynomial_text": render(r.poly),
        "alpha": r.alpha,
        "value_at_minus_one": r.value_at_minus_one,
        "multiplicity": r.multiplicity,
        "h_polynomial": r.h.h,
        "h_polynomial_text": render(r.h.h, "t"),
        "a_invariant": r.h.a_invariant,
        "symmetric": r.symmetric,
        "pseudo_gorenstein_star": r.pseudo_gorenstein_star,
    }


def _row(invariant: str, closed: Any, engine: Any) -> dict[str, Any]:
    return {"invariant": invariant, "closed_form": closed, "engine": engine, "agree": closed == engine}


def classify(inst: FamilyInstance) -> list[dict[str, Any]]:
    r = report(inst.graph)
    pg = r.pseudo_gorenstein_star
    rows = []
    name, p = inst.name, inst.params
    if name == "path":
        rows += [
            _row("polynomial", cf.path_polynomial(p), r.poly),
            _row("value_at_minus_one", cf.path_minus_one(p), r.value_at_minus_one),
        ]
    elif name == "complete":
        rows += [
            _row("polynomial", IntPolynomial([1, p]), r.poly),
            _row("value_at_minus_one", 1 - p, r.value_at_minus_one),
        ]
    elif name == "complete-minus-edge":
        rows += [_row("polynomial", IntPolynomial([1, p, 1]), r.poly)]
    elif name == "big-star":
        rows += [
            _row("polynomial", cf.big_star_poly_formula(p), r.poly),
            _row("value_at_minus_one", cf.big_star_minus_one(p), r.value_at_minus_one),
            _row("alpha", cf.big_star_alpha(p), r.alpha),
            _row("pseudo_gorenstein_star", cf.big_star_pseudo_gorenstein(p), pg),
            _row("symmetric", cf.big_star_is_symmetric(p), r.symmetric),
        ]
    elif name == "whisker":
        rows += [
            _row("polynomial", cf.whisker_polynomial(p), r.poly),
            _row("value_at_minus_one", cf.whisker_minus_one(p), r.value_at_minus_one),
            _row("alpha", cf.whisker_alpha(p), r.alpha),
        ]
        if all(f >= 1 for f in p.leaf_counts):
            rows.append(_row("symmetric", cf.whisker_symmetric_criterion(p), r.symmetric))
    elif name == "caterpillar":
        rows += [
            _row("value_at_minus_one", cf.caterpillar_minus_one(p), r.value_at_minus_one),
            _row("alpha", cf.caterpillar_alpha(p), r.alpha),
            _row("pseudo_gorenstein_star", cf.caterpillar_pseudo_gorenstein(p), pg),
        ]
        if r.value_at_minus_one != 0:
            rows.append(_row("sign", cf.caterpillar_sign(p), r.value_at_minus_one))
        if all(f >= 1 for f in p.leaf_counts):
            rows.append(_row("symmetric", cf.caterpillar_symmetric_criterion(p), r.symmetric))
    elif name == "two-clique":
        rows += [
            _row("polynomial", cf.two_clique_polynomial(p), r.poly),
            _row("value_at_minus_one", cf.two_clique_minus_one(p), r.value_at_minus_one),
            _row("chordal", True, is_chordal(inst.graph)),
        ]
    elif name == "bouquet":
        rows += [
            _row("polynomial", cf.bouquet_polynomial(p), r.poly),
            _row("value_at_minus_one", cf.bouquet_minus_one(p), r.value_at_minus_one),
            _row("chordal", True, is_chordal(inst.graph)),
        ]
    elif name == "cochordal-witness":
        d, m = p
        rows += [
            _row("polynomial", cf.cochordal_symmetric_polynomial(d, m), r.poly),
            _row("symmetric_form_m", m, cf.cochordal_symmetric_form(r.poly)),
            _row("cochordal", True, is_cochordal(inst.graph)),
            _row("symmetric", True, r.symmetric),
        ]
    elif name == "exp-witness":
        radii = fam.exponential_witness_radii(p)
        bound = cf.exponential_lower_bound(p)
        rows += [
            _row("value_at_minus_one", cf.bouquet_minus_one(fam.BouquetParams(radii)), r.value_at_minus_one),
            _row("meets_lower_bound", True, abs(r.value_at_minus_one) >= bound),
        ]
    return rows


# -- argument parsing -------------------------------------------------------

def _load_graph(args: argparse.Namespace) -> tuple[Graph, str]:
    sources = [s for s in (args.edges, args.g6, args.family) if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of --edges FILE, --g6 STRING, --family NAME PARAMS")
    if args.edges is not None:
        try:
            text = Path(args.edges).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {args.edges}: {exc}") from None
        return parse_edge_list(text), f"edges {args.edges}"
    if args.g6 is not None:
        return parse_graph6(args.g6), f"g6 {args.g6}"
    inst = build_family(args.family[0], args.family[1:])
    return inst.graph, inst.summary


# per-suite mapping from CLI flag to suite keyword
_SUITE_FLAGS: dict[str, dict[str, str]] = {
    "paths": {"max_n": "max_n"},
    "big-stars": {"max_arm": "max_arm", "max_q": "max_q", "min_q": "min_q"},
    "caterpillars": {"max_n": "max_n", "max_f": "max_f"},
    "whiskers": {"count": "count", "max_n": "max_base", "max_f": "max_f", "seed": "seed"},
    "cochordal": {"max_n": "max_n"},
    "range": {"max_n": "max_n", "exhaustive_n": "exhaustive_max_n"},
    "bouquets": {"max_sum": "max_sum", "max_n": "max_witness_n"},
    "trees": {"count": "count", "max_n": "max_n", "seed": "seed"},
    "engstrom": {"count": "count", "max_n": "max_n", "seed": "seed"},
    "oracle": {"count": "count", "max_n": "max_n", "seed": "seed"},
}


def run_suite(name: str, args: argparse.Namespace) -> SuiteResult:
    kwargs = {}
    for flag, kw in _SUITE_FLAGS[name].items():
        val = getattr(args, flag, None)
        if val is not None:
            kwargs[kw] = val
    if name == "range" and getattr(args, "n", None) is not None:
        kwargs["min_n"] = kwargs["max_n"] = args.n
    return SUITES[name](**kwargs)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="indpoly", description="Exact independence polynomials and their invariants.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_poly = sub.add_parser("poly", help="full invariant report for one graph")
    p_poly.add_argument("--edges", metavar="FILE", help="edge-list file: n, then one 'u v' per line")
    p_poly.add_argument("--g6", metavar="STRING", help="graph6 string")
    p_poly.add_argument("--family", nargs="+", metavar="ARG", help="family name followed by its parameters")
    p_poly.add_argument("--brute-force", action="store_true", help="count by subset enumeration instead")
    p_poly.add_argument("--json", action="store_true")

    p_cls = sub.add_parser("classify", help="closed forms side by side with engine values")
    p_cls.add_argument("family", choices=FAMILY_NAMES)
    p_cls.add_argument("params", nargs="*")
    p_cls.add_argument("--json", action="store_true")

    p_ver = sub.add_parser("verify", help="run a verification sweep")
    p_ver.add_argument("suite", choices=list(SUITES) + ["all"])
    for flag in ("max-arm", "max-q", "min-q", "max-n", "max-f", "max-sum", "count", "seed", "n", "exhaustive-n"):
        p_ver.add_argument(f"--{flag}", type=int)
    p_ver.add_argument("--json", action="store_true")

    p_fam = sub.add_parser("family", help="construct a family member")
    p_fam.add_argument("family", choices=FAMILY_NAMES)
    p_fam.add_argument("params", nargs="*")
    fmt = p_fam.add_mutually_exclusive_group()
    fmt.add_argument("--g6", action="store_true", help="emit graph6")
    fmt.add_argument("--edges", action="store_true", help="emit an edge list (default)")
    p_fam.add_argument("--json", action="store_true")
    return parser


def _emit(envelope: dict[str, Any], as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps(_jsonable(envelope), sort_keys=True, indent=2))
    else:
        print(text)


def _text_report(summary: str, payload: dict[str, Any]) -> str:
    lines = [summary]
    for key in ("n", "edges", "polynomial_text", "alpha", "value_at_minus_one", "multiplicity",
                "h_polynomial_text", "a_invariant", "symmetric", "pseudo_gorenstein_star"):
        lines.append(f"  {key}: {payload[key]}")
    return "\n".join(lines)


def _cell(x: Any) -> str:
    return render(x) if isinstance(x, IntPolynomial) else str(x)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    as_json = getattr(args, "json", False)
    envelope: dict[str, Any] = {"schema": SCHEMA, "command": args.command}
    try:
        if args.command == "poly":
            g, summary = _load_graph(args)
            payload = report_payload(g, brute_force=args.brute_force)
            envelope.update(input_summary=summary, status="ok", result=payload)
            _emit(envelope, as_json, _text_report(summary, payload))
            return 0

        if args.command == "classify":
            inst = build_family(args.family, args.params)
            rows = classify(inst)
            agree = all(row["agree"] for row in rows)
            envelope.update(input_summary=inst.summary, status="ok", result={"invariants": rows, "all_agree": agree})
            text = [inst.summary]
            for row in rows:
                mark = "agree" if row["agree"] else "DISAGREE"
                text.append(f"  {row['invariant']}: closed form {_cell(row['closed_form'])}, "
                            f"engine {_cell(row['engine'])}, {mark}")
            _emit(envelope, as_json, "\n".join(text))
            return 0 if agree else 1

        if args.command == "verify":
            names = list(SUITES) if args.suite == "all" else [args.suite]
            if args.suite == "all" and args.exhaustive_n is None:
                args.exhaustive_n = 6
            results = [run_suite(name, args) for name in names]
            ok = all(r.ok for r in results)
            envelope.update(
                input_summary=f"verify {args.suite}",
                status="ok",
                result={"suites": [r.to_dict() for r in results], "passed": ok},
            )
            text = []
            for r in results:
                line = f"{r.name}: {'PASS' if r.ok else 'FAIL'} ({r.checked - r.failures}/{r.checked} checks)"
                if r.first_counterexample:
                    line += f"; first counterexample {r.first_counterexample}"
                if "symmetric_instances" in r.details and r.name == "big-stars":
                    line += f"; symmetric {r.details['symmetric_instances']}"
                if "realized" in r.details:
                    line += f"; realized {r.details['realized']}"
                text.append(line)
            _emit(envelope, as_json, "\n".join(text))
            return 0 if ok else 1

        if args.command == "family":
            inst = build_family(args.family, args.params)
            g = inst.graph
            if args.g6:
                out, fmt_name = encode_graph6(g), "graph6"
            else:
                out, fmt_name = format_edge_list(g), "edges"
            envelope.update(
                input_summary=inst.summary,
                status="ok",
                result={"format": fmt_name, "graph": out, "n": g.n, "edges": g.num_edges()},
            )
            _emit(envelope, as_json, out.rstrip("\n"))
            return 0
    except (UsageError, GraphFormatError, GuardExceeded, ValueError) as exc:
        envelope.update(status="error", message=str(exc))
        if as_json:
            _emit(envelope, True, "")
        else:
            print(f"indpoly: error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError(f"unhandled command {args.command}")


if __name__ == "__main__":
    sys.exit(main())
