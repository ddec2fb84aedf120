"""Command-line interface.

Usage examples
--------------
  hyperhopf psi --input twins.json --one-based --basis powersum
  hyperhopf zinv --method takeuchi-sum < k3.json
  hyperhopf classify --input c1.json --one-based
  hyperhopf enumerate --max-vertices 5
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import sys
import time

from . import complexes as cx
from . import euler, hopf, symfun
from .setfam import BoundError, Clutter, Hypergraph, ValidationError, minimal_edges
from .verify import CHECKS, run_verification

log = logging.getLogger("hyperhopf")

EXIT_OK, EXIT_INPUT, EXIT_BOUND, EXIT_VIOLATION = 0, 2, 3, 4
KINDS = ("hypergraph", "clutter", "complex")


class VerificationFailure(Exception):
    def __init__(self, result):
        super().__init__("verification violation")
        self.result = result


# ---------------------------------------------------------------------------
# instance I/O
# ---------------------------------------------------------------------------

def _vertex_lists(raw, key, offset):
    lists = raw.get(key, [])
    if not isinstance(lists, list):
        raise ValidationError(f'"{key}" must be a list of vertex lists')
    out = []
    for item in lists:
        if not isinstance(item, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in item):
            raise ValidationError(f'"{key}" entries must be lists of integers')
        out.append([v - offset for v in item])
    return out


def parse_instance(raw: dict, kind: str | None = None, one_based: bool = False):
    """Build a Hypergraph, Clutter or SimplicialComplex from its JSON form."""
    if not isinstance(raw, dict) or "vertices" not in raw:
        raise ValidationError('instance must be an object with a "vertices" count')
    n = raw["vertices"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ValidationError('"vertices" must be a non-negative integer')
    kind = kind or raw.get("kind") or ("complex" if "facets" in raw else "hypergraph")
    if kind not in KINDS:
        raise ValidationError(f"unknown kind {kind!r}")
    offset = 1 if (one_based or raw.get("one_based")) else 0
    if kind == "complex":
        return cx.SimplicialComplex.from_facets(n, _vertex_lists(raw, "facets", offset))
    edges = _vertex_lists(raw, "edges", offset)
    cls = Clutter if kind == "clutter" else Hypergraph
    return cls.from_edges(n, edges)


def read_instance(args):
    text = open(args.input).read() if args.input and args.input != "-" else sys.stdin.read()
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON: {exc}") from exc
    return parse_instance(raw, args.kind, args.one_based)


def digest(obj) -> str:
    data = json.dumps(obj.to_json(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(data.encode()).hexdigest()


def _as_clutter(obj) -> Clutter:
    """Minimal-edge clutter of a hypergraph, or minimal nonfaces of a complex."""
    if isinstance(obj, cx.SimplicialComplex):
        return cx.minimal_nonfaces(obj)
    return minimal_edges(obj)


def _as_hypergraph(obj) -> Hypergraph:
    return cx.minimal_nonfaces(obj) if isinstance(obj, cx.SimplicialComplex) else obj


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_psi(obj, args):
    if args.basis == "powersum":
        return {"basis": "powersum", "terms": symfun.psi_powersum(_as_clutter(obj)).to_json()}
    return {"basis": "monomial", "terms": symfun.psi(_as_hypergraph(obj)).to_json()}


def cmd_chrompoly(obj, args):
    if isinstance(obj, cx.SimplicialComplex):
        poly = cx.partition_polynomial(obj)
        return {"polynomial": "partition", "coefficients": poly.to_json()}
    return {"polynomial": "chromatic", "coefficients": symfun.chromatic_polynomial(obj).to_json()}


def cmd_zinv(obj, args):
    method = args.method or "deletion-contraction"
    if method not in hopf.ZETA_INVERSE_METHODS:
        raise ValidationError(f"unknown method {method!r}; choose from {hopf.ZETA_INVERSE_METHODS}")
    return {"method": method, "value": hopf.zeta_inverse(_as_hypergraph(obj), method)}


def cmd_antipode(obj, args):
    H = _as_hypergraph(obj)
    method = args.method or "recursive"
    if method == "both":
        a, b = hopf.antipode_recursive(H), hopf.antipode_takeuchi(H)
        result = {"method": "both", "agree": a == b, "terms": a.to_json()}
        if a != b:
            raise VerificationFailure(result)
        return result
    if method not in ("recursive", "takeuchi"):
        raise ValidationError(f"unknown antipode method {method!r}")
    return {"method": method, "terms": hopf.antipode(H, method).to_json()}


def cmd_euler(obj, args):
    if isinstance(obj, cx.SimplicialComplex):
        ok, witness = cx.is_eulerian_complex(obj)
        return {"euler_character": cx.euler_char_complex(obj), "eulerian": ok, "witness": witness}
    ok, witness = euler.is_eulerian(obj)
    return {"euler_character": hopf.euler_character(obj), "eulerian": ok, "witness": witness}


def cmd_classify(obj, args):
    C = _as_clutter(obj)
    return {"clutter": C.to_json(), "report": euler.classify(C).to_json()}


def cmd_nerve(obj, args):
    C = _as_clutter(obj)
    return {"complex": cx.nerve(C).to_json(), "vertex_edges": C.edge_lists()}


def cmd_ind(obj, args):
    if isinstance(obj, cx.SimplicialComplex):
        raise ValidationError("ind expects a hypergraph or clutter")
    return {"complex": cx.independence_complex(minimal_edges(obj)).to_json()}


def cmd_nonfaces(obj, args):
    if not isinstance(obj, cx.SimplicialComplex):
        raise ValidationError("nonfaces expects a complex")
    return {"clutter": cx.minimal_nonfaces(obj).to_json()}


def cmd_enumerate(args):
    checks = tuple(args.checks.split(",")) if args.checks else CHECKS
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise ValidationError(f"unknown checks {sorted(unknown)}; choose from {CHECKS}")
    report = run_verification(args.max_vertices, checks, sample=args.sample, seed=args.seed,
                              workers=args.workers)
    result = report.to_json()
    if not report.ok:
        raise VerificationFailure(result)
    return result


INSTANCE_COMMANDS = {
    "psi": cmd_psi,
    "chrompoly": cmd_chrompoly,
    "zinv": cmd_zinv,
    "antipode": cmd_antipode,
    "euler": cmd_euler,
    "classify": cmd_classify,
    "nerve": cmd_nerve,
    "ind": cmd_ind,
    "nonfaces": cmd_nonfaces,
}


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------

def _text(value, indent=0) -> list[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for k, v in value.items():
            nested = isinstance(v, dict) and v or (
                isinstance(v, list) and any(isinstance(x, (dict, list)) for x in v))
            if nested:
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
        return lines
    if isinstance(value, list):
        return [f"{pad}- {json.dumps(item, sort_keys=True)}" for item in value]
    return [f"{pad}{json.dumps(value)}"]


def emit(envelope: dict, fmt: str, stream=None):
    stream = stream or sys.stdout
    if fmt == "text":
        stream.write("\n".join(_text(envelope)) + "\n")
    else:
        stream.write(json.dumps(envelope, sort_keys=True, indent=2) + "\n")


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", help="instance JSON file (default: stdin)")
    common.add_argument("--kind", choices=KINDS, help="override the instance kind")
    common.add_argument("--one-based", action="store_true", help="vertices in the input start at 1")
    common.add_argument("--method", help="algorithm variant (zinv, antipode)")
    common.add_argument("--basis", choices=("monomial", "powersum"), default="monomial")
    common.add_argument("--output", choices=("json", "text"), default="json")
    common.add_argument("--timing", action="store_true", help="include wall time in the output")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="hyperhopf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in INSTANCE_COMMANDS:
        sub.add_parser(name, parents=[common])
    enum = sub.add_parser("enumerate", parents=[common],
                          help="verify the theorem implications over small clutters")
    enum.add_argument("--max-vertices", type=int, default=5)
    enum.add_argument("--checks", help=f"comma-separated subset of {','.join(CHECKS)}")
    enum.add_argument("--sample", type=int, default=0, help="random clutters per n (0 = exhaustive)")
    enum.add_argument("--seed", type=int, default=0)
    enum.add_argument("--workers", type=int, default=1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    start = time.perf_counter()
    envelope = {"command": args.command}
    code = EXIT_OK
    try:
        if args.command == "enumerate":
            envelope["input_digest"] = None
            envelope["result"] = cmd_enumerate(args)
        else:
            obj = read_instance(args)
            envelope["input_digest"] = digest(obj)
            envelope["result"] = INSTANCE_COMMANDS[args.command](obj, args)
    except VerificationFailure as exc:
        envelope["result"] = exc.result
        code = EXIT_VIOLATION
    except BoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (ValidationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    elapsed = time.perf_counter() - start
    if args.timing:
        envelope["wall_time"] = round(elapsed, 6)
    log.info("%s finished in %.3fs", args.command, elapsed)
    emit(envelope, args.output)
    return code


if __name__ == "__main__":
    sys.exit(main())
