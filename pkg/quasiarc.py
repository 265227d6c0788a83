"""
Quasi-Arc Complex Toolkit - Command Line
Enumerates arcs and facets, builds flip graphs and explicit shellings, and
issues sphere certificates for polygon:m, cylinder:n and mobius:n.

Stdout carries exactly one document (JSON, DOT or CSV); diagnostics and the
run manifest go to stderr.

Exit codes: 0 ok, 1 verification failed, 2 bad input, 3 size cap exceeded.
"""

import argparse
import json
import logging
import sys
from pathlib import Path

import pandas as pd

from src import __version__
from src.complex import build_complex, certify_sphere
from src.config import Settings, load_environment
from src.construct import shell_cylinder, shell_mobius, shell_polygon
from src.dyck import dyck_table, dblock_facets, to_dyck
from src.errors import CapExceededError, InputError, QuasiArcError
from src.flips import flip_graph
from src.shelling import ShellingOrder, brute_force_shelling, verify_shelling_mutation, verify_shelling_topological
from src.state import RunLogHandler, RunManifest, RunStore
from src.surface import Surface, SurfaceKind, catalan, census, expected_facet_count, parse_facet

logger = logging.getLogger("quasiarc")

FORMATS = {
    "enum": ("json", "csv"),
    "facets": ("json", "csv"),
    "flipgraph": ("json", "dot"),
    "shell": ("json", "csv"),
    "certify": ("json",),
    "dyck": ("json", "csv"),
    "verify": ("json",),
}


class VerificationFailed(Exception):
    """Raised by a command whose output is complete but whose check failed."""

    def __init__(self, document: str, reason: dict):
        super().__init__(reason.get("reason", "verification failed"))
        self.document = document
        self.reason = reason


# ── Helpers ───────────────────────────────────────────────────────────────

def _dumps(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def _frame_csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, lineterminator="\n")


def _check_caps(surface: Surface, settings: Settings, max_n: int):
    if surface.is_mobius and surface.n > max_n:
        raise CapExceededError(f"{surface}: n exceeds the cap {max_n} (raise with --max-n)")
    expected = expected_facet_count(surface)
    if expected > settings.max_facets:
        raise CapExceededError(f"{surface}: {expected} facets exceed QUASIARC_MAX_FACETS={settings.max_facets}")


def construct_order(surface: Surface) -> ShellingOrder:
    if surface.kind is SurfaceKind.POLYGON:
        return shell_polygon(surface.n)
    if surface.kind is SurfaceKind.CYLINDER:
        return shell_cylinder(surface.n)
    return shell_mobius(surface.n)


def _verify_order(order: ShellingOrder, manifest: RunManifest) -> dict | None:
    """Run both verifiers; returns the failure reason, or None."""
    mutation = verify_shelling_mutation(order)
    manifest.verdicts["mutation"] = mutation.to_dict()
    if not mutation:
        return {"verifier": "mutation", **mutation.to_dict()}
    topological = verify_shelling_topological(order)
    manifest.verdicts["topological"] = topological.to_dict()
    if not topological:
        return {"verifier": "topological", **topological.to_dict()}
    return None


def _covers(order: ShellingOrder, surface: Surface, manifest: RunManifest) -> dict | None:
    cx = build_complex(surface)
    manifest.counts["facets"] = len(cx)
    if {frozenset(f) for f in order.facets} != {frozenset(f) for f in cx.facets} or len(order) != len(cx):
        return {"verifier": "coverage", "ok": False,
                "reason": f"order lists {len(order)} facets, the complex has {len(cx)}"}
    return None


# ── Commands ──────────────────────────────────────────────────────────────

def cmd_enum(args, settings, manifest) -> str:
    arcs = census(args.surface)
    manifest.counts["arcs"] = len(arcs)
    if args.format == "csv":
        rows = [{"arc": str(a), "kind": a.kind.name.lower(), "i": a.i, "j": a.j} for a in arcs]
        return _frame_csv(pd.DataFrame(rows, columns=["arc", "kind", "i", "j"]))
    return _dumps({"surface": str(args.surface), "count": len(arcs), "arcs": arcs.to_text()})


def cmd_facets(args, settings, manifest) -> str:
    _check_caps(args.surface, settings, args.max_n)
    if args.seed_facet:
        seed = parse_facet(args.surface, args.seed_facet)
        cx = build_complex(args.surface, method="flip", seed=seed)
    else:
        cx = build_complex(args.surface)
    manifest.counts.update(arcs=len(cx.ground), facets=len(cx))
    if args.format == "csv":
        rows = [{"index": idx, "facet": ",".join(map(str, f))} for idx, f in enumerate(cx.facets)]
        return _frame_csv(pd.DataFrame(rows, columns=["index", "facet"]))
    return _dumps({"surface": str(args.surface), "count": len(cx),
                   "facets": [[str(a) for a in f] for f in cx.facets]})


def cmd_flipgraph(args, settings, manifest) -> str:
    _check_caps(args.surface, settings, args.max_n)
    graph = flip_graph(args.surface)
    manifest.counts.update(facets=len(graph.facets), edges=graph.graph.number_of_edges())
    manifest.verdicts.update(regular=graph.is_regular(), connected=graph.is_connected())
    if args.format == "dot":
        return graph.to_dot()
    return _dumps(graph.to_dict())


def cmd_shell(args, settings, manifest) -> str:
    _check_caps(args.surface, settings, args.max_n)
    order = construct_order(args.surface)
    manifest.counts["order"] = len(order)
    if args.format == "csv":
        rows = [{"index": idx, "facet": ",".join(map(str, f)), "provenance": p}
                for idx, (f, p) in enumerate(zip(order.facets, order.provenance))]
        document = _frame_csv(pd.DataFrame(rows, columns=["index", "facet", "provenance"]))
    else:
        document = _dumps(order.to_dict())
    if args.verify:
        failure = _covers(order, args.surface, manifest) or _verify_order(order, manifest)
        if failure:
            raise VerificationFailed(document, failure)
    return document


def cmd_certify(args, settings, manifest) -> str:
    _check_caps(args.surface, settings, args.max_n)
    cx = build_complex(args.surface)
    order = construct_order(args.surface)
    cert = certify_sphere(cx, order, topological=args.topological, max_faces=settings.max_faces)
    manifest.counts.update(arcs=len(cx.ground), facets=len(cx))
    manifest.verdicts["certificate"] = cert.granted
    document = _dumps(cert.to_dict())
    if not cert.granted:
        raise VerificationFailed(document, {"verifier": "certificate", "ok": False,
                                            "k": cert.failing_index, "reason": cert.failing_reason
                                            or "complex is not a pure pseudo-manifold"})
    return document


def cmd_dyck(args, settings, manifest) -> str:
    n = args.n
    manifest.surface = f"mobius:{n}"
    if n % 2 == 0 and n >= 2 and 2 * catalan(n // 2 - 1) > settings.max_facets:
        raise CapExceededError(f"D-block of mobius:{n} exceeds QUASIARC_MAX_FACETS={settings.max_facets}")
    if args.format == "csv":
        table = dyck_table(n)
        manifest.counts["facets"] = len(table)
        return _frame_csv(table)
    facets = dblock_facets(n)
    manifest.counts["facets"] = len(facets)
    pairs = []
    for facet in facets:
        path = to_dyck(facet)
        pairs.append({"facet": [str(a) for a in facet], "half": path.half, "path": path.steps})
    return _dumps({"n": n, "semilength": n // 2 - 1, "count": len(pairs), "pairs": pairs})


def cmd_verify(args, settings, manifest) -> str:
    path = Path(args.file)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise InputError(f"cannot read order file {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise InputError(f"order file {path} is not JSON: {e}") from e
    order = ShellingOrder.from_dict(data, args.surface)
    _check_caps(order.surface, settings, args.max_n)
    manifest.surface = str(order.surface)
    manifest.counts["order"] = len(order)
    failure = _covers(order, order.surface, manifest) or _verify_order(order, manifest)
    result = {"surface": str(order.surface), "ok": failure is None, "verdicts": manifest.verdicts}
    if failure:
        result["failure"] = failure
        if len(order) <= settings.brute_cap:
            result["shellable"] = brute_force_shelling(order.facets, cap=settings.brute_cap) is not None
        raise VerificationFailed(_dumps(result), failure)
    return _dumps(result)


COMMANDS = {
    "enum": cmd_enum,
    "facets": cmd_facets,
    "flipgraph": cmd_flipgraph,
    "shell": cmd_shell,
    "certify": cmd_certify,
    "dyck": cmd_dyck,
    "verify": cmd_verify,
}


# ── Parser ────────────────────────────────────────────────────────────────

def _surface_arg(text: str) -> Surface:
    try:
        return Surface.parse(text)
    except QuasiArcError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the document here instead of stdout")
    common.add_argument("--format", default="json", choices=["json", "dot", "csv"])
    common.add_argument("--max-n", type=int, default=None, help="largest n accepted for mobius:n")
    common.add_argument("--db", default=None, help="SQLite run ledger (overrides QUASIARC_DB)")
    common.add_argument("--log-level", default=None, help="logging level (overrides QUASIARC_LOG_LEVEL)")

    parser = argparse.ArgumentParser(prog="quasiarc", description="Quasi-arc complex toolkit")
    parser.add_argument("--version", action="version", version=f"quasiarc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enum", parents=[common], help="list the arcs of a surface")
    p.add_argument("surface", type=_surface_arg)

    p = sub.add_parser("facets", parents=[common], help="list the facets of the complex")
    p.add_argument("surface", type=_surface_arg)
    p.add_argument("--seed-facet", default=None, help='enumerate by flips from e.g. "C(1,1),P(1,2)"')

    p = sub.add_parser("flipgraph", parents=[common], help="flip graph as JSON or DOT")
    p.add_argument("surface", type=_surface_arg)
    p.add_argument("--dot", dest="format", action="store_const", const="dot", default="json")

    p = sub.add_parser("shell", parents=[common], help="explicit shelling order")
    p.add_argument("surface", type=_surface_arg)
    p.add_argument("--verify", action="store_true", help="run both shelling verifiers")

    p = sub.add_parser("certify", parents=[common], help="sphere certificate")
    p.add_argument("surface", type=_surface_arg)
    p.add_argument("--topological", action="store_true", help="also run the face-level verifier")

    p = sub.add_parser("dyck", parents=[common], help="D-block / Dyck path pairs")
    p.add_argument("n", type=int)

    p = sub.add_parser("verify", parents=[common], help="check an order file")
    p.add_argument("file")
    p.add_argument("--surface", type=_surface_arg, default=None)
    return parser


def _setup_logging(level: str, store: RunStore | None):
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if store is not None:
        handlers.append(RunLogHandler(store))
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format='%(asctime)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )


def _emit(document: str, out: str | None):
    if out:
        try:
            Path(out).write_text(document, encoding="utf-8")
        except OSError as e:
            raise InputError(f"cannot write {out}: {e}") from e
    else:
        sys.stdout.write(document)


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    load_environment(Path(__file__).parent)
    args = build_parser().parse_args(argv)
    manifest = RunManifest(command=["quasiarc"] + argv)
    store = None
    try:
        settings = Settings.from_env()
        store = RunStore(args.db or settings.db_path) if (args.db or settings.db_path) else None
        _setup_logging(args.log_level or settings.log_level, store)
        args.max_n = args.max_n if args.max_n is not None else settings.max_mobius_n
        if args.format not in FORMATS[args.command]:
            raise InputError(f"{args.command} cannot emit {args.format}; choose from {FORMATS[args.command]}")
        manifest.surface = str(getattr(args, "surface", None) or "") or None
        logger.info(f"[CLI] {' '.join(manifest.command)}")
        _emit(COMMANDS[args.command](args, settings, manifest), args.out)
        code = 0
    except VerificationFailed as e:
        sys.stderr.write(json.dumps(e.reason) + "\n")
        code = 1
        try:
            _emit(e.document, args.out)
        except InputError as err:
            sys.stderr.write(json.dumps({"error": type(err).__name__, "message": str(err)}) + "\n")
            code = err.exit_code
    except QuasiArcError as e:
        sys.stderr.write(json.dumps({"error": type(e).__name__, "message": str(e)}) + "\n")
        code = e.exit_code
    manifest.stop()
    sys.stderr.write(f"[MANIFEST] {manifest.to_json()}\n")
    if store is not None:
        store.save_manifest(manifest)
        store.close()
    return code


if __name__ == "__main__":
    sys.exit(main())
