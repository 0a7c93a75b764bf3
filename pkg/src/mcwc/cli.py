"""Command-line front end.

Every file the tool writes starts with a manifest comment (subcommand, full
parameter set, seeds, input digests, tool version) so outputs are
reproducible: identical invocations produce byte-identical files.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
consistency violation.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from . import __version__
from .asymptotics import DomainError, curve_names, emit_curves, write_curves_csv
from .bounds import (
    DEFAULT_NODE_BUDGET,
    DEFAULT_VERTEX_CAP,
    TABLE_NODE_BUDGET,
    TABLE_VERTEX_CAP,
    BoundTable,
    ConsistencyError,
    ReferenceStore,
    SearchSpaceError,
    evaluate_cell,
    table_build,
)
from .codes import (
    BinaryCode,
    CodeError,
    QaryCode,
    WeightProfile,
    code_read_path,
    code_write,
    verify_code,
)
from .constructions import (
    ConstructionError,
    append_extend,
    builtin_code,
    builtin_names,
    complement_extend,
    concatenate,
    pseudo_product,
    qary_expand,
    reed_solomon,
)
from .designs import (
    DesignError,
    affine_plane,
    design_read_path,
    design_to_mcwc,
    design_write,
    one_factorization,
    verify_design,
)
from .gf import FieldError, field_for_order
from .pufsim import (
    ModelError,
    device_load,
    device_new,
    device_save,
    reliability_sweep,
)

USAGE_ERRORS = (
    CodeError,
    ConstructionError,
    DesignError,
    FieldError,
    ModelError,
    DomainError,
    SearchSpaceError,
)


class VerificationFailure(Exception):
    pass


def _sha256(path: str) -> str:
    h = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(65536), b""):
            h.update(chunk)
    return h.hexdigest()


def _manifest(args: argparse.Namespace, inputs: list[str]) -> str:
    # The output path is where the artifact lands, not part of what it is.
    params = {
        k: v
        for k, v in sorted(vars(args).items())
        if k not in ("func", "out") and v is not None
    }
    payload = {
        "tool": f"mcwc {__version__}",
        "command": args.command,
        "params": params,
        "inputs": {path: _sha256(path) for path in sorted(inputs)},
    }
    return "manifest: " + json.dumps(payload, sort_keys=True)


def _write_output(out: str | None, render, manifest: str) -> None:
    """render(f) writes the payload; manifest goes first as a comment."""
    if out is None:
        sys.stdout.write(f"# {manifest}\n")
        render(sys.stdout)
    else:
        with open(out, "w") as f:
            f.write(f"# {manifest}\n")
            render(f)


def _resolve_binary(spec: str, inputs: list[str]) -> BinaryCode:
    if spec.startswith("builtin:"):
        return builtin_code(spec[len("builtin:"):])
    inputs.append(spec)
    code = code_read_path(spec)
    if not isinstance(code, BinaryCode):
        raise CodeError(f"{spec} is not a binary code file")
    return code


def _resolve_qary(spec: str, inputs: list[str]) -> QaryCode:
    inputs.append(spec)
    code = code_read_path(spec)
    if not isinstance(code, QaryCode):
        raise CodeError(f"{spec} is not a q-ary code file")
    return code


# ---------- construct ----------

def _cmd_construct(args) -> int:
    inputs: list[str] = []
    method = args.method
    if method == "concat":
        result = concatenate(_resolve_qary(args.outer, inputs), _resolve_binary(args.inner, inputs))
    elif method == "pseudo-product":
        result = pseudo_product(_resolve_binary(args.cwc, inputs), _resolve_binary(args.sys, inputs))
    elif method == "complement":
        result = complement_extend(_resolve_binary(args.code, inputs))
    elif method == "append":
        result = append_extend(args.k, _resolve_binary(args.cwc, inputs))
    elif method == "qary-expand":
        result = qary_expand(_resolve_qary(args.code, inputs), args.w)
    elif method == "rs":
        rs = reed_solomon(field_for_order(args.q), args.len, args.d)
        if args.expand:
            result = qary_expand(rs, args.w)
        else:
            manifest = _manifest(args, inputs)
            _write_output(args.out, lambda f: code_write(f, rs), manifest)
            print(f"method=rs q={args.q} len={args.len} d={args.d} size={len(rs.words)}")
            return 0
    elif method == "design":
        if args.file:
            design = design_read_path(args.file)
            inputs.append(args.file)
        elif args.family == "affine":
            design = affine_plane(args.q)
        elif args.family == "one-factor":
            design = one_factorization(args.v)
        else:
            raise DesignError("need --file or --family with its parameter")
        result = design_to_mcwc(design)
    else:  # pragma: no cover - argparse restricts choices
        raise ConstructionError(f"unknown method {method}")

    code = result.code
    manifest = _manifest(args, inputs)
    comments = [f"provenance: {result.provenance}"]
    _write_output(args.out, lambda f: code_write(f, code, comments), manifest)
    md = result.report.min_distance
    print(
        f"method={method} size={len(code.words)} length={code.length} "
        f"profile={code.profile.describe() if code.profile else 'none'} "
        f"guaranteed_d={result.guaranteed_distance} verified_min_d={md}"
    )
    return 0


# ---------- verify ----------

def _cmd_verify(args) -> int:
    inputs = [args.file]
    code = code_read_path(args.file)
    if args.d is not None or args.profile is not None:
        claimed = args.d if args.d is not None else code.claimed_distance
        if isinstance(code, BinaryCode):
            profile = WeightProfile.parse(args.profile) if args.profile else code.profile
            code = BinaryCode(code.length, code.words, claimed, profile)
        else:
            code = QaryCode(code.q, code.length, code.words, claimed)
    report = verify_code(code)
    payload = {
        "file": args.file,
        "size": len(code.words),
        "claimed_distance": code.claimed_distance,
        "min_distance": "inf" if report.min_distance == float("inf") else int(report.min_distance),
        "profile_violations": list(report.profile_violations),
        "closest_pair": report.closest_pair,
        "passed": report.passed,
    }
    print(json.dumps(payload, sort_keys=True))
    if not report.passed:
        raise VerificationFailure(report.summary())
    return 0


# ---------- design ----------

def _cmd_design(args) -> int:
    if args.action == "verify":
        design = design_read_path(args.file)
        verify_design(design, require_complete=not args.partial)
        print(
            f"design v={design.v} k={design.k} t={design.t} "
            f"classes={len(design.classes)} expected_classes={design.expected_class_count()} ok"
        )
        return 0
    # make
    if args.family == "affine":
        design = affine_plane(args.q)
    elif args.family == "one-factor":
        design = one_factorization(args.v)
    else:
        raise DesignError("choose --family affine (with --q) or one-factor (with --v)")
    manifest = _manifest(args, [])
    _write_output(args.out, lambda f: design_write(f, design), manifest)
    print(f"design v={design.v} k={design.k} t={design.t} classes={len(design.classes)}")
    return 0


# ---------- bound / table ----------

def _references(args, inputs: list[str]) -> ReferenceStore | None:
    if getattr(args, "refs", None):
        inputs.append(args.refs)
        with open(args.refs) as f:
            return ReferenceStore.from_csv(f.read())
    return None


def _cmd_bound(args) -> int:
    inputs: list[str] = []
    table = BoundTable(_references(args, inputs))
    budget = args.budget if args.budget is not None else DEFAULT_NODE_BUDGET
    cap = args.vertex_cap if args.vertex_cap is not None else DEFAULT_VERTEX_CAP
    evaluate_cell(table, args.m, args.n, args.d, args.w, node_budget=budget, vertex_cap=cap)
    cell = (args.m, args.n, args.d, args.w)
    lo, lo_prov = table.best_lower(cell)
    hi, hi_prov = table.best_upper(cell)
    hi_txt = "inf" if hi == float("inf") else str(int(hi))
    status = "exact" if table.exact_value(cell) is not None else "range"
    print(f"lower={int(lo)} upper={hi_txt} {status}")
    print(f"lower_provenance={lo_prov}")
    print(f"upper_provenance={hi_prov}")
    if args.exact and status != "exact":
        raise SearchSpaceError("exact value not established within budget")
    return 0


def _parse_range(spec: str) -> list[int]:
    if ".." in spec:
        lo, hi = spec.split("..")
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in spec.split(",")]


def _cmd_table(args) -> int:
    inputs: list[str] = []
    refs = _references(args, inputs)
    budget = args.budget if args.budget is not None else TABLE_NODE_BUDGET
    cap = args.vertex_cap if args.vertex_cap is not None else TABLE_VERTEX_CAP
    table = table_build(
        _parse_range(args.m),
        _parse_range(args.n),
        _parse_range(args.w),
        _parse_range(args.d) if args.d else None,
        references=refs,
        node_budget=budget,
        vertex_cap=cap,
    )
    manifest = _manifest(args, inputs)
    _write_output(args.out, lambda f: table.write_csv(f), manifest)
    print(f"cells={len(table.cells())}")
    return 0


# ---------- curves ----------

def _cmd_curves(args) -> int:
    names = args.curves.split(",") if args.curves else None
    steps = int(round((args.grid_end - args.grid_start) / args.grid_step))
    grid = [args.grid_start + i * args.grid_step for i in range(steps + 1)]
    grid = [t for t in grid if t <= args.grid_end + 1e-12]
    rows = emit_curves(grid, names)
    manifest = _manifest(args, [])
    _write_output(args.out, lambda f: write_curves_csv(f, rows), manifest)
    print(f"rows={len(rows)} curves={len(set(r[0] for r in rows))}")
    return 0


# ---------- puf-sim ----------

def _cmd_puf_sim(args) -> int:
    inputs = [args.code]
    code = code_read_path(args.code)
    if not isinstance(code, BinaryCode) or code.profile is None:
        raise CodeError("puf-sim needs a binary code file with a weight profile")
    report = verify_code(code)
    if not report.passed:
        raise VerificationFailure(f"code fails its own claims: {report.summary()}")

    m = code.profile.m
    n = code.profile.parts[0][0]
    if (args.m is not None and args.m != m) or (args.n is not None and args.n != n):
        raise ModelError(
            f"requested grid {args.m} x {args.n} does not match the code profile "
            f"({m} x {n})"
        )
    if args.load_device:
        dev = device_load(args.load_device)
        inputs.append(args.load_device)
    else:
        dev = device_new(
            m, n, (args.mu0, args.mu1), s_eps=args.s_eps, seed=args.seed,
            noise_sigma=args.noise,
        )
    if args.save_device:
        device_save(args.save_device, dev)

    sweep = reliability_sweep(dev, code, args.noise, args.trials, seed=args.seed)

    def render(f):
        for dist, mean in sweep.bucket_means.items():
            count = sum(1 for p in sweep.pairs if p.distance == dist and p.usable)
            f.write(f"# bucket distance={dist} pairs={count} mean_flip_rate={mean:.6g}\n")
        f.write("pair_index,distance,flip_rate\n")
        for p in sweep.pairs:
            rate = "nan" if not p.usable else f"{p.flip_rate:.6g}"
            f.write(f"{p.pair_index},{p.distance},{rate}\n")

    _write_output(args.out, render, _manifest(args, inputs))
    buckets = " ".join(f"{d}:{r:.4g}" for d, r in sweep.bucket_means.items())
    print(f"pairs={len(sweep.pairs)} trials={args.trials} buckets[{buckets}]")
    return 0


# ---------- parser ----------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mcwc",
        description="Constructions, bounds, rate curves and a loop-PUF simulator "
        "for multiply constant-weight codes.",
    )
    parser.add_argument("--version", action="version", version=f"mcwc {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--seed", type=int, default=0, help="random seed")
    common.add_argument("--budget", type=int, help="search node budget")
    common.add_argument("--threads", type=int, default=1,
                        help="accepted for compatibility; results are schedule-independent")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="build and verify a code")
    ps = p.add_subparsers(dest="method", required=True)
    c = ps.add_parser("concat", parents=[common])
    c.add_argument("--outer", required=True, help="q-ary outer code file")
    c.add_argument("--inner", required=True, help=f"inner code: file or builtin:<{'|'.join(builtin_names())}>")
    c = ps.add_parser("pseudo-product", parents=[common])
    c.add_argument("--cwc", required=True, help="systematic constant-weight ingredient")
    c.add_argument("--sys", required=True, help="systematic binary ingredient")
    c = ps.add_parser("complement", parents=[common])
    c.add_argument("--code", required=True, help="systematic binary ingredient")
    c = ps.add_parser("append", parents=[common])
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--cwc", required=True)
    c = ps.add_parser("qary-expand", parents=[common])
    c.add_argument("--code", required=True, help="q-ary code file")
    c.add_argument("--w", type=int, required=True, help="block weight")
    c = ps.add_parser("rs", parents=[common])
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--len", type=int, required=True)
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--expand", action="store_true", help="also apply q-ary expansion")
    c.add_argument("--w", type=int, default=1)
    c = ps.add_parser("design", parents=[common])
    c.add_argument("--family", choices=["affine", "one-factor"])
    c.add_argument("--q", type=int, help="affine plane order")
    c.add_argument("--v", type=int, help="one-factorization point count")
    c.add_argument("--file", help="load an externally found design")
    for name, action in ps.choices.items():
        action.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="verify a code file")
    p.add_argument("file")
    p.add_argument("--d", type=int, help="override the claimed distance")
    p.add_argument("--profile", help="override the profile, e.g. 4:2,4:2")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("design", parents=[common], help="generate or verify designs")
    p.add_argument("action", choices=["make", "verify"])
    p.add_argument("file", nargs="?", help="design file (for verify)")
    p.add_argument("--family", choices=["affine", "one-factor"])
    p.add_argument("--q", type=int)
    p.add_argument("--v", type=int)
    p.add_argument("--partial", action="store_true",
                   help="accept a partial resolution (t-subsets covered at most once)")
    p.set_defaults(func=_cmd_design)

    p = sub.add_parser("bound", parents=[common], help="bounds for one cell")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--exact", action="store_true", help="fail unless the value is pinned down")
    p.add_argument("--vertex-cap", type=int)
    p.add_argument("--refs", help="reference-value CSV to ingest")
    p.set_defaults(func=_cmd_bound)

    p = sub.add_parser("table", parents=[common], help="tabulate bounds over ranges")
    p.add_argument("--m", required=True, help="range, e.g. 1..3 or 2")
    p.add_argument("--n", required=True)
    p.add_argument("--w", required=True)
    p.add_argument("--d", help="optional distance range; default: all even d <= m*n")
    p.add_argument("--vertex-cap", type=int)
    p.add_argument("--refs")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("curves", parents=[common], help="asymptotic rate curves")
    p.add_argument("--grid-start", type=float, default=0.001)
    p.add_argument("--grid-end", type=float, default=0.499)
    p.add_argument("--grid-step", type=float, default=0.001)
    p.add_argument("--curves", help=f"comma list from: {','.join(curve_names())}")
    p.set_defaults(func=_cmd_curves)

    p = sub.add_parser("puf-sim", parents=[common], help="loop-PUF reliability simulation")
    p.add_argument("--code", required=True, help="verified MCWC file")
    p.add_argument("--m", type=int, help="expected device rows (checked against the code)")
    p.add_argument("--n", type=int, help="expected device columns (checked against the code)")
    p.add_argument("--s-eps", type=float, default=1e-3, help="element offset scale")
    p.add_argument("--noise", type=float, default=1e-3, help="measurement noise scale")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--mu0", type=float, default=1.0)
    p.add_argument("--mu1", type=float, default=1.05)
    p.add_argument("--save-device")
    p.add_argument("--load-device")
    p.set_defaults(func=_cmd_puf_sim)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except VerificationFailure as exc:
        print(f"error: verification-failure: {exc}", file=sys.stderr)
        return 1
    except ConsistencyError as exc:
        print(f"error: consistency-violation: {exc}", file=sys.stderr)
        return 3
    except USAGE_ERRORS as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
