"""Command-line front end: ``symtomo {shutter,transform,check,evolve}``.

Data go to ``--out`` (CSV, or JSON for reports) or to stdout. Whenever
``--out`` is given a manifest ``<stem>.manifest.json`` is written next to
it, listing the command, its parameters and a SHA-256 of every file
produced.

Exit codes: 0 success, 1 check ran but the state is not quantum,
2 domain error, 3 input/parse/I-O error.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import itertools
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__, evolution, shutter, states
from .core import DataError, DomainError, Grid1D, OpticalTomogram, PreconditionError, WignerField
from .quantumness import classify_state
from .transforms import (InverseRadonConfig, density_matrix_from_tomogram,
                         radon_forward, wigner_from_tomogram)

EXIT_OK, EXIT_CHECK_FAILED, EXIT_DOMAIN, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    """Unreadable or malformed command-line input."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def axis(text: str) -> np.ndarray:
    """A single number or a ``min:max:count`` range."""
    try:
        if ":" in text:
            return Grid1D.parse(text).points
        return np.array([float(text)])
    except ValueError as exc:
        raise InputError(f"bad number or range {text!r}: {exc}") from exc


def fmt(x) -> str:
    return "%.17g" % (float(x) + 0.0)


def csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) for v in row])
    return buf.getvalue()


def json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


class Output:
    """Collects output files and writes the manifest."""

    def __init__(self, args, command):
        self.out = Path(args.out) if getattr(args, "out", None) else None
        self.command = command
        self.params = {k: v for k, v in sorted(vars(args).items())
                       if k not in ("func", "out", "command")}
        self.files = {}

    def emit(self, text: str, path: Path | None = None):
        target = path if path is not None else self.out
        if target is None:
            sys.stdout.write(text)
            return
        data = text.encode("utf-8")
        target.write_bytes(data)
        self.files[str(target.name)] = hashlib.sha256(data).hexdigest()

    def sibling(self, suffix: str) -> Path | None:
        if self.out is None:
            return None
        return self.out.with_name(self.out.stem + suffix)

    def finish(self):
        if self.out is None:
            return
        manifest = {
            "command": self.command,
            "parameters": self.params,
            "toolkitVersion": __version__,
            "checksums": dict(sorted(self.files.items())),
        }
        self.sibling(".manifest.json").write_text(json_text(manifest), encoding="utf-8")


def _state(args):
    try:
        return states.parse_state(args.state)
    except DomainError:
        raise
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _config(args, tomogram=None) -> InverseRadonConfig:
    x_range = args.x_range
    if isinstance(tomogram, OpticalTomogram):
        # Stay inside the sampled X range of a file input.
        g = tomogram.x_grid
        x_range = min(x_range, -g.min, g.max)
    return InverseRadonConfig(cutoff=args.cutoff, regularization=args.eps,
                              n_x=args.n, n_mu=args.n, n_nu=args.n, x_range=x_range)


def _read_long_csv(path, names):
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            rows = list(csv.reader(fh))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if not rows or [c.strip() for c in rows[0]] != list(names):
        raise InputError(f"{path}: expected header {','.join(names)}")
    try:
        data = np.array([[float(c) for c in r] for r in rows[1:] if r], dtype=float)
    except ValueError as exc:
        raise InputError(f"{path}: non-numeric entry ({exc})") from exc
    if data.ndim != 2 or data.shape[1] != len(names) or len(data) < 4:
        raise InputError(f"{path}: expected {len(names)} numeric columns")
    a, b = np.unique(data[:, 0]), np.unique(data[:, 1])
    if len(a) * len(b) != len(data):
        raise InputError(f"{path}: samples do not form a complete grid")
    ga, gb = Grid1D(a[0], a[-1], len(a)), Grid1D(b[0], b[-1], len(b))
    if not (np.allclose(a, ga.points) and np.allclose(b, gb.points)):
        raise InputError(f"{path}: grid is not uniform")
    order = np.lexsort((data[:, 1], data[:, 0]))
    return ga, gb, data[order, 2].reshape(len(a), len(b))


def load_tomogram_file(path) -> OpticalTomogram:
    """Long-format CSV with header ``X,theta,value`` covering theta in [0, 2 pi]."""
    gx, gt, vals = _read_long_csv(path, ("X", "theta", "value"))
    try:
        return OpticalTomogram(gx, gt, vals, name=str(path))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc


def load_wigner_file(path) -> WignerField:
    """Long-format CSV with header ``q,p,value``."""
    gq, gp, vals = _read_long_csv(path, ("q", "p", "value"))
    return WignerField(gq, gp, vals)


def _tomogram_source(args):
    if args.input:
        return load_tomogram_file(args.input)
    return _state(args).tomogram


def cmd_shutter(args) -> int:
    params = shutter.ShutterParams(args.k, args.t)
    params.require_positive_time()
    out = Output(args, "shutter")
    if args.repr == "density":
        x = axis(args.x)
        text = csv_text(["x", "value"], zip(x, np.atleast_1d(shutter.density(x, params))))
    elif args.repr == "wigner":
        q, p = axis(args.q), axis(args.p)
        Q, P = np.meshgrid(q, p, indexing="ij")
        W = np.atleast_1d(shutter.wigner(Q.ravel(), P.ravel(), params))
        text = csv_text(["q", "p", "value"], zip(Q.ravel(), P.ravel(), W))
    else:
        pts = np.array(list(itertools.product(axis(args.X), axis(args.mu), axis(args.nu))))
        vals = np.atleast_1d(shutter.tomogram(pts[:, 0], pts[:, 1], pts[:, 2], params))
        text = csv_text(["X", "mu", "nu", "value"], np.column_stack([pts, vals]))
    out.emit(text)
    out.finish()
    return EXIT_OK


def cmd_transform(args) -> int:
    out = Output(args, "transform")
    if args.dir == "radon":
        if args.input:
            wigner = load_wigner_file(args.input)
        else:
            st = _state(args)
            wigner = st.wigner
        pts = list(itertools.product(axis(args.X), axis(args.mu), axis(args.nu)))
        rows = []
        for X, mu, nu in pts:
            if isinstance(wigner, WignerField):
                val, info = radon_forward(wigner, X, mu, nu, return_info=True)
                rows.append((X, mu, nu, val, float(info["truncated"])))
            else:
                rows.append((X, mu, nu, radon_forward(wigner, X, mu, nu,
                                                      half_width=args.half_width, n=args.line_n),
                             0.0))
        out.emit(csv_text(["X", "mu", "nu", "value", "truncated"], rows))
    elif args.dir == "iradon":
        tom = _tomogram_source(args)
        q, p = axis(args.q), axis(args.p)
        Q, P = np.meshgrid(q, p, indexing="ij")
        W = np.atleast_1d(wigner_from_tomogram(tom, _config(args, tom))(Q.ravel(), P.ravel()))
        out.emit(csv_text(["q", "p", "value"], zip(Q.ravel(), P.ravel(), W)))
    else:
        tom = _tomogram_source(args)
        try:
            grid = Grid1D.parse(args.xgrid)
        except ValueError as exc:
            raise InputError(f"bad --xgrid {args.xgrid!r}: {exc}") from exc
        rho = density_matrix_from_tomogram(tom, grid, _config(args, tom))
        report = {
            "trace": rho.trace(),
            "hermiticityDefect": rho.hermiticity_defect(),
            "minEigenvalue": rho.min_eigenvalue(),
            "purity": rho.purity(),
            "grid": args.xgrid,
        }
        out.emit(json_text(report))
        if args.matrix_out:
            x = grid.points
            rows = [(x[i], x[j], rho.values[i, j].real, rho.values[i, j].imag)
                    for i in range(grid.n) for j in range(grid.n)]
            out.emit(csv_text(["x", "x2", "re", "im"], rows), Path(args.matrix_out))
    out.finish()
    return EXIT_OK


def cmd_check(args) -> int:
    tom = _tomogram_source(args)
    try:
        xgrid = Grid1D.parse(args.xgrid)
        scan = Grid1D.parse(args.scan)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    x_range = tom.x_grid if isinstance(tom, OpticalTomogram) else None
    report = classify_state(tom, _config(args, tom), xgrid, args.tolerance,
                            scan=scan, x_range=x_range, theta=args.theta)
    out = Output(args, "check")
    out.emit(json_text({_camel(k): v for k, v in report.as_dict().items()}))
    out.finish()
    return EXIT_OK if report.verdict in ("quantum", "both") else EXIT_CHECK_FAILED


def _camel(name: str) -> str:
    head, *rest = name.split("_")
    return head + "".join(part.capitalize() for part in rest)


def _probe(text):
    try:
        fields = dict(item.split("=", 1) for item in text.split(","))
        return float(fields["X"]), float(fields["mu"]), float(fields["nu"])
    except (ValueError, KeyError) as exc:
        raise InputError(f"bad probe {text!r}; expected X=..,mu=..,nu=..") from exc


def cmd_evolve(args) -> int:
    if args.kind not in evolution.KINDS:
        raise DomainError(f"unsupported dynamics {args.kind!r}; "
                          f"expected one of {', '.join(evolution.KINDS)}")
    tom = evolution.evolve(_tomogram_source(args), args.kind, args.t)
    if args.probe:
        pts = np.array([_probe(p) for p in args.probe])
    else:
        pts = np.array(list(itertools.product(axis(args.X), axis(args.mu), axis(args.nu))))
    vals = np.atleast_1d(tom(pts[:, 0], pts[:, 1], pts[:, 2]))
    out = Output(args, "evolve")
    out.emit(csv_text(["X", "mu", "nu", "value"], np.column_stack([pts, vals])))
    out.finish()
    return EXIT_OK


def _add_reconstruction_flags(p):
    p.add_argument("--cutoff", type=float, default=8.0, help="radius R in the (mu, nu) plane")
    p.add_argument("--eps", type=float, default=1e-4, help="damping exp(-eps (mu^2+nu^2))")
    p.add_argument("--n", type=int, default=256, help="points per quadrature axis")
    p.add_argument("--x-range", type=float, default=10.0,
                   help="X window half-width, in units of hypot(mu, nu)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="symtomo", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("shutter", help="Moshinsky shutter density, Wigner function or tomogram")
    p.add_argument("--k", type=float, default=1.0)
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--repr", choices=("density", "wigner", "tomogram"), default="density")
    p.add_argument("--x", default="-10:10:201")
    p.add_argument("--q", default="-5:5:101")
    p.add_argument("--p", default="-3:3:61")
    p.add_argument("--X", default="-5:5:101")
    p.add_argument("--mu", default="1")
    p.add_argument("--nu", default="0")
    p.add_argument("--out")
    p.set_defaults(func=cmd_shutter)

    p = sub.add_parser("transform", help="Radon transform, inverse, or density matrix")
    p.add_argument("--dir", choices=("radon", "iradon", "rho"), required=True)
    src = p.add_mutually_exclusive_group()
    src.add_argument("--state", default="ground")
    src.add_argument("--input", help="CSV: q,p,value for radon; X,theta,value otherwise")
    p.add_argument("--X", default="0")
    p.add_argument("--mu", default="1")
    p.add_argument("--nu", default="0")
    p.add_argument("--q", default="0")
    p.add_argument("--p", default="0")
    p.add_argument("--xgrid", default="-5:5:64")
    p.add_argument("--half-width", type=float, default=10.0)
    p.add_argument("--line-n", type=int, default=2001)
    p.add_argument("--matrix-out")
    _add_reconstruction_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("check", help="quantumness report for a state")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--state", default="ground")
    src.add_argument("--input")
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--tolerance", type=float, default=1e-6)
    p.add_argument("--xgrid", default="-6:6:64")
    p.add_argument("--scan", default="-5:5:41")
    _add_reconstruction_flags(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("evolve", help="evolve a tomogram and probe it")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--state", default="ground")
    src.add_argument("--input")
    p.add_argument("--kind", default="free")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--probe", action="append")
    p.add_argument("--X", default="0")
    p.add_argument("--mu", default="1")
    p.add_argument("--nu", default="0")
    p.add_argument("--out")
    p.set_defaults(func=cmd_evolve)
    return parser


def _join_negative_values(argv):
    # argparse mistakes ranges such as "-10:30:401" for option flags.
    out = []
    for tok in argv:
        if (out and out[-1].startswith("--") and "=" not in out[-1]
                and len(tok) > 1 and tok[0] == "-" and (tok[1].isdigit() or tok[1] == ".")):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(_join_negative_values(argv))
    except SystemExit as exc:  # usage errors, --help, --version
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    try:
        return args.func(args)
    except (DomainError, PreconditionError) as exc:
        print(f"symtomo: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (InputError, DataError, OSError) as exc:
        print(f"symtomo: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        # Remaining argument validation, e.g. a non-positive quadrature size.
        print(f"symtomo: invalid argument: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
