"""
Command line interface.

Subcommands::

    fundtrig grid    --grid 0 --n 9
    fundtrig basis   --grid 0 --n 9 --basis interp-spline --r 1 2 3 --index 5
    fundtrig fit     --grid 1 --n 9 --basis ls-poly --q 2 --func square
    fundtrig gram    --grid 0 --n 9 --basis interp-poly --inner continuous
    fundtrig figures --out figures/

Curve data is written as CSV (header ``t,<series>...``, 17 significant
digits) or JSON (one array per column) to ``--out`` or standard output.
"""

import argparse
import itertools
import json
import os
import sys
from dataclasses import dataclass, replace

import numpy as np

from . import approximants as ap
from .errors import FundTrigError
from .grids import TWO_PI, GridKind, UniformGrid, make_grid, wrap_angle
from .kernels import DEFAULT_TRUNCATION, SplineShape
from .validation import DEFAULT_QUADRATURE_POINTS, continuous_gram, discrete_gram

BASES = ("interp-poly", "interp-spline", "ls-poly", "ls-spline")
DEFAULT_POINTS = 721


def _square(t):
    w = wrap_angle(np.asarray(t, dtype=float))
    out = np.where(w < np.pi, 1.0, -1.0)
    # sign(sin t) is 0 where sin t vanishes; sin(pi) is not exactly 0 in floating point
    at_zero = np.isclose(w, 0.0, atol=1e-12) | np.isclose(w, np.pi, atol=1e-12) | np.isclose(w, TWO_PI, atol=1e-12)
    return np.where(at_zero, 0.0, out)


def _saw(t):
    return (wrap_angle(np.asarray(t, dtype=float)) - np.pi) / np.pi


FUNCTIONS = {
    "const1": lambda t: np.ones_like(np.asarray(t, dtype=float)),
    "sin1": np.sin,
    "sin2": lambda t: np.sin(2 * np.asarray(t)),
    "cos2": lambda t: np.cos(2 * np.asarray(t)),
    "mix": lambda t: np.sin(2 * np.asarray(t)) + 0.5 * np.cos(3 * np.asarray(t)),
    "square": _square,
    "saw": _saw,
}


@dataclass(frozen=True)
class RunConfig:
    grid: int = 0
    n: int = 9
    basis: str = "interp-poly"
    q: tuple = ()
    r: tuple = (1,)
    trunc: int = DEFAULT_TRUNCATION
    points: int | None = None
    func: str = "sin2"
    fmt: str = "csv"
    out: str | None = None
    indices: tuple = (1,)
    inner: str = "discrete"

    def make_grid(self) -> UniformGrid:
        return make_grid(GridKind(self.grid), self.n)

    def bases(self):
        """One basis spec per requested (q, r) combination."""
        if self.basis in ("ls-poly", "ls-spline") and not self.q:
            raise FundTrigError(f"--q is required for basis {self.basis}")
        if self.basis == "interp-poly":
            return [ap.InterpPoly()]
        if self.basis == "ls-poly":
            return [ap.LSPoly(q) for q in self.q]
        shapes = [SplineShape(r, self.trunc) for r in self.r]
        if self.basis == "interp-spline":
            return [ap.InterpSpline(s) for s in shapes]
        return [ap.LSSpline(q, s) for q, s in itertools.product(self.q, shapes)]


def curve_abscissae(grid: UniformGrid, points: int) -> np.ndarray:
    """
    ``points`` equally spaced angles on [0, 2*pi], inclusive.

    Abscissae that coincide with a grid node (in exact rational arithmetic)
    are set to the node value itself, so node rows reproduce node values
    bit for bit.
    """
    if points < 2:
        raise FundTrigError(f"--points must be >= 2, got {points}")
    steps = points - 1
    t = TWO_PI * np.arange(points) / steps
    N = grid.n_nodes
    for j in range(1, N + 1):
        # node t_j as a fraction num/den of the period
        num, den = ((j - 1), N) if grid.kind is GridKind.TYPE0 else ((2 * j - 1), 2 * N)
        if (num * steps) % den == 0:
            t[num * steps // den] = grid.nodes[j - 1]
    return t


def cmd_grid(config: RunConfig) -> dict:
    grid = config.make_grid()
    return {"j": np.arange(1, grid.n_nodes + 1), "t": grid.nodes.copy()}


def cmd_basis(config: RunConfig) -> dict:
    """Columns t, b_j(t) for every requested index and parameter set."""
    grid = config.make_grid()
    t = curve_abscissae(grid, config.points or DEFAULT_POINTS)
    table = {"t": t}
    for basis in config.bases():
        basis.validate(grid)
        for j in config.indices:
            table[basis.label(j)] = np.asarray(basis.kernel(grid, j, t))
    return table


def cmd_fit(config: RunConfig):
    """Curve columns t, f, approx and a summary dict."""
    if config.func not in FUNCTIONS:
        raise FundTrigError(f"unknown function {config.func!r}; choose from {', '.join(FUNCTIONS)}")
    bases = config.bases()
    if len(bases) != 1:
        raise FundTrigError("fit takes a single --q and a single --r")
    grid = config.make_grid()
    f = FUNCTIONS[config.func]
    samples = ap.SampleSet.from_function(grid, f)
    approx = ap.build(samples, bases[0])
    t = curve_abscissae(grid, config.points or DEFAULT_POINTS)
    exact = np.asarray(f(t), dtype=float)
    values = ap.evaluate(approx, t)
    summary = {
        "grid": int(grid.kind),
        "n_nodes": grid.n_nodes,
        "basis": bases[0].name,
        "func": config.func,
        "node_sse": ap.residual_sse(samples, approx),
        "max_abs_error": float(np.max(np.abs(values - exact))),
    }
    if isinstance(bases[0], (ap.InterpPoly, ap.LSPoly)):
        q = bases[0].q if isinstance(bases[0], ap.LSPoly) else grid.order
        coeffs = ap.fourier_coeffs(samples).truncated(q)
        summary["coefficients"] = {"a0": coeffs.a0, "a": coeffs.a.tolist(), "b": coeffs.b.tolist()}
    return {"t": t, "f": exact, "approx": values}, summary


def cmd_gram(config: RunConfig):
    """Gram matrix columns and a summary with its deviation from identity."""
    bases = config.bases()
    if len(bases) != 1:
        raise FundTrigError("gram takes a single --q and a single --r")
    grid = config.make_grid()
    if config.inner == "continuous":
        gram = continuous_gram(grid, bases[0], config.points or DEFAULT_QUADRATURE_POINTS)
    else:
        gram = discrete_gram(grid, bases[0])
    table = {"i": np.arange(1, grid.n_nodes + 1)}
    for j in range(1, grid.n_nodes + 1):
        table[bases[0].label(j)] = gram.entries[:, j - 1]
    summary = {
        "inner": config.inner,
        "max_deviation_from_identity": gram.deviation_from_identity(),
        "max_offdiagonal": gram.max_offdiagonal(),
    }
    return table, summary


# figure presets: N = 9, node index 5 unless the caption names others
FIGURES = {
    "pic1": RunConfig(grid=0, basis="interp-poly", indices=(1, 3, 5)),
    "pic2": RunConfig(grid=1, basis="interp-poly", indices=(1, 3, 5)),
    "pic3": RunConfig(grid=0, basis="interp-spline", r=(1, 2, 3), indices=(5,)),
    "pic4": RunConfig(grid=1, basis="interp-spline", r=(1, 2, 3), indices=(5,)),
    "pic5": RunConfig(grid=0, basis="ls-poly", q=(3, 2, 1), indices=(5,)),
    "pic6": RunConfig(grid=0, basis="ls-spline", q=(3, 2, 1), r=(1,), indices=(5,)),
    "pic7": RunConfig(grid=0, basis="ls-spline", q=(3, 2, 1), r=(3,), indices=(5,)),
    "pic8": RunConfig(grid=1, basis="ls-spline", q=(3, 2, 1), r=(1,), indices=(5,)),
    "pic9": RunConfig(grid=1, basis="ls-spline", q=(3, 2, 1), r=(2,), indices=(5,)),
}


def _fmt(x):
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x), ".17g")


def render(table: dict, fmt: str, summary: dict | None = None) -> str:
    if fmt == "json":
        doc = {}
        for name, col in table.items():
            col = np.asarray(col)
            doc[name] = col.tolist() if col.dtype.kind == "i" else [float(x) for x in col]
        if summary is not None:
            doc["summary"] = summary
        return json.dumps(doc, indent=1) + "\n"
    names = list(table)
    lines = [",".join(names)]
    for row in zip(*(table[name] for name in names)):
        lines.append(",".join(_fmt(x) for x in row))
    return "\n".join(lines) + "\n"


def _write(text, path):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)


def _parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--grid", type=int, choices=(0, 1), default=0, help="grid family (default 0)")
    common.add_argument("--n", type=int, default=9, help="odd number of nodes N (default 9)")
    common.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    common.add_argument("--out", default=None, help="output path (default stdout)")

    basis = argparse.ArgumentParser(add_help=False)
    basis.add_argument("--basis", choices=BASES, default="interp-poly")
    basis.add_argument("--trunc", type=int, default=DEFAULT_TRUNCATION, help="alias series length M")
    basis.add_argument("--points", type=int, default=None, help="number of output/quadrature points")

    parser = argparse.ArgumentParser(prog="fundtrig", description=__doc__.split("\n\n")[1].strip())
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("grid", parents=[common], help="list grid nodes")

    p = sub.add_parser("basis", parents=[common, basis], help="tabulate basis functions")
    p.add_argument("--index", type=int, nargs="+", default=[1], help="node indices j (1-based)")
    p.add_argument("--q", type=int, nargs="+", default=[], help="harmonic budget(s) for LS bases")
    p.add_argument("--r", type=int, nargs="+", default=[1], help="spline smoothness value(s)")

    p = sub.add_parser("fit", parents=[common, basis], help="approximate a test function")
    p.add_argument("--func", choices=sorted(FUNCTIONS), default="sin2")
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--report", default=None, help="summary path (default stderr)")

    p = sub.add_parser("gram", parents=[common, basis], help="Gram matrix of a basis")
    p.add_argument("--inner", choices=("continuous", "discrete"), default="discrete")
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--report", default=None, help="summary path (default stderr)")

    p = sub.add_parser("figures", help="write the data of all figure presets to a directory")
    p.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default="figures", help="output directory")
    p.add_argument("--trunc", type=int, default=DEFAULT_TRUNCATION)
    p.add_argument("--points", type=int, default=DEFAULT_POINTS)
    return parser


def _config(args) -> RunConfig:
    def tup(v):
        if v is None:
            return ()
        return tuple(v) if isinstance(v, list) else (v,)

    return RunConfig(
        grid=args.grid,
        n=args.n,
        basis=args.basis,
        q=tup(args.q),
        r=tup(args.r),
        trunc=args.trunc,
        points=args.points,
        func=getattr(args, "func", "sin2"),
        fmt=args.fmt,
        out=args.out,
        indices=tuple(getattr(args, "index", [1])),
        inner=getattr(args, "inner", "discrete"),
    )


def _report(summary, path):
    text = json.dumps(summary, indent=1, sort_keys=True) + "\n"
    if path is None:
        sys.stderr.write(text)
    else:
        _write(text, path)


def run(argv=None):
    args = _parser().parse_args(argv)
    if args.command == "figures":
        os.makedirs(args.out, exist_ok=True)
        for name, preset in FIGURES.items():
            config = replace(preset, trunc=args.trunc, points=args.points)
            path = os.path.join(args.out, f"{name}.{args.fmt}")
            _write(render(cmd_basis(config), args.fmt), path)
        return
    if args.command == "grid":
        config = RunConfig(grid=args.grid, n=args.n, fmt=args.fmt, out=args.out)
        _write(render(cmd_grid(config), config.fmt), config.out)
        return
    config = _config(args)
    if args.command == "basis":
        _write(render(cmd_basis(config), config.fmt), config.out)
        return
    table, summary = cmd_fit(config) if args.command == "fit" else cmd_gram(config)
    if config.fmt == "json":
        _write(render(table, "json", summary), config.out)
    else:
        _write(render(table, "csv"), config.out)
    if config.fmt == "csv" or args.report is not None:
        _report(summary, args.report)


def main(argv=None):
    try:
        run(argv)
    except (FundTrigError, ValueError, TypeError) as exc:
        print(f"fundtrig: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
