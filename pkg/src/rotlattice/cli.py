"""Command-line front end.

Configuration is line-oriented ``key = value`` text.  The ``[body]`` section
picks the body; the optional ``[run]`` section sets truncation orders and
grids.  Example::

    [body]
    family = superball
    p = 4
    radius = 1

    [run]
    T = 32, 64, 128, 256
    density = 8

Every subcommand writes CSV with a leading ``#`` comment carrying the
toolkit version and a SHA-256 of the canonical config.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import math
import sys
import time
from dataclasses import dataclass, field, fields, replace
from fractions import Fraction

from rotlattice import __version__
from rotlattice.rotation_body import FAMILIES, FlatPole, RotationBody, Sphere, Spheroid, Superball

SUBCOMMANDS = ("coeffs", "volume", "mainterm", "count", "delta", "meansquare", "hardy", "polar")

BODY_KEYS = {
    "sphere": {"radius": "1"},
    "spheroid": {"a": None, "b": None},
    "superball": {"p": "4", "radius": "1"},
    "flatpole": {"p": "4", "a": "1", "b": "1"},
}


class ConfigError(ValueError):
    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("\n".join(self.errors))


@dataclass(frozen=True)
class ExperimentConfig:
    family: str
    body_params: tuple  # sorted (key, value-string) pairs
    J: int | None = None
    K: int = 100_000
    M: int = 4
    density: int = 8
    T: tuple = (32, 64, 128, 256)
    t: tuple = ()
    X: tuple = (100.0,)
    Y: tuple = (100, 1000)
    oracle_bound: int = 50
    workers: int = 1
    out: str | None = None
    normalization: str = "derived"
    flat_terms: bool = True

    def body(self) -> RotationBody:
        kw = dict(self.body_params)
        if self.family == "sphere":
            return Sphere(Fraction(kw["radius"]))
        if self.family == "spheroid":
            return Spheroid(Fraction(kw["a"]), Fraction(kw["b"]))
        if self.family == "superball":
            return Superball(int(kw["p"]), Fraction(kw["radius"]))
        return FlatPole(int(kw["p"]), Fraction(kw["a"]), Fraction(kw["b"]))


def _int(v):
    return int(v)


def _pos_int(v):
    n = int(v)
    if n <= 0:
        raise ValueError("must be a positive integer")
    return n


def _pos_rational(v) -> Fraction:
    q = Fraction(v.strip())
    if q <= 0:
        raise ValueError("must be positive")
    return q


def _list(conv):
    def parse(v):
        items = [s.strip() for s in v.split(",") if s.strip()]
        if not items:
            raise ValueError("empty list")
        return tuple(conv(s) for s in items)

    return parse


def _pos_float(v):
    x = float(v)
    if not x > 0 or not math.isfinite(x):
        raise ValueError("must be a positive number")
    return x


def _bool(v):
    s = v.strip().lower()
    if s in ("true", "yes", "1", "on"):
        return True
    if s in ("false", "no", "0", "off"):
        return False
    raise ValueError("must be true or false")


def _norm(v):
    s = v.strip()
    if s not in ("derived", "displayed"):
        raise ValueError("must be 'derived' or 'displayed'")
    return s


RUN_KEYS = {
    "J": _pos_int,
    "K": _pos_int,
    "M": _int,
    "density": _pos_int,
    "T": _list(_pos_int),
    "t": _list(_pos_rational),
    "X": _list(_pos_float),
    "Y": _list(_pos_int),
    "oracle_bound": _pos_int,
    "workers": _pos_int,
    "out": str,
    "normalization": _norm,
    "flat_terms": _bool,
}


def parse_config(text: str) -> ExperimentConfig:
    errors = []
    section = None
    body_raw: dict[str, tuple[int, str]] = {}
    run: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            section = line[1:-1].strip().lower()
            if section not in ("body", "run"):
                errors.append(f"line {lineno}: unknown section [{section}]")
            continue
        if "=" not in line:
            errors.append(f"line {lineno}: expected 'key = value', got {raw.strip()!r}")
            continue
        key, value = (s.strip() for s in line.split("=", 1))
        if section == "body":
            body_raw[key] = (lineno, value)
        elif section == "run":
            if key not in RUN_KEYS:
                errors.append(f"line {lineno}: unknown key {key!r} in [run]")
                continue
            try:
                run[key] = RUN_KEYS[key](value)
            except (ValueError, ZeroDivisionError) as exc:
                errors.append(f"line {lineno}: bad value for {key!r}: {value!r} ({exc})")
        else:
            errors.append(f"line {lineno}: key {key!r} outside any section")

    family = body_raw.pop("family", (None, None))[1]
    if family is None:
        errors.append("missing [body] key 'family'; required keys: family plus one of "
                      + "; ".join(f"{f}: {', '.join(k)}" for f, k in BODY_KEYS.items()))
        raise ConfigError(errors)
    family = family.lower()
    if family not in FAMILIES:
        errors.append(f"unsupported family {family!r}; expected one of {', '.join(FAMILIES)}")
        raise ConfigError(errors)

    params = {}
    for key, default in BODY_KEYS[family].items():
        if key in body_raw:
            lineno, value = body_raw.pop(key)
            try:
                if key == "p":
                    p = int(value)
                    if p < 2 or p % 2:
                        raise ValueError(f"exponent p must be an even integer >= 2, got {p}")
                    params[key] = str(p)
                else:
                    params[key] = str(_pos_rational(value))
            except (ValueError, ZeroDivisionError) as exc:
                errors.append(f"line {lineno}: bad value for {key!r}: {value!r} ({exc})")
        elif default is None:
            errors.append(f"missing [body] key {key!r} for family {family}")
        else:
            params[key] = default
    for key, (lineno, _) in body_raw.items():
        errors.append(f"line {lineno}: unknown key {key!r} for family {family}")
    if errors:
        raise ConfigError(errors)
    return ExperimentConfig(family, tuple(sorted(params.items())), **run)


def _fmt_value(v):
    if isinstance(v, tuple):
        return ", ".join(_fmt_value(x) for x in v)
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def render_config(cfg: ExperimentConfig) -> str:
    lines = ["[body]", f"family = {cfg.family}"]
    lines += [f"{k} = {v}" for k, v in cfg.body_params]
    lines += ["", "[run]"]
    defaults = ExperimentConfig("sphere", ())
    for f in fields(cfg):
        if f.name in ("family", "body_params"):
            continue
        value = getattr(cfg, f.name)
        if value is None or (f.name == "t" and not value):
            continue
        if f.name in ("out", "workers") and value == getattr(defaults, f.name):
            continue
        lines.append(f"{f.name} = {_fmt_value(value)}")
    return "\n".join(lines) + "\n"


def config_hash(cfg: ExperimentConfig) -> str:
    # output-neutral settings are left out so they do not change the file
    canon = render_config(replace(cfg, out=None, workers=1))
    return hashlib.sha256(canon.encode()).hexdigest()


def _num(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, float):
        return repr(x)
    return str(x)


def _emit(cfg: ExperimentConfig, header, rows, stream):
    buf = io.StringIO()
    buf.write(f"# rotlattice {__version__} config-sha256={config_hash(cfg)}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_num(x) for x in row])
    stream.write(buf.getvalue())


def _t_values(cfg: ExperimentConfig):
    if cfg.t:
        return list(cfg.t)
    from rotlattice.experiments import midpoint_grid

    return midpoint_grid(max(cfg.T), cfg.density)


def _model(cfg: ExperimentConfig, body):
    from rotlattice.flat_expansion import LEFT, RIGHT, flat_point_expansion
    from rotlattice.main_term import build_model

    exps = tuple(flat_point_expansion(body, s, cfg.J) for s in (LEFT, RIGHT))
    model = build_model(body, exps, K=cfg.K, normalization=cfg.normalization)
    return model if cfg.flat_terms else model.without_oscillation()


def run(subcommand: str, cfg: ExperimentConfig, stream=None) -> int:
    if subcommand not in SUBCOMMANDS:
        raise ValueError(f"unknown subcommand {subcommand!r}")
    stream = stream or sys.stdout
    body = cfg.body()

    if subcommand == "coeffs":
        from rotlattice.flat_expansion import LEFT, flat_point_expansion

        rows = []
        for side in (1, 2):
            e = flat_point_expansion(body, side, cfg.J)
            name = "left" if side == LEFT else "right"
            for j in range(1, e.J + 2):
                d = e.d[j - 1] if j <= e.J else ""
                ds = e.dstar(j) if j >= 2 else ""
                rows.append((name, j, d, ds))
        _emit(cfg, ("side", "j", "d_j", "dstar_j"), rows, stream)

    elif subcommand == "volume":
        from rotlattice.main_term import volume

        _emit(cfg, ("body", "volume"), [(str(body), volume(body))], stream)

    elif subcommand == "mainterm":
        from rotlattice.main_term import main_term_eval

        model = _model(cfg, body)
        rows = []
        for t in _t_values(cfg):
            M = main_term_eval(model, float(t))
            rows.append((t, M, M - model.volume * float(t) ** 3))
        _emit(cfg, ("t", "M", "oscillating"), rows, stream)

    elif subcommand == "count":
        from rotlattice.exact_count import count_exact

        rows = []
        for t in _t_values(cfg):
            start = time.perf_counter()
            res = count_exact(body, t)
            print(f"t={t} A={res.A} slices={res.slice_count} "
                  f"seconds={time.perf_counter() - start:.4f}", file=sys.stderr)
            rows.append((t, res.A))
        _emit(cfg, ("t", "A"), rows, stream)

    elif subcommand == "delta":
        from rotlattice.experiments import samples

        rows = samples(body, _model(cfg, body), _t_values(cfg), cfg.workers)
        _emit(cfg, ("t", "A", "M", "delta"), [(s.t, s.A, s.M, s.delta) for s in rows], stream)

    elif subcommand == "meansquare":
        from rotlattice.experiments import mean_square_report

        rep = mean_square_report(body, _model(cfg, body), cfg.T, cfg.density, cfg.workers)
        _emit(cfg, ("T", "integral", "slope"), rep.rows(), stream)

    elif subcommand == "hardy":
        from rotlattice.lattice_arith import P_of, hardy_truncated, sieve_r

        sieve = sieve_r(max(cfg.Y))
        rows = []
        for X in cfg.X:
            exact = P_of(X)
            for Y in cfg.Y:
                trunc = hardy_truncated(X, Y, sieve)
                rows.append((X, Y, exact, trunc, abs(exact - trunc)))
        _emit(cfg, ("X", "Y", "P_exact", "P_truncated", "abs_error"), rows, stream)

    elif subcommand == "polar":
        from rotlattice.polar_geometry import count_N, polar_constant

        C = polar_constant(body)
        rows = []
        for X in cfg.X:
            N = count_N(body, X, bound=max(500, X))
            rows.append((X, N, N / X**3, C))
        _emit(cfg, ("X", "N", "N_over_X3", "C_quadrature"), rows, stream)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rotlattice", description=__doc__.split("\n")[0])
    ap.add_argument("subcommand", choices=SUBCOMMANDS)
    ap.add_argument("--config", required=True, help="path to key = value config file")
    ap.add_argument("--out", help="write CSV here instead of stdout")
    ap.add_argument("--workers", type=int, help="process count for t sweeps")
    ap.add_argument("--seed", type=int, help="reserved; the pipeline is deterministic")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with open(args.config) as fh:
            cfg = parse_config(fh.read())
    except OSError as exc:
        print(f"error: cannot read config: {exc}", file=sys.stderr)
        return 2
    except ConfigError as exc:
        for msg in exc.errors:
            print(f"config error: {msg}", file=sys.stderr)
        return 2
    if args.workers is not None:
        cfg = replace(cfg, workers=args.workers)
    out = args.out or cfg.out
    try:
        if out:
            with open(out, "w", newline="") as fh:
                return run(args.subcommand, cfg, fh)
        return run(args.subcommand, cfg)
    except Exception as exc:  # noqa: BLE001 - report any module failure as exit 1
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
