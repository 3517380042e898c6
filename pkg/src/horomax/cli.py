"""Command-line front end.

    horomax verify     run the check catalog on one model
    horomax classify   classify a structured sequence given as JSON
    horomax orbit      CSV of orbit-limit approximants along a word stream
    horomax cocompact  proper-discontinuity and cocompactness experiment
    horomax boundary-map  coordinate round trips for random boundary points

Exit status: 0 when every check passes, 1 when one fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, fields
from importlib import resources

import numpy as np

from . import sampling as S
from .checks import UNIT_WINDOW, run_catalog
from .disk import BoundaryClampError
from .encoding import decode_ideal, decode_point, decode_real, encode_ideal, encode_point, encode_real, get_model
from .geodesics import ParamGeodesic
from .groups import (
    DEFAULT_GROUP,
    GROUPS,
    CompactRegion,
    cocompactness_check,
    get_group,
    limit_set_sample,
    power_stream,
    proper_discontinuity_report,
)
from .product import (
    BoundedFirst,
    GeodesicPair,
    NotDivergentError,
    OrbitSeq,
    ProductPoint,
    RayPair,
    boundary_from_json,
    boundary_to_json,
    classify,
    empirical_limit_check,
    phi_reg,
    phi_reg_inverse,
    phi_sing,
    phi_sing_inverse,
)

RESIDUAL_INDICES = (1, 2, 4, 8, 16, 25)


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    model: str = "tree"
    group: str | None = None
    seed: int = 0
    tol: float = 1e-9
    limit_tol: float = 1e-6
    samples: int = 100
    rmax: int = 8
    format: str | None = None  # json, except csv for orbit
    timings: bool = False

    def validate(self) -> None:
        if self.model not in ("disk", "tree"):
            raise UsageError(f"unknown model {self.model!r}")
        if self.group is None:
            self.group = DEFAULT_GROUP[self.model]
        if self.group not in GROUPS:
            raise UsageError(f"unknown group {self.group!r}")
        if get_group(self.group).model is not get_model(self.model):
            raise UsageError(f"group {self.group!r} does not act on the {self.model} model")
        if not (self.tol > 0 and self.limit_tol > 0):
            raise UsageError("tolerances must be positive")
        if self.samples < 1:
            raise UsageError("samples must be positive")
        if self.rmax < 0:
            raise UsageError("rmax must be nonnegative")
        if self.format not in (None, "json", "csv"):
            raise UsageError(f"unknown format {self.format!r}")
        if not 0 <= self.seed < 2**64:
            raise UsageError("seed must be a 64-bit unsigned integer")


_CONVERT = {"seed": int, "tol": float, "limit_tol": float, "samples": int, "rmax": int}


def read_config_file(path: str) -> dict:
    out = {}
    try:
        text = open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or key not in {f.name for f in fields(RunConfig)}:
            raise UsageError(f"{path}:{lineno}: expected key=value with a known key")
        out[key] = value.strip()
    return out


def build_config(args: argparse.Namespace) -> RunConfig:
    values = read_config_file(args.config) if args.config else {}
    for f in fields(RunConfig):
        v = getattr(args, f.name, None)
        if v is not None and v is not False:
            values[f.name] = v
    cfg = RunConfig()
    for key, value in values.items():
        try:
            if key == "timings":
                value = value if isinstance(value, bool) else str(value).lower() in ("1", "true", "yes")
            elif key in _CONVERT:
                value = _CONVERT[key](value)
        except ValueError:
            raise UsageError(f"bad value for {key}: {value!r}") from None
        setattr(cfg, key, value)
    cfg.validate()
    return cfg


# -- output ------------------------------------------------------------------


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _dump_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def csv_schema() -> dict:
    return json.loads(resources.files("horomax").joinpath("data/csv_schema.json").read_text())


# -- commands ----------------------------------------------------------------


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    model = get_model(cfg.model)
    results = run_catalog(
        model, cfg.model, cfg.group, cfg.seed,
        samples=cfg.samples, tol=cfg.tol, limit_tol=cfg.limit_tol, rmax=cfg.rmax,
    )
    ok = all(r.passed for r in results)
    records = []
    for r in results:
        rec = {
            "name": r.name,
            "anchor": r.anchor,
            "statistic": encode_real(r.statistic),
            "threshold": encode_real(r.threshold),
            "passed": r.passed,
            "samples": r.samples,
        }
        if cfg.timings:
            rec["seconds"] = format(r.seconds, ".3f")
        records.append(rec)
    if cfg.format == "csv":
        header = csv_schema()["verify"]["columns"]
        header = [c["name"] for c in header if cfg.timings or c["name"] != "seconds"]
        rows = [[rec[h] if not isinstance(rec[h], bool) else str(rec[h]).lower() for h in header] for rec in records]
        return _dump_csv(header, rows), 0 if ok else 1
    report = {"model": cfg.model, "group": cfg.group, "seed": cfg.seed, "passed": ok, "checks": records}
    return _dump_json(report), 0 if ok else 1


def _parse_ray(model, data):
    return model.ray(decode_point(data["origin"], model), decode_ideal(data["target"], model))


def parse_sequence(text: str, model, group):
    """Structured sequence from its JSON descriptor.

    {"type": "geodesic-pair", "xi_plus": ..., "xi_minus": ..., "offset": ...}
    {"type": "ray-pair", "ray1": {"origin": ..., "target": ...}, "speed1": ..., "ray2": ..., "speed2": ...}
    {"type": "bounded-first", "anchor": [point, ...], "ray2": {...}}
    {"type": "orbit", "word": "ab", "seed": [point, point]}
    """
    try:
        data = json.loads(text)
        kind = data["type"]
        if kind == "geodesic-pair":
            return GeodesicPair(ParamGeodesic.from_json(data, model))
        if kind == "ray-pair":
            return RayPair(
                _parse_ray(model, data["ray1"]), decode_real(data["speed1"], model),
                _parse_ray(model, data["ray2"]), decode_real(data["speed2"], model),
            )
        if kind == "bounded-first":
            anchor = tuple(decode_point(p, model) for p in data["anchor"])
            return BoundedFirst(anchor, _parse_ray(model, data["ray2"]))
        if kind == "orbit":
            x, y = (decode_point(p, model) for p in data["seed"])
            return OrbitSeq(group.element(data["word"]), ProductPoint(x, y))
        raise UsageError(f"unknown sequence type {kind!r}")
    except UsageError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"malformed sequence descriptor: {exc}") from None


def cmd_classify(cfg: RunConfig, descriptor: str) -> tuple[str, int]:
    model = get_model(cfg.model)
    seq = parse_sequence(descriptor, model, get_group(cfg.group))
    try:
        verdict = classify(seq)
    except NotDivergentError as exc:
        raise UsageError(str(exc)) from None
    out = {"case": verdict.case.value, "permuted": verdict.permuted}
    if verdict.limit is not None:
        out["limit"] = boundary_to_json(verdict.limit)
        pts = S.grid(model, np.random.default_rng(cfg.seed))
        curve = []
        for n in RESIDUAL_INDICES:
            try:
                err = empirical_limit_check(seq, verdict.limit, pts, n)
            except BoundaryClampError:
                break
            curve.append([n, encode_real(err)])
        out["residuals"] = curve
    return _dump_json(out), 0


def _parse_seed_point(text: str | None, model, group) -> ProductPoint:
    if text is None:
        o = model.origin
        return ProductPoint(o, model.apply(group.generators[group.letters[0]], o))
    try:
        a, b = text.split(";")
        return ProductPoint(decode_point(a, model), decode_point(b, model))
    except ValueError as exc:
        raise UsageError(f"malformed seed point {text!r}: {exc}") from None


def cmd_orbit(cfg: RunConfig, seed_point: str | None, word: str | None, count: int, random_length: int | None):
    model = get_model(cfg.model)
    group = get_group(cfg.group)
    seed = _parse_seed_point(seed_point, model, group)
    if random_length is not None:
        if random_length < 1:
            raise UsageError("random stream length must be positive")
        stream = S.random_word_stream(np.random.default_rng(cfg.seed), random_length, group.letters)
    else:
        word = word or group.letters[0]
        if not word or any(c not in group.letters for c in word):
            raise UsageError(f"word {word!r} is not over the letters {group.letters}")
        if count < 1:
            raise UsageError("count must be positive")
        stream = power_stream(word, count)
    header = [c["name"] for c in csv_schema()["orbit"]["columns"]]
    rows = []
    for s in limit_set_sample(group, seed, stream):
        ex = encode_point(s.estimate_x) if model.name == "tree" else encode_ideal(s.estimate_x)
        ey = encode_point(s.estimate_y) if model.name == "tree" else encode_ideal(s.estimate_y)
        rows.append([s.index, s.word, ex, ey, encode_real(s.gap), encode_real(s.c)])
    if cfg.format == "json":
        return _dump_json([dict(zip(header, r)) for r in rows]), 0
    # orbit data defaults to CSV
    return _dump_csv(header, rows), 0


def cmd_cocompact(cfg: RunConfig) -> tuple[str, int]:
    model = get_model(cfg.model)
    group = get_group(cfg.group)
    rng = np.random.default_rng(cfg.seed)
    window = CompactRegion(ProductPoint(model.origin, model.origin), UNIT_WINDOW)
    report = proper_discontinuity_report(group, window, 6)
    samples = [S.random_product_point(model, rng, 6) if i % 2 else S.random_geodesic(model, rng, 4) for i in range(cfg.samples)]
    result = cocompactness_check(group, samples, cfg.rmax)
    out = {
        "model": cfg.model,
        "group": cfg.group,
        "window_radius": UNIT_WINDOW,
        "survivors": list(report.survivors),
        "survivor_count": len(report.survivors),
        "stable": report.stable,
        "samples": result.samples,
        "failures": result.failures,
        "rmax": cfg.rmax,
        "max_word_length": result.max_word_length,
    }
    return _dump_json(out), 0 if report.stable and result.failures == 0 else 1


def cmd_boundary_map(cfg: RunConfig) -> tuple[str, int]:
    model = get_model(cfg.model)
    rng = np.random.default_rng(cfg.seed)
    records = []
    ok = True
    for i in range(cfg.samples):
        b = S.random_boundary(model, rng, regular=bool(i % 2 == 0))
        if b.kind == "regular":
            coords = phi_reg(b)
            back = phi_reg_inverse(*coords)
            shown = [encode_ideal(coords[0]), encode_ideal(coords[1]), encode_real(coords[2])]
        else:
            coords = phi_sing(b)
            back = phi_sing_inverse(*coords)
            shown = [str(coords[0]), encode_ideal(coords[1])]
        same = boundary_to_json(back) == boundary_to_json(b)
        reparsed = boundary_from_json(boundary_to_json(b), model)
        same = same and boundary_to_json(reparsed) == boundary_to_json(b)
        ok = ok and same
        records.append({"point": boundary_to_json(b), "coordinates": shown, "roundtrip": same})
    if cfg.format == "csv":
        rows = [[r["point"]["kind"], ";".join(r["coordinates"]), str(r["roundtrip"]).lower()] for r in records]
        return _dump_csv(["kind", "coordinates", "roundtrip"], rows), 0 if ok else 1
    return _dump_json(records), 0 if ok else 1


# -- argument parsing --------------------------------------------------------


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--model", choices=["disk", "tree"])
    p.add_argument("--group", choices=sorted(GROUPS))
    p.add_argument("--seed", type=int)
    p.add_argument("--tol", type=float, help="algebraic tolerance for the disk model")
    p.add_argument("--limit-tol", dest="limit_tol", type=float, help="tolerance for limit-based disk checks")
    p.add_argument("--samples", type=int)
    p.add_argument("--rmax", type=int, help="maximum word length for cocompactness")
    p.add_argument("--format", choices=["json", "csv"])
    p.add_argument("--config", help="key=value file; flags override it")
    p.add_argument("--timings", action="store_true", help="include wall time per check (breaks byte-identical output)")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="horomax", description="Max-metric horoboundary experiments.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("verify", "cocompact", "boundary-map"):
        _common(sub.add_parser(name))
    p = sub.add_parser("classify")
    _common(p)
    p.add_argument("descriptor", help="JSON sequence descriptor, or @file")
    p = sub.add_parser("orbit")
    _common(p)
    p.add_argument("--seed-point", dest="seed_point", help="'x;y' in the model's point syntax")
    p.add_argument("--word", help="stream of powers of this word")
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--random-length", dest="random_length", type=int, help="prefixes of a random reduced word")
    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        cfg = build_config(args)
        if args.command == "verify":
            text, code = cmd_verify(cfg)
        elif args.command == "classify":
            desc = args.descriptor
            if desc.startswith("@"):
                try:
                    desc = open(desc[1:], encoding="utf-8").read()
                except OSError as exc:
                    raise UsageError(str(exc)) from None
            text, code = cmd_classify(cfg, desc)
        elif args.command == "orbit":
            text, code = cmd_orbit(cfg, args.seed_point, args.word, args.count, args.random_length)
        elif args.command == "cocompact":
            text, code = cmd_cocompact(cfg)
        else:
            text, code = cmd_boundary_map(cfg)
    except UsageError as exc:
        print(f"horomax: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
