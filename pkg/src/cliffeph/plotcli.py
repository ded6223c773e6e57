"""Curve persistence (JSONL and SVG), output file naming and the
command-line driver for the geometry pipelines."""

from __future__ import annotations

import argparse
import math
import os
import sys
from dataclasses import dataclass, field

from .curves import FIELDS
from .ephgeom import (
    DEFAULT_TUNING,
    FUTURE_PAST_FRAMES,
    FUTURE_PAST_LIMIT,
    MetricKind,
    Subgroup,
    TransformType,
    sample_arrows,
    sample_future_past,
    sample_orbits,
    sample_transverses,
    verify_k_orbit,
    verify_parabolic_vertices,
)

ORBIT_STEMS = {
    TransformType.DIRECT: "orbit",
    TransformType.CAYLEY_POINT: "cayley",
    TransformType.CAYLEY1_POINT: "cayl-a",
}
TRANSVERSE_STEMS = {
    TransformType.DIRECT: "orbit-t",
    TransformType.CAYLEY_POINT: "cayley-t",
    TransformType.CAYLEY1_POINT: "cayl-a-t",
}


def curve_filename(stem, sub, kind, fmt):
    return "%s-%c-%c.%s" % (stem, Subgroup(sub).letter, MetricKind(kind).letter, fmt)


@dataclass
class JobConfig:
    kinds: list
    subs: list
    out_dir: str = "."
    fmt: str = "jsonl"
    pipelines: tuple = ("orbits",)

    def __post_init__(self):
        if not self.pipelines:
            raise ValueError("at least one pipeline must be selected")


def _fmt_num(x):
    if isinstance(x, int):
        return "%d" % x
    return "%.9g" % x


def _jsonl_line(rec):
    parts = []
    for name in FIELDS:
        value = getattr(rec, name)
        if isinstance(value, str):
            parts.append('"%s": "%s"' % (name, value))
        else:
            parts.append('"%s": %s' % (name, _fmt_num(value)))
    return "{%s}" % ", ".join(parts)


def _polylines(records):
    runs = []
    for rec in records:
        if runs and runs[-1][0] == rec.curve_id:
            runs[-1][1].append(rec)
        else:
            runs.append((rec.curve_id, [rec]))
    return runs


def _gray(grade):
    level = 0.6 * min(max(grade, 0.0), 1.0)
    return "rgb(%d,%d,%d)" % ((round(255 * level),) * 3)


_ARROW_SCALE = 0.25
_HEAD_SCALE = 0.08


def _svg_arrow(rec, out):
    du, dv = rec.du, rec.dv
    r = math.hypot(du, dv)
    if r == 0:
        return
    tip_u = rec.u + _ARROW_SCALE * du
    tip_v = rec.v + _ARROW_SCALE * dv
    out.append(
        '<line x1="%s" y1="%s" x2="%s" y2="%s" stroke="%s" stroke-width="%s"/>'
        % (
            _fmt_num(rec.u), _fmt_num(rec.v), _fmt_num(tip_u), _fmt_num(tip_v),
            _gray(rec.color_grade), _fmt_num(0.02 * rec.pen_width_hint),
        )
    )
    # triangle head: tip plus two base corners set back along the shaft
    ux, uy = du / r, dv / r
    bx = tip_u - _HEAD_SCALE * ux
    by = tip_v - _HEAD_SCALE * uy
    px, py = -uy * _HEAD_SCALE / 2, ux * _HEAD_SCALE / 2
    out.append(
        '<polygon points="%s,%s %s,%s %s,%s" fill="%s"/>'
        % (
            _fmt_num(tip_u), _fmt_num(tip_v),
            _fmt_num(bx + px), _fmt_num(by + py),
            _fmt_num(bx - px), _fmt_num(by - py),
            _gray(rec.color_grade),
        )
    )


def _write_svg(records, fh, limits):
    ulim, vlim = limits
    body = []
    for _, run in _polylines(records):
        if run[0].kind == "arrow":
            for rec in run:
                _svg_arrow(rec, body)
            continue
        if len(run) < 2:
            continue
        coords = " L ".join(
            "%s %s" % (_fmt_num(r.u), _fmt_num(r.v)) for r in run
        )
        body.append(
            '<path d="M %s" fill="none" stroke="%s" stroke-width="%s"/>'
            % (coords, _gray(run[0].color_grade), _fmt_num(0.02 * run[0].pen_width_hint))
        )
    fh.write('<?xml version="1.0" encoding="UTF-8"?>\n')
    fh.write(
        '<svg xmlns="http://www.w3.org/2000/svg" viewBox="%s %s %s %s">\n'
        % (_fmt_num(-ulim), _fmt_num(-vlim), _fmt_num(2 * ulim), _fmt_num(2 * vlim))
    )
    fh.write(
        '<defs><clipPath id="frame"><rect x="%s" y="%s" width="%s" height="%s"/>'
        "</clipPath></defs>\n"
        % (_fmt_num(-ulim), _fmt_num(-vlim), _fmt_num(2 * ulim), _fmt_num(2 * vlim))
    )
    # flip the y axis so v grows upwards as in the plane
    fh.write('<g clip-path="url(#frame)" transform="scale(1,-1)">\n')
    for line in body:
        fh.write(line)
        fh.write("\n")
    fh.write("</g>\n</svg>\n")


def write_curves(records, path, fmt="jsonl", limits=None):
    """Write records to ``path`` as JSONL (one record per line, fixed key
    order, 9 significant digits) or as an SVG picture."""
    if limits is None:
        limits = (DEFAULT_TUNING.ulim, DEFAULT_TUNING.vlim)
    try:
        with open(path, "w", newline="\n") as fh:
            if fmt == "jsonl":
                for rec in records:
                    fh.write(_jsonl_line(rec))
                    fh.write("\n")
            elif fmt == "svg":
                _write_svg(records, fh, limits)
            else:
                raise ValueError("unknown format %r" % (fmt,))
    except OSError as err:
        raise OSError("cannot write %s: %s" % (path, err)) from err


# ---------------------------------------------------------------------------
# Pipelines


def run_orbits(config):
    written = []
    for kind in config.kinds:
        for sub in config.subs:
            streams = sample_orbits(kind, sub)
            for ttype, stem in ORBIT_STEMS.items():
                name = curve_filename(stem, sub, kind, config.fmt)
                path = os.path.join(config.out_dir, name)
                write_curves(streams[ttype], path, config.fmt)
                written.append(path)
    return written


def run_transverses(config):
    written = []
    for kind in config.kinds:
        for sub in config.subs:
            streams = sample_transverses(kind, sub)
            for ttype, stem in TRANSVERSE_STEMS.items():
                name = curve_filename(stem, sub, kind, config.fmt)
                path = os.path.join(config.out_dir, name)
                write_curves(streams[ttype], path, config.fmt)
                written.append(path)
    return written


def run_arrows(config):
    written = []
    for kind in config.kinds:
        for sub in config.subs:
            records = sample_arrows(kind, sub)
            name = curve_filename("arrows", sub, kind, config.fmt)
            path = os.path.join(config.out_dir, name)
            write_curves(records, path, config.fmt)
            written.append(path)
    return written


def run_future_past(config):
    written = []
    frames = sample_future_past()
    for j in range(FUTURE_PAST_FRAMES):
        name = "future-past-%02d.%s" % (j, config.fmt)
        path = os.path.join(config.out_dir, name)
        write_curves(
            frames[j], path, config.fmt, limits=(FUTURE_PAST_LIMIT, FUTURE_PAST_LIMIT)
        )
        written.append(path)
    return written


def run_verify(config, out=None):
    """Numeric checks of the K-orbit focal properties and, in the
    parabolic case, of the Cayley-image vertex law; returns True if
    everything is within tolerance."""
    out = out or sys.stdout
    ok = True
    for kind in config.kinds:
        for v0 in DEFAULT_TUNING.vpoints[kind]:
            if v0 == 0:
                continue
            rep = verify_k_orbit(kind, v0)
            status = "ok" if rep.ok else "FAIL"
            line = "%s K-orbit v0=%g: %s = %.6f, max residual %.3g" % (
                MetricKind(kind).name.lower(), v0, rep.label,
                rep.expected, rep.max_residual,
            )
            if kind == MetricKind.HYPERBOLIC:
                line += ", sign flips %d" % rep.sign_flips
            out.write("%s [%s]\n" % (line, status))
            ok = ok and rep.ok
        if kind == MetricKind.PARABOLIC:
            for sub in config.subs:
                if sub == Subgroup.K:
                    continue
                rep = verify_parabolic_vertices(sub)
                if sub == Subgroup.A:
                    dev = rep.max_law_deviation
                    good = dev <= 1e-6
                    out.write(
                        "parabolic vertex law %s: %d fits, max |check+1| %.3g [%s]\n"
                        % (Subgroup(sub).letter, len(rep.fits), dev,
                           "ok" if good else "FAIL")
                    )
                    ok = ok and good
                else:
                    out.write(
                        "parabolic parabola fits %s: %d fits, %d skipped\n"
                        % (Subgroup(sub).letter, len(rep.fits), rep.skipped)
                    )
    return ok


_PIPELINES = {
    "orbits": run_orbits,
    "transverses": run_transverses,
    "arrows": run_arrows,
    "future-past": run_future_past,
}

_METRIC_FLAGS = {"e": [MetricKind.ELLIPTIC], "p": [MetricKind.PARABOLIC],
                 "h": [MetricKind.HYPERBOLIC], "all": list(MetricKind)}
_SUBGROUP_FLAGS = {"A": [Subgroup.A], "N": [Subgroup.N], "K": [Subgroup.K],
                   "all": list(Subgroup)}


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="cliffeph",
        description="Sample subgroup orbits of the EPH plane geometries "
        "and verify their focal properties.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("orbits", "transverses", "arrows", "future-past", "verify", "all"):
        p = sub.add_parser(name)
        p.add_argument("--metric", choices=sorted(_METRIC_FLAGS), default="all")
        p.add_argument("--subgroup", choices=sorted(_SUBGROUP_FLAGS), default="all")
        p.add_argument("--out", default=".", metavar="DIR")
        p.add_argument("--format", choices=("jsonl", "svg"), default="jsonl")
    return parser


def cli_main(argv=None):
    args = _build_parser().parse_args(argv)
    if args.command == "all":
        pipelines = ("orbits", "transverses", "arrows", "future-past", "verify")
    else:
        pipelines = (args.command,)
    config = JobConfig(
        kinds=_METRIC_FLAGS[args.metric],
        subs=_SUBGROUP_FLAGS[args.subgroup],
        out_dir=args.out,
        fmt=args.format,
        pipelines=pipelines,
    )
    os.makedirs(config.out_dir, exist_ok=True)
    for name in pipelines:
        if name == "verify":
            if not run_verify(config):
                return 1
        else:
            for path in _PIPELINES[name](config):
                print(path)
    return 0


def main():
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
