"""Command-line interface.

Every command prints one JSON document (or a CSV table for flat results) on
stdout.  Errors go to stderr as JSON with exit status 1 (usage/parse),
2 (verification failure) or 3 (internal invariant violation).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .based_ring import in_c0, jmultiply, verify_sigma_hom
from .characters import tensor_decompose, weyl_character, weyl_dim
from .convolution import CellElement, from_pairs, g_basis, is_in_KG, restrict
from .errors import InputError, InvariantViolation, LowcellError, VerificationFailed
from .group_algebra import LaurentPoly, from_text, to_text
from .parabolic import double_cosets, hasse_edges
from .root_datum import RootDatum, Weight, load_datum, standard_datum
from .steinberg import steinberg_data
from .weyl_group import weyl_group

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_INTERNAL = 0, 1, 2, 3
DEFAULT_MAX_CUTOFF = 4

_PRESET = re.compile(r"^([a-gA-G])(\d+)(?:[_-](adjoint|root|sc|weight|simply_connected))?$")


@dataclass
class RunConfig:
    command: list[str]
    datum_path: str | None = None
    cutoff: int = 1
    samples: int = 200
    seed: int = 0
    format: str = "json"
    cache_dir: str | None = None
    max_cutoff: int = DEFAULT_MAX_CUTOFF
    allow_large: bool = False
    options: dict = field(default_factory=dict)

    def validate(self) -> None:
        if self.format not in ("json", "csv"):
            raise InputError(f"unknown format {self.format!r}")
        if not 0 <= self.cutoff <= self.max_cutoff:
            raise InputError(f"cutoff must be in 0..{self.max_cutoff}")
        if self.samples < 0:
            raise InputError("samples must be nonnegative")
        if not -2**63 <= self.seed < 2**64:
            raise InputError("seed must fit in 64 bits")


def resolve_datum(ref: str | None, allow_large: bool = False) -> RootDatum:
    """A datum file path, or a preset name such as ``a2_adjoint`` or ``b2``."""
    if not ref:
        raise InputError("--datum is required")
    path = Path(ref)
    if path.is_file():
        try:
            text = path.read_text()
        except OSError as exc:
            raise InputError(f"cannot read {ref}: {exc}") from None
        return load_datum(text, allow_large=allow_large)
    m = _PRESET.match(ref)
    if m:
        sub = m.group(3) or "weight"
        return standard_datum(m.group(1) + m.group(2), "root" if sub == "adjoint" else sub)
    raise InputError(f"no datum file or preset named {ref!r}")


def parse_weight(text: str, rank: int) -> Weight:
    try:
        vals = json.loads(text)
    except ValueError:
        raise InputError(f"cannot parse weight {text!r}") from None
    if isinstance(vals, int):
        vals = [vals]
    if not isinstance(vals, list) or len(vals) != rank or not all(isinstance(v, int) for v in vals):
        raise InputError(f"weight must be a list of {rank} integers")
    return Weight(vals)


def parse_word(text: str) -> tuple[int, ...]:
    t = text.strip()
    if t in ("e", "1", "[]", "()", ""):
        return ()
    if t.startswith("["):
        return tuple(json.loads(t))
    if re.fullmatch(r"(s\d+)+", t):
        return tuple(int(x) for x in re.findall(r"\d+", t))
    raise InputError(f"cannot parse Weyl group word {text!r}")


def parse_cell(text: str, datum: RootDatum) -> CellElement:
    """``"(f, [chi], f')"`` with ``f`` written ``e``, ``s1s2`` or ``[1,2]``."""
    toks = re.findall(r"\[[^\]]*\]|[^,()\s\[\]]+", text)
    if len(toks) != 3:
        raise InputError(f"cell element must look like (f,[chi],f'), got {text!r}")
    group = weyl_group(datum)
    try:
        f = group.from_word(parse_word(toks[0]))
        f2 = group.from_word(parse_word(toks[2]))
    except (ValueError, TypeError) as exc:
        raise InputError(str(exc)) from None
    chi = parse_weight(toks[1], datum.rank)
    if not chi.is_dominant():
        raise InputError(f"cell weight {list(chi)} is not dominant")
    return CellElement(f, chi, f2)


def _rows_to_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _word(w) -> str:
    return w.name()


def _steinberg(cfg: RunConfig, datum: RootDatum):
    return steinberg_data(datum, cache_dir=cfg.cache_dir if cfg.cache_dir != "" else False)


def run(cfg: RunConfig) -> tuple[int, str]:
    """Dispatch one command; returns ``(exit status, stdout document)``."""
    cfg.validate()
    cmd = cfg.command
    head = cmd[0]
    sub = cmd[1] if len(cmd) > 1 else None
    datum = resolve_datum(cfg.datum_path, allow_large=cfg.allow_large)
    opts = cfg.options
    csv_table = None
    doc = None
    status = EXIT_OK

    if head == "datum":
        doc = datum.to_json()
    elif head == "weyl":
        elems = weyl_group(datum).elements
        doc = [w.to_json() for w in elems]
        csv_table = (["word", "length", "matrix"],
                     [[_word(w), w.length, json.dumps([list(r) for r in w.matrix])] for w in elems])
    elif head == "char" and sub == "weyl":
        chi = parse_weight(opts["weight"], datum.rank)
        if not chi.is_dominant():
            raise InputError("weight must be dominant")
        ch = weyl_character(datum, chi)
        doc = {"weight": list(chi), "dimension": weyl_dim(datum, chi), "character": to_text(ch),
               "terms": len(ch)}
    elif head == "char" and sub == "tensor":
        left = parse_weight(opts["left"], datum.rank)
        right = parse_weight(opts["right"], datum.rank)
        if not (left.is_dominant() and right.is_dominant()):
            raise InputError("weights must be dominant")
        dec = tensor_decompose(datum, left, right)
        doc = {"left": list(left), "right": list(right), "parts": dec.to_json(),
               "dimension": dec.dimension(datum)}
        csv_table = (["weight", "multiplicity"],
                     [[json.dumps(list(lam)), m] for lam, m in sorted(dec.parts.items())])
    elif head == "steinberg":
        data = _steinberg(cfg, datum)
        elems = data.elements
        if sub == "basis":
            doc = [{"element": list(w.word), "x": list(data.x_weights[w])} for w in elems]
            csv_table = (["element", "x"],
                         [[_word(w), json.dumps(list(data.x_weights[w]))] for w in elems])
        elif sub == "gram":
            doc = {"elements": [list(w.word) for w in elems],
                   "gram": [[to_text(p) for p in row] for row in data.gram]}
        elif sub == "dual":
            doc = [{"element": list(w.word), "y": to_text(data.duals[w])} for w in elems]
        else:
            raise InputError("steinberg needs one of: basis, gram, dual")
    elif head == "kg" and sub == "basis":
        data = _steinberg(cfg, datum)
        cells = g_basis(datum, cfg.cutoff, data)
        doc = {"cutoff": cfg.cutoff, "count": len(cells), "triples": [z.to_json() for z in cells]}
        csv_table = (["f", "chi", "f2"],
                     [[_word(z.f), json.dumps(list(z.chi)), _word(z.f2)] for z in cells])
    elif head == "kg" and sub == "test":
        data = _steinberg(cfg, datum)
        pairs = read_class_file(opts.get("class_file"), datum.rank)
        k = from_pairs(data, pairs)
        rows = [{"w": list(w.word), "restriction": to_text(restrict(k, w)),
                 "in_ZX": all(datum.in_sublattice(e) for e in restrict(k, w).terms)}
                for w in data.elements]
        doc = {"restrictions": rows, "in_KG": is_in_KG(datum, k),
               "normal_form": [{"element": list(f.word), "left": to_text(c)}
                               for f, c in k.recombine_named()]}
    elif head == "jring" and sub == "mult":
        a = parse_cell(opts["a"], datum)
        b = parse_cell(opts["b"], datum)
        prod = jmultiply(datum, a, b)
        data = _steinberg(cfg, datum)
        doc = {"a": a.to_json(), "b": b.to_json(), "product": prod.to_json(),
               "in_c0": {"a": in_c0(datum, a, data), "b": in_c0(datum, b, data)}}
        csv_table = (["f", "chi", "f2", "coeff"],
                     [[_word(z.f), json.dumps(list(z.chi)), _word(z.f2), c]
                      for z, c in prod.terms.items()])
    elif head == "verify" and sub == "sigma":
        data = _steinberg(cfg, datum)
        report = verify_sigma_hom(datum, cfg.cutoff, cfg.samples, cfg.seed, data,
                                  raise_on_failure=False)
        doc = report.to_json()
        status = EXIT_OK if report.ok else EXIT_VERIFY
    elif head == "cosets":
        I = opts.get("I") or []
        cosets = double_cosets(datum, I)
        doc = {"I": sorted(I),
               "cosets": [c.to_json() for c in cosets],
               "hasse_edges": [list(e) for e in hasse_edges(cosets)]}
        csv_table = (["index", "min_rep", "size"],
                     [[i, _word(c.min_rep), len(c)] for i, c in enumerate(cosets)])
    else:
        raise InputError(f"unknown command {' '.join(cmd)!r}")

    if cfg.format == "csv":
        if csv_table is None:
            raise InputError(f"CSV output is not available for {' '.join(cmd)}")
        return status, _rows_to_csv(*csv_table)
    return status, json.dumps(doc, indent=2, sort_keys=True) + "\n"


def read_class_file(path: str | None, rank: int) -> list[tuple[LaurentPoly, LaurentPoly]]:
    """A class as a JSON list of ``[left_poly_text, right_weight]`` pairs.

    Objects ``{"left": ..., "right": ...}`` are accepted as well.
    """
    if not path:
        raise InputError("--class FILE is required")
    try:
        doc = json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except ValueError as exc:
        raise InputError(f"class file is not JSON: {exc}") from None
    if isinstance(doc, dict) and "terms" in doc:
        doc = doc["terms"]
    if not isinstance(doc, list):
        raise InputError("class file must hold a list of (left, right) pairs")
    out = []
    for item in doc:
        if isinstance(item, dict):
            left, right = item.get("left"), item.get("right")
        elif isinstance(item, list) and len(item) == 2:
            left, right = item
        else:
            raise InputError(f"bad class term {item!r}")
        if not isinstance(left, str):
            raise InputError("left factor must be a polynomial in text form")
        if not (isinstance(right, list) and len(right) == rank and all(isinstance(x, int) for x in right)):
            raise InputError(f"right factor must be a weight of length {rank}")
        out.append((from_text(left, rank), LaurentPoly.monomial(right)))
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--datum", help="datum file (YAML/JSON) or preset such as a2_adjoint")
    common.add_argument("--format", default="json", choices=["json", "csv"])
    common.add_argument("--cache-dir", default=None,
                        help="Steinberg cache directory (default: $LOWCELL_CACHE_DIR, else off)")
    common.add_argument("--no-cache", action="store_true")
    common.add_argument("--max-cutoff", type=int, default=DEFAULT_MAX_CUTOFF)
    common.add_argument("--allow-large", action="store_true", help="allow rank > 4")

    p = argparse.ArgumentParser(prog="lowcell", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    top = p.add_subparsers(dest="cmd", required=True)

    d = top.add_parser("datum").add_subparsers(dest="sub", required=True)
    d.add_parser("describe", parents=[common])

    w = top.add_parser("weyl").add_subparsers(dest="sub", required=True)
    w.add_parser("list", parents=[common])

    c = top.add_parser("char").add_subparsers(dest="sub", required=True)
    cw = c.add_parser("weyl", parents=[common])
    cw.add_argument("--weight", required=True)
    ct = c.add_parser("tensor", parents=[common])
    ct.add_argument("--left", required=True)
    ct.add_argument("--right", required=True)

    s = top.add_parser("steinberg").add_subparsers(dest="sub", required=True)
    for name in ("basis", "gram", "dual"):
        s.add_parser(name, parents=[common])

    k = top.add_parser("kg").add_subparsers(dest="sub", required=True)
    kb = k.add_parser("basis", parents=[common])
    kb.add_argument("--cutoff", type=int, default=1)
    kt = k.add_parser("test", parents=[common])
    kt.add_argument("--class", dest="class_file", required=True)

    j = top.add_parser("jring").add_subparsers(dest="sub", required=True)
    jm = j.add_parser("mult", parents=[common])
    jm.add_argument("--a", required=True)
    jm.add_argument("--b", required=True)

    v = top.add_parser("verify").add_subparsers(dest="sub", required=True)
    vs = v.add_parser("sigma", parents=[common])
    vs.add_argument("--cutoff", type=int, default=1)
    vs.add_argument("--samples", type=int, default=200)
    vs.add_argument("--seed", type=int, default=0)

    cs = top.add_parser("cosets", parents=[common])
    cs.add_argument("--I", dest="I", default="")
    return p


def _error(kind: str, message: str, extra=None) -> str:
    doc = {"error": {"type": kind, "message": message}}
    if extra is not None:
        doc["error"]["detail"] = extra
    return json.dumps(doc, sort_keys=True)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed usage
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    command = [ns.cmd] + ([ns.sub] if getattr(ns, "sub", None) else [])
    options = {}
    for key in ("weight", "left", "right", "class_file", "a", "b"):
        if hasattr(ns, key):
            options[key] = getattr(ns, key)
    try:
        if hasattr(ns, "I"):
            options["I"] = [int(x) for x in ns.I.replace(" ", "").split(",") if x]
        cache_dir = "" if ns.no_cache else ns.cache_dir
        cfg = RunConfig(command=command, datum_path=ns.datum,
                        cutoff=getattr(ns, "cutoff", 1), samples=getattr(ns, "samples", 200),
                        seed=getattr(ns, "seed", 0), format=ns.format, cache_dir=cache_dir,
                        max_cutoff=ns.max_cutoff, allow_large=ns.allow_large, options=options)
        t0 = time.perf_counter()
        status, out = run(cfg)
        elapsed = time.perf_counter() - t0
    except InputError as exc:
        print(_error(type(exc).__name__, str(exc)), file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(_error("ParseError", str(exc)), file=sys.stderr)
        return EXIT_USAGE
    except VerificationFailed as exc:
        print(_error("VerificationFailed", str(exc), exc.counterexample), file=sys.stderr)
        return EXIT_VERIFY
    except (InvariantViolation, LowcellError) as exc:
        print(_error(type(exc).__name__, str(exc)), file=sys.stderr)
        return EXIT_INTERNAL
    sys.stdout.write(out)
    if command[0] == "verify":
        # timing varies run to run, so it stays out of the report document
        print(json.dumps({"elapsed_seconds": round(elapsed, 3)}), file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
