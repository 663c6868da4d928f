"""Configuration-driven verification runs and their reports."""

from __future__ import annotations

import hashlib
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Any, List, Optional, Sequence, Tuple

import yaml

from .cartan import CartanDatum, CartanError, DominanceError, cartan, coroot_decomposition, coweight, is_antidominant
from .gklo import InstanceResult
from .rational import rat, rat_str

GROUPS = ("relations", "truncation", "coproduct", "reduction", "classical", "qhr")

CITATIONS = {
    "relations": "GKLO images satisfy every defining relation of the shifted Yangian",
    "truncation": "A_i^(r) maps to (-1)^r e_r(w) and vanishes beyond m_i",
    "coproduct": "the shifted coproduct is an algebra map with the expected leading terms",
    "reduction": "localizing at E_i^(1) is justified by ad-nilpotency",
    "classical": "multiplication and its inverse identify slices with a Hamiltonian Ga action",
    "qhr": "quantum Hamiltonian reduction of differential operators on C^x",
}

STATUSES = ("pass", "fail", "oracle-relative-pass", "skipped")


class ConfigError(ValueError):
    """Malformed configuration; the message names the offending location."""


# Configuration


@dataclass(frozen=True)
class Case:
    lam: Tuple[int, ...]
    mu: Tuple[int, ...]
    R: Tuple[Tuple[str, ...], ...]
    split: bool = True

    def tag(self) -> str:
        return f"lambda={list(self.lam)} mu={list(self.mu)}"

    def R_rats(self):
        return tuple(tuple(rat(x) for x in row) for row in self.R)


@dataclass(frozen=True)
class SuiteConfig:
    cartan_spec: Any
    seed: int
    cases: Tuple[Case, ...]
    caps: Tuple[Tuple[str, int], ...]
    groups: Tuple[str, ...]
    reduction_shift: Optional[Tuple[int, ...]] = None
    oracle: Tuple[Tuple[Tuple[int, ...], Tuple[Tuple[str, ...], ...]], ...] = ()
    mutation: Optional[str] = None

    def cap(self, name: str) -> int:
        return dict(self.caps)[name]

    def datum(self) -> CartanDatum:
        return cartan(self.cartan_spec)


DEFAULT_CAPS = {
    "superscript": 4,
    "coproduct_superscript": 3,
    "word_length": 12,
    "order": 3,
    "window": 30,
    "points": 100,
    "sl3_points": 20,
    "mutations": 50,
    "qhr_cap": 20,
}


def _int_list(value, where: str) -> Tuple[int, ...]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in value):
        raise ConfigError(f"{where}: expected a list of integers, got {value!r}")
    return tuple(value)


def _rat_literal(value, where: str) -> str:
    if isinstance(value, bool) or isinstance(value, float):
        raise ConfigError(f"{where}: use an integer or a 'p/q' string, not {value!r}")
    try:
        return rat_str(rat(value))
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"{where}: not a rational literal: {value!r}") from exc


def _parameters(raw_R, lam, dat: CartanDatum, where: str) -> Tuple[Tuple[str, ...], ...]:
    if raw_R is None:
        return tuple(("0",) * lam[j] for j in dat.nodes)
    if not isinstance(raw_R, list) or len(raw_R) != dat.rank:
        raise ConfigError(f"{where}: expected {dat.rank} lists of parameters")
    R = []
    for j, row in enumerate(raw_R):
        if not isinstance(row, list) or len(row) != lam[j]:
            raise ConfigError(f"{where}[{j}]: expected {lam[j]} parameters")
        R.append(tuple(_rat_literal(x, f"{where}[{j}][{s}]") for s, x in enumerate(row)))
    return tuple(R)


def _cartan_spec(raw, where: str):
    if isinstance(raw, str):
        return raw
    if isinstance(raw, dict) and "matrix" in raw:
        a = raw["matrix"]
        if not isinstance(a, list) or not all(isinstance(r, list) for r in a):
            raise ConfigError(f"{where}.matrix: expected a list of rows")
        rows = tuple(_int_list(r, f"{where}.matrix[{k}]") for k, r in enumerate(a))
        d = raw.get("symmetrizers")
        return (rows, _int_list(d, f"{where}.symmetrizers") if d is not None else None)
    raise ConfigError(f"{where}: expected a type name such as 'A2' or a mapping with 'matrix'")


def parse_config(text: str, seed_override: int | None = None) -> SuiteConfig:
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        where = f"line {mark.line + 1}, column {mark.column + 1}" if mark else "document"
        raise ConfigError(f"{where}: invalid YAML") from exc
    if not isinstance(raw, dict):
        raise ConfigError("document: expected a mapping at the top level")
    known = {"cartan", "seed", "cases", "caps", "groups", "reduction_shift", "oracle", "mutation"}
    for key in raw:
        if key not in known:
            raise ConfigError(f"{key}: unknown key (expected one of {sorted(known)})")
    if "cartan" not in raw:
        raise ConfigError("cartan: missing")
    spec = _cartan_spec(raw["cartan"], "cartan")
    try:
        dat = cartan(spec)
    except CartanError as exc:
        raise ConfigError(f"cartan: {exc}") from exc
    if "seed" not in raw and seed_override is None:
        raise ConfigError("seed: missing (a seed is mandatory)")
    seed = seed_override if seed_override is not None else raw["seed"]
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise ConfigError(f"seed: expected an integer, got {seed!r}")

    cases = []
    for k, c in enumerate(raw.get("cases") or []):
        where = f"cases[{k}]"
        if not isinstance(c, dict):
            raise ConfigError(f"{where}: expected a mapping with lambda, mu and optional R")
        for key in c:
            if key not in ("lambda", "mu", "R", "split"):
                raise ConfigError(f"{where}.{key}: unknown key")
        for key in ("lambda", "mu"):
            if key not in c:
                raise ConfigError(f"{where}.{key}: missing")
        lam = _int_list(c["lambda"], f"{where}.lambda")
        mu = _int_list(c["mu"], f"{where}.mu")
        for name, vec in (("lambda", lam), ("mu", mu)):
            if len(vec) != dat.rank:
                raise ConfigError(f"{where}.{name}: expected {dat.rank} entries, got {len(vec)}")
        if any(x < 0 for x in lam):
            raise ConfigError(f"{where}.lambda: must be dominant")
        try:
            coroot_decomposition(dat, lam, mu)
        except (DominanceError, ValueError) as exc:
            raise ConfigError(f"{where}.mu: {exc}") from exc
        split = c.get("split", True)
        if not isinstance(split, bool):
            raise ConfigError(f"{where}.split: expected true or false")
        cases.append(Case(lam, mu, _parameters(c.get("R"), lam, dat, f"{where}.R"), split))

    caps = dict(DEFAULT_CAPS)
    for key, value in (raw.get("caps") or {}).items():
        if key not in DEFAULT_CAPS:
            raise ConfigError(f"caps.{key}: unknown cap (expected one of {sorted(DEFAULT_CAPS)})")
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise ConfigError(f"caps.{key}: expected a non-negative integer")
        caps[key] = value

    toggles = raw.get("groups")
    if toggles is None:
        groups = GROUPS
    elif isinstance(toggles, dict):
        for key, value in toggles.items():
            if key not in GROUPS:
                raise ConfigError(f"groups.{key}: unknown group (expected one of {list(GROUPS)})")
            if not isinstance(value, bool):
                raise ConfigError(f"groups.{key}: expected true or false")
        groups = tuple(g for g in GROUPS if toggles.get(g, True))
    else:
        raise ConfigError("groups: expected a mapping of group name to true/false")

    shift = raw.get("reduction_shift")
    if shift is not None:
        shift = _int_list(shift, "reduction_shift")
        if len(shift) != dat.rank:
            raise ConfigError(f"reduction_shift: expected {dat.rank} entries")
        if any(x > -2 for x in shift):
            raise ConfigError("reduction_shift: every pairing must be <= -2")
    oracle = []
    for k, o in enumerate(raw.get("oracle") or []):
        where = f"oracle[{k}]"
        if not isinstance(o, dict) or "lambda" not in o:
            raise ConfigError(f"{where}: expected a mapping with lambda and optional R")
        lam = _int_list(o["lambda"], f"{where}.lambda")
        if len(lam) != dat.rank or any(x < 0 for x in lam):
            raise ConfigError(f"{where}.lambda: expected {dat.rank} non-negative entries")
        try:
            coroot_decomposition(dat, lam, shift or (-2,) * dat.rank)
        except (DominanceError, ValueError) as exc:
            raise ConfigError(f"{where}.lambda: {exc}") from exc
        oracle.append((lam, _parameters(o.get("R"), lam, dat, f"{where}.R")))
    mutation = raw.get("mutation")
    if mutation not in (None, "corrupt_e_sign"):
        raise ConfigError(f"mutation: unknown fixture {mutation!r}")
    return SuiteConfig(spec, seed, tuple(cases), tuple(sorted(caps.items())), groups, shift, tuple(oracle), mutation)


def load_config(path: str, seed_override: int | None = None) -> SuiteConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ConfigError(f"{path}: cannot read ({exc.strerror})") from exc
    return parse_config(text, seed_override)


# Records


@dataclass(frozen=True)
class ReportRecord:
    check_id: str
    citation: str
    inputs: str
    status: str
    witness: str = ""
    millis: Optional[int] = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == "fail" and not self.witness:
            object.__setattr__(self, "witness", "(no witness text; the checked element was nonzero)")


def _digest(obj) -> str:
    return hashlib.sha256(json.dumps(obj, sort_keys=True, default=str).encode()).hexdigest()[:12]


def _records(group: str, prefix: str, inputs, results: Sequence[InstanceResult], millis: int) -> List[ReportRecord]:
    digest = _digest(inputs)
    out = []
    for r in results:
        if r.passed:
            status = "oracle-relative-pass" if "oracle-relative" in r.check_id else "pass"
        else:
            status = "fail"
        out.append(ReportRecord(f"{group}/{prefix}{r.check_id}", CITATIONS[group], digest, status, "" if r.passed else r.witness, millis))
    return out


# Units of work; top-level functions so they can run in worker processes


def _unit_relations(cfg: SuiteConfig, case: Case):
    from .gklo import GKLORep, gklo_data, verify_relations

    dat = cfg.datum()
    data = gklo_data(dat, case.lam, case.mu, case.R_rats())
    rep = GKLORep(data, corrupt_e_sign=cfg.mutation == "corrupt_e_sign")
    return verify_relations(data, cfg.cap("superscript"), rep)


def _unit_truncation(cfg: SuiteConfig, case: Case):
    from .gklo import GKLORep, gklo_data, truncation_report

    dat = cfg.datum()
    data = gklo_data(dat, case.lam, case.mu, case.R_rats())
    return truncation_report(data, cfg.cap("order"), GKLORep(data, corrupt_e_sign=cfg.mutation == "corrupt_e_sign"))


def _unit_coproduct(cfg: SuiteConfig, case: Case):
    from .coproduct import (
        coprod_ctx,
        coproduct_relation_check,
        explicit_comult_check,
        f_weight_shape_check,
        grading_check,
        localized_e_check,
        raise_vs_direct_check,
    )
    from .gklo import gklo_data

    dat = cfg.datum()
    R = case.R_rats()
    out: List[InstanceResult] = []
    cap = cfg.cap("coproduct_superscript")
    if case.split and is_antidominant(coweight(case.mu)):
        data = gklo_data(dat, case.lam, case.mu, R)
        ctx = coprod_ctx(dat, data, data)
        for r in raise_vs_direct_check(ctx, cap) + grading_check(ctx, cap) + coproduct_relation_check(ctx, cap):
            out.append(InstanceResult(f"split {list(case.mu)}+{list(case.mu)}: {r.check_id}", r.passed, r.witness))
    m = coroot_decomposition(dat, case.lam, case.mu)
    for i in dat.nodes:
        if m[i] < 1:
            continue
        for r in explicit_comult_check(dat, case.lam, case.mu, R, i, cfg.cap("order")) + localized_e_check(dat, case.lam, case.mu, R, i) + f_weight_shape_check(dat, case.lam, case.mu, R, i):
            out.append(InstanceResult(f"node {i + 1}: {r.check_id}", r.passed, r.witness))
    return out


def _unit_reduction(cfg: SuiteConfig, i: int):
    from .gklo import gklo_data
    from .localization import ad_nilpotency_check
    from .yangian import YangianCtx

    dat = cfg.datum()
    shift = cfg.reduction_shift or (-2,) * dat.rank
    family = [gklo_data(dat, lam, shift, tuple(tuple(rat(x) for x in row) for row in R)) for lam, R in cfg.oracle] or None
    return ad_nilpotency_check(YangianCtx(dat, shift, cap=8, length_cap=cfg.cap("word_length")), i, family)


def _unit_classical(cfg: SuiteConfig, part: str):
    from . import chart, slice_checks

    seed = cfg.seed
    n = cfg.cap("points")
    if part == "chart":
        out = chart.chart_bracket_check()
        for d in (1, 2, 3):
            out += chart.moment_map_flow_check(0, d)
        return out
    if part == "pgl2":
        pts: List = []
        out = slice_checks.pgl2_sweep(n, seed, collect=pts)
        out += slice_checks.rank1_reduction_check(n, seed, collect=pts)
        out += slice_checks.membership_check(pts, cfg.cap("mutations"), seed)
        return out
    if part == "sl3":
        return slice_checks.sl3_spot_check(cfg.cap("sl3_points"), seed)
    if part == "structure":
        return slice_checks.pi_invariance_check(20, seed) + slice_checks.shift_square_check(20, seed)
    raise ValueError(part)


def _unit_qhr(cfg: SuiteConfig, _):
    from .localization import qhr_check

    return qhr_check(cfg.cap("qhr_cap"))


UNITS = {
    "relations": _unit_relations,
    "truncation": _unit_truncation,
    "coproduct": _unit_coproduct,
    "reduction": _unit_reduction,
    "classical": _unit_classical,
    "qhr": _unit_qhr,
}


def plan(cfg: SuiteConfig, groups: Sequence[str]) -> List[Tuple[str, str, Any]]:
    """(group, id prefix, argument) for each unit of work."""
    out = []
    dat = cfg.datum()
    for group in groups:
        if group in ("relations", "truncation", "coproduct"):
            for case in cfg.cases:
                out.append((group, f"{case.tag()}: ", case))
        elif group == "reduction":
            for i in dat.nodes:
                out.append((group, f"node {i + 1}: ", i))
        elif group == "classical":
            for part in ("chart", "pgl2", "sl3", "structure"):
                out.append((group, f"{part}: ", part))
        elif group == "qhr":
            out.append((group, "", None))
    return out


def _run_unit(cfg: SuiteConfig, group: str, prefix: str, arg) -> List[ReportRecord]:
    start = time.perf_counter()
    try:
        results = UNITS[group](cfg, arg)
    except Exception as exc:  # a crashing unit is a failed check, not a crashed run
        results = [InstanceResult("unit raised", False, f"{type(exc).__name__}: {exc}")]
    millis = int((time.perf_counter() - start) * 1000)
    inputs = {"cartan": cfg.cartan_spec, "seed": cfg.seed, "caps": cfg.caps, "arg": asdict(arg) if isinstance(arg, Case) else arg}
    return _records(group, prefix, inputs, results, millis)


def run_suite(cfg: SuiteConfig, groups: Sequence[str] | None = None, jobs: int = 1) -> Tuple[List[ReportRecord], int]:
    """Run the selected groups; returns (records sorted by check id, exit status)."""
    groups = list(groups) if groups else list(cfg.groups)
    units = plan(cfg, groups)
    records: List[ReportRecord] = []
    if jobs > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for batch in pool.map(_run_unit, *zip(*[(cfg, g, p, a) for g, p, a in units])):
                records.extend(batch)
    else:
        for g, p, a in units:
            records.extend(_run_unit(cfg, g, p, a))
    records.sort(key=lambda r: r.check_id)
    status = 1 if any(r.status == "fail" for r in records) else 0
    return records, status


# Emission

SCHEMA = "yangslice-report/1"


def emit_report(records: Sequence[ReportRecord], fmt: str = "text", timings: bool = True) -> bytes:
    """``text``: one line per check after a header.  ``structured``: JSON with
    keys check_id, citation, inputs, status, witness, millis (sorted keys,
    records ordered by check id)."""
    if fmt == "structured":
        rows = []
        for r in records:
            d = asdict(r)
            if not timings:
                d["millis"] = None
            rows.append(d)
        doc = {"schema": SCHEMA, "records": rows}
        return (json.dumps(doc, sort_keys=True, indent=1, ensure_ascii=False) + "\n").encode()
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    counts = {s: sum(r.status == s for r in records) for s in STATUSES}
    lines = [f"{len(records)} checks: " + ", ".join(f"{counts[s]} {s}" for s in STATUSES)]
    for r in records:
        line = f"{r.status.upper():<22} {r.check_id}  [{r.citation}]"
        if timings and r.millis is not None:
            line += f"  {r.millis} ms"
        if r.witness:
            line += f"  witness: {r.witness}"
        lines.append(line)
    return ("\n".join(lines) + "\n").encode()


def parse_report(data: bytes) -> List[ReportRecord]:
    doc = json.loads(data.decode())
    if doc.get("schema") != SCHEMA:
        raise ValueError(f"unsupported schema {doc.get('schema')!r}")
    return [ReportRecord(**row) for row in doc["records"]]
