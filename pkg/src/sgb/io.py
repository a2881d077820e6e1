"""Canonical file formats, the polynomial string grammar, and the seeded
experiment runner with CSV emission.

System files are JSON documents with keys ``field.char``, ``vars``,
``polys`` and optional ``meta``.  Polynomial strings follow the grammar

    poly      := [sign] term (sign term)*
    term      := coeff | coeff "*" powerprod | powerprod
    powerprod := var("^"exp)? ("*" var("^"exp)?)*
    var       := "x"<digits> | "y"
    coeff     := decimal integer (reduced mod p)

with whitespace ignored and "-" or the unicode minus accepted as sign.
"""

from __future__ import annotations

import json
import os
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .analysis import child_seed, sample_system, sample_Z_system, verify_main_theorem
from .core import PolySystem, Polynomial, PrimeField, default_var_names, poly_to_string
from .errors import ParseError, SgbError, UnknownVariable

SCHEMA_VERSION = 1

# ---------------------------------------------------------------------------
# polynomial grammar
# ---------------------------------------------------------------------------

_VAR_NAME = re.compile(r"^(x[0-9]+|y)$")
_TOKEN = re.compile(r"[ \t\r\n]+|(?P<num>[0-9]+)|(?P<var>x[0-9]+|y)|(?P<op>[*^+\-−])")


def _line_col(text: str, pos: int) -> tuple[int, int]:
    line = text.count("\n", 0, pos) + 1
    last = text.rfind("\n", 0, pos)
    return line, pos - last


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            line, col = _line_col(text, pos)
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        if m.lastgroup == "num":
            tokens.append(("num", m.group(), pos))
        elif m.lastgroup == "var":
            tokens.append(("var", m.group(), pos))
        elif m.lastgroup == "op":
            op = "-" if m.group() == "−" else m.group()
            tokens.append(("op", op, pos))
        pos = m.end()
    return tokens


def parse_polynomial(text: str, names, fld: PrimeField) -> Polynomial:
    """Parse one polynomial string against the declared variable names."""
    n = len(names)
    index = {name: i for i, name in enumerate(names)}
    tokens = _tokenize(text)

    def error(msg, pos):
        line, col = _line_col(text, pos)
        raise ParseError(msg, line, col)

    coeffs: dict = {}
    i = 0
    if not tokens:
        error("empty polynomial", 0)

    first = True
    while i < len(tokens):
        sign = 1
        kind, val, pos = tokens[i]
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        elif not first:
            error(f"expected '+' or '-', got {val!r}", pos)
        first = False
        if i >= len(tokens):
            error("dangling sign", pos)

        # one term: optional coefficient, then optional power product
        coeff = 1
        exponents = [0] * n
        saw_factor = False
        kind, val, pos = tokens[i]
        if kind == "num":
            coeff = int(val)
            saw_factor = True
            i += 1
            if i < len(tokens) and tokens[i][:2] == ("op", "*"):
                i += 1
                if i >= len(tokens) or tokens[i][0] != "var":
                    error("expected a variable after '*'", tokens[min(i, len(tokens) - 1)][2])
            else:
                coeffs_key = tuple(exponents)
                coeffs[coeffs_key] = coeffs.get(coeffs_key, 0) + sign * coeff
                continue
        while True:
            kind, val, pos = tokens[i] if i < len(tokens) else (None, None, len(text))
            if kind != "var":
                if saw_factor and kind == "num":
                    error("coefficient must come first in a term", pos)
                error("expected a variable", pos)
            if val not in index:
                raise UnknownVariable(f"variable {val!r} not declared (declared: {', '.join(names)})")
            exp = 1
            i += 1
            if i < len(tokens) and tokens[i][:2] == ("op", "^"):
                i += 1
                if i >= len(tokens) or tokens[i][0] != "num":
                    error("expected an exponent after '^'", tokens[i - 1][2])
                exp = int(tokens[i][1])
                i += 1
            exponents[index[val]] += exp
            saw_factor = True
            if i < len(tokens) and tokens[i][:2] == ("op", "*"):
                i += 1
                continue
            break
        key = tuple(exponents)
        coeffs[key] = coeffs.get(key, 0) + sign * coeff

    return Polynomial(fld, n, coeffs)


# ---------------------------------------------------------------------------
# system files
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SystemDoc:
    """A parsed system file: the system plus its surface presentation."""

    system: PolySystem
    names: tuple
    meta: dict


def parse_system_doc(text: str) -> SystemDoc:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e.msg}", e.lineno, e.colno) from None
    if not isinstance(raw, dict):
        raise ParseError("top-level value must be an object")
    try:
        char = raw["field"]["char"]
        names = raw["vars"]
        poly_strings = raw["polys"]
    except (KeyError, TypeError):
        raise ParseError("expected keys field.char, vars, polys") from None
    meta = raw.get("meta", {})

    fld = PrimeField(char)  # BadModulus on a composite
    if not isinstance(names, list) or not names:
        raise ParseError("vars must be a nonempty array")
    if not isinstance(poly_strings, list) or not all(
        isinstance(s, str) for s in poly_strings
    ):
        raise ParseError("polys must be an array of strings")
    seen = set()
    for i, name in enumerate(names):
        if not isinstance(name, str) or not _VAR_NAME.match(name):
            raise ParseError(f"bad variable name {name!r}")
        if name in seen:
            raise ParseError(f"duplicate variable name {name!r}")
        if name == "y" and i != len(names) - 1:
            raise ParseError("the homogenization variable y must come last")
        seen.add(name)
    polys = tuple(parse_polynomial(s, names, fld) for s in poly_strings)
    return SystemDoc(PolySystem(fld, len(names), polys), tuple(names), dict(meta))


def parse_system(text: str) -> PolySystem:
    """Parse a system file; coefficients come back reduced mod p."""
    return parse_system_doc(text).system


def serialize_system_doc(doc: SystemDoc) -> str:
    """Canonical JSON form; parse(serialize(doc)) round-trips exactly."""
    payload = {
        "field": {"char": doc.system.field.p},
        "vars": list(doc.names),
        "polys": [poly_to_string(f, doc.names) for f in doc.system.polys],
    }
    if doc.meta:
        payload["meta"] = doc.meta
    return json.dumps(payload, indent=2) + "\n"


def system_doc(system: PolySystem, names=None, meta=None) -> SystemDoc:
    return SystemDoc(system, tuple(names or default_var_names(system.n)), dict(meta or {}))


# ---------------------------------------------------------------------------
# experiment records
# ---------------------------------------------------------------------------

CSV_COLUMNS = (
    "trial",
    "seed",
    "status",
    "n",
    "m",
    "degrees",
    "q",
    "r",
    "d_reg_ell",
    "gen_d_reg",
    "max_gb_deg",
    "D_nm",
    "lazard",
    "cryptographic",
    "generalized",
    "weakly_revlex",
    "ineq_maxGB",
    "ineq_Dnm",
    "equality_attained",
    "engine",
    "elapsed_ms",
)


@dataclass
class ExperimentRecord:
    trial: int
    seed: int
    status: str
    n: int
    m: int
    degrees: tuple
    q: int
    r: int | None = None
    d_reg_ell: int | None = None
    gen_d_reg: int | None = None
    max_gb_deg: int | None = None
    D_nm: int | None = None
    lazard: int | None = None
    cryptographic: bool | None = None
    generalized: bool | None = None
    weakly_revlex: bool | None = None
    ineq_maxGB: bool | None = None
    ineq_Dnm: bool | None = None
    equality_attained: bool | None = None
    engine: str = ""
    elapsed_ms: int | None = None

    @property
    def hypotheses_verified(self) -> bool:
        return (
            self.status == "ok"
            and self.r is not None
            and self.r <= 1
            and self.generalized is True
            and self.engine != "capped"
        )

    def csv_row(self) -> str:
        def fmt(v):
            if v is None:
                return "NA"
            if isinstance(v, bool):
                return "true" if v else "false"
            if isinstance(v, tuple):
                return ";".join(str(x) for x in v)
            return str(v)

        return ",".join(fmt(getattr(self, col)) for col in CSV_COLUMNS)


def _trial_record(args) -> ExperimentRecord:
    (trial, n, m, degrees, q, master_seed, construction, engine, max_attempts,
     timings, pair_budget) = args
    seed = child_seed(master_seed, trial)
    fld = PrimeField(q)
    sampler = sample_Z_system if construction == "Z" else sample_system
    system = sampler(n, m, degrees, fld, seed)
    start = time.monotonic()
    record = ExperimentRecord(trial, seed, "ok", n, m, tuple(degrees), q)
    try:
        report = verify_main_theorem(
            system,
            seed=seed,
            max_attempts=max_attempts,
            engine=engine,
            pair_budget=pair_budget,
        )
        record.r = report.krull_dim
        record.d_reg_ell = report.d_reg_ell
        record.gen_d_reg = report.gen_d_reg
        record.max_gb_deg = report.max_gb_deg_sigma
        record.D_nm = report.D_nm
        record.lazard = report.lazard
        record.cryptographic = report.semiregular.cryptographic
        record.generalized = report.semiregular.generalized
        record.weakly_revlex = report.weakly_revlex
        record.ineq_maxGB = report.ineq_max_gb
        record.ineq_Dnm = report.ineq_D_nm
        record.equality_attained = report.equality_attained
        record.engine = report.engine
    except SgbError as e:
        record.status = type(e).__name__
        record.engine = engine
    if timings:
        record.elapsed_ms = int((time.monotonic() - start) * 1000)
    return record


def worker_count() -> int:
    env = os.environ.get("SGB_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def run_experiment(
    n: int,
    m: int,
    degrees,
    q: int,
    trials: int,
    seed: int,
    construction: str = "generic",
    engine: str = "buchberger",
    max_attempts: int = 64,
    timings: bool = False,
    pair_budget: int | None = 200_000,
) -> list:
    """One record per trial, in trial order and deterministic for a fixed
    seed (timings excluded, hence off by default).

    Trials whose Buchberger run exhausts ``pair_budget`` fall back to the
    capped Macaulay engine and are marked engine="capped"; the budget counts
    S-pair reductions, so the fallback itself is seed-deterministic.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if construction not in ("generic", "Z"):
        raise ValueError(f"unknown construction {construction!r}")
    jobs = [
        (t, n, m, tuple(degrees), q, seed, construction, engine, max_attempts,
         timings, pair_budget)
        for t in range(trials)
    ]
    workers = worker_count()
    if workers <= 1 or trials == 1:
        return [_trial_record(job) for job in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_trial_record, jobs, chunksize=max(1, trials // (4 * workers))))


def write_csv(records, stream) -> None:
    stream.write(",".join(CSV_COLUMNS) + "\n")
    for rec in records:
        stream.write(rec.csv_row() + "\n")


_BOOL_COLUMNS = frozenset(
    ("cryptographic", "generalized", "weakly_revlex", "ineq_maxGB", "ineq_Dnm",
     "equality_attained")
)
_TEXT_COLUMNS = frozenset(("status", "engine"))


def read_csv(text: str) -> list:
    """Parse experiment CSV text back into records (summary-tool input)."""
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    if not lines or lines[0] != ",".join(CSV_COLUMNS):
        raise ParseError("unrecognized experiment CSV header")
    records = []
    for lineno, line in enumerate(lines[1:], start=2):
        cells = line.split(",")
        if len(cells) != len(CSV_COLUMNS):
            raise ParseError(f"expected {len(CSV_COLUMNS)} columns", lineno, 1)
        kwargs = {}
        for col, cell in zip(CSV_COLUMNS, cells):
            if col in _TEXT_COLUMNS:
                kwargs[col] = cell
            elif cell == "NA":
                kwargs[col] = None
            elif col in _BOOL_COLUMNS:
                kwargs[col] = cell == "true"
            elif col == "degrees":
                kwargs[col] = tuple(int(v) for v in cell.split(";"))
            else:
                kwargs[col] = int(cell)
        records.append(ExperimentRecord(**kwargs))
    return records


def _rate(part: int, whole: int) -> str:
    return f"{part / whole:.3f}" if whole else "NA"


def summarize(records) -> str:
    """One-line digest: rates, violations under verified hypotheses, and the
    histogram of D_nm - max.GB.deg gaps."""
    ok = [r for r in records if r.status == "ok"]
    hyp = [r for r in records if r.hypotheses_verified]
    crypto = sum(1 for r in ok if r.cryptographic is True)
    crypto_applicable = sum(1 for r in ok if r.cryptographic is not None)
    gen = sum(1 for r in ok if r.generalized is True)
    gen_applicable = sum(1 for r in ok if r.generalized is not None)
    maxgb_viol = sum(1 for r in hyp if r.ineq_maxGB is False)
    dnm_viol = sum(1 for r in hyp if r.ineq_Dnm is False)
    eq_rows = [r for r in ok if r.equality_attained is not None]
    eq_true = sum(1 for r in eq_rows if r.equality_attained)
    gaps: dict = {}
    for r in ok:
        if r.D_nm is not None and r.max_gb_deg is not None:
            gaps[r.D_nm - r.max_gb_deg] = gaps.get(r.D_nm - r.max_gb_deg, 0) + 1
    gap_hist = ";".join(f"{k}:{gaps[k]}" for k in sorted(gaps)) or "NA"
    return (
        f"# summary schema={SCHEMA_VERSION} trials={len(records)} ok={len(ok)}"
        f" cryptographic_rate={_rate(crypto, crypto_applicable)}"
        f" generalized_rate={_rate(gen, gen_applicable)}"
        f" hypothesis_rows={len(hyp)}"
        f" maxGB_violations={maxgb_viol} Dnm_violations={dnm_viol}"
        f" equality_attained={eq_true}/{len(eq_rows)}"
        f" gap_hist={gap_hist}"
    )
