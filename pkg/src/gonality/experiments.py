"""Monte Carlo harness over G(n, p): per-trial measurements, CSV output,
and convergence reporting for the gonality-over-n trend.

Reproducibility contract: a trial is a pure function of
``(n, p, per-trial seed, mode, budgets)``, and the per-trial seed is a pure
mix of the master seed with ``(n, trial index)``.  Runs with identical
configuration therefore produce byte-identical CSV files, independent of
worker count or scheduling.  Wall-clock columns are left empty unless
``record_timings`` is set, since real timings would break that guarantee.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .bounds import maximum_independent_set, treewidth_exact, treewidth_lower_bound
from .errors import BudgetExceededError, GonalityError
from .graphs import GnpParams, genus, sample_gnp
from .search import gonality

CSV_HEADER = (
    "n,c,p,trial,seed,connected,genus,alpha,alpha_exact,tw_lb,tw_exact,"
    "gon_lb,gon_ub,gon_exact,mode,ms_alpha,ms_tw,ms_gon"
)

_MASK64 = (1 << 64) - 1


def _splitmix64(z: int) -> int:
    """One step of the SplitMix64 finalizer (public-domain constants)."""
    z = (z + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def mix_trial_seed(master: int, n: int, trial: int) -> int:
    """Per-trial seed: chained SplitMix64 over master, n, and trial index.

    Order-independent across trials, so parallel execution cannot change
    which graph any trial sees.
    """
    s = _splitmix64(master & _MASK64)
    s = _splitmix64(s ^ (n & _MASK64))
    return _splitmix64(s ^ (trial & _MASK64))


def c_of(c_spec: str, n: int) -> float:
    """Mean-degree family: ``sqrt`` is sqrt(n), ``log`` is ln(n), ``p:x``
    pins the edge probability at x (so c = x*n, for dense control series),
    and anything else must parse as a positive constant."""
    if c_spec == "sqrt":
        return math.sqrt(n)
    if c_spec == "log":
        return math.log(n)
    if c_spec.startswith("p:"):
        try:
            p = float(c_spec[2:])
        except ValueError as exc:
            raise GonalityError(f"bad fixed-probability spec {c_spec!r}") from exc
        if not (0.0 <= p <= 1.0):
            raise GonalityError(f"fixed probability must be in [0, 1], got {p}")
        return p * n
    try:
        c = float(c_spec)
    except ValueError as exc:
        raise GonalityError(
            f"c spec must be 'sqrt', 'log', 'p:x', or a number, got {c_spec!r}"
        ) from exc
    if c <= 0:
        raise GonalityError(f"constant c must be positive, got {c}")
    return c


@dataclass(frozen=True)
class ExperimentConfig:
    """Full description of a run; equal configs give byte-equal CSVs."""

    n_list: tuple[int, ...]
    c_spec: str
    trials: int
    seed: int
    mode: str = "exact"
    exact_gonality_limit: int = 12
    treewidth_limit: int = 16
    mis_budget: Optional[int] = None
    gonality_budget: Optional[int] = None
    record_timings: bool = False
    workers: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "n_list", tuple(self.n_list))
        if not self.n_list:
            raise GonalityError("n_list must not be empty")
        if self.trials < 0:
            raise GonalityError(f"trials must be nonnegative, got {self.trials}")
        if self.mode not in ("exact", "sandwich"):
            raise GonalityError(f"mode must be 'exact' or 'sandwich', got {self.mode!r}")
        for n in self.n_list:
            c = c_of(self.c_spec, n)
            if not (0.0 <= c / n <= 1.0):
                raise GonalityError(f"c spec {self.c_spec!r} gives p outside [0,1] at n={n}")
        if self.mode == "exact" and max(self.n_list) > self.exact_gonality_limit:
            raise GonalityError(
                f"exact mode allows n up to {self.exact_gonality_limit}, "
                f"got n={max(self.n_list)}; use mode='sandwich'"
            )


@dataclass(frozen=True)
class TrialRecord:
    """One row of the experiment CSV.

    ``gon_lb`` is the best certified lower bound available for the row
    (exact treewidth when computed, degeneracy otherwise); ``gon_ub`` is
    ``n - alpha``, valid even when alpha is only a flagged lower bound.
    ``None`` in an optional field serializes as an empty CSV cell.
    """

    n: int
    c: float
    p: float
    trial: int
    seed: int
    connected: bool
    genus: int
    alpha: int
    alpha_exact: bool
    tw_lb: int
    tw_exact: Optional[int]
    gon_lb: int
    gon_ub: int
    gon_exact: Optional[int]
    mode: str
    ms_alpha: Optional[float] = None
    ms_tw: Optional[float] = None
    ms_gon: Optional[float] = None


@dataclass(frozen=True)
class SummaryRow:
    n: int
    c: float
    trials: int
    mean_gon_ratio: Optional[float]
    std_gon_ratio: Optional[float]
    mean_tw_lb_ratio: float
    std_tw_lb_ratio: Optional[float]
    mean_ub_ratio: float
    std_ub_ratio: Optional[float]
    frieze_ub_ratio: Optional[float]


@dataclass(frozen=True)
class ExperimentSummary:
    rows: tuple[SummaryRow, ...]
    total_trials: int


def run_trial(
    n: int,
    p: float,
    seed: int,
    mode: str,
    *,
    c: Optional[float] = None,
    trial: int = 0,
    exact_gonality_limit: int = 12,
    treewidth_limit: int = 16,
    mis_budget: Optional[int] = None,
    gonality_budget: Optional[int] = None,
    record_timings: bool = False,
) -> TrialRecord:
    """Sample one graph and measure every column for its row."""
    params = GnpParams.from_p(n, p, seed)
    graph = sample_gnp(params)
    connected = graph.is_connected()
    gns = genus(graph)

    t0 = time.perf_counter()
    mis = maximum_independent_set(graph, mis_budget)
    ms_alpha = (time.perf_counter() - t0) * 1000.0
    alpha = mis.alpha
    gon_ub = n - alpha

    t0 = time.perf_counter()
    tw_lb = treewidth_lower_bound(graph)
    tw_ex: Optional[int] = None
    if n <= treewidth_limit:
        tw_ex = treewidth_exact(graph, treewidth_limit)[0]
    ms_tw = (time.perf_counter() - t0) * 1000.0

    gon_lb = max(tw_lb, tw_ex) if tw_ex is not None else tw_lb
    gon_exact: Optional[int] = None
    t0 = time.perf_counter()
    if mode == "exact" and n <= exact_gonality_limit:
        try:
            if connected:
                result = gonality(
                    graph,
                    gonality_budget,
                    with_certificate=False,
                    lower_bound=tw_ex if tw_ex is not None else 1,
                    independent_set=mis.independent.vertices,
                )
            else:
                result = gonality(graph, gonality_budget, with_certificate=False)
            gon_exact = result.value
        except BudgetExceededError:
            gon_exact = None  # row kept; empty cell flags the exhaustion
    ms_gon = (time.perf_counter() - t0) * 1000.0

    if gon_exact is not None and not (gon_lb <= gon_exact <= gon_ub):
        raise GonalityError(
            f"sandwich violated at n={n} seed={seed}: "
            f"{gon_lb} <= {gon_exact} <= {gon_ub} fails; this is a bug"
        )
    return TrialRecord(
        n=n,
        c=c if c is not None else p * n,
        p=params.p,
        trial=trial,
        seed=seed,
        connected=connected,
        genus=gns,
        alpha=alpha,
        alpha_exact=mis.exact,
        tw_lb=tw_lb,
        tw_exact=tw_ex,
        gon_lb=gon_lb,
        gon_ub=gon_ub,
        gon_exact=gon_exact,
        mode=mode,
        ms_alpha=ms_alpha if record_timings else None,
        ms_tw=ms_tw if record_timings else None,
        ms_gon=ms_gon if record_timings else None,
    )


def _trial_from_task(task: tuple) -> TrialRecord:
    config, n, trial = task
    c = c_of(config.c_spec, n)
    p = c / n
    seed = mix_trial_seed(config.seed, n, trial)
    return run_trial(
        n,
        p,
        seed,
        config.mode,
        c=c,
        trial=trial,
        exact_gonality_limit=config.exact_gonality_limit,
        treewidth_limit=config.treewidth_limit,
        mis_budget=config.mis_budget,
        gonality_budget=config.gonality_budget,
        record_timings=config.record_timings,
    )


def run_experiment(
    config: ExperimentConfig, csv_path: Optional[str] = None
) -> tuple[ExperimentSummary, list[TrialRecord]]:
    """Run all trials (optionally in parallel), sorted deterministically.

    Writes the CSV artifact when ``csv_path`` is given and returns the
    summary along with the records it was computed from.
    """
    tasks = [
        (config, n, trial)
        for n in sorted(config.n_list)
        for trial in range(config.trials)
    ]
    if config.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            records = list(pool.map(_trial_from_task, tasks, chunksize=4))
    else:
        records = [_trial_from_task(t) for t in tasks]
    records.sort(key=lambda r: (r.n, r.trial))
    if csv_path is not None:
        write_records_csv(records, csv_path)
    return summarize(records), records


def _fmt_opt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "1" if value else "0"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def record_to_csv_row(r: TrialRecord) -> str:
    return ",".join(
        (
            str(r.n),
            repr(r.c),
            repr(r.p),
            str(r.trial),
            str(r.seed),
            "1" if r.connected else "0",
            str(r.genus),
            str(r.alpha),
            "1" if r.alpha_exact else "0",
            str(r.tw_lb),
            _fmt_opt(r.tw_exact),
            str(r.gon_lb),
            str(r.gon_ub),
            _fmt_opt(r.gon_exact),
            r.mode,
            "" if r.ms_alpha is None else f"{r.ms_alpha:.3f}",
            "" if r.ms_tw is None else f"{r.ms_tw:.3f}",
            "" if r.ms_gon is None else f"{r.ms_gon:.3f}",
        )
    )


def write_records_csv(records: list[TrialRecord], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(CSV_HEADER + "\n")
        for r in records:
            fh.write(record_to_csv_row(r) + "\n")


def read_records_csv(path: str) -> list[TrialRecord]:
    with open(path, "r", encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines or lines[0] != CSV_HEADER:
        raise GonalityError(f"unexpected CSV header in {path}")
    records = []
    for line in lines[1:]:
        f = line.split(",")
        records.append(
            TrialRecord(
                n=int(f[0]),
                c=float(f[1]),
                p=float(f[2]),
                trial=int(f[3]),
                seed=int(f[4]),
                connected=f[5] == "1",
                genus=int(f[6]),
                alpha=int(f[7]),
                alpha_exact=f[8] == "1",
                tw_lb=int(f[9]),
                tw_exact=int(f[10]) if f[10] else None,
                gon_lb=int(f[11]),
                gon_ub=int(f[12]),
                gon_exact=int(f[13]) if f[13] else None,
                mode=f[14],
                ms_alpha=float(f[15]) if f[15] else None,
                ms_tw=float(f[16]) if f[16] else None,
                ms_gon=float(f[17]) if f[17] else None,
            )
        )
    return records


def _mean(xs: list[float]) -> float:
    return sum(xs) / len(xs)


def _sample_std(xs: list[float]) -> Optional[float]:
    if len(xs) < 2:
        return None
    mu = _mean(xs)
    return math.sqrt(sum((x - mu) ** 2 for x in xs) / (len(xs) - 1))


def summarize(records: list[TrialRecord]) -> ExperimentSummary:
    """Per-n aggregates, recomputable exactly from the CSV records."""
    by_n: dict[int, list[TrialRecord]] = {}
    for r in records:
        by_n.setdefault(r.n, []).append(r)
    rows = []
    for n in sorted(by_n):
        group = sorted(by_n[n], key=lambda r: r.trial)
        c = group[0].c
        gon = [r.gon_exact / n for r in group if r.gon_exact is not None]
        twlb = [r.tw_lb / n for r in group]
        ub = [r.gon_ub / n for r in group]
        frieze_ratio: Optional[float] = None
        if c > math.e:
            frieze_ratio = 1.0 - (2.0 / c) * (
                math.log(c) - math.log(math.log(c)) - math.log(2.0) + 1.0
            )
        rows.append(
            SummaryRow(
                n=n,
                c=c,
                trials=len(group),
                mean_gon_ratio=_mean(gon) if gon else None,
                std_gon_ratio=_sample_std(gon) if gon else None,
                mean_tw_lb_ratio=_mean(twlb),
                std_tw_lb_ratio=_sample_std(twlb),
                mean_ub_ratio=_mean(ub),
                std_ub_ratio=_sample_std(ub),
                frieze_ub_ratio=frieze_ratio,
            )
        )
    return ExperimentSummary(tuple(rows), len(records))


def convergence_report(summary: ExperimentSummary) -> str:
    """Per-n ratio table for the expected-gonality trend.

    One CSV-style line per n: the empirical mean of gon/n (or the certified
    envelope when exact gonality was not computed), the theoretical
    upper-bound ratio from the independence-number estimate, and whether
    the empirical envelope is consistent (lower <= upper).
    """
    if len(summary.rows) < 2:
        raise GonalityError("convergence report needs at least two values of n")
    out = [
        "n,c,trials,gon_over_n_mean,gon_over_n_std,tw_lb_over_n_mean,"
        "ub_over_n_mean,frieze_ub_ratio,consistent"
    ]
    for row in summary.rows:
        lo = row.mean_tw_lb_ratio
        hi = row.mean_ub_ratio
        mid = row.mean_gon_ratio
        consistent = lo <= hi and (mid is None or lo <= mid <= hi)
        out.append(
            ",".join(
                (
                    str(row.n),
                    repr(row.c),
                    str(row.trials),
                    _fmt_opt(row.mean_gon_ratio),
                    _fmt_opt(row.std_gon_ratio),
                    repr(lo),
                    repr(hi),
                    _fmt_opt(row.frieze_ub_ratio),
                    "1" if consistent else "0",
                )
            )
        )
    return "\n".join(out) + "\n"
