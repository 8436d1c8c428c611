"""Verification sweeps: a config, a task grid per statement, and a runner.

Tasks are (sort key, callable name, args) triples so they pickle cleanly for
worker processes.  Results are merged in sort-key order, whatever order the
workers finish in.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from typing import Callable, Dict, Iterable, List, Tuple

from . import verify
from .gauss import check_gauss

STATEMENTS = ("main", "tokuyama", "classic", "MN", "F", "longword", "branching", "gauss")


class ConfigError(ValueError):
    pass


def parse_range(text: str) -> Tuple[int, int]:
    """'3' -> (3, 3); '1-3' or '1..3' -> (1, 3)."""
    s = str(text).strip().replace("..", "-")
    try:
        if "-" in s[1:]:
            cut = s.index("-", 1)
            lo, hi = int(s[:cut]), int(s[cut + 1 :])
        else:
            lo = hi = int(s)
    except ValueError as exc:
        raise ConfigError(f"bad range {text!r}") from exc
    if lo > hi:
        raise ConfigError(f"empty range {text!r}")
    return lo, hi


@dataclass
class SweepConfig:
    statement: str = "main"
    r: Tuple[int, int] = (1, 2)
    n: Tuple[int, int] = (1, 2)
    lambda_max: int = 2
    format: str = "text"
    jobs: int = 0  # 0 means one worker per core
    seed: int = 0
    samples: int = 20
    p: int = 0  # gauss only; 0 picks the least admissible prime per n

    def validate(self) -> "SweepConfig":
        if self.statement not in STATEMENTS:
            raise ConfigError(f"unknown statement {self.statement!r}; choose from {', '.join(STATEMENTS)}")
        if self.r[0] < 1 or self.r[0] > self.r[1]:
            raise ConfigError("r range must be non-empty with r >= 1")
        if self.n[0] < 1 or self.n[0] > self.n[1]:
            raise ConfigError("n range must be non-empty with n >= 1")
        if self.lambda_max < 0:
            raise ConfigError("lambda-max must be non-negative")
        if self.format not in ("text", "json"):
            raise ConfigError("format must be text or json")
        if self.jobs < 0 or self.samples < 1:
            raise ConfigError("jobs must be >= 0 and samples >= 1")
        return self

    def update(self, items: Dict[str, str]) -> None:
        names = {f.name for f in fields(self)}
        for key, raw in items.items():
            key = key.strip().replace("-", "_")
            if key not in names:
                raise ConfigError(f"unknown config key {key!r}")
            if key in ("r", "n"):
                setattr(self, key, parse_range(raw))
            elif key in ("statement", "format"):
                setattr(self, key, str(raw).strip())
            else:
                try:
                    setattr(self, key, int(raw))
                except ValueError as exc:
                    raise ConfigError(f"{key} must be an integer") from exc


def read_config_file(path: str) -> Dict[str, str]:
    out = {}
    try:
        with open(path) as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from exc
    for num, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{num}: expected key=value")
        k, v = line.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def least_prime(n: int) -> int:
    from .gauss import is_prime

    p = 2 * n + 1
    while not is_prime(p):
        p += 2 * n
    return p


# Each task function returns a list of reports.


def _main(lam, n):
    return verify.check_main_all_lengths(lam, n)


def _tokuyama(lam, n):
    return [verify.check_tokuyama(lam, n)]


def _classic(lam):
    return [verify.check_classic_tokuyama(lam)]


def _mn(r, lam, n):
    return [verify.check_MN(kind, r, k, lam, n) for k in range(r) for kind in ("M", "N")]


def _F(mu, n):
    return [verify.check_F(mu, a, n) for a in range(1, 2 * n + 2)]


def _little_f(r, n, lam_max):
    out = []
    for a in (n, 2 * n, 3 * n):
        for g13 in range(lam_max + 1):
            for l2 in range(lam_max + 1):
                for l3 in range(l2 + 1):
                    out.append(verify.check_little_f(a, g13, l2, l3, n, r))
    return out


def _longword(r, n, samples, seed):
    return [verify.check_longword_formulas(r, n, samples, seed)]


def _branching(lam, n):
    return [verify.check_branching(lam, n)]


def _gauss(n, p):
    return [check_gauss(n, p)]


TASKS: Dict[str, Callable] = {
    "main": _main,
    "tokuyama": _tokuyama,
    "classic": _classic,
    "MN": _mn,
    "F": _F,
    "little_f": _little_f,
    "longword": _longword,
    "branching": _branching,
    "gauss": _gauss,
}

Task = Tuple[tuple, str, tuple]


def build_tasks(cfg: SweepConfig) -> List[Task]:
    rs = range(cfg.r[0], cfg.r[1] + 1)
    ns = range(cfg.n[0], cfg.n[1] + 1)
    L = cfg.lambda_max
    st = cfg.statement
    tasks: List[Task] = []
    if st in ("main", "tokuyama", "branching"):
        for r in rs:
            for n in ns:
                for lam in verify.dominant_weights(r, L):
                    tasks.append(((r, n, lam), st, (lam, n)))
    elif st == "classic":
        for r in rs:
            for lam in verify.dominant_weights(r, L):
                tasks.append(((r, lam), st, (lam,)))
    elif st == "MN":
        for r in rs:
            for n in ns:
                # one row of non-effective weights exercises the shift
                for lam in verify.dominant_weights(r, L, -1):
                    tasks.append(((r, n, lam), st, (r, lam, n)))
    elif st == "F":
        for r in rs:
            for n in ns:
                for mu in verify.dominant_weights(r, L):
                    tasks.append(((0, r, n, mu), "F", (mu, n)))
                if r >= 2:
                    tasks.append(((1, r, n, ()), "little_f", (r, n, L)))
    elif st == "longword":
        for r in rs:
            for n in ns:
                tasks.append(((r, n), st, (r, n, cfg.samples, cfg.seed)))
    elif st == "gauss":
        for n in ns:
            p = cfg.p or least_prime(n)
            tasks.append(((n, p), st, (n, p)))
    tasks.sort(key=lambda t: t[0])
    return tasks


def _run_one(name: str, args: tuple):
    return TASKS[name](*args)


def run_sweep(cfg: SweepConfig) -> Iterable[verify.CheckReport]:
    """Yield reports in grid order."""
    tasks = build_tasks(cfg)
    jobs = cfg.jobs or os.cpu_count() or 1
    if jobs == 1 or len(tasks) <= 1:
        for _, name, args in tasks:
            yield from _run_one(name, args)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_run_one, name, args) for _, name, args in tasks]
        for fut in futures:
            yield from fut.result()
