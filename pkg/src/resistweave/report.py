"""Machine-readable reports.

JSON reports carry a schema version, echo their config, and emit every float
with 17 significant digits so reruns are byte-comparable.  Per-pair error
tables go to CSV with fixed columns.
"""

from __future__ import annotations

import math
import os
from dataclasses import asdict, dataclass

import numpy as np

SCHEMA_VERSION = 1

ENV_SEED = "RESISTWEAVE_SEED"

CSV_COLUMNS = "trial,u,v,R_G,R_H,rel_err"


class ConfigError(ValueError):
    """Invalid experiment configuration (CLI exit code 2)."""


@dataclass
class ExperimentConfig:
    command: str
    generator: str = "complete"
    n: int | None = None
    degree: int | None = None
    epsilon: float | None = None
    d_target: int | None = None
    seed: int = 0
    trials: int = 1
    pair_budget: int = 2000
    round_constant: float = 10.0
    graph_path: str | None = None
    out: str | None = None
    fmt: str = "json"

    def validate(self):
        if self.epsilon is not None and not (0.0 < self.epsilon < 1.0):
            raise ConfigError(f"epsilon must lie in (0,1), got {self.epsilon}")
        if self.d_target is not None and self.d_target < 1:
            raise ConfigError(f"d-target must be >= 1, got {self.d_target}")
        if self.trials < 1:
            raise ConfigError(f"trials must be >= 1, got {self.trials}")
        if self.pair_budget < 1:
            raise ConfigError(f"pairs must be >= 1, got {self.pair_budget}")
        if self.round_constant <= 0:
            raise ConfigError(f"round-constant must be positive, got {self.round_constant}")
        if self.fmt not in ("json", "csv"):
            raise ConfigError(f"format must be json or csv, got {self.fmt}")
        if self.generator == "file" and not self.graph_path:
            raise ConfigError("generator 'file' needs --graph PATH")
        return self

    def to_dict(self) -> dict:
        return asdict(self)


def resolve_seed(flag_value) -> int:
    """Explicit flag wins; RESISTWEAVE_SEED is the fallback; default 0."""
    if flag_value is not None:
        return int(flag_value)
    env = os.environ.get(ENV_SEED)
    if env is not None:
        return int(env)
    return 0


def trial_rng(master_seed: int, trial: int) -> np.random.Generator:
    """Per-trial stream: the master seed splits by trial counter."""
    return np.random.default_rng([int(master_seed), int(trial)])


# -- JSON with pinned float formatting -------------------------------------------


def _format_float(x: float) -> str:
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    return format(x, ".17g")


def dumps(obj, indent: int = 2) -> str:
    """JSON text with floats at 17 significant digits and sorted keys."""

    def render(o, depth):
        pad = " " * (indent * depth)
        pad_in = " " * (indent * (depth + 1))
        if o is None:
            return "null"
        if o is True:
            return "true"
        if o is False:
            return "false"
        if isinstance(o, (np.floating, float)):
            return _format_float(float(o))
        if isinstance(o, (np.integer, int)):
            return str(int(o))
        if isinstance(o, str):
            import json as _json

            return _json.dumps(o)
        if isinstance(o, np.ndarray):
            o = o.tolist()
        if isinstance(o, dict):
            if not o:
                return "{}"
            items = []
            for key in sorted(o, key=str):
                import json as _json

                items.append(f"{pad_in}{_json.dumps(str(key))}: {render(o[key], depth + 1)}")
            return "{\n" + ",\n".join(items) + "\n" + pad + "}"
        if isinstance(o, (list, tuple)):
            if not o:
                return "[]"
            items = [f"{pad_in}{render(x, depth + 1)}" for x in o]
            return "[\n" + ",\n".join(items) + "\n" + pad + "]"
        raise TypeError(f"cannot serialize {type(o)!r}")

    return render(obj, 0) + "\n"


def build_report(config: ExperimentConfig, body: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "config": config.to_dict(), **body}


def write_text(path: str | None, text: str):
    if path is None:
        print(text, end="")
    else:
        with open(path, "w") as fh:
            fh.write(text)


def error_csv(rows) -> str:
    """CSV of per-pair errors: rows of (trial, u, v, r_g, r_h, rel_err)."""
    lines = [CSV_COLUMNS]
    for trial, u, v, rg, rh, rel in rows:
        lines.append(f"{trial},{u},{v},{rg:.17g},{rh:.17g},{rel:.17g}")
    return "\n".join(lines) + "\n"
