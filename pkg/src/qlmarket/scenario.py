"""Scenario documents, run orchestration, and record serialization.

A scenario is a flat TOML document (flat keys plus the nested ``initial``
list) describing one evolution run end to end, so a run's configuration can
be archived next to its output. Unknown keys are a hard error: a typo in an
optional key must not silently change the physics.

Serialization is deterministic: the same scenario always yields byte
identical CSV/JSON, with floats printed at 12 significant digits in CSV and
full precision in JSON.
"""
from __future__ import annotations

import json
import os
import sys
from dataclasses import dataclass, replace
from importlib import resources
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .errors import ParseError, QlmError, UnknownKeyError, ValidationError
from .evolve import DEFAULT_MAX_STEPS, INTEGRATORS, EvolutionConfig, evolve
from .observe import ObservationRecord, observe_trajectory
from .operators import HamiltonianParams
from .potentials import KINDS, PotentialSpec
from .state import Distribution, StateVector, make_state

MAX_STEPS_ENV = "QLM_MAX_STEPS"

CSV_HEADER = (
    "time,site,price_prob,owner_prob,mean_price,mean_owner,"
    "var_price,var_owner,mode_price,mode_owner"
)

_REQUIRED_KEYS = (
    "name", "n_sites", "initial", "mu", "potential",
    "t_end", "dt", "snapshot_every", "integrator",
)
_OPTIONAL_KEYS = ("beta", "omega", "table", "alpha")
ALLOWED_KEYS = frozenset(_REQUIRED_KEYS + _OPTIONAL_KEYS)


@dataclass(frozen=True)
class Scenario:
    """One fully-specified run; runs always start at t = 0."""

    name: str
    n_sites: int
    initial: tuple[tuple[int, complex], ...]
    mu: float
    potential: PotentialSpec
    t_end: float
    dt: float
    snapshot_every: float
    integrator: str
    alpha: float | None = None  # parsed and echoed, unused by the dynamics

    def initial_state(self) -> StateVector:
        return make_state(self.n_sites, self.initial)

    def as_dict(self) -> dict:
        """Flat summary used for the effective-config echo."""
        out = {
            "name": self.name,
            "n_sites": self.n_sites,
            "initial": [[i, a.real, a.imag] for i, a in self.initial],
            "mu": self.mu,
            "potential": self.potential.kind,
            "t_end": self.t_end,
            "dt": self.dt,
            "snapshot_every": self.snapshot_every,
            "integrator": self.integrator,
        }
        if self.potential.kind == "cosine_drive":
            out["beta"] = self.potential.beta
            out["omega"] = self.potential.omega
        elif self.potential.kind == "table":
            out["table"] = [[t, list(v)] for t, v in self.potential.table]
        if self.alpha is not None:
            out["alpha"] = self.alpha
        return out


def _require(data: dict, key: str):
    if key not in data:
        raise ValidationError(f"{key}: required key is missing")
    return data[key]


def _as_number(value, key: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValidationError(f"{key}: expected a number, got {value!r}")
    return float(value)


def _as_int(value, key: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{key}: expected an integer, got {value!r}")
    return value


def _as_str(value, key: str) -> str:
    if not isinstance(value, str):
        raise ValidationError(f"{key}: expected a string, got {value!r}")
    return value


def _parse_initial(value) -> tuple[tuple[int, complex], ...]:
    if not isinstance(value, list) or not value:
        raise ValidationError("initial: expected a non-empty list of [index, re, im] rows")
    rows = []
    for row in value:
        if not isinstance(row, list) or len(row) != 3:
            raise ValidationError(f"initial: expected [index, re, im], got {row!r}")
        index = _as_int(row[0], "initial index")
        rows.append((index, complex(_as_number(row[1], "initial re"),
                                    _as_number(row[2], "initial im"))))
    return tuple(rows)


def _parse_potential(data: dict, n_sites: int) -> PotentialSpec:
    kind = _as_str(_require(data, "potential"), "potential")
    if kind not in KINDS:
        raise ValidationError(f"potential: unknown kind {kind!r}; choose from {KINDS}")
    given = {key for key in ("beta", "omega", "table") if key in data}
    wanted = {"cosine_drive": {"beta", "omega"}, "table": {"table"}, "zero": set()}[kind]
    if given != wanted:
        raise ValidationError(
            f"potential kind {kind!r} takes keys {sorted(wanted)}, got {sorted(given)}"
        )
    if kind == "zero":
        return PotentialSpec.zero()
    if kind == "cosine_drive":
        return PotentialSpec.cosine_drive(
            _as_number(data["beta"], "beta"), _as_number(data["omega"], "omega")
        )
    rows = data["table"]
    if not isinstance(rows, list) or not rows:
        raise ValidationError("table: expected a non-empty list of [time, values] rows")
    parsed = []
    for row in rows:
        if not isinstance(row, list) or len(row) != 2 or not isinstance(row[1], list):
            raise ValidationError(f"table: expected [time, [values...]], got {row!r}")
        if len(row[1]) != n_sites:
            raise ValidationError(
                f"table: row has {len(row[1])} values, lattice has {n_sites} sites"
            )
        parsed.append((_as_number(row[0], "table time"),
                       [_as_number(v, "table value") for v in row[1]]))
    try:
        return PotentialSpec.from_table(parsed)
    except ValidationError as exc:
        raise ValidationError(f"table: {exc}") from exc


def parse_scenario(text: str) -> Scenario:
    """Parse and fully validate a scenario document."""
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ParseError(str(exc)) from exc

    unknown = sorted(set(data) - ALLOWED_KEYS)
    if unknown:
        raise UnknownKeyError(f"unknown keys: {', '.join(unknown)}")
    for key in _REQUIRED_KEYS:
        _require(data, key)

    n_sites = _as_int(data["n_sites"], "n_sites")
    if n_sites < 1:
        raise ValidationError(f"n_sites: must be positive, got {n_sites}")
    integrator = _as_str(data["integrator"], "integrator")
    if integrator not in INTEGRATORS:
        raise ValidationError(
            f"integrator: unknown integrator {integrator!r}; choose from {INTEGRATORS}"
        )
    mu = _as_number(data["mu"], "mu")
    if not mu > 0:
        raise ValidationError(f"mu: must be positive, got {mu!r}")
    t_end = _as_number(data["t_end"], "t_end")
    if t_end < 0:
        raise ValidationError(f"t_end: must be nonnegative, got {t_end!r}")
    dt = _as_number(data["dt"], "dt")
    if not dt > 0:
        raise ValidationError(f"dt: must be positive, got {dt!r}")
    snapshot_every = _as_number(data["snapshot_every"], "snapshot_every")
    if not snapshot_every > 0:
        raise ValidationError(f"snapshot_every: must be positive, got {snapshot_every!r}")
    if dt > snapshot_every:
        raise ValidationError("dt: must not exceed snapshot_every")

    initial = _parse_initial(data["initial"])
    try:
        make_state(n_sites, initial)
    except QlmError as exc:
        raise ValidationError(f"initial: {exc}") from exc

    scenario = Scenario(
        name=_as_str(data["name"], "name"),
        n_sites=n_sites,
        initial=initial,
        mu=mu,
        potential=_parse_potential(data, n_sites),
        t_end=t_end,
        dt=dt,
        snapshot_every=snapshot_every,
        integrator=integrator,
        alpha=_as_number(data["alpha"], "alpha") if "alpha" in data else None,
    )
    return scenario


def with_overrides(s: Scenario, integrator: str | None = None, dt: float | None = None) -> Scenario:
    """Apply command-line overrides, revalidating the stepping relation."""
    if integrator is not None:
        if integrator not in INTEGRATORS:
            raise ValidationError(f"integrator: unknown integrator {integrator!r}")
        s = replace(s, integrator=integrator)
    if dt is not None:
        if not dt > 0:
            raise ValidationError(f"dt: must be positive, got {dt!r}")
        if dt > s.snapshot_every:
            raise ValidationError("dt: must not exceed snapshot_every")
        s = replace(s, dt=dt)
    return s


def step_budget() -> int:
    """The evolve step budget, overridable through QLM_MAX_STEPS."""
    raw = os.environ.get(MAX_STEPS_ENV)
    if raw is None:
        return DEFAULT_MAX_STEPS
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValidationError(f"{MAX_STEPS_ENV}: expected an integer, got {raw!r}") from exc
    if value < 1:
        raise ValidationError(f"{MAX_STEPS_ENV}: must be positive, got {value}")
    return value


def run_scenario(s: Scenario) -> tuple[list[ObservationRecord], StateVector]:
    """Build the initial state, evolve, observe. Fully deterministic."""
    config = EvolutionConfig(
        integrator=s.integrator,
        dt=s.dt,
        t_start=0.0,
        t_end=s.t_end,
        snapshot_every=s.snapshot_every,
        params=HamiltonianParams(mu=s.mu, potential=s.potential),
        max_steps=step_budget(),
    )
    trajectory = evolve(s.initial_state(), config)
    return observe_trajectory(trajectory), trajectory.terminal


def _fmt(value: float) -> str:
    return f"{value:.12g}"


def render_csv(records: list[ObservationRecord]) -> str:
    """CSV text: fixed header, one row per (snapshot, site)."""
    lines = [CSV_HEADER]
    for rec in records:
        shared = (
            _fmt(rec.mean_price), _fmt(rec.mean_owner),
            _fmt(rec.var_price), _fmt(rec.var_owner),
            str(rec.mode_price), str(rec.mode_owner),
        )
        for site in range(rec.price_weights.n_sites):
            lines.append(",".join((
                _fmt(rec.time), str(site),
                _fmt(rec.price_weights.weights[site]),
                _fmt(rec.owner_weights.weights[site]),
            ) + shared))
    return "\n".join(lines) + "\n"


def _record_dict(rec: ObservationRecord) -> dict:
    return {
        "time": rec.time,
        "price_weights": [float(w) for w in rec.price_weights.weights],
        "owner_weights": [float(w) for w in rec.owner_weights.weights],
        "mean_price": rec.mean_price,
        "mean_owner": rec.mean_owner,
        "var_price": rec.var_price,
        "var_owner": rec.var_owner,
        "mode_price": rec.mode_price,
        "mode_owner": rec.mode_owner,
    }


def render_json(records: list[ObservationRecord]) -> str:
    """JSON text: an array of objects mirroring ObservationRecord."""
    return json.dumps([_record_dict(r) for r in records], indent=2) + "\n"


def records_from_json(text: str) -> list[ObservationRecord]:
    """Inverse of render_json, for round-tripping emitted files."""
    records = []
    for item in json.loads(text):
        n = len(item["price_weights"])
        records.append(ObservationRecord(
            time=item["time"],
            price_weights=Distribution(n, item["price_weights"]),
            owner_weights=Distribution(n, item["owner_weights"]),
            mean_price=item["mean_price"],
            mean_owner=item["mean_owner"],
            var_price=item["var_price"],
            var_owner=item["var_owner"],
            mode_price=item["mode_price"],
            mode_owner=item["mode_owner"],
        ))
    return records


def emit_records(records: list[ObservationRecord], fmt: str, destination) -> None:
    """Write records to a path or file-like object as CSV or JSON."""
    if not records:
        raise ValidationError("no records to emit")
    if fmt == "csv":
        text = render_csv(records)
    elif fmt == "json":
        text = render_json(records)
    else:
        raise ValidationError(f"format: expected 'csv' or 'json', got {fmt!r}")
    if hasattr(destination, "write"):
        destination.write(text)
    else:
        Path(destination).write_text(text, encoding="utf-8")


def packaged_scenario_names() -> list[str]:
    """Names of the scenario files shipped inside the package."""
    root = resources.files("qlmarket").joinpath("scenarios")
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".toml"))


def load_packaged_scenario(name: str) -> Scenario:
    """Parse one of the shipped scenarios by bare name (e.g. 'paper_fig3')."""
    path = resources.files("qlmarket").joinpath("scenarios", f"{name}.toml")
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError as exc:
        raise ValidationError(
            f"no packaged scenario named {name!r}; available: {packaged_scenario_names()}"
        ) from exc
    return parse_scenario(text)
