"""Schmidt-form two-qubit states and dichotomic measurement settings.

A state is written as c1|u1 u2> + c2|v1 v2> with real coefficients
satisfying c1^2 + c2^2 = 1. A dichotomic (+1/-1) observable on one
particle is parameterized by a mixing angle beta and a relative phase
delta; only the per-particle phase differences ever enter downstream
probability formulas, so the individual basis phases are not stored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

__all__ = [
    "NORMALIZATION_TOL",
    "CLASSIFICATION_TOL",
    "DomainError",
    "EntanglementClass",
    "SchmidtState",
    "MeasurementSetting",
    "ExperimentConfig",
    "make_state",
    "entanglement_class",
    "config_from_text",
    "config_from_file",
]

NORMALIZATION_TOL = 1e-12
CLASSIFICATION_TOL = 1e-9


class DomainError(ValueError):
    """An input lies outside an operation's mathematical domain."""


class EntanglementClass(Enum):
    PRODUCT = "product"
    MAXIMAL = "maximal"
    PARTIAL = "partial"


def _require_finite(name: str, value: float) -> float:
    try:
        value = float(value)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"{name} must be a real number, got {value!r}") from exc
    if not math.isfinite(value):
        raise DomainError(f"{name} must be finite, got {value!r}")
    return value


@dataclass(frozen=True)
class SchmidtState:
    """Two-term biorthogonal state with real coefficients c1, c2."""

    c1: float
    c2: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "c1", _require_finite("c1", self.c1))
        object.__setattr__(self, "c2", _require_finite("c2", self.c2))
        residue = abs(self.c1 * self.c1 + self.c2 * self.c2 - 1.0)
        if residue > NORMALIZATION_TOL:
            raise DomainError(
                f"c1^2 + c2^2 deviates from 1 by {residue:.3e} "
                f"(> {NORMALIZATION_TOL:g})"
            )

    @property
    def c1_squared(self) -> float:
        return self.c1 * self.c1


@dataclass(frozen=True)
class MeasurementSetting:
    """One observable: mixing angle beta and relative phase delta (radians).

    All probability formulas are invariant under beta -> beta + pi (both
    eigenvectors flip sign) and depend on deltas only through the
    difference between the particle-1 and particle-2 values.
    """

    beta: float
    delta: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "beta", _require_finite("beta", self.beta))
        object.__setattr__(self, "delta", _require_finite("delta", self.delta))


@dataclass(frozen=True)
class ExperimentConfig:
    """A state plus the four settings D_ij, one per (particle, index) pair."""

    state: SchmidtState
    d11: MeasurementSetting
    d12: MeasurementSetting
    d21: MeasurementSetting
    d22: MeasurementSetting

    def setting(self, particle: int, index: int) -> MeasurementSetting:
        """Return D_(particle)(index) for particle, index in {1, 2}."""
        try:
            return {
                (1, 1): self.d11,
                (1, 2): self.d12,
                (2, 1): self.d21,
                (2, 2): self.d22,
            }[(particle, index)]
        except KeyError:
            raise DomainError(
                f"no setting ({particle}, {index}); both indices must be 1 or 2"
            ) from None

    @property
    def settings(self) -> dict[tuple[int, int], MeasurementSetting]:
        return {
            (1, 1): self.d11,
            (1, 2): self.d12,
            (2, 1): self.d21,
            (2, 2): self.d22,
        }


def _check_sign(name: str, sign: float) -> float:
    if sign not in (1, -1):
        raise DomainError(f"{name} must be +1 or -1, got {sign!r}")
    return float(sign)


def make_state(c1_squared: float, sign_c1: int = +1, sign_c2: int = +1) -> SchmidtState:
    """Build a state from c1^2 and explicit coefficient signs.

    c1_squared may stray outside [0, 1] by at most the normalization
    tolerance (rounding residue); anything further is a domain error.
    """
    c1_squared = _require_finite("c1_squared", c1_squared)
    s1 = _check_sign("sign_c1", sign_c1)
    s2 = _check_sign("sign_c2", sign_c2)
    if c1_squared < -NORMALIZATION_TOL or c1_squared > 1.0 + NORMALIZATION_TOL:
        raise DomainError(f"c1_squared must lie in [0, 1], got {c1_squared!r}")
    c1_squared = min(max(c1_squared, 0.0), 1.0)
    return SchmidtState(
        c1=s1 * math.sqrt(c1_squared),
        c2=s2 * math.sqrt(1.0 - c1_squared),
    )


def entanglement_class(
    state: SchmidtState, tol: float = CLASSIFICATION_TOL
) -> EntanglementClass:
    """Classify as product, maximally entangled, or partially entangled."""
    if abs(state.c1 * state.c2) <= tol:
        return EntanglementClass.PRODUCT
    if abs(abs(state.c1) - abs(state.c2)) <= tol:
        return EntanglementClass.MAXIMAL
    return EntanglementClass.PARTIAL


# ---------- config-file ingestion (key = value text) ----------

_SETTING_TAGS = ("11", "12", "21", "22")

_REQUIRED_KEYS = ("c1_squared",) + tuple(f"beta_{t}_deg" for t in _SETTING_TAGS)

_OPTIONAL_KEYS = ("sign_c1", "sign_c2") + tuple(
    f"delta_{t}_deg" for t in _SETTING_TAGS
)


def config_from_text(text: str) -> ExperimentConfig:
    """Parse a key = value experiment description.

    Recognized keys: c1_squared, sign_c1, sign_c2, and beta_IJ_deg /
    delta_IJ_deg for IJ in 11, 12, 21, 22. Angles are given in degrees
    and converted to radians here. Blank lines and lines starting with
    '#' are ignored. Unknown or repeated keys are an error; the signs
    default to +1 and the deltas to 0.
    """
    values: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise DomainError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key = key.strip()
        if key not in _REQUIRED_KEYS and key not in _OPTIONAL_KEYS:
            raise DomainError(f"line {lineno}: unknown key {key!r}")
        if key in values:
            raise DomainError(f"line {lineno}: repeated key {key!r}")
        try:
            values[key] = float(value.strip())
        except ValueError:
            raise DomainError(
                f"line {lineno}: value for {key!r} is not a number: {value.strip()!r}"
            ) from None
    missing = [key for key in _REQUIRED_KEYS if key not in values]
    if missing:
        raise DomainError(f"missing required keys: {', '.join(missing)}")

    state = make_state(
        values["c1_squared"],
        sign_c1=values.get("sign_c1", 1),
        sign_c2=values.get("sign_c2", 1),
    )
    settings = {
        tag: MeasurementSetting(
            beta=math.radians(values[f"beta_{tag}_deg"]),
            delta=math.radians(values.get(f"delta_{tag}_deg", 0.0)),
        )
        for tag in _SETTING_TAGS
    }
    return ExperimentConfig(
        state=state,
        d11=settings["11"],
        d12=settings["12"],
        d21=settings["21"],
        d22=settings["22"],
    )


def config_from_file(path: str) -> ExperimentConfig:
    with open(path, "r", encoding="utf-8") as handle:
        return config_from_text(handle.read())
