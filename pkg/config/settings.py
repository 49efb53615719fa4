# config/settings.py

import os
from dataclasses import dataclass
from pathlib import Path

from dotenv import load_dotenv

from utils.errors import ArgumentError

PROJECT_ROOT = Path(__file__).resolve().parents[1]

# Un .env opcional en la raíz permite sobreescribir los límites (SUBLAB_<NOMBRE>=valor)
load_dotenv(PROJECT_ROOT / ".env")


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(f"SUBLAB_{name}")
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ArgumentError(f"SUBLAB_{name} must be an integer, got {raw!r}")
    if value <= 0:
        raise ArgumentError(f"SUBLAB_{name} must be positive, got {value}")
    return value


def _env_float(name: str, default: float) -> float:
    raw = os.getenv(f"SUBLAB_{name}")
    if raw is None:
        return default
    try:
        value = float(raw)
    except ValueError:
        raise ArgumentError(f"SUBLAB_{name} must be a number, got {raw!r}")
    if value <= 0:
        raise ArgumentError(f"SUBLAB_{name} must be positive, got {value}")
    return value


# ==========================
# Límites de trabajo (desk scale)
# ==========================

# Enumeración completa de elementos de un grupo
ELEMENT_ENUM_CAP: int = _env_int("ELEMENT_ENUM_CAP", 5000)

# Grado máximo de la acción sobre coclases al construir G/N
QUOTIENT_DEGREE_CAP: int = _env_int("QUOTIENT_DEGREE_CAP", 1000)

# Orden máximo para enumerar el retículo de subgrupos
LATTICE_ORDER_CAP: int = _env_int("LATTICE_ORDER_CAP", 500)

# El oráculo de fuerza bruta solo corre en grupos pequeños
ORACLE_ORDER_CAP: int = _env_int("ORACLE_ORDER_CAP", 48)

# Suites que recorren pares/ternas de subgrupos saltan grupos mayores
PAIR_CHECK_ORDER_CAP: int = _env_int("PAIR_CHECK_ORDER_CAP", 60)

# Búsqueda de factorizaciones nilpotentes P-subnormales por grupo, en segundos
FACTORIZATION_TIMEOUT_S: float = _env_float("FACTORIZATION_TIMEOUT_S", 5.0)


# ==========================
# Parámetros de verificación
# ==========================

DEFAULT_T_VALUES: tuple[int, ...] = (1, 2, 3)
MAX_T_VALUE: int = 6
DEFAULT_JOBS: int = _env_int("JOBS", 1)


def validate_t_values(t_values) -> tuple[int, ...]:
    values = tuple(int(t) for t in t_values)
    if not values:
        raise ArgumentError("at least one value of t is required")
    bad = [t for t in values if not 1 <= t <= MAX_T_VALUE]
    if bad:
        raise ArgumentError(f"t must lie in 1..{MAX_T_VALUE}, got {bad}")
    return tuple(sorted(set(values)))


# ==========================
# Tipos genéricos de "run"
# ==========================

@dataclass
class VerifyRunConfig:
    suites: list[str]
    t_values: tuple[int, ...] = DEFAULT_T_VALUES
    corpus_source: str = "standard"   # "standard" o ruta a una lista de ficheros
    report_path: Path | None = None
    csv_path: Path | None = None
    jobs: int = DEFAULT_JOBS

    def __post_init__(self) -> None:
        self.t_values = validate_t_values(self.t_values)
        if self.jobs < 1:
            raise ArgumentError(f"jobs must be >= 1, got {self.jobs}")


@dataclass
class QueryConfig:
    group_source: str            # "builtin:NAME" o "file:PATH"
    subgroup_text: str           # generadores en notación de ciclos, separados por comas
    policy: str                  # subnormal | psub | kpsub | kpt | fsub:UK<k> | kfsub:UK<k>
    t: int = 1
    show_witness: bool = False

    def __post_init__(self) -> None:
        validate_t_values([self.t])


@dataclass
class LatticeRunConfig:
    group_source: str
    dot_path: Path | None = None
