# cyclodecomp/settings.py
from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # Logging level for main.py (the --log-level flag wins)
    log_level: str = "WARNING"

    # Max absolute error allowed between exact components and the DFT oracle
    oracle_tolerance: float = 1e-9

    # Band |abs(lambda) - 1| <= tol for the companion-matrix eigenvalue screen
    unit_modulus_tolerance: float = 1e-8

    # Threads used to project onto the kernels; 1 means sequential
    decompose_workers: int = 1

    # Selfcheck harness: RNG seed, and random cases per n (None keeps each suite's own count)
    selfcheck_seed: int = 20240607
    selfcheck_samples: Optional[int] = None

    model_config = SettingsConfigDict(
        env_prefix="CYCLODECOMP_",
        extra="ignore",
    )


settings = Settings()
