"""
Application configuration (12-factor style).

- Defines Settings (using pydantic-settings) for env-driven config.
- Every variable is read with the BRACELAB_ prefix (e.g. BRACELAB_CATALOG_DIR).
- Central place for the feasibility gates: enumeration order, free-algebra
  expansion depth, coefficient-space sizes.
"""

from pydantic_settings import BaseSettings
from typing import Optional


class Settings(BaseSettings):
    APP_NAME: str = "BraceLab"

    # Catalog
    CATALOG_DIR: str = "catalog"  # Default directory for enumerated brace files (BRACELAB_CATALOG_DIR)
    CATALOG_INDEX_NAME: str = "index.jsonl"  # One CatalogEntry per line

    # Enumeration
    ENUMERATION_MAX_ORDER: int = 8  # Orders above this raise BoundExceeded
    ENUMERATION_WORKERS: int = 1  # >1 fans the lambda-map search out over processes

    # Free algebra lab (hard gates, never silent truncation)
    ENGEL_MAX_WORD_N: int = 16  # W_n has length 2^n - 1
    ENGEL_MAX_W_N: int = 6  # w_n / w̄_n expansion (w_7 would have 2^31 terms)
    ENGEL_MAX_Z_N: int = 5  # z_n, z_n^-1 and v_n expansion (z_6 runs for minutes)
    ENGEL_MAX_PRODUCT_N: int = 4  # z_n * z_n^-1 multiplied out
    COEFF_MAX_DIM: int = 4  # Largest square matrix for coefficient spaces
    COEFF_MAX_POWER: int = 6  # Largest matrix power for coefficient spaces

    # Logging
    LOG_LEVEL: str = "INFO"
    LOG_FILE: Optional[str] = None  # When set, logs are also written to this file

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        env_prefix = "BRACELAB_"
        extra = "ignore"


settings = Settings()
