import os
from typing import Optional

from dotenv import load_dotenv

from utils.errors import InvalidParameters

load_dotenv()


class Config:
    LOG_LEVEL = os.getenv('HYPERSPEC_LOG_LEVEL', 'INFO')
    WORKERS = int(os.getenv('HYPERSPEC_WORKERS', '4'))
    EIGEN_METHOD = os.getenv('HYPERSPEC_EIGEN_METHOD', 'householder_ql')
    MAX_ENUMERATED_HYPEREDGES = int(os.getenv('HYPERSPEC_MAX_ENUMERATED_HYPEREDGES', '200000'))
    VERSION = '0.1.0'

    @staticmethod
    def cluster_tol() -> Optional[float]:
        """HYPERSPEC_TOL is read per call so the CLI --tol flag and tests can override it."""
        raw = os.getenv('HYPERSPEC_TOL')
        if not raw:
            return None
        try:
            value = float(raw)
        except ValueError:
            raise InvalidParameters(f"HYPERSPEC_TOL must be a positive float, got {raw!r}") from None
        if not value > 0.0:
            raise InvalidParameters(f"HYPERSPEC_TOL must be a positive float, got {raw!r}")
        return value
