#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Created Date: 10/19/2026
# version ='0.1.0'
# ---------------------------------------------------------------------------
""" Runtime settings read from the environment """
# ---------------------------------------------------------------------------

# ---------------------------------------------------------------------------
# Imports
# ---------------------------------------------------------------------------
import os
from dataclasses import dataclass

from dotenv import load_dotenv

# ---------------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------------
WORKERS_ENV = 'GCLINK_WORKERS'
SEED_ENV = 'GCLINK_SEED'


# ---------------------------------------------------------------------------
# Data Classes
# ---------------------------------------------------------------------------
@dataclass(frozen=True)
class Settings:
    """Defaults for the command line; explicit flags take precedence"""

    workers: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.workers < 1:
            raise ValueError(f'Invalid worker count: {self.workers}')

    @classmethod
    def from_env(cls, dotenv_path=None) -> 'Settings':
        """
        Build settings from GCLINK_WORKERS / GCLINK_SEED, loading `.env` first

        Args:
            dotenv_path (str): Optional explicit `.env` location

        Raises:
            ValueError: When a variable is not an integer

        Returns:
            settings (Settings): Settings with environment overrides applied
        """
        load_dotenv(dotenv_path)
        return cls(
            workers=_read_int(WORKERS_ENV, cls.workers),
            seed=_read_int(SEED_ENV, cls.seed),
        )


# ---------------------------------------------------------------------------
# Utilities
# ---------------------------------------------------------------------------
def _read_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f'Invalid {name}: {raw!r} is not an integer')
