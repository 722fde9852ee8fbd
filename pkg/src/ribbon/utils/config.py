"""
Configuration - environment driven settings and per-run pipeline options
"""

import os
from functools import lru_cache
from typing import Literal

from dotenv import load_dotenv
from pydantic import BaseModel, Field

load_dotenv()


class RibbonSettings(BaseModel):
    """Process-wide defaults, read once from the environment"""
    bracket_crossing_limit: int = Field(default=16, ge=1, le=24)
    default_width: float = Field(default=1.0, gt=0)
    coordinate_digits: int = Field(default=9, ge=1, le=15)
    log_level: str = "WARNING"


class PipelineOptions(BaseModel):
    """Options for a single analyze run"""
    shading: Literal["auto", "0", "1"] = "auto"
    width: float = Field(default=1.0, gt=0)
    oracle: bool = True
    bracket_limit: int = Field(default=16, ge=1, le=24)

    @classmethod
    def from_settings(cls, settings: "RibbonSettings", **overrides) -> "PipelineOptions":
        values = {
            "width": settings.default_width,
            "bracket_limit": settings.bracket_crossing_limit,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


@lru_cache(maxsize=1)
def get_settings() -> RibbonSettings:
    return RibbonSettings(
        bracket_crossing_limit=int(os.getenv("RIBBON_BRACKET_LIMIT", "16")),
        default_width=float(os.getenv("RIBBON_DEFAULT_WIDTH", "1.0")),
        coordinate_digits=int(os.getenv("RIBBON_COORDINATE_DIGITS", "9")),
        log_level=os.getenv("RIBBON_LOG_LEVEL", "WARNING"),
    )
