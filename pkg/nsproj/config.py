from enum import Enum
from functools import lru_cache

from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings


class Mode(str, Enum):
    """Ambient field: complex coefficients allowed, or real only."""

    complex = "complex"
    real = "real"


class OutputFormat(str, Enum):
    text = "text"
    json = "json"


class FieldConfig(BaseModel):
    """Arithmetic settings every HyperNumber operation reads.

    truncation_order is the number of significant orders kept above the
    leading exponent; real switches the scalar product to the bilinear
    pairing and rejects the imaginary unit.
    """

    truncation_order: int = Field(8, ge=1)
    real: bool = False

    model_config = {"frozen": True}


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    truncation_order: int = Field(8, ge=1)
    mode: Mode = Mode.complex
    output_format: OutputFormat = OutputFormat.text
    allow_decimal: bool = False

    log_level: str = "WARNING"

    # HTTP surface
    host: str = "127.0.0.1"
    port: int = 8000

    class Config:
        env_file = ".env"
        env_prefix = "NSPROJ_"

    def field_config(self) -> FieldConfig:
        return FieldConfig(
            truncation_order=self.truncation_order,
            real=self.mode == Mode.real,
        )


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
