"""
Centralized Settings Management for Fuzzy Contrast
"""

from typing import Literal

from pydantic import BaseModel, Field, field_validator
from pydantic_settings import BaseSettings

EntropySource = Literal["sobel", "enhanced"]
GrayMode = Literal["constant", "passthrough"]


class FitnessSettings(BaseModel):
    """Fitness function configuration"""

    edge_threshold: float = Field(
        default=20.0,
        ge=0.0,
        description="Sobel magnitude above which a pixel counts as an edge pixel",
    )
    entropy_source: EntropySource = Field(
        default="sobel",
        description="Raster the entropy term is computed on",
    )


class TransformSettings(BaseModel):
    """Fuzzy transform configuration"""

    freeze_targets: bool = Field(
        default=False,
        description="Keep defuzzification targets fixed during mutation",
    )
    gray_mode: GrayMode = Field(
        default="constant",
        description="Whether interior (gray) rules emit their target or pass z0 through",
    )


class RuntimeSettings(BaseModel):
    """Execution configuration"""

    workers: int = Field(
        default=1,
        ge=1,
        le=256,
        description="Threads used to evaluate candidates of one generation",
    )
    output_dir: str = Field(
        default="out",
        description="Default directory for run artifacts",
    )
    seed: int = Field(
        default=0,
        ge=0,
        description="Master seed used when none is given on the command line",
    )


class LoggingSettings(BaseModel):
    """Logging configuration"""

    env: str = Field(default="development", description="development or production")
    debug: bool = Field(default=False, description="Enable debug logging")
    log_level: str = Field(default="INFO", description="Logging level")

    @field_validator("log_level")
    def validate_log_level(cls, v):
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f"Log level must be one of {valid_levels}")
        return v.upper()


class Settings(BaseSettings):
    """Main settings class combining all configuration sections"""

    edge_threshold: float = Field(default=20.0, alias="EDGE_THRESHOLD")
    entropy_source: EntropySource = Field(default="sobel", alias="ENTROPY_SOURCE")

    freeze_targets: bool = Field(default=False, alias="FREEZE_TARGETS")
    gray_mode: GrayMode = Field(default="constant", alias="GRAY_MODE")

    workers: int = Field(default=1, alias="EVAL_WORKERS")
    output_dir: str = Field(default="out", alias="OUTPUT_DIR")
    seed: int = Field(default=0, alias="MASTER_SEED")

    env: str = Field(default="development", alias="ENV")
    debug: bool = Field(default=False, alias="DEBUG")
    log_level: str = Field(default="INFO", alias="LOG_LEVEL")

    model_config = {
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "case_sensitive": False,
        "extra": "ignore",
    }

    @property
    def fitness(self) -> FitnessSettings:
        """Get fitness settings"""
        return FitnessSettings(
            edge_threshold=self.edge_threshold,
            entropy_source=self.entropy_source,
        )

    @property
    def transform(self) -> TransformSettings:
        """Get transform settings"""
        return TransformSettings(
            freeze_targets=self.freeze_targets,
            gray_mode=self.gray_mode,
        )

    @property
    def runtime(self) -> RuntimeSettings:
        """Get runtime settings"""
        return RuntimeSettings(
            workers=self.workers,
            output_dir=self.output_dir,
            seed=self.seed,
        )

    @property
    def logging(self) -> LoggingSettings:
        """Get logging settings"""
        return LoggingSettings(
            env=self.env,
            debug=self.debug,
            log_level=self.log_level,
        )

    def is_production(self) -> bool:
        """Check if running in production mode"""
        return self.env.lower() == "production"


# Global settings instance
settings = Settings()
