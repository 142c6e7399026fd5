from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from config.constants import DEFAULT_MAX_ENUM, MAX_GROUP_ORDER


class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_file=".env", env_file_encoding="utf-8", extra="ignore")

    # Enumeration / brute-force search cap
    JENSEN_MAX_ENUM: int = Field(default=DEFAULT_MAX_ENUM, ge=1, alias="JENSEN_MAX_ENUM")

    # Logging (stderr)
    JENSEN_LOG_LEVEL: str = Field(default="WARNING", alias="JENSEN_LOG_LEVEL")

    # Can only lower the built-in cap
    JENSEN_MAX_GROUP_ORDER: int = Field(default=MAX_GROUP_ORDER, ge=1, le=MAX_GROUP_ORDER, alias="JENSEN_MAX_GROUP_ORDER")

    @field_validator("JENSEN_LOG_LEVEL")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"unknown log level {value!r}")
        return level


settings = Settings()
