"""Module for storing settings for the command line and services."""

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Settings class for the package, read from the environment and `.env`."""

    DEFAULT_F: str = "z1^3+z2^3+z3^3+3*q*z1*z2*z3"
    DEFAULT_VARS: str = "z1,z2,z3"
    DEFAULT_ORDER: str = "lex"
    DEFAULT_COEFF: str = "Qq"
    SMAX: int = 14
    PMAX: int = 8
    WINDOW: int = 4
    WORKERS: int = 1
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"

    class Config:
        env_file = ".env"
        env_prefix = "HOCHSCHILD_"
        extra = "ignore"


settings = Settings()
