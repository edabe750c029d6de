from pydantic import validator
from pydantic_settings import BaseSettings

from girthroot import __version__

LOG_LEVELS = ("CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG")

class Settings(BaseSettings):
    PROJECT_NAME: str = "girthroot"
    VERSION: str = __version__

    # Verbosity, read from GIRTHROOT_LOG
    LOG: str = "WARNING"

    # Default worker count for --jobs
    JOBS: int = 1

    # Brute-force oracle limits
    TREE_BRUTEFORCE_MAX_VERTICES: int = 9
    ROOTS_BRUTEFORCE_MAX_EDGES: int = 18
    H2C_BRUTEFORCE_MAX_ELEMENTS: int = 20

    # Re-check girth after every ear while generating
    DEBUG_CHECKS: bool = False

    @validator("LOG", pre=True)
    def normalize_log_level(cls, v: str) -> str:
        level = str(v).strip().upper()
        if level == "WARN":
            level = "WARNING"
        if level not in LOG_LEVELS:
            raise ValueError(f"unknown log level: {v}")
        return level

    @validator("JOBS")
    def positive_jobs(cls, v: int) -> int:
        if v < 1:
            raise ValueError("JOBS must be at least 1")
        return v

    class Config:
        case_sensitive = True
        env_prefix = "GIRTHROOT_"
        env_file = ".env"
        extra = "ignore"

settings = Settings()
