from pydantic_settings import BaseSettings, SettingsConfigDict
from functools import lru_cache
from dotenv import load_dotenv

load_dotenv()

class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="KDYCK_", env_file=".env", extra="ignore")

    APP_NAME: str = "Enumerate and verify k-Dyck paths bounded below by -t"
    LOG_LEVEL: str = "WARNING"

    # Brute-force oracles
    BRUTE_LIMIT: int = 32
    QUICK_BRUTE_LIMIT: int = 20

    # Verification grid
    VERIFY_WORKERS: int = 4

    # Limiting distribution truncation
    RESIDUAL_TOLERANCE: float = 1e-12
    LIMIT_MAX_TERMS: int = 5000

@lru_cache()
def get_settings() -> Settings:
    return Settings()
