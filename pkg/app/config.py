from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    DENSE_LIMIT_BITS: int = 2**27
    CANDIDATE_WINDOW: int = 64
    WORKERS: int = 1
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
    BRUTEFORCE_MAX_MULTISETS: int = 5_000_000
    BENCH_CANDIDATES: int = 5000

    model_config = SettingsConfigDict(env_file=".env", env_prefix="GREEDY_BH_")


settings = Settings()
