# infrastructure/config/engine_config.py
import os
import logging

# Load environment variables
from dotenv import load_dotenv
load_dotenv()

# Logging Configuration
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

# Realisation defaults
DEFAULT_UNIVERSAL_CARTAN = int(os.getenv("DEFAULT_UNIVERSAL_CARTAN", "-2"))

# Localization oracle: generic evaluation points are drawn from this seed
LOCALIZATION_SEED = int(os.getenv("LOCALIZATION_SEED", "20230917"))
LOCALIZATION_ATTEMPTS = int(os.getenv("LOCALIZATION_ATTEMPTS", "8"))
LOCALIZATION_POINT_RANGE = int(os.getenv("LOCALIZATION_POINT_RANGE", "1000003"))

# Tableau tables kept per engine (least recently used are dropped)
TABLEAU_CACHE_SIZE = int(os.getenv("TABLEAU_CACHE_SIZE", "512"))

# Worker pool
DEFAULT_JOBS = int(os.getenv("DEFAULT_JOBS", "1"))

# API Configuration
API_HOST = os.getenv("API_HOST", "0.0.0.0")
API_PORT = int(os.getenv("API_PORT", "8000"))
CORS_ORIGINS = os.getenv("CORS_ORIGINS", "http://localhost:3000").split(",")


def configure_logging(stream=None):
    """
    Configure root logging once for an entry point
    """
    logging.basicConfig(
        level=logging.INFO if LOG_LEVEL != "DEBUG" else logging.DEBUG,
        format=LOG_FORMAT,
        stream=stream,
    )
