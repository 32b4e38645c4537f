import os
from pathlib import Path
from dotenv import load_dotenv

# Define base_dir - used for .env, logs and fixtures
base_dir = Path(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
env_file = base_dir / '.env'

# Load environment variables from .env file if it exists,
# otherwise fall back to the process environment and the defaults below
if os.path.exists(env_file):
    load_dotenv(env_file)

# Application settings
APP_NAME = "lopsp-maps"
APP_VERSION = "0.4.0"

# Logging settings
LOG_LEVEL = os.getenv('LOG_LEVEL', "INFO")
LOG_FORMAT = '%(asctime)s - %(levelname)s - %(name)s - %(message)s'
LOG_FILE = os.getenv('LOG_FILE', "lopsp_maps.log")
LOG_TO_FILE = os.getenv('LOG_TO_FILE', 'True').lower() in ('true', '1', 'yes')

# Operation application
CUT_PATH_STRATEGIES = ('minimal', 'first')
DEFAULT_CUT_PATH = os.getenv('DEFAULT_CUT_PATH', 'minimal')
CUT_PATH_SEARCH_LIMIT = int(os.getenv('CUT_PATH_SEARCH_LIMIT', '200000'))

# Verification corpus
VERIFY_MAX_VERTICES = int(os.getenv('VERIFY_MAX_VERTICES', '12'))
VERIFY_SEED = int(os.getenv('VERIFY_SEED', '20230917'))
VERIFY_GENERA = os.getenv('VERIFY_GENERA', '0,1')
VERIFY_SAMPLES_PER_GRAPH = int(os.getenv('VERIFY_SAMPLES_PER_GRAPH', '12'))
ROTATION_ENUMERATION_LIMIT = int(os.getenv('ROTATION_ENUMERATION_LIMIT', '4096'))
VERIFY_MAPS_PER_GRAPH = int(os.getenv('VERIFY_MAPS_PER_GRAPH', '2'))

# Fixture files shipped with the repository
FIXTURES_DIR = Path(os.getenv('FIXTURES_DIR', str(base_dir / 'fixtures')))


def parse_genera(value: str = VERIFY_GENERA):
    """Parse a comma separated genus list such as ``"0,1"``."""
    return tuple(sorted({int(part) for part in value.split(',') if part.strip()}))


# Validate critical settings
def validate_settings():
    """Validates that critical settings are properly configured."""
    errors = []

    if DEFAULT_CUT_PATH not in CUT_PATH_STRATEGIES:
        errors.append(f"DEFAULT_CUT_PATH must be one of {CUT_PATH_STRATEGIES}, got '{DEFAULT_CUT_PATH}'")

    if LOG_LEVEL.upper() not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
        errors.append(f"LOG_LEVEL '{LOG_LEVEL}' is not a logging level")

    if VERIFY_MAX_VERTICES < 1:
        errors.append("VERIFY_MAX_VERTICES must be positive")

    if VERIFY_SAMPLES_PER_GRAPH < 0:
        errors.append("VERIFY_SAMPLES_PER_GRAPH must not be negative")

    if VERIFY_MAPS_PER_GRAPH < 1:
        errors.append("VERIFY_MAPS_PER_GRAPH must be positive")

    if ROTATION_ENUMERATION_LIMIT < 1 or CUT_PATH_SEARCH_LIMIT < 1:
        errors.append("search limits must be positive")

    try:
        if any(g < 0 for g in parse_genera(VERIFY_GENERA)):
            errors.append("VERIFY_GENERA contains a negative genus")
    except ValueError:
        errors.append(f"VERIFY_GENERA '{VERIFY_GENERA}' is not a comma separated list of integers")

    return errors
