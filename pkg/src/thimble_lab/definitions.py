# -------------------------------------------
# Project root pointer and settings directory
# -------------------------------------------
import os
from pathlib import Path

ENV_CONFIG_DIR: str = 'THIMBLE_LAB_CONFIG_DIR'
PACKAGE_DIR = Path(os.path.dirname(os.path.abspath(__file__)))
ROOT_DIR = PACKAGE_DIR.parent.parent.absolute()


def config_dir() -> Path:
    """:return: Directory of the yaml settings files. ROOT_DIR unless THIMBLE_LAB_CONFIG_DIR is set."""
    override = os.environ.get(ENV_CONFIG_DIR)
    if override:
        return Path(override).absolute()
    return ROOT_DIR
