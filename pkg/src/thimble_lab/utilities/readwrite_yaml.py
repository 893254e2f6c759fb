# -------------------------------------------
# Functions for import/export of yaml settings.
# -------------------------------------------
import os
import yaml
from typing import Union
from pathlib import Path
from thimble_lab.definitions import config_dir


# --- YAML Read/Write  ---

def get_yaml_file_path(filename: Union[str, Path]) -> Path:
    """Returns yaml file path as used by read/write functions. Absolute paths are returned unchanged."""
    if os.path.isabs(filename):
        return Path(filename)
    return Path(os.path.join(config_dir(), filename))


def read_yaml(filename: Union[str, Path]) -> dict:
    """Returns yaml content of config_dir() + filename, an empty file reads as an empty dict."""
    file_path = get_yaml_file_path(filename=filename)
    with open(file_path) as f:
        config = yaml.load(f, Loader=yaml.SafeLoader)
    return config if config is not None else {}


def write_yaml(filename: Union[str, Path], packable: dict, make_file: bool = False, *args, **kwargs) -> bool:
    """Returns if file exists. Dumps packable to yaml file, creating its directory when make_file is set."""
    file_path = get_yaml_file_path(filename=filename)
    if not make_file and not os.path.isfile(file_path):
        return False
    file_path.parent.mkdir(parents=True, exist_ok=True)
    with open(file_path, 'w') as f:
        yaml.dump(packable, f, default_flow_style=False, sort_keys=True, *args, **kwargs)
    return True
