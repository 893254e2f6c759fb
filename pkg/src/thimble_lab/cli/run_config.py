# -------------------------------------------
# Module containing Singleton run-config manager.
# Allows for importing run settings from config *.yaml file, overridden by command line flags
# and the THIMBLE_LAB_THREADS environment variable.
# -------------------------------------------
import os
from dataclasses import dataclass, field, asdict, fields, is_dataclass, replace
from pathlib import Path
from typing import Any, Optional, Union, get_type_hints
from thimble_lab.numkernel.quadrature import DEFAULT_TOLERANCE
from thimble_lab.periods.base_path import DEFAULT_PATH_CLEARANCE
from thimble_lab.affine_syz.affine_chart import DEFAULT_DETOUR_RADIUS, MAX_DETOUR_RADIUS
from thimble_lab.utilities.singleton_base import Singleton
from thimble_lab.utilities.readwrite_yaml import (
    get_yaml_file_path,
    write_yaml,
    read_yaml,
)

OUTPUT_FORMATS = ('json', 'csv', 'svg')
ENV_THREADS: str = 'THIMBLE_LAB_THREADS'


def typecast_dataclass_fields(instance: Any):
    """Typecasts the fields of a dataclass instance based on their annotations."""
    if not is_dataclass(instance):
        raise ValueError("typecast_dataclass_fields should only be called with dataclass instances")

    type_hints = get_type_hints(instance.__class__)

    for _field in fields(instance):
        field_name = _field.name
        current_value = getattr(instance, field_name)
        desired_type = type_hints[field_name]

        # Cast the current value to the desired type
        try:
            casted_value = desired_type(current_value)
            object.__setattr__(instance, field_name, casted_value)
        except ValueError as e:
            raise TypeError(f"Could not convert field {field_name} to {desired_type}") from e


@dataclass(frozen=True)
class RunConfig:
    """
    Data class, containing run settings shared by all commands.
    An empty output path writes to stdout.
    """
    tol: float = field(default=DEFAULT_TOLERANCE)
    path_clearance: float = field(default=DEFAULT_PATH_CLEARANCE)
    detour_radius: float = field(default=DEFAULT_DETOUR_RADIUS)
    seed: int = field(default=0)
    output_format: str = field(default='json')
    output_path: str = field(default='')
    threads: int = field(default=1)

    # region Class Properties
    @property
    def writes_stdout(self) -> bool:
        return self.output_path == ''
    # endregion

    # region Class Methods
    def __post_init__(self):
        typecast_dataclass_fields(self)
        if self.tol <= 0:
            raise ValueError(f"Tolerance must be positive, got {self.tol}.")
        if self.path_clearance <= 0:
            raise ValueError(f"Path clearance must be positive, got {self.path_clearance}.")
        if not 0 < self.detour_radius <= MAX_DETOUR_RADIUS:
            raise ValueError(f"Detour radius must lie in (0, {MAX_DETOUR_RADIUS}], got {self.detour_radius}.")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"Output format must be one of {OUTPUT_FORMATS}, got '{self.output_format}'.")
        if self.threads < 1:
            raise ValueError(f"Thread count must be at least 1, got {self.threads}.")

    def with_overrides(self, **overrides) -> 'RunConfig':
        """:return: Copy with every override that is not None applied."""
        return replace(self, **{key: value for key, value in overrides.items() if value is not None})
    # endregion


class RunConfigManager(metaclass=Singleton):
    """
    Behaviour Class, manages import of the run-config file.
    """
    CONFIG_NAME: str = 'config_thimble_lab.yaml'

    # region Class Methods
    @classmethod
    def _default_config_object(cls) -> dict:
        """:return: Default config dict."""
        return asdict(RunConfig())

    @classmethod
    def read_config(cls, config_path: Optional[Union[str, Path]] = None) -> RunConfig:
        """
        :param config_path: (Optional) explicit config file; it must exist.
            Without it the project config is used and written with defaults on first use.
        :return: Run config with the thread count taken from THIMBLE_LAB_THREADS when set.
        """
        if config_path is not None:
            path = get_yaml_file_path(filename=config_path)
            if not os.path.exists(path):
                raise FileNotFoundError(f"Config file {path} does not exist.")
            filename = path
        else:
            filename = cls.CONFIG_NAME
            if not os.path.exists(get_yaml_file_path(filename=filename)):
                # Construct config dict
                write_yaml(
                    filename=filename,
                    packable=cls._default_config_object(),
                    make_file=True,
                )
        config: RunConfig = RunConfig(**read_yaml(filename=filename))
        threads: Optional[str] = os.environ.get(ENV_THREADS)
        if threads:
            config = config.with_overrides(threads=int(threads))
        return config
    # endregion
