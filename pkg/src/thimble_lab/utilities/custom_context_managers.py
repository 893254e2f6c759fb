# -------------------------------------------
# Customized context managers for better maintainability
# -------------------------------------------
import os
import warnings
import tempfile
import contextlib
from pathlib import Path
from typing import Iterator, IO, Union
from thimble_lab.utilities.custom_warnings import WhileLoopSafetyExceededWarning


class WhileLoopSafety:
    """
    Context manager class, bounds the number of iterations of an adaptive while-loop.
    Usage: `with WhileLoopSafety(max_iterations=30) as loop: while condition and loop.safety_condition(): ...`
    """

    # region Class Properties
    @property
    def exceeded(self) -> bool:
        """:return: Whether the loop was cut short by the safety counter."""
        return self._exceeded
    # endregion

    # region Class Constructor
    def __init__(self, max_iterations: int = 10):
        self.counter = 0
        self.max_iterations = max_iterations
        self._exceeded: bool = False
    # endregion

    # region Class Methods
    def safety_condition(self) -> bool:
        if self.counter >= self.max_iterations:
            warnings.warn(**WhileLoopSafetyExceededWarning.warning_format(max_iter=self.max_iterations))
            self._exceeded = True
            return False
        self.counter += 1
        return True

    def __enter__(self) -> 'WhileLoopSafety':
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        return False
    # endregion


@contextlib.contextmanager
def clear_lru_cache(method):
    """
    Context manager to temporarily clear the LRU cache of a given method.

    :param method: (function) The LRU cached method to clear.
    :yields: None.
    """
    method.cache_clear()
    try:
        yield
    finally:
        method.cache_clear()


@contextlib.contextmanager
def atomic_write(file_path: Union[str, Path], mode: str = 'w') -> Iterator[IO]:
    """
    Context manager writing to a temporary sibling file that replaces the target on success.
    Readers never observe a partially written output file.

    :param file_path: Destination path.
    :param mode: File mode, 'w' or 'wb'.
    :yields: Open file handle of the temporary file.
    """
    file_path = Path(file_path).absolute()
    file_path.parent.mkdir(parents=True, exist_ok=True)
    file_descriptor, temporary_path = tempfile.mkstemp(dir=str(file_path.parent), prefix=f'.{file_path.name}.', suffix='.tmp')
    try:
        with os.fdopen(file_descriptor, mode) as handle:
            yield handle
        os.replace(temporary_path, str(file_path))
    except BaseException:
        if os.path.exists(temporary_path):
            os.remove(temporary_path)
        raise
