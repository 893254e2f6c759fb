# -------------------------------------------
# Module containing interface for draw methods.
# -------------------------------------------
from abc import ABC, abstractmethod
from typing import TypeVar
from matplotlib import pyplot as plt
from thimble_lab.utilities.custom_exceptions import InterfaceMethodException


class IDrawComponent(ABC):
    """
    Interface class, describing draw method.
    """

    # region Interface Properties
    @property
    @abstractmethod
    def group_id(self) -> str:
        """:return: Identifier of the SVG group the drawn artists belong to."""
        raise InterfaceMethodException
    # endregion

    # region Interface Methods
    @abstractmethod
    def draw(self, axes: plt.Axes) -> plt.Axes:
        """Method used for drawing component on Axes."""
        raise InterfaceMethodException
    # endregion


TDrawComponent = TypeVar('TDrawComponent', bound=IDrawComponent)
