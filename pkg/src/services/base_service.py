"""Base service class for rvclab operations."""
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from src.lab_client import RainbowLab


class BaseService:
    """
    Base class for operation services.

    All service classes should inherit from this class
    and use self._lab for settings, budgets and document validation.
    """

    def __init__(self, lab: "RainbowLab"):
        """
        Initialize the service.

        Args:
            lab: Lab client owning the settings and the schema validator
        """
        self._lab = lab
